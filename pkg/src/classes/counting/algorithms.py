from typing import Callable, Dict, Optional

from src.classes.base.base_ring import RingValue
from src.classes.base.count_result import CountResult
from src.classes.counting.engine import CountingEngine
from src.classes.counting.solver_state import SolverState
from src.classes.counting.strategy import BranchStrategy
from src.classes.formula.cnf import Clause, Literal, WeightedFormula, normalize
from src.classes.reduction.two_sat_reduction import reduce_to_2sat_pm
from src.utils.config import Defaults
from src.utils.exceptions import BudgetExceededError, WeightedInputError, WrongAlgorithmError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _require_plain(formula: WeightedFormula, algorithm: str) -> None:
    if not formula.is_plain:
        raise WeightedInputError(f"{algorithm} counts plain #SAT instances; use the weighted algorithm")


def _engine(**options) -> CountingEngine:
    strategy = options.get("strategy", Defaults.DEFAULT_STRATEGY)
    if isinstance(strategy, str):
        strategy = BranchStrategy.from_name(strategy)
    return CountingEngine(
        strategy=strategy,
        components=options.get("components", Defaults.COMPONENTS),
        absorb=options.get("absorb", Defaults.ABSORB),
        node_cap=options.get("node_cap", Defaults.NODE_CAP),
    )


def cdp(formula: WeightedFormula, **options) -> CountResult:
    """Counting Davis-Putnam on a plain instance."""
    _require_plain(formula, "cdp")
    engine = _engine(**options)
    engine.algorithm = "cdp"
    return engine.count(formula)


def cdp_weighted(formula: WeightedFormula, **options) -> CountResult:
    """Weighted count Σ_x ∏ w_i^{x_i} f(x); the signed count is the weights-in-{±1} case."""
    return _engine(**options).count(formula)


def cdp_to2(formula: WeightedFormula, **options) -> CountResult:
    """Reduce to signed #2SAT, then count the reduced instance."""
    _require_plain(formula, "cdp2")
    reduced, reduction = reduce_to_2sat_pm(formula)
    logger.debug("cdp2: %d fresh variables", len(reduction.fresh_variables))
    engine = _engine(**options)
    engine.algorithm = "cdp2"
    return engine.count(reduced)


class ThreeToTwoEngine(CountingEngine):
    """Branch on maximal 3-degree while δ3 = m3 / n > 2/3, then hand the node to cdp2.

    δ3 is measured against the residual free variables of the node.
    """

    algorithm = "cdp3to2"

    def __init__(self, **options):
        super().__init__(
            strategy=BranchStrategy.MAX_THREE_DEGREE,
            components=False,
            absorb=False,
            node_cap=options.get("node_cap", Defaults.NODE_CAP),
        )
        self.inner_options = dict(options)
        self.handoffs = 0

    def resolve(self, state: SolverState, depth: int) -> Optional[RingValue]:
        wide = sum(1 for literals, _ in state.clauses if len(literals) >= 3)
        if 3 * wide > 2 * len(state.variables):
            return None
        self.handoffs += 1
        statistics = state.statistics
        remaining = self.node_cap - statistics.branch_nodes
        if remaining <= 0:
            raise BudgetExceededError(f"more than {self.node_cap} branch nodes", nodes=statistics.branch_nodes)
        options = dict(self.inner_options, node_cap=remaining)
        result = cdp_to2(residual_formula(state), **options)
        statistics.merge(result.statistics, depth_offset=depth)
        return state.scalar * result.count


def residual_formula(state: SolverState) -> WeightedFormula:
    """The node's residual clauses as a standalone formula over its free variables, renumbered densely."""
    numbering = {variable: index for index, variable in enumerate(sorted(state.variables), start=1)}
    clauses = tuple(
        Clause(tuple(Literal(numbering[abs(code)], code < 0) for code in literals), label)
        for literals, label in state.clauses
    )
    weights = {numbering[variable]: weight for variable, weight in state.weights.items()
               if variable in numbering}
    return WeightedFormula(len(numbering), clauses, weights)


def cdp_3to2(formula: WeightedFormula, **options) -> CountResult:
    """#3SAT: lower the 3-clause density to 2/3 by branching, then finish with cdp2."""
    _require_plain(formula, "cdp3to2")
    formula = normalize(formula)
    if formula.max_width > 3:
        raise WrongAlgorithmError(f"cdp3to2 needs clause width <= 3, got {formula.max_width}")
    engine = ThreeToTwoEngine(**options)
    result = engine.count(formula)
    logger.debug("cdp3to2: %d hand-offs to cdp2", engine.handoffs)
    return result


ALGORITHMS: Dict[str, Callable[..., CountResult]] = {
    "cdp": cdp,
    "weighted": cdp_weighted,
    "cdp2": cdp_to2,
    "cdp3to2": cdp_3to2,
}


def count(formula: WeightedFormula, algorithm: str = "weighted", **options) -> CountResult:
    try:
        counter = ALGORITHMS[algorithm]
    except KeyError:
        raise WrongAlgorithmError(f"unknown algorithm '{algorithm}'; choose from {', '.join(ALGORITHMS)}")
    return counter(formula, **options)
