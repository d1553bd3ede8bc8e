from typing import List, Optional, Sequence, Tuple

from src.classes.base.base_counter import BaseCounter
from src.classes.base.base_ring import RingValue
from src.classes.base.count_result import CountResult, SearchStatistics
from src.classes.counting.solver_state import (
    Conflict,
    SolveStep,
    SolverState,
    assign,
    degree_one_candidates,
    eliminate_degree_one,
    leaf_value,
    split_components,
    unit_propagate,
)
from src.classes.counting.strategy import BranchStrategy
from src.classes.formula.cnf import WeightedFormula, normalize
from src.classes.ring.ring_selection import select_ring
from src.utils.config import Defaults
from src.utils.exceptions import BudgetExceededError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class _Frame:
    """Pending combination of child values.

    A sum frame returns ``factor · Σ coefficient_j · value_j`` (branching), a product frame
    ``factor · ∏ value_j`` (components).
    """

    __slots__ = ("parent", "slot", "factor", "coefficients", "values", "pending", "result")

    def __init__(self, parent, slot, factor, size, coefficients=None):
        self.parent = parent
        self.slot = slot
        self.factor = factor
        self.coefficients = coefficients
        self.values = [None] * size
        self.pending = size
        self.result = None

    def combine(self) -> RingValue:
        if self.coefficients is None:
            value = self.factor
            for child in self.values:
                value = value * child
            return value
        total = 0
        for coefficient, child in zip(self.coefficients, self.values):
            total = total + coefficient * child
        return self.factor * total


class CountingEngine(BaseCounter):
    """Branch-and-count over the residual formula with an explicit stack.

    Each node: unit propagation (plus degree-one absorption when enabled), then a conflict
    yields 0, an empty residual yields the leaf value, a disconnected residual is split into
    components that multiply, and otherwise the node branches on a variable v as
    count(f ∧ ¬v) + w(v) · count(f ∧ v).
    """

    algorithm = "weighted"

    def __init__(
        self,
        strategy: BranchStrategy = BranchStrategy.from_name(Defaults.DEFAULT_STRATEGY),
        components: bool = Defaults.COMPONENTS,
        absorb: bool = Defaults.ABSORB,
        node_cap: int = Defaults.NODE_CAP,
    ):
        if node_cap <= 0:
            raise ValueError("node cap must be positive")
        self.strategy = strategy
        self.components = components
        self.absorb = absorb
        self.node_cap = node_cap

    def count(self, formula: WeightedFormula) -> CountResult:
        formula = normalize(formula)
        ring = select_ring(formula)
        if self.absorb and ring.name != "exact":
            logger.warning("absorbing in the %s ring; labels are divided in floating point", ring.name)
        statistics = SearchStatistics()
        state = SolverState.from_formula(formula, ring, statistics)
        value = ring.coerce(self.solve(state))
        logger.info("%s: n=%d m=%d count=%s nodes=%d", self.algorithm, formula.variable_count,
                    formula.clause_count, ring.format(value), statistics.branch_nodes)
        return CountResult(value, ring, self.algorithm, statistics)

    def solve(self, root: SolverState) -> RingValue:
        statistics = root.statistics
        top = _Frame(None, 0, 1, 1, coefficients=(1,))
        stack: List[Tuple[SolveStep, _Frame, int, int]] = [(root, top, 0, 0)]
        while stack:
            state, frame, slot, depth = stack.pop()
            if depth > statistics.max_depth:
                statistics.max_depth = depth
            value, children = self._expand(state, depth)
            if children is None:
                self._deliver(frame, slot, value)
                continue
            child_frame, child_states, child_depth = children
            child_frame.parent, child_frame.slot = frame, slot
            for index in reversed(range(len(child_states))):
                stack.append((child_states[index], child_frame, index, child_depth))
        return top.result

    @staticmethod
    def _deliver(frame: _Frame, slot: int, value: RingValue) -> None:
        while True:
            frame.values[slot] = value
            frame.pending -= 1
            if frame.pending:
                return
            value = frame.combine()
            if frame.parent is None:
                frame.result = value
                return
            frame, slot = frame.parent, frame.slot

    def simplify(self, state: SolverState) -> SolveStep:
        step = unit_propagate(state)
        while self.absorb and not isinstance(step, Conflict):
            candidates = degree_one_candidates(step)
            if not candidates:
                break
            logger.debug("absorbing x%d", candidates[0])
            step = unit_propagate(eliminate_degree_one(step, candidates[0]))
        return step

    def resolve(self, state: SolverState, depth: int) -> Optional[RingValue]:
        """Hook for subclasses that finish a node without branching."""
        return None

    def pick(self, state: SolverState) -> int:
        return self.strategy.pick(state)

    def _expand(self, state: SolveStep, depth: int):
        if isinstance(state, Conflict):
            return 0, None
        step = self.simplify(state)
        if isinstance(step, Conflict):
            return 0, None
        state = step
        if state.scalar == 0:
            return 0, None
        if not state.clauses:
            return leaf_value(state), None
        resolved = self.resolve(state, depth)
        if resolved is not None:
            return resolved, None

        if self.components:
            parts = split_components(state)
            if len(parts) > 1:
                state.statistics.components += len(parts)
                logger.debug("depth %d: %d components", depth, len(parts))
                return None, (_Frame(None, 0, 1, len(parts)), parts, depth)
            state = parts[0]

        variable = self.pick(state)
        statistics = state.statistics
        statistics.branch_nodes += 1
        if statistics.branch_nodes > self.node_cap:
            raise BudgetExceededError(
                f"more than {self.node_cap} branch nodes", nodes=statistics.branch_nodes
            )
        base = state.with_scalar(state.ring.one())
        children: Sequence[SolveStep] = (assign(base, -variable), assign(base, variable))
        frame = _Frame(None, 0, state.scalar, 2, coefficients=(1, state.weight(variable)))
        return None, (frame, children, depth + 1)
