"""Residual-formula state of one search node and the count-preserving rules applied to it.

Clauses are held as ``(literals, label)`` pairs of DIMACS integer literals. The value of a
state is ``scalar * Σ_x ∏ w_i^{x_i} ∏ (1 if C satisfied else label(C))`` where the sum
ranges over assignments to ``variables`` only.
"""
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable, List, Mapping, Optional, Tuple, Union

from src.classes.base.base_ring import BaseRing, RingValue
from src.classes.base.count_result import SearchStatistics
from src.classes.formula.cnf import WeightedFormula
from src.utils.exceptions import RuleNotApplicableError

ResidualClause = Tuple[Tuple[int, ...], RingValue]


@dataclass(frozen=True)
class Conflict:
    """A hard clause was falsified; the node contributes 0."""

    clause: Tuple[int, ...] = ()


@dataclass(frozen=True)
class SolverState:
    clauses: Tuple[ResidualClause, ...]
    variables: frozenset
    scalar: RingValue
    weights: Mapping[int, RingValue]
    ring: BaseRing
    trail: Tuple[int, ...] = ()
    statistics: SearchStatistics = field(default_factory=SearchStatistics, compare=False, repr=False)

    @classmethod
    def from_formula(cls, formula: WeightedFormula, ring: BaseRing,
                     statistics: Optional[SearchStatistics] = None) -> "SolverState":
        return cls(
            clauses=tuple((clause.to_dimacs(), ring.coerce(clause.label)) for clause in formula.clauses),
            variables=frozenset(range(1, formula.variable_count + 1)),
            scalar=ring.one(),
            weights={variable: ring.coerce(weight) for variable, weight in formula.weights.items()},
            ring=ring,
            statistics=statistics if statistics is not None else SearchStatistics(),
        )

    def weight(self, variable: int) -> RingValue:
        return self.weights.get(variable, 1)

    def occurrences(self) -> Counter:
        return Counter(abs(code) for literals, _ in self.clauses for code in literals)

    def with_scalar(self, scalar: RingValue) -> "SolverState":
        return replace(self, scalar=scalar)


SolveStep = Union[SolverState, Conflict]


def _simplify(clauses: Iterable[ResidualClause], true_literals: frozenset,
              scalar: RingValue) -> Tuple[Optional[List[ResidualClause]], RingValue, Tuple[int, ...]]:
    """Apply ``true_literals``; returns (None, _, clause) on a falsified hard clause."""
    kept: List[ResidualClause] = []
    for literals, label in clauses:
        if any(code in true_literals for code in literals):
            continue
        reduced = tuple(code for code in literals if -code not in true_literals)
        if not reduced:
            if label == 0:
                return None, scalar, literals
            scalar = scalar * label
            continue
        if label == 1:
            continue
        kept.append((reduced, label))
    return kept, scalar, ()


def assign(state: SolverState, literal: int) -> SolveStep:
    """Set ``literal`` true without weight bookkeeping; the caller accounts for w(v)."""
    clauses, scalar, falsified = _simplify(state.clauses, frozenset((literal,)), state.scalar)
    if clauses is None:
        return Conflict(falsified)
    return replace(
        state,
        clauses=tuple(clauses),
        variables=state.variables - {abs(literal)},
        scalar=scalar,
        trail=state.trail + (literal,),
    )


def unit_propagate(state: SolverState) -> SolveStep:
    """Propagate hard unit clauses to fixpoint, multiplying in w(i) for every x_i forced true.

    Soft unit clauses never force. A soft clause emptied by propagation folds its label into
    the scalar.
    """
    clauses = state.clauses
    scalar = state.scalar
    variables = state.variables
    trail = state.trail

    if any(not literals for literals, _ in clauses):
        reduced, scalar, falsified = _simplify(clauses, frozenset(), scalar)
        if reduced is None:
            return Conflict(falsified)
        clauses = tuple(reduced)

    while True:
        units = {literals[0] for literals, label in clauses if label == 0 and len(literals) == 1}
        if not units:
            break
        for code in units:
            if -code in units:
                return Conflict((code,))
        forced = sorted(units, key=abs)
        for code in forced:
            if code > 0:
                scalar = scalar * state.weight(code)
        state.statistics.propagations += len(forced)
        variables = variables - {abs(code) for code in forced}
        trail = trail + tuple(forced)
        reduced, scalar, falsified = _simplify(clauses, frozenset(forced), scalar)
        if reduced is None:
            return Conflict(falsified)
        clauses = tuple(reduced)

    return replace(state, clauses=clauses, variables=variables, scalar=scalar, trail=trail)


def leaf_value(state: SolverState) -> RingValue:
    """scalar · ∏ (1 + w_i) over the free variables; 2^free for unit weights."""
    if state.clauses:
        raise RuleNotApplicableError("leaf value needs a clause-free residual formula")
    value = state.scalar
    for variable in sorted(state.variables):
        value = value * (1 + state.weight(variable))
    return value


def split_components(state: SolverState) -> List[SolverState]:
    """Connected components of the variable-clause incidence graph.

    The shared scalar, times (1 + w_i) for every free variable outside all clauses, is
    carried by the first component only, so the product of component values equals the value
    of ``state``.
    """
    parent = {}

    def find(variable):
        root = variable
        while parent[root] != root:
            root = parent[root]
        while parent[variable] != root:
            parent[variable], variable = root, parent[variable]
        return root

    for literals, _ in state.clauses:
        for code in literals:
            parent.setdefault(abs(code), abs(code))
        first = find(abs(literals[0]))
        for code in literals[1:]:
            other = find(abs(code))
            if other != first:
                parent[max(first, other)] = min(first, other)
                first = min(first, other)

    scalar = state.scalar
    for variable in sorted(state.variables - parent.keys()):
        scalar = scalar * (1 + state.weight(variable))

    groups = {}
    for clause in state.clauses:
        groups.setdefault(find(abs(clause[0][0])), []).append(clause)
    members = {}
    for variable in parent:
        members.setdefault(find(variable), set()).add(variable)

    components = []
    for index, root in enumerate(sorted(groups)):
        components.append(replace(
            state,
            clauses=tuple(groups[root]),
            variables=frozenset(members[root]),
            scalar=scalar if index == 0 else state.ring.one(),
        ))
    if not components:
        components.append(replace(state, variables=frozenset(), scalar=scalar))
    return components


def eliminate_degree_one(state: SolverState, variable: int) -> SolverState:
    """Sum out a variable that occurs in exactly one clause C with label a.

    With weight w the variable contributes (1 + w) · [rest of C becomes a clause labelled a'],
    a' = (a + w)/(1 + w) for a positive occurrence and (1 + a·w)/(1 + w) for a negative one.
    """
    ring = state.ring
    if variable not in state.variables:
        raise RuleNotApplicableError(f"x{variable} is not a free variable of this node")
    hits = [index for index, (literals, _) in enumerate(state.clauses)
            if variable in literals or -variable in literals]
    if len(hits) != 1:
        raise RuleNotApplicableError(f"x{variable} occurs in {len(hits)} clauses, not exactly one")
    index = hits[0]
    literals, label = state.clauses[index]
    if sum(1 for code in literals if abs(code) == variable) != 1:
        raise RuleNotApplicableError(f"x{variable} occurs twice in its clause")
    weight = state.weight(variable)
    norm = 1 + weight
    if ring.is_zero(norm):
        raise RuleNotApplicableError(f"1 + w(x{variable}) = 0")

    if variable in literals:
        new_label = ring.divide(label + weight, norm)
    else:
        new_label = ring.divide(1 + label * weight, norm)
    rest = tuple(code for code in literals if abs(code) != variable)

    scalar = state.scalar * norm
    clauses = list(state.clauses)
    del clauses[index]
    if not rest:
        scalar = scalar * new_label
    elif new_label != 1:
        clauses.insert(index, (rest, new_label))
    state.statistics.absorptions += 1
    return replace(
        state,
        clauses=tuple(clauses),
        variables=state.variables - {variable},
        scalar=scalar,
    )


def degree_one_candidates(state: SolverState) -> List[int]:
    ring = state.ring
    return [variable for variable, count in sorted(state.occurrences().items())
            if count == 1 and not ring.is_zero(1 + state.weight(variable))]
