"""⟨bra|U|ket⟩ for {H, CZ, C^kZ, Rz} circuits as a weighted 2-SAT count.

Each wire segment between Hadamards is one variable. A CZ-type gate on segments s_1..s_r
adds a gadget variable y of weight -2 with clauses (s_j ∨ ¬y): summing y out gives
1 - 2·[s_1 ∧ ... ∧ s_r] = (-1)^{s_1···s_r}. A Hadamard is the same gadget between the old and
the new segment of its wire, times 2^{-1/2}. Rz(α) = diag(1, e^{iα}) multiplies the weight of
the current segment by e^{iα}.
"""
import cmath
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.classes.base.base_ring import RingValue
from src.classes.circuit.circuit import Circuit, GateKind
from src.classes.counting.algorithms import cdp_weighted
from src.classes.formula.cnf import Clause, Literal, WeightedFormula
from src.utils.exceptions import InvalidCircuitError
from src.utils.logger import get_logger

logger = get_logger(__name__)

GADGET_WEIGHT = -2
BOUNDARY_STATES = "+01"


@dataclass
class SegmentTable:
    qubit_count: int
    current: List[int] = field(default_factory=list)
    allocated: int = 0

    def __post_init__(self):
        for _ in range(self.qubit_count):
            self.current.append(self.fresh())

    def fresh(self) -> int:
        self.allocated += 1
        return self.allocated

    def advance(self, qubit: int) -> Tuple[int, int]:
        """Open a new segment on ``qubit``; returns (old, new)."""
        old, new = self.current[qubit], self.fresh()
        self.current[qubit] = new
        return old, new


@dataclass(frozen=True)
class CircuitScalar:
    """2^{half_powers/2}, kept as an exponent until the end."""

    half_powers: int = 0

    def times_sqrt2(self, count: int) -> "CircuitScalar":
        return CircuitScalar(self.half_powers + count)

    @property
    def value(self) -> float:
        whole, odd = divmod(self.half_powers, 2)
        return math.ldexp(math.sqrt(2.0) if odd else 1.0, whole)


@dataclass(frozen=True)
class CircuitTranslation:
    formula: WeightedFormula
    scalar: CircuitScalar


def _boundary(states: Optional[str], qubit_count: int, side: str) -> str:
    if states is None:
        return "+" * qubit_count
    if len(states) != qubit_count or any(state not in BOUNDARY_STATES for state in states):
        raise InvalidCircuitError(
            f"{side} boundary must be {qubit_count} characters from '{BOUNDARY_STATES}', got '{states}'"
        )
    return states


def _pin(clauses: List[Clause], variable: int, state: str) -> int:
    """Boundary on one segment; returns the √2 exponent it contributes."""
    if state == "+":
        return -1
    clauses.append(Clause((Literal(variable, negated=(state == "0")),)))
    return 0


def translate_circuit(circuit: Circuit, bra: Optional[str] = None, ket: Optional[str] = None) -> CircuitTranslation:
    bra = _boundary(bra, circuit.qubit_count, "bra")
    ket = _boundary(ket, circuit.qubit_count, "ket")
    segments = SegmentTable(circuit.qubit_count)
    weights: Dict[int, RingValue] = {}
    clauses: List[Clause] = []
    scalar = CircuitScalar()

    for qubit, state in enumerate(ket):
        scalar = scalar.times_sqrt2(_pin(clauses, segments.current[qubit], state))

    def gadget(wires):
        y = segments.fresh()
        weights[y] = GADGET_WEIGHT
        not_y = Literal(y, negated=True)
        for wire in wires:
            clauses.append(Clause((Literal(wire), not_y)))

    for gate in circuit.gates:
        if gate.kind is GateKind.H:
            old, new = segments.advance(gate.qubits[0])
            gadget((old, new))
            scalar = scalar.times_sqrt2(-1)
        elif gate.kind in (GateKind.CZ, GateKind.CKZ):
            gadget(tuple(segments.current[qubit] for qubit in gate.qubits))
        else:
            wire = segments.current[gate.qubits[0]]
            weights[wire] = weights.get(wire, 1) * cmath.exp(1j * gate.angle)

    for qubit, state in enumerate(bra):
        scalar = scalar.times_sqrt2(_pin(clauses, segments.current[qubit], state))

    formula = WeightedFormula(segments.allocated, tuple(clauses), weights)
    logger.debug("circuit n=%d G=%d -> variables=%d clauses=%d", circuit.qubit_count,
                 circuit.gate_count, formula.variable_count, formula.clause_count)
    return CircuitTranslation(formula, scalar)


def circuit_to_weighted_2sat(circuit: Circuit, bra: Optional[str] = None,
                             ket: Optional[str] = None) -> Tuple[WeightedFormula, complex]:
    translation = translate_circuit(circuit, bra, ket)
    return translation.formula, complex(translation.scalar.value)


def circuit_clause_budget(circuit: Circuit) -> int:
    """Clauses the gate list contributes: 2 per H or CZ, k + 1 per C^kZ, none per Rz."""
    counts = 0
    for gate in circuit.gates:
        if gate.kind is GateKind.H:
            counts += 2
        elif gate.kind in (GateKind.CZ, GateKind.CKZ):
            counts += gate.controls + 1
    return counts


def amplitude(circuit: Circuit, bra: Optional[str] = None, ket: Optional[str] = None, **options) -> complex:
    translation = translate_circuit(circuit, bra, ket)
    result = cdp_weighted(translation.formula, **options)
    return complex(result.count) * translation.scalar.value
