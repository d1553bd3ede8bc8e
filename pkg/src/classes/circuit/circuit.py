# Circuits over {H, CZ, C^kZ, Rz(α)} and their line format:
#   qubits <n>
#   h <q> | cz <q1> <q2> | ckz <q0> ... <qk> | rz <q> <alpha-radians>
# with '#' starting a comment.
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from src.utils.exceptions import CircuitParseError, InvalidCircuitError


class GateKind(Enum):
    H = "h"
    CZ = "cz"
    CKZ = "ckz"
    RZ = "rz"


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: Tuple[int, ...]
    angle: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(self.qubits))
        arity = len(self.qubits)
        if self.kind in (GateKind.H, GateKind.RZ) and arity != 1:
            raise InvalidCircuitError(f"{self.kind.value} acts on one qubit, got {arity}")
        if self.kind is GateKind.CZ and arity != 2:
            raise InvalidCircuitError(f"cz acts on two qubits, got {arity}")
        if self.kind is GateKind.CKZ and arity < 2:
            raise InvalidCircuitError(f"ckz needs at least two qubits, got {arity}")
        if len(set(self.qubits)) != arity:
            raise InvalidCircuitError(f"repeated qubit in {self.kind.value} {self.qubits}")
        if any(qubit < 0 for qubit in self.qubits):
            raise InvalidCircuitError(f"negative qubit index in {self.kind.value} {self.qubits}")
        if self.kind is GateKind.RZ:
            if self.angle is None or not math.isfinite(self.angle):
                raise InvalidCircuitError(f"rz needs a finite angle, got {self.angle!r}")
        elif self.angle is not None:
            raise InvalidCircuitError(f"{self.kind.value} takes no angle")

    @classmethod
    def h(cls, qubit: int) -> "Gate":
        return cls(GateKind.H, (qubit,))

    @classmethod
    def cz(cls, first: int, second: int) -> "Gate":
        return cls(GateKind.CZ, (first, second))

    @classmethod
    def ckz(cls, *qubits: int) -> "Gate":
        return cls(GateKind.CKZ, qubits)

    @classmethod
    def rz(cls, qubit: int, angle: float) -> "Gate":
        return cls(GateKind.RZ, (qubit,), float(angle))

    @property
    def controls(self) -> int:
        """k of a C^kZ gate (1 for CZ)."""
        return len(self.qubits) - 1

    def to_line(self) -> str:
        qubits = " ".join(str(qubit) for qubit in self.qubits)
        if self.kind is GateKind.RZ:
            return f"{self.kind.value} {qubits} {self.angle!r}"
        return f"{self.kind.value} {qubits}"


@dataclass(frozen=True)
class Circuit:
    qubit_count: int
    gates: Tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.qubit_count < 0:
            raise InvalidCircuitError(f"qubit count must be >= 0, got {self.qubit_count}")
        for position, gate in enumerate(self.gates, start=1):
            for qubit in gate.qubits:
                if qubit >= self.qubit_count:
                    raise InvalidCircuitError(
                        f"gate {position} ({gate.to_line()}) uses qubit {qubit} of {self.qubit_count}"
                    )

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    def kind_counts(self) -> Counter:
        return Counter(gate.kind for gate in self.gates)

    @property
    def max_controls(self) -> int:
        return max((gate.controls for gate in self.gates if gate.kind in (GateKind.CZ, GateKind.CKZ)), default=0)


def parse_circuit(text: str) -> Circuit:
    qubit_count = None
    gates = []
    kinds = {kind.value: kind for kind in GateKind}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0].lower()
        if keyword == "qubits":
            if qubit_count is not None:
                raise CircuitParseError("Second 'qubits' line", line_number)
            if len(tokens) != 2:
                raise CircuitParseError("Expected 'qubits <n>'", line_number)
            try:
                qubit_count = int(tokens[1])
            except ValueError:
                raise CircuitParseError(f"Bad qubit count '{tokens[1]}'", line_number)
            if qubit_count < 0:
                raise CircuitParseError("Negative qubit count", line_number)
            continue
        if keyword not in kinds:
            raise CircuitParseError(f"Unknown gate '{tokens[0]}'", line_number)
        if qubit_count is None:
            raise CircuitParseError("Gate before 'qubits <n>' line", line_number)
        kind = kinds[keyword]
        operands = tokens[1:]
        angle = None
        if kind is GateKind.RZ:
            if len(operands) != 2:
                raise CircuitParseError("Expected 'rz <q> <alpha>'", line_number)
            try:
                angle = float(operands[1])
            except ValueError:
                raise CircuitParseError(f"Malformed angle '{operands[1]}'", line_number)
            if not math.isfinite(angle):
                raise CircuitParseError(f"Malformed angle '{operands[1]}'", line_number)
            operands = operands[:1]
        try:
            qubits = tuple(int(token) for token in operands)
        except ValueError:
            raise CircuitParseError(f"Bad qubit index in '{line}'", line_number)
        for qubit in qubits:
            if not 0 <= qubit < qubit_count:
                raise CircuitParseError(f"Qubit index {qubit} out of range (qubits {qubit_count})", line_number)
        try:
            gates.append(Gate(kind, qubits, angle))
        except InvalidCircuitError as ex:
            raise CircuitParseError(ex.value, line_number)

    if qubit_count is None:
        raise CircuitParseError("Missing 'qubits <n>' line")
    return Circuit(qubit_count, tuple(gates))


def serialize_circuit(circuit: Circuit) -> str:
    lines = [f"qubits {circuit.qubit_count}"]
    lines.extend(gate.to_line() for gate in circuit.gates)
    return "\n".join(lines) + "\n"
