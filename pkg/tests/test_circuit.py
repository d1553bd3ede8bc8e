import cmath
import math

import pytest

from src.classes.circuit.circuit import Circuit, Gate, GateKind, parse_circuit, serialize_circuit
from src.classes.circuit.statevector import simulate, statevector_amplitude
from src.classes.circuit.translation import (
    amplitude,
    circuit_clause_budget,
    circuit_to_weighted_2sat,
    translate_circuit,
)
from src.utils.exceptions import CircuitParseError, InvalidCircuitError, OracleCapError
from src.utils.generators import random_circuit

SQRT_HALF = 1 / math.sqrt(2)


def test_single_hadamard_translation():
    formula, scalar = circuit_to_weighted_2sat(Circuit(1, (Gate.h(0),)))
    assert formula.variable_count == 3
    assert formula.clause_count == 2
    assert formula.max_width == 2
    assert dict(formula.weights) == {3: -2}
    assert scalar == pytest.approx(2 ** -1.5)


def test_empty_circuit_scalar():
    translation = translate_circuit(Circuit(3))
    assert translation.formula.clause_count == 0
    assert translation.scalar.value == pytest.approx(2 ** -3)
    assert amplitude(Circuit(3)) == pytest.approx(1)


def test_ccz_adds_three_clauses():
    circuit = Circuit(3, (Gate.ckz(0, 1, 2),))
    assert translate_circuit(circuit).formula.clause_count == 3
    assert circuit_clause_budget(circuit) == 3


def test_rz_adds_no_clause_and_weights_the_segment():
    translation = translate_circuit(Circuit(1, (Gate.rz(0, 0.3),)))
    assert translation.formula.clause_count == 0
    assert translation.formula.weight(1) == pytest.approx(cmath.exp(0.3j))


@pytest.mark.parametrize("circuit, expected", [
    (Circuit(1, (Gate.h(0),)), SQRT_HALF),
    (Circuit(2, (Gate.cz(0, 1),)), 0.5),
    (Circuit(1, (Gate.h(0), Gate.h(0))), 1),
    (Circuit(1, (Gate.rz(0, 0.7),)), (1 + cmath.exp(0.7j)) / 2),
    (Circuit(3, (Gate.ckz(0, 1, 2),)), 0.75),
])
def test_known_amplitudes(circuit, expected):
    assert amplitude(circuit) == pytest.approx(expected, abs=1e-12)
    assert statevector_amplitude(circuit) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("bra, ket, expected", [
    ("0", "0", SQRT_HALF),
    ("1", "0", SQRT_HALF),
    ("1", "1", -SQRT_HALF),
    ("+", "0", 1),
])
def test_basis_boundaries(bra, ket, expected):
    circuit = Circuit(1, (Gate.h(0),))
    assert amplitude(circuit, bra, ket) == pytest.approx(expected, abs=1e-12)
    assert statevector_amplitude(circuit, bra, ket) == pytest.approx(expected, abs=1e-12)


def test_bad_boundary_is_rejected():
    with pytest.raises(InvalidCircuitError):
        translate_circuit(Circuit(2), bra="+")
    with pytest.raises(InvalidCircuitError):
        translate_circuit(Circuit(1), ket="x")


def test_random_circuits_match_statevector(rng):
    for _ in range(40):
        circuit = random_circuit(rng, rng.randint(1, 6), rng.randint(0, 20))
        expected = statevector_amplitude(circuit)
        assert abs(amplitude(circuit) - expected) <= 1e-9 * max(1.0, abs(expected))
        kinds = circuit.kind_counts()
        clauses = translate_circuit(circuit).formula.clause_count
        assert clauses == 2 * (kinds[GateKind.H] + kinds[GateKind.CZ]) + 3 * kinds[GateKind.CKZ]
        assert clauses == circuit_clause_budget(circuit)


def test_random_circuits_with_basis_boundaries(rng):
    for _ in range(20):
        n = rng.randint(1, 5)
        circuit = random_circuit(rng, n, rng.randint(0, 15))
        bra = "".join(rng.choice("+01") for _ in range(n))
        ket = "".join(rng.choice("+01") for _ in range(n))
        assert amplitude(circuit, bra, ket) == pytest.approx(statevector_amplitude(circuit, bra, ket), abs=1e-9)


def test_statevector_is_normalised(rng):
    circuit = random_circuit(rng, 4, 12)
    assert sum(abs(amp) ** 2 for amp in simulate(circuit)) == pytest.approx(1)


def test_statevector_cap():
    with pytest.raises(OracleCapError):
        statevector_amplitude(Circuit(3), cap=2)


def test_parse_circuit():
    circuit = parse_circuit("qubits 3\nh 0  # first\ncz 0 1\nrz 0 1.5707963268\nckz 0 1 2\n")
    assert circuit.qubit_count == 3
    assert [gate.kind for gate in circuit.gates] == [GateKind.H, GateKind.CZ, GateKind.RZ, GateKind.CKZ]
    assert circuit.gates[2].angle == pytest.approx(math.pi / 2)
    assert circuit.max_controls == 2
    assert parse_circuit(serialize_circuit(circuit)) == circuit


@pytest.mark.parametrize("text, line", [
    ("qubits 2\nh 0\nx 1\n", 3),
    ("qubits 2\ncz 0 2\n", 2),
    ("qubits 1\nrz 0 abc\n", 2),
    ("qubits 1\nrz 0 nan\n", 2),
    ("h 0\n", 1),
    ("qubits 2\ncz 1 1\n", 2),
    ("qubits 2\nqubits 3\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(CircuitParseError) as error:
        parse_circuit(text)
    assert error.value.line == line


def test_gate_validation():
    with pytest.raises(InvalidCircuitError):
        Gate.cz(0, 0)
    with pytest.raises(InvalidCircuitError):
        Gate(GateKind.CKZ, (0,))
    with pytest.raises(InvalidCircuitError):
        Circuit(1, (Gate.cz(0, 1),))
