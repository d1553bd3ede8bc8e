"""Dense statevector reference for ⟨bra|U|ket⟩, the oracle for the counting translation."""
from typing import Optional

import numpy as np

from src.classes.circuit.circuit import Circuit, GateKind
from src.utils.config import Defaults
from src.utils.exceptions import OracleCapError

_SQRT2_INV = 1 / np.sqrt(2)
_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV
_SINGLE_QUBIT_STATES = {
    "+": np.array([_SQRT2_INV, _SQRT2_INV], dtype=complex),
    "0": np.array([1, 0], dtype=complex),
    "1": np.array([0, 1], dtype=complex),
}


def _product_state(states: str) -> np.ndarray:
    vector = np.ones(1, dtype=complex)
    for state in states:
        vector = np.kron(vector, _SINGLE_QUBIT_STATES[state])
    return vector


def _apply_single_qubit(state: np.ndarray, matrix: np.ndarray, qubit: int) -> np.ndarray:
    state = np.tensordot(matrix, state, axes=([1], [qubit]))
    return np.moveaxis(state, 0, qubit)


def _on_ones(qubits, n: int):
    index = [slice(None)] * n
    for qubit in qubits:
        index[qubit] = 1
    return tuple(index)


def simulate(circuit: Circuit, ket: Optional[str] = None) -> np.ndarray:
    n = circuit.qubit_count
    ket = ket or "+" * n
    state = _product_state(ket).reshape([2] * n) if n else np.ones((), dtype=complex)
    for gate in circuit.gates:
        if gate.kind is GateKind.H:
            state = _apply_single_qubit(state, _HADAMARD, gate.qubits[0])
        elif gate.kind in (GateKind.CZ, GateKind.CKZ):
            state = state.copy()
            state[_on_ones(gate.qubits, n)] *= -1
        else:
            state = state.copy()
            state[_on_ones(gate.qubits, n)] *= np.exp(1j * gate.angle)
    return state.reshape(-1)


def statevector_amplitude(circuit: Circuit, bra: Optional[str] = None, ket: Optional[str] = None,
                          cap: int = Defaults.STATEVECTOR_CAP) -> complex:
    if circuit.qubit_count > cap:
        raise OracleCapError(f"{circuit.qubit_count} qubits exceeds the statevector cap {cap}")
    n = circuit.qubit_count
    final = simulate(circuit, ket)
    return complex(np.vdot(_product_state(bra or "+" * n), final))
