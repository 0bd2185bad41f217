"""Utilities for testing"""
import functools

import numpy as np

from syndromelab import specgen
from syndromelab import states


def basic_specs():
    """Small valid specs of every parity class and sign"""
    yield specgen.bell()
    yield specgen.bell(-1)
    yield specgen.psi()
    yield specgen.ghz(4)
    yield specgen.example4()
    yield states.ComplementarySpec(2, ["0000", "0111"])
    yield states.ComplementarySpec(2, ["1000"])
    yield states.ComplementarySpec(2, ["0000", "1010"])
    yield states.ComplementarySpec(3, ["000000", "010101", "111000"])


def parity_specs():
    """Specs of each parity class with a positive sign"""
    yield specgen.ghz(4)
    yield states.ComplementarySpec(2, ["1000", "0100"])
    yield specgen.example4()
    yield specgen.ghz(6)
    yield states.ComplementarySpec(3, ["100000"])
    yield states.ComplementarySpec(3, ["000000", "000001", "001011"])


def random_unitary(rng):
    """Random 2x2 unitary from three angles and a global phase"""
    theta, phi, lam, phase = rng.uniform(-np.pi, np.pi, 4)
    cos, sin = np.cos(theta / 2), np.sin(theta / 2)
    return np.exp(1j * phase) * np.array(
        [
            [cos, -np.exp(1j * lam) * sin],
            [np.exp(1j * phi) * sin, np.exp(1j * (phi + lam)) * cos],
        ]
    )


def _bit(index, qubit, num_qubits):
    return (index >> (num_qubits - 1 - qubit)) & 1


def dense_gate(gate, qubit, num_qubits):
    """Full matrix of a single qubit gate, built with explicit kronecker products"""
    return functools.reduce(
        np.kron,
        [gate if q == qubit else np.eye(2) for q in range(num_qubits)],
        np.ones((1, 1)),
    )


def dense_cnot(control, target, num_qubits):
    """Full permutation matrix of a CNOT, built entry by entry"""
    size = 2 ** num_qubits
    matrix = np.zeros((size, size))
    for index in range(size):
        if _bit(index, control, num_qubits):
            image = index ^ (1 << (num_qubits - 1 - target))
        else:
            image = index
        matrix[image, index] = 1
    return matrix
