"""Independent oracles and generators shared by the test suite.

Everything here is deliberately computed by a different route than the
library under test: full matrices instead of amplitude slicing, explicit
phase formulas instead of circuits, and bit-level truth models instead of
simulated gates.
"""

from __future__ import annotations

import cmath

import numpy as np

from qadd.circuit import Circuit
from qadd.gates import CNOT, ControlledRk, GateOp, Hadamard, Rk, Toffoli, gate_matrix, op_qubits


def bit_reverse(value: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = (out << 1) | (value & 1)
        value >>= 1
    return out


def dft_reference(a: int, n: int) -> np.ndarray:
    """Expected transform of |a> under the no-swap wire convention.

    amps[v] = 2^(-n/2) * exp(2*pi*i * a * rev(v) / 2^n), where rev is the
    n-bit reversal; equivalent to the standard transform followed by the
    bit-reversal the circuit never performs.
    """
    size = 1 << n
    return np.array(
        [cmath.exp(2j * cmath.pi * a * bit_reverse(v, n) / size) for v in range(size)],
        dtype=complex,
    ) / np.sqrt(size)


def embed_unitary(op: GateOp, n: int) -> np.ndarray:
    """Full 2^n matrix of a gate, built from its local matrix by index surgery."""
    qs = op_qubits(op)
    m = len(qs)
    local = gate_matrix(op)
    full = np.zeros((1 << n, 1 << n), dtype=complex)
    for v in range(1 << n):
        local_in = 0
        for q in qs:  # first listed qubit becomes the most significant local bit
            local_in = (local_in << 1) | ((v >> q) & 1)
        base = v
        for q in qs:
            base &= ~(1 << q)
        for local_out in range(1 << m):
            w = base
            for pos, q in enumerate(qs):
                if (local_out >> (m - 1 - pos)) & 1:
                    w |= 1 << q
            full[w, v] += local[local_out, local_in]
    return full


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Matrix-product oracle for a whole circuit."""
    u = np.eye(1 << circuit.num_qubits, dtype=complex)
    for op in circuit.ops:
        u = embed_unitary(op, circuit.num_qubits) @ u
    return u


def classical_carry_action(c_in: int, a: int, b: int, c_out: int) -> tuple[int, int, int, int]:
    """Truth model of the carry network on classical bits."""
    new_b = a ^ b
    new_c_out = c_out ^ (a & b) ^ (c_in & new_b)
    return (c_in, a, new_b, new_c_out)


def classical_sum_action(c: int, a: int, b: int) -> tuple[int, int, int]:
    return (c, a, a ^ b ^ c)


def random_state_array(rng: np.random.Generator, n: int) -> np.ndarray:
    amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return amps / np.linalg.norm(amps)


def random_op(rng: np.random.Generator, n: int) -> GateOp:
    kind = rng.integers(0, 5)
    if kind == 0:
        return Hadamard(int(rng.integers(0, n)))
    if kind == 1:
        return Rk(int(rng.integers(0, n)), int(rng.integers(1, 5)), bool(rng.integers(0, 2)))
    if kind == 2 and n >= 2:
        c, t = rng.choice(n, size=2, replace=False)
        return ControlledRk(int(c), int(t), int(rng.integers(1, 5)), bool(rng.integers(0, 2)))
    if kind == 3 and n >= 2:
        c, t = rng.choice(n, size=2, replace=False)
        return CNOT(int(c), int(t))
    if n >= 3:
        c1, c2, t = rng.choice(n, size=3, replace=False)
        return Toffoli(int(c1), int(c2), int(t))
    return Hadamard(int(rng.integers(0, n)))


def random_circuit(rng: np.random.Generator, n: int, length: int) -> Circuit:
    return Circuit(
        num_qubits=n,
        ops=tuple(random_op(rng, n) for _ in range(length)),
        label=f"random[n={n},len={length}]",
    )


def random_diagonal_circuit(rng: np.random.Generator, n: int, length: int) -> Circuit:
    ops: list[GateOp] = []
    for _ in range(length):
        k = int(rng.integers(1, 5))
        if n >= 2 and rng.integers(0, 2):
            c, t = rng.choice(n, size=2, replace=False)
            ops.append(ControlledRk(int(c), int(t), k, bool(rng.integers(0, 2))))
        else:
            ops.append(Rk(int(rng.integers(0, n)), k, bool(rng.integers(0, 2))))
    return Circuit(num_qubits=n, ops=tuple(ops), label=f"random-diagonal[n={n},len={length}]")
