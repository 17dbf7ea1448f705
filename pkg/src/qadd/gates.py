"""Gate vocabulary: Hadamard, dyadic phase rotations, CNOT, Toffoli.

Rotations are restricted to dyadic orders: a rotation of order k multiplies
the relevant |1...1> component by e^(2*pi*i / 2^k) (or its conjugate when
the ``inverted`` flag is set).  The composite carry and sum networks of the
classical-style adder are provided as gate sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from .errors import QubitIndexError

_TWO_PI = 2.0 * math.pi


def phase(t: float) -> complex:
    """Return e^(2*pi*i*t) as a complex number.

    Re-exported as ``qadd.statevec.phase``; all circuit phases in this
    package are expressed in turns, not radians.
    """
    return complex(math.cos(_TWO_PI * t), math.sin(_TWO_PI * t))


def _check_distinct(*qubits: int) -> None:
    for q in qubits:
        if q < 0:
            raise QubitIndexError(f"negative qubit index {q}")
    if len(set(qubits)) != len(qubits):
        raise QubitIndexError(f"duplicate qubit indices {qubits}")


@dataclass(frozen=True)
class Hadamard:
    target: int

    def __post_init__(self) -> None:
        _check_distinct(self.target)


@dataclass(frozen=True)
class Rk:
    """Unconditional rotation of order k on a single qubit."""

    target: int
    k: int
    inverted: bool = False

    def __post_init__(self) -> None:
        _check_distinct(self.target)
        if self.k < 1:
            raise ValueError(f"rotation order k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class ControlledRk:
    """Rotation of order k applied when both control and target are 1."""

    control: int
    target: int
    k: int
    inverted: bool = False

    def __post_init__(self) -> None:
        _check_distinct(self.control, self.target)
        if self.k < 1:
            raise ValueError(f"rotation order k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class CNOT:
    control: int
    target: int

    def __post_init__(self) -> None:
        _check_distinct(self.control, self.target)


@dataclass(frozen=True)
class Toffoli:
    control1: int
    control2: int
    target: int

    def __post_init__(self) -> None:
        _check_distinct(self.control1, self.control2, self.target)


GateOp = Union[Hadamard, Rk, ControlledRk, CNOT, Toffoli]


def op_qubits(op: GateOp) -> tuple[int, ...]:
    """Qubits touched by an op, controls first, target last."""
    if isinstance(op, Hadamard):
        return (op.target,)
    if isinstance(op, Rk):
        return (op.target,)
    if isinstance(op, ControlledRk):
        return (op.control, op.target)
    if isinstance(op, CNOT):
        return (op.control, op.target)
    if isinstance(op, Toffoli):
        return (op.control1, op.control2, op.target)
    raise TypeError(f"not a gate op: {op!r}")


def inverse_op(op: GateOp) -> GateOp:
    """Inverse of a single gate; rotations flip their ``inverted`` flag."""
    if isinstance(op, (Rk, ControlledRk)):
        return replace(op, inverted=not op.inverted)
    op_qubits(op)  # rejects non-gates
    return op  # Hadamard, CNOT, Toffoli are self-inverse


def is_diagonal(op: GateOp) -> bool:
    """True for gates diagonal in the computational basis."""
    return isinstance(op, (Rk, ControlledRk))


def rotation_order(op: GateOp) -> int:
    if not is_diagonal(op):
        raise ValueError(f"gate has no rotation order: {op!r}")
    return op.k


def rotation_phase(op: GateOp) -> complex:
    """The phase factor a rotation applies to its all-ones component."""
    t = 1.0 / (1 << rotation_order(op))
    return phase(-t if op.inverted else t)


def gate_matrix(op: GateOp) -> np.ndarray:
    """Unitary matrix of an op in its local qubit ordering.

    The first qubit returned by :func:`op_qubits` is the most significant
    bit of the local index, so CNOT maps |10> to |11>.
    """
    if isinstance(op, Hadamard):
        return np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2.0)
    if isinstance(op, Rk):
        return np.diag([1.0 + 0.0j, rotation_phase(op)])
    if isinstance(op, ControlledRk):
        return np.diag([1.0 + 0.0j, 1.0, 1.0, rotation_phase(op)])
    if isinstance(op, CNOT):
        m = np.eye(4, dtype=complex)
        m[[2, 3]] = m[[3, 2]]
        return m
    if isinstance(op, Toffoli):
        m = np.eye(8, dtype=complex)
        m[[6, 7]] = m[[7, 6]]
        return m
    raise TypeError(f"not a gate op: {op!r}")


def carry_ops(c_in: int, a: int, b: int, c_out: int, reverse: bool = False) -> list[GateOp]:
    """Carry network on four wires.

    Forward action on basis bits: b <- a xor b, then
    c_out <- c_out xor (a and b) xor (c_in and (a xor b)), which deposits
    the carry of a + b + c_in when c_out starts at zero.  ``reverse``
    returns the same self-inverse gates in reverse order.
    """
    _check_distinct(c_in, a, b, c_out)
    ops: list[GateOp] = [
        Toffoli(a, b, c_out),
        CNOT(a, b),
        Toffoli(c_in, b, c_out),
    ]
    return ops[::-1] if reverse else ops


def sum_ops(c: int, a: int, b: int) -> list[GateOp]:
    """Sum network on three wires: b <- a xor b xor c."""
    _check_distinct(c, a, b)
    return [CNOT(a, b), CNOT(c, b)]
