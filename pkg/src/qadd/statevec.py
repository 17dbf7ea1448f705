"""Dense state-vector simulation of an n-qubit register.

Basis convention is little-endian: qubit 0 is the least significant bit of
the basis index, so the integer value of a register reads directly off the
index.  States are immutable from the caller's perspective; every operation
returns a fresh vector and the backing arrays are write-protected.
"""

from __future__ import annotations

import math
import os

import numpy as np

from .errors import (
    DimensionMismatch,
    NotABasisState,
    QubitIndexError,
    RegisterTooLarge,
    ValueOutOfRange,
)
from .gates import CNOT, ControlledRk, GateOp, Hadamard, Rk, Toffoli, op_qubits, phase, rotation_phase

__all__ = [
    "StateVector",
    "apply",
    "apply_sequence",
    "basis_state",
    "inner_product",
    "max_amplitude_deviation",
    "max_qubits",
    "phase",
    "probability",
    "readout",
    "DEFAULT_ATOL",
    "HARD_QUBIT_LIMIT",
]

HARD_QUBIT_LIMIT = 24
DEFAULT_ATOL = 1e-10
_SQRT1_2 = 1.0 / math.sqrt(2.0)
_MAX_QUBITS_ENV = "QADD_MAX_QUBITS"


def max_qubits() -> int:
    """Current register size limit.

    QADD_MAX_QUBITS may lower the built-in limit of 24 qubits; it can
    never raise it.
    """
    raw = os.environ.get(_MAX_QUBITS_ENV)
    if raw is None:
        return HARD_QUBIT_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_MAX_QUBITS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{_MAX_QUBITS_ENV} must be >= 1, got {value}")
    return min(value, HARD_QUBIT_LIMIT)


class StateVector:
    """2^n complex amplitudes over n qubits."""

    __slots__ = ("_num_qubits", "_amps")

    def __init__(self, amplitudes) -> None:
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1).copy()
        n = int(amps.size).bit_length() - 1
        if amps.size < 2 or amps.size != (1 << n):
            raise ValueError(f"amplitude count must be a power of two >= 2, got {amps.size}")
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-8:
            raise ValueError(f"state is not normalized: |psi| = {norm!r}")
        self._num_qubits = n
        amps.flags.writeable = False
        self._amps = amps

    @classmethod
    def _wrap(cls, amps: np.ndarray, num_qubits: int) -> "StateVector":
        # internal fast path: amps already validated, ownership transferred
        state = object.__new__(cls)
        state._num_qubits = num_qubits
        amps.flags.writeable = False
        state._amps = amps
        return state

    @property
    def num_qubits(self) -> int:
        return self._num_qubits

    @property
    def amps(self) -> np.ndarray:
        """Read-only amplitude array, index = basis value."""
        return self._amps

    def norm(self) -> float:
        return float(np.linalg.norm(self._amps))

    def _writable_copy(self) -> np.ndarray:
        return self._amps.copy()

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self._num_qubits})"


def basis_state(num_qubits: int, value: int) -> StateVector:
    """The computational basis state |value> on ``num_qubits`` qubits."""
    if num_qubits < 1:
        raise ValueError(f"need at least one qubit, got {num_qubits}")
    limit = max_qubits()
    if num_qubits > limit:
        raise RegisterTooLarge(f"{num_qubits} qubits exceeds the limit of {limit}")
    if not 0 <= value < (1 << num_qubits):
        raise ValueOutOfRange(f"value {value} does not fit in {num_qubits} qubits")
    amps = np.zeros(1 << num_qubits, dtype=complex)
    amps[value] = 1.0
    return StateVector._wrap(amps, num_qubits)


def _axis(num_qubits: int, qubit: int) -> int:
    # C-order reshape puts the most significant bit on axis 0
    return num_qubits - 1 - qubit


def _check_qubits(op: GateOp, num_qubits: int) -> tuple[int, ...]:
    qs = op_qubits(op)
    for q in qs:
        if q >= num_qubits:
            raise QubitIndexError(f"qubit {q} out of range for {num_qubits}-qubit state: {op!r}")
    return qs


def _mult_phase(amps: np.ndarray, num_qubits: int, ones: tuple[int, ...], factor: complex) -> None:
    view = amps.reshape((2,) * num_qubits)
    index: list = [slice(None)] * num_qubits
    for q in ones:
        index[_axis(num_qubits, q)] = 1
    view[tuple(index)] *= factor


def _flip_target(amps: np.ndarray, num_qubits: int, controls: tuple[int, ...], target: int) -> None:
    view = amps.reshape((2,) * num_qubits)
    base: list = [slice(None)] * num_qubits
    for q in controls:
        base[_axis(num_qubits, q)] = 1
    i0, i1 = list(base), list(base)
    i0[_axis(num_qubits, target)] = 0
    i1[_axis(num_qubits, target)] = 1
    t0, t1 = tuple(i0), tuple(i1)
    swapped = view[t0].copy()
    view[t0] = view[t1]
    view[t1] = swapped


def _hadamard(amps: np.ndarray, num_qubits: int, target: int) -> None:
    view = amps.reshape((2,) * num_qubits)
    index: list = [slice(None)] * num_qubits
    ax = _axis(num_qubits, target)
    index[ax] = 0
    t0 = tuple(index)
    index[ax] = 1
    t1 = tuple(index)
    lo = view[t0].copy()
    hi = view[t1]
    view[t0] = (lo + hi) * _SQRT1_2
    view[t1] = (lo - hi) * _SQRT1_2


def _apply_inplace(amps: np.ndarray, num_qubits: int, op: GateOp) -> None:
    _check_qubits(op, num_qubits)
    if isinstance(op, Hadamard):
        _hadamard(amps, num_qubits, op.target)
    elif isinstance(op, Rk):
        _mult_phase(amps, num_qubits, (op.target,), rotation_phase(op))
    elif isinstance(op, ControlledRk):
        _mult_phase(amps, num_qubits, (op.control, op.target), rotation_phase(op))
    elif isinstance(op, CNOT):
        _flip_target(amps, num_qubits, (op.control,), op.target)
    elif isinstance(op, Toffoli):
        _flip_target(amps, num_qubits, (op.control1, op.control2), op.target)
    else:
        raise TypeError(f"not a gate op: {op!r}")


def apply(state: StateVector, op: GateOp) -> StateVector:
    """Apply a single gate, returning the transformed state."""
    return apply_sequence(state, (op,))


def apply_sequence(state: StateVector, ops) -> StateVector:
    """Apply gates in order, returning the final state."""
    amps = state._writable_copy()
    for op in ops:
        _apply_inplace(amps, state.num_qubits, op)
    return StateVector._wrap(amps, state.num_qubits)


def inner_product(s1: StateVector, s2: StateVector) -> complex:
    """<s1|s2>, conjugating the first argument."""
    if s1.num_qubits != s2.num_qubits:
        raise DimensionMismatch(f"{s1.num_qubits} vs {s2.num_qubits} qubits")
    return complex(np.vdot(s1.amps, s2.amps))


def probability(state: StateVector, value: int) -> float:
    """Probability of reading ``value`` from the register."""
    if not 0 <= value < (1 << state.num_qubits):
        raise ValueOutOfRange(f"value {value} does not fit in {state.num_qubits} qubits")
    return float(abs(state.amps[value]) ** 2)


def readout(state: StateVector, tol: float = 1e-9) -> int:
    """Deterministic readout of a (near-)basis state.

    Returns the index whose probability is at least 1 - tol.  There is no
    sampling; a state spread over several basis states raises
    :class:`NotABasisState`.
    """
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tol must be in (0, 1), got {tol}")
    probs = np.abs(state.amps) ** 2
    best = int(np.argmax(probs))
    if probs[best] < 1.0 - tol:
        raise NotABasisState(
            f"largest probability is {probs[best]:.6g} at index {best}; threshold {1.0 - tol:.6g}"
        )
    return best


def max_amplitude_deviation(s1: StateVector, s2: StateVector) -> float:
    """Largest per-amplitude distance between two states."""
    if s1.num_qubits != s2.num_qubits:
        raise DimensionMismatch(f"{s1.num_qubits} vs {s2.num_qubits} qubits")
    return float(np.max(np.abs(s1.amps - s2.amps)))
