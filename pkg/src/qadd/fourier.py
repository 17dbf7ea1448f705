"""Exact and approximate Fourier transform circuits over n qubits.

Wire convention: wire j (1-based, qubit index j-1) starts holding input
bit j and finishes holding the single-qubit state
phi_j(a) = (|0> + e(a / 2^j)|1>) / sqrt(2), where e(t) = exp(2*pi*i*t).
No terminal bit-reversal swaps are emitted; downstream consumers use the
same wire convention, so round trips stay consistent.

The approximate transform drops every controlled rotation whose order k
exceeds the cutoff.  Gate totals: the full transform uses n Hadamards and
n(n-1)/2 rotations; with cutoff c the rotation count is
sum_{j=1}^{n-1} min(j, c-1).
"""

from __future__ import annotations

import math

import numpy as np

from .circuit import Circuit, GateCounts, RegisterLayout, inverse
from .errors import InvalidRequest, ValueOutOfRange
from .gates import ControlledRk, GateOp, Hadamard
from .statevec import StateVector, phase


def auto_cutoff(n: int) -> int:
    """Default cutoff heuristic: max(1, round(log2 n))."""
    if n < 1:
        raise ValueError(f"need at least one qubit, got {n}")
    return max(1, round(math.log2(n)))


def resolve_cutoff(value: int | str | None, n: int) -> int | None:
    """Normalize a cutoff given as an int, the string "auto", or None."""
    if value is None:
        return None
    if value == "auto":
        return auto_cutoff(n)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidRequest(f"cutoff must be a positive integer or 'auto', got {value!r}")
    if value < 1:
        raise InvalidRequest(f"cutoff must be >= 1, got {value}")
    return value


def _check_cutoff(cutoff: int | None) -> None:
    if cutoff is not None and (isinstance(cutoff, bool) or not isinstance(cutoff, int) or cutoff < 1):
        raise ValueError(f"cutoff must be a positive integer or None, got {cutoff!r}")


def _phi_layout(n: int) -> RegisterLayout:
    return RegisterLayout((("phi", 0, n),))


def _label(base: str, n: int, cutoff: int | None) -> str:
    return f"{base}[n={n}]" if cutoff is None else f"{base}[n={n},cutoff={cutoff}]"


def build_qft(n: int, cutoff: int | None = None) -> Circuit:
    """Fourier transform circuit on n qubits, optionally truncated.

    Wires are processed from most to least significant: a Hadamard, then
    controlled rotations of order k = 2, 3, ... picking up each lower wire
    in turn, skipping orders above the cutoff.
    """
    if n < 1:
        raise ValueError(f"need at least one qubit, got {n}")
    _check_cutoff(cutoff)
    ops: list[GateOp] = []
    for j in range(n, 0, -1):
        ops.append(Hadamard(j - 1))
        for k in range(2, j + 1):
            if cutoff is not None and k > cutoff:
                break
            ops.append(ControlledRk(control=j - k, target=j - 1, k=k))
    return Circuit(num_qubits=n, ops=tuple(ops), layout=_phi_layout(n), label=_label("qft", n, cutoff))


def build_inverse_qft(n: int, cutoff: int | None = None) -> Circuit:
    """Inverse of :func:`build_qft` with the same truncation."""
    inv = inverse(build_qft(n, cutoff))
    return Circuit(
        num_qubits=inv.num_qubits,
        ops=inv.ops,
        layout=_phi_layout(n),
        label=_label("iqft", n, cutoff),
    )


def phi_product_state(a: int, n: int) -> StateVector:
    """Product-state form of the transform of |a>, built without gates.

    Wire j carries phi_j(a) = (|0> + e(a / 2^j)|1>) / sqrt(2), matching
    the circuit's output convention exactly.
    """
    if n < 1:
        raise ValueError(f"need at least one qubit, got {n}")
    if not 0 <= a < (1 << n):
        raise ValueOutOfRange(f"a = {a} does not fit in {n} bits")
    amps = np.ones(1, dtype=complex)
    for q in range(n - 1, -1, -1):
        factor = np.array([1.0, phase(a / (1 << (q + 1)))], dtype=complex) / math.sqrt(2.0)
        amps = np.kron(amps, factor)
    return StateVector(amps)


def qft_counts(n: int, cutoff: int | None = None) -> GateCounts:
    """Closed-form gate tallies for :func:`build_qft` without building it."""
    if n < 1:
        raise ValueError(f"need at least one qubit, got {n}")
    _check_cutoff(cutoff)
    per_wire_cap = n if cutoff is None else cutoff - 1
    rotations = sum(min(j, per_wire_cap) for j in range(1, n))
    return GateCounts(
        hadamards=n,
        rotations=rotations,
        cnots=0,
        toffolis=0,
        total=n + rotations,
        qubits=n,
    )
