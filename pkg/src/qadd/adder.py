"""Addition in the Fourier basis: evolve the transform of a into that of a+b.

Both adder forms emit only diagonal rotations, so all of their gates
commute with one another.  The constant form bakes a classical addend into
unconditional rotations on the phi register; the two-register form
conditions each rotation on a qubit of a second register holding b, which
passes through unchanged.  Addition is modular: the pipeline
(transform, rotate, inverse transform) maps |a> to |(a+b) mod 2^n> exactly
when no cutoff is applied.

Per phi wire j, the addend bit b_i (i <= j) contributes a rotation of
order k = j - i + 1; the accumulated phase on the wire's |1> component is
the binary fraction 0.b_j ... b_1 of a turn.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .circuit import Circuit, RegisterLayout
from .errors import ValueOutOfRange
from .fourier import _check_cutoff, build_inverse_qft, build_qft
from .gates import ControlledRk, GateOp, Rk
from .statevec import StateVector, basis_state, readout


class AddMode(enum.Enum):
    CONSTANT = "constant"
    TWO_REGISTER = "tworegister"


def build_constant_adder(b: int, n: int, cutoff: int | None = None, fuse: bool = False) -> Circuit:
    """Rotations that add the classical constant b to a transformed register.

    One unconditional rotation per set bit of b per wire it reaches, wire
    n down to wire 1, ascending order k within a wire; orders above the
    cutoff are dropped.  ``fuse`` combines rotations hitting the same wire
    into a minimal dyadic sequence (a no-op for this construction, which
    never emits duplicate orders on a wire).
    """
    if n < 1:
        raise ValueError(f"need at least one qubit, got {n}")
    if not 0 <= b < (1 << n):
        raise ValueOutOfRange(f"b = {b} does not fit in {n} bits")
    _check_cutoff(cutoff)
    ops: list[GateOp] = []
    for j in range(n, 0, -1):
        top = j if cutoff is None else min(j, cutoff)
        for k in range(1, top + 1):
            i = j - k + 1
            if (b >> (i - 1)) & 1:
                ops.append(Rk(target=j - 1, k=k))
    if fuse:
        ops = _fuse_rotations(ops, n)
    suffix = "" if cutoff is None else f",cutoff={cutoff}"
    return Circuit(
        num_qubits=n,
        ops=tuple(ops),
        layout=RegisterLayout((("phi", 0, n),)),
        label=f"constant-adder[n={n},b={b}{suffix}]",
    )


def _fuse_rotations(ops: list[GateOp], n: int) -> list[GateOp]:
    # Net phase per wire, re-emitted as one rotation per set dyadic digit.
    turns = [Fraction(0)] * n
    for op in ops:
        assert isinstance(op, Rk)
        sign = -1 if op.inverted else 1
        turns[op.target] += Fraction(sign, 1 << op.k)
    fused: list[GateOp] = []
    for target in range(n - 1, -1, -1):
        t = turns[target] % 1
        k = 1
        while t:
            t *= 2
            if t >= 1:
                fused.append(Rk(target=target, k=k))
                t -= 1
            k += 1
    return fused


def build_two_register_adder(n: int, cutoff: int | None = None) -> Circuit:
    """Controlled rotations adding a quantum register b into a transformed one.

    Qubits 0..n-1 form the phi register, qubits n..2n-1 hold b.  Wire
    phi_j receives a rotation of order k controlled by bit b_{j-k+1} for
    k = 1..j, skipping orders above the cutoff.  Every gate is diagonal,
    so the b register is left untouched.
    """
    if n < 1:
        raise ValueError(f"need at least one qubit, got {n}")
    _check_cutoff(cutoff)
    ops: list[GateOp] = []
    for j in range(n, 0, -1):
        top = j if cutoff is None else min(j, cutoff)
        for k in range(1, top + 1):
            i = j - k + 1
            ops.append(ControlledRk(control=n + i - 1, target=j - 1, k=k))
    suffix = "" if cutoff is None else f",cutoff={cutoff}"
    return Circuit(
        num_qubits=2 * n,
        ops=tuple(ops),
        layout=RegisterLayout((("phi", 0, n), ("b", n, 2 * n))),
        label=f"two-register-adder[n={n}{suffix}]",
    )


def build_add_pipeline(
    n: int,
    mode: AddMode = AddMode.CONSTANT,
    b: int | None = None,
    cutoff: int | None = None,
) -> Circuit:
    """Full addition circuit: transform, rotate, inverse transform.

    The same cutoff is applied uniformly to all three stages.  Constant
    mode requires b and acts on n qubits; two-register mode acts on 2n
    qubits with b prepared in the upper register at run time.
    """
    qft = build_qft(n, cutoff)
    iqft = build_inverse_qft(n, cutoff)
    suffix = "" if cutoff is None else f",cutoff={cutoff}"
    if mode is AddMode.CONSTANT:
        if b is None:
            raise ValueError("constant mode requires the addend b")
        add = build_constant_adder(b, n, cutoff)
        return Circuit(
            num_qubits=n,
            ops=qft.ops + add.ops + iqft.ops,
            layout=RegisterLayout((("phi", 0, n),)),
            label=f"fourier-add[n={n},b={b}{suffix}]",
        )
    if mode is AddMode.TWO_REGISTER:
        if b is not None:
            raise ValueError("two-register mode takes b at run time, not build time")
        add = build_two_register_adder(n, cutoff)
        return Circuit(
            num_qubits=2 * n,
            ops=qft.ops + add.ops + iqft.ops,  # transform stages touch only qubits 0..n-1
            layout=RegisterLayout((("phi", 0, n), ("b", n, 2 * n))),
            label=f"fourier-add-two-register[n={n}{suffix}]",
        )
    raise TypeError(f"not an AddMode: {mode!r}")


def fourier_add(
    a: int,
    b: int,
    n: int,
    mode: AddMode = AddMode.CONSTANT,
    cutoff: int | None = None,
    tol: float = 1e-9,
) -> int:
    """Add two n-bit integers in the Fourier basis; result is mod 2^n.

    With no cutoff the readout is exact.  A cutoff may leave the register
    spread over several basis states, in which case readout raises
    :class:`NotABasisState`.
    """
    if not 0 <= a < (1 << n):
        raise ValueOutOfRange(f"a = {a} does not fit in {n} bits")
    if not 0 <= b < (1 << n):
        raise ValueOutOfRange(f"b = {b} does not fit in {n} bits")
    if mode is AddMode.CONSTANT:
        circuit = build_add_pipeline(n, mode, b=b, cutoff=cutoff)
        initial = basis_state(n, a)
        return readout(circuit.run(initial), tol)
    circuit = build_add_pipeline(n, mode, cutoff=cutoff)
    layout = circuit.layout
    assert layout is not None
    initial = basis_state(2 * n, layout.encode(phi=a, b=b))
    value = readout(circuit.run(initial), tol)
    return layout.extract(value, "phi")


def fourier_add_state(s: StateVector, b: int, cutoff: int | None = None) -> StateVector:
    """Add the classical constant b to an arbitrary, possibly superposed state.

    With no cutoff the amplitude of |v> in the output equals the amplitude
    of |(v - b) mod 2^n> in the input; the map is a pure basis permutation.
    """
    n = s.num_qubits
    if not 0 <= b < (1 << n):
        raise ValueOutOfRange(f"b = {b} does not fit in {n} bits")
    circuit = build_add_pipeline(n, AddMode.CONSTANT, b=b, cutoff=cutoff)
    return circuit.run(s)
