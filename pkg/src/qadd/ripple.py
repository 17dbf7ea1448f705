"""Classical-style reversible adder built from carry and sum networks.

The n-bit adder uses 3n+1 wires: n carry ancillas, the two n-bit inputs,
and one extra wire for the high sum bit.  A forward chain of carry gates
climbs the bits, the top bit is finished with a CNOT and a sum gate, and a
descending chain of reversed carries and sum gates restores every ancilla
to zero while writing the remaining sum bits in place of b.
"""

from __future__ import annotations

from .circuit import Circuit, RegisterLayout
from .errors import AncillaNotRestored, RegisterTooLarge, ValueOutOfRange
from .gates import CNOT, GateOp, carry_ops, sum_ops
from .statevec import basis_state, readout

MAX_RIPPLE_BITS = 7  # 3n+1 qubits must stay within the simulator limit


def build_ripple_adder(n: int) -> Circuit:
    """Adder circuit for two n-bit registers, 1 <= n <= 7.

    Layout registers: ``carry`` (ancillas, restored to zero), ``a``
    (unchanged), ``b`` (receives the low n sum bits), ``high`` (the
    carry-out bit).  All registers read little-endian.
    """
    if not 1 <= n <= MAX_RIPPLE_BITS:
        raise RegisterTooLarge(f"ripple adder supports 1..{MAX_RIPPLE_BITS} bits, got {n}")

    def c(i: int) -> int:  # carry ancilla for bit i, 1-based
        return i - 1

    def a(i: int) -> int:
        return n + i - 1

    def b(i: int) -> int:
        return 2 * n + i - 1

    high = 3 * n

    ops: list[GateOp] = []
    for i in range(1, n + 1):
        c_out = c(i + 1) if i < n else high
        ops += carry_ops(c(i), a(i), b(i), c_out)
    ops.append(CNOT(a(n), b(n)))
    ops += sum_ops(c(n), a(n), b(n))
    for i in range(n - 1, 0, -1):
        ops += carry_ops(c(i), a(i), b(i), c(i + 1), reverse=True)
        ops += sum_ops(c(i), a(i), b(i))

    layout = RegisterLayout(
        (
            ("carry", 0, n),
            ("a", n, 2 * n),
            ("b", 2 * n, 3 * n),
            ("high", 3 * n, 3 * n + 1),
        )
    )
    return Circuit(num_qubits=3 * n + 1, ops=tuple(ops), layout=layout, label=f"ripple-adder[n={n}]")


def ripple_add(a: int, b: int, n: int, tol: float = 1e-9) -> int:
    """Add two n-bit integers through the reversible adder.

    Returns the full (n+1)-bit sum.  Verifies that the a register came
    through unchanged and that every carry ancilla was restored to zero;
    a violation raises :class:`AncillaNotRestored`.
    """
    if not 0 <= a < (1 << n):
        raise ValueOutOfRange(f"a = {a} does not fit in {n} bits")
    if not 0 <= b < (1 << n):
        raise ValueOutOfRange(f"b = {b} does not fit in {n} bits")
    circuit = build_ripple_adder(n)
    layout = circuit.layout
    assert layout is not None
    initial = basis_state(circuit.num_qubits, layout.encode(a=a, b=b))
    final = circuit.run(initial)
    value = readout(final, tol)
    if layout.extract(value, "carry") != 0:
        raise AncillaNotRestored(
            f"carry ancillas read {layout.extract(value, 'carry'):#b} after adding {a} + {b}"
        )
    if layout.extract(value, "a") != a:
        raise AncillaNotRestored(
            f"input register changed from {a} to {layout.extract(value, 'a')} while adding {a} + {b}"
        )
    return layout.extract(value, "b") | (layout.extract(value, "high") << n)
