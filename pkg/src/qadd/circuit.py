"""Ordered gate-list circuits: execution, inversion, counting, JSON format.

A circuit is a flat list of gates over a fixed qubit count, optionally
tagged with a register layout naming contiguous qubit ranges.  The JSON
interchange format is one object per circuit::

    {"num_qubits": 3, "label": "...", "ops": [{"kind": "h", "qubits": [2]}, ...]}

Rotation gates carry ``k`` and ``inverted`` fields; unknown fields are
rejected on input.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import CircuitFormatError, DimensionMismatch, QubitIndexError
from .gates import (
    CNOT,
    ControlledRk,
    GateOp,
    Hadamard,
    Rk,
    Toffoli,
    inverse_op,
    op_qubits,
)
from .statevec import StateVector, apply_sequence


@dataclass(frozen=True)
class RegisterLayout:
    """Named contiguous qubit ranges covering a circuit, low bit first."""

    registers: tuple[tuple[str, int, int], ...]  # (name, start, stop), stop exclusive

    def __post_init__(self) -> None:
        object.__setattr__(self, "registers", tuple((str(n), int(a), int(b)) for n, a, b in self.registers))
        seen: set[str] = set()
        spans: list[tuple[int, int]] = []
        for name, start, stop in self.registers:
            if name in seen:
                raise ValueError(f"duplicate register name {name!r}")
            seen.add(name)
            if not 0 <= start < stop:
                raise ValueError(f"register {name!r} has empty or negative range [{start}, {stop})")
            spans.append((start, stop))
        spans.sort()
        for (_, prev_stop), (next_start, _) in zip(spans, spans[1:]):
            if next_start < prev_stop:
                raise ValueError("register ranges overlap")

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _, _ in self.registers)

    def range_of(self, name: str) -> range:
        for reg, start, stop in self.registers:
            if reg == name:
                return range(start, stop)
        raise KeyError(name)

    def width(self, name: str) -> int:
        r = self.range_of(name)
        return r.stop - r.start

    def total_qubits(self) -> int:
        return sum(stop - start for _, start, stop in self.registers)

    def covers(self, num_qubits: int) -> bool:
        if self.total_qubits() != num_qubits:
            return False
        return all(stop <= num_qubits for _, _, stop in self.registers)

    def encode(self, **fields: int) -> int:
        """Pack per-register integer values into a basis index."""
        value = 0
        for name, x in fields.items():
            r = self.range_of(name)
            width = r.stop - r.start
            if not 0 <= x < (1 << width):
                raise ValueError(f"value {x} does not fit register {name!r} of width {width}")
            value |= x << r.start
        return value

    def extract(self, value: int, name: str) -> int:
        """Read one register's integer field out of a basis index."""
        r = self.range_of(name)
        return (value >> r.start) & ((1 << (r.stop - r.start)) - 1)


@dataclass(frozen=True)
class GateCounts:
    hadamards: int
    rotations: int
    cnots: int
    toffolis: int
    total: int
    qubits: int


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    ops: tuple[GateOp, ...]
    layout: RegisterLayout | None = None
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(self.ops))
        if self.num_qubits < 1:
            raise ValueError(f"circuit needs at least one qubit, got {self.num_qubits}")
        for op in self.ops:
            for q in op_qubits(op):
                if q >= self.num_qubits:
                    raise QubitIndexError(
                        f"{op!r} touches qubit {q}, but circuit has {self.num_qubits} qubits"
                    )
        if self.layout is not None and not self.layout.covers(self.num_qubits):
            raise ValueError("layout does not cover the circuit's qubits exactly")

    def run(self, state: StateVector) -> StateVector:
        return run(self, state)

    def inverse(self) -> "Circuit":
        return inverse(self)

    def counts(self) -> GateCounts:
        return counts(self)

    def to_json_dict(self) -> dict:
        return {
            "num_qubits": self.num_qubits,
            "label": self.label,
            "ops": [op_to_json(op) for op in self.ops],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Circuit":
        if not isinstance(data, dict):
            raise CircuitFormatError(f"circuit must be a JSON object, got {type(data).__name__}")
        extra = set(data) - {"num_qubits", "label", "ops"}
        if extra:
            raise CircuitFormatError(f"unknown circuit fields: {sorted(extra)}")
        missing = {"num_qubits", "label", "ops"} - set(data)
        if missing:
            raise CircuitFormatError(f"missing circuit fields: {sorted(missing)}")
        if not isinstance(data["num_qubits"], int) or isinstance(data["num_qubits"], bool):
            raise CircuitFormatError("num_qubits must be an integer")
        if not isinstance(data["label"], str):
            raise CircuitFormatError("label must be a string")
        if not isinstance(data["ops"], list):
            raise CircuitFormatError("ops must be an array")
        try:
            return cls(
                num_qubits=data["num_qubits"],
                ops=tuple(op_from_json(d) for d in data["ops"]),
                label=data["label"],
            )
        except (QubitIndexError, ValueError) as exc:
            raise CircuitFormatError(str(exc)) from exc


def run(circuit: Circuit, state: StateVector) -> StateVector:
    """Apply the circuit's gates in list order."""
    if state.num_qubits != circuit.num_qubits:
        raise DimensionMismatch(
            f"state has {state.num_qubits} qubits, circuit has {circuit.num_qubits}"
        )
    return apply_sequence(state, circuit.ops)


def inverse(circuit: Circuit) -> Circuit:
    """Reverse the gate list and invert each gate."""
    label = f"inverse({circuit.label})" if circuit.label else ""
    return replace(
        circuit,
        ops=tuple(inverse_op(op) for op in reversed(circuit.ops)),
        label=label,
    )


def counts(circuit: Circuit) -> GateCounts:
    h = r = cx = ccx = 0
    for op in circuit.ops:
        if isinstance(op, Hadamard):
            h += 1
        elif isinstance(op, (Rk, ControlledRk)):
            r += 1
        elif isinstance(op, CNOT):
            cx += 1
        elif isinstance(op, Toffoli):
            ccx += 1
        else:
            raise TypeError(f"not a gate op: {op!r}")
    return GateCounts(
        hadamards=h,
        rotations=r,
        cnots=cx,
        toffolis=ccx,
        total=h + r + cx + ccx,
        qubits=circuit.num_qubits,
    )


_ROTATION_KINDS = {"rk", "crk"}
_KIND_ARITY = {"h": 1, "rk": 1, "crk": 2, "cnot": 2, "toffoli": 3}


def op_to_json(op: GateOp) -> dict:
    if isinstance(op, Hadamard):
        return {"kind": "h", "qubits": [op.target]}
    if isinstance(op, Rk):
        return {"kind": "rk", "qubits": [op.target], "k": op.k, "inverted": op.inverted}
    if isinstance(op, ControlledRk):
        return {"kind": "crk", "qubits": [op.control, op.target], "k": op.k, "inverted": op.inverted}
    if isinstance(op, CNOT):
        return {"kind": "cnot", "qubits": [op.control, op.target]}
    if isinstance(op, Toffoli):
        return {"kind": "toffoli", "qubits": [op.control1, op.control2, op.target]}
    raise TypeError(f"not a gate op: {op!r}")


def op_from_json(data: dict) -> GateOp:
    if not isinstance(data, dict):
        raise CircuitFormatError(f"gate must be a JSON object, got {type(data).__name__}")
    kind = data.get("kind")
    if kind not in _KIND_ARITY:
        raise CircuitFormatError(f"unknown gate kind {kind!r}")
    allowed = {"kind", "qubits"}
    if kind in _ROTATION_KINDS:
        allowed |= {"k", "inverted"}
    extra = set(data) - allowed
    if extra:
        raise CircuitFormatError(f"unknown fields {sorted(extra)} on gate kind {kind!r}")
    qubits = data.get("qubits")
    if not isinstance(qubits, list) or not all(
        isinstance(q, int) and not isinstance(q, bool) for q in qubits
    ):
        raise CircuitFormatError("qubits must be an array of integers")
    if len(qubits) != _KIND_ARITY[kind]:
        raise CircuitFormatError(
            f"gate kind {kind!r} takes {_KIND_ARITY[kind]} qubits, got {len(qubits)}"
        )
    try:
        if kind == "h":
            return Hadamard(qubits[0])
        if kind in _ROTATION_KINDS:
            if "k" not in data:
                raise CircuitFormatError(f"gate kind {kind!r} requires field 'k'")
            k = data["k"]
            if not isinstance(k, int) or isinstance(k, bool):
                raise CircuitFormatError("k must be an integer")
            inverted = data.get("inverted", False)
            if not isinstance(inverted, bool):
                raise CircuitFormatError("inverted must be a boolean")
            if kind == "rk":
                return Rk(qubits[0], k, inverted)
            return ControlledRk(qubits[0], qubits[1], k, inverted)
        if kind == "cnot":
            return CNOT(qubits[0], qubits[1])
        return Toffoli(qubits[0], qubits[1], qubits[2])
    except (QubitIndexError, ValueError) as exc:
        raise CircuitFormatError(str(exc)) from exc
