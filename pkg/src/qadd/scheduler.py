"""Pack circuit gates into parallel time slices of disjoint qubit support.

Two modes:

* order-preserving (default): greedy list scheduling; a gate lands in the
  earliest slice after every earlier gate that shares one of its qubits.
  Sound for any circuit.
* commuting: allowed only when every gate is diagonal, in which case all
  gates commute and may be reordered freely.  Gates are grouped by
  rotation order (all order-1 rotations, then order-2, ...) before the
  same greedy packing, which reproduces the slice structure the adders
  admit: depth min(n, cutoff) instead of gate count.

Packing is deterministic; ties keep the original gate order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, op_from_json, op_to_json
from .errors import NonCommutingGates
from .gates import GateOp, is_diagonal, op_qubits, rotation_order
from .statevec import (
    DEFAULT_ATOL,
    StateVector,
    apply_sequence,
    max_amplitude_deviation,
    max_qubits,
)

DEFAULT_VERIFY_SEED = 20260808


@dataclass(frozen=True)
class Schedule:
    """Ordered time slices; each slice's gates touch pairwise-disjoint qubits."""

    slices: tuple[tuple[GateOp, ...], ...]
    source: str
    num_qubits: int

    def flattened(self) -> tuple[GateOp, ...]:
        return tuple(op for sl in self.slices for op in sl)

    def to_json(self) -> list[list[dict]]:
        return [[op_to_json(op) for op in sl] for sl in self.slices]

    @classmethod
    def from_json(cls, data: list[list[dict]], num_qubits: int, source: str = "") -> "Schedule":
        slices = tuple(tuple(op_from_json(d) for d in sl) for sl in data)
        return cls(slices=slices, source=source, num_qubits=num_qubits)


def schedule(circuit: Circuit, commuting: bool = False) -> Schedule:
    """Pack a circuit into time slices; see the module docstring."""
    indexed = list(enumerate(circuit.ops))
    if commuting:
        for _, op in indexed:
            if not is_diagonal(op):
                raise NonCommutingGates(
                    f"commuting mode requires diagonal gates only, found {op!r}"
                )
        indexed.sort(key=lambda pair: (rotation_order(pair[1]), pair[0]))
    slices: list[list[GateOp]] = []
    frontier: dict[int, int] = {}
    for _, op in indexed:
        qs = op_qubits(op)
        at = max((frontier.get(q, 0) for q in qs), default=0)
        if at == len(slices):
            slices.append([])
        slices[at].append(op)
        for q in qs:
            frontier[q] = at + 1
    return Schedule(
        slices=tuple(tuple(sl) for sl in slices),
        source=circuit.label,
        num_qubits=circuit.num_qubits,
    )


def depth(s: Schedule) -> int:
    """Number of time slices."""
    return len(s.slices)


@dataclass(frozen=True)
class ScheduleCheck:
    """Outcome of verifying a schedule; falsy when any problem was found."""

    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def check_structure(s: Schedule, circuit: Circuit) -> list[str]:
    """Structural problems only: qubit counts, slice disjointness, conservation."""
    problems: list[str] = []
    if s.num_qubits != circuit.num_qubits:
        problems.append(
            f"qubit count mismatch: schedule has {s.num_qubits}, circuit has {circuit.num_qubits}"
        )
    for idx, sl in enumerate(s.slices):
        used: set[int] = set()
        for op in sl:
            qs = set(op_qubits(op))
            clash = used & qs
            if clash:
                problems.append(f"slice {idx} reuses qubits {sorted(clash)}")
            used |= qs
    if Counter(s.flattened()) != Counter(circuit.ops):
        problems.append("scheduled gates are not a permutation of the circuit's gates")
    return problems


def verify_schedule(s: Schedule, circuit: Circuit, seed: int = DEFAULT_VERIFY_SEED) -> ScheduleCheck:
    """Check a schedule structurally and behaviorally against its circuit.

    Behavioral check: slices executed in order must reproduce the circuit
    on a randomized test state to within 1e-10 per amplitude.  Never
    raises; problems come back in the report.
    """
    problems = check_structure(s, circuit)
    if problems:
        return ScheduleCheck(False, tuple(problems))
    if circuit.num_qubits > max_qubits():
        return ScheduleCheck(
            False,
            (f"cannot simulate {circuit.num_qubits} qubits (limit {max_qubits()})",),
        )
    rng = np.random.default_rng(seed)
    amps = rng.standard_normal(1 << circuit.num_qubits) + 1j * rng.standard_normal(
        1 << circuit.num_qubits
    )
    amps /= np.linalg.norm(amps)
    test_state = StateVector(amps)
    expected = circuit.run(test_state)
    actual = apply_sequence(test_state, s.flattened())
    deviation = max_amplitude_deviation(expected, actual)
    if deviation >= DEFAULT_ATOL:
        return ScheduleCheck(
            False, (f"scheduled execution deviates by {deviation:.3e} from the circuit",)
        )
    return ScheduleCheck(True)
