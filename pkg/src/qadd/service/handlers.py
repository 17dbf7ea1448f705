"""Command handlers: the single implementation behind HTTP routes and the CLI."""

from __future__ import annotations

import time

import numpy as np

from ..adder import AddMode, build_add_pipeline, build_constant_adder, fourier_add
from ..builders import build_named
from ..circuit import Circuit, GateCounts, counts, op_to_json
from ..errors import AncillaNotRestored, InvalidRequest, NotABasisState
from ..fourier import build_qft, qft_counts, resolve_cutoff
from ..gates import GateOp
from ..ripple import MAX_RIPPLE_BITS, build_ripple_adder, ripple_add
from ..scheduler import depth, schedule, verify_schedule
from ..statevec import basis_state, max_qubits, probability, readout
from .schemas import (
    AddRequest,
    AddResponse,
    CircuitModel,
    DumpRequest,
    DumpResponse,
    FailureCase,
    GateCountsModel,
    GateModel,
    PerWidthResult,
    ScheduleRequest,
    ScheduleResponse,
    StatsRequest,
    StatsResponse,
    VerifyRequest,
    VerifyResponse,
)

EXHAUSTIVE_WIDTH_LIMIT = 5
_SCHEDULE_SIM_LIMIT = 20  # qubits; behavioral verification above this is skipped
_STATS_CONSTRUCT_LIMIT = 64


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000.0, 3)


def _counts_model(c: GateCounts) -> GateCountsModel:
    return GateCountsModel(**c.__dict__)


def _circuit_model(c: Circuit) -> CircuitModel:
    return CircuitModel.model_validate(c.to_json_dict())


def handle_add(req: AddRequest) -> AddResponse:
    t0 = time.perf_counter()
    if req.mode == "ripple":
        if req.cutoff is not None:
            raise InvalidRequest("ripple mode takes no cutoff")
        circuit = build_ripple_adder(req.n)
        total = ripple_add(req.a, req.b, req.n)
        cutoff = None
    else:
        cutoff = resolve_cutoff(req.cutoff, req.n)
        mode = AddMode(req.mode)
        if mode is AddMode.CONSTANT:
            circuit = build_add_pipeline(req.n, mode, b=req.b, cutoff=cutoff)
        else:
            circuit = build_add_pipeline(req.n, mode, cutoff=cutoff)
        total = fourier_add(req.a, req.b, req.n, mode, cutoff)
    return AddResponse(
        params=req,
        sum=total,
        qubits=circuit.num_qubits,
        cutoff_resolved=cutoff,
        counts=_counts_model(counts(circuit)),
        circuit=_circuit_model(circuit) if req.emit_circuit else None,
        elapsed_ms=_ms(t0),
    )


def parse_width_range(value: int | str) -> tuple[int, int]:
    """Parse a width argument: a plain integer or an inclusive range "lo..hi"."""
    if isinstance(value, bool):
        raise InvalidRequest(f"width must be an integer or 'lo..hi', got {value!r}")
    if isinstance(value, int):
        lo = hi = value
    else:
        text = value.strip()
        try:
            if ".." in text:
                lo_text, hi_text = text.split("..", 1)
                lo, hi = int(lo_text), int(hi_text)
            else:
                lo = hi = int(text)
        except ValueError:
            raise InvalidRequest(f"width must be an integer or 'lo..hi', got {value!r}") from None
    if lo < 1 or hi < lo:
        raise InvalidRequest(f"bad width range {lo}..{hi}")
    return lo, hi


def _pairs_for(n: int, samples: int | None, seed: int):
    if samples is None:
        if n > EXHAUSTIVE_WIDTH_LIMIT:
            raise InvalidRequest(
                f"exhaustive verification is limited to n <= {EXHAUSTIVE_WIDTH_LIMIT}; "
                f"pass samples for n = {n}"
            )
        size = 1 << n
        return [(a, b) for a in range(size) for b in range(size)]
    rng = np.random.default_rng([seed, n])
    return [
        (int(a), int(b))
        for a, b in zip(rng.integers(0, 1 << n, samples), rng.integers(0, 1 << n, samples))
    ]


def _verify_ripple(n: int, pairs, record) -> PerWidthResult:
    failures = 0
    for a, b in pairs:
        try:
            got = ripple_add(a, b, n)
        except (AncillaNotRestored, NotABasisState) as exc:
            failures += 1
            record(n, a, b, a + b, None, type(exc).__name__)
            continue
        if got != a + b:
            failures += 1
            record(n, a, b, a + b, got, "wrong sum")
    return PerWidthResult(n=n, cases=len(pairs), failures=failures)


def _verify_exact(n: int, mode: AddMode, pairs, record) -> PerWidthResult:
    failures = 0
    mask = (1 << n) - 1
    if mode is AddMode.TWO_REGISTER:
        circuit = build_add_pipeline(n, mode)
        layout = circuit.layout
        for a, b in pairs:
            expected = (a + b) & mask
            state = circuit.run(basis_state(2 * n, layout.encode(phi=a, b=b)))
            try:
                value = readout(state)
            except NotABasisState as exc:
                failures += 1
                record(n, a, b, expected, None, type(exc).__name__)
                continue
            got_phi = layout.extract(value, "phi")
            got_b = layout.extract(value, "b")
            if got_phi != expected or got_b != b:
                failures += 1
                reason = "wrong sum" if got_b == b else "b register disturbed"
                record(n, a, b, expected, got_phi, reason)
        return PerWidthResult(n=n, cases=len(pairs), failures=failures)
    for a, b in pairs:
        expected = (a + b) & mask
        try:
            got = fourier_add(a, b, n, mode)
        except NotABasisState as exc:
            failures += 1
            record(n, a, b, expected, None, type(exc).__name__)
            continue
        if got != expected:
            failures += 1
            record(n, a, b, expected, got, "wrong sum")
    return PerWidthResult(n=n, cases=len(pairs), failures=failures)


def _verify_approximate(n: int, mode: AddMode, cutoff: int, pairs) -> PerWidthResult:
    # No exactness contract under a cutoff: report success-probability statistics.
    mask = (1 << n) - 1
    probs = []
    if mode is AddMode.TWO_REGISTER:
        circuit = build_add_pipeline(n, mode, cutoff=cutoff)
        layout = circuit.layout
        for a, b in pairs:
            state = circuit.run(basis_state(2 * n, layout.encode(phi=a, b=b)))
            target = layout.encode(phi=(a + b) & mask, b=b)
            probs.append(probability(state, target))
    else:
        for a, b in pairs:
            circuit = build_add_pipeline(n, mode, b=b, cutoff=cutoff)
            state = circuit.run(basis_state(n, a))
            probs.append(probability(state, (a + b) & mask))
    return PerWidthResult(
        n=n,
        cases=len(pairs),
        failures=0,
        cutoff_resolved=cutoff,
        mean_success_probability=float(np.mean(probs)),
        min_success_probability=float(np.min(probs)),
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    t0 = time.perf_counter()
    lo, hi = parse_width_range(req.n)
    if req.mode == "ripple":
        if req.cutoff is not None:
            raise InvalidRequest("ripple mode takes no cutoff")
        if hi > MAX_RIPPLE_BITS:
            raise InvalidRequest(f"ripple verification is limited to n <= {MAX_RIPPLE_BITS}")
    first_failure: FailureCase | None = None

    def record(n: int, a: int, b: int, expected: int, got: int | None, reason: str) -> None:
        nonlocal first_failure
        if first_failure is None:
            first_failure = FailureCase(n=n, a=a, b=b, expected=expected, got=got, reason=reason)

    per_width: list[PerWidthResult] = []
    for n in range(lo, hi + 1):
        cutoff = resolve_cutoff(req.cutoff, n) if req.mode != "ripple" else None
        pairs = _pairs_for(n, req.samples, req.seed)
        if req.mode == "ripple":
            per_width.append(_verify_ripple(n, pairs, record))
        elif cutoff is None:
            per_width.append(_verify_exact(n, AddMode(req.mode), pairs, record))
        else:
            per_width.append(_verify_approximate(n, AddMode(req.mode), cutoff, pairs))
    means = [r.mean_success_probability for r in per_width if r.mean_success_probability is not None]
    return VerifyResponse(
        params=req,
        cases=sum(r.cases for r in per_width),
        failures=sum(r.failures for r in per_width),
        first_failure=first_failure,
        per_width=per_width,
        mean_success_probability=float(np.mean(means)) if means else None,
        elapsed_ms=_ms(t0),
    )


def _rotations_with_cutoff(n: int, cutoff: int | None) -> int:
    cap = n if cutoff is None else cutoff
    return sum(min(j, cap) for j in range(1, n + 1))


def handle_stats(req: StatsRequest) -> StatsResponse:
    t0 = time.perf_counter()
    n = req.n
    cutoff = resolve_cutoff(req.cutoff, n)
    full = qft_counts(n)
    aqft_rotations = qft_counts(n, cutoff).rotations if cutoff is not None else None
    adder_rotations = _rotations_with_cutoff(n, cutoff)

    counts_verified = False
    depth_source = "formula"
    adder_depth = min(n, cutoff) if cutoff is not None else n
    if n <= _STATS_CONSTRUCT_LIMIT:
        all_ones = (1 << n) - 1
        constant = build_constant_adder(all_ones, n, cutoff)
        built = {
            "qft_total": counts(build_qft(n)).total,
            "aqft_rotations": (
                counts(build_qft(n, cutoff)).rotations if cutoff is not None else None
            ),
            "constant": counts(constant).rotations,
            "two_register": counts(build_named("two-register-adder", n, cutoff=cutoff)).rotations,
        }
        expected = {
            "qft_total": full.total,
            "aqft_rotations": aqft_rotations,
            "constant": adder_rotations,
            "two_register": adder_rotations,
        }
        if built != expected:
            raise RuntimeError(f"count self-check failed: built {built}, closed form {expected}")
        counts_verified = True
        adder_depth = depth(schedule(constant, commuting=True))
        depth_source = "scheduled"
    return StatsResponse(
        params=req,
        n=n,
        cutoff_resolved=cutoff,
        qft_hadamards=full.hadamards,
        qft_rotations=full.rotations,
        qft_total=full.total,
        aqft_rotations=aqft_rotations,
        constant_adder_rotations_max=adder_rotations,
        two_register_rotations=adder_rotations,
        ripple_toffolis=4 * n - 2,
        ripple_cnots=4 * n,
        ripple_total=8 * n - 2,
        qubits_constant=n,
        qubits_two_register=2 * n,
        qubits_ripple=3 * n + 1,
        adder_depth=adder_depth,
        depth_source=depth_source,
        counts_verified=counts_verified,
        elapsed_ms=_ms(t0),
    )


def _gate_model(op: GateOp) -> GateModel:
    return GateModel.model_validate(op_to_json(op))


def handle_schedule(req: ScheduleRequest) -> ScheduleResponse:
    t0 = time.perf_counter()
    cutoff = resolve_cutoff(req.cutoff, req.n)
    circuit = build_named(req.builder, req.n, b=req.b, cutoff=cutoff)
    sched = schedule(circuit, commuting=req.commuting)
    verified: bool | None = None
    if circuit.num_qubits <= min(max_qubits(), _SCHEDULE_SIM_LIMIT):
        verified = bool(verify_schedule(sched, circuit, seed=req.seed))
    return ScheduleResponse(
        params=req,
        source=sched.source,
        num_qubits=sched.num_qubits,
        gates=len(sched.flattened()),
        depth=depth(sched),
        verified=verified,
        slices=[[_gate_model(op) for op in sl] for sl in sched.slices],
        elapsed_ms=_ms(t0),
    )


def handle_dump(req: DumpRequest) -> DumpResponse:
    t0 = time.perf_counter()
    cutoff = resolve_cutoff(req.cutoff, req.n)
    circuit = build_named(req.builder, req.n, b=req.b, cutoff=cutoff)
    return DumpResponse(
        params=req,
        circuit=_circuit_model(circuit),
        counts=_counts_model(counts(circuit)),
        elapsed_ms=_ms(t0),
    )
