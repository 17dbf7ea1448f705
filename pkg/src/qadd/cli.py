"""Command-line client for the addition service.

Every command builds the same request model the HTTP service accepts and
prints the response as a single JSON object.  By default the request is
handled in-process; ``--server URL`` sends it to a running service
instead.  Exit codes: 0 success, 1 verification failure (or a readout
that found no definite result), 2 usage error.
"""

from __future__ import annotations

import json
from typing import Callable

import click
import httpx
from pydantic import BaseModel, ValidationError

from .builders import BUILDER_NAMES
from .errors import NotABasisState, QaddError
from .service import handlers
from .service.schemas import (
    AddRequest,
    DumpRequest,
    ScheduleRequest,
    StatsRequest,
    VerifyRequest,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def _make_client(server: str) -> httpx.Client:
    return httpx.Client(base_url=server, timeout=300.0)


def _parse_cutoff(text: str | None) -> int | str | None:
    if text is None:
        return None
    if text == "auto":
        return "auto"
    try:
        return int(text)
    except ValueError:
        raise click.UsageError(f"--cutoff must be an integer or 'auto', got {text!r}") from None


def _error_payload(kind: str, message: str) -> dict:
    return {"error": {"type": kind, "message": message}}


def _error_exit_code(payload: dict) -> int:
    kind = payload.get("error", {}).get("type")
    return EXIT_VERIFICATION_FAILED if kind == NotABasisState.__name__ else EXIT_USAGE


def _run_command(
    request: BaseModel,
    path: str,
    handler: Callable[..., BaseModel],
    server: str | None,
    pretty: bool,
    result_exit_code: Callable[[dict], int],
) -> None:
    if server is None:
        try:
            payload = handler(request).model_dump(mode="json")
            code = result_exit_code(payload)
        except (QaddError, ValueError) as exc:
            payload = _error_payload(type(exc).__name__, str(exc))
            code = _error_exit_code(payload)
    else:
        try:
            with _make_client(server) as client:
                response = client.post(path, json=request.model_dump(mode="json"))
        except httpx.HTTPError as exc:
            payload = _error_payload("ConnectionError", f"{server}: {exc}")
            code = EXIT_USAGE
        else:
            payload = response.json()
            if response.status_code >= 400:
                code = _error_exit_code(payload) if "error" in payload else EXIT_USAGE
            else:
                code = result_exit_code(payload)
    click.echo(json.dumps(payload, indent=2 if pretty else None, sort_keys=False))
    raise SystemExit(code)


def _always_ok(_payload: dict) -> int:
    return EXIT_OK


def _common_options(fn):
    fn = click.option("--pretty", is_flag=True, help="Indent the JSON output.")(fn)
    fn = click.option(
        "--server", metavar="URL", default=None, help="Send the request to a running service."
    )(fn)
    return fn


@click.group()
@click.version_option(package_name="qadd", message="%(version)s")
def main() -> None:
    """Build, simulate, verify, and schedule quantum addition circuits."""


@main.command("add")
@click.option("--n", "n", type=int, required=True, help="Bit width.")
@click.option("--a", "a", type=int, required=True, help="First addend.")
@click.option("--b", "b", type=int, required=True, help="Second addend.")
@click.option(
    "--mode",
    type=click.Choice(["constant", "tworegister", "ripple"]),
    default="constant",
    show_default=True,
)
@click.option("--cutoff", default=None, help="Rotation-order cutoff: an integer or 'auto'.")
@click.option("--emit-circuit", is_flag=True, help="Include the circuit JSON in the report.")
@_common_options
def add(n, a, b, mode, cutoff, emit_circuit, server, pretty) -> None:
    """Add two integers with the chosen adder and report the result."""
    try:
        request = AddRequest(
            n=n, a=a, b=b, mode=mode, cutoff=_parse_cutoff(cutoff), emit_circuit=emit_circuit
        )
    except ValidationError as exc:
        _fail_validation(exc, pretty)
    _run_command(request, "/add", handlers.handle_add, server, pretty, _always_ok)


@main.command("verify")
@click.option("--n", "n", required=True, help="Bit width, or an inclusive range like 1..5.")
@click.option(
    "--mode",
    type=click.Choice(["constant", "tworegister", "ripple"]),
    default="constant",
    show_default=True,
)
@click.option("--cutoff", default=None, help="Rotation-order cutoff: an integer or 'auto'.")
@click.option("--samples", type=int, default=None, help="Sample this many (a, b) pairs per width.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for sampled sweeps.")
@_common_options
def verify(n, mode, cutoff, samples, seed, server, pretty) -> None:
    """Sweep (a, b) pairs against classical addition; exit 1 on any failure."""
    try:
        request = VerifyRequest(
            n=n, mode=mode, cutoff=_parse_cutoff(cutoff), samples=samples, seed=seed
        )
    except ValidationError as exc:
        _fail_validation(exc, pretty)
    _run_command(
        request,
        "/verify",
        handlers.handle_verify,
        server,
        pretty,
        lambda payload: EXIT_OK if payload.get("failures") == 0 else EXIT_VERIFICATION_FAILED,
    )


@main.command("stats")
@click.option("--n", "n", type=int, required=True, help="Bit width.")
@click.option("--cutoff", default=None, help="Rotation-order cutoff: an integer or 'auto'.")
@_common_options
def stats(n, cutoff, server, pretty) -> None:
    """Report gate counts, qubit budgets, and scheduled depth for width n."""
    try:
        request = StatsRequest(n=n, cutoff=_parse_cutoff(cutoff))
    except ValidationError as exc:
        _fail_validation(exc, pretty)
    _run_command(request, "/stats", handlers.handle_stats, server, pretty, _always_ok)


@main.command("schedule")
@click.option("--builder", type=click.Choice(BUILDER_NAMES), required=True)
@click.option("--n", "n", type=int, required=True, help="Bit width.")
@click.option("--b", "b", type=int, default=None, help="Addend for constant builders.")
@click.option("--cutoff", default=None, help="Rotation-order cutoff: an integer or 'auto'.")
@click.option("--commuting", is_flag=True, help="Reorder freely (diagonal circuits only).")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for the check state.")
@_common_options
def schedule(builder, n, b, cutoff, commuting, seed, server, pretty) -> None:
    """Pack a named circuit into time slices and emit the schedule JSON."""
    try:
        request = ScheduleRequest(
            builder=builder, n=n, b=b, cutoff=_parse_cutoff(cutoff), commuting=commuting, seed=seed
        )
    except ValidationError as exc:
        _fail_validation(exc, pretty)
    _run_command(
        request,
        "/schedule",
        handlers.handle_schedule,
        server,
        pretty,
        lambda payload: (
            EXIT_VERIFICATION_FAILED if payload.get("verified") is False else EXIT_OK
        ),
    )


@main.command("dump")
@click.option("--builder", type=click.Choice(BUILDER_NAMES), required=True)
@click.option("--n", "n", type=int, required=True, help="Bit width.")
@click.option("--b", "b", type=int, default=None, help="Addend for constant builders.")
@click.option("--cutoff", default=None, help="Rotation-order cutoff: an integer or 'auto'.")
@_common_options
def dump(builder, n, b, cutoff, server, pretty) -> None:
    """Emit a named circuit as JSON."""
    try:
        request = DumpRequest(builder=builder, n=n, b=b, cutoff=_parse_cutoff(cutoff))
    except ValidationError as exc:
        _fail_validation(exc, pretty)
    _run_command(request, "/dump", handlers.handle_dump, server, pretty, _always_ok)


def _fail_validation(exc: ValidationError, pretty: bool) -> None:
    first = exc.errors()[0]
    where = ".".join(str(piece) for piece in first.get("loc", ()))
    payload = _error_payload("ValidationError", f"{where}: {first.get('msg')}")
    click.echo(json.dumps(payload, indent=2 if pretty else None))
    raise SystemExit(EXIT_USAGE)


if __name__ == "__main__":
    main()
