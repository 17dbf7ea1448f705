"""Named circuit builders shared by the CLI and the service."""

from __future__ import annotations

from .adder import AddMode, build_add_pipeline, build_constant_adder, build_two_register_adder
from .circuit import Circuit
from .errors import InvalidRequest
from .fourier import build_inverse_qft, build_qft
from .ripple import build_ripple_adder

BUILDER_NAMES = (
    "qft",
    "iqft",
    "constant-adder",
    "two-register-adder",
    "ripple-adder",
    "constant-pipeline",
    "two-register-pipeline",
)

_NEEDS_B = {"constant-adder", "constant-pipeline"}
_TAKES_CUTOFF = set(BUILDER_NAMES) - {"ripple-adder"}


def build_named(name: str, n: int, b: int | None = None, cutoff: int | None = None) -> Circuit:
    """Build one of the named circuits; rejects parameters the builder ignores."""
    if name not in BUILDER_NAMES:
        raise InvalidRequest(f"unknown builder {name!r}; choose from {', '.join(BUILDER_NAMES)}")
    if name in _NEEDS_B and b is None:
        raise InvalidRequest(f"builder {name!r} requires the addend b")
    if name not in _NEEDS_B and b is not None:
        raise InvalidRequest(f"builder {name!r} takes no addend b")
    if name not in _TAKES_CUTOFF and cutoff is not None:
        raise InvalidRequest(f"builder {name!r} takes no cutoff")
    if name == "qft":
        return build_qft(n, cutoff)
    if name == "iqft":
        return build_inverse_qft(n, cutoff)
    if name == "constant-adder":
        assert b is not None
        return build_constant_adder(b, n, cutoff)
    if name == "two-register-adder":
        return build_two_register_adder(n, cutoff)
    if name == "ripple-adder":
        return build_ripple_adder(n)
    if name == "constant-pipeline":
        return build_add_pipeline(n, AddMode.CONSTANT, b=b, cutoff=cutoff)
    return build_add_pipeline(n, AddMode.TWO_REGISTER, cutoff=cutoff)
