"""Request and response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_serializer, model_validator

CutoffValue = Union[int, Literal["auto"], None]
ModeName = Literal["constant", "tworegister", "ripple"]


class GateModel(BaseModel):
    """One gate in the circuit JSON format; k/inverted only on rotations."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["h", "rk", "crk", "cnot", "toffoli"]
    qubits: list[int]
    k: Optional[int] = None
    inverted: Optional[bool] = None

    @model_validator(mode="after")
    def _rotation_fields(self) -> "GateModel":
        if self.kind in ("rk", "crk"):
            if self.k is None:
                raise ValueError(f"gate kind {self.kind!r} requires field 'k'")
            if self.inverted is None:
                self.inverted = False
        elif self.k is not None or self.inverted is not None:
            raise ValueError(f"gate kind {self.kind!r} takes no 'k' or 'inverted' fields")
        return self

    @model_serializer
    def _to_wire_format(self) -> dict:
        out: dict = {"kind": self.kind, "qubits": self.qubits}
        if self.kind in ("rk", "crk"):
            out["k"] = self.k
            out["inverted"] = self.inverted
        return out


class CircuitModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    num_qubits: int
    label: str
    ops: list[GateModel]


class GateCountsModel(BaseModel):
    hadamards: int
    rotations: int
    cnots: int
    toffolis: int
    total: int
    qubits: int


class AddRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=1, description="bit width of the addition")
    a: int = Field(ge=0)
    b: int = Field(ge=0)
    mode: ModeName = "constant"
    cutoff: CutoffValue = None
    emit_circuit: bool = False


class AddResponse(BaseModel):
    command: Literal["add"] = "add"
    params: AddRequest
    sum: int
    qubits: int
    cutoff_resolved: Optional[int] = None
    counts: GateCountsModel
    circuit: Optional[CircuitModel] = None
    elapsed_ms: float


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: Union[int, str] = Field(description="single width like 3 or an inclusive range like 1..5")
    mode: ModeName = "constant"
    cutoff: CutoffValue = None
    samples: Optional[int] = Field(default=None, ge=1)
    seed: int = 0


class FailureCase(BaseModel):
    n: int
    a: int
    b: int
    expected: int
    got: Optional[int] = None
    reason: str


class PerWidthResult(BaseModel):
    n: int
    cases: int
    failures: int
    cutoff_resolved: Optional[int] = None
    mean_success_probability: Optional[float] = None
    min_success_probability: Optional[float] = None


class VerifyResponse(BaseModel):
    command: Literal["verify"] = "verify"
    params: VerifyRequest
    cases: int
    failures: int
    first_failure: Optional[FailureCase] = None
    per_width: list[PerWidthResult]
    mean_success_probability: Optional[float] = None
    elapsed_ms: float


class StatsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=1, le=4096)
    cutoff: CutoffValue = None


class StatsResponse(BaseModel):
    command: Literal["stats"] = "stats"
    params: StatsRequest
    n: int
    cutoff_resolved: Optional[int] = None
    qft_hadamards: int
    qft_rotations: int
    qft_total: int
    aqft_rotations: Optional[int] = None
    constant_adder_rotations_max: int
    two_register_rotations: int
    ripple_toffolis: int
    ripple_cnots: int
    ripple_total: int
    qubits_constant: int
    qubits_two_register: int
    qubits_ripple: int
    adder_depth: int
    depth_source: Literal["scheduled", "formula"]
    counts_verified: bool
    elapsed_ms: float


class ScheduleRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    builder: str
    n: int = Field(ge=1)
    b: Optional[int] = Field(default=None, ge=0)
    cutoff: CutoffValue = None
    commuting: bool = False
    seed: int = 0


class ScheduleResponse(BaseModel):
    command: Literal["schedule"] = "schedule"
    params: ScheduleRequest
    source: str
    num_qubits: int
    gates: int
    depth: int
    verified: Optional[bool] = None
    slices: list[list[GateModel]]
    elapsed_ms: float


class DumpRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    builder: str
    n: int = Field(ge=1)
    b: Optional[int] = Field(default=None, ge=0)
    cutoff: CutoffValue = None


class DumpResponse(BaseModel):
    command: Literal["dump"] = "dump"
    params: DumpRequest
    circuit: CircuitModel
    counts: GateCountsModel
    elapsed_ms: float


class ErrorDetail(BaseModel):
    type: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorDetail


class HealthResponse(BaseModel):
    status: Literal["ok"] = "ok"
    version: str
    max_qubits: int
