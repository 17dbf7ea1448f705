"""Quantum addition circuits: construction, simulation, scheduling, verification.

Two adder families are provided:

* a classical-style reversible ripple-carry adder (3n+1 qubits), and
* Fourier-basis adders (n or 2n qubits) that rotate the transform of a
  into the transform of a+b, exactly or with a rotation-order cutoff.

A commuting-gate scheduler packs the diagonal adders into parallel time
slices.  The ``qadd.service`` subpackage exposes everything over HTTP;
the ``qadd`` command line is a thin client of the same handlers.
"""

from .adder import (
    AddMode,
    build_add_pipeline,
    build_constant_adder,
    build_two_register_adder,
    fourier_add,
    fourier_add_state,
)
from .circuit import Circuit, GateCounts, RegisterLayout, counts, inverse, run
from .errors import (
    AncillaNotRestored,
    CircuitFormatError,
    DimensionMismatch,
    InvalidRequest,
    NonCommutingGates,
    NotABasisState,
    QaddError,
    QubitIndexError,
    RegisterTooLarge,
    ValueOutOfRange,
)
from .fourier import (
    auto_cutoff,
    build_inverse_qft,
    build_qft,
    phi_product_state,
    qft_counts,
    resolve_cutoff,
)
from .gates import (
    CNOT,
    ControlledRk,
    GateOp,
    Hadamard,
    Rk,
    Toffoli,
    carry_ops,
    gate_matrix,
    sum_ops,
)
from .ripple import build_ripple_adder, ripple_add
from .scheduler import Schedule, ScheduleCheck, depth, schedule, verify_schedule
from .statevec import (
    StateVector,
    apply,
    apply_sequence,
    basis_state,
    inner_product,
    max_amplitude_deviation,
    max_qubits,
    phase,
    probability,
    readout,
)

__version__ = "0.1.0"
