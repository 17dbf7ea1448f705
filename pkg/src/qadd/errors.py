"""Exception types shared across the package."""


class QaddError(Exception):
    """Base class for all domain errors raised by qadd."""


class ValueOutOfRange(QaddError):
    """An integer argument does not fit the register it targets."""


class RegisterTooLarge(QaddError):
    """Requested register exceeds the simulator's qubit limit."""


class QubitIndexError(QaddError):
    """A gate references a qubit index that is invalid for its context."""


class DimensionMismatch(QaddError):
    """Two objects operate on different qubit counts."""


class NotABasisState(QaddError):
    """No single basis state holds enough probability for a readout."""


class AncillaNotRestored(QaddError):
    """A circuit that must return work qubits to zero left them dirty."""


class NonCommutingGates(QaddError):
    """Commuting-mode scheduling was requested for a non-diagonal circuit."""


class CircuitFormatError(QaddError):
    """A serialized circuit or gate object does not match the schema."""


class InvalidRequest(QaddError):
    """A command or builder was called with an unusable parameter combination."""
