"""Exception hierarchy shared across the package."""


class ParityKickError(Exception):
    """Base class for all package errors."""


class ValidationError(ParityKickError, ValueError):
    """Bad input: malformed parameters, unknown config keys, out-of-range values."""


class DimensionError(ValidationError):
    """Operands act on different numbers of qubits or have mismatched shapes."""


class CapacityError(ValidationError):
    """Request exceeds the dense/enumeration qubit cap."""


class ContractViolation(ParityKickError, RuntimeError):
    """A numerical contract failed (anti-commutation, cycle identity, realness)."""


class AnticommutationError(ContractViolation):
    """Kick operator does not anti-commute with the Hamiltonian.

    ``term`` holds the offending ``(coefficient, PauliString)`` when known.
    """

    def __init__(self, message, term=None):
        super().__init__(message)
        self.term = term
