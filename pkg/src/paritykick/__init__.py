"""Exact simulation of parity-kick entanglement preservation in small spin chains."""
from .closed_form import ClosedFormParams
from .dynamics import KickSchedule, TrajectoryRow, cyclic_operator, sample_trajectory, state_at
from .entanglement import concurrence_vector, pairwise_concurrence, pairwise_concurrences
from .errors import (
    AnticommutationError,
    CapacityError,
    ContractViolation,
    DimensionError,
    ValidationError,
)
from .hilbert import apply, eigensolve, ghz_state, propagator
from .pauli import PauliString, PauliSum, anticommutant, anticommutes, multiply, to_matrix

__version__ = "0.1.0"
