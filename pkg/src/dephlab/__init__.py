"""Distance measures between qubit states under exact pure dephasing with
correlated initial qubit-environment states."""
from .distances import (
    DistanceRecord,
    affinity,
    all_distances,
    bures_distance,
    fidelity,
    hellinger_distance,
    hs_distance,
    js_distance,
    trace_distance,
)
from .errors import ConfigError, ConvergenceError, DephlabError, DomainError, InvalidStateError
from .model_a import ModelAParams, dephasing_a, rho_a
from .model_b import Coherent, ModelBParams, Number, dephasing_b, rho_b
from .qstate import BlochVector, QubitState, from_bloch, to_bloch, validate, von_neumann_entropy

__version__ = "0.1.0"
