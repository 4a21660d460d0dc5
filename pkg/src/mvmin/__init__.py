"""Dynamical equivalence and minimization of multi-valued logical network models."""

from .completion import (
    add_edge,
    canonize,
    complete,
    complete_step,
    equivalent_by_completion,
    is_canonical,
)
from .dynamics import TransitionSystem, async_ts, derivative, sync_ts, ts_equal, update
from .errors import (
    CapacityError,
    ContractError,
    DomainError,
    ModelError,
    ParseError,
    StructuralError,
)
from .fileformat import export_ts, parse_document, parse_model, serialize_model
from .minimization import equivalent_by_minimization, minimize, minimize_step
from .model import (
    ActivityInterval,
    Context,
    Edge,
    Model,
    Parametrization,
    RegulatoryGraph,
    activity_intervals,
    context_of,
    contexts,
    extended_thresholds,
    limits,
    validate,
)
from .normalization import (
    mtv,
    normalize,
    observability_report,
    observable_in_param,
    observable_in_ts,
)

__version__ = "0.1.0"
