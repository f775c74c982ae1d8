"""Homological invariants of Nakayama algebras given by Kupisch series."""

from .algebra import (
    CYCLIC,
    LINEAR,
    KupischSeries,
    canonicalize,
    cyclic,
    descent_normal_form,
    enumerate_series,
    format_series,
    has_simple_projective,
    is_selfinjective,
    linear,
    local_size_at,
    opposite,
    parse_series,
    quotient_by_vertex,
    trace_is_projective,
    validate,
)
from .errors import (
    ConstraintViolation,
    CutoffExceeded,
    EmptySeries,
    InvalidModulePoint,
    InvalidOrdering,
    NakayamaError,
    PreconditionInfiniteGldim,
    UnsupportedFormat,
    VertexOutOfRange,
)
from .homology import (
    INFINITE,
    ModulePoint,
    ResolutionTrace,
    cosyzygy,
    dim_tables,
    finitistic_dimension,
    global_dimension,
    inj_dim,
    proj_dim,
    resolve,
    syzygy,
)
from .psi import (
    PsiProfile,
    bound_report,
    finite_gldim_criterion,
    inj_env_length,
    psi_profile,
)
from .stratify import (
    StandardLengths,
    StratClass,
    classify,
    has_proper_standard_filtration,
    has_standard_filtration,
    is_quasi_hereditary,
    is_ss_with_order,
    pattern_match,
    ss_search,
    standard_lengths,
)

__version__ = "0.1.0"
