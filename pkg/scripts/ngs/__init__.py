"""ngon-surfaces: exact computations on regular n-gon translation surfaces."""

from scripts.ngs.errors import (
    DomainInputError,
    GroupActionError,
    HypothesisFailure,
    NonPeriodicDirectionError,
    NotParallelError,
    PointOutsideError,
    RefoldError,
    SignUndecidedError,
    SingularityHitError,
    SurfaceError,
)

__all__ = [
    "DomainInputError",
    "GroupActionError",
    "HypothesisFailure",
    "NonPeriodicDirectionError",
    "NotParallelError",
    "PointOutsideError",
    "RefoldError",
    "SignUndecidedError",
    "SingularityHitError",
    "SurfaceError",
]
