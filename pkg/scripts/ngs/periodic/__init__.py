"""Periodic-point classification for the regular n-gon surfaces."""

from scripts.ngs.periodic.candidates import CandidateSegment, candidate_segments
from scripts.ngs.periodic.classify import (
    PointCertificate,
    Verdict,
    classify,
    interior_point_excluded,
    periodic_points,
    sample_parameters,
)
from scripts.ngs.periodic.exclusion import (
    TWIST_WORD,
    ExclusionConfig,
    SegmentPath,
    check_endpoint_heights,
    exclusion_config,
    exclusion_directions,
)

__all__ = [
    "TWIST_WORD",
    "CandidateSegment",
    "ExclusionConfig",
    "PointCertificate",
    "SegmentPath",
    "Verdict",
    "candidate_segments",
    "check_endpoint_heights",
    "classify",
    "exclusion_config",
    "exclusion_directions",
    "interior_point_excluded",
    "periodic_points",
    "sample_parameters",
]
