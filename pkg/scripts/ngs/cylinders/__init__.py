"""Cylinder decompositions, heights and rational-height tests."""

from scripts.ngs.cylinders.decompose import (
    Cylinder,
    Decomposition,
    SaddleConnection,
    Strip,
    decompose,
)
from scripts.ngs.cylinders.heights import (
    DIRECTION_NAMES,
    RatioEntry,
    canonical_direction,
    central_cylinder,
    cylinders_containing,
    expected_heights,
    height_fraction,
    height_ratio,
    height_ratio_rational,
    ratio_table,
    rational_height,
    twist_multiplicities,
)

__all__ = [
    "DIRECTION_NAMES",
    "Cylinder",
    "Decomposition",
    "RatioEntry",
    "SaddleConnection",
    "Strip",
    "canonical_direction",
    "central_cylinder",
    "cylinders_containing",
    "decompose",
    "expected_heights",
    "height_fraction",
    "height_ratio",
    "height_ratio_rational",
    "ratio_table",
    "rational_height",
    "twist_multiplicities",
]
