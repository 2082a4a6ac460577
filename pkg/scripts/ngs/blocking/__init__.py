"""Finite blocking on the n-gon surfaces and on the unfolded right triangle."""

from scripts.ngs.blocking.queries import BlockingQuery, BlockingVerdict, blocking_set, is_blocked
from scripts.ngs.blocking.segments import DevelopedSegment, enumerate_segments, holonomies
from scripts.ngs.blocking.triangle import (
    VERTEX_NAMES,
    PreimageVerdict,
    TriangleModel,
    TriangleReport,
    triangle_blocked_pairs,
    triangle_model,
)

__all__ = [
    "VERTEX_NAMES",
    "BlockingQuery",
    "BlockingVerdict",
    "DevelopedSegment",
    "PreimageVerdict",
    "TriangleModel",
    "TriangleReport",
    "blocking_set",
    "enumerate_segments",
    "holonomies",
    "is_blocked",
    "triangle_blocked_pairs",
    "triangle_model",
]
