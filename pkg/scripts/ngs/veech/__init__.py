"""Veech-group generators, their action on points, and direction reduction."""

from scripts.ngs.veech.action import OrbitResult, OrbitStatus, act, orbit, shear_base
from scripts.ngs.veech.cusps import CuspReduction, cusp_direction, cusp_lines, reduce_direction
from scripts.ngs.veech.matrices import (
    GroupWord,
    Mat2,
    all_letters,
    generator_names,
    generators,
    letter_matrix,
    parabolic,
    rotation,
    translation_length,
)

__all__ = [
    "CuspReduction",
    "GroupWord",
    "Mat2",
    "OrbitResult",
    "OrbitStatus",
    "act",
    "all_letters",
    "cusp_direction",
    "cusp_lines",
    "generator_names",
    "generators",
    "letter_matrix",
    "orbit",
    "parabolic",
    "reduce_direction",
    "rotation",
    "shear_base",
    "translation_length",
]
