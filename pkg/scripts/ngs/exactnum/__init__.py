"""Exact cyclotomic arithmetic and the sine-ratio decision procedure."""

from scripts.ngs.exactnum.field import CycElt, is_rational, reduce
from scripts.ngs.exactnum.poly import (
    CycPoly,
    cyclotomic_poly,
    euler_phi,
    g_of,
    gcdex,
)
from scripts.ngs.exactnum.section4 import (
    Section4Entry,
    Section4Report,
    match_four_term_shape,
    verify_section4,
)
from scripts.ngs.exactnum.sines import (
    cos_exact,
    rational_sine_ratios,
    sin_exact,
    sine_ratio_rational,
)

__all__ = [
    "CycElt",
    "CycPoly",
    "Section4Entry",
    "Section4Report",
    "cos_exact",
    "cyclotomic_poly",
    "euler_phi",
    "g_of",
    "gcdex",
    "is_rational",
    "match_four_term_shape",
    "rational_sine_ratios",
    "reduce",
    "sin_exact",
    "sine_ratio_rational",
    "verify_section4",
]
