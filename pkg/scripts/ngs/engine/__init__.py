"""Report assembly and SVG rendering."""

from scripts.ngs.engine.builder import (
    blocked_report,
    classify_report,
    cylinders_report,
    heights_report,
    orbit_report,
    section4_report,
    segments_report,
    sine_ratio_report,
    surface_report,
    triangle_report,
)
from scripts.ngs.engine.context import (
    cylinders_svg_context,
    exact_number,
    exclusion_svg_context,
    point_model,
    prepare_context,
    segments_svg_context,
    surface_svg_context,
)
from scripts.ngs.engine.core import create_env, format_number
from scripts.ngs.engine.exceptions import RenderingError, TemplateNotFoundError
from scripts.ngs.engine.renderer import Renderer

__all__ = [
    "Renderer",
    "RenderingError",
    "TemplateNotFoundError",
    "blocked_report",
    "classify_report",
    "create_env",
    "cylinders_report",
    "cylinders_svg_context",
    "exact_number",
    "exclusion_svg_context",
    "format_number",
    "heights_report",
    "orbit_report",
    "point_model",
    "prepare_context",
    "section4_report",
    "segments_report",
    "segments_svg_context",
    "sine_ratio_report",
    "surface_report",
    "surface_svg_context",
    "triangle_report",
]
