"""Exact models of the regular n-gon and double n-gon surfaces."""

from scripts.ngs.surface.flow import (
    FlowPath,
    FlowPiece,
    Param,
    develop,
    first_exit,
    trace_separatrix,
)
from scripts.ngs.surface.geometry import (
    Location,
    LocationKind,
    PlanarPoint,
    Polygon,
    cross,
    dot,
    locate,
    unit_vector,
)
from scripts.ngs.surface.marked import (
    MarkedPointSet,
    SurfacePoint,
    canonicalize,
    center_point,
    cone_point,
    copies,
    hyperelliptic_image,
    is_cone_point,
    midpoint,
    vertex_point,
    weierstrass_points,
)
from scripts.ngs.surface.model import (
    ConeClass,
    SurfaceDef,
    build_surface,
    expected_genus,
    gauss_bonnet_defect,
    genus,
    translation_automorphisms,
)
from scripts.ngs.surface.pointspec import parse_point, parse_vector

__all__ = [
    "ConeClass",
    "FlowPath",
    "FlowPiece",
    "Location",
    "LocationKind",
    "MarkedPointSet",
    "Param",
    "PlanarPoint",
    "Polygon",
    "SurfaceDef",
    "SurfacePoint",
    "build_surface",
    "canonicalize",
    "center_point",
    "cone_point",
    "copies",
    "cross",
    "develop",
    "dot",
    "expected_genus",
    "first_exit",
    "gauss_bonnet_defect",
    "genus",
    "hyperelliptic_image",
    "is_cone_point",
    "locate",
    "midpoint",
    "parse_point",
    "parse_vector",
    "trace_separatrix",
    "translation_automorphisms",
    "unit_vector",
    "vertex_point",
    "weierstrass_points",
]
