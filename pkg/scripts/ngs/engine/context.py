"""Conversion of exact results into report models and SVG template contexts.

Exact values keep their rational form and coefficient vector; every figure
uses float shadows only. Polygon 1 of a double n-gon is drawn to the right
of polygon 0.
"""

from __future__ import annotations

from enum import Enum
from typing import Any, cast

from pydantic import BaseModel

from scripts.ngs.blocking.segments import DevelopedSegment
from scripts.ngs.cylinders.decompose import Cylinder, Decomposition
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.models.reports import ExactNumber, ExactVector, PointModel
from scripts.ngs.periodic.exclusion import ExclusionConfig
from scripts.ngs.surface.geometry import PlanarPoint
from scripts.ngs.surface.marked import SurfacePoint, weierstrass_points
from scripts.ngs.surface.model import SurfaceDef

POLYGON_GAP = 2.4
PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2", "#edc948")

Point2 = tuple[float, float]


def exact_number(x: CycElt) -> ExactNumber:
    q = x.is_rational()
    return ExactNumber(
        rational=None if q is None else str(q),
        conductor=x.conductor,
        coefficients=x.to_strings(),
        value=float(x),
    )


def exact_vector(v: PlanarPoint) -> ExactVector:
    return ExactVector(x=exact_number(v.x), y=exact_number(v.y))


def point_model(p: SurfacePoint, label: str = "") -> PointModel:
    _, x, y = p.shadow()
    return PointModel(polygon=p.polygon_id, x=x, y=y, label=label or str(p))


def label_points(s: SurfaceDef, points: tuple[SurfacePoint, ...]) -> list[PointModel]:
    """Point models labelled W (Weierstrass), C (cone) or WC (both)."""
    marked = weierstrass_points(s)
    weierstrass, cones = set(marked.weierstrass), set(marked.cone)
    models = []
    for p in points:
        tag = ("W" if p in weierstrass else "") + ("C" if p in cones else "")
        models.append(point_model(p, f"{tag} {p}".strip()))
    return models


def _convert_enums(obj: Any) -> Any:
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {key: _convert_enums(value) for key, value in obj.items()}
    if isinstance(obj, list):
        return [_convert_enums(item) for item in obj]
    return obj


def prepare_context(model: BaseModel) -> dict[str, Any]:
    """JSON-ready dictionary of a report, with the schema tag under its alias."""
    data = model.model_dump(mode="json", by_alias=True)
    return cast(dict[str, Any], _convert_enums(data))


def _placed(s: SurfaceDef, polygon_id: int, point: Point2) -> Point2:
    shift = POLYGON_GAP * polygon_id
    return point[0] + shift, point[1]


def _polygon_shapes(s: SurfaceDef) -> list[list[Point2]]:
    return [
        [_placed(s, p, v.shadow()) for v in poly.vertices] for p, poly in enumerate(s.polygons)
    ]


def _view_box(s: SurfaceDef, margin: float = 0.2) -> tuple[float, float, float, float]:
    width = 2.0 + POLYGON_GAP * (len(s.polygons) - 1)
    return (-1.0 - margin, -1.0 - margin, width + 2 * margin, 2.0 + 2 * margin)


def _marker(s: SurfaceDef, p: SurfacePoint, kind: str) -> dict[str, Any]:
    _, x, y = p.shadow()
    px, py = _placed(s, p.polygon_id, (x, y))
    return {"x": px, "y": py, "kind": kind, "label": str(p)}


def _markers(s: SurfaceDef) -> list[dict[str, Any]]:
    marked = weierstrass_points(s)
    cones = set(marked.cone)
    markers = [_marker(s, p, "cone") for p in marked.cone]
    markers.extend(_marker(s, p, "weierstrass") for p in marked.weierstrass if p not in cones)
    return markers


def surface_svg_context(s: SurfaceDef) -> dict[str, Any]:
    return {
        "title": f"regular {s.n}-gon surface" + (" (double)" if s.is_double else ""),
        "view_box": _view_box(s),
        "polygons": _polygon_shapes(s),
        "markers": _markers(s),
    }


def _clip(polygon: list[Point2], normal: Point2, offset: float, keep_above: bool) -> list[Point2]:
    """Clip a convex polygon to cross(normal, z) >= offset (or <= offset)."""

    def side(z: Point2) -> float:
        value = normal[0] * z[1] - normal[1] * z[0] - offset
        return value if keep_above else -value

    result: list[Point2] = []
    for i, a in enumerate(polygon):
        b = polygon[(i + 1) % len(polygon)]
        sa, sb = side(a), side(b)
        if sa >= 0:
            result.append(a)
        if (sa >= 0) != (sb >= 0):
            t = sa / (sa - sb)
            result.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    return result


def _strip_shapes(s: SurfaceDef, c: Cylinder) -> list[list[Point2]]:
    v = c.direction.shadow()
    shapes = []
    for strip in c.strips:
        poly = [vertex.shadow() for vertex in s.polygon(strip.polygon_id).vertices]
        region = _clip(poly, v, float(strip.lower), keep_above=True)
        region = _clip(region, v, float(strip.upper), keep_above=False)
        if len(region) >= 3:
            shapes.append([_placed(s, strip.polygon_id, z) for z in region])
    return shapes


def _cylinder_layer(s: SurfaceDef, c: Cylinder, color: str, label: str) -> dict[str, Any]:
    return {"index": c.index, "label": label, "color": color, "strips": _strip_shapes(s, c)}


def cylinders_svg_context(d: Decomposition) -> dict[str, Any]:
    s = d.surface
    x, y = d.direction.shadow()
    return {
        "title": f"cylinders of the {s.n}-gon surface in direction ({x:.6g}, {y:.6g})",
        "view_box": _view_box(s),
        "polygons": _polygon_shapes(s),
        "markers": _markers(s),
        "cylinders": [
            _cylinder_layer(s, c, PALETTE[c.index % len(PALETTE)], f"C{c.index}")
            for c in d.cylinders
        ],
    }


def exclusion_svg_context(configs: list[ExclusionConfig]) -> dict[str, Any]:
    """Candidate segments, the tested paths and their three cylinders."""
    if not configs:
        raise ValueError("at least one exclusion configuration is needed")
    s = configs[0].tested.surface
    panels = []
    for cfg in configs:
        seg = cfg.segment
        start = _placed(s, seg.polygon_id, seg.origin.shadow())
        end = _placed(s, seg.polygon_id, (seg.origin + seg.holonomy).shadow())
        tested = []
        for piece in cfg.tested.pieces:
            u = cfg.tested.holonomy
            a = piece.point_at(u, piece.s_in).shadow()
            b = piece.point_at(u, piece.s_out).shadow()
            tested.append((_placed(s, piece.polygon_id, a), _placed(s, piece.polygon_id, b)))
        panels.append(
            {
                "segment": seg.index,
                "title": f"segment {seg.index} ({seg.line})",
                "candidate": (start, end),
                "tested": tested,
                "crossing": _placed(s, cfg.r.polygon_id, cfg.r.position.shadow()),
                "cylinders": [
                    _cylinder_layer(s, cfg.c1, PALETTE[0], "C1"),
                    _cylinder_layer(s, cfg.c2, PALETTE[1], "C2"),
                    _cylinder_layer(s, cfg.c3, PALETTE[2], "C3"),
                ],
            }
        )
    return {
        "title": f"three-cylinder configurations on the {s.n}-gon surface",
        "view_box": _view_box(s),
        "polygons": _polygon_shapes(s),
        "markers": _markers(s),
        "panels": panels,
    }


def segments_svg_context(
    s: SurfaceDef,
    segments: list[DevelopedSegment],
    blocking: tuple[SurfacePoint, ...],
    radius: float,
) -> dict[str, Any]:
    """Segments drawn from p at the origin of the developed plane."""
    reach = radius * s.diameter
    return {
        "title": f"segments within radius {radius:g} on the {s.n}-gon surface",
        "view_box": (-reach - 0.2, -reach - 0.2, 2 * reach + 0.4, 2 * reach + 0.4),
        "reach": reach,
        "segments": [
            {"end": seg.holonomy.shadow(), "blocked": not seg.avoids(blocking)}
            for seg in segments
        ],
    }
