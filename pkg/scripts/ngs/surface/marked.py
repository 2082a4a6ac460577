"""Surface points, canonical representatives, and the marked points of an n-gon surface.

A boundary point has one copy per polygon side (or corner) it lies on; its
canonical representative is the copy with the least (polygon_id, x, y) under
exact comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key, lru_cache

from scripts.ngs.errors import DomainInputError
from scripts.ngs.surface.geometry import (
    LocationKind,
    PlanarPoint,
    compare_points,
    locate,
)
from scripts.ngs.surface.model import SurfaceDef, genus


@dataclass(frozen=True)
class SurfacePoint:
    """A point of the surface in the coordinates of one polygon."""

    polygon_id: int
    position: PlanarPoint
    canonical: bool = field(default=True, compare=False)

    def shadow(self) -> tuple[int, float, float]:
        x, y = self.position.shadow()
        return self.polygon_id, x, y

    def __str__(self) -> str:
        return f"P{self.polygon_id}{self.position}"


def compare_surface_points(a: SurfacePoint, b: SurfacePoint) -> int:
    """Total order on representatives: polygon id, then exact (x, y)."""
    if a.polygon_id != b.polygon_id:
        return -1 if a.polygon_id < b.polygon_id else 1
    return compare_points(a.position, b.position)


point_key = cmp_to_key(compare_surface_points)


def sort_points(points: list[SurfacePoint] | set[SurfacePoint]) -> list[SurfacePoint]:
    return sorted(points, key=point_key)


def copies(s: SurfaceDef, polygon_id: int, position: PlanarPoint) -> list[SurfacePoint]:
    """Every polygon copy of a point, including the given one.

    Raises:
        PointOutsideError: If position is outside the stated polygon.
    """
    poly = s.polygon(polygon_id)
    location = locate(poly, position)
    if location.kind is LocationKind.INTERIOR:
        return [SurfacePoint(polygon_id, position, canonical=False)]
    if location.kind is LocationKind.EDGE:
        assert location.index is not None
        edge = (polygon_id, location.index)
        partner, _ = s.edge_pairs[edge]
        return [
            SurfacePoint(polygon_id, position, canonical=False),
            SurfacePoint(partner, position + s.translations[edge], canonical=False),
        ]
    assert location.index is not None
    cone = s.corner_class((polygon_id, location.index))
    return [
        SurfacePoint(q, s.polygon(q).vertex(k), canonical=False) for q, k in cone.corners
    ]


def canonicalize(s: SurfaceDef, polygon_id: int, position: PlanarPoint) -> SurfacePoint:
    """Canonical representative of the point at position in polygon polygon_id.

    Interior points map to themselves; boundary points map to the least of
    their identified copies.

    Raises:
        PointOutsideError: If position is outside the stated polygon.
    """
    least = min(copies(s, polygon_id, position), key=point_key)
    return SurfacePoint(least.polygon_id, least.position)


def is_cone_point(s: SurfaceDef, p: SurfacePoint) -> bool:
    return locate(s.polygon(p.polygon_id), p.position).kind is LocationKind.VERTEX


def hyperelliptic_image(s: SurfaceDef, p: SurfacePoint) -> SurfacePoint:
    """Image under the involution with derivative -Id.

    For n even it is the point reflection of the polygon; for n odd it also
    exchanges the two polygons, the second being the point reflection of the first.
    """
    target = 0 if not s.is_double else 1 - p.polygon_id
    return canonicalize(s, target, -p.position)


def center_point(s: SurfaceDef, polygon_id: int = 0) -> SurfacePoint:
    return SurfacePoint(polygon_id, PlanarPoint.origin(s.conductor))


def midpoint(s: SurfaceDef, k: int, polygon_id: int = 0) -> SurfacePoint:
    """Canonical midpoint of edge k."""
    return canonicalize(s, polygon_id, s.polygon(polygon_id).midpoint(k))


def vertex_point(s: SurfaceDef, k: int, polygon_id: int = 0) -> SurfacePoint:
    """Canonical representative of vertex k."""
    return canonicalize(s, polygon_id, s.polygon(polygon_id).vertex(k))


def cone_point(s: SurfaceDef, index: int) -> SurfacePoint:
    """Canonical representative of cone class index."""
    if not 0 <= index < len(s.cone_classes):
        raise DomainInputError(
            f"cone index {index} out of range 0..{len(s.cone_classes) - 1} for n={s.n}"
        )
    p, k = s.cone_classes[index].corners[0]
    return vertex_point(s, k, p)


@dataclass(frozen=True)
class MarkedPointSet:
    """Weierstrass points, cone points and the distinguished point P_n.

    Attributes:
        weierstrass: Fixed points of the hyperelliptic involution, sorted.
        cone: Cone points, one per class, sorted.
        center: The polygon center (n even) or the unique cone point (n odd).
    """

    weierstrass: tuple[SurfacePoint, ...]
    cone: tuple[SurfacePoint, ...]
    center: SurfacePoint

    @property
    def marked(self) -> tuple[SurfacePoint, ...]:
        """Weierstrass and cone points together, sorted and without repeats."""
        return tuple(sort_points(set(self.weierstrass) | set(self.cone)))

    @property
    def periodic(self) -> tuple[SurfacePoint, ...]:
        """Weierstrass points that are not cone points."""
        cones = set(self.cone)
        return tuple(p for p in self.weierstrass if p not in cones)


@lru_cache(maxsize=None)
def weierstrass_points(s: SurfaceDef) -> MarkedPointSet:
    """Fixed points of hyperelliptic_image.

    The candidates are polygon centers, edge midpoints and vertices; the
    fixed ones number 2g + 2.
    """
    candidates: set[SurfacePoint] = set()
    for p, poly in enumerate(s.polygons):
        candidates.add(center_point(s, p))
        for k in range(s.n):
            candidates.add(midpoint(s, k, p))
            candidates.add(vertex_point(s, k, p))

    fixed = [c for c in candidates if hyperelliptic_image(s, c) == c]
    cones = sort_points({cone_point(s, i) for i in range(len(s.cone_classes))})
    center = center_point(s) if not s.is_double else cones[0]

    weierstrass = sort_points(fixed)
    if len(weierstrass) != 2 * genus(s) + 2:
        raise ArithmeticError(
            f"found {len(weierstrass)} Weierstrass points for n={s.n}, "
            f"expected {2 * genus(s) + 2}"
        )
    return MarkedPointSet(weierstrass=tuple(weierstrass), cone=tuple(cones), center=center)
