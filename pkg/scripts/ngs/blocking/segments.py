"""Straight segments between two points, found by developing polygons in the plane.

Copies of the polygons are laid out around a copy of p by following edge
gluings. Each copy carries the wedge of directions from p that reach it
through the edges crossed so far, so only copies visible from p are
developed. Every copy of q inside a visible copy gives a candidate holonomy,
which is then certified by flowing from p with that exact holonomy.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from scripts.ngs.errors import DomainInputError, SingularityHitError
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.surface.flow import FlowPiece, develop
from scripts.ngs.surface.geometry import (
    LocationKind,
    PlanarPoint,
    compare_points,
    cross,
    dot,
    locate,
)
from scripts.ngs.surface.marked import (
    SurfacePoint,
    canonicalize,
    copies,
    weierstrass_points,
)
from scripts.ngs.surface.model import DirectedEdge, SurfaceDef


@dataclass(frozen=True)
class DevelopedSegment:
    """A singularity-free straight segment from p to q.

    Attributes:
        start: Copy of p the segment leaves from.
        holonomy: Exact displacement vector.
        length_sq: Exact squared length.
        crossings: Directed edges crossed, in order.
        pieces: Polygon pieces of the developed path.
        passes_through: Marked points met strictly inside the segment.
    """

    start: SurfacePoint
    holonomy: PlanarPoint
    length_sq: CycElt
    crossings: tuple[DirectedEdge, ...]
    pieces: tuple[FlowPiece, ...]
    passes_through: tuple[SurfacePoint, ...]

    @property
    def length(self) -> float:
        return math.sqrt(float(self.length_sq))

    def avoids(self, points: tuple[SurfacePoint, ...] | set[SurfacePoint]) -> bool:
        """True when no point of points lies inside the segment."""
        return not set(self.passes_through) & set(points)


@dataclass(frozen=True)
class _Copy:
    """A developed polygon copy and the wedge of directions from p reaching it.

    sector is the copy of p whose polygon the wedge leaves from.
    """

    polygon_id: int
    offset: PlanarPoint
    right: PlanarPoint | None
    left: PlanarPoint | None
    sector: SurfacePoint

    def sees(self, h: PlanarPoint) -> bool:
        if self.right is None or self.left is None:
            return True
        return cross(self.right, h).sign() >= 0 and cross(h, self.left).sign() >= 0


def _narrow(
    right: PlanarPoint | None, left: PlanarPoint | None, a: PlanarPoint, b: PlanarPoint
) -> tuple[PlanarPoint, PlanarPoint] | None:
    """Intersect the wedge (right, left) with (a, b); None when no open wedge remains."""
    if right is not None and cross(right, a).sign() < 0:
        a = right
    if left is not None and cross(b, left).sign() < 0:
        b = left
    if cross(a, b).sign() <= 0:
        return None
    return a, b


def _distance_to_edge(a: PlanarPoint, b: PlanarPoint) -> float:
    """Float distance from the origin to the segment [a, b]."""
    ax, ay = a.shadow()
    bx, by = b.shadow()
    dx, dy = bx - ax, by - ay
    norm = dx * dx + dy * dy
    t = 0.0 if norm == 0 else min(1.0, max(0.0, -(ax * dx + ay * dy) / norm))
    return math.hypot(ax + t * dx, ay + t * dy)


def _star(s: SurfaceDef, root: SurfacePoint) -> list[_Copy]:
    """The sectors around p, developed from root across the edges through p.

    An interior point has one sector with no wedge. An edge point has the
    half planes on either side of its edge. A cone point has one corner per
    polygon vertex of its class, reached by crossing incoming edges in turn.
    """
    origin = PlanarPoint.origin(s.conductor)
    poly = s.polygon(root.polygon_id)
    location = locate(poly, root.position)
    if location.kind is LocationKind.INTERIOR:
        return [_Copy(root.polygon_id, origin, None, None, root)]
    assert location.index is not None
    if location.kind is LocationKind.EDGE:
        edge = (root.polygon_id, location.index)
        e = poly.edge(location.index)
        partner, _ = s.edge_pairs[edge]
        shift = s.translations[edge]
        across = SurfacePoint(partner, root.position + shift, canonical=False)
        return [
            _Copy(root.polygon_id, origin, e, -e, root),
            _Copy(partner, -shift, -e, e, across),
        ]

    corner = (root.polygon_id, location.index)
    polygon_id, k, offset = *corner, origin
    sectors: list[_Copy] = []
    for _ in range(len(s.polygons) * s.n):
        poly = s.polygon(polygon_id)
        at = SurfacePoint(polygon_id, poly.vertex(k), canonical=False)
        sectors.append(_Copy(polygon_id, offset, poly.edge(k), -poly.edge(k - 1), at))
        incoming = (polygon_id, (k - 1) % len(poly))
        offset = offset - s.translations[incoming]
        polygon_id, k = s.edge_pairs[incoming]
        if (polygon_id, k) == corner:
            return sectors
    raise ArithmeticError(f"the corners around {root} do not close up")


def _develop_copies(
    s: SurfaceDef, root: SurfacePoint, reach: float, node_cap: int
) -> list[_Copy]:
    """Every polygon copy visible from root within distance reach."""
    base = root.position
    queue = deque(_star(s, root))
    found: list[_Copy] = []
    while queue:
        current = queue.popleft()
        found.append(current)
        if len(found) > node_cap:
            raise DomainInputError(f"more than {node_cap} developed copies; lower the radius")
        poly = s.polygon(current.polygon_id)
        for j in range(len(poly)):
            a = poly.vertex(j) + current.offset - base
            b = poly.vertex(j + 1) + current.offset - base
            # only edges with p strictly on their inner side are crossed outward
            if cross(poly.edge(j), -a).sign() <= 0:
                continue
            if _distance_to_edge(a, b) > reach:
                continue
            wedge = _narrow(current.right, current.left, a, b)
            if wedge is None:
                continue
            edge = (current.polygon_id, j)
            partner, _ = s.edge_pairs[edge]
            offset = current.offset - s.translations[edge]
            queue.append(_Copy(partner, offset, *wedge, current.sector))
    return found


def _root(s: SurfaceDef, p: SurfacePoint, root: int) -> SurfacePoint:
    found = copies(s, p.polygon_id, p.position)
    if not 0 <= root < len(found):
        raise DomainInputError(f"root {root} out of range 0..{len(found) - 1}")
    return found[root]


def enumerate_segments(
    s: SurfaceDef,
    p: SurfacePoint,
    q: SurfacePoint,
    radius: Fraction,
    *,
    root: int = 0,
    crossing_cap: int = 4096,
    node_cap: int = 200_000,
) -> list[DevelopedSegment]:
    """All singularity-free segments from p to q of length at most radius.

    Args:
        s: The surface.
        p: Start point.
        q: End point; may equal p.
        radius: Length bound in circumscribed-circle diameters.
        root: Which copy of p the development starts from.
        crossing_cap: Crossing cap for each certifying flow.
        node_cap: Cap on developed polygon copies.

    Returns:
        Segments ordered by length, then holonomy; one per holonomy vector.

    Raises:
        DomainInputError: If radius is not positive, or root is out of range.
    """
    if radius <= 0:
        raise DomainInputError(f"radius must be positive, got {radius}")
    target = canonicalize(s, q.polygon_id, q.position)
    targets = copies(s, target.polygon_id, target.position)
    marked = weierstrass_points(s).marked
    bound = CycElt.from_rational(s.conductor, (radius * Fraction(s.diameter)) ** 2)
    reach = float(radius) * s.diameter + 1e-9

    start = _root(s, p, root)
    segments: dict[PlanarPoint, DevelopedSegment] = {}
    for copy in _develop_copies(s, start, reach, node_cap):
        for t in targets:
            if t.polygon_id != copy.polygon_id:
                continue
            h = t.position + copy.offset - start.position
            if h.is_zero() or h in segments or not copy.sees(h):
                continue
            length_sq = dot(h, h)
            if (length_sq - bound).sign() > 0:
                continue
            try:
                path = develop(
                    s,
                    copy.sector.polygon_id,
                    copy.sector.position,
                    h,
                    crossing_cap=crossing_cap,
                    marked=marked,
                )
            except SingularityHitError:
                continue
            if path.end != target:
                continue
            segments[h] = DevelopedSegment(
                start=copy.sector,
                holonomy=h,
                length_sq=length_sq,
                crossings=path.crossings,
                pieces=path.pieces,
                passes_through=tuple(marked[i] for i in path.passes_through),
            )

    return sorted(segments.values(), key=cmp_to_key(_compare_segments))


def _compare_segments(a: DevelopedSegment, b: DevelopedSegment) -> int:
    c = (a.length_sq - b.length_sq).sign()
    if c != 0:
        return c
    return compare_points(a.holonomy, b.holonomy)


def holonomies(segments: list[DevelopedSegment]) -> list[tuple[float, float]]:
    """Float shadows of the holonomy vectors, for plotting and comparison."""
    return [seg.holonomy.shadow() for seg in segments]
