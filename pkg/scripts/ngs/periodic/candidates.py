"""Candidate line segments: where every periodic point can be moved.

n even: the horizontal line and the line at angle pi/n through the center
are each fixed by the hyperelliptic involution, which swaps their two halves;
one half of each is kept. n odd: the horizontal saddle connections of the
second polygon, which are chords between mirror-image vertices plus its top
edge. The involution carries the first polygon onto the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache

from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.surface.flow import first_exit
from scripts.ngs.surface.geometry import PlanarPoint, unit_vector
from scripts.ngs.surface.marked import (
    SurfacePoint,
    canonicalize,
    compare_surface_points,
    weierstrass_points,
)
from scripts.ngs.surface.model import SurfaceDef


@dataclass(frozen=True)
class CandidateSegment:
    """A straight segment from P_n inside one polygon.

    Attributes:
        index: Position in candidate_segments order.
        line: "horizontal" or "rotated".
        start: P_n, canonical.
        end: The far endpoint, canonical.
        direction: Unit direction of travel.
        polygon_id: Polygon carrying the segment.
        origin: Position of P_n in that polygon.
        holonomy: Exact displacement from start to end.
        line_k: Angle k*pi/(2n) of the carrying line, modulo pi.
        ends_at_vertex: True when the far endpoint is a polygon vertex.
        is_edge: True for the top edge of the second polygon (n odd).
    """

    index: int
    line: str
    start: SurfacePoint
    end: SurfacePoint
    direction: PlanarPoint
    polygon_id: int
    origin: PlanarPoint
    holonomy: PlanarPoint
    line_k: int = 0
    ends_at_vertex: bool = True
    is_edge: bool = False

    @property
    def carrier(self) -> tuple[tuple[int, PlanarPoint, PlanarPoint], ...]:
        """(polygon_id, from, to) for each polygon piece."""
        return ((self.polygon_id, self.origin, self.origin + self.holonomy),)

    def position_at(self, t: Fraction | CycElt) -> PlanarPoint:
        return self.origin + self.holonomy.scale(_as_elt(self.origin, t))

    def point_at(self, s: SurfaceDef, t: Fraction | CycElt) -> SurfacePoint:
        """Canonical point at parameter t in [0, 1]."""
        return canonicalize(s, self.polygon_id, self.position_at(t))


def _as_elt(anchor: PlanarPoint, t: Fraction | CycElt) -> CycElt:
    if isinstance(t, CycElt):
        return t
    return CycElt.from_rational(anchor.x.conductor, t)


def _half(s: SurfaceDef, u: PlanarPoint) -> tuple[SurfacePoint, PlanarPoint]:
    center = PlanarPoint.origin(s.conductor)
    ex = first_exit(s.polygon(0), center, u)
    if ex is None:
        raise ArithmeticError(f"ray from the center in direction {u} never leaves the polygon")
    far = u.scale(ex.param.value())
    return canonicalize(s, 0, far), far


def _even_segments(s: SurfaceDef) -> list[CandidateSegment]:
    marked = weierstrass_points(s)
    segments = []
    for line, k in (("horizontal", 0), ("rotated", 2)):
        u = unit_vector(s.n, k)
        forward, far_forward = _half(s, u)
        backward, far_backward = _half(s, -u)
        keep_forward = compare_surface_points(forward, backward) <= 0
        end, holonomy, direction = (
            (forward, far_forward, u) if keep_forward else (backward, far_backward, -u)
        )
        segments.append(
            CandidateSegment(
                index=len(segments),
                line=line,
                start=marked.center,
                end=end,
                direction=direction,
                polygon_id=0,
                origin=PlanarPoint.origin(s.conductor),
                holonomy=holonomy,
                line_k=k,
                ends_at_vertex=holonomy in s.polygon(0).vertices,
            )
        )
    return segments


def _odd_segments(s: SurfaceDef) -> list[CandidateSegment]:
    second = s.polygon(1)
    p_n = weierstrass_points(s).center
    u = unit_vector(s.n, 0)
    chords: list[tuple[PlanarPoint, PlanarPoint, bool]] = []
    for i, left in enumerate(second.vertices):
        for j, right in enumerate(second.vertices):
            if left.y == right.y and (right.x - left.x).sign() > 0:
                chords.append((left, right, abs(i - j) in (1, s.n - 1)))
    chords.sort(key=cmp_to_key(lambda a, b: (a[0].y - b[0].y).sign()))

    segments = []
    for left, right, is_edge in chords:
        segments.append(
            CandidateSegment(
                index=len(segments),
                line="horizontal",
                start=p_n,
                end=canonicalize(s, 1, right),
                direction=u,
                polygon_id=1,
                origin=left,
                holonomy=right - left,
                is_edge=is_edge,
            )
        )
    return segments


@lru_cache(maxsize=None)
def _candidate_segments(s: SurfaceDef) -> tuple[CandidateSegment, ...]:
    if s.is_double:
        return tuple(_odd_segments(s))
    return tuple(_even_segments(s))


def candidate_segments(s: SurfaceDef) -> list[CandidateSegment]:
    """The candidate segments of s, every one starting at P_n.

    n even: the horizontal half first, then the half at angle pi/n. Of the two
    halves of a line the one whose far endpoint has the least canonical
    representative is kept, the forward half on a tie. n odd: the horizontal
    saddle connections of the second polygon from bottom to top, its top edge last.
    """
    return list(_candidate_segments(s))
