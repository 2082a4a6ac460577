"""Three-cylinder exclusion of periodic points from candidate segments.

A segment PQ is excluded when a cylinder C1 holds it and two parallel
cylinders C2, C3 with irrational height ratio split it at a single boundary
point R, each condition checked exactly:

1. PQ is neither parallel nor perpendicular to C1 or to C2 and C3.
2. PQ lies in C1 and its interior misses the boundary of C1.
3. PQ lies in C2 and C3 and crosses their common boundary once, at R.
4. PQ, PR and RQ project onto proper subsets of the core curves.
5. P and Q have rational height in C1 and in C2, C3 respectively.

Every interior point then has irrational height in C1, C2 or C3, so it is
not periodic. The top edge of the second polygon for n odd is first
reduced by the involution to its half ending at the midpoint Q', and that
half is moved by the twist r^-1 s r along C1 before the test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from scripts.ngs.cylinders.decompose import Cylinder, Decomposition, decompose
from scripts.ngs.cylinders.heights import (
    cylinders_containing,
    height_fraction,
    height_ratio,
    rational_height,
)
from scripts.ngs.errors import (
    HypothesisFailure,
    NonPeriodicDirectionError,
    PointOutsideError,
    SingularityHitError,
)
from scripts.ngs.exactnum.field import CycElt, is_rational
from scripts.ngs.periodic.candidates import CandidateSegment
from scripts.ngs.surface.flow import FlowPiece, Param, develop
from scripts.ngs.surface.geometry import PlanarPoint, cross, dot, unit_vector
from scripts.ngs.surface.marked import SurfacePoint, canonicalize
from scripts.ngs.surface.model import SurfaceDef
from scripts.ngs.veech.action import act
from scripts.ngs.veech.matrices import GroupWord

TWIST_WORD = "r^-1 s r"


@dataclass(frozen=True)
class SegmentPath:
    """A developed segment: the point at parameter t of a piece is origin + t * holonomy."""

    surface: SurfaceDef
    holonomy: PlanarPoint
    pieces: tuple[FlowPiece, ...]

    def _piece_at(self, t: CycElt) -> FlowPiece:
        at = Param(t, CycElt.from_rational(t.conductor, 1))
        for piece in self.pieces:
            if piece.s_in <= at <= piece.s_out:
                return piece
        raise ValueError(f"parameter {float(t):.6g} is outside the segment")

    def point_at(self, t: CycElt | Fraction) -> SurfacePoint:
        t = _as_elt(self.surface, t)
        piece = self._piece_at(t)
        return canonicalize(self.surface, piece.polygon_id, piece.origin + self.holonomy.scale(t))

    @property
    def start(self) -> SurfacePoint:
        return self.point_at(Fraction(0))

    @property
    def end(self) -> SurfacePoint:
        return self.point_at(Fraction(1))


def _as_elt(s: SurfaceDef, t: CycElt | Fraction) -> CycElt:
    if isinstance(t, CycElt):
        return t
    return CycElt.from_rational(s.conductor, t)


def _forward_path(
    s: SurfaceDef, polygon_id: int, origin: PlanarPoint, h: PlanarPoint
) -> SegmentPath:
    return SegmentPath(s, h, develop(s, polygon_id, origin, h).pieces)


def _reversed_path(s: SurfaceDef, anchor: SurfacePoint, h: PlanarPoint) -> SegmentPath:
    """The segment with holonomy h that ends at anchor."""
    path = develop(s, anchor.polygon_id, anchor.position, -h)
    pieces = []
    for piece in reversed(path.pieces):
        pieces.append(
            FlowPiece(
                polygon_id=piece.polygon_id,
                origin=piece.origin - h,
                s_in=Param(piece.s_out.den - piece.s_out.num, piece.s_out.den),
                s_out=Param(piece.s_in.den - piece.s_in.num, piece.s_in.den),
            )
        )
    return SegmentPath(s, h, tuple(pieces))


@dataclass(frozen=True)
class ExclusionConfig:
    """A verified three-cylinder configuration for one candidate segment.

    Attributes:
        segment: The candidate segment.
        tested: The segment PQ the conditions hold for; the candidate itself,
            or the twisted half of the edge segment.
        twist: Word moving the candidate half onto tested, if any.
        c1: Cylinder containing PQ.
        c2: Cylinder containing PR.
        c3: Cylinder containing RQ.
        crossing: Parameter of R along tested.
        r: The crossing point R.
        directions: k with direction angle k*pi/(2n) for C1 and for C2, C3.
        ratio: Exact height ratio of C2 to C3, irrational.
    """

    segment: CandidateSegment
    tested: SegmentPath
    twist: GroupWord | None
    c1: Cylinder
    c2: Cylinder
    c3: Cylinder
    crossing: CycElt
    r: SurfacePoint
    directions: tuple[int, int]
    ratio: CycElt


def exclusion_directions(n: int, segment: CandidateSegment) -> tuple[int, int]:
    """Directions k*pi/(2n) of C1 and of C2, C3 for segment.

    n even: -pi/n and -2pi/n measured from the edge midpoint the segment
    ends at, or from the edge midpoint just clockwise of its far vertex.
    n odd: -pi/n and -2pi/n from the horizontal. The twisted half of the
    top edge descends from P through the thinnest cylinder at pi/n, so its
    C2 and C3 are taken at pi/n.
    """
    period = 2 * n
    if n % 2 == 0:
        reference = segment.line_k - (2 if segment.ends_at_vertex else 0)
        return (reference - 2) % period, (reference - 4) % period
    second = 2 if segment.is_edge else -4
    return (-2) % period, second % period


def _oblique(h: PlanarPoint, v: PlanarPoint) -> bool:
    return not cross(h, v).is_zero() and not dot(h, v).is_zero()


def _boundary_crossings(path: SegmentPath, d: Decomposition) -> list[CycElt]:
    """Parameters in (0, 1) where the segment meets a saddle connection of d."""
    v = d.direction
    h = path.holonomy
    slope = cross(v, h)
    zero = path.surface.zero()
    one = zero + 1
    found: list[CycElt] = []
    for piece in path.pieces:
        base = cross(v, piece.origin)
        for sc in d.saddle_connections:
            for polygon_id, at in sc.chords:
                if polygon_id != piece.polygon_id:
                    continue
                t = (at - base) / slope
                if not (zero < t < one):
                    continue
                if not (piece.s_in.value() <= t <= piece.s_out.value()):
                    continue
                if all(t != other for other in found):
                    found.append(t)
    return sorted(found)


def _cylinder_at(path: SegmentPath, d: Decomposition, t: CycElt) -> Cylinder | None:
    containing = cylinders_containing(path.surface, d, path.point_at(t))
    return containing[0] if len(containing) == 1 else None


def _decompose(s: SurfaceDef, v: PlanarPoint, condition: int) -> Decomposition:
    try:
        return decompose(s, v)
    except NonPeriodicDirectionError as e:
        raise HypothesisFailure(condition, f"direction {v} is not periodic", cause=e) from e


def _rational_in(c: Cylinder, p: SurfacePoint) -> bool:
    try:
        return rational_height(c, p) is not None
    except PointOutsideError:
        return False


def _proper(length: CycElt, c: Cylinder) -> bool:
    v = c.direction
    return abs(length) < c.circumference * dot(v, v)


def _check_c1(path: SegmentPath, k: int) -> Cylinder:
    s = path.surface
    h = path.holonomy
    v = unit_vector(s.n, k)
    if not _oblique(h, v):
        raise HypothesisFailure(1, f"segment is parallel or perpendicular to direction k={k}")
    d = _decompose(s, v, 2)
    if _boundary_crossings(path, d):
        raise HypothesisFailure(2, f"segment interior meets a cylinder boundary in direction k={k}")
    c1 = _cylinder_at(path, d, _as_elt(s, Fraction(1, 2)))
    if c1 is None:
        raise HypothesisFailure(2, f"segment midpoint is on a boundary in direction k={k}")
    if not _proper(dot(h, v), c1):
        raise HypothesisFailure(4, f"segment wraps around cylinder {c1.index} (k={k})")
    if not _rational_in(c1, path.start) or not _rational_in(c1, path.end):
        raise HypothesisFailure(5, f"an endpoint has irrational height in C1 (k={k})")
    return c1


def _check_c23(path: SegmentPath, k: int) -> tuple[Cylinder, Cylinder, CycElt, CycElt]:
    s = path.surface
    h = path.holonomy
    v = unit_vector(s.n, k)
    if not _oblique(h, v):
        raise HypothesisFailure(1, f"segment is parallel or perpendicular to direction k={k}")
    d = _decompose(s, v, 3)
    crossings = _boundary_crossings(path, d)
    if len(crossings) != 1:
        raise HypothesisFailure(
            3, f"segment meets {len(crossings)} boundaries in direction k={k}, expected one"
        )
    t_r = crossings[0]
    c2 = _cylinder_at(path, d, t_r / 2)
    c3 = _cylinder_at(path, d, (t_r + 1) / 2)
    if c2 is None or c3 is None or c2.index == c3.index:
        raise HypothesisFailure(3, f"the two sides of R do not lie in distinct cylinders (k={k})")
    ratio = height_ratio(c2, c3)
    if is_rational(ratio) is not None:
        raise HypothesisFailure(3, f"C2 and C3 have rational height ratio {ratio} (k={k})")
    along = dot(h, v)
    if not _proper(along * t_r, c2) or not _proper(along * (1 - t_r), c3):
        raise HypothesisFailure(4, f"PR or RQ wraps around its cylinder (k={k})")
    if not _rational_in(c2, path.start) or not _rational_in(c3, path.end):
        raise HypothesisFailure(5, f"P or Q has irrational height in C2 or C3 (k={k})")
    return c2, c3, t_r, ratio


def _tested_path(s: SurfaceDef, seg: CandidateSegment) -> tuple[SegmentPath, GroupWord | None]:
    if not seg.is_edge:
        return _forward_path(s, seg.polygon_id, seg.origin, seg.holonomy), None
    twist = GroupWord.parse(s.n, TWIST_WORD)
    half = seg.holonomy.divide(2)
    image = act(s, twist, seg.point_at(s, Fraction(1, 2)))
    try:
        path = _reversed_path(s, image, twist.matrix.apply(half))
    except SingularityHitError as e:
        raise HypothesisFailure(2, "the twisted half segment meets a cone point", cause=e) from e
    if path.start != seg.start:
        raise HypothesisFailure(5, f"the twisted half segment starts at {path.start}, not P")
    return path, twist


@lru_cache(maxsize=None)
def exclusion_config(s: SurfaceDef, seg: CandidateSegment) -> ExclusionConfig:
    """Verify the three-cylinder configuration for seg in exclusion_directions.

    Raises:
        HypothesisFailure: Naming the first violated condition.
    """
    path, twist = _tested_path(s, seg)
    k1, k23 = exclusion_directions(s.n, seg)
    c1 = _check_c1(path, k1)
    c2, c3, t_r, ratio = _check_c23(path, k23)
    return ExclusionConfig(
        segment=seg,
        tested=path,
        twist=twist,
        c1=c1,
        c2=c2,
        c3=c3,
        crossing=t_r,
        r=path.point_at(t_r),
        directions=(k1, k23),
        ratio=ratio,
    )


def check_endpoint_heights(cfg: ExclusionConfig) -> bool:
    """Both tested endpoints have rational height in every cylinder of cfg containing them."""
    for point in (cfg.tested.start, cfg.tested.end):
        for c in (cfg.c1, cfg.c2, cfg.c3):
            try:
                fraction = height_fraction(c, point)
            except PointOutsideError:
                continue
            if is_rational(fraction) is None:
                return False
    return True
