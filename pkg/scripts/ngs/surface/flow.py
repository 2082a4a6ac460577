"""Exact straight-line flow across edge identifications.

A path is the line z0 + s*u, s in [0, 1], written in the coordinates of the
polygon it currently crosses; each edge crossing adds that edge's gluing
translation to z0, so s runs continuously along the whole path. Exit
parameters are kept as fractions num/den of CycElt values and compared by
cross-multiplication, so no division happens while flowing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scripts.ngs.errors import (
    DomainInputError,
    NonPeriodicDirectionError,
    RefoldError,
    SingularityHitError,
)
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.surface.geometry import LocationKind, PlanarPoint, Polygon, cross, dot, locate
from scripts.ngs.surface.marked import SurfacePoint, canonicalize, copies
from scripts.ngs.surface.model import Corner, DirectedEdge, SurfaceDef


@dataclass(frozen=True)
class Param:
    """The path parameter num/den with den > 0."""

    num: CycElt
    den: CycElt

    @classmethod
    def of(cls, conductor: int, value: int) -> Param:
        return cls(CycElt.from_rational(conductor, value), CycElt.from_rational(conductor, 1))

    def compare(self, other: Param) -> int:
        return (self.num * other.den - other.num * self.den).sign()

    def __lt__(self, other: Param) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: Param) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: Param) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: Param) -> bool:
        return self.compare(other) >= 0

    def equals(self, other: Param) -> bool:
        return (self.num * other.den - other.num * self.den).is_zero()

    def value(self) -> CycElt:
        return self.num / self.den

    def __float__(self) -> float:
        return float(self.num) / float(self.den)


@dataclass(frozen=True)
class FlowPiece:
    """The part of a path inside one polygon: z0 + s*u for s in [s_in, s_out]."""

    polygon_id: int
    origin: PlanarPoint
    s_in: Param
    s_out: Param

    def point_at(self, u: PlanarPoint, param: Param) -> PlanarPoint:
        return self.origin + u.scale(param.value())


@dataclass(frozen=True)
class FlowPath:
    """A developed straight path.

    Attributes:
        start: Starting point as given (polygon coordinates).
        vector: Holonomy of the whole path.
        pieces: Polygon pieces in order.
        crossings: Directed edges crossed, in order.
        end: Canonical endpoint.
        passes_through: Indices of marked points hit strictly inside the path.
    """

    start: SurfacePoint
    vector: PlanarPoint
    pieces: tuple[FlowPiece, ...]
    crossings: tuple[DirectedEdge, ...]
    end: SurfacePoint
    passes_through: tuple[int, ...] = ()


@dataclass(frozen=True)
class Exit:
    """Where a line leaves a polygon: the edge, the parameter, and the corner if any."""

    edge: int
    param: Param
    vertex: int | None


def _exit(poly: Polygon, origin: PlanarPoint, u: PlanarPoint, slopes: list[CycElt]) -> Exit | None:
    """First exit of origin + s*u from poly, given slopes[j] = cross(E_j, u)."""
    best: tuple[int, Param] | None = None
    offsets: dict[int, CycElt] = {}
    for j, c in enumerate(slopes):
        if c.sign() >= 0:
            continue
        f = cross(poly.edges[j], origin) - poly.edge_offsets[j]
        offsets[j] = f
        candidate = Param(f, -c)
        if best is None or candidate < best[1]:
            best = (j, candidate)
    if best is None:
        return None

    edge, param = best
    count = len(poly)
    for neighbour, corner in ((edge - 1, edge), (edge + 1, edge + 1)):
        j = neighbour % count
        f = offsets.get(j)
        if f is None:
            f = cross(poly.edges[j], origin) - poly.edge_offsets[j]
        if (f * param.den + slopes[j] * param.num).is_zero():
            return Exit(edge, param, corner % count)
    return Exit(edge, param, None)


def first_exit(poly: Polygon, origin: PlanarPoint, u: PlanarPoint) -> Exit | None:
    """Where the ray origin + s*u, s >= 0, leaves poly."""
    return _exit(poly, origin, u, [cross(e, u) for e in poly.edges])


def in_corner(poly: Polygon, k: int, u: PlanarPoint) -> bool:
    """True when u points into the closed corner of poly at vertex k."""
    return cross(poly.edge(k), u).sign() >= 0 and cross(poly.edge(k - 1), u).sign() >= 0


def corners_containing(s: SurfaceDef, corners: tuple[Corner, ...], u: PlanarPoint) -> list[Corner]:
    """Corners of a cone class whose closed sector contains direction u."""
    return [(p, k) for p, k in corners if in_corner(s.polygon(p), k, u)]


def _prepare_start(
    s: SurfaceDef, polygon_id: int, position: PlanarPoint, u: PlanarPoint
) -> tuple[int, PlanarPoint]:
    """Move a boundary start into the polygon the path actually enters."""
    poly = s.polygon(polygon_id)
    location = locate(poly, position)
    if location.kind is LocationKind.EDGE:
        assert location.index is not None
        if cross(poly.edge(location.index), u).sign() < 0:
            edge = (polygon_id, location.index)
            return s.edge_pairs[edge][0], position + s.translations[edge]
    elif location.kind is LocationKind.VERTEX:
        assert location.index is not None
        if not u.is_zero() and not in_corner(poly, location.index, u):
            raise DomainInputError(
                f"direction {u} leaves corner {(polygon_id, location.index)}; pick another corner"
            )
    return polygon_id, position


def develop(
    s: SurfaceDef,
    polygon_id: int,
    position: PlanarPoint,
    u: PlanarPoint,
    *,
    crossing_cap: int = 4096,
    marked: tuple[SurfacePoint, ...] = (),
) -> FlowPath:
    """Follow the straight path from position with holonomy u.

    Args:
        s: The surface.
        polygon_id: Polygon of the start point.
        position: Start point; a vertex start uses the corner of this polygon.
        u: Holonomy vector of the path.
        crossing_cap: Maximum number of edge crossings.
        marked: Points whose interior incidences are recorded.

    Returns:
        The developed FlowPath.

    Raises:
        SingularityHitError: If the path meets a cone point before its end.
        RefoldError: If the crossing cap is exceeded.
        DomainInputError: If a vertex start points out of its corner.
    """
    conductor = s.conductor
    zero, one = Param.of(conductor, 0), Param.of(conductor, 1)
    start = SurfacePoint(polygon_id, position, canonical=False)

    current, origin = _prepare_start(s, polygon_id, position, u)
    slopes = {p: [cross(e, u) for e in poly.edges] for p, poly in enumerate(s.polygons)}

    pieces: list[FlowPiece] = []
    crossings: list[DirectedEdge] = []
    s_in = zero
    while True:
        poly = s.polygon(current)
        ex = _exit(poly, origin, u, slopes[current])
        if ex is None or ex.param >= one:
            pieces.append(FlowPiece(current, origin, s_in, one))
            break
        if ex.vertex is not None:
            raise SingularityHitError(
                f"path from {start} with holonomy {u} meets a cone point at s={float(ex.param):.6g}"
            )
        if ex.param > s_in:
            pieces.append(FlowPiece(current, origin, s_in, ex.param))
        edge = (current, ex.edge)
        crossings.append(edge)
        if len(crossings) > crossing_cap:
            raise RefoldError(
                f"path from {start} exceeded {crossing_cap} edge crossings", len(crossings)
            )
        origin = origin + s.translations[edge]
        current = s.edge_pairs[edge][0]
        s_in = ex.param

    end = canonicalize(s, current, origin + u)
    hits = _interior_hits(s, pieces, u, marked) if marked else ()
    return FlowPath(
        start=start,
        vector=u,
        pieces=tuple(pieces),
        crossings=tuple(crossings),
        end=end,
        passes_through=hits,
    )


def _interior_hits(
    s: SurfaceDef,
    pieces: list[FlowPiece],
    u: PlanarPoint,
    marked: tuple[SurfacePoint, ...],
) -> tuple[int, ...]:
    """Indices of marked points lying strictly between the path's endpoints."""
    conductor = s.conductor
    zero, one = Param.of(conductor, 0), Param.of(conductor, 1)
    norm = dot(u, u)
    if norm.is_zero():
        return ()
    located = [
        (i, c) for i, m in enumerate(marked) for c in copies(s, m.polygon_id, m.position)
    ]
    hits: set[int] = set()
    for piece in pieces:
        for i, c in located:
            if i in hits or c.polygon_id != piece.polygon_id:
                continue
            offset = c.position - piece.origin
            if not cross(u, offset).is_zero():
                continue
            at = Param(dot(offset, u), norm)
            if zero < at < one and piece.s_in <= at <= piece.s_out:
                hits.add(i)
    return tuple(sorted(hits))


@dataclass(frozen=True)
class Separatrix:
    """A trajectory from a cone point to the next cone point.

    Attributes:
        start: Starting corner.
        end: Corner reached.
        holonomy: Exact displacement vector.
        chords: (polygon_id, level) for each polygon piece, level = cross(v, point).
    """

    start: Corner
    end: Corner
    holonomy: PlanarPoint
    chords: tuple[tuple[int, CycElt], ...]


def trace_separatrix(
    s: SurfaceDef,
    corner: Corner,
    d: PlanarPoint,
    level_direction: PlanarPoint,
    *,
    length_bound: float,
) -> Separatrix:
    """Follow the leaf leaving corner in direction d until it reaches a cone point.

    The leaf must start into the open sector of the corner; edges parallel to d
    are saddle connections on their own and are handled by the caller.

    Args:
        s: The surface.
        corner: Starting corner (polygon_id, vertex index).
        d: Direction of travel.
        level_direction: Direction v whose levels cross(v, .) label chords.
        length_bound: Maximum Euclidean length before giving up.

    Raises:
        NonPeriodicDirectionError: If no cone point is reached within length_bound.
    """
    polygon_id, k = corner
    origin = s.polygon(polygon_id).vertex(k)
    current = polygon_id
    slopes = {p: [cross(e, d) for e in poly.edges] for p, poly in enumerate(s.polygons)}
    d_length = math.hypot(*d.shadow())
    chords: list[tuple[int, CycElt]] = []

    while True:
        poly = s.polygon(current)
        chords.append((current, cross(level_direction, origin)))
        ex = _exit(poly, origin, d, slopes[current])
        if ex is None:
            raise NonPeriodicDirectionError("zero direction has no separatrices")
        if float(ex.param) * d_length > length_bound:
            raise NonPeriodicDirectionError(
                f"separatrix from corner {corner} did not close within length {length_bound:g}"
            )
        if ex.vertex is not None:
            end_vertex = poly.vertex(ex.vertex)
            return Separatrix(
                start=(polygon_id, k),
                end=(current, ex.vertex),
                holonomy=end_vertex - origin,
                chords=tuple(chords),
            )
        edge = (current, ex.edge)
        origin = origin + s.translations[edge]
        current = s.edge_pairs[edge][0]
