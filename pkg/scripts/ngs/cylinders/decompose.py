"""Cylinder decompositions in periodic directions.

Levels across a direction v are measured by t(p) = cross(v, p). Every
separatrix in direction v is traced until it reaches a cone point; the
chords those saddle connections leave in each polygon, together with the
vertex levels, cut every polygon into strips. Flowing along v carries each
strip across its front edge onto exactly one strip of the glued polygon,
and the cycles of that map are the cylinders.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key, lru_cache

from scripts.ngs.errors import DomainInputError, NonPeriodicDirectionError
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.surface.flow import trace_separatrix
from scripts.ngs.surface.geometry import PlanarPoint, Polygon, cross, dot
from scripts.ngs.surface.marked import SurfacePoint
from scripts.ngs.surface.model import Corner, SurfaceDef

ChordKey = tuple[int, CycElt]
"""(polygon_id, level) of a chord."""


@dataclass(frozen=True)
class SaddleConnection:
    """A straight segment joining cone points, oriented along the decomposition direction.

    Attributes:
        index: Position in Decomposition.saddle_connections.
        start: Corner the segment leaves.
        end: Corner the segment reaches.
        holonomy: Exact displacement, a positive multiple of the direction.
        chords: (polygon_id, level) of every polygon piece.
    """

    index: int
    start: Corner
    end: Corner
    holonomy: PlanarPoint
    chords: tuple[ChordKey, ...]


@dataclass(frozen=True)
class Strip:
    """The part of one polygon between two consecutive cut levels.

    Attributes:
        polygon_id: Polygon containing the strip.
        lower: Lower level.
        upper: Upper level.
        front: Edge the flow leaves through.
        back: Edge the flow enters through.
    """

    polygon_id: int
    lower: CycElt
    upper: CycElt
    front: int
    back: int

    def contains_level(self, level: CycElt) -> bool:
        return self.lower <= level <= self.upper


@dataclass(frozen=True)
class Cylinder:
    """A maximal cylinder of parallel closed leaves.

    Heights are in the cross-product units of the direction and circumferences in
    multiples of it, so height * circumference is a Euclidean area. For a unit
    direction both are Euclidean lengths and modulus = height / circumference.

    Attributes:
        index: Position in the decomposition.
        direction: The direction vector v.
        height: Level difference across the cylinder.
        circumference: Length of a core curve in units of |v|.
        modulus: Euclidean height over Euclidean circumference.
        bottom: Indices of saddle connections on the lower boundary.
        top: Indices of saddle connections on the upper boundary.
        core_sample: An interior point on a core curve.
        strips: The strips of the cylinder in flow order.
    """

    index: int
    direction: PlanarPoint
    height: CycElt
    circumference: CycElt
    modulus: CycElt
    bottom: tuple[int, ...]
    top: tuple[int, ...]
    core_sample: SurfacePoint
    strips: tuple[Strip, ...] = field(repr=False)
    surface: SurfaceDef = field(compare=False, repr=False)

    @property
    def boundary(self) -> tuple[int, ...]:
        """Sorted saddle-connection indices on either boundary component."""
        return tuple(sorted(set(self.bottom) | set(self.top)))


@dataclass(frozen=True)
class Decomposition:
    """Every cylinder and saddle connection of one periodic direction."""

    direction: PlanarPoint
    cylinders: tuple[Cylinder, ...]
    saddle_connections: tuple[SaddleConnection, ...]
    surface: SurfaceDef = field(compare=False, repr=False)
    adjacent: frozenset[tuple[int, int]] = field(default=frozenset(), repr=False)

    def total_area(self) -> CycElt:
        total = self.surface.zero()
        for c in self.cylinders:
            total = total + c.height * c.circumference
        return total


def level(v: PlanarPoint, p: PlanarPoint) -> CycElt:
    return cross(v, p)


def _edge_point(poly: Polygon, edge: int, v: PlanarPoint, at: CycElt) -> PlanarPoint:
    """The point of edge at level at."""
    start = poly.vertex(edge)
    vector = poly.edge(edge)
    ratio = (at - level(v, start)) / cross(v, vector)
    return start + vector.scale(ratio)


def chord_length(poly: Polygon, strip: Strip, v: PlanarPoint, at: CycElt) -> CycElt:
    """Length of the strip's chord at level at, in multiples of |v|."""
    front = _edge_point(poly, strip.front, v, at)
    back = _edge_point(poly, strip.back, v, at)
    return dot(front - back, v) / dot(v, v)


def chord_midpoint(poly: Polygon, strip: Strip, v: PlanarPoint, at: CycElt) -> PlanarPoint:
    front = _edge_point(poly, strip.front, v, at)
    back = _edge_point(poly, strip.back, v, at)
    return (front + back).divide(2)


def _orient(holonomy: PlanarPoint, v: PlanarPoint) -> PlanarPoint:
    return holonomy if dot(holonomy, v).sign() > 0 else -holonomy


def _saddle_connections(
    s: SurfaceDef, v: PlanarPoint, length_bound: float
) -> tuple[SaddleConnection, ...]:
    found: dict[frozenset[ChordKey], SaddleConnection] = {}

    def record(
        start: Corner, end: Corner, holonomy: PlanarPoint, chords: tuple[ChordKey, ...]
    ) -> None:
        key = frozenset(chords)
        if key not in found:
            found[key] = SaddleConnection(len(found), start, end, _orient(holonomy, v), chords)

    for p, poly in enumerate(s.polygons):
        for k in range(len(poly)):
            for d in (v, -v):
                edge, previous = poly.edge(k), poly.edge(k - 1)
                c_edge = cross(edge, d).sign()
                if c_edge == 0 and dot(edge, d).sign() > 0:
                    partner = s.edge_pairs[(p, k)][0]
                    shifted = poly.vertex(k) + s.translations[(p, k)]
                    chords = ((p, level(v, poly.vertex(k))), (partner, level(v, shifted)))
                    record((p, k), (p, (k + 1) % len(poly)), edge, chords)
                elif c_edge > 0 and cross(previous, d).sign() > 0:
                    leaf = trace_separatrix(s, (p, k), d, v, length_bound=length_bound)
                    record(leaf.start, leaf.end, leaf.holonomy, leaf.chords)
    return tuple(found.values())


def _strips(s: SurfaceDef, v: PlanarPoint, chords: set[ChordKey]) -> list[Strip]:
    strips: list[Strip] = []
    for p, poly in enumerate(s.polygons):
        levels = {level(v, vertex) for vertex in poly.vertices}
        levels |= {at for q, at in chords if q == p}
        cuts = sorted(levels)
        for lower, upper in zip(cuts, cuts[1:]):
            front = _front_edge(poly, v, lower, upper)
            back = _back_edge(poly, v, lower, upper)
            strips.append(Strip(p, lower, upper, front, back))
    return strips


def _front_edge(poly: Polygon, v: PlanarPoint, lower: CycElt, upper: CycElt) -> int:
    for e in range(len(poly)):
        if cross(v, poly.edge(e)).sign() > 0:
            if level(v, poly.vertex(e)) <= lower and upper <= level(v, poly.vertex(e + 1)):
                return e
    raise ArithmeticError("no front edge spans the strip")


def _back_edge(poly: Polygon, v: PlanarPoint, lower: CycElt, upper: CycElt) -> int:
    for e in range(len(poly)):
        if cross(v, poly.edge(e)).sign() < 0:
            if level(v, poly.vertex(e + 1)) <= lower and upper <= level(v, poly.vertex(e)):
                return e
    raise ArithmeticError("no back edge spans the strip")


def _successors(s: SurfaceDef, v: PlanarPoint, strips: list[Strip]) -> list[int]:
    by_lower = {(strip.polygon_id, strip.lower): i for i, strip in enumerate(strips)}
    successor = []
    for strip in strips:
        edge = (strip.polygon_id, strip.front)
        shift = level(v, s.translations[edge])
        target = (s.edge_pairs[edge][0], strip.lower + shift)
        if target not in by_lower:
            raise ArithmeticError(f"strip beyond edge {edge} does not line up with a cut")
        j = by_lower[target]
        if strips[j].upper != strip.upper + shift:
            raise ArithmeticError(f"strip beyond edge {edge} has a different width")
        successor.append(j)
    return successor


def _cycles(successor: list[int]) -> list[list[int]]:
    seen: set[int] = set()
    cycles = []
    for i in range(len(successor)):
        if i in seen:
            continue
        cycle = []
        j = i
        while j not in seen:
            seen.add(j)
            cycle.append(j)
            j = successor[j]
        cycles.append(cycle)
    return cycles


def _build_cylinder(
    s: SurfaceDef,
    v: PlanarPoint,
    index: int,
    strips: list[Strip],
    chord_owner: dict[ChordKey, int],
) -> Cylinder:
    height = strips[0].upper - strips[0].lower
    norm = dot(v, v)
    bottom_total = s.zero()
    top_total = s.zero()
    bottom: set[int] = set()
    top: set[int] = set()
    for strip in strips:
        if strip.upper - strip.lower != height:
            raise ArithmeticError("strips of one cylinder have different heights")
        poly = s.polygon(strip.polygon_id)
        bottom_total = bottom_total + chord_length(poly, strip, v, strip.lower)
        top_total = top_total + chord_length(poly, strip, v, strip.upper)
        if (strip.polygon_id, strip.lower) in chord_owner:
            bottom.add(chord_owner[(strip.polygon_id, strip.lower)])
        if (strip.polygon_id, strip.upper) in chord_owner:
            top.add(chord_owner[(strip.polygon_id, strip.upper)])
    if bottom_total != top_total:
        raise ArithmeticError("cylinder boundary components have different lengths")

    first = strips[0]
    middle = (first.lower + first.upper) / 2
    sample = chord_midpoint(s.polygon(first.polygon_id), first, v, middle)
    return Cylinder(
        index=index,
        direction=v,
        height=height,
        circumference=bottom_total,
        modulus=height / (bottom_total * norm),
        bottom=tuple(sorted(bottom)),
        top=tuple(sorted(top)),
        core_sample=SurfacePoint(first.polygon_id, sample),
        strips=tuple(strips),
        surface=s,
    )


def _adjacent_pairs(strips: list[Strip], owner: dict[int, int]) -> frozenset[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    for i in range(len(strips) - 1):
        here, above = strips[i], strips[i + 1]
        if here.polygon_id != above.polygon_id:
            continue
        a, b = owner[i], owner[i + 1]
        if a != b:
            pairs.add((min(a, b), max(a, b)))
    return frozenset(pairs)


@lru_cache(maxsize=256)
def _decompose(s: SurfaceDef, v: PlanarPoint, separatrix_length_bound: int) -> Decomposition:
    length_bound = separatrix_length_bound * s.diameter
    saddles = _saddle_connections(s, v, length_bound)
    chord_owner = {chord: sc.index for sc in saddles for chord in sc.chords}
    strips = _strips(s, v, set(chord_owner))
    successor = _successors(s, v, strips)

    def width(cycle: list[int]) -> CycElt:
        return strips[cycle[0]].upper - strips[cycle[0]].lower

    # ascending height; ties keep discovery order
    cycles = sorted(_cycles(successor), key=cmp_to_key(lambda a, b: (width(a) - width(b)).sign()))
    cylinders = []
    owner: dict[int, int] = {}
    for index, cycle in enumerate(cycles):
        for i in cycle:
            owner[i] = index
        cylinders.append(_build_cylinder(s, v, index, [strips[i] for i in cycle], chord_owner))

    decomposition = Decomposition(
        direction=v,
        cylinders=tuple(cylinders),
        saddle_connections=saddles,
        surface=s,
        adjacent=_adjacent_pairs(strips, owner),
    )
    if decomposition.total_area() != s.area:
        raise ArithmeticError(f"cylinder areas do not add up to the surface area in direction {v}")
    return decomposition


def decompose(
    s: SurfaceDef,
    v: PlanarPoint,
    *,
    separatrix_length_bound: int = 200,
) -> Decomposition:
    """Decompose the surface into cylinders in direction v.

    Args:
        s: The surface.
        v: Nonzero direction; its length sets the height units.
        separatrix_length_bound: Trace bound in circumscribed-circle diameters.

    Returns:
        The Decomposition, with exact heights, circumferences and moduli.

    Raises:
        DomainInputError: If v is zero.
        NonPeriodicDirectionError: If some separatrix does not reach a cone point.
    """
    if v.is_zero():
        raise DomainInputError("direction vector must be nonzero")
    v = v.promote(s.conductor)
    try:
        return _decompose(s, v, separatrix_length_bound)
    except NonPeriodicDirectionError as e:
        raise NonPeriodicDirectionError(
            f"direction {v} is not periodic within the trace bound: {e.message}", cause=e
        ) from e
