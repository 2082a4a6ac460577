"""Exact planar geometry over the real cyclotomic numbers.

Every coordinate of an n-gon surface lives in Q(zeta_4n), so points, polygons
and unit directions are promoted to conductor 4n at construction time and all
predicates below reduce to exact signs of CycElt values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache

from scripts.ngs.errors import PointOutsideError
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.exactnum.sines import cos_exact, sin_exact


@dataclass(frozen=True)
class PlanarPoint:
    """A point (or vector) of the plane with exact coordinates."""

    x: CycElt
    y: CycElt

    @classmethod
    def origin(cls, conductor: int) -> PlanarPoint:
        zero = CycElt.from_rational(conductor, 0)
        return cls(zero, zero)

    def __add__(self, other: PlanarPoint) -> PlanarPoint:
        return PlanarPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: PlanarPoint) -> PlanarPoint:
        return PlanarPoint(self.x - other.x, self.y - other.y)

    def __neg__(self) -> PlanarPoint:
        return PlanarPoint(-self.x, -self.y)

    def scale(self, factor: CycElt | int) -> PlanarPoint:
        return PlanarPoint(self.x * factor, self.y * factor)

    def divide(self, divisor: CycElt | int) -> PlanarPoint:
        return PlanarPoint(self.x / divisor, self.y / divisor)

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()

    def promote(self, conductor: int) -> PlanarPoint:
        return PlanarPoint(self.x.promote(conductor), self.y.promote(conductor))

    def shadow(self) -> tuple[float, float]:
        """Float coordinates, for display only."""
        return float(self.x), float(self.y)

    def __str__(self) -> str:
        x, y = self.shadow()
        return f"({x:.12g}, {y:.12g})"


def cross(a: PlanarPoint, b: PlanarPoint) -> CycElt:
    """z-component of a x b."""
    return a.x * b.y - a.y * b.x


def dot(a: PlanarPoint, b: PlanarPoint) -> CycElt:
    return a.x * b.x + a.y * b.y


def compare_points(a: PlanarPoint, b: PlanarPoint) -> int:
    """Lexicographic (x, y) comparison by exact signs."""
    sx = (a.x - b.x).sign()
    if sx:
        return sx
    return (a.y - b.y).sign()


def is_parallel(a: PlanarPoint, b: PlanarPoint) -> bool:
    """True when a and b span the same line (either orientation)."""
    return cross(a, b).is_zero()


@lru_cache(maxsize=None)
def unit_vector(n: int, k: int) -> PlanarPoint:
    """Unit vector at angle k*pi/(2n), in conductor 4n."""
    conductor = 4 * n
    return PlanarPoint(
        cos_exact(k, 2 * n).promote(conductor),
        sin_exact(k, 2 * n).promote(conductor),
    )


class LocationKind(str, Enum):
    """Where a point sits relative to a convex polygon."""

    INTERIOR = "interior"
    EDGE = "edge"
    VERTEX = "vertex"


@dataclass(frozen=True)
class Location:
    """Result of locate: the kind plus the edge or vertex index (None for interior)."""

    kind: LocationKind
    index: int | None = None


@dataclass(frozen=True)
class Polygon:
    """Convex polygon with counterclockwise vertices.

    Edge j runs from vertex j to vertex j + 1 (indices mod the vertex count).
    """

    vertices: tuple[PlanarPoint, ...]
    conductor: int = field(compare=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex(self, k: int) -> PlanarPoint:
        return self.vertices[k % len(self.vertices)]

    @cached_property
    def edges(self) -> tuple[PlanarPoint, ...]:
        count = len(self.vertices)
        return tuple(self.vertices[(j + 1) % count] - self.vertices[j] for j in range(count))

    @cached_property
    def edge_offsets(self) -> tuple[CycElt, ...]:
        """cross(E_j, v_j), so cross(E_j, z - v_j) = cross(E_j, z) - edge_offsets[j]."""
        return tuple(cross(e, v) for e, v in zip(self.edges, self.vertices))

    def edge(self, j: int) -> PlanarPoint:
        return self.edges[j % len(self.vertices)]

    def side_signs(self, z: PlanarPoint) -> list[int]:
        """Sign of cross(E_j, z - v_j) for every edge; positive means the inner side."""
        return [(cross(e, z) - off).sign() for e, off in zip(self.edges, self.edge_offsets)]

    def midpoint(self, j: int) -> PlanarPoint:
        return (self.vertex(j) + self.vertex(j + 1)).divide(2)

    @cached_property
    def area(self) -> CycElt:
        """Exact shoelace area."""
        total = CycElt.from_rational(self.conductor, 0)
        count = len(self.vertices)
        for j in range(count):
            total = total + cross(self.vertices[j], self.vertices[(j + 1) % count])
        return total / 2


def locate(polygon: Polygon, z: PlanarPoint) -> Location:
    """Classify z as interior, on an edge, or at a vertex of polygon.

    Raises:
        PointOutsideError: If z lies outside the closed polygon.
    """
    signs = polygon.side_signs(z)
    if any(s < 0 for s in signs):
        raise PointOutsideError(f"point {z} lies outside the polygon")
    zeros = [j for j, s in enumerate(signs) if s == 0]
    if not zeros:
        return Location(LocationKind.INTERIOR)
    if len(zeros) == 1:
        return Location(LocationKind.EDGE, zeros[0])
    count = len(signs)
    first, second = zeros[0], zeros[1]
    # edges j-1 and j meet at vertex j
    if second == first + 1:
        return Location(LocationKind.VERTEX, second)
    if first == 0 and second == count - 1:
        return Location(LocationKind.VERTEX, 0)
    raise PointOutsideError(f"point {z} is on non-adjacent edge lines {first} and {second}")
