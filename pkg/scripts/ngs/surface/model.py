"""Regular n-gon and double n-gon translation surfaces.

For n even the surface is one regular n-gon with opposite sides glued; for
n odd it is two regular n-gons, the second a rotation of the first by pi/n,
with parallel sides glued. Both are inscribed in the unit circle with a
vertex of the first polygon at i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from scripts.ngs.errors import DomainInputError
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.exactnum.sines import cos_exact, sin_exact
from scripts.ngs.surface.geometry import PlanarPoint, Polygon

Corner = tuple[int, int]
"""(polygon_id, vertex index)."""

DirectedEdge = tuple[int, int]
"""(polygon_id, edge index)."""


@dataclass(frozen=True)
class ConeClass:
    """An identified vertex class.

    Attributes:
        index: Position in SurfaceDef.cone_classes.
        corners: Every polygon corner in the class, sorted.
        angle: Total angle as a rational multiple of pi.
    """

    index: int
    corners: tuple[Corner, ...]
    angle: Fraction


@dataclass(frozen=True, eq=False)
class SurfaceDef:
    """An immutable n-gon surface.

    Equality and hashing go through n alone: build_surface is the only
    constructor and is deterministic.

    Attributes:
        n: Number of sides.
        polygons: One polygon (n even) or two (n odd).
        edge_pairs: Involution on directed edges.
        translations: Vector taking a point of edge e to its glued copy.
        cone_classes: Identified vertex classes with their cone angles.
    """

    n: int
    polygons: tuple[Polygon, ...]
    edge_pairs: dict[DirectedEdge, DirectedEdge] = field(repr=False)
    translations: dict[DirectedEdge, PlanarPoint] = field(repr=False)
    cone_classes: tuple[ConeClass, ...] = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SurfaceDef):
            return NotImplemented
        return self.n == other.n

    def __hash__(self) -> int:
        return hash(("SurfaceDef", self.n))

    @property
    def conductor(self) -> int:
        return 4 * self.n

    @property
    def is_double(self) -> bool:
        return self.n % 2 == 1

    def polygon(self, polygon_id: int) -> Polygon:
        return self.polygons[polygon_id]

    def directed_edges(self) -> list[DirectedEdge]:
        return [(p, e) for p, poly in enumerate(self.polygons) for e in range(len(poly))]

    def corner_class(self, corner: Corner) -> ConeClass:
        """The cone class containing a polygon corner."""
        polygon_id, k = corner
        key = (polygon_id, k % self.n)
        for cone in self.cone_classes:
            if key in cone.corners:
                return cone
        raise KeyError(corner)

    @cached_property
    def area(self) -> CycElt:
        """Total exact area."""
        total = CycElt.from_rational(self.conductor, 0)
        for poly in self.polygons:
            total = total + poly.area
        return total

    @property
    def diameter(self) -> float:
        """Diameter of the circumscribed circle, the unit of trace bounds."""
        return 2.0

    def zero(self) -> CycElt:
        return CycElt.from_rational(self.conductor, 0)


def validate_n(n: int) -> int:
    """Check that n names a supported surface.

    Raises:
        DomainInputError: If n < 5 or n == 6.
    """
    if n < 5 or n == 6:
        raise DomainInputError.for_polygon_count(n)
    return n


def _regular_polygon(n: int, offset: int) -> Polygon:
    """Vertices i*exp(i*pi*(2j + offset)/n) for j = 0..n-1."""
    conductor = 4 * n
    vertices = []
    for j in range(n):
        k = 2 * j + offset
        # i * (cos + i sin) = (-sin, cos)
        vertices.append(
            PlanarPoint(
                (-sin_exact(k, n)).promote(conductor),
                cos_exact(k, n).promote(conductor),
            )
        )
    return Polygon(tuple(vertices), conductor)


def _pair_edges(polygons: tuple[Polygon, ...]) -> dict[DirectedEdge, DirectedEdge]:
    """Glue every edge to the unique edge with the opposite edge vector."""
    pairs: dict[DirectedEdge, DirectedEdge] = {}
    for p, poly in enumerate(polygons):
        for e, vector in enumerate(poly.edges):
            matches = [
                (q, f)
                for q, other in enumerate(polygons)
                for f, w in enumerate(other.edges)
                if (q, f) != (p, e) and w == -vector
            ]
            if len(matches) != 1:
                raise ArithmeticError(f"edge {(p, e)} has {len(matches)} parallel partners")
            pairs[(p, e)] = matches[0]
    return pairs


def _translations(
    polygons: tuple[Polygon, ...],
    pairs: dict[DirectedEdge, DirectedEdge],
) -> dict[DirectedEdge, PlanarPoint]:
    # v_e on edge (p, e) is glued to the end vertex of the partner edge
    return {
        (p, e): polygons[q].vertex(f + 1) - polygons[p].vertex(e)
        for (p, e), (q, f) in pairs.items()
    }


def _cone_classes(
    n: int,
    polygons: tuple[Polygon, ...],
    pairs: dict[DirectedEdge, DirectedEdge],
) -> tuple[ConeClass, ...]:
    parent: dict[Corner, Corner] = {}

    def find(c: Corner) -> Corner:
        while parent.setdefault(c, c) != c:
            c = parent[c]
        return c

    for (p, e), (q, f) in pairs.items():
        a, b = find((p, e)), find((q, (f + 1) % n))
        if a != b:
            parent[max(a, b)] = min(a, b)

    groups: dict[Corner, list[Corner]] = {}
    for p in range(len(polygons)):
        for k in range(n):
            groups.setdefault(find((p, k)), []).append((p, k))

    interior_angle = Fraction(n - 2, n)
    ordered = sorted(sorted(g) for g in groups.values())
    return tuple(
        ConeClass(index=i, corners=tuple(g), angle=interior_angle * len(g))
        for i, g in enumerate(ordered)
    )


@lru_cache(maxsize=None)
def build_surface(n: int) -> SurfaceDef:
    """Construct the regular n-gon surface (n even) or double n-gon surface (n odd).

    Args:
        n: Number of sides, n >= 5 and n != 6.

    Returns:
        The immutable SurfaceDef.

    Raises:
        DomainInputError: For unsupported n.
    """
    validate_n(n)
    first = _regular_polygon(n, 0)
    polygons = (first,) if n % 2 == 0 else (first, _regular_polygon(n, 1))
    pairs = _pair_edges(polygons)
    return SurfaceDef(
        n=n,
        polygons=polygons,
        edge_pairs=pairs,
        translations=_translations(polygons, pairs),
        cone_classes=_cone_classes(n, polygons, pairs),
    )


def genus(s: SurfaceDef) -> int:
    """Genus from the Euler characteristic V - E + F of the glued cell complex."""
    vertices = len(s.cone_classes)
    edges = len(s.edge_pairs) // 2
    faces = len(s.polygons)
    chi = vertices - edges + faces
    return (2 - chi) // 2


def expected_genus(n: int) -> int:
    """Closed form: floor(n/4) for n even, (n-1)/2 for n odd."""
    return n // 4 if n % 2 == 0 else (n - 1) // 2


def gauss_bonnet_defect(s: SurfaceDef) -> Fraction:
    """Sum of (angle - 2) over cone classes minus 2(2g - 2), in units of pi.

    Zero when the cone angles are consistent with the genus.
    """
    total = sum((c.angle - 2 for c in s.cone_classes), Fraction(0))
    return total - 2 * (2 * genus(s) - 2)


def translation_automorphisms(s: SurfaceDef) -> list[dict[int, tuple[int, PlanarPoint]]]:
    """Nontrivial translation automorphisms, found by brute force.

    A translation automorphism sends each polygon onto a polygon by a
    translation, so a corner must land on a corner with the same two edge
    vectors. Every such vertex difference is tried as a translation; a
    candidate survives when the translated polygon is a polygon of the
    surface and the assignment commutes with every edge gluing.

    Returns:
        Surviving maps polygon_id -> (image polygon_id, translation); expected empty.
    """
    candidates: dict[int, list[tuple[int, PlanarPoint]]] = {}
    for p, poly in enumerate(s.polygons):
        found: list[tuple[int, PlanarPoint]] = []
        for q, other in enumerate(s.polygons):
            for j in range(s.n):
                if other.edge(j) != poly.edge(0) or other.edge(j - 1) != poly.edge(-1):
                    continue
                shift = other.vertex(j) - poly.vertex(0)
                if all(poly.vertex(k) + shift == other.vertex(k + j) for k in range(s.n)):
                    found.append((q, shift))
        candidates[p] = found

    automorphisms: list[dict[int, tuple[int, PlanarPoint]]] = []

    def extend(p: int, chosen: dict[int, tuple[int, PlanarPoint]]) -> None:
        if p == len(s.polygons):
            images = [q for q, _ in chosen.values()]
            if len(set(images)) != len(images):
                return
            trivial = all(q == i and t.is_zero() for i, (q, t) in chosen.items())
            if not trivial and _commutes_with_gluing(s, chosen):
                automorphisms.append(dict(chosen))
            return
        for image in candidates[p]:
            chosen[p] = image
            extend(p + 1, chosen)
            del chosen[p]

    extend(0, {})
    return automorphisms


def _commutes_with_gluing(s: SurfaceDef, chosen: dict[int, tuple[int, PlanarPoint]]) -> bool:
    for (p, e), (q, f) in s.edge_pairs.items():
        image_p, shift_p = chosen[p]
        image_q, shift_q = chosen[q]
        source = s.polygon(p)
        target = s.polygon(image_p)
        # the edge (p, e) lands on the edge of image_p starting at v_e + shift_p
        start = source.vertex(e) + shift_p
        landed = [j for j in range(s.n) if target.vertex(j) == start]
        if not landed:
            return False
        partner = s.edge_pairs[(image_p, landed[0])]
        other_start = s.polygon(q).vertex(f) + shift_q
        if partner[0] != image_q or s.polygon(image_q).vertex(partner[1]) != other_start:
            return False
    return True
