"""Finite blocking on the right triangle with angles pi/2, pi/n and (n-2)pi/(2n).

Unfolding the triangle gives the regular n-gon surface (n even) or the double
n-gon (n odd). Two triangle points are finitely blocked exactly when every
pair of their preimages is finitely blocked on the surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from scripts.ngs.blocking.queries import BlockingVerdict, is_blocked
from scripts.ngs.surface.marked import (
    SurfacePoint,
    center_point,
    cone_point,
    midpoint,
    sort_points,
)
from scripts.ngs.surface.model import SurfaceDef, build_surface

RIGHT = "right"
ACUTE = "acute"
CONE = "cone"
VERTEX_NAMES = (RIGHT, ACUTE, CONE)


@dataclass(frozen=True)
class TriangleModel:
    """The unfolded triangle and the preimages of its vertices.

    Attributes:
        n: Number of polygon sides.
        angles: Vertex angles as multiples of pi, keyed by vertex name.
        vertex_preimages: Canonical preimages of each vertex.
    """

    n: int
    angles: dict[str, Fraction]
    vertex_preimages: dict[str, tuple[SurfacePoint, ...]]

    @property
    def angle_sum(self) -> Fraction:
        return sum(self.angles.values(), Fraction(0))

    def preimage_count(self, vertex: str) -> int:
        return len(self.vertex_preimages[vertex])


def triangle_model(s: SurfaceDef) -> TriangleModel:
    """Vertex angles and preimages for the triangle unfolding to s.

    The pi/n vertex unfolds to the polygon centers, the right angle to the
    edge midpoints and the remaining vertex to the cone points.
    """
    n = s.n
    centers = {center_point(s, p) for p in range(len(s.polygons))}
    midpoints = {midpoint(s, k, p) for p in range(len(s.polygons)) for k in range(n)}
    cones = {cone_point(s, i) for i in range(len(s.cone_classes))}
    return TriangleModel(
        n=n,
        angles={
            RIGHT: Fraction(1, 2),
            ACUTE: Fraction(1, n),
            CONE: Fraction(n - 2, 2 * n),
        },
        vertex_preimages={
            RIGHT: tuple(sort_points(midpoints)),
            ACUTE: tuple(sort_points(centers)),
            CONE: tuple(sort_points(cones)),
        },
    )


@dataclass(frozen=True)
class PreimageVerdict:
    """Surface verdict for one pair of preimages."""

    first: str
    second: str
    p: SurfacePoint
    q: SurfacePoint
    verdict: BlockingVerdict


@dataclass(frozen=True)
class TriangleReport:
    """Blocked vertex pairs of the triangle and the verdicts behind them.

    Attributes:
        model: The triangle model.
        blocked_pairs: Vertex pairs whose every preimage pair is blocked.
        verdicts: Every preimage-pair verdict, by vertex pair.
    """

    model: TriangleModel
    blocked_pairs: tuple[tuple[str, str], ...]
    verdicts: tuple[PreimageVerdict, ...]


def triangle_blocked_pairs(n: int) -> TriangleReport:
    """Finitely blocked vertex pairs of the right triangle with smallest angle pi/n.

    Raises:
        DomainInputError: If n < 5 or n == 6.
    """
    s = build_surface(n)
    model = triangle_model(s)
    verdicts: list[PreimageVerdict] = []
    blocked: list[tuple[str, str]] = []
    for first, second in combinations_with_replacement(VERTEX_NAMES, 2):
        pair_verdicts = [
            PreimageVerdict(first, second, p, q, is_blocked(s, p, q).verdict)
            for p in model.vertex_preimages[first]
            for q in model.vertex_preimages[second]
        ]
        verdicts.extend(pair_verdicts)
        if all(v.verdict is BlockingVerdict.BLOCKED for v in pair_verdicts):
            blocked.append((first, second))
    return TriangleReport(model=model, blocked_pairs=tuple(blocked), verdicts=tuple(verdicts))
