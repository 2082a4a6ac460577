"""Affine action of Veech-group elements on surface points, and orbit search.

An affine map with derivative m that fixes a point b sends the straight
segment from b to p onto the straight segment from b with holonomy
m*(p - b), so images are computed by developing that segment. For n even
every generator fixes the polygon center. For n odd the rotation r swaps
the two polygons explicitly and the shear s fixes the midpoint of the
horizontal edge shared by both polygons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from scripts.ngs.errors import DomainInputError, GroupActionError, SingularityHitError
from scripts.ngs.surface.flow import develop
from scripts.ngs.surface.geometry import PlanarPoint
from scripts.ngs.surface.marked import (
    SurfacePoint,
    canonicalize,
    center_point,
    hyperelliptic_image,
    is_cone_point,
    sort_points,
    weierstrass_points,
)
from scripts.ngs.surface.model import SurfaceDef
from scripts.ngs.veech.matrices import GroupWord, Letter, Mat2, all_letters, letter_matrix, rotation


@lru_cache(maxsize=None)
def shear_base(s: SurfaceDef) -> tuple[PlanarPoint, ...]:
    """Per polygon, the copy of the point every horizontal shear fixes.

    n even: the center. n odd: the midpoint of the first polygon's bottom
    edge, which is glued to the top edge of the second polygon.
    """
    if not s.is_double:
        return (center_point(s).position,)
    first = s.polygon(0)
    bottom = next(
        e for e, vec in enumerate(first.edges) if vec.y.is_zero() and vec.x.sign() > 0
    )
    base = first.midpoint(bottom)
    return (base, base + s.translations[(0, bottom)])


def _develop_from(
    s: SurfaceDef,
    image: SurfacePoint,
    m: Mat2,
    p: SurfacePoint,
    base: tuple[PlanarPoint, ...],
    crossing_cap: int,
) -> SurfacePoint:
    """Image of p under the affine map with derivative m sending base to image."""
    offset = p.position - base[p.polygon_id]
    path = develop(s, image.polygon_id, image.position, m.apply(offset), crossing_cap=crossing_cap)
    return path.end


def _act_letter(s: SurfaceDef, letter: Letter, p: SurfacePoint, crossing_cap: int) -> SurfacePoint:
    name, exponent = letter
    if s.is_double and name == "r":
        turned = rotation(s.n, exponent).apply(p.position)
        return canonicalize(s, 1 - p.polygon_id, turned)
    m = letter_matrix(s.n, name, exponent)
    base = shear_base(s)
    return _develop_from(s, SurfacePoint(0, base[0]), m, p, base, crossing_cap)


def _length_proxy(m: Mat2) -> int:
    return max(1, math.ceil(max(abs(x) for x in m.shadow())))


@lru_cache(maxsize=256)
def _odd_base_image(s: SurfaceDef, m: Mat2, crossing_cap: int) -> SurfacePoint:
    """Image of the shear base point under the affine map with derivative m (n odd).

    The image is an edge midpoint; each candidate is tested by mapping every
    vertex and midpoint of the first polygon and checking that the result
    commutes with the hyperelliptic involution.
    """
    base = shear_base(s)
    marked = weierstrass_points(s)
    midpoints = set(marked.periodic)
    cone = marked.cone[0]
    first = s.polygon(0)
    marker = center_point(s, 0)

    def mapped(candidate: SurfacePoint, q: SurfacePoint) -> SurfacePoint:
        return _develop_from(s, candidate, m, q, base, crossing_cap)

    vertices = [canonicalize(s, 0, first.vertex(k)) for k in range(s.n)]
    edge_midpoints = [canonicalize(s, 0, first.midpoint(k)) for k in range(s.n)]
    passing: list[SurfacePoint] = []
    for candidate in sort_points(list(midpoints)):
        try:
            vertices_ok = all(mapped(candidate, q) == cone for q in vertices)
            midpoints_ok = vertices_ok and all(
                mapped(candidate, q) in midpoints for q in edge_midpoints
            )
            image = mapped(candidate, marker)
            mirrored = mapped(candidate, hyperelliptic_image(s, marker))
        except SingularityHitError:
            continue
        if midpoints_ok and mirrored == hyperelliptic_image(s, image):
            passing.append(candidate)

    if len(passing) != 1:
        raise GroupActionError(
            f"matrix {m} is not realised by a unique affine map of the n={s.n} surface "
            f"({len(passing)} consistent candidates)"
        )
    return passing[0]


def act(
    s: SurfaceDef,
    m: Mat2 | GroupWord,
    p: SurfacePoint,
    *,
    refold_factor: int = 10,
) -> SurfacePoint:
    """Apply a Veech-group element to a point.

    Args:
        s: The surface.
        m: A word in the generators, or a bare matrix of the group.
        p: Canonical point.
        refold_factor: The crossing cap is refold_factor * (word length) * n.

    Returns:
        The canonical image point.

    Raises:
        RefoldError: If developing the image exceeds the crossing cap.
        GroupActionError: If a bare matrix cannot be realised (n odd).
    """
    if isinstance(m, GroupWord):
        cap = refold_factor * s.n
        for letter in reversed(m.letters):
            p = _act_letter(s, letter, p, cap)
        return p

    cap = refold_factor * _length_proxy(m) * s.n
    base = shear_base(s)
    if m.is_identity():
        return canonicalize(s, p.polygon_id, p.position)
    if not s.is_double:
        return _develop_from(s, SurfacePoint(0, base[0]), m, p, base, cap)
    return _develop_from(s, _odd_base_image(s, m, cap), m, p, base, cap)


class OrbitStatus(str, Enum):
    FINITE = "finite-within-bound"
    EXCEEDED = "exceeded-bound"


@dataclass(frozen=True)
class OrbitResult:
    """Outcome of a bounded orbit search.

    Attributes:
        points: Canonical orbit points found, sorted.
        status: finite-within-bound or exceeded-bound.
        word_bound: Longest word expanded.
        words: A shortest word reaching each point.
    """

    points: tuple[SurfacePoint, ...]
    status: OrbitStatus
    word_bound: int
    words: dict[SurfacePoint, GroupWord] = field(default_factory=dict, compare=False, repr=False)

    @property
    def is_finite(self) -> bool:
        return self.status is OrbitStatus.FINITE


def orbit(
    s: SurfaceDef,
    p: SurfacePoint,
    word_bound: int,
    *,
    point_cap: int = 512,
    refold_factor: int = 10,
) -> OrbitResult:
    """Breadth-first orbit of p under the generators and their inverses.

    The orbit is finite-within-bound when some layer adds no new point before
    any word longer than word_bound is needed.

    Raises:
        DomainInputError: If p is a cone point or word_bound < 1.
    """
    if word_bound < 1:
        raise DomainInputError(f"word_bound must be at least 1, got {word_bound}")
    start = canonicalize(s, p.polygon_id, p.position)
    if is_cone_point(s, start):
        raise DomainInputError(f"orbit of the cone point {start} is not defined")

    letters = all_letters(s.n)
    cap = refold_factor * s.n
    words: dict[SurfacePoint, GroupWord] = {start: GroupWord.identity(s.n)}
    frontier = [start]
    depth = 0
    status = OrbitStatus.FINITE
    while frontier:
        fresh: dict[SurfacePoint, GroupWord] = {}
        for q in frontier:
            for letter in letters:
                image = _act_letter(s, letter, q, cap)
                if image not in words and image not in fresh:
                    fresh[image] = GroupWord(s.n, (letter,) + words[q].letters)
        if not fresh:
            break
        if depth + 1 > word_bound or len(words) + len(fresh) > point_cap:
            status = OrbitStatus.EXCEEDED
            break
        words.update(fresh)
        depth += 1
        frontier = sort_points(list(fresh))

    return OrbitResult(
        points=tuple(sort_points(list(words))),
        status=status,
        word_bound=word_bound,
        words=words,
    )

