"""Heights, rational-height tests and the canonical-direction height tables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from scripts.ngs.cylinders.decompose import Cylinder, Decomposition, decompose, level
from scripts.ngs.errors import DomainInputError, NotParallelError, PointOutsideError
from scripts.ngs.exactnum.field import CycElt, is_rational
from scripts.ngs.exactnum.sines import sin_exact
from scripts.ngs.surface.geometry import PlanarPoint, cross, dot, unit_vector
from scripts.ngs.surface.marked import SurfacePoint, copies
from scripts.ngs.surface.model import SurfaceDef
from scripts.ngs.veech.matrices import translation_length

DIRECTION_NAMES = ("horizontal", "rotated")


def canonical_direction(n: int, name: str) -> PlanarPoint:
    """Unit vector of a named cusp direction.

    Raises:
        DomainInputError: For an unknown name, or "rotated" with n odd.
    """
    if name == "horizontal":
        return unit_vector(n, 0)
    if name == "rotated":
        if n % 2 == 1:
            raise DomainInputError(f"n={n} is odd; the rotated direction is not a second cusp")
        return unit_vector(n, 2)
    raise DomainInputError(f"unknown direction '{name}'; expected one of {DIRECTION_NAMES}")


def expected_heights(n: int, name: str) -> list[CycElt]:
    """Closed-form cylinder heights in a canonical direction, in index order.

    n even, horizontal: 2 sin(pi/n) sin((2j+1)pi/n) for j < ceil(n/4).
    n even, rotated:    2 sin(pi/n) sin((2j+2)pi/n) for j < floor(n/4).
    n odd, horizontal:  2 sin(pi/n) sin(k pi/n) for 1 <= k <= (n-1)/2.
    """
    canonical_direction(n, name)
    conductor = 4 * n
    base = sin_exact(1, n).promote(conductor) * 2
    if n % 2 == 1:
        ks = list(range(1, (n - 1) // 2 + 1))
    elif name == "horizontal":
        ks = [2 * j + 1 for j in range(-(-n // 4))]
    else:
        ks = [2 * j + 2 for j in range(n // 4)]
    return [base * sin_exact(k, n).promote(conductor) for k in ks]


def height_fraction(c: Cylinder, p: SurfacePoint) -> CycElt:
    """Distance of p from the lower boundary of c, as a fraction of the height.

    Raises:
        PointOutsideError: If no copy of p lies in the closed cylinder.
    """
    s = c.surface
    v = c.direction
    for copy in copies(s, p.polygon_id, p.position):
        at = level(v, copy.position)
        for strip in c.strips:
            if strip.polygon_id == copy.polygon_id and strip.contains_level(at):
                return (at - strip.lower) / c.height
    raise PointOutsideError(f"point {p} is not in cylinder {c.index}")


def rational_height(c: Cylinder, p: SurfacePoint) -> Fraction | None:
    """The rational height fraction of p in c, or None when it is irrational.

    Raises:
        PointOutsideError: If p is not in the closed cylinder.
    """
    return is_rational(height_fraction(c, p))


def contains(c: Cylinder, p: SurfacePoint) -> bool:
    try:
        height_fraction(c, p)
    except PointOutsideError:
        return False
    return True


def cylinders_containing(s: SurfaceDef, d: Decomposition, p: SurfacePoint) -> list[Cylinder]:
    """Every closed cylinder of d containing p, in decomposition order."""
    if d.surface != s:
        raise DomainInputError(f"decomposition belongs to n={d.surface.n}, not n={s.n}")
    return [c for c in d.cylinders if contains(c, p)]


def height_ratio(c1: Cylinder, c2: Cylinder) -> CycElt:
    """Euclidean height of c1 over that of c2.

    Raises:
        NotParallelError: If the cylinders are not parallel.
    """
    v1, v2 = c1.direction, c2.direction
    if not cross(v1, v2).is_zero():
        raise NotParallelError(f"cylinders in directions {v1} and {v2} are not parallel")
    scale = abs(dot(v2, v1) / dot(v1, v1))
    return c1.height / c2.height * scale


def height_ratio_rational(c1: Cylinder, c2: Cylinder) -> Fraction | None:
    """The height ratio when it is rational, otherwise None.

    Raises:
        NotParallelError: If the cylinders are not parallel.
    """
    return is_rational(height_ratio(c1, c2))


def twist_multiplicities(d: Decomposition) -> list[CycElt]:
    """modulus * 2cot(pi/n) for every cylinder: the Dehn twist count of the parabolic."""
    shear = translation_length(d.surface.n)
    return [c.modulus * shear for c in d.cylinders]


def central_cylinder(s: SurfaceDef) -> Cylinder:
    """The cylinder containing the polygon center in its interior (n even).

    It runs horizontally when n = 2 mod 4 and at angle pi/n when 4 divides n.

    Raises:
        DomainInputError: If n is odd.
    """
    if s.is_double:
        raise DomainInputError(f"n={s.n} is odd; the central cylinder needs a polygon center")
    name = "horizontal" if s.n % 4 == 2 else "rotated"
    center = SurfacePoint(0, PlanarPoint.origin(s.conductor))
    for c in decompose(s, canonical_direction(s.n, name)).cylinders:
        if not contains(c, center):
            continue
        fraction = height_fraction(c, center)
        if fraction.sign() > 0 and (fraction - 1).sign() < 0:
            return c
    raise ArithmeticError(f"no cylinder holds the center of the n={s.n} polygon in its interior")


@dataclass(frozen=True)
class RatioEntry:
    """One pair of parallel cylinders and their height ratio."""

    first: int
    second: int
    ratio: Fraction | None
    adjacent: bool


def ratio_table(d: Decomposition) -> list[RatioEntry]:
    """Height ratios of every pair of distinct cylinders of d.

    Cylinders are indexed by increasing height, so every ratio is at most 1.
    """
    entries = []
    cylinders = d.cylinders
    for i, first in enumerate(cylinders):
        for second in cylinders[i + 1 :]:
            ratio = height_ratio_rational(first, second)
            entries.append(
                RatioEntry(first.index, second.index, ratio, (i, second.index) in d.adjacent)
            )
    return entries
