"""Unit tests for cylinder decompositions and rational heights."""

from __future__ import annotations

from fractions import Fraction

import pytest
from scripts.ngs.cylinders import (
    canonical_direction,
    central_cylinder,
    cylinders_containing,
    decompose,
    expected_heights,
    height_ratio,
    rational_height,
    ratio_table,
    twist_multiplicities,
)
from scripts.ngs.errors import DomainInputError, NotParallelError
from scripts.ngs.exactnum import CycElt, cos_exact, sin_exact
from scripts.ngs.surface import PlanarPoint, build_surface, center_point

CASES = [(5, "horizontal"), (7, "horizontal"), (8, "horizontal"), (8, "rotated"), (10, "rotated")]


class TestDecompose:
    """Cylinders of the canonical directions."""

    @pytest.mark.parametrize(("n", "name"), CASES)
    def test_heights_match_closed_form(self, n: int, name: str) -> None:
        """Heights agree exactly with 2 sin(pi/n) sin(k pi/n)."""
        d = decompose(build_surface(n), canonical_direction(n, name))
        assert [c.height for c in d.cylinders] == expected_heights(n, name)

    @pytest.mark.parametrize(("n", "name"), CASES)
    def test_area_is_conserved(self, n: int, name: str) -> None:
        """Cylinder areas add up to the surface area."""
        s = build_surface(n)
        assert decompose(s, canonical_direction(n, name)).total_area() == s.area

    @pytest.mark.parametrize(("n", "count"), [(5, 2), (7, 3), (8, 2), (10, 3)])
    def test_horizontal_cylinder_count(self, n: int, count: int) -> None:
        """ceil(n/4) cylinders for n even, (n-1)/2 for n odd."""
        d = decompose(build_surface(n), canonical_direction(n, "horizontal"))
        assert len(d.cylinders) == count

    @pytest.mark.parametrize(("n", "name"), CASES)
    def test_twists_are_positive_integers(self, n: int, name: str) -> None:
        """Every modulus times 2cot(pi/n) is a positive integer."""
        d = decompose(build_surface(n), canonical_direction(n, name))
        for twist in twist_multiplicities(d):
            q = twist.is_rational()
            assert q is not None and q.denominator == 1 and q > 0

    def test_boundaries_are_saddle_connections(self) -> None:
        """Every cylinder has saddle connections on both boundaries."""
        d = decompose(build_surface(8), canonical_direction(8, "horizontal"))
        count = len(d.saddle_connections)
        for c in d.cylinders:
            assert c.bottom and c.top
            assert all(0 <= k < count for k in c.boundary)

    def test_zero_direction(self) -> None:
        """The zero vector has no direction."""
        s = build_surface(8)
        zero = CycElt.from_rational(32, 0)
        with pytest.raises(DomainInputError):
            decompose(s, PlanarPoint(zero, zero))


class TestDirections:
    """Named directions."""

    def test_rotated_needs_even_n(self) -> None:
        """n odd has a single cusp."""
        with pytest.raises(DomainInputError):
            canonical_direction(7, "rotated")

    def test_unknown_name(self) -> None:
        """Only horizontal and rotated are known."""
        with pytest.raises(DomainInputError):
            canonical_direction(8, "diagonal")


class TestHeights:
    """Height fractions, ratios and the central cylinder."""

    @pytest.mark.parametrize("n", [8, 10, 12])
    def test_central_cylinder_modulus(self, n: int) -> None:
        """The cylinder through the center has modulus tan(pi/n)."""
        s = build_surface(n)
        c = central_cylinder(s)
        tan = sin_exact(1, n).promote(s.conductor) / cos_exact(1, n).promote(s.conductor)
        assert c.modulus == tan

    def test_center_is_at_half_height(self) -> None:
        """The center sits halfway up its cylinder."""
        s = build_surface(10)
        c = central_cylinder(s)
        assert rational_height(c, center_point(s)) == Fraction(1, 2)

    def test_cylinders_containing_center(self) -> None:
        """For n = 2 mod 4 only the central cylinder holds the center."""
        s = build_surface(10)
        d = decompose(s, canonical_direction(10, "horizontal"))
        found = cylinders_containing(s, d, center_point(s))
        assert [c.index for c in found] == [central_cylinder(s).index]

    def test_cylinders_containing_rejects_other_surface(self) -> None:
        """A decomposition of another surface is refused."""
        d = decompose(build_surface(8), canonical_direction(8, "horizontal"))
        s = build_surface(10)
        with pytest.raises(DomainInputError):
            cylinders_containing(s, d, center_point(s))

    def test_central_cylinder_needs_even_n(self) -> None:
        """n odd has no polygon center on the surface."""
        with pytest.raises(DomainInputError):
            central_cylinder(build_surface(7))

    def test_octagon_ratios_irrational(self) -> None:
        """Octagon horizontal heights have ratio tan(pi/8)."""
        table = ratio_table(decompose(build_surface(8), canonical_direction(8, "horizontal")))
        assert len(table) == 1
        assert table[0].ratio is None

    @pytest.mark.slow
    def test_dodecagon_rotated_half_ratio(self) -> None:
        """One rational ratio, 1/2, between non-adjacent cylinders."""
        table = ratio_table(decompose(build_surface(12), canonical_direction(12, "rotated")))
        rational = [e for e in table if e.ratio is not None]
        assert len(rational) == 1
        assert rational[0].ratio == Fraction(1, 2)
        assert not rational[0].adjacent

    def test_ratio_of_non_parallel_cylinders(self) -> None:
        """Cylinders of different directions have no height ratio."""
        s = build_surface(8)
        a = decompose(s, canonical_direction(8, "horizontal")).cylinders[0]
        b = decompose(s, canonical_direction(8, "rotated")).cylinders[0]
        with pytest.raises(NotParallelError):
            height_ratio(a, b)
