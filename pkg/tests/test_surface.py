"""Unit tests for the n-gon surfaces, their marked points and straight-line flow."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from scripts.ngs.errors import DomainInputError, PointOutsideError, SingularityHitError
from scripts.ngs.exactnum import CycElt, cos_exact
from scripts.ngs.surface import (
    LocationKind,
    PlanarPoint,
    build_surface,
    canonicalize,
    center_point,
    cone_point,
    copies,
    develop,
    expected_genus,
    gauss_bonnet_defect,
    genus,
    hyperelliptic_image,
    is_cone_point,
    locate,
    midpoint,
    parse_point,
    parse_vector,
    translation_automorphisms,
    unit_vector,
    vertex_point,
    weierstrass_points,
)

SURFACES = [5, 7, 8, 10, 12, 14]


def point(conductor: int, x: Fraction | int, y: Fraction | int) -> PlanarPoint:
    return PlanarPoint(CycElt.from_rational(conductor, x), CycElt.from_rational(conductor, y))


class TestBuildSurface:
    """Construction and topology of the surfaces."""

    @pytest.mark.parametrize("n", [-1, 3, 4, 6])
    def test_rejects_unsupported_n(self, n: int) -> None:
        """n < 5 and n == 6 are rejected."""
        with pytest.raises(DomainInputError):
            build_surface(n)

    @pytest.mark.parametrize("n", SURFACES)
    def test_polygon_count(self, n: int) -> None:
        """One polygon for n even, two for n odd."""
        s = build_surface(n)
        assert len(s.polygons) == (2 if n % 2 else 1)
        assert s.is_double == (n % 2 == 1)
        assert s.conductor == 4 * n

    @pytest.mark.parametrize("n", SURFACES)
    def test_genus(self, n: int) -> None:
        """Genus from the Euler characteristic matches the closed form."""
        assert genus(build_surface(n)) == expected_genus(n)

    @pytest.mark.parametrize(("n", "g"), [(5, 2), (7, 3), (8, 2), (10, 2), (12, 3), (14, 3)])
    def test_genus_values(self, n: int, g: int) -> None:
        """floor(n/4) for n even, (n-1)/2 for n odd."""
        assert expected_genus(n) == g

    @pytest.mark.parametrize("n", SURFACES)
    def test_gauss_bonnet(self, n: int) -> None:
        """Cone angles are consistent with the genus."""
        assert gauss_bonnet_defect(build_surface(n)) == 0

    @pytest.mark.parametrize(("n", "classes"), [(5, 1), (7, 1), (8, 1), (10, 2), (12, 1), (14, 2)])
    def test_cone_class_count(self, n: int, classes: int) -> None:
        """Two cone points when n = 2 mod 4, one otherwise."""
        assert len(build_surface(n).cone_classes) == classes

    def test_octagon_cone_angle(self) -> None:
        """The single octagon cone point has angle 6 pi."""
        assert build_surface(8).cone_classes[0].angle == 6

    @pytest.mark.parametrize("n", SURFACES)
    def test_edge_pairs_are_an_involution(self, n: int) -> None:
        """Gluing twice returns the starting edge, and translations cancel."""
        s = build_surface(n)
        for edge, partner in s.edge_pairs.items():
            assert s.edge_pairs[partner] == edge
            assert (s.translations[edge] + s.translations[partner]).is_zero()

    @pytest.mark.parametrize("n", [5, 8, 10])
    def test_no_translation_automorphisms(self, n: int) -> None:
        """Only the identity is a translation automorphism."""
        assert translation_automorphisms(build_surface(n)) == []

    @pytest.mark.parametrize("n", [5, 8, 12])
    def test_area(self, n: int) -> None:
        """Each polygon has area (n/2) sin(2 pi / n)."""
        s = build_surface(n)
        expected = len(s.polygons) * n / 2 * math.sin(2 * math.pi / n)
        assert math.isclose(float(s.area), expected, rel_tol=1e-12)

    def test_build_is_cached(self) -> None:
        """Repeated builds return the same object."""
        assert build_surface(8) is build_surface(8)


class TestGeometry:
    """Exact planar predicates."""

    def test_unit_vectors(self) -> None:
        """Angle 0 is (1, 0) and angle pi/2 is (0, 1)."""
        assert unit_vector(8, 0) == point(32, 1, 0)
        assert unit_vector(8, 8) == point(32, 0, 1)

    def test_locate(self) -> None:
        """Center, edge midpoint and vertex are told apart."""
        poly = build_surface(8).polygon(0)
        assert locate(poly, point(32, 0, 0)).kind is LocationKind.INTERIOR
        assert locate(poly, poly.midpoint(3)).kind is LocationKind.EDGE
        assert locate(poly, poly.midpoint(3)).index == 3
        assert locate(poly, poly.vertex(5)).kind is LocationKind.VERTEX
        assert locate(poly, poly.vertex(5)).index == 5

    def test_locate_outside_raises(self) -> None:
        """A point beyond the circumcircle is outside."""
        poly = build_surface(8).polygon(0)
        with pytest.raises(PointOutsideError):
            locate(poly, point(32, 2, 0))

    def test_top_vertex(self) -> None:
        """Vertex 0 of the first polygon is at (0, 1)."""
        assert build_surface(7).polygon(0).vertex(0) == point(28, 0, 1)

    def test_second_polygon_has_flat_top(self) -> None:
        """Edge n-1 of the second polygon is horizontal."""
        s = build_surface(7)
        assert s.polygon(1).edge(6).y.is_zero()


class TestMarkedPoints:
    """Canonical points, the involution and the Weierstrass points."""

    @pytest.mark.parametrize("n", SURFACES)
    def test_weierstrass_count(self, n: int) -> None:
        """There are 2g + 2 Weierstrass points."""
        s = build_surface(n)
        assert len(weierstrass_points(s).weierstrass) == 2 * genus(s) + 2

    def test_octagon_inventory(self) -> None:
        """Center, four midpoints and the vertex."""
        s = build_surface(8)
        marked = weierstrass_points(s)
        expected = {center_point(s), vertex_point(s, 0)} | {midpoint(s, k) for k in range(4)}
        assert set(marked.weierstrass) == expected
        assert len(marked.periodic) == 5

    def test_decagon_inventory(self) -> None:
        """Center and five midpoints; no cone point is Weierstrass."""
        s = build_surface(10)
        marked = weierstrass_points(s)
        expected = {center_point(s)} | {midpoint(s, k) for k in range(5)}
        assert set(marked.weierstrass) == expected
        assert not set(marked.cone) & set(marked.weierstrass)

    def test_pentagon_inventory(self) -> None:
        """Five midpoints and the cone point; P_n is the cone point."""
        s = build_surface(5)
        marked = weierstrass_points(s)
        expected = {cone_point(s, 0)} | {midpoint(s, k) for k in range(5)}
        assert set(marked.weierstrass) == expected
        assert marked.center == cone_point(s, 0)
        assert center_point(s, 0) not in marked.weierstrass

    def test_midpoint_copies_share_canonical_form(self) -> None:
        """Both copies of an edge midpoint canonicalize to the same point."""
        s = build_surface(8)
        a = canonicalize(s, 0, s.polygon(0).midpoint(1))
        b = canonicalize(s, 0, s.polygon(0).midpoint(5))
        assert a == b

    def test_vertex_copies(self) -> None:
        """All eight octagon corners are one point."""
        s = build_surface(8)
        assert len(copies(s, 0, s.polygon(0).vertex(0))) == 8
        assert is_cone_point(s, vertex_point(s, 3))

    def test_involution_swaps_polygons_for_odd_n(self) -> None:
        """An interior point of the first heptagon maps into the second."""
        s = build_surface(7)
        p = canonicalize(s, 0, point(28, Fraction(1, 10), Fraction(1, 5)))
        image = hyperelliptic_image(s, p)
        assert image.polygon_id == 1
        assert image.position == point(28, Fraction(-1, 10), Fraction(-1, 5))
        assert hyperelliptic_image(s, image) == p

    @pytest.mark.parametrize("n", SURFACES)
    def test_involution_squares_to_identity(self, n: int) -> None:
        """Applying the involution twice returns every marked point."""
        s = build_surface(n)
        for p in weierstrass_points(s).marked:
            assert hyperelliptic_image(s, hyperelliptic_image(s, p)) == p

    def test_cone_index_out_of_range(self) -> None:
        """cone:k must name an existing class."""
        with pytest.raises(DomainInputError):
            cone_point(build_surface(8), 1)


class TestDevelop:
    """Straight-line flow across the gluings."""

    def test_horizontal_loop_through_decagon_center(self) -> None:
        """Twice the apothem horizontally returns to the center through a midpoint."""
        s = build_surface(10)
        apothem = cos_exact(1, 10).promote(s.conductor)
        u = PlanarPoint(apothem * 2, CycElt.from_rational(s.conductor, 0))
        marked = weierstrass_points(s).weierstrass
        path = develop(s, 0, point(40, 0, 0), u, marked=marked)
        assert path.end == center_point(s)
        assert path.crossings == ((0, 7),)
        assert path.passes_through == (marked.index(midpoint(s, 7)),)

    def test_path_into_vertex_raises(self) -> None:
        """The horizontal through the octagon center runs into a vertex."""
        s = build_surface(8)
        with pytest.raises(SingularityHitError):
            develop(s, 0, point(32, 0, 0), point(32, 2, 0))

    def test_short_path_stays_inside(self) -> None:
        """A short interior path has one piece and no crossing."""
        s = build_surface(8)
        path = develop(s, 0, point(32, 0, 0), point(32, Fraction(1, 4), Fraction(1, 8)))
        assert path.crossings == ()
        assert len(path.pieces) == 1
        assert path.end.position == point(32, Fraction(1, 4), Fraction(1, 8))


class TestPointSpec:
    """Parsing of exact point names."""

    def test_named_points(self) -> None:
        """center, cone, midpoint and vertex names resolve to canonical points."""
        s = build_surface(8)
        assert parse_point(s, "center") == center_point(s)
        assert parse_point(s, "cone:0") == cone_point(s, 0)
        assert parse_point(s, "midpoint:5") == midpoint(s, 1)
        assert parse_point(s, "vertex:3") == cone_point(s, 0)

    def test_second_polygon(self) -> None:
        """center:1 and midpoint:k@1 address the second polygon."""
        s = build_surface(7)
        assert parse_point(s, "center:1") == center_point(s, 1)
        assert parse_point(s, "midpoint:2@1") == midpoint(s, 2, 1)

    def test_coordinates(self) -> None:
        """poly:<id>;x=..;y=.. accepts rationals."""
        s = build_surface(8)
        p = parse_point(s, "poly:0;x=1/4;y=-1/3")
        assert p.position == point(32, Fraction(1, 4), Fraction(-1, 3))

    def test_coefficient_vector(self) -> None:
        """A bracketed coefficient vector is a power-basis element."""
        s = build_surface(5)
        p = parse_point(s, "poly:0;x=[1/5];y=[0]")
        assert p.position == point(20, Fraction(1, 5), 0)

    @pytest.mark.parametrize(
        "text",
        ["nowhere", "cone", "midpoint:9", "center:2", "poly:0;x=2;y=0", "poly:0;x=a;y=0", "cone:3"],
    )
    def test_rejects_bad_specs(self, text: str) -> None:
        """Malformed or out-of-range specs raise DomainInputError."""
        with pytest.raises(DomainInputError):
            parse_point(build_surface(8), text)

    def test_vector(self) -> None:
        """Vectors parse as exact pairs; the zero vector is rejected."""
        s = build_surface(8)
        assert parse_vector(s, "1,-1/2") == point(32, 1, Fraction(-1, 2))
        with pytest.raises(DomainInputError):
            parse_vector(s, "0,0")
        with pytest.raises(DomainInputError):
            parse_vector(s, "1")
