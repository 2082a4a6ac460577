"""Unit tests for the Veech-group generators, their action and cusp reduction."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from scripts.ngs.errors import DomainInputError
from scripts.ngs.exactnum import CycElt
from scripts.ngs.surface import (
    PlanarPoint,
    build_surface,
    canonicalize,
    center_point,
    cone_point,
    hyperelliptic_image,
    unit_vector,
    weierstrass_points,
)
from scripts.ngs.surface.geometry import is_parallel
from scripts.ngs.veech import (
    GroupWord,
    OrbitStatus,
    act,
    all_letters,
    cusp_direction,
    cusp_lines,
    generator_names,
    generators,
    letter_matrix,
    orbit,
    parabolic,
    reduce_direction,
    rotation,
    translation_length,
)


def point(conductor: int, x: Fraction | int, y: Fraction | int) -> PlanarPoint:
    return PlanarPoint(CycElt.from_rational(conductor, x), CycElt.from_rational(conductor, y))


class TestMatrices:
    """Generators and words."""

    def test_generator_names(self) -> None:
        """r2, s, t for n even; r, s for n odd."""
        assert generator_names(8) == ("r2", "s", "t")
        assert generator_names(7) == ("r", "s")

    @pytest.mark.parametrize("n", [5, 7, 8, 10])
    def test_generators_have_unit_determinant(self, n: int) -> None:
        """Every generator lies in SL(2)."""
        for _, m in generators(n):
            assert m.det() == 1

    def test_rotation_order(self) -> None:
        """Rotation by pi/n has order 2n."""
        r = rotation(8, 1)
        assert (r**16).is_identity()
        assert not (r**8).is_identity()

    def test_parabolic_fixes_horizontal(self) -> None:
        """s_n fixes the horizontal direction."""
        e1 = point(32, 1, 0)
        assert parabolic(8).apply(e1) == e1

    @pytest.mark.parametrize("n", [5, 8, 12])
    def test_translation_length(self, n: int) -> None:
        """The shear is 2 cot(pi/n)."""
        expected = 2 / math.tan(math.pi / n)
        assert math.isclose(float(translation_length(n)), expected, rel_tol=1e-12)

    def test_word_parse_and_str(self) -> None:
        """Powers expand into repeated letters."""
        w = GroupWord.parse(8, "s r2^-2 t")
        assert w.letters == (("s", 1), ("r2", -1), ("r2", -1), ("t", 1))
        assert str(w) == "s r2^-1 r2^-1 t"
        assert str(GroupWord.parse(8, "id")) == "id"

    def test_word_times_inverse_is_identity(self) -> None:
        """A word followed by its inverse has the identity matrix."""
        w = GroupWord.parse(7, "s r s^-1 r")
        assert (w * w.inverse()).matrix.is_identity()

    def test_unknown_generator(self) -> None:
        """Letters outside the generator set are rejected."""
        with pytest.raises(DomainInputError):
            GroupWord.parse(7, "t")
        with pytest.raises(DomainInputError):
            letter_matrix(8, "s", 2)

    def test_all_letters(self) -> None:
        """Each generator appears with both exponents."""
        assert all_letters(7) == [("r", 1), ("r", -1), ("s", 1), ("s", -1)]


class TestAction:
    """Affine action on surface points."""

    def test_generators_fix_center_for_even_n(self) -> None:
        """Every generator fixes the octagon center."""
        s = build_surface(8)
        center = center_point(s)
        for letter in all_letters(8):
            assert act(s, GroupWord.of(8, letter), center) == center

    @pytest.mark.parametrize("n", [5, 7, 8, 10])
    def test_weierstrass_points_permuted(self, n: int) -> None:
        """Generators map Weierstrass points to Weierstrass points."""
        s = build_surface(n)
        marked = weierstrass_points(s)
        weierstrass = set(marked.weierstrass)
        for p in marked.periodic:
            for letter in all_letters(n):
                assert act(s, GroupWord.of(n, letter), p) in weierstrass

    @pytest.mark.parametrize("n", [7, 8])
    def test_word_then_inverse(self, n: int) -> None:
        """Acting by a word and then its inverse returns the point."""
        s = build_surface(n)
        p = canonicalize(s, 0, point(4 * n, Fraction(1, 10), Fraction(1, 5)))
        w = GroupWord.parse(n, "s " + generator_names(n)[0])
        assert act(s, w.inverse(), act(s, w, p)) == p

    def test_bare_matrix_matches_word(self) -> None:
        """A matrix and the word it came from act the same way (n even)."""
        s = build_surface(8)
        p = canonicalize(s, 0, point(32, Fraction(1, 5), Fraction(-1, 7)))
        w = GroupWord.parse(8, "t s")
        assert act(s, w.matrix, p) == act(s, w, p)

    @pytest.mark.parametrize(("n", "half_turn"), [(5, "r^5"), (7, "r^7"), (8, "r2^4")])
    def test_minus_identity_is_the_involution(self, n: int, half_turn: str) -> None:
        """The rotation by pi acts as the hyperelliptic involution."""
        s = build_surface(n)
        word = GroupWord.parse(n, half_turn)
        assert (-word.matrix).is_identity()
        points = [
            canonicalize(s, 0, point(4 * n, Fraction(1, 10), Fraction(1, 5))),
            canonicalize(s, 0, point(4 * n, Fraction(-2, 7), Fraction(1, 9))),
            *weierstrass_points(s).periodic,
        ]
        for p in points:
            assert act(s, word, p) == hyperelliptic_image(s, p)

    @pytest.mark.parametrize(
        ("n", "first", "second"),
        [
            (5, "s r", "r^-1 s^-1 s^-1"),
            (5, "s s", "r s"),
            (8, "t s^-1", "r2 s t"),
            (8, "s^-1", "t t"),
        ],
    )
    def test_action_composes(self, n: int, first: str, second: str) -> None:
        """Acting by a product is acting by the factors, rightmost first."""
        s = build_surface(n)
        p = canonicalize(s, 0, point(4 * n, Fraction(1, 6), Fraction(-1, 8)))
        w1, w2 = GroupWord.parse(n, first), GroupWord.parse(n, second)
        assert act(s, w1 * w2, p) == act(s, w1, act(s, w2, p))

    def test_long_words_have_unit_determinant(self) -> None:
        """Products of six letters stay in SL(2)."""
        for text in ("s r s r^-1 s s", "r r s^-1 r s r", "s^-1 s^-1 r^-1 s r^-1 s^-1"):
            assert GroupWord.parse(7, text).matrix.det() == 1


class TestOrbit:
    """Bounded orbit search."""

    def test_center_orbit_is_a_point(self) -> None:
        """The octagon center is fixed by the whole group."""
        s = build_surface(8)
        result = orbit(s, center_point(s), 3)
        assert result.is_finite
        assert result.points == (center_point(s),)

    @pytest.mark.parametrize("n", [5, 8, 10])
    def test_periodic_points_have_finite_orbits(self, n: int) -> None:
        """Orbits of non-cone Weierstrass points stay in the Weierstrass set."""
        s = build_surface(n)
        marked = weierstrass_points(s)
        for p in marked.periodic:
            result = orbit(s, p, 6)
            assert result.is_finite
            assert set(result.points) <= set(marked.weierstrass)

    def test_generic_point_exceeds_bound(self) -> None:
        """A generic rational point does not close up within two letters."""
        s = build_surface(8)
        p = canonicalize(s, 0, point(32, Fraction(3, 17), Fraction(2, 11)))
        result = orbit(s, p, 2)
        assert result.status is OrbitStatus.EXCEEDED

    def test_orbit_words_reach_their_points(self) -> None:
        """The stored word for each orbit point maps the start onto it."""
        s = build_surface(5)
        start = weierstrass_points(s).periodic[0]
        result = orbit(s, start, 6)
        for q, w in result.words.items():
            assert act(s, w, start) == q

    def test_rejects_cone_point_and_bad_bound(self) -> None:
        """Cone points and word_bound < 1 are rejected."""
        s = build_surface(8)
        with pytest.raises(DomainInputError):
            orbit(s, cone_point(s, 0), 3)
        with pytest.raises(DomainInputError):
            orbit(s, center_point(s), 0)


class TestCusps:
    """Reduction of periodic directions to cusp directions."""

    def test_cusp_lines(self) -> None:
        """There are n lines at angles j*pi/n."""
        assert len(cusp_lines(8)) == 8
        assert cusp_lines(8)[0] == unit_vector(8, 0)

    def test_odd_n_has_one_cusp(self) -> None:
        """Cusp 1 exists only for n even."""
        assert cusp_direction(8, 1) == unit_vector(8, 2)
        with pytest.raises(DomainInputError):
            cusp_direction(7, 1)

    def test_horizontal_needs_no_word(self) -> None:
        """The horizontal direction is already a cusp."""
        reduction = reduce_direction(8, unit_vector(8, 0))
        assert reduction is not None
        assert reduction.word.letters == ()
        assert reduction.cusp == 0

    def test_rotated_line(self) -> None:
        """The line at angle pi/n is the second cusp for n even."""
        reduction = reduce_direction(8, unit_vector(8, 2))
        assert reduction is not None
        assert reduction.cusp == 1

    @pytest.mark.parametrize(("n", "word"), [(8, "s"), (8, "t s^-1"), (7, "s r s")])
    def test_sheared_directions_reduce(self, n: int, word: str) -> None:
        """Images of cusp directions reduce back to a cusp."""
        v = GroupWord.parse(n, word).matrix.apply(unit_vector(n, 2))
        reduction = reduce_direction(n, v)
        assert reduction is not None
        assert is_parallel(reduction.image, cusp_direction(n, reduction.cusp))

    def test_shear_of_rotated_line_reduces_by_inverse_shear(self) -> None:
        """s applied to the pi/8 line reduces back through s^-1 to cusp 1."""
        v = parabolic(8).apply(unit_vector(8, 2))
        reduction = reduce_direction(8, v)
        assert reduction is not None
        assert str(reduction.word) == "s^-1"
        assert reduction.cusp == 1
        assert reduction.image == unit_vector(8, 2)
        assert reduction.scale == 1

    def test_scale_is_signed(self) -> None:
        """A reversed direction reduces with a negative scale."""
        reduction = reduce_direction(8, -unit_vector(8, 0).scale(2))
        assert reduction is not None
        assert reduction.scale == -2

    def test_zero_direction(self) -> None:
        """The zero vector has no direction."""
        with pytest.raises(DomainInputError):
            reduce_direction(8, point(32, 0, 0))
