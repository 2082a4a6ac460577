"""Unit tests for exact cyclotomic arithmetic and the sine-ratio decision."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scripts.ngs.errors import DomainInputError
from scripts.ngs.exactnum import (
    CycElt,
    cos_exact,
    cyclotomic_poly,
    euler_phi,
    g_of,
    rational_sine_ratios,
    reduce,
    sin_exact,
    sine_ratio_rational,
    verify_section4,
)
from scripts.ngs.exactnum.poly import CycPoly
from scripts.ngs.exactnum.section4 import alternating_poly, log_bound, match_four_term_shape
from scripts.ngs.exactnum.sines import reduced_fractions, sine_field_key

CONDUCTORS = [20, 28, 40]

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def elements(draw: st.DrawFn, conductor: int) -> CycElt:
    coeffs = draw(st.lists(small_fractions, min_size=1, max_size=euler_phi(conductor)))
    return CycElt(conductor, coeffs)


class TestCycEltArithmetic:
    """Field operations on CycElt."""

    @pytest.mark.parametrize("conductor", CONDUCTORS)
    def test_zeta_has_order_conductor(self, conductor: int) -> None:
        """zeta_m^m is 1 and zeta_m^k for 0 < k < m is not."""
        zeta = CycElt.zeta(conductor)
        assert zeta**conductor == 1
        assert all(zeta**k != 1 for k in range(1, conductor))

    def test_rational_embedding_round_trips(self) -> None:
        """from_rational followed by is_rational returns the same value."""
        x = CycElt.from_rational(20, Fraction(-3, 7))
        assert x.is_rational() == Fraction(-3, 7)

    def test_equality_with_int_and_fraction(self) -> None:
        """Rational elements compare equal to ints and Fractions."""
        assert CycElt.from_rational(12, 2) == 2
        assert CycElt.from_rational(12, Fraction(1, 2)) == Fraction(1, 2)
        assert CycElt.zeta(12) != 1

    def test_inverse_of_zero_raises(self) -> None:
        """Zero has no inverse."""
        with pytest.raises(ZeroDivisionError):
            CycElt.from_rational(20, 0).inverse()

    def test_reduce_is_idempotent(self) -> None:
        """Re-reducing an element leaves it unchanged."""
        x = CycElt(20, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11])
        assert reduce(x) == x
        assert reduce(reduce(x)) == reduce(x)

    def test_promote_preserves_value_and_hash(self) -> None:
        """Promotion to a multiple conductor keeps equality and the hash."""
        x = sin_exact(1, 5)
        y = x.promote(4 * x.conductor)
        assert x == y
        assert hash(x) == hash(y)

    def test_promote_to_non_multiple_raises(self) -> None:
        """Promotion needs a multiple of the conductor."""
        with pytest.raises(ValueError):
            CycElt.zeta(12).promote(20)

    def test_mixed_conductor_addition(self) -> None:
        """sin(pi/6) in Q(zeta_12) plus 1/2 in Q(zeta_20) is 1."""
        assert sin_exact(1, 6) + CycElt.from_rational(20, Fraction(1, 2)) == 1

    def test_conjugate_of_real_is_itself(self) -> None:
        """Sines are real elements."""
        assert sin_exact(2, 7).is_real()
        assert not CycElt.zeta(7).is_real()

    def test_to_strings_exports_coefficients(self) -> None:
        """to_strings lists phi(m) rational strings."""
        x = CycElt(12, [Fraction(1, 2), 0, 0, 0])
        assert x.to_strings() == ["1/2", "0", "0", "0"]

    @pytest.mark.parametrize("conductor", CONDUCTORS)
    @given(data=st.data())
    @settings(max_examples=25, deadline=None)
    def test_distributivity(self, conductor: int, data: st.DataObject) -> None:
        """x * (y + z) == x*y + x*z."""
        x = data.draw(elements(conductor))
        y = data.draw(elements(conductor))
        z = data.draw(elements(conductor))
        assert x * (y + z) == x * y + x * z

    @pytest.mark.parametrize("conductor", CONDUCTORS)
    @given(data=st.data())
    @settings(max_examples=25, deadline=None)
    def test_associativity(self, conductor: int, data: st.DataObject) -> None:
        """(x*y)*z == x*(y*z)."""
        x = data.draw(elements(conductor))
        y = data.draw(elements(conductor))
        z = data.draw(elements(conductor))
        assert (x * y) * z == x * (y * z)

    @pytest.mark.parametrize("conductor", CONDUCTORS)
    @given(data=st.data())
    @settings(max_examples=25, deadline=None)
    def test_inverse(self, conductor: int, data: st.DataObject) -> None:
        """x * inverse(x) == 1 for nonzero x."""
        x = data.draw(elements(conductor))
        if x.is_zero():
            return
        assert x * x.inverse() == 1

    @pytest.mark.parametrize("conductor", CONDUCTORS)
    @given(data=st.data())
    @settings(max_examples=25, deadline=None)
    def test_embedding_is_homomorphism(self, conductor: int, data: st.DataObject) -> None:
        """embed(x*y) agrees with embed(x)*embed(y) at float precision."""
        x = data.draw(elements(conductor))
        y = data.draw(elements(conductor))
        assert abs((x * y).embed() - x.embed() * y.embed()) < 1e-9 * (
            1 + abs(x.embed()) * abs(y.embed())
        )


class TestSigns:
    """Exact sign decisions."""

    def test_rational_signs(self) -> None:
        """Rational elements take the sign of their value."""
        assert CycElt.from_rational(20, Fraction(-1, 3)).sign() == -1
        assert CycElt.from_rational(20, 0).sign() == 0
        assert CycElt.from_rational(20, 5).sign() == 1

    def test_sign_close_to_a_rational(self) -> None:
        """sin(pi/7) lies between 0.43388 and 0.43389."""
        s = sin_exact(1, 7)
        assert (s - Fraction(43388, 100000)).sign() == 1
        assert (s - Fraction(43389, 100000)).sign() == -1

    def test_identity_has_sign_zero(self) -> None:
        """sin^2 + cos^2 - 1 is exactly zero."""
        s, c = sin_exact(3, 11), cos_exact(3, 11)
        assert (s * s + c * c - 1).sign() == 0

    def test_comparisons(self) -> None:
        """Ordering of sines follows the angles below pi/2."""
        assert sin_exact(1, 9) < sin_exact(2, 9) < sin_exact(4, 9)
        assert sin_exact(4, 9) >= sin_exact(4, 9)
        assert abs(-sin_exact(1, 9)) == sin_exact(1, 9)


class TestTrigValues:
    """Exact sine and cosine values."""

    @pytest.mark.parametrize(
        ("k", "m", "value"),
        [(1, 6, Fraction(1, 2)), (1, 2, Fraction(1)), (0, 5, Fraction(0)), (5, 6, Fraction(1, 2))],
    )
    def test_rational_sines(self, k: int, m: int, value: Fraction) -> None:
        """Sines with rational values reduce to rationals."""
        assert sin_exact(k, m).is_rational() == value

    @pytest.mark.parametrize(("k", "m"), [(1, 5), (2, 7), (3, 10), (5, 12), (7, 18)])
    def test_float_shadow(self, k: int, m: int) -> None:
        """Float shadows match math.sin and math.cos."""
        assert math.isclose(float(sin_exact(k, m)), math.sin(math.pi * k / m), abs_tol=1e-12)
        assert math.isclose(float(cos_exact(k, m)), math.cos(math.pi * k / m), abs_tol=1e-12)

    def test_embed_of_zeta(self) -> None:
        """zeta_m embeds as exp(2 pi i / m)."""
        assert abs(CycElt.zeta(9).embed() - cmath.exp(2j * math.pi / 9)) < 1e-12

    def test_non_positive_denominator_rejected(self) -> None:
        """Sines need a positive denominator."""
        with pytest.raises(DomainInputError):
            sin_exact(1, 0)


class TestSineRatio:
    """Rationality of sin(pi*alpha)/sin(pi*beta)."""

    def test_one_sixth_over_one_half(self) -> None:
        """sin(pi/6)/sin(pi/2) is 1/2."""
        assert sine_ratio_rational(Fraction(1, 6), Fraction(1, 2)) == Fraction(1, 2)

    def test_equal_angles_give_one(self) -> None:
        """A sine over itself is 1."""
        assert sine_ratio_rational(Fraction(2, 7), Fraction(2, 7)) == 1

    @pytest.mark.parametrize(
        ("alpha", "beta"),
        [
            (Fraction(1, 5), Fraction(2, 5)),
            (Fraction(1, 10), Fraction(3, 10)),
            (Fraction(1, 8), Fraction(1, 2)),
        ],
    )
    def test_irrational_ratios(self, alpha: Fraction, beta: Fraction) -> None:
        """Generic pairs give irrational ratios."""
        assert sine_ratio_rational(alpha, beta) is None

    @pytest.mark.parametrize(
        ("alpha", "beta"),
        [
            (Fraction(0), Fraction(1, 2)),
            (Fraction(1, 2), Fraction(1, 3)),
            (Fraction(1, 3), Fraction(2, 3)),
        ],
    )
    def test_out_of_range_rejected(self, alpha: Fraction, beta: Fraction) -> None:
        """Arguments must satisfy 0 < alpha <= beta <= 1/2."""
        with pytest.raises(DomainInputError):
            sine_ratio_rational(alpha, beta)

    def test_different_fields_still_divide(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """sin(pi/7)/sin(pi/5) is decided by a quotient in Q(zeta_70)."""
        calls: list[int] = []
        original = CycElt.rational_quotient

        def counting(self: CycElt, other: CycElt) -> Fraction | None:
            calls.append(self.conductor)
            return original(self, other)

        monkeypatch.setattr(CycElt, "rational_quotient", counting)
        assert sine_ratio_rational(Fraction(1, 7), Fraction(1, 5)) is None
        assert calls == [70]

    def test_quotient_agrees_with_inverse(self) -> None:
        """Up to denominator 10 the verdict matches multiplying by the exact inverse."""
        angles = reduced_fractions(10)
        for i, alpha in enumerate(angles):
            for beta in angles[i:]:
                top = sin_exact(alpha.numerator, alpha.denominator)
                bottom = sin_exact(beta.numerator, beta.denominator)
                assert sine_ratio_rational(alpha, beta) == (top / bottom).is_rational()

    def test_field_keys_cross_check(self) -> None:
        """A rational ratio only occurs between sines with equal field keys."""
        angles = reduced_fractions(12)
        for i, alpha in enumerate(angles):
            for beta in angles[i:]:
                if sine_field_key(alpha.denominator) != sine_field_key(beta.denominator):
                    assert sine_ratio_rational(alpha, beta) is None

    def test_rational_quotient(self) -> None:
        """Exact quotients in Q(zeta_m), rational or not."""
        z = CycElt.zeta(12)
        assert (z * 3).rational_quotient(z * 2) == Fraction(3, 2)
        assert (z + 1).rational_quotient(z) is None
        with pytest.raises(ZeroDivisionError):
            z.rational_quotient(CycElt.from_rational(12, 0))

    def test_field_keys(self) -> None:
        """Rational sines share the key 1; denominators 5 and 7 give different fields."""
        assert sine_field_key(1) == sine_field_key(2) == sine_field_key(6) == 1
        assert sine_field_key(5) != sine_field_key(7)

    def test_reduced_fractions(self) -> None:
        """Reduced fractions up to 1/2 with denominator at most 4."""
        assert reduced_fractions(4) == [Fraction(1, 4), Fraction(1, 3), Fraction(1, 2)]

    def test_small_sweep(self) -> None:
        """Up to denominator 12 the only rational pair is (1/6, 1/2)."""
        assert rational_sine_ratios(12) == [(Fraction(1, 6), Fraction(1, 2), Fraction(1, 2))]

    @pytest.mark.slow
    def test_full_sweep(self) -> None:
        """Up to denominator 45 the only rational pair is (1/6, 1/2)."""
        assert rational_sine_ratios(45) == [(Fraction(1, 6), Fraction(1, 2), Fraction(1, 2))]


class TestCyclotomicPolynomials:
    """Cyclotomic polynomials and helpers."""

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 6, 12, 15, 30, 105])
    def test_degree_is_phi(self, m: int) -> None:
        """deg Phi_m == phi(m)."""
        assert cyclotomic_poly(m).degree == euler_phi(m)

    def test_phi_30_has_seven_terms(self) -> None:
        """Phi_30 = x^8 + x^7 - x^5 - x^4 - x^3 + x + 1."""
        assert cyclotomic_poly(30) == CycPoly.from_ints([1, 1, 0, -1, -1, -1, 0, 1, 1])
        assert cyclotomic_poly(30).nonzero_terms() == 7

    def test_phi_105_has_coefficient_minus_two(self) -> None:
        """Phi_105 is the first cyclotomic polynomial with a coefficient -2."""
        assert Fraction(-2) in cyclotomic_poly(105).coefficients

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_prime_phi_2p_alternates(self, p: int) -> None:
        """Phi_2p(x) = 1 - x + x^2 - ... + x^(p-1)."""
        assert cyclotomic_poly(2 * p) == alternating_poly(p)

    @pytest.mark.parametrize(("m", "g"), [(6, 6), (8, 16), (5, 20), (1, 4), (10, 10)])
    def test_g_of(self, m: int, g: int) -> None:
        """g_of by residue of m mod 4."""
        assert g_of(m) == g

    def test_four_term_shape_matches(self) -> None:
        """x^6 - 2x^4 + 2x^2 - 1 has k1=1, k2=3 and q=2."""
        poly = CycPoly.from_ints([-1, 0, 2, 0, -2, 0, 1])
        shape = match_four_term_shape(poly)
        assert shape is not None
        assert (shape.k1, shape.k2, shape.q) == (1, 3, Fraction(2))

    def test_four_term_shape_rejects_cyclotomic(self) -> None:
        """Phi_30 does not have the four-term shape."""
        assert match_four_term_shape(cyclotomic_poly(30)) is None


class TestSection4:
    """The exclusion sweep over odd squarefree N."""

    def test_all_candidates_excluded(self) -> None:
        """Every candidate N < 45 is excluded and every side condition holds."""
        report = verify_section4()
        assert report.all_excluded
        assert report.log_bound == 44
        assert report.g_injective and report.g_covers_evens and report.density_holds

    def test_log_bound(self) -> None:
        """44 is the largest N with N <= 10 log(2N)."""
        assert log_bound() == 44

    @pytest.mark.parametrize("n", [15, 33, 35])
    def test_many_term_exclusions(self, n: int) -> None:
        """These N fail through more than four nonzero coefficients."""
        entry = verify_section4().entry(n)
        assert entry.status == "excluded"
        assert entry.nonzero_terms is not None and entry.nonzero_terms > 4
        assert "more than four" in entry.reason

    @pytest.mark.parametrize("n", [21, 39])
    def test_gcd_skips(self, n: int) -> None:
        """gcd(N, phi(N)) != 1 removes these N before any polynomial work."""
        entry = verify_section4().entry(n)
        assert entry.status == "skipped"
        assert entry.nonzero_terms is None

    @pytest.mark.parametrize("n", [3, 5, 7, 11, 13, 43])
    def test_prime_exclusions(self, n: int) -> None:
        """Prime N go through the alternating shape."""
        assert "alternating" in verify_section4().entry(n).reason

    def test_small_bound_rejected(self) -> None:
        """The sweep needs n_max >= 45."""
        with pytest.raises(DomainInputError):
            verify_section4(30)
