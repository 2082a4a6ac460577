"""Exact sines and cosines of rational multiples of pi, and sine-ratio rationality.

sin(pi*k/m) is realised as (zeta_{2m}^k - zeta_{2m}^-k) / (2i) inside
Q(zeta_M) with M = lcm(2m, 4), so every value is an exact CycElt.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from scripts.ngs.errors import DomainInputError
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.exactnum.poly import g_of, monomial_table


def _reduced(k: int, m: int) -> tuple[int, int]:
    if m < 1:
        raise DomainInputError(f"denominator must be positive, got {m}")
    g = gcd(k, m) or 1
    return k // g, m // g


def _binomial(conductor: int, a: int, b: int, sign: int, shift: int) -> CycElt:
    """(zeta^(a+shift) + sign * zeta^(b+shift)) / 2 in Q(zeta_conductor)."""
    table = monomial_table(conductor)
    first = table[(a + shift) % conductor]
    second = table[(b + shift) % conductor]
    return CycElt._raw(conductor, [x + sign * y for x, y in zip(first, second)], 2)


def sin_exact(k: int, m: int) -> CycElt:
    """Exact sin(pi*k/m).

    Args:
        k: Integer numerator.
        m: Positive denominator.

    Returns:
        Real element of Q(zeta_M), M = lcm(2m', 4) for the reduced fraction k'/m'.
    """
    k, m = _reduced(k, m)
    conductor = lcm(2 * m, 4)
    step = conductor // (2 * m)
    # 1/(2i) = -i/2 = zeta_M^(3M/4) / 2
    return _binomial(conductor, k * step, -k * step, -1, 3 * conductor // 4)


def cos_exact(k: int, m: int) -> CycElt:
    """Exact cos(pi*k/m) in the same field as sin_exact(k, m)."""
    k, m = _reduced(k, m)
    conductor = lcm(2 * m, 4)
    step = conductor // (2 * m)
    return _binomial(conductor, k * step, -k * step, 1, 0)


def sine_field_key(denominator: int) -> int:
    """Key identifying the real field Q(sin(pi*k/denominator)) for gcd(k, denominator) = 1.

    The field is the maximal real subfield of Q(zeta_g), g = g_of(denominator).
    Conductors 2 mod 4 are folded onto their odd half, and the conductors whose
    real subfield is Q all share the key 1.
    """
    g = g_of(denominator)
    key = g // 2 if g % 4 == 2 else g
    return 1 if key in (1, 3, 4) else key


def _sine_numerator(k: int, n: int) -> CycElt:
    """zeta_{2n}^k - zeta_{2n}^-k, which is 2i*sin(pi*k/n)."""
    conductor = 2 * n
    table = monomial_table(conductor)
    first = table[k % conductor]
    second = table[(-k) % conductor]
    return CycElt._raw(conductor, [x - y for x, y in zip(first, second)], 1)


def sine_ratio_rational(alpha: Fraction | int, beta: Fraction | int) -> Fraction | None:
    """Decide whether sin(pi*alpha) / sin(pi*beta) is rational.

    Writes both angles over the common denominator N and divides
    zeta_{2N}^a - zeta_{2N}^-a by zeta_{2N}^b - zeta_{2N}^-b exactly in Q(zeta_{2N})
    (the factors 2i cancel). Every pair goes through the division.

    Args:
        alpha: Angle of the numerator as a multiple of pi.
        beta: Angle of the denominator as a multiple of pi.

    Returns:
        The rational ratio, or None when it is irrational.

    Raises:
        DomainInputError: Unless 0 < alpha <= beta <= 1/2.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not (0 < alpha <= beta <= Fraction(1, 2)):
        raise DomainInputError.for_sine_arguments(alpha, beta)

    n = lcm(alpha.denominator, beta.denominator)
    top = _sine_numerator(int(alpha * n), n)
    bottom = _sine_numerator(int(beta * n), n)
    return top.rational_quotient(bottom)


def reduced_fractions(max_denominator: int, upper: Fraction = Fraction(1, 2)) -> list[Fraction]:
    """All reduced fractions 0 < p/q <= upper with q <= max_denominator, ascending."""
    values = {
        Fraction(p, q)
        for q in range(1, max_denominator + 1)
        for p in range(1, q + 1)
        if gcd(p, q) == 1 and Fraction(p, q) <= upper
    }
    return sorted(values)


def rational_sine_ratios(max_denominator: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Every pair 0 < alpha < beta <= 1/2 (denominators bounded) with a rational sine ratio.

    Args:
        max_denominator: Largest denominator swept.

    Returns:
        (alpha, beta, ratio) triples in ascending order.
    """
    angles = reduced_fractions(max_denominator)
    found: list[tuple[Fraction, Fraction, Fraction]] = []
    for i, alpha in enumerate(angles):
        for beta in angles[i + 1 :]:
            ratio = sine_ratio_rational(alpha, beta)
            if ratio is not None:
                found.append((alpha, beta, ratio))
    return found
