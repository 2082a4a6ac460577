"""Dense univariate polynomials over Q and the cyclotomic polynomials.

Provides the polynomial arithmetic the cyclotomic field layer is built on:
exact division with remainder, the extended Euclidean algorithm, and the
arithmetic functions (Euler phi, Moebius, g) used by the sine-ratio analysis.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd


def _strip(coefficients: Iterable[Fraction]) -> tuple[Fraction, ...]:
    """Drop trailing zero coefficients."""
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class CycPoly:
    """Polynomial with rational coefficients, lowest degree first.

    The coefficient tuple never ends in zero, so the zero polynomial is the
    empty tuple and equality is tuple equality.

    Attributes:
        coefficients: Dense coefficient tuple, constant term first.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        normalized = _strip(Fraction(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", normalized)

    @classmethod
    def from_ints(cls, coefficients: Sequence[int]) -> CycPoly:
        """Build a polynomial from integer coefficients."""
        return cls(tuple(Fraction(c) for c in coefficients))

    @classmethod
    def monomial(cls, degree: int, coefficient: Fraction | int = 1) -> CycPoly:
        """Build c * x^degree."""
        return cls((Fraction(0),) * degree + (Fraction(coefficient),))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x^k, zero beyond the degree."""
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def nonzero_terms(self) -> int:
        """Number of nonzero coefficients."""
        return sum(1 for c in self.coefficients if c != 0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def __add__(self, other: CycPoly) -> CycPoly:
        size = max(len(self.coefficients), len(other.coefficients))
        return CycPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def __neg__(self) -> CycPoly:
        return CycPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: CycPoly) -> CycPoly:
        return self + (-other)

    def __mul__(self, other: CycPoly) -> CycPoly:
        if self.is_zero or other.is_zero:
            return CycPoly(())
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return CycPoly(tuple(out))

    def scale(self, factor: Fraction | int) -> CycPoly:
        """Multiply every coefficient by a rational scalar."""
        return CycPoly(tuple(c * factor for c in self.coefficients))

    def monic(self) -> CycPoly:
        """Divide by the leading coefficient.

        Raises:
            ZeroDivisionError: If the polynomial is zero.
        """
        if self.is_zero:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self.scale(1 / self.leading)

    def divmod(self, divisor: CycPoly) -> tuple[CycPoly, CycPoly]:
        """Exact division with remainder.

        Args:
            divisor: Nonzero polynomial.

        Returns:
            (quotient, remainder) with deg(remainder) < deg(divisor).

        Raises:
            ZeroDivisionError: If the divisor is zero.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coefficients)
        d = divisor.degree
        lead = divisor.leading
        if len(remainder) - 1 < d:
            return CycPoly(()), self
        quotient = [Fraction(0)] * (len(remainder) - d)
        for k in range(len(remainder) - 1, d - 1, -1):
            c = remainder[k]
            if c == 0:
                continue
            q = c / lead
            quotient[k - d] = q
            for j, b in enumerate(divisor.coefficients):
                remainder[k - d + j] -= q * b
        return CycPoly(tuple(quotient)), CycPoly(tuple(remainder[:d]))

    def __floordiv__(self, divisor: CycPoly) -> CycPoly:
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: CycPoly) -> CycPoly:
        return self.divmod(divisor)[1]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            terms.append(f"{sign} {body}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def gcdex(a: CycPoly, b: CycPoly) -> tuple[CycPoly, CycPoly, CycPoly]:
    """Extended Euclidean algorithm over Q.

    Args:
        a: First polynomial.
        b: Second polynomial.

    Returns:
        (g, s, t) with s*a + t*b = g and g monic (or zero when a = b = 0).
    """
    old_r, r = a, b
    old_s, s = CycPoly((Fraction(1),)), CycPoly(())
    old_t, t = CycPoly(()), CycPoly((Fraction(1),))
    while not r.is_zero:
        q, rem = old_r.divmod(r)
        old_r, r = r, rem
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r.is_zero:
        return old_r, old_s, old_t
    lead = old_r.leading
    return old_r.scale(1 / lead), old_s.scale(1 / lead), old_t.scale(1 / lead)


@lru_cache(maxsize=None)
def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation by trial division, as (prime, exponent) pairs."""
    if m < 1:
        raise ValueError(f"factorize requires m >= 1, got {m}")
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


def euler_phi(m: int) -> int:
    """Euler's totient function.

    Args:
        m: Positive integer.

    Returns:
        Number of integers in [1, m] coprime to m.
    """
    result = m
    for p, _ in factorize(m):
        result = result // p * (p - 1)
    return result


def mobius(m: int) -> int:
    """Moebius function."""
    factors = factorize(m)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def is_squarefree(m: int) -> bool:
    return all(e == 1 for _, e in factorize(m))


def is_prime(m: int) -> bool:
    return m >= 2 and factorize(m) == ((m, 1),)


def g_of(m: int) -> int:
    """Conductor whose maximal real subfield is generated by sin(pi*k/m).

    Args:
        m: Positive integer.

    Returns:
        m when m = 2 mod 4, 2m when 4 divides m, 4m when m is odd.
    """
    if m % 4 == 2:
        return m
    if m % 4 == 0:
        return 2 * m
    return 4 * m


def divisors(m: int) -> list[int]:
    """Sorted positive divisors of m."""
    small = [d for d in range(1, int(m**0.5) + 1) if m % d == 0]
    large = [m // d for d in reversed(small) if d * d != m]
    return small + large


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> CycPoly:
    """The m-th cyclotomic polynomial.

    Computed by dividing x^m - 1 by the product of Phi_d over the proper
    divisors d of m.

    Args:
        m: Positive integer.

    Returns:
        Phi_m, monic with integer coefficients and degree euler_phi(m).
    """
    if m < 1:
        raise ValueError(f"cyclotomic_poly requires m >= 1, got {m}")
    x_m_minus_one = CycPoly.monomial(m) - CycPoly((Fraction(1),))
    product = CycPoly((Fraction(1),))
    for d in divisors(m)[:-1]:
        product = product * cyclotomic_poly(d)
    quotient, remainder = x_m_minus_one.divmod(product)
    if not remainder.is_zero:
        raise ArithmeticError(f"x^{m} - 1 is not divisible by the proper cyclotomic factors")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_ints(m: int) -> tuple[int, ...]:
    """Integer coefficient tuple of Phi_m, constant term first."""
    return tuple(int(c) for c in cyclotomic_poly(m).coefficients)


@lru_cache(maxsize=None)
def monomial_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Reductions of x^k modulo Phi_m for 0 <= k < m, as integer vectors of length phi(m).

    Phi_m is monic with integer coefficients, so every reduction stays integral.
    """
    phi = euler_phi(m)
    phi_coeffs = cyclotomic_ints(m)
    rows: list[tuple[int, ...]] = []
    current = [0] * phi
    if phi > 0:
        current[0] = 1
    for _ in range(m):
        rows.append(tuple(current))
        # multiply by x: shift up, then fold the overflow term with x^phi = -(lower terms)
        overflow = current[-1]
        current = [0] + current[:-1]
        if overflow:
            for j in range(phi):
                current[j] -= overflow * phi_coeffs[j]
    return tuple(rows)


def reduce_int_vector(m: int, values: Sequence[int]) -> list[int]:
    """Reduce an integer coefficient vector of any length modulo Phi_m.

    Args:
        m: Conductor.
        values: Coefficients of sum values[k] * x^k.

    Returns:
        Integer vector of length phi(m).
    """
    phi = euler_phi(m)
    out = list(values[:phi]) + [0] * max(0, phi - len(values))
    table = monomial_table(m)
    for k in range(phi, len(values)):
        c = values[k]
        if c:
            row = table[k % m]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return out


def vector_gcd(values: Iterable[int]) -> int:
    """Greatest common divisor of an integer sequence (0 for all zeros)."""
    result = 0
    for v in values:
        result = gcd(result, v)
        if result == 1:
            break
    return result
