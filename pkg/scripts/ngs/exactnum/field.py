"""Elements of cyclotomic fields Q(zeta_m) in the power basis.

An element is stored as an integer numerator vector over a positive common
denominator, reduced modulo Phi_m and normalised by the content gcd, so
equality inside one conductor is a tuple comparison. Mixed-conductor
arithmetic promotes both operands to the lcm of their conductors.

Sign decisions for real elements never trust a float: a float estimate is
accepted only outside its rigorous error bound, zero is decided on the
coefficients, and everything else is refined with mpmath at doubling
precision.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Union

from mpmath import cospi, mp, mpf

from scripts.ngs.errors import SignUndecidedError
from scripts.ngs.exactnum.poly import (
    cyclotomic_ints,
    euler_phi,
    mobius,
    monomial_table,
    reduce_int_vector,
    vector_gcd,
)

Scalar = Union[int, Fraction]

_FLOAT_EPS = 2.0**-52
_REFINE_PRECISIONS = (96, 192, 384, 768, 1536, 3072, 6144)


@lru_cache(maxsize=None)
def _unit_roots(m: int) -> tuple[tuple[float, float], ...]:
    """(cos, sin) of 2*pi*k/m for the power-basis exponents."""
    return tuple(
        (math.cos(2 * math.pi * k / m), math.sin(2 * math.pi * k / m))
        for k in range(euler_phi(m))
    )


@lru_cache(maxsize=None)
def _trace_weights(m: int) -> tuple[Fraction, ...]:
    """Normalised traces Tr(zeta_m^k) / phi(m) for the power basis."""
    phi = euler_phi(m)
    weights = []
    for k in range(phi):
        order = m // gcd(k, m)
        weights.append(Fraction(mobius(order), euler_phi(order)))
    return tuple(weights)


def _strip_ints(values: list[int]) -> list[int]:
    while values and values[-1] == 0:
        values.pop()
    return values


@lru_cache(maxsize=4096)
def _inverse_vector(m: int, nums: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Extended Euclid of an integer vector against Phi_m, by pseudo-division.

    Keeps s_i * a = r_i (mod Phi_m) along the remainder sequence, removing the
    joint content of (r_i, s_i) after each division so sizes stay bounded.

    Returns:
        (s, c) with s * a = c (mod Phi_m) for a nonzero integer c.
    """
    r0, s0 = list(cyclotomic_ints(m)), [0]
    r1, s1 = _strip_ints(list(nums)), [1]
    while len(r1) > 1:
        lead = r1[-1]
        degree = len(r1) - 1
        while len(r0) - 1 >= degree:
            shift = len(r0) - 1 - degree
            top = r0[-1]
            r0 = [lead * x for x in r0]
            s0 = [lead * x for x in s0]
            for j, y in enumerate(r1):
                r0[shift + j] -= top * y
            if len(s0) < shift + len(s1):
                s0.extend([0] * (shift + len(s1) - len(s0)))
            for j, y in enumerate(s1):
                s0[shift + j] -= top * y
            _strip_ints(r0)
        content = vector_gcd(r0 + s0)
        if content > 1:
            r0 = [x // content for x in r0]
            s0 = [x // content for x in s0]
        r0, s0, r1, s1 = r1, s1, r0, s0
        if not r1:
            raise ZeroDivisionError("element shares a factor with the cyclotomic polynomial")
    return tuple(reduce_int_vector(m, s1)), r1[0]


class CycElt:
    """Element sum c_k * zeta_m^k of the cyclotomic field Q(zeta_m).

    Instances are immutable. Arithmetic accepts other CycElt values as well as
    ints and Fractions.

    Attributes:
        conductor: The m of Q(zeta_m).
        coeffs: Rational power-basis coefficients, length phi(m).
    """

    __slots__ = ("_m", "_nums", "_den", "_approx", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence[Scalar] = ()):
        """Build an element from rational coefficients of any length.

        Coefficients beyond phi(m) - 1 are reduced modulo Phi_m.

        Args:
            conductor: Positive integer m.
            coeffs: Coefficients of zeta_m^0, zeta_m^1, ...
        """
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        fractions = [Fraction(c) for c in coeffs]
        den = 1
        for f in fractions:
            den = lcm(den, f.denominator)
        nums = [f.numerator * (den // f.denominator) for f in fractions]
        self._set(conductor, reduce_int_vector(conductor, nums), den)

    def _set(self, m: int, nums: Sequence[int], den: int) -> None:
        if den < 0:
            nums = [-c for c in nums]
            den = -den
        g = gcd(vector_gcd(nums), den)
        if g == 0 or not any(nums):
            nums, den = [0] * len(nums), 1
        elif g > 1:
            nums = [c // g for c in nums]
            den //= g
        self._m = m
        self._nums: tuple[int, ...] = tuple(nums)
        self._den = den
        self._approx: float | None = None
        self._hash: int | None = None

    @classmethod
    def _raw(cls, m: int, nums: Sequence[int], den: int) -> CycElt:
        """Wrap an already reduced vector of length phi(m)."""
        obj = cls.__new__(cls)
        obj._set(m, nums, den)
        return obj

    @classmethod
    def from_rational(cls, conductor: int, value: Scalar) -> CycElt:
        """Embed a rational number into Q(zeta_m)."""
        q = Fraction(value)
        nums = [0] * euler_phi(conductor)
        nums[0] = q.numerator
        return cls._raw(conductor, nums, q.denominator)

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> CycElt:
        """zeta_m raised to an integer power."""
        return cls._raw(conductor, monomial_table(conductor)[power % conductor], 1)

    @property
    def conductor(self) -> int:
        return self._m

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._nums

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Rational coefficients in the power basis."""
        return tuple(Fraction(c, self._den) for c in self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> Fraction | None:
        """Return the rational value when every zeta^k coefficient with k >= 1 vanishes."""
        if any(self._nums[1:]):
            return None
        return Fraction(self._nums[0], self._den) if self._nums else Fraction(0)

    # -- conductor handling -------------------------------------------------

    def promote(self, conductor: int) -> CycElt:
        """Rewrite the element in Q(zeta_M) for a multiple M of the conductor.

        Raises:
            ValueError: If the target is not a multiple of the conductor.
        """
        if conductor % self._m:
            raise ValueError(f"cannot promote conductor {self._m} to {conductor}")
        if conductor == self._m:
            return self
        step = conductor // self._m
        table = monomial_table(conductor)
        out = [0] * euler_phi(conductor)
        for k, c in enumerate(self._nums):
            if c:
                row = table[(k * step) % conductor]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return CycElt._raw(conductor, out, self._den)

    def _coerce(self, other: object) -> CycElt | None:
        if isinstance(other, CycElt):
            return other
        if isinstance(other, (int, Fraction)):
            return CycElt.from_rational(self._m, other)
        return None

    @staticmethod
    def _align(a: CycElt, b: CycElt) -> tuple[CycElt, CycElt]:
        if a._m == b._m:
            return a, b
        m = lcm(a._m, b._m)
        return a.promote(m), b.promote(m)

    # -- field operations ---------------------------------------------------

    def __add__(self, other: object) -> CycElt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(self, o)
        den = lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        return CycElt._raw(a._m, [x * fa + y * fb for x, y in zip(a._nums, b._nums)], den)

    __radd__ = __add__

    def __neg__(self) -> CycElt:
        return CycElt._raw(self._m, [-c for c in self._nums], self._den)

    def __sub__(self, other: object) -> CycElt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> CycElt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> CycElt:
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycElt._raw(
                self._m, [c * q.numerator for c in self._nums], self._den * q.denominator
            )
        if not isinstance(other, CycElt):
            return NotImplemented
        a, b = self._align(self, other)
        if a.is_zero() or b.is_zero():
            return CycElt.from_rational(a._m, 0)
        product = [0] * (2 * len(a._nums) - 1)
        for i, x in enumerate(a._nums):
            if x:
                for j, y in enumerate(b._nums):
                    if y:
                        product[i + j] += x * y
        return CycElt._raw(a._m, reduce_int_vector(a._m, product), a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> CycElt:
        """Multiplicative inverse via the extended gcd with Phi_m.

        Raises:
            ZeroDivisionError: If the element is zero.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        q = self.is_rational()
        if q is not None:
            return CycElt.from_rational(self._m, 1 / q)
        s, c = _inverse_vector(self._m, self._nums)
        return CycElt._raw(self._m, [self._den * x for x in s], c)

    def rational_quotient(self, other: CycElt) -> Fraction | None:
        """self / other if that quotient lies in Q, else None.

        A rational quotient q satisfies self = q * other in the power basis,
        so q is fixed by the first nonzero coefficient of other and then
        confirmed exactly.

        Raises:
            ZeroDivisionError: If other is zero.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero in a cyclotomic field")
        a, b = self._align(self, other)
        i = next(j for j, c in enumerate(b._nums) if c)
        q = Fraction(a._nums[i] * b._den, a._den * b._nums[i])
        return q if a == b * q else None

    def __truediv__(self, other: object) -> CycElt:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not isinstance(other, CycElt):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> CycElt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> CycElt:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycElt.from_rational(self._m, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> CycElt:
        """Image under the automorphism zeta -> zeta^-1 (complex conjugation)."""
        table = monomial_table(self._m)
        out = [0] * len(self._nums)
        for k, c in enumerate(self._nums):
            if c:
                row = table[(-k) % self._m]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return CycElt._raw(self._m, out, self._den)

    def is_real(self) -> bool:
        return self.conjugate() == self

    # -- embeddings and signs -----------------------------------------------

    def embed(self) -> complex:
        """Complex value under zeta_m -> exp(2*pi*i/m), at float precision."""
        roots = _unit_roots(self._m)
        total = complex(0.0, 0.0)
        for (cos_k, sin_k), c in zip(roots, self._nums):
            if c:
                w = float(Fraction(c, self._den))
                total += complex(w * cos_k, w * sin_k)
        return total

    def __float__(self) -> float:
        if self._approx is None:
            self._approx = self._float_estimate()[0]
        return self._approx

    def _float_estimate(self) -> tuple[float, float]:
        """Float real part and a rigorous bound on its error."""
        roots = _unit_roots(self._m)
        total = 0.0
        magnitude = 0.0
        for (cos_k, _), c in zip(roots, self._nums):
            if c:
                term = float(Fraction(c, self._den)) * cos_k
                total += term
                magnitude += abs(term)
        bound = (len(self._nums) + 8) * _FLOAT_EPS * magnitude + 1e-300
        return total, bound

    def sign(self) -> int:
        """Exact sign of a real element: -1, 0 or 1.

        Raises:
            SignUndecidedError: If the element is not real and its real part vanishes.
        """
        if self.is_zero():
            return 0
        q = self.is_rational()
        if q is not None:
            return 1 if q > 0 else -1
        estimate, bound = self._float_estimate()
        if estimate > bound:
            return 1
        if estimate < -bound:
            return -1
        return self._refined_sign()

    def _refined_sign(self) -> int:
        phi = len(self._nums)
        for precision in _REFINE_PRECISIONS:
            with mp.workprec(precision):
                total = mpf(0)
                magnitude = mpf(0)
                for k, c in enumerate(self._nums):
                    if c:
                        term = mpf(c) * cospi(mpf(2 * k) / self._m)
                        total += term
                        magnitude += abs(term)
                bound = magnitude * (phi + 8) * mpf(2) ** (4 - precision)
                if total > bound:
                    return 1
                if total < -bound:
                    return -1
        raise SignUndecidedError(f"sign of a conductor-{self._m} element not decided")

    def __abs__(self) -> CycElt:
        return -self if self.sign() < 0 else self

    def _compare(self, other: object) -> int | None:
        o = self._coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other: object) -> bool:
        s = self._compare(other)
        if s is None:
            return NotImplemented
        return s < 0

    def __le__(self, other: object) -> bool:
        s = self._compare(other)
        if s is None:
            return NotImplemented
        return s <= 0

    def __gt__(self, other: object) -> bool:
        s = self._compare(other)
        if s is None:
            return NotImplemented
        return s > 0

    def __ge__(self, other: object) -> bool:
        s = self._compare(other)
        if s is None:
            return NotImplemented
        return s >= 0

    # -- identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() == other
        if not isinstance(other, CycElt):
            return NotImplemented
        a, b = self._align(self, other)
        return a._den == b._den and a._nums == b._nums

    def __hash__(self) -> int:
        if self._hash is None:
            trace = sum(
                (Fraction(c) * w for c, w in zip(self._nums, _trace_weights(self._m)) if c),
                Fraction(0),
            )
            self._hash = hash(trace / self._den)
        return self._hash

    def to_strings(self) -> list[str]:
        """Coefficients as 'p/q' strings, for JSON export."""
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        body = ", ".join(self.to_strings())
        return f"CycElt({self._m}; {body})"

    def __str__(self) -> str:
        q = self.is_rational()
        if q is not None:
            return str(q)
        return f"{float(self):.12g}"


def reduce(x: CycElt) -> CycElt:
    """Re-reduce an element's coefficient vector modulo its cyclotomic polynomial."""
    return CycElt(x.conductor, x.coeffs)


def is_rational(x: CycElt) -> Fraction | None:
    """Rational value of x, or None when x is irrational."""
    return x.is_rational()
