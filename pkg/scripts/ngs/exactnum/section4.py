"""Computational replay of the case analysis behind the sine-ratio classification.

For a rational sine ratio with both angles over a common odd squarefree
denominator N, zeta_{2N} would be a root of the four-term polynomial

    x^(2*k2) - q*x^(k1+k2) + q*x^(k2-k1) - 1

and Phi_{2N} would have to equal it. This module sweeps every candidate N and
records why Phi_{2N} cannot have that shape, together with the numeric side
conditions the argument leans on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from scripts.ngs.errors import DomainInputError
from scripts.ngs.exactnum.poly import (
    CycPoly,
    cyclotomic_poly,
    euler_phi,
    g_of,
    is_prime,
    is_squarefree,
)

MIN_N_MAX = 45


@dataclass(frozen=True)
class FourTermShape:
    """Parameters of x^(2*k2) - q*x^(k1+k2) + q*x^(k2-k1) - 1."""

    k1: int
    k2: int
    q: Fraction


@dataclass(frozen=True)
class Section4Entry:
    """Verdict for one candidate denominator N.

    Attributes:
        n: The odd squarefree candidate.
        status: "excluded" or "skipped".
        reason: Human-readable justification.
        nonzero_terms: Nonzero coefficients of Phi_{2N} (None when skipped).
        density: phi(2N) / (2N).
        shape: Four-term parameters when Phi_{2N} matches the shape (never expected).
    """

    n: int
    status: str
    reason: str
    nonzero_terms: int | None
    density: Fraction
    shape: FourTermShape | None = None


@dataclass
class Section4Report:
    """Outcome of verify_section4."""

    n_max: int
    entries: list[Section4Entry] = field(default_factory=list)
    log_bound: int = 0
    g_injective: bool = False
    g_covers_evens: bool = False
    density_holds: bool = False

    @property
    def all_excluded(self) -> bool:
        """True when no candidate survives and every side condition holds."""
        return (
            all(e.shape is None for e in self.entries)
            and self.log_bound < MIN_N_MAX
            and self.g_injective
            and self.g_covers_evens
            and self.density_holds
        )

    def entry(self, n: int) -> Section4Entry:
        for e in self.entries:
            if e.n == n:
                return e
        raise KeyError(n)


def match_four_term_shape(poly: CycPoly) -> FourTermShape | None:
    """Match poly against x^(2*k2) - q*x^(k1+k2) + q*x^(k2-k1) - 1 with 1 <= k1 < k2.

    Args:
        poly: Polynomial to test.

    Returns:
        The shape parameters, or None when poly has a different form.
    """
    degree = poly.degree
    if degree < 2 or degree % 2:
        return None
    k2 = degree // 2
    if poly.leading != 1 or poly.coefficient(0) != -1:
        return None
    middle = [(k, c) for k, c in enumerate(poly.coefficients[1:-1], start=1) if c != 0]
    if len(middle) != 2:
        return None
    (low, c_low), (high, c_high) = middle
    k1 = high - k2
    if not (1 <= k1 < k2) or low != k2 - k1 or c_low != -c_high:
        return None
    return FourTermShape(k1=k1, k2=k2, q=c_low)


def alternating_poly(length: int) -> CycPoly:
    """Sum of (-1)^k x^k for 0 <= k < length."""
    return CycPoly.from_ints([(-1) ** k for k in range(length)])


def log_bound(limit: int = 10_000) -> int:
    """Largest N with 1/2 <= 5*log(2N)/N."""
    return max(n for n in range(1, limit) if n <= 10 * math.log(2 * n))


def _check_g(n_max: int) -> tuple[bool, bool]:
    """Injectivity of g_of on [1, n_max) and coverage of the even integers below n_max."""
    values = [g_of(m) for m in range(1, n_max)]
    injective = len(set(values)) == len(values) and all(v % 2 == 0 for v in values)
    covers = all(e in set(values) for e in range(2, n_max, 2))
    return injective, covers


def _classify_candidate(n: int) -> Section4Entry:
    density = Fraction(euler_phi(2 * n), 2 * n)
    if gcd(n, euler_phi(n)) != 1:
        return Section4Entry(
            n=n,
            status="skipped",
            reason=f"gcd(N, phi(N)) = {gcd(n, euler_phi(n))} != 1",
            nonzero_terms=None,
            density=density,
        )

    phi_2n = cyclotomic_poly(2 * n)
    terms = phi_2n.nonzero_terms()
    shape = match_four_term_shape(phi_2n)

    if is_prime(n) and phi_2n == alternating_poly(n):
        reason = f"alternating-sign prime cyclotomic, {terms} nonzero terms"
    elif terms > 4:
        reason = f"Phi_{2 * n} has more than four nonzero coefficients ({terms})"
    elif shape is None:
        reason = f"Phi_{2 * n} does not have the four-term shape"
    else:
        reason = f"Phi_{2 * n} matches the four-term shape with k1={shape.k1}, k2={shape.k2}"
    return Section4Entry(
        n=n,
        status="excluded",
        reason=reason,
        nonzero_terms=terms,
        density=density,
        shape=shape,
    )


def verify_section4(n_max: int = MIN_N_MAX) -> Section4Report:
    """Replay the exclusion of every odd squarefree denominator 3 <= N < n_max.

    Args:
        n_max: Exclusive upper bound on N; at least 45.

    Returns:
        Section4Report listing each candidate with its reason, plus the
        logarithmic bound, the density bound and the injectivity of g_of.

    Raises:
        DomainInputError: If n_max < 45.
    """
    if n_max < MIN_N_MAX:
        raise DomainInputError(f"n_max must be at least {MIN_N_MAX}, got {n_max}")

    report = Section4Report(n_max=n_max)
    for n in range(3, n_max, 2):
        if is_squarefree(n):
            report.entries.append(_classify_candidate(n))

    report.log_bound = log_bound()
    report.g_injective, report.g_covers_evens = _check_g(n_max)
    # below 105 an odd N has at most two odd prime factors
    report.density_holds = all(
        e.density >= Fraction(1, 4) for e in report.entries if e.n < 105
    )
    return report
