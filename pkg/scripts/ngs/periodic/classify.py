"""Per-point certificates and the periodic-point classification."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from scripts.ngs.cylinders.heights import height_fraction
from scripts.ngs.errors import DomainInputError
from scripts.ngs.exactnum.field import CycElt, is_rational
from scripts.ngs.exactnum.sines import reduced_fractions
from scripts.ngs.periodic.candidates import CandidateSegment, candidate_segments
from scripts.ngs.periodic.exclusion import ExclusionConfig, exclusion_config
from scripts.ngs.surface.marked import SurfacePoint, weierstrass_points
from scripts.ngs.surface.model import SurfaceDef
from scripts.ngs.veech.action import orbit

HALF = Fraction(1, 2)


class Verdict(str, Enum):
    PERIODIC = "periodic"
    NOT_PERIODIC = "not-periodic"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class PointCertificate:
    """Verdict on one point and the evidence behind it.

    Attributes:
        point: The point, canonical.
        verdict: periodic, not-periodic or undetermined.
        evidence: One-line summary of the evidence.
        segment: Candidate segment index, for sampled points.
        parameter: Parameter along the candidate segment.
        cylinder: "C1", "C2" or "C3" for a not-periodic verdict.
        height: Float shadow of the irrational height fraction.
        orbit_size: Orbit size for a periodic verdict.
        word_bound: Word bound used for the orbit.
    """

    point: SurfacePoint
    verdict: Verdict
    evidence: str
    segment: int | None = None
    parameter: Fraction | None = None
    cylinder: str | None = None
    height: float | None = None
    orbit_size: int | None = None
    word_bound: int | None = None


def _tested_parameter(seg: CandidateSegment, t: Fraction) -> Fraction:
    """Parameter along the tested segment of the point at t on seg."""
    if not seg.is_edge:
        return t
    # the involution reverses the edge; the twist keeps parameters along the half
    half = t if t < HALF else 1 - t
    return 2 * half


def interior_point_excluded(cfg: ExclusionConfig, t: Fraction) -> PointCertificate:
    """Certificate for the point at parameter t of cfg's candidate segment.

    The point, moved onto the tested segment, has irrational height in C1,
    or in C2 before R and C3 after it. The midpoint of the edge segment
    (n odd) is a Weierstrass point and is certified periodic instead.

    Raises:
        DomainInputError: If t is not strictly between 0 and 1.
    """
    if not 0 < t < 1:
        raise DomainInputError(f"parameter must satisfy 0 < t < 1, got {t}")
    seg = cfg.segment
    s = cfg.tested.surface
    point = seg.point_at(s, t)
    if seg.is_edge and t == HALF:
        return PointCertificate(
            point=point,
            verdict=Verdict.PERIODIC,
            evidence="Weierstrass midpoint of the edge segment",
            segment=seg.index,
            parameter=t,
        )

    u = _tested_parameter(seg, t)
    moved = cfg.tested.point_at(u)
    side = (CycElt.from_rational(s.conductor, u) - cfg.crossing).sign()
    roles = [("C1", cfg.c1)]
    if side < 0:
        roles.append(("C2", cfg.c2))
    elif side > 0:
        roles.append(("C3", cfg.c3))

    for role, cylinder in roles:
        fraction = height_fraction(cylinder, moved)
        if is_rational(fraction) is None:
            via = f" after {cfg.twist}" if cfg.twist is not None else ""
            return PointCertificate(
                point=point,
                verdict=Verdict.NOT_PERIODIC,
                evidence=f"irrational height in {role} (cylinder {cylinder.index}){via}",
                segment=seg.index,
                parameter=t,
                cylinder=role,
                height=float(fraction),
            )
    return PointCertificate(
        point=point,
        verdict=Verdict.UNDETERMINED,
        evidence="rational height in every configuration cylinder",
        segment=seg.index,
        parameter=t,
    )


def sample_parameters(denominator_bound: int) -> list[Fraction]:
    """Reduced fractions in (0, 1) with denominator at most denominator_bound."""
    lower = reduced_fractions(denominator_bound, HALF)
    upper = [1 - t for t in lower if t != HALF]
    return sorted(set(lower) | set(upper))


def classify(
    s: SurfaceDef,
    word_bound: int = 10,
    sample_denominator_bound: int = 12,
    *,
    point_cap: int = 512,
    refold_factor: int = 10,
) -> list[PointCertificate]:
    """Periodic certificates for the Weierstrass points and not-periodic ones for samples.

    Every non-singular Weierstrass point is certified periodic when its orbit
    closes within word_bound and stays among the Weierstrass points. Every
    rational parameter with denominator at most sample_denominator_bound on
    every candidate segment is then tested; the midpoint of the edge
    segment for n odd is skipped, being a Weierstrass point already listed.

    Raises:
        DomainInputError: If a bound is below 1.
    """
    if word_bound < 1 or sample_denominator_bound < 1:
        raise DomainInputError(
            f"bounds must be at least 1, got word_bound={word_bound}, "
            f"sample_denominator_bound={sample_denominator_bound}"
        )
    marked = weierstrass_points(s)
    weierstrass = set(marked.weierstrass)
    certificates: list[PointCertificate] = []
    for p in marked.periodic:
        result = orbit(s, p, word_bound, point_cap=point_cap, refold_factor=refold_factor)
        closed = result.is_finite and set(result.points) <= weierstrass
        certificates.append(
            PointCertificate(
                point=p,
                verdict=Verdict.PERIODIC if closed else Verdict.UNDETERMINED,
                evidence=(
                    f"orbit of {len(result.points)} Weierstrass points closes within "
                    f"word length {word_bound}"
                    if closed
                    else f"orbit {result.status.value} at word length {word_bound}"
                ),
                orbit_size=len(result.points),
                word_bound=word_bound,
            )
        )

    samples = sample_parameters(sample_denominator_bound)
    for seg in candidate_segments(s):
        cfg = exclusion_config(s, seg)
        for t in samples:
            if seg.is_edge and t == HALF:
                continue
            certificates.append(interior_point_excluded(cfg, t))
    return certificates


def periodic_points(certificates: list[PointCertificate]) -> list[SurfacePoint]:
    return [c.point for c in certificates if c.verdict is Verdict.PERIODIC]
