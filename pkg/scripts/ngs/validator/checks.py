"""Invariant checks run by verify-all.

Every check returns (passed, message). Surface checks take the surface and
the compute config; global checks take the config only.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

from scripts.ngs.blocking.queries import is_blocked
from scripts.ngs.blocking.segments import enumerate_segments
from scripts.ngs.blocking.triangle import ACUTE, triangle_blocked_pairs
from scripts.ngs.cylinders.decompose import decompose
from scripts.ngs.cylinders.heights import (
    DIRECTION_NAMES,
    canonical_direction,
    central_cylinder,
    expected_heights,
    ratio_table,
    twist_multiplicities,
)
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.exactnum.section4 import verify_section4
from scripts.ngs.exactnum.sines import cos_exact, rational_sine_ratios, sin_exact
from scripts.ngs.models.config import ComputeConfig
from scripts.ngs.periodic.candidates import candidate_segments
from scripts.ngs.periodic.classify import Verdict, interior_point_excluded, sample_parameters
from scripts.ngs.periodic.exclusion import check_endpoint_heights, exclusion_config
from scripts.ngs.surface.geometry import PlanarPoint, unit_vector
from scripts.ngs.surface.marked import (
    SurfacePoint,
    canonicalize,
    center_point,
    cone_point,
    hyperelliptic_image,
    weierstrass_points,
)
from scripts.ngs.surface.model import (
    SurfaceDef,
    expected_genus,
    gauss_bonnet_defect,
    genus,
    translation_automorphisms,
)
from scripts.ngs.veech.action import act, orbit
from scripts.ngs.veech.cusps import cusp_direction, reduce_direction
from scripts.ngs.veech.matrices import GroupWord, all_letters, parabolic

CheckOutcome = tuple[bool, str]


def _names(s: SurfaceDef) -> tuple[str, ...]:
    return DIRECTION_NAMES if not s.is_double else DIRECTION_NAMES[:1]


def random_points(s: SurfaceDef, count: int, seed: int) -> list[SurfacePoint]:
    """Deterministic pseudo-random interior points with small rational coordinates."""
    rng = random.Random(seed)
    points: list[SurfacePoint] = []
    while len(points) < count:
        polygon_id = rng.randrange(len(s.polygons))
        x = Fraction(rng.randint(-60, 60), 100)
        y = Fraction(rng.randint(-60, 60), 100)
        position = PlanarPoint(
            CycElt.from_rational(s.conductor, x), CycElt.from_rational(s.conductor, y)
        )
        if all(sign > 0 for sign in s.polygon(polygon_id).side_signs(position)):
            points.append(canonicalize(s, polygon_id, position))
    return points


def check_genus(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    g = genus(s)
    w = len(weierstrass_points(s).weierstrass)
    passed = g == expected_genus(s.n) and w == 2 * g + 2
    return passed, f"genus {g}, {w} Weierstrass points"


def check_gauss_bonnet(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    defect = gauss_bonnet_defect(s)
    return defect == 0, f"defect {defect}*pi"


def check_involution(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    points = list(weierstrass_points(s).marked) + random_points(s, 20, s.n)
    bad = [p for p in points if hyperelliptic_image(s, hyperelliptic_image(s, p)) != p]
    return not bad, f"{len(points)} points, {len(bad)} not fixed by the square"


def half_turn(n: int) -> GroupWord:
    """The rotation by pi as a word in the generators."""
    if n % 2 == 0:
        return GroupWord.of(n, *[("r2", 1)] * (n // 2))
    return GroupWord.of(n, *[("r", 1)] * n)


def check_inverse_involution(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    word = half_turn(s.n)
    points = list(weierstrass_points(s).periodic) + random_points(s, 20, 500 + s.n)
    bad = [
        str(p)
        for p in points
        if act(s, word, p, refold_factor=config.refold_factor) != hyperelliptic_image(s, p)
    ]
    return not bad, f"-Id on {len(points)} points" + (f", differs at {bad[:3]}" if bad else "")


def random_words(
    s: SurfaceDef, count: int, max_length: int, seed: int, *, min_length: int = 1
) -> list[GroupWord]:
    """Deterministic pseudo-random words of length min_length..max_length."""
    rng = random.Random(seed)
    letters = all_letters(s.n)
    return [
        GroupWord.of(s.n, *rng.choices(letters, k=rng.randint(min_length, max_length)))
        for _ in range(count)
    ]


def check_action_composition(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    first = random_words(s, 8, 4, 700 + s.n)
    second = random_words(s, 8, 4, 800 + s.n)
    points = random_points(s, 8, 900 + s.n)
    bad = []
    for w1, w2, p in zip(first, second, points):
        together = act(s, w1 * w2, p, refold_factor=config.refold_factor)
        image = act(s, w2, p, refold_factor=config.refold_factor)
        in_turn = act(s, w1, image, refold_factor=config.refold_factor)
        if together != in_turn:
            bad.append(f"{w1} * {w2}")
    return not bad, f"{len(points)} word pairs" + (f", not composing for {bad}" if bad else "")


def check_translation_automorphisms(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    found = translation_automorphisms(s)
    return not found, f"{len(found)} nontrivial translation automorphisms"


def check_determinants(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    words = [GroupWord(s.n, (letter,)) for letter in all_letters(s.n)]
    products = [a * b for a in words for b in words]
    products += [
        w
        for length in range(3, 7)
        for w in random_words(s, 10, length, 100 * length + s.n, min_length=length)
    ]
    bad = [str(w) for w in words + products if not w.matrix.det() == 1]
    return not bad, f"{len(words) + len(products)} words checked" + (
        f", det != 1 for {bad}" if bad else ""
    )


def check_heights(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    details = []
    passed = True
    for name in _names(s):
        d = decompose(
            s,
            canonical_direction(s.n, name),
            separatrix_length_bound=config.separatrix_length_bound,
        )
        heights = [c.height for c in d.cylinders]
        expected = expected_heights(s.n, name)
        ok = len(heights) == len(expected) and all(h == e for h, e in zip(heights, expected))
        if s.n % 2 == 0 and name == "horizontal":
            ok = ok and len(set(heights)) == len(heights)
        passed = passed and ok
        details.append(f"{name}: {len(heights)} cylinders")
    return passed, ", ".join(details)


def check_area(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    bad = []
    for name in _names(s):
        d = decompose(s, canonical_direction(s.n, name))
        if not d.total_area() == s.area:
            bad.append(name)
    return not bad, "area conserved" if not bad else f"area mismatch in {bad}"


def predicted_rational_pairs(n: int, name: str) -> int:
    """Number of rational height ratios between distinct parallel cylinders."""
    if name == "horizontal" and n % 12 == 6:
        return 1
    if name == "rotated" and n % 12 == 0:
        return 1
    return 0


def check_height_ratios(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    details = []
    passed = True
    for name in _names(s):
        table = ratio_table(decompose(s, canonical_direction(s.n, name)))
        rational = [e for e in table if e.ratio is not None]
        ok = len(rational) == predicted_rational_pairs(s.n, name)
        ok = ok and all(e.ratio == Fraction(1, 2) and not e.adjacent for e in rational)
        passed = passed and ok
        details.append(f"{name}: {len(rational)} rational of {len(table)}")
    return passed, ", ".join(details)


def check_central_modulus(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    if s.is_double:
        return True, "n odd: no central cylinder"
    c = central_cylinder(s)
    tan = sin_exact(1, s.n).promote(s.conductor) / cos_exact(1, s.n).promote(s.conductor)
    return c.modulus == tan, f"cylinder {c.index}, modulus {float(c.modulus):.12g}"


def check_twists(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    bad = []
    for name in _names(s):
        d = decompose(s, canonical_direction(s.n, name))
        for k, twist in enumerate(twist_multiplicities(d)):
            q = twist.is_rational()
            if q is None or q.denominator != 1 or q <= 0:
                bad.append((name, k))
    if bad:
        return False, f"non-integral twists at {bad}"
    return True, "every modulus times 2cot(pi/n) is a positive integer"


def check_orbits(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    marked = weierstrass_points(s)
    weierstrass = set(marked.weierstrass)
    bad = []
    for p in marked.periodic:
        result = orbit(
            s,
            p,
            config.word_bound,
            point_cap=config.orbit_point_cap,
            refold_factor=config.refold_factor,
        )
        if not result.is_finite or not set(result.points) <= weierstrass:
            bad.append(str(p))
    return not bad, f"{len(marked.periodic)} orbits" + (f", open at {bad}" if bad else "")


def check_exclusion(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    configs = [exclusion_config(s, seg) for seg in candidate_segments(s)]
    bad = [cfg.segment.index for cfg in configs if not check_endpoint_heights(cfg)]
    return not bad, f"{len(configs)} configurations" + (
        f", irrational endpoint heights on {bad}" if bad else ""
    )


def check_samples(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    samples = sample_parameters(config.denominator_bound)
    total = 0
    missed = []
    for seg in candidate_segments(s):
        cfg = exclusion_config(s, seg)
        for t in samples:
            if seg.is_edge and t == Fraction(1, 2):
                continue
            total += 1
            if interior_point_excluded(cfg, t).verdict is not Verdict.NOT_PERIODIC:
                missed.append((seg.index, str(t)))
    return not missed, f"{total} samples" + (f", uncertified {missed[:5]}" if missed else "")


def check_blocking(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    points = random_points(s, 100, 1000 + s.n)
    bad = 0
    for i, p in enumerate(points):
        if not is_blocked(s, p, hyperelliptic_image(s, p)).is_blocked:
            bad += 1
        other = points[(i + 1) % len(points)]
        if is_blocked(s, p, other).verdict != is_blocked(s, other, p).verdict:
            bad += 1
    return bad == 0, f"{len(points)} random pairs, {bad} mismatches"


def check_segment_blocking(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    if s.is_double:
        return True, "n odd: the center is the cone point"
    marked = weierstrass_points(s).marked
    center, cone = center_point(s), cone_point(s, 0)
    loops = enumerate_segments(s, center, center, config.radius)
    unblocked = [seg for seg in loops if seg.avoids(marked)]
    saddles = enumerate_segments(s, cone, cone, config.radius)
    free = [seg for seg in saddles if seg.avoids(marked)]
    passed = bool(loops) and not unblocked and bool(free)
    return passed, (
        f"center: {len(loops)} segments, {len(unblocked)} unblocked; "
        f"cone: {len(saddles)} segments, {len(free)} avoid the marked points"
    )


def check_cusp_transfer(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    v = parabolic(s.n).apply(unit_vector(s.n, 2))
    reduction = reduce_direction(s.n, v, word_bound=config.direction_word_bound)
    if reduction is None:
        return False, f"no word of length <= {config.direction_word_bound} reduces {v}"
    factor = reduction.scale if reduction.scale.sign() > 0 else -reduction.scale
    bound = config.separatrix_length_bound
    sheared = decompose(s, v, separatrix_length_bound=bound)
    cusp = decompose(s, cusp_direction(s.n, reduction.cusp), separatrix_length_bound=bound)
    # heights shrink and circumferences grow by |scale| on the way to the cusp
    before = Counter((c.height, c.circumference * factor) for c in sheared.cylinders)
    after = Counter((c.height * factor, c.circumference) for c in cusp.cylinders)
    return before == after, (
        f"'{reduction.word}' reduces the sheared direction to cusp {reduction.cusp}, "
        f"{len(sheared.cylinders)} cylinders"
    )


def check_triangle(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    report = triangle_blocked_pairs(s.n)
    expected = ((ACUTE, ACUTE),) if s.n % 2 == 0 else ()
    return report.blocked_pairs == expected, f"blocked pairs {list(report.blocked_pairs)}"


def check_section4(config: ComputeConfig) -> CheckOutcome:
    report = verify_section4(config.section4_n_max)
    return report.all_excluded, f"{len(report.entries)} candidates, log bound {report.log_bound}"


def check_sine_sweep(config: ComputeConfig) -> CheckOutcome:
    found = rational_sine_ratios(config.sine_denominator_bound)
    expected = [(Fraction(1, 6), Fraction(1, 2), Fraction(1, 2))]
    return found == expected, f"rational pairs {[(str(a), str(b)) for a, b, _ in found]}"
