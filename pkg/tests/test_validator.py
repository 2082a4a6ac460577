"""Tests for the invariant suite behind verify-all.

Tests cover the check registry, result formatting, failure accumulation,
and a full pass over a small range of n.
"""

from __future__ import annotations

import pytest
from scripts.ngs.errors import DomainInputError, SingularityHitError
from scripts.ngs.models import ComputeConfig
from scripts.ngs.surface import build_surface
from scripts.ngs.surface.model import SurfaceDef
from scripts.ngs.validator import (
    CheckRegistry,
    CheckResult,
    UnknownCheckError,
    VerificationContext,
    default_registry,
    format_results,
    format_summary,
    get_check,
    run_suite,
)
from scripts.ngs.validator.checks import (
    CheckOutcome,
    check_action_composition,
    check_cusp_transfer,
    check_determinants,
    check_genus,
    check_inverse_involution,
    check_segment_blocking,
    check_triangle,
    half_turn,
    predicted_rational_pairs,
    random_points,
    random_words,
)

SMALL = ComputeConfig(word_bound=6, denominator_bound=4, sine_denominator_bound=12)


def _raises(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    raise SingularityHitError(f"hit a vertex on n={s.n}")


def _fails(s: SurfaceDef, config: ComputeConfig) -> CheckOutcome:
    return False, "always fails"


class TestRegistry:
    """Tests for check lookup."""

    def test_surface_checks_in_order(self) -> None:
        """Surface checks run in a fixed order starting with the topology."""
        names = default_registry().surface_names
        assert names[:2] == ["genus", "gauss-bonnet"]
        assert "exclusion" in names
        assert names[-1] == "triangle"
        assert names.index("blocking") < names.index("segment-blocking")
        assert {"inverse-involution", "action-composition", "cusp-transfer"} <= set(names)

    def test_global_checks(self) -> None:
        """The suite-wide checks are the N sweep and the sine sweep."""
        assert default_registry().global_names == ["section4", "sine-sweep"]

    def test_get_check(self) -> None:
        """get_check resolves surface and global names."""
        assert get_check("genus") is check_genus
        assert callable(get_check("sine-sweep"))

    def test_unknown_check(self) -> None:
        """Unregistered names raise UnknownCheckError."""
        with pytest.raises(UnknownCheckError) as exc_info:
            get_check("nonsense")
        assert exc_info.value.name == "nonsense"
        assert "nonsense" in str(exc_info.value)

    def test_is_registered(self) -> None:
        """is_registered covers both kinds of check."""
        registry = CheckRegistry()
        assert registry.is_registered("orbits")
        assert registry.is_registered("section4")
        assert not registry.is_registered("orbit")


class TestCheckResult:
    """Tests for [PASS]/[FAIL] lines."""

    def test_pass_line(self) -> None:
        """Passing per-surface results name n."""
        line = CheckResult("genus", 8, True, "genus 2").format()
        assert line == "[PASS] n=8 genus: genus 2"

    def test_fail_line_global(self) -> None:
        """Suite-wide results are tagged global."""
        line = CheckResult("section4", None, False, "bad").format()
        assert line == "[FAIL] global section4: bad"

    def test_colorized(self) -> None:
        """Colour codes wrap only the tag."""
        line = CheckResult("genus", 5, True, "ok").format(colorize=True)
        assert line.startswith("\033[32m[PASS]\033[0m")


class TestVerificationContext:
    """Tests for result accumulation."""

    def test_counts(self) -> None:
        """Failures are counted separately from passes."""
        ctx = VerificationContext()
        ctx.add("genus", 5, True, "ok")
        ctx.add("area", 5, False, "mismatch")
        assert ctx.failure_count == 1
        assert ctx.has_failures
        assert [r.name for r in ctx.failures] == ["area"]

    def test_summary(self) -> None:
        """The summary line counts checks and failures."""
        ctx = VerificationContext()
        ctx.add("genus", 5, True, "ok")
        assert format_summary(ctx) == "[PASS] 1 checks run, 0 failures found."
        assert format_results(ctx).splitlines()[0] == "[PASS] n=5 genus: ok"


class TestRunSuite:
    """Tests for running the suite."""

    def test_subset_passes(self) -> None:
        """Topology checks pass on a few surfaces."""
        ctx = run_suite([5, 8, 10], SMALL, names=["genus", "gauss-bonnet"], include_global=False)
        assert len(ctx.results) == 6
        assert not ctx.has_failures

    def test_domain_error_becomes_failure(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """A domain error inside a check is recorded, not raised."""
        registry = CheckRegistry()
        monkeypatch.setitem(registry._surface_checks, "raises", _raises)
        monkeypatch.setitem(registry._surface_checks, "fails", _fails)
        ctx = run_suite(
            [8], SMALL, names=["raises", "fails"], include_global=False, registry=registry
        )
        assert ctx.failure_count == 2
        assert ctx.results[0].message.startswith("SingularityHitError")

    def test_invalid_n(self) -> None:
        """n = 6 is rejected before any check runs."""
        with pytest.raises(DomainInputError):
            run_suite([6], SMALL, names=["genus"], include_global=False)

    def test_unknown_name(self) -> None:
        """Unknown check names are rejected."""
        with pytest.raises(UnknownCheckError):
            run_suite([8], SMALL, names=["genius"], include_global=False)

    @pytest.mark.slow
    def test_full_suite(self) -> None:
        """Every check passes for a small range of n, including the sweeps."""
        ctx = run_suite([5, 7, 8, 10], SMALL)
        assert not ctx.has_failures, format_results(ctx)
        assert ctx.results[-1].name == "sine-sweep"


class TestCheckHelpers:
    """Tests for helpers shared by the checks."""

    def test_random_points_are_deterministic(self) -> None:
        """The same seed gives the same points."""
        s = build_surface(8)
        assert random_points(s, 5, 3) == random_points(s, 5, 3)
        assert len(random_points(s, 5, 3)) == 5

    @pytest.mark.parametrize(
        ("n", "name", "expected"),
        [(18, "horizontal", 1), (12, "rotated", 1), (12, "horizontal", 0), (8, "rotated", 0)],
    )
    def test_predicted_rational_pairs(self, n: int, name: str, expected: int) -> None:
        """A rational height ratio needs a sin(pi/6) height."""
        assert predicted_rational_pairs(n, name) == expected

    def test_triangle_check(self) -> None:
        """The triangle check passes for odd and even n."""
        assert check_triangle(build_surface(7), SMALL)[0]
        assert check_triangle(build_surface(8), SMALL)[0]

    def test_random_words_lengths(self) -> None:
        """Words respect the length window and repeat for a seed."""
        s = build_surface(7)
        words = random_words(s, 12, 6, 1, min_length=3)
        assert all(3 <= len(w) <= 6 for w in words)
        assert words == random_words(s, 12, 6, 1, min_length=3)

    @pytest.mark.parametrize(("n", "length"), [(7, 7), (8, 4), (10, 5)])
    def test_half_turn_is_minus_identity(self, n: int, length: int) -> None:
        """The half-turn word has matrix -Id."""
        word = half_turn(n)
        assert len(word) == length
        assert (-word.matrix).is_identity()

    @pytest.mark.parametrize("n", [5, 7, 8])
    def test_group_checks(self, n: int) -> None:
        """Determinants, composition and the half turn hold."""
        s = build_surface(n)
        assert check_determinants(s, SMALL)[0]
        assert check_action_composition(s, SMALL)[0]
        assert check_inverse_involution(s, SMALL)[0]

    @pytest.mark.parametrize("n", [5, 8, 10])
    def test_cusp_transfer(self, n: int) -> None:
        """Cylinders in the sheared direction match the cusp cylinders."""
        passed, message = check_cusp_transfer(build_surface(n), SMALL)
        assert passed, message

    def test_cusp_transfer_with_one_letter(self) -> None:
        """One letter undoes the shear; the rotation prefix is not counted."""
        tiny = SMALL.model_copy(update={"direction_word_bound": 1})
        passed, message = check_cusp_transfer(build_surface(7), tiny)
        assert passed, message
        assert "reduces the sheared direction to cusp 0" in message

    def test_segment_blocking_odd(self) -> None:
        """For n odd the center check is vacuous."""
        assert check_segment_blocking(build_surface(7), SMALL) == (
            True,
            "n odd: the center is the cone point",
        )

    @pytest.mark.slow
    def test_segment_blocking_octagon(self) -> None:
        """At radius 3 the 40 octagon center loops are blocked and 208 cone loops exist."""
        passed, message = check_segment_blocking(build_surface(8), SMALL)
        assert passed, message
        assert message.startswith("center: 40 segments, 0 unblocked; cone: 208 segments")
