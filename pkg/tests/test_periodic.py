"""Unit tests for candidate segments, three-cylinder exclusion and classification."""

from __future__ import annotations

from fractions import Fraction

import pytest
from scripts.ngs.errors import DomainInputError
from scripts.ngs.exactnum import is_rational
from scripts.ngs.periodic import (
    TWIST_WORD,
    Verdict,
    candidate_segments,
    check_endpoint_heights,
    classify,
    exclusion_config,
    exclusion_directions,
    interior_point_excluded,
    periodic_points,
    sample_parameters,
)
from scripts.ngs.surface import build_surface, weierstrass_points


class TestCandidateSegments:
    """Segments every periodic point can be moved onto."""

    def test_even_n_has_two_halves(self) -> None:
        """One horizontal half and one half at angle pi/n."""
        segments = candidate_segments(build_surface(8))
        assert [seg.line for seg in segments] == ["horizontal", "rotated"]
        assert not any(seg.is_edge for seg in segments)

    @pytest.mark.parametrize("n", [5, 7, 9])
    def test_odd_n_chords(self, n: int) -> None:
        """(n-1)/2 horizontal chords, the top edge last."""
        segments = candidate_segments(build_surface(n))
        assert len(segments) == (n - 1) // 2
        assert [seg.is_edge for seg in segments] == [False] * (len(segments) - 1) + [True]
        assert all(seg.polygon_id == 1 for seg in segments)

    @pytest.mark.parametrize("n", [5, 7, 8, 10])
    def test_segments_start_at_distinguished_point(self, n: int) -> None:
        """Every candidate starts at P_n."""
        s = build_surface(n)
        center = weierstrass_points(s).center
        assert all(seg.start == center for seg in candidate_segments(s))

    def test_endpoints_by_parameter(self) -> None:
        """Parameters 0 and 1 give the stored endpoints."""
        s = build_surface(8)
        for seg in candidate_segments(s):
            assert seg.point_at(s, Fraction(0)) == seg.start
            assert seg.point_at(s, Fraction(1)) == seg.end


class TestExclusion:
    """Three-cylinder configurations."""

    @pytest.mark.parametrize("n", [5, 7, 8, 10])
    def test_configurations_verify(self, n: int) -> None:
        """Each candidate has a configuration with irrational C2/C3 ratio."""
        s = build_surface(n)
        for seg in candidate_segments(s):
            cfg = exclusion_config(s, seg)
            assert check_endpoint_heights(cfg)
            assert cfg.c2.index != cfg.c3.index
            assert is_rational(cfg.ratio) is None
            assert 0 < float(cfg.crossing) < 1

    def test_edge_segment_is_twisted(self) -> None:
        """Only the top-edge segment is moved by the twist word."""
        s = build_surface(7)
        for seg in candidate_segments(s):
            cfg = exclusion_config(s, seg)
            if seg.is_edge:
                assert cfg.twist is not None
                assert str(cfg.twist) == "r^-1 s r"
            else:
                assert cfg.twist is None
        assert TWIST_WORD == "r^-1 s r"

    @pytest.mark.parametrize(
        ("n", "expected"),
        [
            (8, [(12, 10), (0, 14)]),
            (10, [(18, 16), (18, 16)]),
            (12, [(20, 18), (0, 22)]),
            (14, [(26, 24), (26, 24)]),
        ],
    )
    def test_even_directions_follow_edge_midpoint(
        self, n: int, expected: list[tuple[int, int]]
    ) -> None:
        """-pi/n and -2pi/n from the edge midpoint at or just clockwise of the far end."""
        segments = candidate_segments(build_surface(n))
        assert [exclusion_directions(n, seg) for seg in segments] == expected

    @pytest.mark.parametrize("n", [5, 7, 9])
    def test_odd_directions(self, n: int) -> None:
        """Interior chords at -pi/n and -2pi/n; the twisted edge half splits at pi/n."""
        period = 2 * n
        for seg in candidate_segments(build_surface(n)):
            second = 2 if seg.is_edge else period - 4
            assert exclusion_directions(n, seg) == (period - 2, second)

    @pytest.mark.parametrize(("n", "vertex_end"), [(8, [True, False]), (10, [False, True])])
    def test_even_far_endpoints(self, n: int, vertex_end: list[bool]) -> None:
        """The horizontal half ends at a vertex exactly when 4 divides n."""
        segments = candidate_segments(build_surface(n))
        assert [seg.ends_at_vertex for seg in segments] == vertex_end
        assert [seg.line_k for seg in segments] == [0, 2]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [5, 7, 8, 9, 10, 11, 12, 13, 14])
    def test_every_segment_verifies_in_its_directions(self, n: int) -> None:
        """No candidate needs a direction other than exclusion_directions."""
        s = build_surface(n)
        for seg in candidate_segments(s):
            cfg = exclusion_config(s, seg)
            assert cfg.directions == exclusion_directions(n, seg)
            assert check_endpoint_heights(cfg)

    def test_tested_path_endpoints(self) -> None:
        """The tested segment for n even is the candidate itself."""
        s = build_surface(10)
        seg = candidate_segments(s)[0]
        cfg = exclusion_config(s, seg)
        assert cfg.tested.start == seg.start
        assert cfg.tested.end == seg.end


class TestClassify:
    """Per-point certificates."""

    def test_sample_parameters(self) -> None:
        """Reduced fractions in (0, 1) up to the bound."""
        assert sample_parameters(4) == [
            Fraction(1, 4),
            Fraction(1, 3),
            Fraction(1, 2),
            Fraction(2, 3),
            Fraction(3, 4),
        ]

    @pytest.mark.parametrize("t", [Fraction(1, 3), Fraction(2, 5), Fraction(5, 7)])
    def test_interior_points_not_periodic(self, t: Fraction) -> None:
        """Sampled interior points have an irrational height somewhere."""
        s = build_surface(8)
        cfg = exclusion_config(s, candidate_segments(s)[0])
        cert = interior_point_excluded(cfg, t)
        assert cert.verdict is Verdict.NOT_PERIODIC
        assert cert.cylinder in ("C1", "C2", "C3")
        assert cert.height is not None

    def test_edge_midpoint_is_periodic(self) -> None:
        """The midpoint of the top edge (n odd) is a Weierstrass point."""
        s = build_surface(5)
        edge = next(seg for seg in candidate_segments(s) if seg.is_edge)
        cert = interior_point_excluded(exclusion_config(s, edge), Fraction(1, 2))
        assert cert.verdict is Verdict.PERIODIC

    @pytest.mark.parametrize("t", [Fraction(0), Fraction(1), Fraction(3, 2)])
    def test_parameter_out_of_range(self, t: Fraction) -> None:
        """Only 0 < t < 1 is accepted."""
        s = build_surface(8)
        cfg = exclusion_config(s, candidate_segments(s)[0])
        with pytest.raises(DomainInputError):
            interior_point_excluded(cfg, t)

    @pytest.mark.parametrize("n", [5, 8])
    def test_classify(self, n: int) -> None:
        """Periodic points are the non-cone Weierstrass points; every sample is excluded."""
        s = build_surface(n)
        certificates = classify(s, word_bound=6, sample_denominator_bound=4)
        assert set(periodic_points(certificates)) == set(weierstrass_points(s).periodic)
        samples = [c for c in certificates if c.segment is not None]
        assert samples
        assert all(c.verdict is Verdict.NOT_PERIODIC for c in samples)

    def test_classify_rejects_bad_bounds(self) -> None:
        """Bounds below 1 are rejected."""
        with pytest.raises(DomainInputError):
            classify(build_surface(8), word_bound=0)
        with pytest.raises(DomainInputError):
            classify(build_surface(8), sample_denominator_bound=0)
