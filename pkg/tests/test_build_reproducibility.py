"""Reproducibility tests for reports and figures.

Two runs with identical inputs must produce byte-identical JSON and SVG.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

import pytest
from scripts.ngon import run


def sha256_hash(content: str) -> str:
    """Compute SHA-256 hash of string content."""
    return hashlib.sha256(content.encode("utf-8")).hexdigest()


def run_to_files(argv: list[str], out_dir: Path) -> tuple[str, str]:
    """Run one command writing its report and figure into out_dir.

    Returns:
        Tuple of (report text, svg text).
    """
    report = out_dir / "report.json"
    svg = out_dir / "figure.svg"
    assert run([*argv, "--out", str(report), "--svg", str(svg)]) == 0
    return report.read_text(encoding="utf-8"), svg.read_text(encoding="utf-8")


class TestReproducibility:
    """Byte-identical output for identical inputs."""

    @pytest.mark.parametrize(
        "argv",
        [
            ["surface", "8"],
            ["surface", "5"],
            ["cylinders", "10", "--direction", "rotated"],
            ["segments", "8", "--p", "center", "--q", "midpoint:0", "--radius", "1"],
        ],
    )
    def test_identical_runs_produce_identical_hashes(self, argv: list[str], tmp_path: Path) -> None:
        """Two runs of the same command write identical files."""
        (tmp_path / "a").mkdir()
        (tmp_path / "b").mkdir()
        first = run_to_files(argv, tmp_path / "a")
        second = run_to_files(argv, tmp_path / "b")
        assert sha256_hash(first[0]) == sha256_hash(second[0])
        assert sha256_hash(first[1]) == sha256_hash(second[1])

    def test_json_is_sorted_and_newline_terminated(self, tmp_path: Path) -> None:
        """Reports use sorted keys and end with a newline."""
        report, _ = run_to_files(["surface", "7"], tmp_path)
        assert report.endswith("}\n")
        assert report.index('"area"') < report.index('"schema"')

    def test_different_n_differs(self, tmp_path: Path) -> None:
        """Changing the surface changes the hash."""
        (tmp_path / "a").mkdir()
        (tmp_path / "b").mkdir()
        octagon = run_to_files(["surface", "8"], tmp_path / "a")
        decagon = run_to_files(["surface", "10"], tmp_path / "b")
        assert sha256_hash(octagon[0]) != sha256_hash(decagon[0])
