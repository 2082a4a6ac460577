#!/usr/bin/env python3
"""Command-line interface for the n-gon surface toolkit.

Every subcommand loads the compute bounds from --config, validates its
arguments, runs the computation and writes a JSON report (or a short text
summary) to stdout or --out. Figures are written with --svg.

Usage:
    python scripts/ngon.py surface 8 --svg out/octagon.svg
    python scripts/ngon.py cylinders 10 --direction rotated
    python scripts/ngon.py sine-ratio 1/6 1/2 --format text
    python scripts/ngon.py orbit 7 --point midpoint:2 --bound 10
    python scripts/ngon.py segments 8 --p center --q cone:0 --radius 3
    python scripts/ngon.py verify-all 5-14 --timings

Exit codes:
    0  success
    1  domain error (invalid n, malformed point, unreadable config, ...)
    2  verification failure (a failed check or an unsatisfied exclusion hypothesis),
       or a usage error such as a zero bound
"""

from __future__ import annotations

import argparse
import json
import sys
import tempfile
import time
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from scripts.ngs.blocking import enumerate_segments, is_blocked, triangle_blocked_pairs
from scripts.ngs.blocking.queries import blocking_set
from scripts.ngs.cylinders import canonical_direction, decompose
from scripts.ngs.engine import (
    Renderer,
    RenderingError,
    TemplateNotFoundError,
    blocked_report,
    classify_report,
    create_env,
    cylinders_report,
    cylinders_svg_context,
    exclusion_svg_context,
    heights_report,
    orbit_report,
    prepare_context,
    section4_report,
    segments_report,
    segments_svg_context,
    sine_ratio_report,
    surface_report,
    surface_svg_context,
    triangle_report,
)
from scripts.ngs.errors import DomainInputError, HypothesisFailure, SurfaceError
from scripts.ngs.exactnum.section4 import verify_section4
from scripts.ngs.exactnum.sines import rational_sine_ratios
from scripts.ngs.loader import (
    DEFAULT_CONFIG,
    YAMLLoadError,
    YAMLValidationError,
    load_compute_config,
)
from scripts.ngs.models import CommandConfig, ComputeConfig, parse_rational
from scripts.ngs.models.base import schema_tag
from scripts.ngs.models.reports import CheckModel, VerifyReport
from scripts.ngs.periodic import candidate_segments, classify, exclusion_config
from scripts.ngs.surface import build_surface, parse_point, parse_vector
from scripts.ngs.surface.geometry import PlanarPoint
from scripts.ngs.surface.model import SurfaceDef
from scripts.ngs.validator import format_results, is_tty, run_suite
from scripts.ngs.veech import orbit, reduce_direction

EXPECTED_SINE_PAIRS = [(Fraction(1, 6), Fraction(1, 2), Fraction(1, 2))]
FIGURE_COMMANDS = ("surface", "cylinders", "classify", "segments")


class Timer:
    """Context manager for timing pipeline steps."""

    enabled = False

    def __init__(self, step_name: str):
        self.step_name = step_name
        self.start_time: float = 0
        self.elapsed_ms: float = 0

    def __enter__(self) -> Timer:
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, *args: object) -> None:
        self.elapsed_ms = (time.perf_counter() - self.start_time) * 1000
        if Timer.enabled:
            self.log()

    def log(self) -> None:
        """Print timing information to stderr, keeping stdout valid JSON."""
        print(f"  [{self.step_name}] {self.elapsed_ms:.1f}ms", file=sys.stderr)


def atomic_write(content: str, target_path: Path) -> None:
    """Write content to a file atomically using temp file and rename.

    Args:
        content: String content to write.
        target_path: Final destination path for the file.
    """
    target_path.parent.mkdir(parents=True, exist_ok=True)

    fd, temp_path = tempfile.mkstemp(
        suffix=".tmp",
        prefix=target_path.stem + "_",
        dir=target_path.parent,
    )
    try:
        with open(fd, "w", encoding="utf-8") as f:
            f.write(content)
        Path(temp_path).replace(target_path)
    except Exception:
        Path(temp_path).unlink(missing_ok=True)
        raise


def dumps(report: BaseModel) -> str:
    """Stable JSON text of a report: sorted keys, two-space indent, trailing newline."""
    return json.dumps(prepare_context(report), sort_keys=True, indent=2) + "\n"


@dataclass
class Outcome:
    """What a subcommand produced.

    Attributes:
        report: The JSON report.
        summary: One-line text summary for --format text.
        svg: Template name and context, when the command has a figure.
        check_lines: [PASS]/[FAIL] lines of verification commands.
        failed: True when a verification check failed.
    """

    report: BaseModel
    summary: str
    svg: tuple[str, dict[str, Any]] | None = None
    check_lines: str | None = None
    failed: bool = False


def _direction(s: SurfaceDef, text: str) -> PlanarPoint:
    if text in ("horizontal", "rotated"):
        return canonical_direction(s.n, text)
    return parse_vector(s, text)


def _cmd_surface(cfg: CommandConfig) -> Outcome:
    s = build_surface(_n(cfg))
    report = surface_report(s)
    summary = (
        f"n={s.n}: genus {report.genus}, {len(report.weierstrass)} Weierstrass points, "
        f"{len(report.cone_points)} cone point(s)"
    )
    return Outcome(report, summary, svg=("surface.svg.j2", surface_svg_context(s)))


def _cmd_cylinders(cfg: CommandConfig) -> Outcome:
    s = build_surface(_n(cfg))
    v = _direction(s, cfg.direction or "horizontal")
    d = decompose(s, v, separatrix_length_bound=cfg.compute.separatrix_length_bound)
    reduction = reduce_direction(s.n, v, word_bound=cfg.direction_word_bound)
    report = cylinders_report(d, reduction)
    summary = f"n={s.n}: {len(d.cylinders)} cylinders, area conserved: {report.area_matches}"
    if reduction is not None:
        summary += f", reduced to cusp {reduction.cusp} by '{reduction.word}'"
    return Outcome(report, summary, svg=("cylinders.svg.j2", cylinders_svg_context(d)))


def _cmd_heights(cfg: CommandConfig) -> Outcome:
    s = build_surface(_n(cfg))
    report = heights_report(s)
    matches = all(row.matches for table in report.tables for row in table.rows)
    summary = f"n={s.n}: heights match the closed forms: {matches}"
    return Outcome(report, summary, failed=not matches)


def _cmd_sine_ratio(cfg: CommandConfig) -> Outcome:
    assert cfg.alpha is not None and cfg.beta is not None
    report = sine_ratio_report(cfg.alpha, cfg.beta)
    return Outcome(report, report.ratio if report.ratio is not None else "irrational")


def _cmd_verify_section4(cfg: CommandConfig) -> Outcome:
    with Timer("section4"):
        checked = verify_section4(cfg.compute.section4_n_max)
    with Timer("sine-sweep"):
        pairs = rational_sine_ratios(cfg.compute.sine_denominator_bound)
    report = section4_report(checked, pairs)
    results = [
        ("candidates-excluded", checked.all_excluded, f"{len(checked.entries)} candidates"),
        ("log-bound", checked.log_bound < checked.n_max, f"N <= {checked.log_bound}"),
        ("g-injective", checked.g_injective, "g is injective below the bound"),
        ("density", checked.density_holds, "phi(2N)/(2N) >= 1/4 where used"),
        (
            "sine-sweep",
            pairs == EXPECTED_SINE_PAIRS,
            f"rational pairs {[(str(a), str(b)) for a, b, _ in pairs]}",
        ),
    ]
    colorize = is_tty()
    lines = []
    for name, passed, message in results:
        tag = "[PASS]" if passed else "[FAIL]"
        color = ("\033[32m" if passed else "\033[31m") if colorize else ""
        reset = "\033[0m" if colorize else ""
        lines.append(f"{color}{tag}{reset} {name}: {message}")
    failed = not all(passed for _, passed, _ in results)
    summary = "all candidates excluded" if not failed else "verification failed"
    return Outcome(report, summary, check_lines="\n".join(lines), failed=failed)


def _cmd_orbit(cfg: CommandConfig) -> Outcome:
    s = build_surface(_n(cfg))
    assert cfg.point is not None
    p = parse_point(s, cfg.point)
    result = orbit(
        s,
        p,
        cfg.word_bound,
        point_cap=cfg.compute.orbit_point_cap,
        refold_factor=cfg.compute.refold_factor,
    )
    summary = f"orbit of {p}: {len(result.points)} points, {result.status.value}"
    return Outcome(orbit_report(s, p, result), summary)


def _cmd_classify(cfg: CommandConfig) -> Outcome:
    s = build_surface(_n(cfg))
    with Timer("exclusion-configs"):
        configs = [exclusion_config(s, seg) for seg in candidate_segments(s)]
    with Timer("certificates"):
        certificates = classify(
            s,
            cfg.word_bound,
            cfg.denominator_bound,
            point_cap=cfg.compute.orbit_point_cap,
            refold_factor=cfg.compute.refold_factor,
        )
    report = classify_report(s, certificates, configs, cfg.word_bound, cfg.denominator_bound)
    summary = f"n={s.n}: {len(report.periodic)} periodic points"
    return Outcome(report, summary, svg=("exclusion.svg.j2", exclusion_svg_context(configs)))


def _cmd_blocked(cfg: CommandConfig) -> Outcome:
    s = build_surface(_n(cfg))
    assert cfg.p is not None and cfg.q is not None
    query = is_blocked(s, parse_point(s, cfg.p), parse_point(s, cfg.q))
    summary = f"{query.verdict.value}: {query.reason}"
    return Outcome(blocked_report(s, query), summary)


def _cmd_segments(cfg: CommandConfig, root: int) -> Outcome:
    s = build_surface(_n(cfg))
    assert cfg.p is not None and cfg.q is not None
    p, q = parse_point(s, cfg.p), parse_point(s, cfg.q)
    query = is_blocked(s, p, q)
    with Timer("enumerate-segments"):
        segments = enumerate_segments(
            s, p, q, cfg.radius, root=root, crossing_cap=cfg.compute.flow_crossing_cap
        )
    blocking = blocking_set(s, p, q)
    avoiding = sum(1 for seg in segments if seg.avoids(blocking))
    summary = (
        f"{len(segments)} segments within radius {cfg.radius}, "
        f"{avoiding} avoid the marked points"
    )
    svg = segments_svg_context(s, segments, blocking, float(cfg.radius))
    return Outcome(
        segments_report(s, query, segments, cfg.radius, root),
        summary,
        svg=("segments.svg.j2", svg),
    )


def _cmd_triangle(cfg: CommandConfig) -> Outcome:
    report = triangle_blocked_pairs(_n(cfg))
    if report.blocked_pairs:
        pairs = ", ".join(f"({a}, {b})" for a, b in report.blocked_pairs)
        summary = f"finitely blocked pairs: {pairs}"
    else:
        summary = "no finitely blocked pairs"
    return Outcome(triangle_report(report), summary)


def _cmd_verify_all(cfg: CommandConfig) -> Outcome:
    with Timer("invariant-suite"):
        ctx = run_suite(cfg.n_values, cfg.compute)
    report = VerifyReport(
        schema=schema_tag("verify"),
        n_values=cfg.n_values,
        passed=len(ctx.results) - ctx.failure_count,
        failed=ctx.failure_count,
        checks=[
            CheckModel(name=r.name, passed=r.passed, message=r.message, n=r.n)
            for r in ctx.results
        ],
    )
    summary = f"{len(ctx.results)} checks run, {ctx.failure_count} failures found."
    return Outcome(
        report,
        summary,
        check_lines=format_results(ctx, colorize=is_tty()),
        failed=ctx.has_failures,
    )


def _n(cfg: CommandConfig) -> int:
    assert cfg.n is not None
    return cfg.n


def parse_n_range(text: str) -> list[int]:
    """Expand "5-14" or "5,7,8" into n values; 6 is skipped inside a range.

    Raises:
        ValueError: For malformed text or an empty range.
    """
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        low, sep, high = part.partition("-")
        if sep:
            start, stop = int(low), int(high)
            if start > stop:
                raise ValueError(f"empty range '{part}'")
            values.extend(n for n in range(start, stop + 1) if n != 6)
        else:
            values.append(int(part))
    return sorted(set(values))


def positive_int(text: str) -> int:
    """argparse type for bounds: a decimal integer >= 1."""
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def positive_rational(text: str) -> Fraction:
    """argparse type for radii: an exact 'a' or 'a/b' greater than 0."""
    try:
        value = parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        type=Path,
        default=DEFAULT_CONFIG,
        help="YAML file of compute bounds (default: config/defaults.yaml)",
    )
    common.add_argument("--timings", action="store_true", help="Print step timings to stderr")
    common.add_argument("--out", type=Path, help="Write the report here instead of stdout")
    common.add_argument("--svg", type=Path, help="Write the figure of the command here")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=["json", "text"],
        default="json",
        help="Report format (default: json)",
    )

    parser = argparse.ArgumentParser(
        description="Exact computations on regular n-gon translation surfaces.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_n(name: str, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.add_argument("n", type=int, help="Number of sides (n >= 5, n != 6)")
        return command

    with_n("surface", "Polygons, gluings, cone points and Weierstrass points")
    cylinders = with_n("cylinders", "Cylinder decomposition in one direction")
    cylinders.add_argument(
        "--direction",
        default="horizontal",
        help="horizontal, rotated, or an exact vector 'x,y'",
    )
    cylinders.add_argument(
        "--direction-word-bound",
        type=positive_int,
        help="Word length for reducing the direction to a cusp",
    )
    with_n("heights", "Cylinder heights against their closed forms")

    sine = sub.add_parser("sine-ratio", parents=[common], help="Rationality of sin/sin")
    sine.add_argument("alpha", help="First angle as a multiple of pi, e.g. 1/6")
    sine.add_argument("beta", help="Second angle as a multiple of pi, e.g. 1/2")

    sub.add_parser(
        "verify-section4", parents=[common], help="Exclusion of every candidate N"
    )

    orbit_cmd = with_n("orbit", "Orbit of a point under the generators")
    orbit_cmd.add_argument("--point", required=True, help="Point spec, e.g. midpoint:0")
    orbit_cmd.add_argument("--bound", type=positive_int, help="Word length bound")

    classify_cmd = with_n("classify", "Periodic-point certificates")
    classify_cmd.add_argument("--bound", type=positive_int, help="Word length bound")
    classify_cmd.add_argument(
        "--denominator-bound", type=positive_int, help="Largest sample denominator"
    )

    for name, help_text in (
        ("blocked", "Finite blocking verdict for a pair of points"),
        ("segments", "Segments between two points within a radius"),
    ):
        pair = with_n(name, help_text)
        pair.add_argument("--p", required=True, help="First point spec")
        pair.add_argument("--q", required=True, help="Second point spec")
        if name == "segments":
            pair.add_argument(
                "--radius",
                type=positive_rational,
                help="Radius in circumscribed diameters, e.g. 3",
            )
            pair.add_argument("--root", type=int, default=0, help="Copy of p to start from")

    with_n("triangle", "Finitely blocked vertex pairs of the unfolding triangle")

    verify = sub.add_parser("verify-all", parents=[common], help="Run the invariant suite")
    verify.add_argument("n_range", help="n values, e.g. 5-14 or 5,7,8")
    return parser


def _command_config(args: argparse.Namespace, compute: ComputeConfig) -> CommandConfig:
    data: dict[str, Any] = {
        "command": args.command,
        "output_format": args.output_format,
        "compute": compute,
    }
    fallbacks: dict[str, tuple[str, Any]] = {
        "word_bound": ("bound", compute.word_bound),
        "denominator_bound": ("denominator_bound", compute.denominator_bound),
        "direction_word_bound": ("direction_word_bound", compute.direction_word_bound),
        "radius": ("radius", compute.radius),
    }
    for field, (flag, default) in fallbacks.items():
        value = getattr(args, flag, None)
        data[field] = default if value is None else value
    for name in ("n", "direction", "point", "p", "q", "alpha", "beta"):
        if getattr(args, name, None) is not None:
            data[name] = getattr(args, name)
    if args.command == "verify-all":
        data["n_values"] = parse_n_range(args.n_range)
    return CommandConfig.model_validate(data)


def _flag_errors(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        loc = ".".join(str(p) for p in item["loc"]) or "arguments"
        parts.append(f"{loc}: {item['msg']}")
    return "; ".join(parts)


COMMAND_HANDLERS: dict[str, Callable[[CommandConfig], Outcome]] = {
    "surface": _cmd_surface,
    "cylinders": _cmd_cylinders,
    "heights": _cmd_heights,
    "sine-ratio": _cmd_sine_ratio,
    "verify-section4": _cmd_verify_section4,
    "orbit": _cmd_orbit,
    "classify": _cmd_classify,
    "blocked": _cmd_blocked,
    "triangle": _cmd_triangle,
    "verify-all": _cmd_verify_all,
}


def _execute(args: argparse.Namespace, cfg: CommandConfig) -> Outcome:
    if cfg.command == "segments":
        return _cmd_segments(cfg, args.root)
    return COMMAND_HANDLERS[cfg.command](cfg)


def _emit(args: argparse.Namespace, cfg: CommandConfig, outcome: Outcome) -> None:
    if cfg.output_format == "text":
        text = (outcome.check_lines + "\n" if outcome.check_lines else "") + outcome.summary + "\n"
    else:
        text = dumps(outcome.report)
        if outcome.check_lines:
            print(outcome.check_lines, file=sys.stderr)

    with Timer("write-output"):
        if args.out is not None:
            atomic_write(text, args.out)
        else:
            sys.stdout.write(text)

    if args.svg is not None and outcome.svg is not None:
        template, context = outcome.svg
        with Timer("render-svg"):
            svg = Renderer(create_env(cfg.compute.svg_digits)).render(template, context)
            atomic_write(svg, args.svg)


def run(argv: list[str] | None = None) -> int:
    """Parse argv, run one subcommand and report.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None.

    Returns:
        Exit code (0 success, 1 domain error, 2 verification failure).
    """
    args = build_parser().parse_args(argv)
    Timer.enabled = args.timings
    total_start = time.perf_counter()

    try:
        with Timer("load-config"):
            compute = load_compute_config(args.config)
        with Timer("validate-arguments"):
            cfg = _command_config(args, compute)
        if args.svg is not None and cfg.command not in FIGURE_COMMANDS:
            raise DomainInputError(f"command '{cfg.command}' has no figure for --svg")
        with Timer(cfg.command):
            outcome = _execute(args, cfg)
        _emit(args, cfg, outcome)

    except FileNotFoundError as e:
        print(f"ERROR: Config not found: {e}", file=sys.stderr)
        return 1

    except YAMLLoadError as e:
        print(f"ERROR: Config load failed: {e.message}", file=sys.stderr)
        return 1

    except YAMLValidationError as e:
        detail = _flag_errors(e.validation_error)
        print(f"ERROR: Config validation failed: {detail}", file=sys.stderr)
        return 1

    except ValidationError as e:
        print(f"ERROR: Invalid arguments: {_flag_errors(e)}", file=sys.stderr)
        return 1

    except ValueError as e:
        print(f"ERROR: Invalid arguments: {e}", file=sys.stderr)
        return 1

    except HypothesisFailure as e:
        print(f"ERROR: Exclusion hypothesis failed: {e.message}", file=sys.stderr)
        return 2

    except SurfaceError as e:
        print(f"ERROR: {type(e).__name__}: {e.message}", file=sys.stderr)
        return 1

    except TemplateNotFoundError as e:
        print(f"ERROR: Template not found: '{e.template_name}'", file=sys.stderr)
        return 1

    except RenderingError as e:
        print(f"ERROR: Rendering failed: {e.message}", file=sys.stderr)
        return 1

    if args.timings:
        total_ms = (time.perf_counter() - total_start) * 1000
        print(f"Total time: {total_ms:.1f}ms", file=sys.stderr)
    return 2 if outcome.failed else 0


def main() -> int:
    """CLI entry point.

    Returns:
        Exit code.
    """
    return run()


if __name__ == "__main__":
    sys.exit(main())
