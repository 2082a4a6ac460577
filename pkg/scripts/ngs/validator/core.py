"""Core of the invariant suite.

Runs registered checks over a range of n in a fixed order and accumulates
results. A domain error raised inside a check is recorded as a failure of
that check, never propagated.
"""

from __future__ import annotations

import sys
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import partial

from scripts.ngs.errors import SurfaceError
from scripts.ngs.models.config import ComputeConfig
from scripts.ngs.surface.model import build_surface
from scripts.ngs.validator.checks import CheckOutcome
from scripts.ngs.validator.registry import CheckRegistry, default_registry


@dataclass
class CheckResult:
    """Outcome of one check, for one n or suite-wide (n is None)."""

    name: str
    n: int | None
    passed: bool
    message: str

    def format(self, colorize: bool = False) -> str:
        """Format the result as a [PASS] or [FAIL] line.

        Args:
            colorize: If True, use ANSI color codes.

        Returns:
            Formatted result string.
        """
        color = ("\033[32m" if self.passed else "\033[31m") if colorize else ""
        reset = "\033[0m" if colorize else ""
        tag = "[PASS]" if self.passed else "[FAIL]"
        scope = f"n={self.n}" if self.n is not None else "global"
        return f"{color}{tag}{reset} {scope} {self.name}: {self.message}"


@dataclass
class VerificationContext:
    """Accumulates check results across surfaces."""

    results: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, n: int | None, passed: bool, message: str) -> None:
        self.results.append(CheckResult(name=name, n=n, passed=passed, message=message))

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    @property
    def failure_count(self) -> int:
        return len(self.failures)

    @property
    def has_failures(self) -> bool:
        return self.failure_count > 0


def _record(
    ctx: VerificationContext, name: str, n: int | None, run: Callable[[], CheckOutcome]
) -> None:
    try:
        passed, message = run()
    except SurfaceError as e:
        ctx.add(name, n, False, f"{type(e).__name__}: {e}")
        return
    ctx.add(name, n, bool(passed), message)


def run_suite(
    n_values: list[int],
    config: ComputeConfig,
    *,
    names: list[str] | None = None,
    include_global: bool = True,
    registry: CheckRegistry | None = None,
) -> VerificationContext:
    """Run the invariant suite.

    Args:
        n_values: Surfaces to check, each validated like build_surface.
        config: Bounds for the computations.
        names: Restrict to these surface checks; all when None.
        include_global: Also run the suite-wide checks once.
        registry: Check registry; the default one when None.

    Returns:
        The context holding every result in run order.

    Raises:
        DomainInputError: If some n is not a valid surface parameter.
        UnknownCheckError: If a requested name is not registered.
    """
    registry = registry or default_registry()
    selected = names if names is not None else registry.surface_names
    ctx = VerificationContext()
    for n in n_values:
        s = build_surface(n)
        for name in selected:
            check = registry.surface_check(name)
            _record(ctx, name, n, partial(check, s, config))

    if include_global:
        for name in registry.global_names:
            check_all = registry.global_check(name)
            _record(ctx, name, None, partial(check_all, config))
    return ctx


def format_results(ctx: VerificationContext, colorize: bool = False) -> str:
    """One line per result followed by a summary line."""
    lines = [result.format(colorize) for result in ctx.results]
    lines.append(format_summary(ctx, colorize))
    return "\n".join(lines)


def format_summary(ctx: VerificationContext, colorize: bool = False) -> str:
    passed = not ctx.has_failures
    color = ("\033[32m" if passed else "\033[31m") if colorize else ""
    reset = "\033[0m" if colorize else ""
    tag = "[PASS]" if passed else "[FAIL]"
    return (
        f"{color}{tag}{reset} {len(ctx.results)} checks run, "
        f"{ctx.failure_count} failures found."
    )


def is_tty() -> bool:
    """Check if stdout is connected to a TTY.

    Returns:
        True if stdout is a TTY, False otherwise.
    """
    return hasattr(sys.stdout, "isatty") and sys.stdout.isatty()
