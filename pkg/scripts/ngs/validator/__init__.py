"""Invariant suite behind verify-all."""

from scripts.ngs.validator.core import (
    CheckResult,
    VerificationContext,
    format_results,
    format_summary,
    is_tty,
    run_suite,
)
from scripts.ngs.validator.registry import (
    CheckRegistry,
    UnknownCheckError,
    default_registry,
    get_check,
)

__all__ = [
    "CheckRegistry",
    "CheckResult",
    "UnknownCheckError",
    "VerificationContext",
    "default_registry",
    "format_results",
    "format_summary",
    "get_check",
    "is_tty",
    "run_suite",
]
