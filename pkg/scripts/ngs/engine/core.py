"""Jinja2 environment for the SVG figures.

Undefined variables fail immediately, and numbers are printed with a fixed
number of significant digits so repeated renders are byte-identical.
"""

from __future__ import annotations

from pathlib import Path

from jinja2 import Environment, FileSystemLoader, StrictUndefined, select_autoescape

DEFAULT_DIGITS = 12


def _get_templates_dir() -> Path:
    """Absolute path of templates/ at the project root."""
    return Path(__file__).resolve().parents[3] / "templates"


def format_number(value: float, digits: int = DEFAULT_DIGITS) -> str:
    """Format a float for SVG output with digits significant digits.

    Negative zero prints as 0.
    """
    text = f"{value:.{digits}g}"
    return "0" if text == "-0" else text


def create_env(digits: int = DEFAULT_DIGITS) -> Environment:
    """Create the strict template environment.

    Args:
        digits: Significant digits used by the num filter.

    Raises:
        FileNotFoundError: If the templates directory does not exist.
    """
    templates_dir = _get_templates_dir()
    if not templates_dir.exists():
        raise FileNotFoundError(f"no templates/ directory at {templates_dir}")

    env = Environment(
        loader=FileSystemLoader(str(templates_dir)),
        undefined=StrictUndefined,
        autoescape=select_autoescape(["svg.j2", "svg", "xml"]),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    env.filters["num"] = lambda value: format_number(float(value), digits)
    return env
