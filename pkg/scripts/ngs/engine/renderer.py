"""Rendering of SVG figures from prepared contexts."""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

from jinja2 import Environment, Template, TemplateError
from jinja2.exceptions import TemplateNotFound

from scripts.ngs.engine.core import create_env
from scripts.ngs.engine.exceptions import RenderingError, TemplateNotFoundError


class Renderer:
    """Fills figure templates; the same context always gives the same bytes."""

    def __init__(self, env: Environment | None = None):
        self.env = env if env is not None else create_env()

    @staticmethod
    def _run(source: str, load: Callable[[], Template], context: dict[str, Any]) -> str:
        try:
            return load().render(context)
        except TemplateNotFound as e:
            raise TemplateNotFoundError(str(e.name)) from e
        except TemplateError as e:
            raise RenderingError.in_template(source, e) from e
        except (ArithmeticError, TypeError, ValueError) as e:
            raise RenderingError.in_template(source, e) from e

    def render(self, template_name: str, context: dict[str, Any]) -> str:
        """Render templates/<template_name>.

        Raises:
            TemplateNotFoundError: If the template, or one it extends, is missing.
            RenderingError: On a syntax error, a missing context key or a bad value.
        """
        return self._run(
            f"template '{template_name}'",
            lambda: self.env.get_template(template_name),
            context,
        )

    def render_string(self, template_string: str, context: dict[str, Any]) -> str:
        """Render inline template text with the same filters and strictness."""
        return self._run("inline template", lambda: self.env.from_string(template_string), context)
