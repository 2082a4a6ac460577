"""Failures while turning an SVG context into markup."""

from __future__ import annotations


class RenderingError(Exception):
    """A figure template could not be rendered.

    Attributes:
        message: What went wrong, naming the template.
        cause: The underlying Jinja2 exception, if any.
    """

    def __init__(self, message: str, cause: Exception | None = None):
        self.message = message
        self.cause = cause
        super().__init__(message)

    @classmethod
    def in_template(cls, source: str, error: Exception) -> RenderingError:
        kind = type(error).__name__
        return cls(f"{kind} in {source}: {error}", cause=error)


class TemplateNotFoundError(Exception):
    """No figure template of this name under templates/."""

    def __init__(self, template_name: str):
        self.template_name = template_name
        super().__init__(f"no figure template '{template_name}'")
