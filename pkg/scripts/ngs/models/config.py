"""Configuration schemas: the YAML defaults and a parsed CLI command.

ComputeConfig mirrors config/defaults.yaml. CommandConfig validates one
subcommand invocation after the config file and flags are merged.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated

from pydantic import Field, field_validator, model_validator

from scripts.ngs.models.base import BaseSurfaceModel, RationalStr

COMMANDS = (
    "surface",
    "cylinders",
    "heights",
    "sine-ratio",
    "verify-section4",
    "orbit",
    "classify",
    "blocked",
    "segments",
    "triangle",
    "verify-all",
)


class ComputeConfig(BaseSurfaceModel):
    """Every tunable bound of the computations."""

    word_bound: int = Field(default=10, ge=1, description="Orbit BFS word length")
    orbit_point_cap: int = Field(default=512, ge=1, description="Largest orbit explored")
    direction_word_bound: int = Field(
        default=14, ge=1, description="Word length for reducing a direction to a cusp"
    )
    separatrix_length_bound: int = Field(
        default=200, ge=1, description="Separatrix trace bound in circumscribed diameters"
    )
    refold_factor: int = Field(
        default=10, ge=1, description="Refold cap is refold_factor * word length * n"
    )
    flow_crossing_cap: int = Field(default=4096, ge=1, description="Edge crossings per flow")
    radius: Annotated[Fraction, RationalStr] = Field(
        default=Fraction(3), description="Segment enumeration radius in diameters"
    )
    denominator_bound: int = Field(
        default=12, ge=1, description="Largest sample denominator on candidate segments"
    )
    section4_n_max: int = Field(default=45, ge=45, description="Exclusive bound of the N sweep")
    sine_denominator_bound: int = Field(
        default=45, ge=1, description="Largest denominator in the sine-ratio sweep"
    )
    svg_digits: int = Field(default=12, ge=1, le=17, description="Digits of SVG coordinates")

    @field_validator("radius")
    @classmethod
    def _validate_radius(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise ValueError(f"radius must be positive, got {value}")
        return value


def _check_n(n: int) -> int:
    if n < 5 or n == 6:
        raise ValueError(f"n must satisfy n >= 5 and n != 6, got {n}")
    return n


class CommandConfig(BaseSurfaceModel):
    """One validated CLI invocation.

    Flags left unset on the command line are filled from ComputeConfig.
    """

    command: str
    n: int | None = None
    n_values: list[int] = Field(default_factory=list)
    direction: str | None = None
    point: str | None = None
    p: str | None = None
    q: str | None = None
    alpha: Annotated[Fraction, RationalStr] | None = None
    beta: Annotated[Fraction, RationalStr] | None = None
    word_bound: int = Field(default=10, ge=1)
    radius: Annotated[Fraction, RationalStr] = Field(default=Fraction(3))
    denominator_bound: int = Field(default=12, ge=1)
    direction_word_bound: int = Field(default=14, ge=1)
    output_format: str = Field(default="json", pattern=r"^(json|text)$")
    compute: ComputeConfig = Field(default_factory=ComputeConfig)

    @field_validator("command")
    @classmethod
    def _validate_command(cls, value: str) -> str:
        if value not in COMMANDS:
            raise ValueError(f"unknown command '{value}'; expected one of {COMMANDS}")
        return value

    @field_validator("n")
    @classmethod
    def _validate_n(cls, value: int | None) -> int | None:
        return None if value is None else _check_n(value)

    @field_validator("n_values")
    @classmethod
    def _validate_n_values(cls, values: list[int]) -> list[int]:
        return [_check_n(v) for v in values]

    @field_validator("radius")
    @classmethod
    def _validate_radius(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise ValueError(f"--radius must be positive, got {value}")
        return value

    @model_validator(mode="after")
    def _validate_required(self) -> CommandConfig:
        needs_n = self.command not in ("sine-ratio", "verify-section4", "verify-all")
        if needs_n and self.n is None:
            raise ValueError(f"command '{self.command}' needs n")
        if self.command == "sine-ratio" and (self.alpha is None or self.beta is None):
            raise ValueError("sine-ratio needs two rationals")
        if self.command == "orbit" and self.point is None:
            raise ValueError("orbit needs --point")
        if self.command in ("blocked", "segments") and (self.p is None or self.q is None):
            raise ValueError(f"{self.command} needs --p and --q")
        if self.command == "verify-all" and not self.n_values:
            raise ValueError("verify-all needs a non-empty n range")
        return self
