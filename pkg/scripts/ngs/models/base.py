"""Base model and custom field types for configuration and reports.

Rationals travel as strings ("3", "-1/2") so YAML and JSON keep them exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from pydantic import BaseModel, ConfigDict, GetCoreSchemaHandler
from pydantic_core import CoreSchema, core_schema

if TYPE_CHECKING:
    from pydantic import GetJsonSchemaHandler
    from pydantic.json_schema import JsonSchemaValue


class BaseSurfaceModel(BaseModel):
    """Base model for configuration and report schemas.

    Extra fields are forbidden so misspelled keys fail loudly.
    """

    model_config = ConfigDict(
        extra="forbid",
        str_strip_whitespace=True,
        validate_default=True,
    )


RATIONAL_PATTERN = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(value: Any) -> Fraction:
    """Parse an int, Fraction or "a/b" string into a Fraction.

    Raises:
        ValueError: For floats, malformed strings or a zero denominator.
    """
    if isinstance(value, bool):
        raise ValueError("rational must not be a boolean")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"rational must be a string like '3/7', got: {type(value).__name__}")
    text = value.strip()
    if not RATIONAL_PATTERN.match(text):
        raise ValueError(f"rational must look like 'a' or 'a/b' with integers. Got: '{text}'")
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise ValueError(f"rational has a zero denominator: '{text}'")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    return str(value)


class _RationalAnnotation:
    """Pydantic annotation for exact rationals serialized as strings."""

    @classmethod
    def __get_pydantic_core_schema__(
        cls, _source_type: Any, _handler: GetCoreSchemaHandler
    ) -> CoreSchema:
        return core_schema.no_info_plain_validator_function(
            parse_rational,
            serialization=core_schema.plain_serializer_function_ser_schema(
                format_rational, info_arg=False, return_schema=core_schema.str_schema()
            ),
        )

    @classmethod
    def __get_pydantic_json_schema__(
        cls, _core_schema: CoreSchema, handler: GetJsonSchemaHandler
    ) -> JsonSchemaValue:
        return {"type": "string", "pattern": RATIONAL_PATTERN.pattern}


RationalStr = _RationalAnnotation


SCHEMA_PREFIX = "ngon-surfaces"


def schema_tag(kind: str) -> str:
    """The schema identifier carried by every JSON report."""
    return f"{SCHEMA_PREFIX}/{kind}@1"
