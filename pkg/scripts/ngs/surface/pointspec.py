"""Parsing of exact point names.

Grammar:

    center | center:<polygon>
    cone:<k>
    midpoint:<k> | midpoint:<k>@<polygon>
    vertex:<k>   | vertex:<k>@<polygon>
    poly:<polygon>;x=<value>;y=<value>

A value is a rational ("-1/2") or a bracketed coefficient vector
("[0,1/2,0,...]") in the power basis of Q(zeta_4n).
"""

from __future__ import annotations

import re

from scripts.ngs.errors import DomainInputError, PointOutsideError
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.models.base import parse_rational
from scripts.ngs.surface.geometry import PlanarPoint
from scripts.ngs.surface.marked import (
    SurfacePoint,
    canonicalize,
    center_point,
    cone_point,
    midpoint,
    vertex_point,
)
from scripts.ngs.surface.model import SurfaceDef

_NAMED = re.compile(r"^(center|cone|midpoint|vertex)(?::(-?\d+))?(?:@(\d+))?$")
_POLY = re.compile(r"^poly:(\d+);x=([^;]+);y=([^;]+)$")


def _polygon(s: SurfaceDef, text: str | None) -> int:
    polygon_id = int(text) if text is not None else 0
    if not 0 <= polygon_id < len(s.polygons):
        raise DomainInputError(f"polygon {polygon_id} does not exist for n={s.n}")
    return polygon_id


def _value(s: SurfaceDef, text: str) -> CycElt:
    text = text.strip()
    try:
        if text.startswith("[") and text.endswith("]"):
            coeffs = [parse_rational(c) for c in text[1:-1].split(",") if c.strip()]
            return CycElt(s.conductor, coeffs)
        return CycElt.from_rational(s.conductor, parse_rational(text))
    except ValueError as e:
        raise DomainInputError(f"bad coordinate '{text}': {e}", cause=e) from e


def parse_point(s: SurfaceDef, text: str) -> SurfacePoint:
    """Canonical point named by text.

    Raises:
        DomainInputError: For malformed specs, indices out of range, or
            coordinates outside the polygon.
    """
    text = text.strip()
    named = _NAMED.match(text)
    if named:
        kind, index, polygon = named.groups()
        if kind == "center":
            if polygon is not None:
                raise DomainInputError(f"use center:<polygon>, not '{text}'")
            return center_point(s, _polygon(s, index))
        if index is None:
            raise DomainInputError(f"'{kind}' needs an index, e.g. '{kind}:0'")
        k = int(index)
        if kind == "cone":
            return cone_point(s, k)
        if not 0 <= k < s.n:
            raise DomainInputError(f"{kind} index {k} out of range 0..{s.n - 1}")
        if kind == "midpoint":
            return midpoint(s, k, _polygon(s, polygon))
        return vertex_point(s, k, _polygon(s, polygon))

    poly = _POLY.match(text)
    if poly:
        polygon_id = _polygon(s, poly.group(1))
        position = PlanarPoint(_value(s, poly.group(2)), _value(s, poly.group(3)))
        try:
            return canonicalize(s, polygon_id, position)
        except PointOutsideError as e:
            raise DomainInputError(f"point '{text}' is not in polygon {polygon_id}", cause=e) from e

    raise DomainInputError(
        f"unrecognised point '{text}'; expected center, cone:<k>, midpoint:<k>, "
        "vertex:<k> or poly:<id>;x=<value>;y=<value>"
    )


_VECTOR = re.compile(r"^(\[[^\]]*\]|[^,\[\]]+),(\[[^\]]*\]|[^,\[\]]+)$")


def parse_vector(s: SurfaceDef, text: str) -> PlanarPoint:
    """Exact vector from "x,y", each coordinate a rational or coefficient vector.

    Raises:
        DomainInputError: For malformed text or the zero vector.
    """
    match = _VECTOR.match(text.replace(" ", ""))
    if not match:
        raise DomainInputError(f"expected a vector 'x,y', got '{text}'")
    v = PlanarPoint(_value(s, match.group(1)), _value(s, match.group(2)))
    if v.is_zero():
        raise DomainInputError("direction vector must be nonzero")
    return v
