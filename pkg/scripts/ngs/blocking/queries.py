"""Finite-blocking verdicts for pairs of points on the surface.

A pair (p, q) is finitely blocked when a finite set of points, avoiding p
and q, meets the interior of every singularity-free segment from p to q.
On these surfaces that happens exactly when p is not a cone point and q is
the image of p under the hyperelliptic involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from scripts.ngs.surface.marked import (
    SurfacePoint,
    canonicalize,
    hyperelliptic_image,
    is_cone_point,
    sort_points,
    weierstrass_points,
)
from scripts.ngs.surface.model import SurfaceDef


class BlockingVerdict(str, Enum):
    BLOCKED = "blocked"
    NOT_BLOCKED = "not-blocked"


@dataclass(frozen=True)
class BlockingQuery:
    """Verdict for one pair of points.

    Attributes:
        p: First point, canonical.
        q: Second point, canonical.
        verdict: blocked or not-blocked.
        blocking_set: Weierstrass and cone points other than p and q, when blocked.
        reason: Short explanation of the verdict.
    """

    p: SurfacePoint
    q: SurfacePoint
    verdict: BlockingVerdict
    blocking_set: tuple[SurfacePoint, ...] = ()
    reason: str = ""

    @property
    def is_blocked(self) -> bool:
        return self.verdict is BlockingVerdict.BLOCKED


def blocking_set(s: SurfaceDef, p: SurfacePoint, q: SurfacePoint) -> tuple[SurfacePoint, ...]:
    """Weierstrass points and cone points of s, minus p and q."""
    excluded = {p, q}
    return tuple(sort_points(set(weierstrass_points(s).marked) - excluded))


def is_blocked(s: SurfaceDef, p: SurfacePoint, q: SurfacePoint) -> BlockingQuery:
    """Decide whether p and q are finitely blocked on s.

    Args:
        s: The surface.
        p: First point; need not be canonical.
        q: Second point; may equal p.

    Returns:
        The verdict, with the blocking set when blocked.
    """
    p = canonicalize(s, p.polygon_id, p.position)
    q = canonicalize(s, q.polygon_id, q.position)
    if is_cone_point(s, p) or is_cone_point(s, q):
        return BlockingQuery(
            p, q, BlockingVerdict.NOT_BLOCKED, reason="a cone point is never finitely blocked"
        )
    if hyperelliptic_image(s, p) != q:
        return BlockingQuery(
            p,
            q,
            BlockingVerdict.NOT_BLOCKED,
            reason="q is not the hyperelliptic image of p",
        )
    return BlockingQuery(
        p,
        q,
        BlockingVerdict.BLOCKED,
        blocking_set=blocking_set(s, p, q),
        reason="q is the hyperelliptic image of p",
    )
