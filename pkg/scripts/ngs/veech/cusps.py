"""Reduction of periodic directions to the cusp directions of the Veech group.

The group has two cusps for n even (horizontal, and the direction at angle
pi/n) and one for n odd (horizontal). The lines at angle j*pi/n are permuted
by the rotations in the group, so a word only has to make a direction
parallel to one of them; a rotation prefix then moves it onto the cusp line.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from scripts.ngs.errors import DomainInputError
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.surface.geometry import PlanarPoint, dot, is_parallel, unit_vector
from scripts.ngs.surface.model import validate_n
from scripts.ngs.veech.matrices import GroupWord, Letter, all_letters, letter_matrix


def cusp_direction(n: int, cusp: int) -> PlanarPoint:
    """Unit vector of a cusp: 0 is horizontal, 1 (n even) is at angle pi/n."""
    validate_n(n)
    cusp_count = 2 if n % 2 == 0 else 1
    if not 0 <= cusp < cusp_count:
        raise DomainInputError(f"cusp {cusp} does not exist for n={n}")
    return unit_vector(n, 2 * cusp)


def cusp_lines(n: int) -> list[PlanarPoint]:
    """Unit vectors at angles j*pi/n for j = 0..n-1."""
    return [unit_vector(n, 2 * j) for j in range(n)]


@dataclass(frozen=True)
class CuspReduction:
    """A word g with g*v parallel to a cusp direction.

    Attributes:
        word: The reducing word.
        cusp: 0 for horizontal, 1 for the pi/n direction (n even only).
        image: g*v, exactly.
    """

    word: GroupWord
    cusp: int
    image: PlanarPoint

    @property
    def scale(self) -> CycElt:
        """The signed factor lambda with image = lambda * cusp_direction(n, cusp)."""
        return dot(self.image, cusp_direction(self.word.n, self.cusp))


def _rotation_prefix(n: int, line: int) -> tuple[tuple[Letter, ...], int]:
    """Letters moving the line at angle line*pi/n onto its cusp line, and the cusp."""
    if n % 2 == 0:
        cusp = line % 2
        steps = min(line // 2, (line - n) // 2, key=abs)
        letter: Letter = ("r2", -1) if steps > 0 else ("r2", 1)
        return (letter,) * abs(steps), cusp
    steps = min(line, line - n, key=abs)
    letter = ("r", -1) if steps > 0 else ("r", 1)
    return (letter,) * abs(steps), 0


def _parallel_line(lines: list[PlanarPoint], v: PlanarPoint) -> int | None:
    for j, line in enumerate(lines):
        if is_parallel(line, v):
            return j
    return None


def reduce_direction(
    n: int,
    v: PlanarPoint,
    *,
    word_bound: int = 14,
    node_budget: int = 20000,
) -> CuspReduction | None:
    """Search for a word taking v to a cusp direction.

    Words are expanded best-first by the Euclidean length of their image of
    v, so directions near a cusp are reached through short parabolic
    powers before long mixed words are tried.

    Args:
        n: Number of sides.
        v: Nonzero direction with conductor-4n coordinates.
        word_bound: Longest word considered, excluding the rotation prefix.
        node_budget: Maximum number of words expanded.

    Returns:
        The reduction, or None when no word within the bounds works.

    Raises:
        DomainInputError: If v is zero or n is unsupported.
    """
    validate_n(n)
    if v.is_zero():
        raise DomainInputError("direction vector must be nonzero")
    conductor = 4 * n
    v = v.promote(conductor)
    lines = cusp_lines(n)
    letters = all_letters(n)

    counter = itertools.count()
    start: tuple[Letter, ...] = ()
    heap: list[tuple[float, int, int, tuple[Letter, ...], PlanarPoint]] = [
        (_norm_shadow(v), 0, next(counter), start, v)
    ]
    seen: set[PlanarPoint] = {v}
    expanded = 0
    while heap and expanded < node_budget:
        _, length, _, word, image = heapq.heappop(heap)
        line = _parallel_line(lines, image)
        if line is not None:
            prefix, cusp = _rotation_prefix(n, line)
            full = GroupWord(n, prefix + word)
            return CuspReduction(word=full, cusp=cusp, image=full.matrix.apply(v))
        expanded += 1
        if length >= word_bound:
            continue
        for letter in letters:
            if word and word[0] == (letter[0], -letter[1]):
                continue
            moved = letter_matrix(n, *letter).apply(image)
            if moved in seen:
                continue
            seen.add(moved)
            heapq.heappush(
                heap, (_norm_shadow(moved), length + 1, next(counter), (letter,) + word, moved)
            )
    return None


def _norm_shadow(v: PlanarPoint) -> float:
    x, y = v.shadow()
    # equal exact norms tie, so the word order decides
    return round(x * x + y * y, 9)
