"""Exact 2x2 matrices over Q(zeta_4n) and words in the Veech-group generators.

n even: generators r2 = r_n^2, s = s_n and t = r_n s_n r_n^-1.
n odd:  generators r = r_n and s = s_n.

Here r_n is rotation by pi/n and s_n is the horizontal parabolic with
translation length 2*cot(pi/n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from scripts.ngs.errors import DomainInputError
from scripts.ngs.exactnum.field import CycElt
from scripts.ngs.exactnum.sines import cos_exact, sin_exact
from scripts.ngs.surface.geometry import PlanarPoint
from scripts.ngs.surface.model import validate_n

Letter = tuple[str, int]


@dataclass(frozen=True)
class Mat2:
    """The matrix [[a, b], [c, d]]."""

    a: CycElt
    b: CycElt
    c: CycElt
    d: CycElt

    @classmethod
    def identity(cls, conductor: int) -> Mat2:
        one = CycElt.from_rational(conductor, 1)
        zero = CycElt.from_rational(conductor, 0)
        return cls(one, zero, zero, one)

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, v: PlanarPoint) -> PlanarPoint:
        return PlanarPoint(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> CycElt:
        return self.a * self.d - self.b * self.c

    def trace(self) -> CycElt:
        return self.a + self.d

    def inverse(self) -> Mat2:
        det = self.det()
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def is_identity(self) -> bool:
        return self.a == 1 and self.d == 1 and self.b.is_zero() and self.c.is_zero()

    def __pow__(self, exponent: int) -> Mat2:
        base = self if exponent >= 0 else self.inverse()
        result = Mat2.identity(self.a.conductor)
        for _ in range(abs(exponent)):
            result = result @ base
        return result

    def shadow(self) -> tuple[float, float, float, float]:
        return float(self.a), float(self.b), float(self.c), float(self.d)

    def __str__(self) -> str:
        a, b, c, d = self.shadow()
        return f"[[{a:.6g}, {b:.6g}], [{c:.6g}, {d:.6g}]]"


@lru_cache(maxsize=None)
def rotation(n: int, k: int) -> Mat2:
    """Rotation by k*pi/n."""
    conductor = 4 * n
    cos = cos_exact(k, n).promote(conductor)
    sin = sin_exact(k, n).promote(conductor)
    return Mat2(cos, -sin, sin, cos)


@lru_cache(maxsize=None)
def translation_length(n: int) -> CycElt:
    """2*cot(pi/n), the shear of s_n."""
    conductor = 4 * n
    return (cos_exact(1, n).promote(conductor) * 2) / sin_exact(1, n).promote(conductor)


@lru_cache(maxsize=None)
def parabolic(n: int) -> Mat2:
    """s_n = [[1, 2*cot(pi/n)], [0, 1]]."""
    conductor = 4 * n
    one = CycElt.from_rational(conductor, 1)
    return Mat2(one, translation_length(n), CycElt.from_rational(conductor, 0), one)


@lru_cache(maxsize=None)
def _generator_table(n: int) -> tuple[tuple[str, Mat2], ...]:
    validate_n(n)
    r = rotation(n, 1)
    s = parabolic(n)
    if n % 2 == 0:
        return (("r2", rotation(n, 2)), ("s", s), ("t", r @ s @ r.inverse()))
    return (("r", r), ("s", s))


def generators(n: int) -> list[tuple[str, Mat2]]:
    """Named generators: r2, s, t for n even; r, s for n odd."""
    return list(_generator_table(n))


def generator_names(n: int) -> tuple[str, ...]:
    return tuple(name for name, _ in _generator_table(n))


@lru_cache(maxsize=None)
def letter_matrix(n: int, name: str, exponent: int) -> Mat2:
    """Matrix of a generator raised to +1 or -1.

    Raises:
        DomainInputError: For an unknown generator name or exponent.
    """
    table = dict(_generator_table(n))
    if name not in table:
        raise DomainInputError(
            f"unknown generator '{name}' for n={n}; expected one of {sorted(table)}"
        )
    if exponent not in (1, -1):
        raise DomainInputError(f"letter exponent must be 1 or -1, got {exponent}")
    return table[name] if exponent == 1 else table[name].inverse()


def all_letters(n: int) -> list[Letter]:
    """Every generator and its inverse, in generator order."""
    return [(name, e) for name in generator_names(n) for e in (1, -1)]


@dataclass(frozen=True)
class GroupWord:
    """A word in the generators; its matrix is the left-to-right product of the letters.

    Acting on points, the rightmost letter is applied first.
    """

    n: int
    letters: tuple[Letter, ...] = ()

    @classmethod
    def identity(cls, n: int) -> GroupWord:
        return cls(n)

    @classmethod
    def of(cls, n: int, *letters: Letter) -> GroupWord:
        for name, exponent in letters:
            letter_matrix(n, name, exponent)
        return cls(n, tuple(letters))

    @classmethod
    def parse(cls, n: int, text: str) -> GroupWord:
        """Parse "s r^-1 t" style words; "id" or "" is the identity."""
        letters: list[Letter] = []
        for token in text.replace("*", " ").split():
            if token == "id":
                continue
            name, _, power = token.partition("^")
            exponent = int(power) if power else 1
            step = 1 if exponent > 0 else -1
            letters.extend([(name, step)] * abs(exponent))
        return cls.of(n, *letters)

    @cached_property
    def matrix(self) -> Mat2:
        result = Mat2.identity(4 * self.n)
        for name, exponent in self.letters:
            result = result @ letter_matrix(self.n, name, exponent)
        return result

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self.n, self.letters + other.letters)

    def inverse(self) -> GroupWord:
        return GroupWord(self.n, tuple((name, -e) for name, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "id"
        return " ".join(name if e == 1 else f"{name}^-1" for name, e in self.letters)
