"""Exact scalars, 2x2 rational matrices and points of the projective line.

Scalars are :class:`fractions.Fraction`.  A point of RP^1 is either a
``Fraction`` (the slope ``x/y`` of a nonzero vector ``(x, y)``) or the
singleton :data:`INF` standing for every vector ``(x, 0)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction


class _Infinity:
    """The point ``[1:0]`` of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ProjPoint = Union[Fraction, _Infinity]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: nothing in this package should silently go through
    binary floating point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    if "/" in text:
        num, den = text.split("/", 1)
        if not den.strip():
            raise ValueError(f"bad rational {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_proj(text: str) -> ProjPoint:
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    return parse_rational(text)


def format_proj(p: ProjPoint) -> str:
    return "inf" if p is INF else format_rational(p)


def as_proj(value) -> ProjPoint:
    if value is INF:
        return INF
    if isinstance(value, str):
        return parse_proj(value)
    return as_rational(value)


def proj_from_vector(x, y) -> ProjPoint:
    x, y = Fraction(x), Fraction(y)
    if y == 0:
        if x == 0:
            raise ValueError("the zero vector has no direction")
        return INF
    return x / y


def proj_to_vector(p: ProjPoint) -> tuple[Fraction, Fraction]:
    if p is INF:
        return Fraction(1), Fraction(0)
    return p, Fraction(1)


class MatrixType(enum.Enum):
    IDENTITY = "Identity"
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 matrix ``[[a, b], [c, d]]`` with rational entries."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> Mat2:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Fraction:
        return self.a + self.d

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def inverse(self) -> Mat2:
        det = self.det()
        if det == 0:
            raise ZeroDivisionError("singular matrix")
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def scale(self, k) -> Mat2:
        k = as_rational(k)
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def __neg__(self) -> Mat2:
        return self.scale(-1)

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return mat_mul(self, other)
        return NotImplemented

    def apply_vector(self, x, y) -> tuple[Fraction, Fraction]:
        return self.a * x + self.b * y, self.c * x + self.d * y

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return mat_act(self, p)

    def __str__(self):
        f = format_rational
        return f"[[{f(self.a)}, {f(self.b)}], [{f(self.c)}, {f(self.d)}]]"


def mat_mul(m1: Mat2, m2: Mat2) -> Mat2:
    return Mat2(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def mat_act(m: Mat2, p: ProjPoint) -> ProjPoint:
    """Projective action ``[x:y] -> [ax+by : cx+dy]`` in slope coordinates."""
    if p is INF:
        return INF if m.c == 0 else m.a / m.c
    x, y = m.a * p + m.b, m.c * p + m.d
    if y == 0:
        if x == 0:
            raise ZeroDivisionError("singular matrix killed the point")
        return INF
    return x / y


def classify_matrix(m: Mat2) -> MatrixType:
    """Type of the Mobius map of ``m``, read off ``tr^2`` against ``4 det``.

    Comparing squares keeps the test exact and makes it invariant under
    positive rescaling, so ``m`` does not need determinant one.
    """
    det = m.det()
    if det <= 0:
        raise ValueError(f"classification needs det > 0, got {det}")
    if m.is_scalar():
        return MatrixType.IDENTITY
    disc = m.trace() ** 2 - 4 * det
    if disc < 0:
        return MatrixType.ELLIPTIC
    if disc == 0:
        return MatrixType.PARABOLIC
    return MatrixType.HYPERBOLIC


def fixed_points(m: Mat2) -> list[ProjPoint | float]:
    """Fixed points of ``m`` on RP^1.

    Exact when they are rational (or infinite); otherwise floats for the
    two roots of ``c x^2 + (d - a) x - b = 0``.
    """
    import math

    a, b, c, d = m.a, m.b, m.c, m.d
    if m.is_scalar():
        raise ValueError("scalar matrices fix everything")
    if c == 0:
        pts: list = [INF]
        if a != d:
            pts.append(b / (a - d))
        return pts
    disc = (d - a) ** 2 + 4 * b * c
    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        root = Fraction(rn, rd)
        roots = {(a - d - root) / (2 * c), (a - d + root) / (2 * c)}
        return sorted(roots)
    r = math.sqrt(float(disc))
    return sorted([float((a - d) / (2 * c)) - r / float(2 * c),
                   float((a - d) / (2 * c)) + r / float(2 * c)])
