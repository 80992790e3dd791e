"""The Schottky group generated by the two parabolic twists.

``A = [[1, 6], [0, 1]]`` fixes the slope ``inf`` and ``B = [[1, 0], [3/2, 1]]``
fixes the slope ``0``.  Group words are strings over ``A, a, B, b`` where
the lower-case letter is the inverse generator; a word acts on slopes by
its matrix product, leftmost letter last.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional

import numpy as np

from .exactnum import (INF, Mat2, MatrixType, ProjPoint, as_proj, classify_matrix,
                       format_rational, mat_act)

A = Mat2(1, 6, 0, 1)
B = Mat2(1, 0, Fraction(3, 2), 1)
MINUS_ID = Mat2(-1, 0, 0, -1)

LETTERS = {"A": A, "a": A.inverse(), "B": B, "b": B.inverse()}
INVERSE = {"A": "a", "a": "A", "B": "b", "b": "B"}

# Open ping-pong arcs, oriented by increasing slope (wrapping through inf).
# DOMAINS[X] is where X sends the complement of DOMAINS[INVERSE[X]].
DOMAINS: dict[str, tuple[ProjPoint, ProjPoint]] = {
    "A": (Fraction(3), INF),
    "a": (INF, Fraction(-3)),
    "B": (Fraction(0), Fraction(2)),
    "b": (Fraction(-1), Fraction(0)),
}

FUNDAMENTAL_INTERVAL = (Fraction(1), Fraction(4))
CUSPS = (INF, Fraction(0))
DEFAULT_DEPTH_CAP = 64


def generators() -> tuple[Mat2, Mat2, Mat2]:
    return A, B, MINUS_ID


def free_reduce(letters: str) -> str:
    out: list[str] = []
    for ch in letters:
        if ch not in INVERSE:
            raise ValueError(f"bad group letter {ch!r}")
        if out and out[-1] == INVERSE[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


@dataclass(frozen=True)
class GroupWord:
    """Freely reduced word in the generators."""

    letters: str = ""

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @property
    def matrix(self) -> Mat2:
        M = Mat2.identity()
        for ch in self.letters:
            M = M @ LETTERS[ch]
        return M

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> GroupWord:
        return GroupWord("".join(INVERSE[ch] for ch in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __call__(self, p: ProjPoint) -> ProjPoint:
        for ch in reversed(self.letters):
            p = mat_act(LETTERS[ch], p)
        return p

    def __str__(self):
        return self.letters or "1"

    def pretty(self) -> str:
        if not self.letters:
            return "Id"
        return " ".join(ch if ch.isupper() else ch.upper() + "^-1" for ch in self.letters)


def reduced_words(length: int) -> Iterator[str]:
    """All freely reduced words of exactly the given length."""
    if length == 0:
        yield ""
        return
    for w in reduced_words(length - 1):
        for ch in "AaBb":
            if not w or w[-1] != INVERSE[ch]:
                yield w + ch


def _key(p: ProjPoint):
    return (1, Fraction(0)) if p is INF else (0, p)


def in_arc(p: ProjPoint, arc, closed: bool = True) -> bool:
    """Membership in the arc running from ``arc[0]`` to ``arc[1]`` by
    increasing slope."""
    lo, hi = (_key(q) for q in arc)
    k = _key(p)
    if closed:
        return lo <= k <= hi if lo <= hi else (k >= lo or k <= hi)
    return lo < k < hi if lo <= hi else (k > lo or k < hi)


class ReductionStatus(enum.Enum):
    REDUCED = "Reduced"
    CUSP = "Cusp"
    DEPTH_CAP = "DepthCapReached"


class ReductionResult(NamedTuple):
    status: ReductionStatus
    point: ProjPoint
    word: GroupWord


def reduce_to_fundamental(p, depth_cap: int = DEFAULT_DEPTH_CAP) -> ReductionResult:
    """Move ``p`` into the fundamental interval ``[1, 4)`` by ping-pong.

    While ``p`` sits in the open domain of a generator X the inverse of X is
    applied.  Outside all four domains the point lies in ``[-3, -1]`` or
    ``[2, 3]``; one last A or B lands it in ``[1, 4)``, where the slopes 1
    and 4 are identified by ``A B^-1``.  Hitting the slope 0 or ``inf``
    exactly means a cusp.  ``word(p_in) == point`` always holds.
    """
    p = as_proj(p)
    word = GroupWord()
    lo, hi = FUNDAMENTAL_INTERVAL
    for depth in range(depth_cap + 1):
        if p is INF or p == 0:
            return ReductionResult(ReductionStatus.CUSP, p, word)
        if lo <= p < hi:
            return ReductionResult(ReductionStatus.REDUCED, p, word)
        if depth == depth_cap:
            break
        owner = next((x for x in "AaBb" if in_arc(p, DOMAINS[x], closed=False)), None)
        if owner is not None:
            g = INVERSE[owner]
        else:
            g = "A" if p < -2 else "B"
        p = mat_act(LETTERS[g], p)
        word = GroupWord(g) * word
    return ReductionResult(ReductionStatus.DEPTH_CAP, p, word)


def _angle(p: ProjPoint) -> float:
    return math.pi / 2 if p is INF else math.atan(p)


def arc_length(arc) -> float:
    """Angular length of an arc of RP^1 (the whole circle has length pi)."""
    lo, hi = arc
    if lo is INF:
        start = -math.pi / 2
    else:
        start = _angle(lo)
    d = _angle(hi) - start
    if d < 0:
        d += math.pi
    return d


class LimitArc(NamedTuple):
    word: str
    lo: ProjPoint
    hi: ProjPoint

    @property
    def length(self) -> float:
        return arc_length((self.lo, self.hi))


def limit_set_approx(depth: int) -> list[LimitArc]:
    """The ``4 * 3**(depth-1)`` arcs ``w(D_X)`` with ``len(w X) == depth``.

    Their union contains the limit set and shrinks onto it as depth grows.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    arcs = []
    for w in reduced_words(depth):
        g = GroupWord(w[:-1])
        lo, hi = DOMAINS[w[-1]]
        arcs.append(LimitArc(w, g(lo), g(hi)))
    return arcs


def total_length(arcs) -> float:
    return sum(arc.length for arc in arcs)


def _csv_proj(p: ProjPoint) -> str:
    return "1,0" if p is INF else f"{p.numerator},{p.denominator}"


def limit_set_csv(depths) -> str:
    lines = ["depth,lo_num,lo_den,hi_num,hi_den"]
    for d in depths:
        for arc in limit_set_approx(d):
            lines.append(f"{d},{_csv_proj(arc.lo)},{_csv_proj(arc.hi)}")
    return "\n".join(lines) + "\n"


def arc_contains_float(arc, x: float) -> bool:
    lo, hi = arc
    lo_f = math.inf if lo is INF else float(lo)
    hi_f = math.inf if hi is INF else float(hi)
    if lo is INF:
        return x <= hi_f
    if lo_f <= hi_f:
        return lo_f <= x <= hi_f
    return x >= lo_f or x <= hi_f


# --- quadratic surds, for the twist matrices with irrational entries --------

@dataclass(frozen=True)
class Surd:
    """``rational + coeff * sqrt(radicand)`` with a fixed rational radicand."""

    rational: Fraction
    coeff: Fraction
    radicand: Fraction

    def _lift(self, other):
        if isinstance(other, Surd):
            if other.radicand != self.radicand:
                raise ValueError("mixed radicands")
            return other
        return Surd(Fraction(other), Fraction(0), self.radicand)

    def __add__(self, other):
        o = self._lift(other)
        return Surd(self.rational + o.rational, self.coeff + o.coeff, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.rational, -self.coeff, self.radicand)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        o = self._lift(other)
        r = self.radicand
        return Surd(self.rational * o.rational + self.coeff * o.coeff * r,
                    self.rational * o.coeff + self.coeff * o.rational, r)

    __rmul__ = __mul__

    def sign(self) -> int:
        p, q = self.rational, self.coeff
        sp, sq = (p > 0) - (p < 0), (q > 0) - (q < 0)
        if sq == 0 or self.radicand == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: compare p^2 with q^2 r
        diff = p * p - q * q * self.radicand
        return sp if diff > 0 else (0 if diff == 0 else sq)

    def __float__(self):
        return float(self.rational) + float(self.coeff) * math.sqrt(self.radicand)

    def __str__(self):
        if self.coeff == 0:
            return format_rational(self.rational)
        root = f"sqrt({format_rational(self.radicand)})"
        head = format_rational(self.rational) + " + " if self.rational else ""
        return f"{head}{format_rational(self.coeff)}*{root}"


@dataclass(frozen=True)
class SurdMat2:
    a: Surd
    b: Surd
    c: Surd
    d: Surd

    def trace(self) -> Surd:
        return self.a + self.d

    def det(self) -> Surd:
        return self.a * self.d - self.b * self.c

    def classify(self) -> MatrixType:
        det = self.det()
        if det.sign() <= 0:
            raise ValueError("classification needs det > 0")
        zero = Surd(Fraction(0), Fraction(0), det.radicand)
        if (self.b - zero).sign() == 0 and (self.c - zero).sign() == 0 \
                and (self.a - self.d).sign() == 0:
            return MatrixType.IDENTITY
        disc = (self.trace() * self.trace() - det * 4).sign()
        if disc < 0:
            return MatrixType.ELLIPTIC
        return MatrixType.PARABOLIC if disc == 0 else MatrixType.HYPERBOLIC

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


class ThurstonResult(NamedTuple):
    mu: Fraction | float
    twist_a: SurdMat2
    twist_b: SurdMat2


def _exact_det(rows) -> Fraction:
    M = [[Fraction(x) for x in row] for row in rows]
    n, det = len(M), Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if M[r][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            M[i], M[piv] = M[piv], M[i]
            det = -det
        det *= M[i][i]
        for r in range(i + 1, n):
            f = M[r][i] / M[i][i]
            for c in range(i, n):
                M[r][c] -= f * M[i][c]
    return det


def thurston_mu(intersection_matrix) -> ThurstonResult:
    """Perron eigenvalue of ``N^t N`` and Thurston's two twist matrices.

    ``N^t N`` and ``N N^t`` share their nonzero spectrum, so the smaller
    Gram matrix is used; a 1x1 Gram matrix gives ``mu`` exactly.  Larger
    ones return an exact ``mu`` when the Perron root is an integer and a
    float otherwise.
    """
    N = np.array(intersection_matrix, dtype=object)
    if N.ndim != 2 or N.size == 0:
        raise ValueError("intersection matrix must be a nonempty 2-d array")
    if any(int(x) != x or x < 0 for x in N.flat):
        raise ValueError("intersection numbers are nonnegative integers")
    N = N.astype(np.int64)
    G = N @ N.T if N.shape[0] <= N.shape[1] else N.T @ N
    k = G.shape[0]
    reach = np.linalg.matrix_power(np.eye(k, dtype=np.int64) + (G > 0), max(k - 1, 1))
    if (reach <= 0).any() or (k == 1 and G[0, 0] == 0):
        raise ValueError("N^t N is reducible: the curves do not form a connected union")
    if k == 1:
        mu: Fraction | float = Fraction(int(G[0, 0]))
    else:
        top = float(np.linalg.eigvalsh(G.astype(float)).max())
        guess = Fraction(round(top))
        shifted = [[Fraction(int(G[i, j])) - (guess if i == j else 0) for j in range(k)]
                   for i in range(k)]
        mu = guess if _exact_det(shifted) == 0 else top
    radicand = mu if isinstance(mu, Fraction) else Fraction(mu)
    one = Surd(Fraction(1), Fraction(0), radicand)
    zero = Surd(Fraction(0), Fraction(0), radicand)
    root = Surd(Fraction(0), Fraction(1), radicand)
    return ThurstonResult(mu, SurdMat2(one, root, zero, one), SurdMat2(one, zero, -root, one))


# --- self checks ------------------------------------------------------------

class Check(NamedTuple):
    name: str
    passed: bool
    detail: str


def _twist_modulus(m: Mat2, horizontal: bool) -> Optional[Fraction]:
    if m.a != 1 or m.d != 1:
        return None
    if horizontal and m.c == 0:
        return m.b
    if not horizontal and m.b == 0:
        return m.c
    return None


def veech_checks() -> list[Check]:
    Binv = B.inverse()
    ABi = A @ Binv
    out = []

    def add(name, ok, detail):
        out.append(Check(name, bool(ok), detail))

    mod_a = _twist_modulus(A, horizontal=True)
    add("A is the horizontal twist of modulus 6", mod_a == 6, f"modulus slot {mod_a}")
    mod_b = _twist_modulus(B, horizontal=False)
    add("B is the vertical twist of modulus 3/2", mod_b == Fraction(3, 2),
        f"modulus slot {mod_b}")
    for name, m in (("A", A), ("B", B)):
        kind = classify_matrix(m)
        add(f"{name} is parabolic", kind is MatrixType.PARABOLIC, kind.value)
    kind = classify_matrix(ABi)
    add("A B^-1 is hyperbolic", kind is MatrixType.HYPERBOLIC,
        f"{kind.value}, trace {ABi.trace()}")
    add("A B^-1 = [[-8, 6], [-3/2, 1]]", ABi == Mat2(-8, 6, Fraction(-3, 2), 1), str(ABi))
    add("-Id acts trivially", classify_matrix(MINUS_ID) is MatrixType.IDENTITY,
        classify_matrix(MINUS_ID).value)
    add("A(-3) = 3", mat_act(A, Fraction(-3)) == 3, str(mat_act(A, Fraction(-3))))
    add("B(-1) = 2", mat_act(B, Fraction(-1)) == 2, str(mat_act(B, Fraction(-1))))
    add("A B^-1 (1) = 4", mat_act(ABi, Fraction(1)) == 4, str(mat_act(ABi, Fraction(1))))
    for x in "AB":
        src = DOMAINS[INVERSE[x]]
        # complement of the source arc is the arc from its end back to its start
        img = (mat_act(LETTERS[x], src[1]), mat_act(LETTERS[x], src[0]))
        add(f"{x}(complement of D_{INVERSE[x]}) = D_{x}", img == DOMAINS[x],
            f"{img[0]}..{img[1]}")
    return out


def format_report(checks) -> str:
    return "".join(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}\n"
                   for c in checks)
