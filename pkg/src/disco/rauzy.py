"""Affine Rauzy-Veech induction on the two-interval family ``I(m, n)``.

A state holds the exponents ``(m, n)``, the top lengths ``(lambda_A,
lambda_B)``, the word of moves made so far and the accumulated matrix.
Words are strings over ``"L"`` and ``"R"``.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional

from .aiet import two_interval_map
from .exactnum import Mat2, as_rational, format_rational

DEFAULT_MAX_STEPS = 64


def right_matrix(m: int, n: int) -> Mat2:
    return Mat2(1, -(2 ** n), 0, 2 ** n)


def left_matrix(m: int, n: int) -> Mat2:
    return Mat2(2 ** m, 0, -(2 ** m), 1)


@dataclass(frozen=True)
class InductionState:
    m: int
    n: int
    lambda_a: Fraction
    lambda_b: Fraction
    word: str = ""
    matrix: Mat2 = Mat2.identity()

    def __post_init__(self):
        object.__setattr__(self, "lambda_a", as_rational(self.lambda_a))
        object.__setattr__(self, "lambda_b", as_rational(self.lambda_b))

    @classmethod
    def initial(cls, s) -> InductionState:
        s = as_rational(s)
        return cls(1, 1, s, 1 - s)

    def aiet(self):
        return two_interval_map(self.m, self.n, self.lambda_a, self.lambda_b)


class StepKind(enum.Enum):
    LEFT = "L"
    RIGHT = "R"
    STOP = "stop"
    SADDLE = "saddle"


class Step(NamedTuple):
    kind: StepKind
    state: InductionState


def step(s: InductionState) -> Step:
    """One move of the induction.

    ``RIGHT`` when B sits strictly inside T(A), ``LEFT`` when A sits
    strictly inside T(B), ``SADDLE`` on either equality (the move would
    produce a zero length) and ``STOP`` otherwise.  For ``STOP`` and
    ``SADDLE`` the returned state is ``s`` itself.
    """
    la, lb = s.lambda_a, s.lambda_b
    if la <= 0 or lb <= 0:
        raise ValueError("lengths must be positive")
    right_gap = la - 2 ** s.n * lb   # lambda_A' after a right move
    left_gap = lb - 2 ** s.m * la    # lambda_B' after a left move
    if right_gap == 0 or left_gap == 0:
        return Step(StepKind.SADDLE, s)
    if right_gap > 0:
        R = right_matrix(s.m, s.n)
        return Step(StepKind.RIGHT, InductionState(
            s.m + s.n, s.n, right_gap, 2 ** s.n * lb, s.word + "R", R @ s.matrix))
    if left_gap > 0:
        L = left_matrix(s.m, s.n)
        return Step(StepKind.LEFT, InductionState(
            s.m, s.n + s.m, 2 ** s.m * la, left_gap, s.word + "L", L @ s.matrix))
    return Step(StepKind.STOP, s)


class Outcome(enum.Enum):
    STOPPED = "Stopped"
    SADDLE = "Saddle"
    CAP_EXCEEDED = "CapExceeded"


@dataclass(frozen=True)
class InductionOutcome:
    tag: Outcome
    word: str
    final_m: int
    final_n: int
    multiplier: Optional[Fraction]
    state: InductionState

    @property
    def period(self) -> Optional[int]:
        """Period of the attracting orbit of the I(1,1) map, whose branches
        both have slope 1/2."""
        if self.tag is not Outcome.STOPPED:
            return None
        return self.final_m + self.final_n


def run(s, max_steps: int = DEFAULT_MAX_STEPS) -> InductionOutcome:
    """Run the induction from the ``I(1, 1)`` map with lengths ``(s, 1-s)``.

    At most ``max_steps`` L/R moves are made; if the state is still
    inducing afterwards the outcome is ``CAP_EXCEEDED`` (a Cantor
    candidate, not a proof).
    """
    s = as_rational(s)
    if not 0 < s < 1:
        raise ValueError("s must lie strictly between 0 and 1")
    state = InductionState.initial(s)
    for _ in range(max_steps + 1):
        kind, nxt = step(state)
        if kind is StepKind.STOP:
            return InductionOutcome(Outcome.STOPPED, state.word, state.m, state.n,
                                    Fraction(1, 2 ** (state.m + state.n)), state)
        if kind is StepKind.SADDLE:
            return InductionOutcome(Outcome.SADDLE, state.word, state.m, state.n,
                                    None, state)
        if len(state.word) == max_steps:
            break
        state = nxt
    return InductionOutcome(Outcome.CAP_EXCEEDED, state.word, state.m, state.n,
                            None, state)


def word_matrix(w: str) -> tuple[Mat2, int, int]:
    M, m, n = Mat2.identity(), 1, 1
    for letter in w:
        if letter == "L":
            M, n = left_matrix(m, n) @ M, n + m
        elif letter == "R":
            M, m = right_matrix(m, n) @ M, m + n
        else:
            raise ValueError(f"bad letter {letter!r} in word {w!r}")
    return M, m, n


def interval_of_word(w: str) -> tuple[Fraction, Fraction]:
    """Parameters ``s`` whose induction starts with the moves of ``w``."""
    M, _, _ = word_matrix(w)
    a, b, c, d = M.a, M.b, M.c, M.d
    return -b / (a - b), d / (d - c)


def _window(M: Mat2, m: int, n: int) -> tuple[Fraction, Fraction]:
    # normalised coordinate u in [0, 1] along I(w)
    a, b, c, d = M.a, M.b, M.c, M.d
    det = M.det()
    alpha, beta = det / (d - c), det / (a - b)
    return beta / (2 ** m * alpha + beta), beta / (alpha / 2 ** n + beta)


def stop_window(w: str) -> tuple[Fraction, Fraction]:
    """Closed subinterval ``H(w)`` of ``I(w)`` where induction stops after ``w``."""
    M, m, n = word_matrix(w)
    lo, hi = interval_of_word(w)
    u0, u1 = _window(M, m, n)
    return lo + u0 * (hi - lo), lo + u1 * (hi - lo)


def ratio_bound_check(w: str) -> Fraction:
    M, _, _ = word_matrix(w)
    x = (M.a - M.b) / (M.d - M.c)
    assert Fraction(1, 2) <= x <= 2, f"ratio {x} out of [1/2, 2] for {w!r}"
    return x


def feasible_words(k: int) -> Iterator[str]:
    """Words of length <= k whose interval I(w) has positive length."""
    frontier = [""]
    for _ in range(k + 1):
        nxt = []
        for w in frontier:
            lo, hi = interval_of_word(w)
            if hi <= lo:
                continue
            yield w
            nxt.extend((w + "L", w + "R"))
        frontier = nxt


def coverage_measure(k: int) -> Fraction:
    """Exact length of the union of ``H(w)`` over feasible ``|w| <= k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = Fraction(0)
    for w in feasible_words(k):
        lo, hi = stop_window(w)
        total += hi - lo
    return total


def coverage_lower_bound(k: int) -> Fraction:
    return 1 - Fraction(5, 6) ** k


def coverage_table(kmax: int) -> str:
    lines = ["k,measure_num,measure_den,lower_bound"]
    for k in range(kmax + 1):
        mu = coverage_measure(k)
        lines.append(f"{k},{mu.numerator},{mu.denominator},"
                     f"{format_rational(coverage_lower_bound(k))}")
    return "\n".join(lines) + "\n"


def format_interval(iv: tuple[Fraction, Fraction]) -> str:
    return f"{format_rational(iv[0])}..{format_rational(iv[1])}"


def parse_interval(text: str) -> tuple[Fraction, Fraction]:
    from .exactnum import parse_rational

    lo, hi = text.split("..")
    return parse_rational(lo), parse_rational(hi)


def word_midpoint(w: str) -> Fraction:
    """Midpoint of ``I(w)``: a parameter that follows ``w`` for ``|w|`` moves."""
    lo, hi = interval_of_word(w)
    return (lo + hi) / 2


@dataclass(frozen=True)
class CantorApproximation:
    depth: int
    gap: tuple[Fraction, Fraction]
    intervals: tuple[tuple[Fraction, Fraction], ...]

    @property
    def total_length(self) -> Fraction:
        return sum((hi - lo for lo, hi in self.intervals), Fraction(0))


def _union(ivs):
    out = []
    for lo, hi in sorted(ivs):
        if out and lo <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def _image_pieces(T, lo, hi):
    cuts = [c for c in T.breakpoints() if lo < c < hi]
    xs = [lo] + cuts + [hi]
    pieces = []
    for x0, x1 in zip(xs, xs[1:]):
        br = T.branches[T.branch_index(x0)]
        pieces.append((br(x0), br(x1)))
    return pieces


def cantor_attractor_approx(s, depth: int, check: bool = True) -> CantorApproximation:
    """Remove the gap ``[0,1) - T([0,1))`` and its images ``T^1 .. T^depth``.

    ``T`` is the I(1,1) map with lengths ``(s, 1-s)``.  What survives is a
    finite union of intervals shrinking onto the attractor.  With ``check``
    the parameter must be a Cantor candidate, i.e. still inducing after
    ``depth`` moves.
    """
    s = as_rational(s)
    if check and run(s, depth).tag is not Outcome.CAP_EXCEEDED:
        raise ValueError(f"s = {s} is not a Cantor candidate at depth {depth}")
    T = two_interval_map(1, 1, s, 1 - s)
    gaps = []
    pos = Fraction(0)
    for ilo, ihi in T.images():
        if ilo > pos:
            gaps.append((pos, ilo))
        pos = ihi
    if pos < 1:
        gaps.append((pos, Fraction(1)))
    removed = list(gaps)
    layer = list(gaps)
    for _ in range(depth):
        layer = [piece for lo, hi in layer for piece in _image_pieces(T, lo, hi)]
        removed.extend(layer)
    removed = _union(removed)
    keep, pos = [], Fraction(0)
    for lo, hi in removed:
        if lo > pos:
            keep.append((pos, lo))
        pos = max(pos, hi)
    if pos < 1:
        keep.append((pos, Fraction(1)))
    gap = gaps[0] if len(gaps) == 1 else (gaps[0][0], gaps[-1][1])
    return CantorApproximation(depth, gap, tuple(keep))


def all_words(k: int) -> Iterator[str]:
    for length in range(k + 1):
        for letters in itertools.product("LR", repeat=length):
            yield "".join(letters)
