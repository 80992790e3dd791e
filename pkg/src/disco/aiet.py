"""Affine interval exchange transformations over exact rationals.

An :class:`Aiet` is an injective map of a half-open interval ``[lo, hi)``,
affine with positive slope on each of finitely many half-open branches.
The module also builds the map ``F`` with ``F o F = id``, its rotated
family ``F_t = F o r_t``, and the two-interval contractions ``I(m, n)``
studied by the induction in :mod:`disco.rauzy`.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .exactnum import as_rational, format_rational, parse_rational


@dataclass(frozen=True)
class Branch:
    lo: Fraction
    hi: Fraction
    slope: Fraction
    intercept: Fraction
    return_time: int = 1

    def __post_init__(self):
        for name in ("lo", "hi", "slope", "intercept"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    def __call__(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def image(self) -> tuple[Fraction, Fraction]:
        return self(self.lo), self(self.hi)

    def same_map(self, other: Branch) -> bool:
        return (self.slope, self.intercept, self.return_time) == (
            other.slope, other.intercept, other.return_time)


def _merge(branches: Sequence[Branch]) -> tuple[Branch, ...]:
    out: list[Branch] = []
    for br in branches:
        if br.lo == br.hi:
            continue
        if out and out[-1].hi == br.lo and out[-1].same_map(br):
            out[-1] = replace(out[-1], hi=br.hi)
        else:
            out.append(br)
    return tuple(out)


@dataclass(frozen=True)
class Aiet:
    branches: tuple[Branch, ...]

    def __post_init__(self):
        brs = tuple(self.branches)
        object.__setattr__(self, "branches", brs)
        if not brs:
            raise ValueError("an AIET needs at least one branch")
        for left, right in zip(brs, brs[1:]):
            if left.hi != right.lo:
                raise ValueError("branch domains must tile the domain")
        for br in brs:
            if br.lo >= br.hi:
                raise ValueError("empty branch")
            if br.slope <= 0:
                raise ValueError("slopes must be positive")
        images = sorted(br.image() for br in brs)
        for (_, h1), (l2, _) in zip(images, images[1:]):
            if h1 > l2:
                raise ValueError("branch images overlap: map is not injective")
        object.__setattr__(self, "_cuts", [br.lo for br in brs[1:]])

    @property
    def lo(self) -> Fraction:
        return self.branches[0].lo

    @property
    def hi(self) -> Fraction:
        return self.branches[-1].hi

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __len__(self):
        return len(self.branches)

    def breakpoints(self) -> list[Fraction]:
        """Interior discontinuities of the branch structure."""
        return list(self._cuts)

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x < self.hi

    def branch_index(self, x: Fraction) -> int:
        if not self.contains(x):
            raise ValueError(f"{x} is outside [{self.lo}, {self.hi})")
        return bisect.bisect_right(self._cuts, x)

    def eval(self, x) -> tuple[Fraction, int]:
        """Image of ``x`` and the index of the branch used."""
        x = as_rational(x)
        i = self.branch_index(x)
        return self.branches[i](x), i

    def __call__(self, x) -> Fraction:
        return self.eval(x)[0]

    def images(self) -> list[tuple[Fraction, Fraction]]:
        return sorted(br.image() for br in self.branches)

    def image_length(self) -> Fraction:
        return sum((br.slope * br.length for br in self.branches), Fraction(0))

    def is_bijective(self) -> bool:
        imgs = self.images()
        if imgs[0][0] != self.lo or imgs[-1][1] != self.hi:
            return False
        return all(h == l for (_, h), (l, _) in zip(imgs, imgs[1:]))

    def inverse(self) -> Aiet:
        if not self.is_bijective():
            raise ValueError("only bijective AIETs have an inverse")
        inv = [Branch(lo, hi, 1 / br.slope, -br.intercept / br.slope, br.return_time)
               for br in self.branches for lo, hi in [br.image()]]
        return Aiet(tuple(sorted(inv, key=lambda b: b.lo)))

    def compose(self, inner: Aiet) -> Aiet:
        """The AIET ``self o inner``; ``inner`` must map into our domain.

        The result is a new map in its own right, so return times reset to 1.
        """
        pieces: list[Branch] = []
        for g in inner.branches:
            ilo, ihi = g.image()
            if ilo < self.lo or ihi > self.hi:
                raise ValueError("inner map leaves the outer domain")
            cuts = [c for c in self._cuts if ilo < c < ihi]
            xs = [g.lo] + [(c - g.intercept) / g.slope for c in cuts] + [g.hi]
            for x0, x1 in zip(xs, xs[1:]):
                f = self.branches[self.branch_index(g(x0))]
                pieces.append(Branch(x0, x1, f.slope * g.slope,
                                     f.slope * g.intercept + f.intercept))
        return Aiet(_merge(pieces))

    def to_table(self) -> str:
        f = format_rational
        return "\n".join(f"{f(b.lo)} {f(b.hi)} {f(b.slope)} {f(b.intercept)}"
                         for b in self.branches) + "\n"

    @classmethod
    def from_table(cls, text: str) -> Aiet:
        brs = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            lo, hi, slope, icpt = (parse_rational(tok) for tok in line.split())
            brs.append(Branch(lo, hi, slope, icpt))
        return cls(tuple(brs))

    def to_float_arrays(self):
        """Breakpoints, slopes and intercepts as float lists (for sweeps)."""
        return ([float(c) for c in self._cuts],
                [float(b.slope) for b in self.branches],
                [float(b.intercept) for b in self.branches])


def _normalise(branches) -> Aiet:
    return Aiet(_merge([Branch(*b) for b in branches]))


_SIXTH = Fraction(1, 6)
_HALF = Fraction(1, 2)


def base_map() -> Aiet:
    """The four-branch involution F of [0, 1)."""
    return Aiet((
        Branch(0, _SIXTH, 2, _SIXTH),
        Branch(_SIXTH, _HALF, _HALF, -_SIXTH / 2),
        Branch(_HALF, 5 * _SIXTH, _HALF, -_HALF / 2 + 5 * _SIXTH),
        Branch(5 * _SIXTH, 1, 2, -2 * 5 * _SIXTH + _HALF),
    ))


def rotation(t) -> Aiet:
    """Translation by ``t`` modulo 1 on [0, 1)."""
    t = as_rational(t) % 1
    if t == 0:
        return Aiet((Branch(0, 1, 1, 0),))
    return Aiet((Branch(0, 1 - t, 1, t), Branch(1 - t, 1, 1, t - 1)))


def family_member(t) -> Aiet:
    """``F_t = F o r_t`` with ``t`` read modulo 1."""
    return base_map().compose(rotation(t))


def two_interval_map(m: int, n: int, lambda_a, lambda_b, origin=0) -> Aiet:
    """The element of ``I(m, n)`` with top lengths ``(lambda_a, lambda_b)``.

    The left interval A is contracted by ``2**-n`` onto the right end of the
    domain, the right interval B by ``2**-m`` onto its left end.
    """
    la, lb, x0 = as_rational(lambda_a), as_rational(lambda_b), as_rational(origin)
    if la <= 0 or lb <= 0:
        raise ValueError("both lengths must be positive")
    end = x0 + la + lb
    ka, kb = Fraction(1, 2 ** n), Fraction(1, 2 ** m)
    split = x0 + la
    return Aiet((
        Branch(x0, split, ka, end - ka * split),
        Branch(split, end, kb, x0 - kb * split),
    ))


class OrbitRecord(NamedTuple):
    points: list
    branches: list[int]
    derivative_product: Fraction


def orbit(a: Aiet, x, steps: int) -> OrbitRecord:
    x = as_rational(x)
    pts, idx, deriv = [x], [], Fraction(1)
    for _ in range(steps):
        x, i = a.eval(x)
        deriv *= a.branches[i].slope
        pts.append(x)
        idx.append(i)
    return OrbitRecord(pts, idx, deriv)


class FirstReturnCapExceeded(RuntimeError):
    """Some piece of the subinterval did not come back within the cap."""


def first_return(a: Aiet, lo, hi, cap: int = 10_000) -> Aiet:
    """First-return map of ``a`` on ``[lo, hi)``.

    Each branch of the result carries its return time.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if not (a.lo <= lo < hi <= a.hi):
        raise ValueError("subinterval must be a nonempty part of the domain")
    done: list[Branch] = []
    # pending pieces: (x0, x1, slope, intercept, time) for the composite map
    pending = [(lo, hi, Fraction(1), Fraction(0), 0)]
    for _ in range(cap):
        if not pending:
            break
        nxt = []
        for x0, x1, s, c, k in pending:
            y0, y1 = s * x0 + c, s * x1 + c
            cuts = [p for p in a.breakpoints() if y0 < p < y1]
            ys = [y0] + cuts + [y1]
            for u0, u1 in zip(ys, ys[1:]):
                br = a.branches[a.branch_index(u0)]
                v0, v1 = br(u0), br(u1)
                s2, c2 = br.slope * s, br.slope * c + br.intercept
                # split where the image crosses the ends of [lo, hi)
                marks = [m for m in (lo, hi) if v0 < m < v1]
                vs = [v0] + marks + [v1]
                for w0, w1 in zip(vs, vs[1:]):
                    z0, z1 = (w0 - c2) / s2, (w1 - c2) / s2
                    if lo <= w0 and w1 <= hi:
                        done.append(Branch(z0, z1, s2, c2, k + 1))
                    else:
                        nxt.append((z0, z1, s2, c2, k + 1))
        pending = nxt
    if pending:
        raise FirstReturnCapExceeded(
            f"{len(pending)} pieces still away after {cap} iterations")
    return Aiet(_merge(sorted(done, key=lambda b: b.lo)))


class PeriodicOrbit(NamedTuple):
    period: int
    multiplier: Fraction
    point: Fraction
    itinerary: tuple[int, ...]


def _min_period(seq: Sequence[int]) -> int:
    # prefix-function period of the whole sequence
    pi = [0] * len(seq)
    for i in range(1, len(seq)):
        k = pi[i - 1]
        while k and seq[i] != seq[k]:
            k = pi[k - 1]
        if seq[i] == seq[k]:
            k += 1
        pi[i] = k
    return len(seq) - pi[-1]


def _check_cycle(a: Aiet, x: Fraction, itinerary: Sequence[int]) -> bool:
    y = x
    for i in itinerary:
        y, j = a.eval(y)
        if j != i:
            return False
    return y == x


def detect_periodic(a: Aiet, x, max_iter: int = 10_000) -> Optional[PeriodicOrbit]:
    """Find the periodic orbit that the orbit of ``x`` falls onto.

    The branch itinerary is recorded exactly.  At checkpoints the recent
    itinerary is tested for a repeating block; the affine maps along one
    block are composed and the fixed point of the composition is verified
    to be a genuine periodic point with that itinerary.  Returns ``None``
    when nothing is confirmed within ``max_iter`` steps, which happens for
    orbits accumulating on a Cantor set or on a saddle connection.
    """
    x = as_rational(x)
    itinerary: list[int] = []
    anchor, anchor_at = x, 0
    checkpoint = 16
    for k in range(1, max_iter + 1):
        x, i = a.eval(x)
        itinerary.append(i)
        if x == anchor:
            # first return to the anchor, so this is the whole minimal cycle
            return _orbit_result(a, x, tuple(itinerary[anchor_at:]))
        if k == checkpoint:
            found = _try_block(a, itinerary[k // 2:])
            if found is not None:
                return found
            anchor, anchor_at = x, k
            checkpoint *= 2
    return None


def _try_block(a: Aiet, window: Sequence[int]) -> Optional[PeriodicOrbit]:
    p = _min_period(window)
    if 2 * p > len(window):
        return None
    block = tuple(window[-p:])
    slope, icpt = Fraction(1), Fraction(0)
    for i in block:
        br = a.branches[i]
        slope, icpt = br.slope * slope, br.slope * icpt + br.intercept
    if slope == 1:
        return None  # neutral cycles are caught by the exact-repeat test
    fixed = icpt / (1 - slope)
    if not a.contains(fixed) or not _check_cycle(a, fixed, block):
        return None
    return _orbit_result(a, fixed, block)


def _orbit_result(a: Aiet, x: Fraction, block: tuple[int, ...]) -> PeriodicOrbit:
    mult = Fraction(1)
    for i in block:
        mult *= a.branches[i].slope
    return PeriodicOrbit(len(block), mult, x, block)


def omega_limit_estimate(a: Aiet, x0: float, burn_in: int, samples: int) -> list[float]:
    """Double-precision orbit of ``x0``: drop ``burn_in`` points, keep
    ``samples`` more, sorted."""
    cuts, slopes, icpts = a.to_float_arrays()
    lo, hi = float(a.lo), float(a.hi)
    x = float(x0)
    bis = bisect.bisect_right
    out = []
    for k in range(burn_in + samples):
        i = bis(cuts, x)
        x = slopes[i] * x + icpts[i]
        # rounding can push an image a hair outside the domain
        if x < lo:
            x = lo
        elif x >= hi:
            x = hi - 1e-16
        if k >= burn_in:
            out.append(x)
    out.sort()
    return out


def distinct_values(points: Sequence[float], resolution: float = 1e-6) -> int:
    """Number of resolution-sized bins hit by ``points``."""
    return len({round(p / resolution) for p in points})
