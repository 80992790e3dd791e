"""Suspension model of the surface, used as a geometric oracle.

The surface is the rectangle ``[0, 1) x [0, h)`` with ``h = 1/6``: the
left and right sides are glued by translation and a point ``(x, h)`` on the
top is glued to ``(F(x), 0)`` on the bottom.  Directions are slopes
``dx/dy`` of the flow, so ``0`` is the vertical flow and ``inf`` the
horizontal one.  A line of slope ``p`` drifts by ``h * p`` per crossing,
which makes the first return to the bottom edge ``F o r_t`` with
``t = p / 6``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .aiet import Aiet, Branch, base_map, detect_periodic, first_return, rotation
from .exactnum import INF, ProjPoint, as_proj, as_rational

HEIGHT = Fraction(1, 6)
PRONGS = (Fraction(0), Fraction(1, 6), Fraction(1, 2), Fraction(5, 6))
STABLE_SHIFT = Fraction(1, 6)
STABLE_WIDTH = Fraction(1, 3)


@dataclass(frozen=True)
class SuspensionSurface:
    height: Fraction = HEIGHT
    gluing: Aiet = field(default_factory=base_map)

    def drift(self, slope: ProjPoint) -> Fraction:
        slope = as_proj(slope)
        if slope is INF:
            raise ValueError("the horizontal flow never reaches the top edge")
        return (self.height * slope) % 1

    def first_return_direction(self, slope) -> Aiet:
        """Bottom edge to bottom edge along lines of the given slope.

        Built from the picture rather than by composing maps: each top
        segment of the gluing is pulled back along the drift to the
        bottom, splitting it where the pulled back segment wraps around.
        """
        delta = self.drift(slope)
        pieces = []
        for br in self.gluing.branches:
            # bottom points x land on the top at x + delta (mod 1)
            for a, b, shift in ((br.lo - delta, br.hi - delta, delta),
                                (br.lo - delta + 1, br.hi - delta + 1, delta - 1)):
                lo, hi = max(a, Fraction(0)), min(b, Fraction(1))
                if lo < hi:
                    pieces.append(Branch(lo, hi, br.slope, br.slope * shift + br.intercept))
        pieces.sort(key=lambda p: p.lo)
        merged: list[Branch] = []
        for p in pieces:
            if merged and merged[-1].hi == p.lo and merged[-1].same_map(p):
                q = merged.pop()
                p = Branch(q.lo, p.hi, q.slope, q.intercept)
            merged.append(p)
        return Aiet(tuple(merged))

    def top_hit_is_singular(self, x: Fraction, slope) -> bool:
        return (x + self.drift(slope)) % 1 in PRONGS


SURFACE = SuspensionSurface()


def first_return_direction(slope) -> Aiet:
    return SURFACE.first_return_direction(slope)


class FlowCrossing(NamedTuple):
    step: int
    position: Fraction
    level: int
    branch: Optional[int]
    derivative: Fraction


class LeafTrace(NamedTuple):
    crossings: list[FlowCrossing]
    singular_crossing: Optional[int]
    closes_at: Optional[int]


def trace_leaf(x0, slope, crossings: int, surface: SuspensionSurface = SURFACE) -> LeafTrace:
    """Follow the leaf through ``(x0, 0)`` for up to ``crossings`` passes
    through the top edge.

    Row 0 is the starting point.  The trace stops early when the leaf runs
    into a cone point, recording the index of the crossing that would have
    hit it; ``closes_at`` is the first crossing that comes back to ``x0``.
    """
    x0 = as_rational(x0)
    if not 0 <= x0 < 1:
        raise ValueError("x0 must lie in [0, 1)")
    T = surface.first_return_direction(slope)
    rows = [FlowCrossing(0, x0, 0, None, Fraction(1))]
    x, deriv = x0, Fraction(1)
    singular = closes = None
    for k in range(1, crossings + 1):
        if surface.top_hit_is_singular(x, slope):
            singular = k
            break
        x, i = T.eval(x)
        deriv *= T.branches[i].slope
        rows.append(FlowCrossing(k, x, k, i, deriv))
        if closes is None and x == x0:
            closes = k
            break
    return LeafTrace(rows, singular, closes)


def leaf_csv(trace: LeafTrace) -> str:
    lines = ["step,x_num,x_den,level,deriv_num,deriv_den"]
    for c in trace.crossings:
        lines.append(f"{c.step},{c.position.numerator},{c.position.denominator},"
                     f"{c.level},{c.derivative.numerator},{c.derivative.denominator}")
    return "\n".join(lines) + "\n"


def _canonical_cycle(itinerary) -> tuple[int, ...]:
    it = tuple(itinerary)
    return min(it[i:] + it[:i] for i in range(len(it)))


def find_cylinders(slope, sample_count: int = 64, max_iter: int = 1 << 11
                   ) -> list[tuple[Fraction, Fraction]]:
    """Cylinders in a direction, as ``(multiplier, representative point)``.

    Closed leaves are found by exact periodicity of the first-return map
    (attracting ones) and of its inverse (repelling ones) from a grid of
    starting points.  Cycles through a cone point are saddle connections
    and are dropped.  Leaves with the same holonomy and the same cyclic
    itinerary belong to one cylinder.
    """
    slope = as_proj(slope)
    if slope is INF:
        # every horizontal circle closes up after one turn
        return [(Fraction(1), HEIGHT / 2)]
    T = first_return_direction(slope)
    T_inv = T.inverse()
    found: dict[tuple, tuple[Fraction, Fraction]] = {}
    for i in range(sample_count):
        x = Fraction(3 * i + 1, 3 * sample_count)
        for a, forward in ((T, True), (T_inv, False)):
            orb = detect_periodic(a, x, max_iter)
            if orb is None:
                continue
            pts = [orb.point]
            for _ in range(orb.period - 1):
                pts.append(a(pts[-1]))
            # a cycle through a cone point is a saddle connection loop
            if any(p in PRONGS or SURFACE.top_hit_is_singular(p, slope) for p in pts):
                continue
            if forward:
                key_it = orb.itinerary
                mult = orb.multiplier
            else:
                # translate the inverse itinerary into branches of T
                key_it = tuple(T.branch_index(p) for p in reversed(pts))
                mult = 1 / orb.multiplier
            key = (mult, _canonical_cycle(key_it))
            if key not in found:
                found[key] = (mult, orb.point)
    return sorted(found.values())


# --- topology of the model --------------------------------------------------

def _vertex_classes() -> list[list[tuple[Fraction, Fraction, Fraction]]]:
    """Corners of the polygon grouped by the gluings, with interior angles
    in units of pi."""
    h = HEIGHT
    marks = list(PRONGS) + [Fraction(1)]
    verts = {}
    for x in marks:
        ang = Fraction(1, 2) if x in (0, 1) else Fraction(1)
        verts[(x, h)] = ang
        verts[(x, Fraction(0))] = ang
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(u, v):
        parent[find(u)] = find(v)

    union((Fraction(0), h), (Fraction(1), h))
    union((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))
    for br in base_map().branches:
        union((br.lo, h), (br(br.lo), Fraction(0)))
        union((br.hi, h), (br(br.hi), Fraction(0)))
    classes: dict = {}
    for v, ang in verts.items():
        classes.setdefault(find(v), []).append((v[0], v[1], ang))
    return list(classes.values())


def vertex_angle_check() -> list[Fraction]:
    """Total cone angle of each vertex class, in units of pi."""
    return sorted(sum(a for _, _, a in cls) for cls in _vertex_classes())


def genus() -> int:
    excess = sum(a / 2 - 1 for a in vertex_angle_check())
    g = 1 + excess / 2
    assert g.denominator == 1
    return int(g)


def cylinder_moduli() -> dict[str, list[Fraction]]:
    """Moduli (circumference over height) of the horizontal and vertical
    cylinders of the model.

    A vertical cylinder is cut into rectangles by the gluings, each crossed
    by the closed leaves once; its modulus is the sum of the height/width
    ratios of those pieces.
    """
    F = base_map()
    vertical, seen = [], set()
    for i, br in enumerate(F.branches):
        if i in seen:
            continue
        cycle, j = [], i
        while j not in cycle:
            cycle.append(j)
            j = F.branch_index(F(F.branches[j].lo))
        seen.update(cycle)
        vertical.append(sum(HEIGHT / F.branches[k].length for k in cycle))
    return {"horizontal": [1 / HEIGHT], "vertical": sorted(vertical)}


# --- the trapped strip --------------------------------------------------------

def stable_section_map(slope) -> Aiet:
    """First return of the direction's map to the arc ``[5/6, 7/6)``.

    The arc is moved to ``[0, 1/3)`` by the coordinate ``u = x + 1/6``.
    For slopes in ``(2, 4)`` the arc is mapped into itself and the result
    is a two-branch map with both slopes 1/2.
    """
    T = first_return_direction(slope)
    R = rotation(STABLE_SHIFT)
    conj = R.compose(T).compose(R.inverse())
    return first_return(conj, 0, STABLE_WIDTH)
