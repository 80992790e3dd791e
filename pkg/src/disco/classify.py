"""Classification of directional foliations.

A direction is first pushed into the fundamental interval ``[1, 4)`` by
the Schottky group.  There:

* slopes in ``(1, 2)`` cross an affine cylinder and are attracted to its
  core leaf (multiplier 1/2);
* slopes in ``(2, 4)`` leave a strip trapped around ``[5/6, 7/6)`` whose
  return map is a two-interval map with lengths ``(s, 1 - s)`` (after
  rescaling), and Rauzy induction decides;
* the slopes 1 and 2 carry saddle connections.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import rauzy
from .exactnum import INF, ProjPoint, as_proj, as_rational, format_proj, format_rational
from .schottky import DEFAULT_DEPTH_CAP, GroupWord, ReductionStatus, reduce_to_fundamental

CYLINDER_BAND = (Fraction(1), Fraction(2))
STABLE_BAND = (Fraction(2), Fraction(4))
SLOPE_PER_T = 6


class Tag(enum.Enum):
    COMPLETELY_PERIODIC = "CompletelyPeriodic"
    TRIVIAL_ATTRACTOR = "TrivialAttractor"
    SADDLE_CONNECTION = "SaddleConnection"
    CANTOR_ATTRACTOR = "CantorAttractor"
    LIMIT_SET_DIRECTION = "LimitSetDirection"


@dataclass(frozen=True)
class Caps:
    reduce_depth: int = DEFAULT_DEPTH_CAP
    induction_steps: int = rauzy.DEFAULT_MAX_STEPS


@dataclass(frozen=True)
class Classification:
    tag: Tag
    reduction_word: GroupWord
    induction_word: Optional[str] = None
    multiplier: Optional[Fraction] = None
    period: Optional[int] = None
    caps: Caps = field(default_factory=Caps)
    slope: Optional[ProjPoint] = None
    reduced_slope: Optional[ProjPoint] = None
    comment: Optional[str] = None

    def to_dict(self) -> dict:
        d = {
            "tag": self.tag.value,
            "reduction_word": str(self.reduction_word),
            "induction_word": self.induction_word,
            "multiplier": None if self.multiplier is None else format_rational(self.multiplier),
            "period": self.period,
            "caps": {"reduce_depth": self.caps.reduce_depth,
                     "induction_steps": self.caps.induction_steps},
        }
        if self.slope is not None:
            d["slope"] = format_proj(self.slope)
        if self.reduced_slope is not None:
            d["reduced_slope"] = format_proj(self.reduced_slope)
        if self.comment:
            d["comment"] = self.comment
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _inside(q: Fraction, band) -> bool:
    return band[0] < q < band[1]


def slope_of_parameter(t) -> Fraction:
    return SLOPE_PER_T * as_rational(t)


def parameter_of_slope(slope) -> Fraction:
    slope = as_proj(slope)
    if slope is INF:
        raise ValueError("the horizontal direction has no parameter")
    return (slope / SLOPE_PER_T) % 1


def stable_band_parameter(reduced_slope) -> Fraction:
    """Normalised length ``s`` of the left interval of the trapped map.

    In the coordinate ``u = x + 1/6`` the trapped arc is ``[0, 1/3)`` and
    the map is a two-interval map whose left interval has length
    ``2/3 - t``; dividing by ``1/3`` gives ``s = 2 - slope/2``, which runs
    from 1 down to 0 across the band.
    """
    q = as_rational(reduced_slope)
    lo, hi = STABLE_BAND
    if not lo < q < hi:
        raise ValueError(f"slope {q} is outside the stable band ({lo}, {hi})")
    return 2 - q / 2


def classify_direction(slope, caps: Caps = Caps()) -> Classification:
    slope = as_proj(slope)
    red = reduce_to_fundamental(slope, caps.reduce_depth)
    base = dict(reduction_word=red.word, caps=caps, slope=slope, reduced_slope=red.point)
    if red.status is ReductionStatus.CUSP:
        return Classification(Tag.COMPLETELY_PERIODIC, **base)
    if red.status is ReductionStatus.DEPTH_CAP:
        return Classification(Tag.LIMIT_SET_DIRECTION, **base,
                              comment="conjecturally minimal")
    q = red.point
    if _inside(q, CYLINDER_BAND):
        return Classification(Tag.TRIVIAL_ATTRACTOR, multiplier=Fraction(1, 2),
                              period=1, **base)
    if not _inside(q, STABLE_BAND):
        return Classification(Tag.SADDLE_CONNECTION, **base)
    out = rauzy.run(stable_band_parameter(q), caps.induction_steps)
    if out.tag is rauzy.Outcome.STOPPED:
        return Classification(Tag.TRIVIAL_ATTRACTOR, induction_word=out.word,
                              multiplier=out.multiplier, period=out.period, **base)
    if out.tag is rauzy.Outcome.SADDLE:
        return Classification(Tag.SADDLE_CONNECTION, induction_word=out.word, **base)
    return Classification(Tag.CANTOR_ATTRACTOR, induction_word=out.word, **base,
                          comment=f"still inducing after {caps.induction_steps} moves")


def classify_parameter_t(t, caps: Caps = Caps()) -> Classification:
    """Classify ``F_t``; its direction has slope ``6 t``."""
    return classify_direction(slope_of_parameter(t), caps)
