import random
from fractions import Fraction as Q

import pytest
from hypothesis import given

from conftest import rationals
from disco.aiet import base_map, detect_periodic, family_member, two_interval_map
from disco.exactnum import INF
from disco.schottky import reduce_to_fundamental
from disco.surface import (PRONGS, SuspensionSurface, cylinder_moduli, find_cylinders,
                           first_return_direction, genus, leaf_csv, stable_section_map,
                           trace_leaf, vertex_angle_check)


def shape(a):
    return [(b.lo, b.hi, b.slope, b.intercept) for b in a.branches]


def test_vertical_direction_is_f():
    assert first_return_direction(Q(0)) == base_map()


def test_drift_one_sixth():
    assert first_return_direction(Q(1)) == family_member(Q(1, 6))


def test_horizontal_has_no_return_map():
    with pytest.raises(ValueError):
        first_return_direction(INF)


@given(rationals(-40, 40, 30))
def test_oracle_identity(slope):
    assert shape(first_return_direction(slope)) == shape(family_member(slope / 6))


def test_calibration_for_other_heights():
    # a taller rectangle drifts further per crossing
    tall = SuspensionSurface(height=Q(1, 3))
    assert tall.first_return_direction(Q(1)) == family_member(Q(1, 3))


def test_vertical_leaf_closes():
    tr = trace_leaf(Q(1, 3), Q(0), 10)
    assert tr.closes_at == 2
    assert tr.crossings[-1].derivative == 1
    assert tr.singular_crossing is None
    assert [c.position for c in tr.crossings] == [Q(1, 3), Q(1, 12), Q(1, 3)]


def test_leaf_in_trivial_direction_contracts():
    tr = trace_leaf(Q(1, 7), Q(3, 2), 40)
    assert tr.crossings[-1].derivative < 1
    assert tr.crossings[-1].derivative == Q(1, 2 ** 40)


def test_saddle_direction_leaf_from_prong_hits_prong():
    tr = trace_leaf(Q(1, 2), Q(1), 50)
    assert tr.singular_crossing == 3
    tr = trace_leaf(Q(1, 6), Q(2), 50)
    assert tr.singular_crossing == 1


def test_leaf_csv():
    text = leaf_csv(trace_leaf(Q(1, 3), Q(0), 5))
    assert text.splitlines() == ["step,x_num,x_den,level,deriv_num,deriv_den",
                                 "0,1,3,0,1,1", "1,1,12,1,1,2", "2,1,3,2,1,1"]


def test_cone_angles_and_genus():
    angles = vertex_angle_check()
    assert angles == [4, 4]  # units of pi
    assert sum(a - 2 for a in angles) == 2 * (2 * genus() - 2)
    assert genus() == 2


def test_cylinder_moduli():
    mods = cylinder_moduli()
    assert mods["horizontal"] == [6]
    assert mods["vertical"] == [Q(3, 2), Q(3, 2)]


def test_find_cylinders_examples():
    vert = find_cylinders(Q(0), 32)
    assert len(vert) == 2 and all(m == 1 for m, _ in vert)
    assert find_cylinders(INF) == [(1, Q(1, 12))]
    # images of the horizontal direction are single cylinders too
    for slope in (Q(2, 3), Q(1, 12), Q(37, 6)):
        assert len(find_cylinders(slope, 16)) == 1


def test_cylinder_bound_in_sampled_directions():
    rng = random.Random(11)
    for _ in range(12):
        slope = Q(rng.randint(-60, 60), rng.randint(1, 9))
        cyls = find_cylinders(slope, 12)
        assert len(cyls) <= 3
        for mult, _ in cyls:
            k = mult.numerator if mult >= 1 else mult.denominator
            assert k & (k - 1) == 0  # a power of two


def test_cylinder_band_multiplier():
    for slope in (Q(5, 4), Q(3, 2), Q(7, 4)):
        mults = {m for m, _ in find_cylinders(slope, 16) if m < 1}
        assert mults == {Q(1, 2)}
    # the same after moving the direction by the group
    r = reduce_to_fundamental(Q(-9, 2))
    assert 1 < r.point < 2
    assert {m for m, _ in find_cylinders(Q(-9, 2), 16) if m < 1} == {Q(1, 2)}


def test_stable_section_map_is_a_two_interval_map():
    for q in (Q(5, 2), Q(3), Q(11, 3), Q(7, 2)):
        t = q / 6
        la = Q(2, 3) - t
        want = two_interval_map(1, 1, la, Q(1, 3) - la)
        assert shape(stable_section_map(q)) == shape(want)


def test_stable_strip_is_trapped():
    T = family_member(Q(1, 2))
    for k in range(30):
        x = (Q(5, 6) + Q(k, 90)) % 1
        y = T(x)
        assert y >= Q(5, 6) or y < Q(1, 6)


def test_prongs_are_the_breakpoints_of_f():
    assert set(base_map().breakpoints()) | {0} == set(PRONGS)
