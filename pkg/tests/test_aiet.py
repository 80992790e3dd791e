from fractions import Fraction as Q

import pytest
from hypothesis import given

from conftest import unit_rationals
from disco.aiet import (Aiet, Branch, FirstReturnCapExceeded, base_map, detect_periodic,
                        distinct_values, family_member, first_return, omega_limit_estimate,
                        orbit, rotation, two_interval_map)
from disco.rauzy import InductionState, StepKind, step

F = base_map()


def shape(a):
    return [(b.lo, b.hi, b.slope, b.intercept) for b in a.branches]


def test_base_map_values():
    assert F(Q(0)) == Q(1, 6)
    assert F(Q(1, 2)) == Q(5, 6)
    assert F(F(Q(1, 3))) == Q(1, 3)
    assert F.eval(Q(5, 6)) == (Q(1, 2), 3)
    assert F.eval(Q(1, 6)) == (0, 1)
    assert F.breakpoints() == [Q(1, 6), Q(1, 2), Q(5, 6)]
    assert F.is_bijective()


def test_family_members():
    assert family_member(0) == F
    assert family_member(Q(1, 6))(Q(0)) == 0
    assert family_member(Q(1, 2))(Q(1, 2)) == Q(1, 6)
    assert family_member(Q(7, 6)) == family_member(Q(1, 6))
    assert rotation(Q(1, 4))(Q(7, 8)) == Q(1, 8)


@given(unit_rationals())
def test_f_is_an_involution(x):
    assert F(F(x)) == x


@given(unit_rationals(), unit_rationals())
def test_eval_at_t0_is_f(t, x):
    assert family_member(0)(x) == F(x)
    Ft = family_member(t)
    assert Ft(x) == F((x + t) % 1)
    assert Ft.is_bijective()
    assert shape(Ft.compose(Ft.inverse())) == [(0, 1, 1, 0)]


def test_validation():
    with pytest.raises(ValueError):
        Aiet((Branch(0, Q(1, 2), 1, 0), Branch(Q(1, 3), 1, 1, 0)))  # overlap
    with pytest.raises(ValueError):
        Aiet((Branch(0, Q(1, 3), 1, 0), Branch(Q(1, 2), 1, 1, 0)))  # gap
    with pytest.raises(ValueError):
        Aiet((Branch(0, 1, -1, 1),))
    with pytest.raises(ValueError):
        Aiet((Branch(0, Q(1, 2), 1, 0), Branch(Q(1, 2), 1, 1, Q(-1, 4))))  # images overlap
    with pytest.raises(ValueError):
        F(Q(1))


def test_table_round_trip():
    Ft = family_member(Q(2, 7))
    assert Aiet.from_table(Ft.to_table()) == Ft
    assert F.to_table().splitlines()[0] == "0 1/6 2 1/6"


def test_orbit_derivative():
    rec = orbit(F, Q(1, 3), 2)
    assert rec.points == [Q(1, 3), Q(1, 12), Q(1, 3)]
    assert rec.derivative_product == 1


def test_first_return_whole_domain_is_identity_operation():
    assert shape(first_return(F, 0, 1)) == shape(F)


def test_first_return_on_invariant_half():
    # F maps [0, 1/2) onto itself, so nothing needs a second step
    R = first_return(F, 0, Q(1, 2))
    assert shape(R) == shape(F)[:2]
    assert {b.return_time for b in R.branches} == {1}


def test_first_return_with_return_time_two():
    R = first_return(F, 0, Q(1, 6))
    assert shape(R) == [(0, Q(1, 6), 1, 0)]
    assert R.branches[0].return_time == 2


def test_first_return_cap():
    with pytest.raises(FirstReturnCapExceeded):
        first_return(family_member(Q(1, 3)), Q(3, 4), Q(4, 5), cap=3)


@given(unit_rationals(1000))
def test_first_return_matches_induction_step(s):
    T = two_interval_map(1, 1, s, 1 - s)
    kind, nxt = step(InductionState.initial(s))
    if kind is StepKind.RIGHT:
        assert shape(first_return(T, 0, s)) == shape(nxt.aiet())
    elif kind is StepKind.LEFT:
        got = first_return(T, s, 1)
        want = two_interval_map(nxt.m, nxt.n, nxt.lambda_a, nxt.lambda_b, origin=s)
        assert shape(got) == shape(want)


def test_detect_periodic_examples():
    orb = detect_periodic(F, Q(1, 3))
    assert (orb.period, orb.multiplier) == (2, 1)
    orb = detect_periodic(two_interval_map(1, 1, Q(1, 2), Q(1, 2)), Q(1, 10))
    assert orb.multiplier == Q(1, 4) and orb.period == 2
    T = two_interval_map(1, 1, Q(1, 5), Q(4, 5))
    assert detect_periodic(T, Q(1, 3)).multiplier == Q(1, 8)


def test_detected_cycles_are_genuine():
    T = family_member(Q(1, 9))
    for k in range(1, 20):
        orb = detect_periodic(T, Q(k, 20), 2048)
        if orb is None:
            continue
        x = orb.point
        for i in orb.itinerary:
            x, j = T.eval(x)
            assert j == i
        assert x == orb.point


def test_detect_periodic_gives_up():
    # a saddle parameter of the two-interval family: no attracting cycle
    T = two_interval_map(1, 1, Q(1, 3), Q(2, 3))
    assert detect_periodic(T, Q(1, 2), 512) is None


def test_omega_limit_collapses_for_f():
    pts = omega_limit_estimate(F, 0.3, 100, 200)
    assert distinct_values(pts) == 2
    assert pts == sorted(pts)


def test_omega_limit_of_trivial_map():
    T = family_member(Q(1, 5))
    orb = detect_periodic(T, Q(1, 7))
    pts = omega_limit_estimate(T, 0.123, 2000, 500)
    assert distinct_values(pts) == orb.period
    assert min(abs(p - float(orb.point)) for p in pts) < 1e-9


def test_omega_limit_spreads_on_a_long_orbit():
    # a direction with no attracting cycle within reach spreads its samples
    T = family_member(Q(2209, 19900))
    pts = omega_limit_estimate(T, 0.4, 1000, 1000)
    assert distinct_values(pts) >= 500
