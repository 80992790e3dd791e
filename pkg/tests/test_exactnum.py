from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from disco.exactnum import (INF, Mat2, MatrixType, as_proj, as_rational, classify_matrix,
                            fixed_points, format_proj, format_rational, mat_act, mat_mul,
                            parse_proj, parse_rational, proj_from_vector, proj_to_vector)

A = Mat2(1, 6, 0, 1)
B = Mat2(1, 0, Q(3, 2), 1)
ID = Mat2.identity()


def test_parse_and_format():
    assert parse_rational("6/4") == Q(3, 2)
    assert parse_rational(" -7 ") == -7
    assert format_rational(Q(3, 2)) == "3/2"
    assert format_rational(Q(-4, 2)) == "-2"
    assert parse_proj("inf") is INF
    assert format_proj(INF) == "inf"
    assert format_proj(Q(-1, 3)) == "-1/3"
    for bad in ("", "1/", "x", "1.5"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    assert as_proj("2/4") == Q(1, 2)


def test_vectors_and_points():
    assert proj_from_vector(3, 0) is INF
    assert proj_from_vector(-2, 4) == Q(-1, 2)
    assert proj_to_vector(INF) == (1, 0)
    with pytest.raises(ValueError):
        proj_from_vector(0, 0)


def test_mat_mul_examples():
    assert mat_mul(ID, ID) == ID
    assert A @ B.inverse() == Mat2(-8, 6, Q(-3, 2), 1)
    L11, R11 = Mat2(2, 0, -2, 1), Mat2(1, -2, 0, 2)
    assert L11 @ R11 == Mat2(2, -4, -2, 6)


def test_mat_act_examples():
    assert mat_act(A, Q(-3)) == 3
    assert mat_act(B, Q(-1)) == 2
    assert mat_act(A @ B.inverse(), Q(1)) == 4
    assert mat_act(A, INF) is INF
    assert mat_act(B, INF) == Q(2, 3)
    assert mat_act(B, Q(-2, 3)) is INF


def test_classify_examples():
    assert classify_matrix(A) is MatrixType.PARABOLIC
    assert classify_matrix(B) is MatrixType.PARABOLIC
    assert classify_matrix(A @ B.inverse()) is MatrixType.HYPERBOLIC
    assert classify_matrix(-ID) is MatrixType.IDENTITY
    assert classify_matrix(ID.scale(5)) is MatrixType.IDENTITY
    assert classify_matrix(Mat2(0, -1, 1, 0)) is MatrixType.ELLIPTIC
    with pytest.raises(ValueError):
        classify_matrix(Mat2(1, 2, 2, 4))
    with pytest.raises(ValueError):
        classify_matrix(Mat2(0, 1, 1, 0))


def test_inverse_and_det():
    M = Mat2(2, 3, 1, 4)
    assert M @ M.inverse() == ID
    assert M.det() == 5 and M.trace() == 6
    with pytest.raises(ZeroDivisionError):
        Mat2(1, 2, 2, 4).inverse()


def test_fixed_points():
    assert fixed_points(A) == [INF]
    assert fixed_points(Mat2(2, 0, 0, 1)) == [INF, 0]
    assert fixed_points(Mat2(1, 1, 1, 1)) == [-1, 1]  # x^2 = 1
    hyp = fixed_points(A @ B.inverse())
    assert all(isinstance(x, float) for x in hyp) and len(hyp) == 2
    M = A @ B.inverse()
    for x in hyp:
        y = (float(M.a) * x + float(M.b)) / (float(M.c) * x + float(M.d))
        assert y == pytest.approx(x)


matrices = st.builds(Mat2, rationals(-5, 5, 7), rationals(-5, 5, 7),
                     rationals(-5, 5, 7), rationals(-5, 5, 7)).filter(lambda m: m.det() != 0)


@given(matrices, matrices, rationals())
def test_action_is_a_left_action(m1, m2, p):
    try:
        inner = mat_act(m2, p)
        lhs = mat_act(m1 @ m2, p)
    except ZeroDivisionError:
        return
    assert lhs == mat_act(m1, inner)


@given(matrices, st.integers(1, 50), st.integers(1, 50))
def test_classification_ignores_positive_scaling(m, n, d):
    if m.det() <= 0:
        m = Mat2(m.b, m.a, m.d, m.c)  # swap columns to flip the sign
    assert classify_matrix(m) is classify_matrix(m.scale(Q(n, d)))


@given(matrices, matrices)
def test_entries_stay_in_lowest_terms(m1, m2):
    for q in (m1 @ m2).rows()[0] + (m1 @ m2).rows()[1]:
        assert q.denominator > 0
        assert Q(q.numerator, q.denominator) == q
