import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from l2alex.errors import DimensionTooLarge, NotASeminorm
from l2alex.geometry.norm import (
    dual_ball,
    evaluate,
    primitive_integer_vector,
    seminorm_report,
    sign_enumeration_vertices,
)
from l2alex.models.exponent import ExponentExpr
from l2alex.torsion import formulas

from tests.strategies import seminorms, vectors


def test_evaluate_torus_link():
    assert evaluate(formulas.torsion_torus_link(2, 2, 1), [2, -1]) == 1
    assert evaluate(formulas.torsion_torus_link(1, 2, 3), [0]) == 0


def test_primitive_integer_vector():
    assert primitive_integer_vector(sp.Matrix([sp.Rational(-1, 2), sp.Rational(1, 3)])) == (3, -2)


def test_seminorm_with_a_degenerate_direction():
    report = seminorm_report(ExponentExpr.abs_form([1, 1]))
    assert report.is_seminorm
    assert report.degenerate_directions == [(1, -1)]


def test_unknot_is_not_a_seminorm():
    assert not seminorm_report(ExponentExpr.abs_form([1], -1)).is_seminorm


def test_kernel_dimension():
    report = seminorm_report(ExponentExpr.abs_form([2, 2, 2, 1], 2))
    assert report.is_seminorm
    assert report.kernel_dimension == 3


def test_zero_exponent_vanishes_everywhere():
    report = seminorm_report(ExponentExpr.zero(2))
    assert report.is_seminorm
    assert sorted(report.degenerate_directions) == [(0, 1), (1, 0)]


@pytest.mark.parametrize(
    "form, vertices",
    [
        ([1], [(1,), (-1,)]),
        ([1, 1], [(1, 1), (-1, -1)]),
        ([1, 1, 1], [(1, 1, 1), (-1, -1, -1)]),
    ],
)
def test_segments(form, vertices):
    assert dual_ball(ExponentExpr.abs_form(form)).vertices == vertices


def test_torus_link_ball():
    assert dual_ball(formulas.torsion_torus_link(2, 2, 1)).to_json() == {"vertices": [[1, 1], [-1, -1]]}


def test_square_and_hexagon():
    square = ExponentExpr(nvars=2, terms=[(1, (1, 0)), (1, (0, 1))])
    assert set(dual_ball(square).vertices) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    hexagon = square + ExponentExpr.abs_form([1, 1])
    assert set(dual_ball(hexagon).vertices) == {(2, 2), (2, 0), (0, -2), (-2, -2), (-2, 0), (0, 2)}


def test_zero_ball_is_the_origin():
    assert dual_ball(ExponentExpr.zero(2)).vertices == [(0, 0)]


def test_ball_errors():
    with pytest.raises(NotASeminorm):
        dual_ball(ExponentExpr.abs_form([1], -1))
    with pytest.raises(NotASeminorm):
        dual_ball(ExponentExpr.const(1, 1))
    with pytest.raises(DimensionTooLarge):
        dual_ball(ExponentExpr.abs_form([1, 1, 1, 1]))
    assert len(dual_ball(ExponentExpr.abs_form([1, 1, 1, 1]), max_dimension=4).vertices) == 2


def test_sign_enumeration():
    assert sign_enumeration_vertices([], 2) == [(0, 0)]
    assert sorted(sign_enumeration_vertices([(1, 0), (0, 1)], 2)) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_support_function_is_the_exponent(data):
    expr = data.draw(seminorms())
    ball = dual_ball(expr)
    n = tuple(data.draw(vectors(expr.nvars)))
    assert ball.support(n) == expr.evaluate(n)
    assert set(ball.vertices) <= set(sign_enumeration_vertices(ball.generators, expr.nvars))
    assert {tuple(-x for x in v) for v in ball.vertices} == set(ball.vertices)


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_seminorms_are_subadditive_and_homogeneous(data):
    expr = data.draw(seminorms())
    assert seminorm_report(expr).is_seminorm
    n = data.draw(vectors(expr.nvars))
    m = data.draw(vectors(expr.nvars))
    k = data.draw(st.integers(-5, 5))
    assert evaluate(expr, [a + b for a, b in zip(n, m)]) <= evaluate(expr, n) + evaluate(expr, m)
    assert evaluate(expr, [k * a for a in n]) == abs(k) * evaluate(expr, n)
