import pytest

from l2alex.errors import DimensionMismatch
from l2alex.links.builder import build_link
from l2alex.models.exponent import ExponentExpr
from l2alex.models.link import Cable, ConnectedSum, Delete, Keychain, TorusInSolidTorus, TorusLink, hopf, unknot
from l2alex.models.torsion import CoefficientVector, Rule
from l2alex.torsion.engine import NONZERO_CLASS, ZERO_VECTOR, derive, torsion


def test_trefoil_symbolic(trefoil):
    result = torsion(build_link(trefoil))
    assert result.symbolic.exponent == ExponentExpr.abs_form([1])
    assert result.torsion == result.symbolic
    assert result.evaluation is None
    assert result.norm_claim
    assert NONZERO_CLASS in result.trace.assumptions


def test_unknot_has_no_norm_claim():
    result = torsion(build_link(unknot()))
    assert result.symbolic.exponent == ExponentExpr.abs_form([1], -1)
    assert not result.norm_claim


def test_split_link_has_zero_torsion():
    step = derive(Delete(base=Keychain(e=2), comp=3))
    assert step.rule == Rule.SPLIT
    assert step.torsion.is_zero


@pytest.mark.parametrize(
    "spec",
    [
        Cable(base=Delete(base=hopf(), comp=2), comp=1, e=2, p=1, q=0),
        Cable(base=Delete(base=TorusInSolidTorus(e=1, p=2, q=1), comp=1), comp=1, e=3, p=-1, q=0),
    ],
)
def test_cable_of_a_derived_unknot_is_split(spec):
    result = torsion(build_link(spec))
    assert result.trace.rule == Rule.SPLIT
    assert result.symbolic.is_zero
    assert not result.norm_claim


def test_concrete_coefficients():
    obj = build_link(TorusLink(e=1, p=3, q=4))
    result = torsion(obj, CoefficientVector.concrete([1]))
    assert result.evaluation == 5
    assert result.trace.rule == Rule.SPECIALIZE
    assert result.torsion.exponent == ExponentExpr.const(5)
    assert result.symbolic.exponent == ExponentExpr.abs_form([1], 5)


def test_zero_vector_warns(trefoil):
    result = torsion(build_link(trefoil), CoefficientVector.concrete([0]))
    assert result.evaluation == 0
    assert ZERO_VECTOR in result.warnings


def test_coefficient_length_is_checked(trefoil):
    with pytest.raises(DimensionMismatch):
        torsion(build_link(trefoil), CoefficientVector.concrete([1, 2]))


def test_delete_uses_the_filling_rule():
    step = derive(Delete(base=TorusInSolidTorus(e=2, p=2, q=1), comp=3))
    assert step.rule == Rule.TORRES
    assert step.params["linking_row"] == [2, 2]
    assert step.params["permutation"] == [1, 2, 3]
    assert step.result == ExponentExpr.abs_form([1, 1])


def test_delete_of_a_middle_component():
    step = derive(Delete(base=TorusLink(e=3, p=2, q=1), comp=2))
    assert step.params["permutation"] == [1, 3, 2]
    assert step.result == ExponentExpr.abs_form([1, 1])


def test_cable_trace(trefoil):
    step = derive(Cable(base=trefoil, comp=1, e=1, p=2, q=3))
    assert step.rule == Rule.CABLING
    assert [child.rule for child in step.children] == [Rule.TORUS_LINK]
    assert step.result == ExponentExpr.abs_form([1], 5)


def test_sum_trace(trefoil):
    step = derive(ConnectedSum(left=trefoil, left_comp=1, right=trefoil, right_comp=1))
    assert step.rule == Rule.CONNECTED_SUM
    assert len(step.children) == 2
    assert step.result == ExponentExpr.abs_form([1], 3)


def test_unknown_split_status_reaches_the_result(trefoil):
    result = torsion(build_link(Cable(base=trefoil, comp=1, e=2, p=1, q=0)))
    assert any("split status unknown" in w for w in result.warnings)
