import pytest

from l2alex.errors import TraceMismatch
from l2alex.models.exponent import ExponentExpr
from l2alex.models.link import Cable, ConnectedSum, Delete, Keychain, TorusInSolidTorus, TorusLink
from l2alex.torsion import routes
from l2alex.torsion.engine import derive
from l2alex.torsion.replay import replay, verify

TREFOIL = TorusLink(e=1, p=2, q=3)


@pytest.mark.parametrize(
    "spec",
    [
        TREFOIL,
        Keychain(e=3),
        Delete(base=TorusInSolidTorus(e=2, p=2, q=1), comp=3),
        Delete(base=Keychain(e=2), comp=3),
        ConnectedSum(left=TREFOIL, left_comp=1, right=Keychain(e=1), right_comp=2),
        Cable(base=TREFOIL, comp=1, e=2, p=3, q=1),
    ],
)
def test_derivations_replay(spec):
    step = derive(spec)
    assert replay(step) == step.result
    assert verify(step)


def test_routes_replay():
    assert verify(routes.keychain_two_complex_route(4))
    assert verify(routes.thick_route(2, 3, 1))


def test_tampered_root_is_detected():
    step = derive(Cable(base=TREFOIL, comp=1, e=1, p=2, q=3))
    tampered = step.model_copy(update={"result": ExponentExpr.abs_form([1], 4)})
    with pytest.raises(TraceMismatch) as info:
        replay(tampered)
    assert info.value.rule == "cabling"
    assert not verify(tampered)


def test_tampered_child_is_detected():
    step = derive(ConnectedSum(left=TREFOIL, left_comp=1, right=TREFOIL, right_comp=1))
    child = step.children[1].model_copy(update={"result": ExponentExpr.abs_form([1], 1)})
    tampered = step.model_copy(update={"children": [step.children[0], child]})
    with pytest.raises(TraceMismatch) as info:
        replay(tampered)
    assert info.value.rule == "torus_link"


def test_tampered_params_are_detected():
    step = derive(Delete(base=TorusInSolidTorus(e=2, p=2, q=1), comp=3))
    params = dict(step.params, linking_row=[1, 1])
    assert not verify(step.model_copy(update={"params": params}))
