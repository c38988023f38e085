import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from l2alex.errors import InvalidParameters, SplitLink
from l2alex.links.builder import build_link, detect_split, linking_matrix
from l2alex.links.validation import assemble, cable_layout, count_components, sum_layout
from l2alex.models.link import (
    Cable,
    ConnectedSum,
    Delete,
    Keychain,
    ParallelInSolidTorus,
    SplitStatus,
    TorusInSolidTorus,
    TorusInThickenedTorus,
    TorusLink,
    hopf,
    unknot,
)

from tests.strategies import link_specs


def test_hopf_link():
    obj = build_link(hopf())
    assert obj.num_components == 2
    assert linking_matrix(obj) == ((0, 1), (1, 0))


def test_keychain_components():
    assert build_link(Keychain(e=3)).num_components == 4


def test_delete_hopf_component():
    obj = build_link(Delete(base=hopf(), comp=2))
    assert obj.num_components == 1
    assert obj.linking == ((0,),)


def test_torus_link_linking_is_pq():
    obj = build_link(TorusLink(e=3, p=2, q=1))
    assert all(obj.linking[i][j] == 2 for i in range(3) for j in range(3) if i != j)


def test_thickened_torus_linking():
    obj = build_link(TorusInThickenedTorus(e=1, p=3, q=4))
    assert obj.linking == ((0, 3, 4), (3, 0, 1), (4, 1, 0))
    assert obj.linking_row(1) == [3, 4]


def test_solid_torus_linking():
    obj = build_link(TorusInSolidTorus(e=2, p=2, q=1))
    assert obj.linking == ((0, 2, 2), (2, 0, 2), (2, 2, 0))


def test_parallel_linking():
    obj = build_link(ParallelInSolidTorus(e=2, k=-3))
    assert obj.linking == ((0, -3, 1), (-3, 0, 1), (1, 1, 0))


def test_cable_of_unknot_with_zero_slope():
    obj = build_link(Cable(base=unknot(), comp=1, e=2, p=1, q=0))
    assert obj.linking == ((0, 0), (0, 0))


def test_cable_strands_link_base_p_times():
    base = TorusInSolidTorus(e=1, p=2, q=1)
    obj = build_link(Cable(base=base, comp=1, e=2, p=3, q=1))
    # strands at positions 1 and 2, the former H_v at 3
    assert obj.linking == ((0, 3, 6), (3, 0, 6), (6, 6, 0))


def test_connected_sum_merges_last():
    spec = ConnectedSum(left=Keychain(e=2), left_comp=3, right=hopf(), right_comp=1)
    obj = build_link(spec)
    assert obj.num_components == 4
    assert obj.linking_row(4) == [1, 1, 1]
    assert obj.linking_row(3) == [0, 0, 1]


@pytest.mark.parametrize(
    "spec",
    [
        TorusLink(e=2, p=1, q=0),
        TorusLink(e=1, p=2, q=4),
        TorusLink(e=0, p=1, q=1),
        TorusInSolidTorus(e=1, p=0, q=1),
        TorusInThickenedTorus(e=1, p=2, q=2),
        Keychain(e=0),
        ParallelInSolidTorus(e=0, k=1),
        Cable(base=unknot(), comp=1, e=1, p=0, q=1),
        Cable(base=unknot(), comp=2, e=1, p=1, q=1),
        Delete(base=unknot(), comp=1),
        ConnectedSum(left=hopf(), left_comp=3, right=unknot(), right_comp=1),
    ],
)
def test_invalid_parameters(spec):
    with pytest.raises(InvalidParameters):
        build_link(spec)


def test_split_operand_raises(trefoil):
    split = Delete(base=Keychain(e=2), comp=3)
    with pytest.raises(SplitLink):
        build_link(ConnectedSum(left=split, left_comp=1, right=trefoil, right_comp=1))
    with pytest.raises(SplitLink):
        build_link(Cable(base=split, comp=1, e=1, p=2, q=1))
    with pytest.raises(SplitLink):
        build_link(Delete(base=split, comp=1))


@pytest.mark.parametrize(
    "spec, status",
    [
        (Delete(base=Keychain(e=2), comp=3), SplitStatus.SPLIT),
        (TorusLink(e=2, p=2, q=3), SplitStatus.NON_SPLIT),
        (Delete(base=TorusLink(e=3, p=2, q=1), comp=3), SplitStatus.NON_SPLIT),
        (Cable(base=unknot(), comp=1, e=2, p=1, q=0), SplitStatus.SPLIT),
        (Cable(base=Delete(base=hopf(), comp=2), comp=1, e=2, p=1, q=0), SplitStatus.SPLIT),
        (Cable(base=Delete(base=TorusInSolidTorus(e=1, p=2, q=1), comp=1), comp=1, e=3, p=-1, q=0), SplitStatus.SPLIT),
        (Cable(base=TorusLink(e=1, p=2, q=3), comp=1, e=2, p=1, q=0), SplitStatus.UNKNOWN),
    ],
)
def test_detect_split(spec, status):
    assert detect_split(build_link(spec)).status == status


def test_unknown_split_status_is_a_warning(trefoil):
    obj = build_link(Cable(base=trefoil, comp=1, e=2, p=1, q=0))
    assert any("split status unknown" in w for w in obj.warnings)


def test_layouts():
    assert sum_layout(3, 2, 2, 1) == ([0, 3, 1], [3, 2])
    assert cable_layout(3, 2, 3) == [0, 1, 4]


@given(link_specs)
@settings(max_examples=200, deadline=None)
def test_linking_matrix_is_symmetric(spec):
    obj = build_link(spec)
    assert obj.num_components == count_components(spec)
    n = obj.num_components
    assert all(obj.linking[i][j] == obj.linking[j][i] for i in range(n) for j in range(n))
    assert all(obj.linking[i][i] == 0 for i in range(n))


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_delete_takes_a_principal_submatrix(data):
    spec = data.draw(link_specs)
    c, rows = assemble(spec)
    if c == 1:
        return
    comp = data.draw(st.integers(1, c))
    c_deleted, deleted = assemble(Delete(base=spec, comp=comp))
    assert c_deleted == c - 1
    keep = [i for i in range(c) if i != comp - 1]
    assert deleted == [[rows[i][j] for j in keep] for i in keep]


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_trivial_cable_keeps_the_linking_matrix(data):
    spec = data.draw(link_specs)
    c, rows = assemble(spec)
    comp = data.draw(st.integers(1, c))
    assert assemble(Cable(base=spec, comp=comp, e=1, p=1, q=0)) == (c, rows)
