import pytest
from hypothesis import assume, given, settings

from l2alex.links.reduce import SplitResult, identified_spec, is_unknot, reduce_delete, split_report
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
from l2alex.torsion.engine import derive

from tests.strategies import link_specs


@pytest.mark.parametrize(
    "base, comp, expected",
    [
        (TorusLink(e=3, p=2, q=1), 2, TorusLink(e=2, p=2, q=1)),
        (TorusInSolidTorus(e=2, p=2, q=1), 3, TorusLink(e=2, p=2, q=1)),
        (TorusInSolidTorus(e=1, p=2, q=1), 1, unknot()),
        (TorusInThickenedTorus(e=2, p=3, q=1), 3, TorusInSolidTorus(e=2, p=1, q=3)),
        (TorusInThickenedTorus(e=2, p=3, q=1), 4, TorusInSolidTorus(e=2, p=3, q=1)),
        (TorusInThickenedTorus(e=1, p=3, q=1), 1, hopf()),
        (Keychain(e=2), 3, TorusLink(e=2, p=1, q=0)),
        (Keychain(e=3), 1, Keychain(e=2)),
        (ParallelInSolidTorus(e=2, k=4), 3, TorusLink(e=2, p=1, q=4)),
    ],
)
def test_reduce_leaf_deletions(base, comp, expected):
    assert reduce_delete(base, comp) == expected


def test_deleting_the_merged_component_of_two_links_splits():
    spec = ConnectedSum(left=Keychain(e=2), left_comp=3, right=hopf(), right_comp=1)
    assert isinstance(reduce_delete(spec, 4), SplitResult)


def test_deleting_the_merged_component_with_a_knot_summand(trefoil):
    spec = ConnectedSum(left=Keychain(e=2), left_comp=3, right=trefoil, right_comp=1)
    assert reduce_delete(spec, 3) == Delete(base=Keychain(e=2), comp=3)


def test_deletion_passes_into_a_summand(trefoil):
    spec = ConnectedSum(left=Keychain(e=2), left_comp=3, right=trefoil, right_comp=1)
    reduced = reduce_delete(spec, 1)
    assert reduced == ConnectedSum(
        left=Delete(base=Keychain(e=2), comp=1), left_comp=2, right=trefoil, right_comp=1
    )


def test_deleting_a_cable_strand_lowers_e(trefoil):
    spec = Cable(base=trefoil, comp=1, e=3, p=2, q=1)
    assert reduce_delete(spec, 2) == Cable(base=trefoil, comp=1, e=2, p=2, q=1)


def test_identified_spec_rewrites_nested_deletions():
    spec = Delete(base=Delete(base=TorusInThickenedTorus(e=2, p=2, q=3), comp=4), comp=3)
    assert identified_spec(spec) == TorusLink(e=2, p=2, q=3)


def test_identified_spec_gives_up_on_split_results():
    assert identified_spec(Delete(base=Keychain(e=2), comp=3)) is None


def test_is_unknot():
    assert is_unknot(unknot())
    assert is_unknot(TorusLink(e=1, p=5, q=-1))
    assert not is_unknot(TorusLink(e=1, p=2, q=3))


def test_split_report_of_sum_with_unknown_summand(trefoil):
    unknown = Cable(base=trefoil, comp=1, e=2, p=1, q=0)
    spec = ConnectedSum(left=unknown, left_comp=1, right=trefoil, right_comp=1)
    assert split_report(spec).status == SplitStatus.UNKNOWN


@given(link_specs)
@settings(max_examples=200, deadline=None)
def test_identified_deletions_match_torres(spec):
    identified = identified_spec(spec)
    assume(identified is not None)
    assert derive(identified).result == derive(spec).result
