"""Structural identification of component deletions and split detection.

A deletion is pushed down the constructor tree whenever the resulting link is
again a constructor of the algebra. The identifications are used by
``detect_split`` and by the consistency checks, never by the torsion rules.
"""

import logging
from typing import Optional, Union

from l2alex.links.validation import assemble, count_components
from l2alex.models.link import (
    Cable,
    ConnectedSum,
    Delete,
    Keychain,
    LinkSpec,
    ParallelInSolidTorus,
    SplitReport,
    SplitStatus,
    TorusInSolidTorus,
    TorusInThickenedTorus,
    TorusLink,
    hopf,
    unknot,
)

logger = logging.getLogger(__name__)


class SplitResult:
    """Marker for a deletion whose result is provably split."""

    def __init__(self, reason: str):
        self.reason = reason

    def __repr__(self) -> str:
        return f"SplitResult({self.reason!r})"


Reduction = Union[LinkSpec, SplitResult, None]


def reduce_delete(base: LinkSpec, comp: int) -> Reduction:
    """Identify ``Delete(base, comp)`` with a constructor of the algebra.

    Args:
        base: Link to delete from
        comp: 1-based component index

    Returns:
        The identified spec, a ``SplitResult`` when the result is provably
        split, or None when no identification is known
    """
    if isinstance(base, TorusLink):
        return TorusLink(e=base.e - 1, p=base.p, q=base.q)
    if isinstance(base, TorusInSolidTorus):
        if comp == base.e + 1:
            return TorusLink(e=base.e, p=base.p, q=base.q)
        return TorusInSolidTorus(e=base.e - 1, p=base.p, q=base.q) if base.e > 1 else unknot()
    if isinstance(base, TorusInThickenedTorus):
        if comp == base.e + 1:
            return TorusInSolidTorus(e=base.e, p=base.q, q=base.p)
        if comp == base.e + 2:
            return TorusInSolidTorus(e=base.e, p=base.p, q=base.q)
        return TorusInThickenedTorus(e=base.e - 1, p=base.p, q=base.q) if base.e > 1 else hopf()
    if isinstance(base, Keychain):
        if comp == base.e + 1:
            return TorusLink(e=base.e, p=1, q=0)
        return Keychain(e=base.e - 1) if base.e > 1 else unknot()
    if isinstance(base, ParallelInSolidTorus):
        if comp == base.e + 1:
            return TorusLink(e=base.e, p=1, q=base.k)
        return ParallelInSolidTorus(e=base.e - 1, k=base.k) if base.e > 1 else unknot()
    if isinstance(base, ConnectedSum):
        return _reduce_sum(base, comp)
    if isinstance(base, Cable):
        return _reduce_cable(base, comp)
    return None


def _reduce_sum(base: ConnectedSum, comp: int) -> Reduction:
    c_left = count_components(base.left)
    c_right = count_components(base.right)
    total = c_left + c_right - 1
    if comp == total:
        if c_left == 1:
            return Delete(base=base.right, comp=base.right_comp)
        if c_right == 1:
            return Delete(base=base.left, comp=base.left_comp)
        return SplitResult("deleting the merged component of a connected sum separates the summands")
    if comp <= c_left - 1:
        orig = comp if comp < base.left_comp else comp + 1
        left_comp = base.left_comp - 1 if orig < base.left_comp else base.left_comp
        return ConnectedSum(
            left=Delete(base=base.left, comp=orig),
            left_comp=left_comp,
            right=base.right,
            right_comp=base.right_comp,
        )
    local = comp - (c_left - 1)
    orig = local if local < base.right_comp else local + 1
    right_comp = base.right_comp - 1 if orig < base.right_comp else base.right_comp
    return ConnectedSum(
        left=base.left,
        left_comp=base.left_comp,
        right=Delete(base=base.right, comp=orig),
        right_comp=right_comp,
    )


def _reduce_cable(base: Cable, comp: int) -> Reduction:
    a = base.comp
    if a <= comp < a + base.e:
        if base.e == 1:
            return Delete(base=base.base, comp=a)
        return Cable(base=base.base, comp=a, e=base.e - 1, p=base.p, q=base.q)
    orig = comp if comp < a else comp - base.e + 1
    new_comp = a - 1 if orig < a else a
    return Cable(base=Delete(base=base.base, comp=orig), comp=new_comp, e=base.e, p=base.p, q=base.q)


def is_unknot(spec: LinkSpec) -> bool:
    return isinstance(spec, TorusLink) and spec.e == 1 and min(abs(spec.p), abs(spec.q)) <= 1


def split_report(spec: LinkSpec) -> SplitReport:
    """Sound but incomplete structural split check for a constructor tree."""
    if isinstance(spec, TorusLink):
        if spec.e >= 2 and spec.p * spec.q == 0:
            return SplitReport(status=SplitStatus.SPLIT, reason=f"T({spec.e * spec.p},{spec.e * spec.q}) is split")
        return SplitReport(status=SplitStatus.NON_SPLIT, reason="torus link")
    if isinstance(spec, TorusInSolidTorus):
        if spec.p == 0:
            return SplitReport(status=SplitStatus.SPLIT, reason="strands bound meridian discs of the solid torus")
        return SplitReport(status=SplitStatus.NON_SPLIT, reason="Seifert fibered exterior")
    if isinstance(spec, (TorusInThickenedTorus, Keychain, ParallelInSolidTorus)):
        return SplitReport(status=SplitStatus.NON_SPLIT, reason="Seifert fibered exterior")
    if isinstance(spec, ConnectedSum):
        left = split_report(spec.left)
        right = split_report(spec.right)
        for side in (left, right):
            if side.status == SplitStatus.SPLIT:
                return SplitReport(status=SplitStatus.SPLIT, reason=f"split summand: {side.reason}")
        if left.status == right.status == SplitStatus.NON_SPLIT:
            return SplitReport(status=SplitStatus.NON_SPLIT, reason="sum of non-split links")
        return SplitReport(status=SplitStatus.UNKNOWN, reason="summand of unknown split status")
    if isinstance(spec, Cable):
        return _cable_report(spec)
    if isinstance(spec, Delete):
        reduced = reduce_delete(spec.base, spec.comp)
        if isinstance(reduced, SplitResult):
            return SplitReport(status=SplitStatus.SPLIT, reason=reduced.reason)
        if reduced is None:
            return SplitReport(status=SplitStatus.UNKNOWN, reason="no structural identification of the deletion")
        return split_report(reduced)
    return SplitReport(status=SplitStatus.UNKNOWN, reason="unknown constructor")


def _cable_report(spec: Cable) -> SplitReport:
    base = split_report(spec.base)
    if base.status == SplitStatus.SPLIT:
        return SplitReport(status=SplitStatus.SPLIT, reason=f"split cabling base: {base.reason}")
    if spec.q != 0 or spec.e == 1:
        return base
    identified = identified_spec(spec.base)
    if identified is not None and is_unknot(identified):
        return SplitReport(
            status=SplitStatus.SPLIT,
            reason=f"cable of the unknot is T({spec.e * spec.p},0)",
        )
    _, rows = assemble(spec.base)
    a = spec.comp - 1
    if any(x != 0 for j, x in enumerate(rows[a]) if j != a):
        return base
    return SplitReport(status=SplitStatus.UNKNOWN, reason="parallel longitudes of an unlinked component")


def identified_spec(spec: LinkSpec) -> Optional[LinkSpec]:
    """Rewrite every Delete node of ``spec`` away.

    Returns:
        A Delete-free tree, or None when some deletion has no identification
        or produces a split link
    """
    if isinstance(spec, ConnectedSum):
        left = identified_spec(spec.left)
        right = identified_spec(spec.right)
        if left is None or right is None:
            return None
        return spec.model_copy(update={"left": left, "right": right})
    if isinstance(spec, Cable):
        base = identified_spec(spec.base)
        return None if base is None else spec.model_copy(update={"base": base})
    if not isinstance(spec, Delete):
        return spec
    base = identified_spec(spec.base)
    if base is None:
        return None
    reduced = reduce_delete(base, spec.comp)
    if reduced is None or isinstance(reduced, SplitResult):
        return None
    if split_report(reduced).status == SplitStatus.SPLIT:
        return None
    return identified_spec(reduced)
