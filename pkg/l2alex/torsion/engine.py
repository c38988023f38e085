"""Torsion dispatcher: structural recursion over a link's constructor tree."""

import logging
from typing import Dict, List, Optional

from l2alex.errors import DimensionMismatch, UnsupportedConstruction
from l2alex.geometry.norm import seminorm_report
from l2alex.links.reduce import split_report
from l2alex.links.validation import assemble
from l2alex.models.link import (
    Cable,
    ConnectedSum,
    Delete,
    Keychain,
    LinkObject,
    LinkSpec,
    ParallelInSolidTorus,
    SplitStatus,
    TorusInSolidTorus,
    TorusInThickenedTorus,
    TorusLink,
)
from l2alex.models.torsion import CoefficientVector, Rule, TorsionResult, TraceStep
from l2alex.torsion.rules import make_step

logger = logging.getLogger(__name__)

NON_SPLIT = "the link is non-split"
NONZERO_CLASS = "the coefficient vector is nonzero"
INFINITE_MERIDIAN = "the meridian of the deleted component has infinite order"
INFINITE_CABLE_CORE = "the core of the cabled component has infinite order"
INFINITE_SUM_MERIDIAN = "the meridian of the merged component has infinite order"
ZERO_VECTOR = "zero coefficient vector: a nonvanishing hypothesis is not met"

_CLOSED_FORMS: Dict[type, Rule] = {
    TorusLink: Rule.TORUS_LINK,
    TorusInSolidTorus: Rule.TORUS_IN_SOLID,
    TorusInThickenedTorus: Rule.TORUS_IN_THICK,
    Keychain: Rule.KEYCHAIN,
    ParallelInSolidTorus: Rule.PARALLEL_IN_SOLID,
}


def _row(rows: List[List[int]], comp: int) -> List[int]:
    return [x for j, x in enumerate(rows[comp - 1]) if j != comp - 1]


def derive(spec: LinkSpec) -> TraceStep:
    """Symbolic derivation of the torsion of ``spec`` over its component coefficients.

    Raises:
        UnsupportedConstruction: No rule applies to a node of the tree
    """
    nvars, _ = assemble(spec)
    report = split_report(spec)
    if report.status == SplitStatus.SPLIT:
        logger.debug("Split node %s: %s", spec.kind, report.reason)
        return make_step(Rule.SPLIT, {"reason": report.reason}, nvars)
    rule = _CLOSED_FORMS.get(type(spec))
    if rule is not None:
        params = spec.model_dump(exclude={"kind"})
        return make_step(rule, params, nvars, assumptions=[NON_SPLIT, NONZERO_CLASS])
    if isinstance(spec, Delete):
        _, rows = assemble(spec.base)
        order = [i + 1 for i in range(len(rows)) if i != spec.comp - 1] + [spec.comp]
        params = {
            "comp": spec.comp,
            "linking_row": _row(rows, spec.comp),
            "permutation": order,
        }
        return make_step(
            Rule.TORRES,
            params,
            nvars,
            children=[derive(spec.base)],
            assumptions=[INFINITE_MERIDIAN, NONZERO_CLASS],
        )
    if isinstance(spec, ConnectedSum):
        params = {"left_comp": spec.left_comp, "right_comp": spec.right_comp}
        return make_step(
            Rule.CONNECTED_SUM,
            params,
            nvars,
            children=[derive(spec.left), derive(spec.right)],
            assumptions=[NON_SPLIT, INFINITE_SUM_MERIDIAN],
        )
    if isinstance(spec, Cable):
        _, rows = assemble(spec.base)
        params = {
            "comp": spec.comp,
            "e": spec.e,
            "p": spec.p,
            "q": spec.q,
            "linking_row": _row(rows, spec.comp),
        }
        return make_step(
            Rule.CABLING,
            params,
            nvars,
            children=[derive(spec.base)],
            assumptions=[NON_SPLIT, INFINITE_CABLE_CORE],
        )
    raise UnsupportedConstruction(type(spec).__name__)


def torsion(obj: LinkObject, coeffs: Optional[CoefficientVector] = None) -> TorsionResult:
    """Torsion class of a built link for symbolic or concrete coefficients.

    Args:
        obj: Built link
        coeffs: Coefficient vector, symbolic when omitted

    Returns:
        Torsion result with the derivation trace and norm metadata
    """
    coeffs = coeffs or CoefficientVector.symbolic(obj.num_components)
    if coeffs.nvars != obj.num_components:
        raise DimensionMismatch(obj.num_components, coeffs.nvars)
    step = derive(obj.spec)
    symbolic = step.torsion
    if coeffs.values is not None:
        extra: List[str] = []
        if coeffs.is_zero and any(NONZERO_CLASS in s.assumptions for s in step.walk()):
            message = ZERO_VECTOR
            logger.warning(message)
            extra.append(message)
        step = make_step(
            Rule.SPECIALIZE, {"values": list(coeffs.values)}, 0, children=[step], warnings=extra
        )
    norm_claim = symbolic.exponent is not None and seminorm_report(symbolic.exponent).is_seminorm
    warnings = list(dict.fromkeys(list(obj.warnings) + step.all_warnings()))
    return TorsionResult(
        torsion=step.torsion,
        symbolic=symbolic,
        coefficients=coeffs,
        trace=step,
        norm_claim=norm_claim,
        warnings=warnings,
    )
