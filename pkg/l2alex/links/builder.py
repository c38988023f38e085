"""Building validated link objects from constructor trees."""

import logging
from typing import List, Tuple

from l2alex.errors import SplitLink
from l2alex.links.reduce import split_report
from l2alex.links.validation import assemble, freeze
from l2alex.models.link import (
    Cable,
    ConnectedSum,
    Delete,
    LinkingMatrix,
    LinkObject,
    LinkSpec,
    SplitReport,
    SplitStatus,
)

logger = logging.getLogger(__name__)


def _operands(spec: LinkSpec) -> List[Tuple[str, LinkSpec]]:
    if isinstance(spec, ConnectedSum):
        return [("left summand", spec.left), ("right summand", spec.right)]
    if isinstance(spec, Cable):
        return [("cabling base", spec.base)]
    if isinstance(spec, Delete):
        return [("deletion base", spec.base)]
    return []


def _check_operands(spec: LinkSpec) -> None:
    """Reject sums, cables and deletions with a provably split operand anywhere in the tree."""
    for label, operand in _operands(spec):
        _check_operands(operand)
        report = split_report(operand)
        if report.status == SplitStatus.SPLIT:
            raise SplitLink(f"{label} is split ({report.reason})")


def build_link(spec: LinkSpec) -> LinkObject:
    """Validate a constructor tree and compute its linking data.

    Args:
        spec: Constructor tree

    Returns:
        Link object with component count, linking matrix and warnings

    Raises:
        InvalidParameters: A constructor parameter or index is out of its domain
        SplitLink: A sum, cable or deletion has a provably split operand
    """
    num_components, rows = assemble(spec)
    _check_operands(spec)
    warnings: List[str] = []
    report = split_report(spec)
    if report.status == SplitStatus.UNKNOWN:
        message = f"split status unknown: {report.reason}"
        logger.warning(message)
        warnings.append(message)
    logger.debug("Built %s with %d components", spec.kind, num_components)
    return LinkObject(
        spec=spec,
        num_components=num_components,
        linking=freeze(rows),
        warnings=tuple(warnings),
    )


def linking_matrix(obj: LinkObject) -> LinkingMatrix:
    """The symmetric linking matrix of a built link."""
    return obj.linking


def detect_split(obj: LinkObject) -> SplitReport:
    """Structural split check: Split, NonSplit or Unknown."""
    return split_report(obj.spec)
