"""Replaying derivation traces."""

import logging
from typing import Optional

from l2alex.errors import TraceMismatch
from l2alex.models.exponent import ExponentExpr
from l2alex.models.torsion import TraceStep
from l2alex.torsion.rules import apply

logger = logging.getLogger(__name__)


def _text(result: Optional[ExponentExpr]) -> str:
    return "0" if result is None else str(result)


def replay(step: TraceStep) -> Optional[ExponentExpr]:
    """Recompute every step bottom-up and check it against the recorded result.

    Returns:
        The replayed result of the root step

    Raises:
        TraceMismatch: A step recomputes to a different exponent
    """
    children = [replay(child) for child in step.children]
    result = apply(step.rule, step.params, children)
    if result != step.result:
        raise TraceMismatch(step.rule.value, _text(step.result), _text(result))
    return result


def verify(step: TraceStep) -> bool:
    """True when the whole trace replays exactly."""
    try:
        replay(step)
    except TraceMismatch as exc:
        logger.warning("Trace replay failed: %s", exc)
        return False
    return True
