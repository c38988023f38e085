"""Registry mapping derivation rule tags to the functions that evaluate them.

Every trace step is produced through ``make_step`` so that replaying a step
with the same parameters and child results runs exactly the same code.
"""

import logging
from typing import Any, Callable, Dict, List, Optional, Sequence

from l2alex.errors import UnsupportedConstruction
from l2alex.fk.determinants import product_with_circle, torsion_two_complex
from l2alex.models.exponent import ExponentExpr
from l2alex.models.fk import TwoComplexSpec
from l2alex.models.torsion import Rule, TorsionClass, TraceStep
from l2alex.torsion import compose, formulas

logger = logging.getLogger(__name__)

Children = Sequence[Optional[ExponentExpr]]
RuleFunction = Callable[[Dict[str, Any], Children], Optional[ExponentExpr]]

_REGISTRY: Dict[Rule, RuleFunction] = {}


def register(rule: Rule) -> Callable[[RuleFunction], RuleFunction]:
    def decorator(fn: RuleFunction) -> RuleFunction:
        _REGISTRY[rule] = fn
        return fn

    return decorator


def _classes(children: Children) -> List[TorsionClass]:
    return [TorsionClass(exponent=child) for child in children]


def _degree(value: Any) -> Any:
    return value if isinstance(value, int) else tuple(value)


@register(Rule.TORUS_LINK)
def _torus_link(params: Dict[str, Any], children: Children) -> ExponentExpr:
    return formulas.torsion_torus_link(params["e"], params["p"], params["q"])


@register(Rule.TORUS_IN_SOLID)
def _torus_in_solid(params: Dict[str, Any], children: Children) -> ExponentExpr:
    return formulas.torsion_torus_in_solid(params["e"], params["p"], params["q"])


@register(Rule.TORUS_IN_THICK)
def _torus_in_thick(params: Dict[str, Any], children: Children) -> ExponentExpr:
    return formulas.torsion_torus_in_thickened(params["e"], params["p"], params["q"])


@register(Rule.KEYCHAIN)
def _keychain(params: Dict[str, Any], children: Children) -> ExponentExpr:
    return formulas.torsion_keychain(params["e"])


@register(Rule.PARALLEL_IN_SOLID)
def _parallel(params: Dict[str, Any], children: Children) -> ExponentExpr:
    return formulas.torsion_parallel_in_solid(params["e"], params["k"])


@register(Rule.TORRES)
def _torres(params: Dict[str, Any], children: Children) -> Optional[ExponentExpr]:
    (base,) = _classes(children)
    return compose.torres_delete(base, params["linking_row"], params["comp"]).exponent


@register(Rule.CONNECTED_SUM)
def _connected_sum(params: Dict[str, Any], children: Children) -> Optional[ExponentExpr]:
    left, right = _classes(children)
    return compose.connected_sum_torsion(
        left, right, params["left_comp"], params["right_comp"]
    ).exponent


@register(Rule.CABLING)
def _cabling(params: Dict[str, Any], children: Children) -> Optional[ExponentExpr]:
    (base,) = _classes(children)
    return compose.cabling_torsion(
        base, params["e"], params["p"], params["q"], params["linking_row"], params["comp"]
    ).exponent


@register(Rule.GLUE_TOROIDAL)
def _glue_toroidal(params: Dict[str, Any], children: Children) -> Optional[ExponentExpr]:
    return compose.glue_toroidal(
        _classes(children), params["substitutions"], params["nvars"]
    ).exponent


@register(Rule.GLUE)
def _glue(params: Dict[str, Any], children: Children) -> Optional[ExponentExpr]:
    a, b, interface = _classes(children)
    return compose.glue(a, b, interface).exponent


@register(Rule.SUBSTITUTE)
def _substitute(params: Dict[str, Any], children: Children) -> Optional[ExponentExpr]:
    (child,) = children
    if child is None:
        return None
    return child.substitute(params["matrix"], params["nvars"])


@register(Rule.SPLIT)
def _split(params: Dict[str, Any], children: Children) -> None:
    return None


@register(Rule.PRODUCT_WITH_CIRCLE)
def _product_with_circle(params: Dict[str, Any], children: Children) -> ExponentExpr:
    return product_with_circle(params["cells"], _degree(params["phi_t"]))


@register(Rule.TWO_COMPLEX)
def _two_complex(params: Dict[str, Any], children: Children) -> ExponentExpr:
    return torsion_two_complex(TwoComplexSpec.model_validate(params["complex"]))


@register(Rule.SURGERY)
def _surgery(params: Dict[str, Any], children: Children) -> ExponentExpr:
    return compose.surgery_correction(
        params["p"],
        params["q"],
        params["r"],
        params["s"],
        _degree(params["phi_mu"]),
        _degree(params["phi_lambda"]),
    )


@register(Rule.SPECIALIZE)
def _specialize(params: Dict[str, Any], children: Children) -> Optional[ExponentExpr]:
    (child,) = children
    if child is None:
        return None
    return ExponentExpr.const(child.evaluate(params["values"]))


def apply(rule: Rule, params: Dict[str, Any], children: Children) -> Optional[ExponentExpr]:
    """Evaluate ``rule`` on its parameters and child results."""
    fn = _REGISTRY.get(rule)
    if fn is None:
        raise UnsupportedConstruction(rule.value)
    return fn(params, children)


def make_step(
    rule: Rule,
    params: Dict[str, Any],
    nvars: int,
    children: Sequence[TraceStep] = (),
    assumptions: Sequence[str] = (),
    warnings: Sequence[str] = (),
) -> TraceStep:
    """Apply ``rule`` and record the application as a trace step."""
    result = apply(rule, params, [child.result for child in children])
    step_warnings = list(warnings)
    if result is None and rule in (Rule.GLUE, Rule.GLUE_TOROIDAL):
        step_warnings.append("a glued piece has vanishing torsion")
    logger.debug("Applied %s -> %s", rule.value, "0" if result is None else result)
    return TraceStep(
        rule=rule,
        params=params,
        nvars=nvars,
        result=result,
        assumptions=list(assumptions),
        warnings=step_warnings,
        children=list(children),
    )
