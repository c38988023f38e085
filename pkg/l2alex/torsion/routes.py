"""Alternative derivations that rebuild torsions from pieces instead of closed forms.

Each route decomposes the exterior the way the corresponding closed form is
proved: products ``W x S^1``, gluings along tori and annuli, coefficient
changes, and Dehn fillings. The consistency checks compare every route with
the closed form or the dispatcher.
"""

import logging
from typing import List

from l2alex.fk.determinants import keychain_two_complex, solid_torus_two_complex
from l2alex.links.reduce import identified_spec, split_report
from l2alex.links.validation import (
    assemble,
    check_positive,
    sum_layout,
    validate_cable,
    validate_torus_in_solid,
    validate_torus_in_thick,
    validate_torus_link,
)
from l2alex.models.exponent import identity_matrix, unit_vector
from l2alex.models.link import (
    Cable,
    ConnectedSum,
    Delete,
    Keychain,
    LinkSpec,
    ParallelInSolidTorus,
    SplitStatus,
    TorusInSolidTorus,
    TorusInThickenedTorus,
    TorusLink,
)
from l2alex.models.torsion import Rule, TraceStep
from l2alex.torsion.compose import cable_base_substitution, cable_linking_form
from l2alex.torsion.rules import make_step

logger = logging.getLogger(__name__)


def unknot_route() -> TraceStep:
    """The unknot exterior is a solid torus: a disc times the circle."""
    return make_step(Rule.PRODUCT_WITH_CIRCLE, {"cells": [1, 0], "phi_t": [1]}, 1)


def unknot_two_complex_route() -> TraceStep:
    complex_ = solid_torus_two_complex((1,))
    return make_step(Rule.TWO_COMPLEX, {"complex": complex_.model_dump(mode="json")}, 1)


def hopf_route() -> TraceStep:
    """The Hopf link exterior is an annulus times the circle."""
    return make_step(Rule.PRODUCT_WITH_CIRCLE, {"cells": [1, 1], "phi_t": [1, 0]}, 2)


def keychain_circle_route(e: int) -> TraceStep:
    """The keychain exterior is an e-punctured disc times the circle H_v links."""
    check_positive("keychain", e)
    params = {"cells": [1, e], "phi_t": unit_vector(e, e + 1)}
    return make_step(Rule.PRODUCT_WITH_CIRCLE, params, e + 1)


def keychain_two_complex_route(e: int) -> TraceStep:
    check_positive("keychain", e)
    complex_ = keychain_two_complex(e, tuple(unit_vector(e, e + 1)))
    return make_step(Rule.TWO_COMPLEX, {"complex": complex_.model_dump(mode="json")}, e + 1)


def parallel_route(e: int, k: int) -> TraceStep:
    """T(e, ek) with H_v from the keychain by the twist ``n_{e+1} -> n_{e+1} + k N``."""
    check_positive("parallel_in_solid", e)
    matrix = identity_matrix(e + 1)
    matrix[e] = [k] * e + [1]
    return make_step(
        Rule.SUBSTITUTE,
        {"matrix": matrix, "nvars": e + 1},
        e + 1,
        children=[keychain_circle_route(e)],
    )


def thick_base_route(p: int, q: int) -> TraceStep:
    """T(p, q) with H_v and H_h: two thickened tori glued along a circle's neighbourhood."""
    validate_torus_in_thick(1, p, q)
    fiber = [p * q, p, q]
    piece = {"cells": [1, 1], "phi_t": fiber}
    children = [
        make_step(Rule.PRODUCT_WITH_CIRCLE, piece, 3),
        make_step(Rule.PRODUCT_WITH_CIRCLE, piece, 3),
        make_step(Rule.PRODUCT_WITH_CIRCLE, {"cells": [1], "phi_t": fiber}, 3),
    ]
    return make_step(Rule.GLUE, {}, 3, children=children)


def thick_route(e: int, p: int, q: int) -> TraceStep:
    """T(ep, eq) with H_v and H_h as the e = 1 piece glued to T(e, e pq) with H_v.

    The e = 1 piece sees the strands through ``N``; the parallel piece sees
    its core through ``p n_{e+1} + q n_{e+2}``.
    """
    validate_torus_in_thick(e, p, q)
    nvars = e + 2
    a_rows = [[1] * e + [0, 0], unit_vector(e, nvars), unit_vector(e + 1, nvars)]
    b_rows = [unit_vector(i, nvars) for i in range(e)] + [[0] * e + [p, q]]
    return make_step(
        Rule.GLUE_TOROIDAL,
        {"substitutions": [a_rows, b_rows], "nvars": nvars},
        nvars,
        children=[thick_base_route(p, q), parallel_route(e, p * q)],
    )


def solid_route(e: int, p: int, q: int) -> TraceStep:
    """T(ep, eq) with H_v by filling H_h of the thickened torus."""
    validate_torus_in_solid(e, p, q)
    row = [q] * e + [1]
    params = {"comp": e + 2, "linking_row": row, "permutation": list(range(1, e + 3))}
    return make_step(Rule.TORRES, params, e + 1, children=[thick_route(e, p, q)])


def torus_link_route(e: int, p: int, q: int) -> TraceStep:
    """T(ep, eq) by filling H_v, using the symmetric solid torus when p = 0."""
    validate_torus_link(e, p, q)
    if p == 0:
        p, q = q, p
    params = {"comp": e + 1, "linking_row": [p] * e, "permutation": list(range(1, e + 2))}
    return make_step(Rule.TORRES, params, e, children=[solid_route(e, p, q)])


def sum_route(spec: ConnectedSum) -> TraceStep:
    """Connected sum glued from both exteriors and a twice-punctured disc times the merged meridian."""
    left = route(spec.left)
    right = route(spec.right)
    left_pos, right_pos = sum_layout(left.nvars, spec.left_comp, right.nvars, spec.right_comp)
    total = left.nvars + right.nvars - 1
    keychain = make_step(
        Rule.PRODUCT_WITH_CIRCLE,
        {"cells": [1, 2], "phi_t": unit_vector(total - 1, total)},
        total,
    )
    substitutions = [
        [unit_vector(i, total) for i in left_pos],
        [unit_vector(j, total) for j in right_pos],
        identity_matrix(total),
    ]
    return make_step(
        Rule.GLUE_TOROIDAL,
        {"substitutions": substitutions, "nvars": total},
        total,
        children=[left, right, keychain],
    )


def cable_route(spec: Cable) -> TraceStep:
    """Cable glued from the base exterior and T(ep, eq) with H_v in the companion solid torus."""
    validate_cable(spec.e, spec.p, spec.q)
    base = route(spec.base)
    c_base, rows = assemble(spec.base)
    a = spec.comp
    linking_row = [x for j, x in enumerate(rows[a - 1]) if j != a - 1]
    total = c_base + spec.e - 1
    pattern_rows = [unit_vector(a - 1 + i, total) for i in range(spec.e)]
    pattern_rows.append(cable_linking_form(c_base, a, spec.e, linking_row))
    substitutions = [cable_base_substitution(c_base, a, spec.e, spec.p), pattern_rows]
    return make_step(
        Rule.GLUE_TOROIDAL,
        {"substitutions": substitutions, "nvars": total},
        total,
        children=[base, solid_route(spec.e, spec.p, spec.q)],
    )


def delete_route(spec: Delete) -> TraceStep:
    """A deletion through its structural identification, or by filling when none exists."""
    nvars, _ = assemble(spec)
    identified = identified_spec(spec)
    if identified is not None:
        logger.debug("Deletion identified as %s", identified.kind)
        return route(identified)
    _, rows = assemble(spec.base)
    linking_row = [x for j, x in enumerate(rows[spec.comp - 1]) if j != spec.comp - 1]
    order: List[int] = [i + 1 for i in range(len(rows)) if i != spec.comp - 1] + [spec.comp]
    params = {"comp": spec.comp, "linking_row": linking_row, "permutation": order}
    return make_step(Rule.TORRES, params, nvars, children=[route(spec.base)])


def route(spec: LinkSpec) -> TraceStep:
    """Alternative derivation of the torsion of a whole constructor tree."""
    report = split_report(spec)
    if report.status == SplitStatus.SPLIT:
        nvars, _ = assemble(spec)
        return make_step(Rule.SPLIT, {"reason": report.reason}, nvars)
    if isinstance(spec, TorusLink):
        return torus_link_route(spec.e, spec.p, spec.q)
    if isinstance(spec, TorusInSolidTorus):
        return solid_route(spec.e, spec.p, spec.q)
    if isinstance(spec, TorusInThickenedTorus):
        return thick_route(spec.e, spec.p, spec.q)
    if isinstance(spec, Keychain):
        return keychain_circle_route(spec.e)
    if isinstance(spec, ParallelInSolidTorus):
        return parallel_route(spec.e, spec.k)
    if isinstance(spec, ConnectedSum):
        return sum_route(spec)
    if isinstance(spec, Cable):
        return cable_route(spec)
    return delete_route(spec)
