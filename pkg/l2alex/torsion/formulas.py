"""Closed-form exponents for Seifert-fibered multi-links.

Variables are ordered as the link components: the ``e`` torus strands first,
then H_v, then H_h.
"""

from typing import List

from l2alex.links.validation import (
    check_positive,
    validate_torus_in_solid,
    validate_torus_in_thick,
    validate_torus_link,
)
from l2alex.models.exponent import ExponentExpr


def _strand_sum(e: int, scale: int, nvars: int) -> List[int]:
    return [scale] * e + [0] * (nvars - e)


def torsion_torus_link(e: int, p: int, q: int) -> ExponentExpr:
    """Exponent ``(e|pq| - |p| - |q|) |n_1 + ... + n_e|`` of T(ep, eq)."""
    validate_torus_link(e, p, q)
    coeff = e * abs(p * q) - abs(p) - abs(q)
    return ExponentExpr.abs_form(_strand_sum(e, 1, e), coeff)


def torsion_torus_in_solid(e: int, p: int, q: int) -> ExponentExpr:
    """Exponent ``(e|p| - 1) |q(n_1 + ... + n_e) + n_{e+1}|`` of T(ep, eq) with H_v."""
    validate_torus_in_solid(e, p, q)
    form = _strand_sum(e, q, e + 1)
    form[e] = 1
    return ExponentExpr.abs_form(form, e * abs(p) - 1)


def torsion_torus_in_thickened(e: int, p: int, q: int) -> ExponentExpr:
    """Exponent ``e |pq(n_1 + ... + n_e) + p n_{e+1} + q n_{e+2}|`` of T(ep, eq) with H_v and H_h."""
    validate_torus_in_thick(e, p, q)
    form = _strand_sum(e, p * q, e + 2)
    form[e] = p
    form[e + 1] = q
    return ExponentExpr.abs_form(form, e)


def torsion_keychain(e: int) -> ExponentExpr:
    """Exponent ``(e - 1) |n_{e+1}|`` of the (e+1)-component keychain link."""
    check_positive("keychain", e)
    return ExponentExpr.abs_form(_strand_sum(0, 0, e) + [1], e - 1)


def torsion_parallel_in_solid(e: int, k: int) -> ExponentExpr:
    """Exponent ``(e - 1) |k(n_1 + ... + n_e) + n_{e+1}|`` of T(e, ek) with H_v."""
    check_positive("parallel_in_solid", e)
    form = _strand_sum(e, k, e + 1)
    form[e] = 1
    return ExponentExpr.abs_form(form, e - 1)
