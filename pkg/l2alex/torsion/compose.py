"""Compositional torsion rules: deletion, connected sum, cabling, gluing and surgery."""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from l2alex.errors import BadFraming, DimensionMismatch, InvalidParameters, require_length
from l2alex.links.validation import cable_layout, sum_layout, validate_cable
from l2alex.models.exponent import ExponentExpr, Matrix, unit_vector
from l2alex.models.torsion import TorsionClass

logger = logging.getLogger(__name__)

SlopeValue = Union[int, Sequence[int]]


def move_to_last(nvars: int, comp: int) -> List[List[int]]:
    """Substitution matrix relabelling variable ``comp`` (1-based) as the last one.

    Row ``i`` expresses old variable ``i`` in the new variables, whose order is
    the other variables in their original order followed by ``comp``.
    """
    order = [i for i in range(nvars) if i != comp - 1] + [comp - 1]
    return [unit_vector(order.index(i), nvars) for i in range(nvars)]


def surgery_correction(
    p: int, q: int, r: int, s: int, phi_mu: SlopeValue, phi_lambda: SlopeValue
) -> ExponentExpr:
    """Exponent ``|r phi(mu) + s phi(lambda)|`` divided out by a Dehn filling.

    ``phi_mu`` and ``phi_lambda`` are either integers or integer linear forms in
    the coefficients of the filled link; an integer 0 stands for the zero form.

    Raises:
        BadFraming: ``ps - qr != 1``
    """
    if p * s - q * r != 1:
        raise BadFraming(p, q, r, s)
    if isinstance(phi_mu, int) and isinstance(phi_lambda, int):
        return ExponentExpr.const(abs(r * phi_mu + s * phi_lambda))
    mu_form, lambda_form = _align_forms(phi_mu, phi_lambda)
    return ExponentExpr.abs_form([r * a + s * b for a, b in zip(mu_form, lambda_form)])


def _align_forms(phi_mu: SlopeValue, phi_lambda: SlopeValue) -> Tuple[List[int], List[int]]:
    size = len(phi_mu) if not isinstance(phi_mu, int) else len(phi_lambda)  # type: ignore[arg-type]
    forms = []
    for value in (phi_mu, phi_lambda):
        if isinstance(value, int):
            if value != 0:
                raise DimensionMismatch(size, 0, "slope form")
            forms.append([0] * size)
        else:
            require_length(value, size, "slope form")
            forms.append(list(value))
    return forms[0], forms[1]


def torres_delete(
    base_torsion: TorsionClass, linking_row: Sequence[int], comp: Optional[int] = None
) -> TorsionClass:
    """Torsion after deleting component ``comp`` (default: the last one).

    The deleted component is first moved to the last position; then its
    coefficient is set to 0 and the filling correction
    ``|lk(L_1, L_c) n_1 + ... + lk(L_{c-1}, L_c) n_{c-1}|`` is divided out.
    """
    if base_torsion.exponent is None:
        return TorsionClass.zero()
    exponent = base_torsion.exponent
    c = exponent.nvars
    comp = c if comp is None else comp
    if not 1 <= comp <= c or c < 2:
        raise InvalidParameters("torres", f"component {comp} out of range 1..{c}")
    require_length(linking_row, c - 1, "linking row")
    moved = exponent.substitute(move_to_last(c, comp), c)
    drop_last = [unit_vector(i, c - 1) for i in range(c - 1)] + [[0] * (c - 1)]
    restricted = moved.substitute(drop_last, c - 1)
    correction = surgery_correction(1, 0, 0, 1, 0, list(linking_row))
    return TorsionClass.nonzero(restricted - correction)


def connected_sum_torsion(
    left: TorsionClass,
    right: TorsionClass,
    left_comp: Optional[int] = None,
    right_comp: Optional[int] = None,
) -> TorsionClass:
    """Torsion of the connected sum along ``left_comp`` and ``right_comp`` (default: last).

    Components are ordered as the left summand's non-merged components, the
    right summand's non-merged components, then the merged one.
    """
    if left.exponent is None or right.exponent is None:
        return TorsionClass.zero()
    c_left = left.exponent.nvars
    c_right = right.exponent.nvars
    left_pos, right_pos = sum_layout(
        c_left, left_comp or c_left, c_right, right_comp or c_right
    )
    total = c_left + c_right - 1
    left_sub = left.exponent.substitute([unit_vector(i, total) for i in left_pos], total)
    right_sub = right.exponent.substitute([unit_vector(j, total) for j in right_pos], total)
    merged = ExponentExpr.abs_form(unit_vector(total - 1, total))
    return TorsionClass.nonzero(left_sub + right_sub + merged)


def cabling_torsion(
    base: TorsionClass,
    e: int,
    p: int,
    q: int,
    linking_row: Sequence[int],
    comp: Optional[int] = None,
) -> TorsionClass:
    """Torsion after replacing component ``comp`` (default: last) by its (ep, eq) cable.

    With ``N`` the sum of the strand coefficients and ``l`` the linking form of
    the cabled component, the base is read at ``n_comp = pN`` and
    ``(e|p| - 1) |l + qN|`` is added.
    """
    validate_cable(e, p, q)
    if base.exponent is None:
        return TorsionClass.zero()
    c_base = base.exponent.nvars
    comp = c_base if comp is None else comp
    total = c_base + e - 1
    substituted = base.exponent.substitute(cable_base_substitution(c_base, comp, e, p), total)
    form = cable_linking_form(c_base, comp, e, linking_row)
    for j in range(comp - 1, comp - 1 + e):
        form[j] += q
    pattern = ExponentExpr.abs_form(form, e * abs(p) - 1)
    return TorsionClass.nonzero(substituted + pattern)


def cable_base_substitution(c_base: int, comp: int, e: int, p: int) -> List[List[int]]:
    """Rows reading the base variables after cabling: ``n_comp = p N``, others relabelled."""
    total = c_base + e - 1
    strands = range(comp - 1, comp - 1 + e)
    rows: List[List[int]] = []
    for i, pos in enumerate(cable_layout(c_base, comp, e)):
        if i == comp - 1:
            rows.append([p if j in strands else 0 for j in range(total)])
        else:
            rows.append(unit_vector(pos, total))
    return rows


def cable_linking_form(
    c_base: int, comp: int, e: int, linking_row: Sequence[int]
) -> List[int]:
    """The form ``l = sum_m lk(L_m, L_comp) n_m`` in the cabled link's variables."""
    require_length(linking_row, c_base - 1, "linking row")
    positions = cable_layout(c_base, comp, e)
    others = [pos for i, pos in enumerate(positions) if i != comp - 1]
    form = [0] * (c_base + e - 1)
    for pos, lk in zip(others, linking_row):
        form[pos] += lk
    return form


def glue_toroidal(
    pieces: Sequence[TorsionClass],
    substitutions: Optional[Sequence[Matrix]] = None,
    nvars: Optional[int] = None,
) -> TorsionClass:
    """Product of the pieces of a decomposition along tori.

    Each piece is first read in the composite's variables through its
    substitution matrix; torus interfaces contribute nothing.
    """
    if any(piece.exponent is None for piece in pieces):
        logger.warning("Gluing a piece with vanishing torsion gives the Zero class")
        return TorsionClass.zero()
    exponents = [piece.exponent for piece in pieces if piece.exponent is not None]
    if substitutions is not None:
        require_length(substitutions, len(exponents), "substitution list")
        if nvars is None:
            raise InvalidParameters("glue_toroidal", "nvars is required with substitutions")
        exponents = [exp.substitute(m, nvars) for exp, m in zip(exponents, substitutions)]
    if nvars is None:
        nvars = exponents[0].nvars if exponents else 0
    total = ExponentExpr.zero(nvars)
    for exponent in exponents:
        total = total + exponent
    return TorsionClass.nonzero(total)


def glue(a: TorsionClass, b: TorsionClass, interface: TorsionClass) -> TorsionClass:
    """Torsion of ``A`` and ``B`` glued along ``V``: ``T(A) T(B) / T(V)``."""
    if a.is_zero or b.is_zero:
        logger.warning("Gluing a piece with vanishing torsion gives the Zero class")
        return TorsionClass.zero()
    return (a * b) / interface


def knot_invariant_exponent(torsion: TorsionClass) -> int:
    """Exponent of the knot invariant ``T(t) max(1, t)`` at ``n = 1``."""
    exponent = torsion.require_exponent("knot invariant of a vanishing torsion")
    if exponent.nvars != 1:
        raise InvalidParameters(
            "knot_invariant_exponent", f"expected a knot, got {exponent.nvars} components"
        )
    return exponent.evaluate([1]) + 1
