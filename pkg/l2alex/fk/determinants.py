"""Formal Fuglede-Kadison determinant exponents.

Only the operator shapes used by the torsion computations are supported:
monomial operators ``Id - t**k R_g`` with g of infinite order, block-diagonal
combinations of them, two-complexes given by their two determinant minors and
products ``W x S^1``.
"""

import logging
from typing import Sequence, Union

from l2alex.errors import MissingDeclaration
from l2alex.models.exponent import ExponentExpr
from l2alex.models.fk import (
    BlockDiagonalSpec,
    CWCellCounts,
    Degree,
    MonomialOperator,
    TwoComplexSpec,
    monomial_blocks,
)

logger = logging.getLogger(__name__)


def _degree_exponent(k: Degree) -> ExponentExpr:
    if isinstance(k, int):
        return ExponentExpr.const(abs(k))
    return ExponentExpr.abs_form(k)


def _add(a: ExponentExpr, b: ExponentExpr) -> ExponentExpr:
    """Sum that reads a constant operand over the other operand's variables."""
    if a.nvars != b.nvars:
        if a.is_constant:
            a = a.widen(b.nvars)
        elif b.is_constant:
            b = b.widen(a.nvars)
    return a + b


def det_monomial(op: MonomialOperator) -> ExponentExpr:
    """Exponent ``|k|`` of ``det(Id - t**k R_g) = max(1, t**k)`` up to dot-equality.

    Raises:
        MissingDeclaration: g is not declared to have infinite order
    """
    if not op.infinite_order:
        raise MissingDeclaration("infinite order of the group element g")
    return _degree_exponent(op.k)


def det_block_diagonal(spec: BlockDiagonalSpec) -> ExponentExpr:
    """Multiplicity-weighted sum of the block exponents."""
    total = ExponentExpr.zero()
    for block in spec.blocks:
        if isinstance(block.spec, MonomialOperator):
            inner = det_monomial(block.spec)
        else:
            inner = det_block_diagonal(block.spec)
        total = _add(total, inner.scale(block.multiplicity))
    return total


def torsion_two_complex(spec: TwoComplexSpec) -> ExponentExpr:
    """Exponent ``det(d2(J)) - det(d1(J))`` of a two-complex.

    Raises:
        MissingDeclaration: One of the two minors is not declared
    """
    if spec.boundary2 is None:
        raise MissingDeclaration("determinant of the second boundary minor")
    if spec.boundary1 is None:
        raise MissingDeclaration("determinant of the first boundary minor")
    return _add(det_block_diagonal(spec.boundary2), -det_block_diagonal(spec.boundary1))


def product_with_circle(
    cells: Union[CWCellCounts, Sequence[int]],
    phi_t: Degree,
    infinite_image: bool = True,
) -> ExponentExpr:
    """Exponent ``-chi(W) |phi(T)|`` of ``W x S^1``.

    Each ``(k-1)``-cell of W times the circle is a ``k``-cell carrying one
    monomial operator in degree ``k``; the degrees alternate in sign.

    Args:
        cells: Cell counts of W
        phi_t: Value of the class on the circle factor
        infinite_image: Declared infinite image of the circle generator
    """
    if not isinstance(cells, CWCellCounts):
        cells = CWCellCounts(counts=tuple(cells))
    if not infinite_image:
        raise MissingDeclaration("infinite image of the circle generator")
    total = _degree_exponent(phi_t).scale(0)
    for degree, count in enumerate(cells.counts, start=1):
        block = BlockDiagonalSpec(blocks=tuple(monomial_blocks(phi_t, count)))
        total = _add(total, det_block_diagonal(block).scale((-1) ** degree))
    logger.debug("W x S^1 with chi(W) = %d", cells.euler_characteristic)
    return total


def keychain_two_complex(e: int, k: Degree) -> TwoComplexSpec:
    """Two-complex of the e-punctured disc times the circle.

    ``d2(J)`` consists of ``e`` monomial blocks and ``d1(J)`` of a single one.
    """
    return TwoComplexSpec(
        k=e,
        l=1,
        J=(e + 1,),
        boundary2=BlockDiagonalSpec(blocks=tuple(monomial_blocks(k, e))),
        boundary1=BlockDiagonalSpec(blocks=tuple(monomial_blocks(k, 1))),
    )


def solid_torus_two_complex(k: Degree) -> TwoComplexSpec:
    """Two-complex of the solid torus: no second boundary, one monomial first boundary."""
    return TwoComplexSpec(
        k=1,
        l=0,
        J=(),
        boundary2=BlockDiagonalSpec(),
        boundary1=BlockDiagonalSpec(blocks=tuple(monomial_blocks(k, 1))),
    )