"""Seminorm detection and dual unit balls of exponent expressions."""

import logging
from functools import reduce
from itertools import combinations
from math import gcd
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

import sympy as sp

from l2alex.config.settings import settings
from l2alex.errors import DimensionTooLarge, NotASeminorm
from l2alex.models.exponent import ExponentExpr
from l2alex.models.geometry import SeminormReport, Zonotope

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def evaluate(exponent: ExponentExpr, n: Sequence[int]) -> int:
    """``E(n)`` for a concrete coefficient vector."""
    return exponent.evaluate(n)


def primitive_integer_vector(vector: sp.Matrix) -> Vector:
    """Scale a rational vector to a primitive integer vector with positive leading entry."""
    entries = [sp.Rational(x) for x in vector]
    denominator = reduce(sp.ilcm, (x.q for x in entries), 1)
    ints = [int(x * denominator) for x in entries]
    content = reduce(gcd, (abs(x) for x in ints), 0) or 1
    ints = [x // content for x in ints]
    lead = next((x for x in ints if x != 0), 0)
    return tuple(-x for x in ints) if lead < 0 else tuple(ints)


def seminorm_report(exponent: ExponentExpr) -> SeminormReport:
    """Decide whether ``E`` is a seminorm and compute the subspace where it vanishes.

    The degenerate subspace is the common kernel of the forms with positive
    coefficient.
    """
    is_seminorm = exponent.constant == 0 and all(t.coeff >= 0 for t in exponent.terms)
    forms = [list(t.form) for t in exponent.terms if t.coeff > 0]
    if exponent.nvars == 0:
        return SeminormReport(is_seminorm=is_seminorm)
    if forms:
        kernel = sp.Matrix(forms).nullspace()
    else:
        kernel = [sp.eye(exponent.nvars).col(j) for j in range(exponent.nvars)]
    directions = [primitive_integer_vector(v) for v in kernel]
    return SeminormReport(is_seminorm=is_seminorm, degenerate_directions=directions)


def _dot(a: Sequence[sp.Expr], b: Sequence[int]) -> sp.Expr:
    return sum((x * y for x, y in zip(a, b)), sp.Integer(0))


def _sign(value: sp.Expr) -> int:
    return 1 if value > 0 else (-1 if value < 0 else 0)


def _add(a: Vector, b: Vector, sign: int = 1) -> Vector:
    return tuple(x + sign * y for x, y in zip(a, b))


def zonotope_vertices(generators: Sequence[Vector], dimension: int) -> Set[Vector]:
    """Vertices of the zonotope spanned by ``generators`` in ``Z^dimension``.

    Each facet of a zonotope of rank r is cut out by a hyperplane spanned by
    r - 1 generators; it is a translate of the zonotope of the generators in
    that hyperplane, so its vertices are found by recursion on the rank.
    """
    gens = [g for g in generators if any(g)]
    origin: Vector = tuple([0] * dimension)
    if not gens:
        return {origin}
    matrix = sp.Matrix([list(g) for g in gens]).T
    rank = matrix.rank()
    if rank == 1:
        direction = next(iter(gens))
        tip = origin
        for g in gens:
            tip = _add(tip, g, _sign(sp.Integer(sum(a * b for a, b in zip(g, direction)))))
        return {tip, _add(origin, tip, -1)}
    basis = matrix.columnspace()
    span = sp.Matrix.hstack(*basis)
    vertices: Set[Vector] = set()
    seen: Set[FrozenSet[int]] = set()
    for subset in combinations(range(len(gens)), rank - 1):
        sub = sp.Matrix([list(gens[i]) for i in subset])
        if sub.rank() != rank - 1:
            continue
        kernel = (sub * span).nullspace()
        if len(kernel) != 1:
            continue
        normal = list(span * kernel[0])
        on_face = frozenset(i for i, g in enumerate(gens) if _dot(normal, g) == 0)
        if on_face in seen:
            continue
        seen.add(on_face)
        offset = origin
        for i, g in enumerate(gens):
            if i not in on_face:
                offset = _add(offset, g, _sign(_dot(normal, g)))
        face = zonotope_vertices([gens[i] for i in sorted(on_face)], dimension)
        for v in face:
            vertices.add(_add(offset, v))
            vertices.add(_add(v, offset, -1))
    return vertices


def dual_ball(exponent: ExponentExpr, max_dimension: Optional[int] = None) -> Zonotope:
    """Dual unit ball of a seminorm exponent: the zonotope with generators ``a_j l_j``.

    For every n, ``E(n)`` is the maximum of ``<v, n>`` over the vertices.

    Raises:
        NotASeminorm: A coefficient is negative or the constant is nonzero
        DimensionTooLarge: Too many variables or generators
    """
    if not seminorm_report(exponent).is_seminorm:
        raise NotASeminorm(str(exponent))
    limit = max_dimension if max_dimension is not None else settings.geometry.max_dimension
    if exponent.nvars > limit:
        raise DimensionTooLarge(exponent.nvars, limit)
    generators = [tuple(t.coeff * x for x in t.form) for t in exponent.terms]
    if len(generators) > settings.geometry.max_generators:
        raise DimensionTooLarge(len(generators), settings.geometry.max_generators, "generator count")
    vertices = sorted(zonotope_vertices(generators, exponent.nvars), reverse=True)
    logger.debug("Dual ball with %d generators has %d vertices", len(generators), len(vertices))
    return Zonotope(generators=generators, vertices=vertices)


def sign_enumeration_vertices(generators: Sequence[Vector], dimension: int) -> List[Vector]:
    """All sums ``sum s_j g_j`` over sign vectors, without hull reduction."""
    points: List[Vector] = [tuple([0] * dimension)]
    for g in generators:
        points = [_add(p, g, s) for p in points for s in (1, -1)]
    return points
