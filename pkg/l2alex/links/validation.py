"""Parameter validation, component counts and linking matrices for link specs."""

from math import gcd
from typing import List, Tuple

from l2alex.errors import InvalidParameters
from l2alex.models.link import (
    Cable,
    ComponentRef,
    ConnectedSum,
    Delete,
    Keychain,
    LinkingMatrix,
    LinkSpec,
    ParallelInSolidTorus,
    TorusInSolidTorus,
    TorusInThickenedTorus,
    TorusLink,
)

Rows = List[List[int]]


def check_positive(node: str, e: int) -> None:
    """Reject a component count below one."""
    if e < 1:
        raise InvalidParameters(node, f"e = {e} must be a positive integer")


def check_coprime(node: str, p: int, q: int) -> None:
    """Reject a slope whose entries share a factor."""
    if gcd(p, q) != 1:
        raise InvalidParameters(node, f"gcd({p}, {q}) = {gcd(p, q)}, expected 1")


def validate_torus_link(e: int, p: int, q: int) -> None:
    check_positive("torus", e)
    check_coprime("torus", p, q)
    if e >= 2 and (p == 0 or q == 0):
        raise InvalidParameters("torus", f"T({e * p},{e * q}) is a split torus link")


def validate_torus_in_solid(e: int, p: int, q: int) -> None:
    check_positive("torus_in_solid", e)
    check_coprime("torus_in_solid", p, q)
    if p == 0:
        raise InvalidParameters("torus_in_solid", "p must be nonzero")


def validate_torus_in_thick(e: int, p: int, q: int) -> None:
    check_positive("torus_in_thick", e)
    check_coprime("torus_in_thick", p, q)


def validate_cable(e: int, p: int, q: int) -> None:
    check_positive("cable", e)
    if p == 0:
        raise InvalidParameters("cable", "p must be nonzero")
    check_coprime("cable", p, q)


def _constant_block(size: int, value: int) -> Rows:
    return [[0 if i == j else value for j in range(size)] for i in range(size)]


def _with_core(rows: Rows, value: int) -> Rows:
    """Append one component linking every existing component ``value`` times."""
    out = [row + [value] for row in rows]
    out.append([value] * len(rows) + [0])
    return out


def sum_layout(c_left: int, left_comp: int, c_right: int, right_comp: int) -> Tuple[List[int], List[int]]:
    """Positions of the summands' components in a connected sum.

    Non-merged components of the left summand come first, then those of the
    right summand, and the merged component is last.

    Returns:
        Two lists mapping each 0-based summand component to its 0-based position
    """
    total = c_left + c_right - 1
    left_pos: List[int] = []
    nxt = 0
    for i in range(c_left):
        if i == left_comp - 1:
            left_pos.append(total - 1)
        else:
            left_pos.append(nxt)
            nxt += 1
    right_pos: List[int] = []
    for j in range(c_right):
        if j == right_comp - 1:
            right_pos.append(total - 1)
        else:
            right_pos.append(nxt)
            nxt += 1
    return left_pos, right_pos


def cable_layout(c_base: int, comp: int, e: int) -> List[int]:
    """Positions of the surviving base components after cabling component ``comp``.

    The ``e`` strands occupy 0-based positions ``comp - 1 .. comp + e - 2``; the
    entry for ``comp`` itself is its first strand.
    """
    return [i if i < comp - 1 else (comp - 1 if i == comp - 1 else i + e - 1) for i in range(c_base)]


def assemble(spec: LinkSpec) -> Tuple[int, Rows]:
    """Validate ``spec`` and compute its component count and linking matrix.

    Args:
        spec: Constructor tree

    Returns:
        Tuple of (number of components, linking matrix rows)
    """
    if isinstance(spec, TorusLink):
        validate_torus_link(spec.e, spec.p, spec.q)
        return spec.e, _constant_block(spec.e, spec.p * spec.q)
    if isinstance(spec, TorusInSolidTorus):
        validate_torus_in_solid(spec.e, spec.p, spec.q)
        rows = _with_core(_constant_block(spec.e, spec.p * spec.q), spec.p)
        return spec.e + 1, rows
    if isinstance(spec, TorusInThickenedTorus):
        validate_torus_in_thick(spec.e, spec.p, spec.q)
        e = spec.e
        rows = _with_core(_constant_block(e, spec.p * spec.q), spec.p)
        rows = [row + [spec.q] for row in rows]
        rows.append([spec.q] * e + [1, 0])
        rows[e][e + 1] = 1
        return e + 2, rows
    if isinstance(spec, Keychain):
        check_positive("keychain", spec.e)
        return spec.e + 1, _with_core(_constant_block(spec.e, 0), 1)
    if isinstance(spec, ParallelInSolidTorus):
        check_positive("parallel_in_solid", spec.e)
        return spec.e + 1, _with_core(_constant_block(spec.e, spec.k), 1)
    if isinstance(spec, ConnectedSum):
        c_left, left = assemble(spec.left)
        c_right, right = assemble(spec.right)
        ComponentRef(index=spec.left_comp).check(c_left, "sum")
        ComponentRef(index=spec.right_comp).check(c_right, "sum")
        left_pos, right_pos = sum_layout(c_left, spec.left_comp, c_right, spec.right_comp)
        total = c_left + c_right - 1
        rows = [[0] * total for _ in range(total)]
        for i in range(c_left):
            for j in range(c_left):
                if i != j:
                    rows[left_pos[i]][left_pos[j]] = left[i][j]
        for i in range(c_right):
            for j in range(c_right):
                if i != j:
                    rows[right_pos[i]][right_pos[j]] = right[i][j]
        return total, rows
    if isinstance(spec, Cable):
        c_base, base = assemble(spec.base)
        a = ComponentRef(index=spec.comp).check(c_base, "cable")
        validate_cable(spec.e, spec.p, spec.q)
        e = spec.e
        total = c_base + e - 1
        pos = cable_layout(c_base, spec.comp, e)
        strands = range(a, a + e)
        rows = [[0] * total for _ in range(total)]
        for i in range(c_base):
            for j in range(c_base):
                if i == j or a in (i, j):
                    continue
                rows[pos[i]][pos[j]] = base[i][j]
        for s in strands:
            for t in strands:
                if s != t:
                    rows[s][t] = spec.p * spec.q
            for m in range(c_base):
                if m != a:
                    rows[s][pos[m]] = rows[pos[m]][s] = spec.p * base[a][m]
        return total, rows
    if isinstance(spec, Delete):
        c_base, base = assemble(spec.base)
        a = ComponentRef(index=spec.comp).check(c_base, "delete")
        if c_base < 2:
            raise InvalidParameters("delete", "cannot delete the only component of a knot")
        rows = [[x for j, x in enumerate(row) if j != a] for i, row in enumerate(base) if i != a]
        return c_base - 1, rows
    raise InvalidParameters(type(spec).__name__, "unknown constructor")


def count_components(spec: LinkSpec) -> int:
    """Component count computed from leaf contributions alone."""
    if isinstance(spec, TorusLink):
        return spec.e
    if isinstance(spec, (TorusInSolidTorus, Keychain, ParallelInSolidTorus)):
        return spec.e + 1
    if isinstance(spec, TorusInThickenedTorus):
        return spec.e + 2
    if isinstance(spec, ConnectedSum):
        return count_components(spec.left) + count_components(spec.right) - 1
    if isinstance(spec, Cable):
        return count_components(spec.base) + spec.e - 1
    return count_components(spec.base) - 1


def freeze(rows: Rows) -> LinkingMatrix:
    """Turn mutable rows into an immutable linking matrix."""
    return tuple(tuple(row) for row in rows)
