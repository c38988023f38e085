"""Exponent expressions for dot-equality classes of torsion functions.

An exponent expression is ``constant + sum_j coeff_j * |<form_j, n>|`` where
``n`` is the vector of multi-link coefficients.
"""

from functools import reduce
from math import gcd
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator

from l2alex.errors import DimensionMismatch, require_length

Form = Tuple[int, ...]
Matrix = Sequence[Sequence[int]]


class Term(BaseModel):
    """One summand ``coeff * |<form, n>|``."""

    model_config = ConfigDict(frozen=True)

    coeff: int
    form: Form


TermLike = Union[Term, Dict[str, Any], Tuple[int, Sequence[int]]]


def primitive_form(form: Sequence[int]) -> Tuple[int, Form]:
    """Split an integer vector into its content and a primitive representative.

    The representative has content gcd 1 and a positive leading nonzero entry,
    so ``|<form, n>| == content * |<primitive, n>|``.

    Args:
        form: Nonzero integer vector

    Returns:
        Tuple of (content, primitive form)
    """
    content = reduce(gcd, (abs(x) for x in form), 0)
    if content == 0:
        return 0, tuple(form)
    primitive = [x // content for x in form]
    lead = next(x for x in primitive if x != 0)
    if lead < 0:
        primitive = [-x for x in primitive]
    return content, tuple(primitive)


def _unpack(term: TermLike) -> Tuple[int, Sequence[int]]:
    if isinstance(term, Term):
        return term.coeff, term.form
    if isinstance(term, dict):
        return int(term["coeff"]), term["form"]
    coeff, form = term
    return int(coeff), form


def canonicalize_terms(nvars: int, terms: Iterable[TermLike]) -> Tuple[Term, ...]:
    """Bring a term list to canonical form.

    Forms become primitive with positive leading entry, proportional forms are
    merged, zero forms and zero coefficients are dropped and the result is
    sorted lexicographically by form.

    Args:
        nvars: Number of coefficient variables
        terms: Terms as ``Term`` objects, dicts or ``(coeff, form)`` pairs

    Returns:
        Canonical tuple of terms
    """
    merged: Dict[Form, int] = {}
    for term in terms:
        coeff, form = _unpack(term)
        require_length(form, nvars, "linear form")
        content, primitive = primitive_form([int(x) for x in form])
        if content == 0 or coeff == 0:
            continue
        merged[primitive] = merged.get(primitive, 0) + coeff * content
    return tuple(
        Term(coeff=coeff, form=form)
        for form, coeff in sorted(merged.items())
        if coeff != 0
    )


class ExponentExpr(BaseModel):
    """Canonical exponent ``constant + sum coeff * |<form, n>|`` over ``nvars`` variables."""

    model_config = ConfigDict(frozen=True)

    nvars: int
    terms: Tuple[Term, ...] = ()
    constant: int = 0

    @model_validator(mode="before")
    @classmethod
    def canonicalize(cls, data: Any) -> Any:
        """Canonicalize the term list on construction."""
        if isinstance(data, dict) and "terms" in data:
            data = dict(data)
            data["terms"] = canonicalize_terms(int(data["nvars"]), data["terms"])
        return data

    @classmethod
    def zero(cls, nvars: int = 0) -> "ExponentExpr":
        """The exponent 0."""
        return cls(nvars=nvars)

    @classmethod
    def const(cls, value: int, nvars: int = 0) -> "ExponentExpr":
        """A constant exponent."""
        return cls(nvars=nvars, constant=value)

    @classmethod
    def abs_form(cls, form: Sequence[int], coeff: int = 1) -> "ExponentExpr":
        """The single-term exponent ``coeff * |<form, n>|``."""
        return cls(nvars=len(form), terms=[(coeff, tuple(form))])

    @property
    def is_constant(self) -> bool:
        return not self.terms

    def _check_same(self, other: "ExponentExpr") -> None:
        if other.nvars != self.nvars:
            raise DimensionMismatch(self.nvars, other.nvars, "exponent variables")

    def __add__(self, other: "ExponentExpr") -> "ExponentExpr":
        self._check_same(other)
        return ExponentExpr(
            nvars=self.nvars,
            terms=self.terms + other.terms,
            constant=self.constant + other.constant,
        )

    def __neg__(self) -> "ExponentExpr":
        return self.scale(-1)

    def __sub__(self, other: "ExponentExpr") -> "ExponentExpr":
        return self + (-other)

    def scale(self, factor: int) -> "ExponentExpr":
        """Multiply every coefficient and the constant by ``factor``."""
        return ExponentExpr(
            nvars=self.nvars,
            terms=[(t.coeff * factor, t.form) for t in self.terms],
            constant=self.constant * factor,
        )

    def substitute(self, matrix: Matrix, new_nvars: int) -> "ExponentExpr":
        """Substitute ``n = M m`` for the coefficient vector.

        Args:
            matrix: ``nvars x new_nvars`` integer matrix, one row per old variable
            new_nvars: Number of variables after substitution

        Returns:
            Exponent over the new variables
        """
        require_length(matrix, self.nvars, "substitution rows")
        for row in matrix:
            require_length(row, new_nvars, "substitution row")
        terms: List[Tuple[int, Form]] = []
        for term in self.terms:
            new_form = tuple(
                sum(term.form[i] * matrix[i][j] for i in range(self.nvars))
                for j in range(new_nvars)
            )
            terms.append((term.coeff, new_form))
        return ExponentExpr(nvars=new_nvars, terms=terms, constant=self.constant)

    def widen(self, nvars: int) -> "ExponentExpr":
        """Read a constant exponent over ``nvars`` variables."""
        if not self.is_constant:
            raise DimensionMismatch(self.nvars, nvars, "exponent variables")
        return ExponentExpr(nvars=nvars, constant=self.constant)

    def evaluate(self, n: Sequence[int]) -> int:
        """Evaluate ``E(n)`` exactly."""
        require_length(n, self.nvars, "coefficient vector")
        return self.constant + sum(
            t.coeff * abs(sum(a * x for a, x in zip(t.form, n))) for t in self.terms
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "nvars": self.nvars,
            "constant": self.constant,
            "terms": [{"coeff": t.coeff, "form": list(t.form)} for t in self.terms],
        }

    def __str__(self) -> str:
        from l2alex.utils.formatting import format_exponent

        return format_exponent(self)


def unit_vector(index: int, nvars: int) -> List[int]:
    """The 0-based standard basis vector ``e_index`` of length ``nvars``."""
    return [1 if i == index else 0 for i in range(nvars)]


def identity_matrix(nvars: int) -> List[List[int]]:
    """Rows of the nvars by nvars identity matrix."""
    return [unit_vector(i, nvars) for i in range(nvars)]
