"""Hypothesis strategies for exponents and constructor trees."""

from hypothesis import strategies as st

from l2alex.checks.runner import random_spec
from l2alex.models.exponent import ExponentExpr


@st.composite
def exponents(draw, max_vars=4, max_terms=5, positive=False, with_constant=True):
    nvars = draw(st.integers(1, max_vars))
    coeff = st.integers(1, 5) if positive else st.integers(-5, 5)
    form = st.lists(st.integers(-3, 3), min_size=nvars, max_size=nvars)
    terms = draw(st.lists(st.tuples(coeff, form), max_size=max_terms))
    constant = draw(st.integers(-3, 3)) if with_constant else 0
    return ExponentExpr(nvars=nvars, terms=terms, constant=constant)


def seminorms(max_vars=3, max_terms=4):
    return exponents(max_vars=max_vars, max_terms=max_terms, positive=True, with_constant=False)


@st.composite
def vectors(draw, nvars, bound=6):
    return draw(st.lists(st.integers(-bound, bound), min_size=nvars, max_size=nvars))


link_specs = st.builds(random_spec, st.randoms(use_true_random=False))
