"""Shared hypothesis strategies for algebra tests."""

from fractions import Fraction

import hypothesis.strategies as st

from groebnerkit.order import MonomialOrder
from groebnerkit.ring import Monomial, Polynomial, VariableContext

CTX_XY = VariableContext(["x", "y"])
CTX_XYZ = VariableContext(["x", "y", "z"])
CTX_T = VariableContext(["t"])


def rationals(max_magnitude=30, max_denominator=12):
    return st.builds(
        Fraction,
        st.integers(-max_magnitude, max_magnitude),
        st.integers(1, max_denominator),
    )


def nonzero_rationals(max_magnitude=30, max_denominator=12):
    return rationals(max_magnitude, max_denominator).filter(lambda q: q != 0)


def monomials(nvars, max_exponent=4):
    return st.builds(
        Monomial, st.tuples(*[st.integers(0, max_exponent)] * nvars)
    )


def polynomials(ctx=CTX_XY, max_terms=5, max_exponent=4, **coeff_kwargs):
    return st.builds(
        lambda terms: Polynomial(ctx, terms),
        st.dictionaries(
            monomials(len(ctx), max_exponent),
            rationals(**coeff_kwargs),
            max_size=max_terms,
        ),
    )


def nonzero_polynomials(ctx=CTX_XY, **kwargs):
    return polynomials(ctx, **kwargs).filter(lambda p: not p.is_zero())


def orders():
    return st.sampled_from(list(MonomialOrder))
