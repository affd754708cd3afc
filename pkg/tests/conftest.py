"""Shared independent oracles and hypothesis strategies for the test suite."""

from __future__ import annotations

import hypothesis.strategies as st
import sympy as sp

from cgstar.ccr import OperatorPoly
from cgstar.exactnum import ExactComplex, ONE
from cgstar.phase import PhasePoly

AL_SYM, ALS_SYM = sp.symbols("al als")


def brute_normal_order(word, coeff=ONE) -> OperatorPoly:
    """Exponential-time word rewriting: replace one (a, ad) adjacency at a time.

    Independent of the library's folding algorithm; terminates because each
    rewrite either shortens the word or moves an 'ad' left.
    """
    acc = {}
    stack = [(tuple(word), coeff)]
    while stack:
        w, c = stack.pop()
        for i in range(len(w) - 1):
            if w[i] == "a" and w[i + 1] == "ad":
                stack.append((w[:i] + ("ad", "a") + w[i + 2:], c))
                stack.append((w[:i] + w[i + 2:], c))
                break
        else:
            key = (w.count("ad"), w.count("a"))
            acc[key] = acc.get(key, ExactComplex(0)) + c
    return OperatorPoly(acc)


def _coeff_to_sympy(c: ExactComplex):
    return sp.Rational(str(c.re)) + sp.I * sp.Rational(str(c.im))


def phase_to_sympy(f: PhasePoly):
    expr = sp.Integer(0)
    for (m, n), c in f.items():
        expr += _coeff_to_sympy(c) * ALS_SYM**m * AL_SYM**n
    return sp.expand(expr)


def sympy_star(fe, ge, s):
    """Star product via sympy differentiation (independent of the library path)."""
    s = sp.Rational(str(s))
    c1, c2 = (s + 1) / 2, (s - 1) / 2
    out = sp.Integer(0)
    for j in range(9):
        for k in range(9):
            term = (
                c1**j * c2**k / (sp.factorial(j) * sp.factorial(k))
                * sp.diff(fe, AL_SYM, j, ALS_SYM, k)
                * sp.diff(ge, ALS_SYM, j, AL_SYM, k)
            )
            out += term
    return sp.expand(out)


def sympy_poisson(fe, ge, hbar=1):
    hb = sp.Rational(str(hbar))
    return sp.expand(
        (sp.diff(fe, AL_SYM) * sp.diff(ge, ALS_SYM)
         - sp.diff(ge, AL_SYM) * sp.diff(fe, ALS_SYM)) / (sp.I * hb)
    )


# hypothesis strategies for small exact polynomials
_coeff = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).filter(lambda t: t != (0, 0))
_key = st.tuples(st.integers(0, 3), st.integers(0, 3))


def _to_terms(d):
    return {k: ExactComplex(*v) for k, v in d.items()}


phase_polys = st.dictionaries(_key, _coeff, max_size=4).map(lambda d: PhasePoly(_to_terms(d)))
operator_polys = st.dictionaries(_key, _coeff, max_size=4).map(
    lambda d: OperatorPoly(_to_terms(d))
)
words = st.lists(st.sampled_from(["a", "ad"]), max_size=7).map(tuple)
