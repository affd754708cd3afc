"""Commutative polynomial algebra over the complex phase-plane pair.

A PhasePoly stores ``sum c[m,n] als^m al^n`` where ``al`` is the complex
coordinate and ``als`` its conjugate, treated as independent variables.
Scaled quadratures Q, P satisfy al = Q + i P exactly, so conversions stay
inside the rational coefficient field.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

from ._terms import TermPoly, add_term
from .exactnum import ExactComplex, Rational, as_rational

ALPHA = "al"
ALPHASTAR = "als"


class PhasePoly(TermPoly):
    """Phase polynomial; keys are (als exponent, al exponent)."""

    __slots__ = ()
    _sym_hi = "als"
    _sym_lo = "al"

    def __mul__(self, other):
        if isinstance(other, PhasePoly):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, PhasePoly):
            return mul(other, self)
        return self.scale(other)

    def conjugate(self) -> "PhasePoly":
        """Complex conjugate of the function: swaps exponents, conjugates coefficients."""
        return PhasePoly._from_raw(
            {(n, m): c.conjugate() for (m, n), c in self._terms.items()}
        )


AL = PhasePoly.monomial(0, 1)
ALS = PhasePoly.monomial(1, 0)


def add(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    return f + g


def mul(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    acc: dict = {}
    for (m, n), c in f.items():
        for (p, q), d in g.items():
            add_term(acc, (m + p, n + q), c * d)
    return PhasePoly._from_raw(acc)


def deriv(f: PhasePoly, var: str) -> PhasePoly:
    acc: dict = {}
    if var == ALPHA:
        for (m, n), c in f.items():
            if n:
                add_term(acc, (m, n - 1), c * n)
    elif var == ALPHASTAR:
        for (m, n), c in f.items():
            if m:
                add_term(acc, (m - 1, n), c * m)
    else:
        raise ValueError(f"unknown variable {var!r}")
    return PhasePoly._from_raw(acc)


def poisson(f: PhasePoly, g: PhasePoly, hbar=1) -> PhasePoly:
    """Poisson bracket (1/(i hbar)) (df/dal dg/dals - dg/dal df/dals)."""
    hb = as_rational(hbar)
    if not hb:
        raise ValueError("hbar must be nonzero")
    pref = ExactComplex(0, -1 / hb)  # 1/(i hbar)
    return (
        mul(deriv(f, ALPHA), deriv(g, ALPHASTAR))
        - mul(deriv(g, ALPHA), deriv(f, ALPHASTAR))
    ).scale(pref)


def eval_at(f: PhasePoly, alpha: complex) -> complex:
    """Evaluate at a point of the complex plane (lossy: double precision)."""
    alpha = complex(alpha)
    astar = alpha.conjugate()
    # Horner in al inside Horner in als
    by_m: dict = {}
    for (m, n), c in f.items():
        by_m.setdefault(m, {})[n] = c.to_complex()
    total = 0.0 + 0.0j
    for m in sorted(by_m, reverse=True):
        inner = by_m[m]
        acc = 0.0 + 0.0j
        for n in range(max(inner), -1, -1):
            acc = acc * alpha + inner.get(n, 0.0)
        total = total + acc * astar**m
    return total


_HALF = ExactComplex(Rational(1, 2))
_IHALF = ExactComplex(0, Rational(1, 2))
# Q = (al + als)/2, P = (al - als)/(2i); inversely al = Q + iP, als = Q - iP.
Q_POLY = PhasePoly({(1, 0): _HALF, (0, 1): _HALF})
P_POLY = PhasePoly({(1, 0): _IHALF, (0, 1): -_IHALF})


def quad_to_alpha(qp_terms) -> PhasePoly:
    """Convert a polynomial in scaled quadratures to phase form.

    qp_terms maps (Q exponent, P exponent) -> coefficient.
    """
    items = qp_terms.items() if hasattr(qp_terms, "items") else qp_terms
    out = PhasePoly.zero()
    for (k, l), c in items:
        if not isinstance(c, ExactComplex):
            c = ExactComplex(c)
        term = PhasePoly.one()
        for _ in range(k):
            term = mul(term, Q_POLY)
        for _ in range(l):
            term = mul(term, P_POLY)
        out = out + term.scale(c)
    return out


def alpha_to_quad(f: PhasePoly) -> dict:
    """Inverse of quad_to_alpha; returns {(Q exponent, P exponent): ExactComplex}."""
    # al = Q + iP, als = Q - iP as polynomials over (Q, P) exponent pairs
    one = ExactComplex(1)
    i = ExactComplex(0, 1)
    al_qp = {(1, 0): one, (0, 1): i}
    als_qp = {(1, 0): one, (0, 1): -i}

    def qp_mul(t1, t2):
        acc: dict = {}
        for (a, b), c in t1.items():
            for (p, q), d in t2.items():
                add_term(acc, (a + p, b + q), c * d)
        return acc

    def qp_pow(t, e):
        acc = {(0, 0): one}
        for _ in range(e):
            acc = qp_mul(acc, t)
        return acc

    out: dict = {}
    for (m, n), c in f.items():
        for key, d in qp_mul(qp_pow(als_qp, m), qp_pow(al_qp, n)).items():
            add_term(out, key, c * d)
    return out


@dataclass(frozen=True)
class QuadFrame:
    """Physical frame (hbar, scaling zeta) behind the scaled quadratures.

    The symbolic layer works in Q = zeta q / sqrt(2 hbar), P = p / (zeta
    sqrt(2 hbar)), which keeps every conversion rational; this record holds
    the (irrational, hence float-only) factors back to physical q, p.
    """

    hbar: Rational = Rational(1)
    zeta: Rational = Rational(1)

    def __post_init__(self):
        object.__setattr__(self, "hbar", as_rational(self.hbar))
        object.__setattr__(self, "zeta", as_rational(self.zeta))
        if self.hbar <= 0 or self.zeta <= 0:
            raise ValueError("hbar and zeta must be positive")

    def q_factor(self) -> float:
        """q = q_factor * Q (double precision)."""
        return math.sqrt(2 * float(self.hbar)) / float(self.zeta)

    def p_factor(self) -> float:
        """p = p_factor * P (double precision)."""
        return math.sqrt(2 * float(self.hbar)) * float(self.zeta)
