"""Operator algebra over the ladder pair in CCR normal form.

An OperatorPoly stores the unique normal-form expansion
``sum c[m,n] ad^m a^n`` (every creation operator left of every
annihilation operator, via [a, ad] = 1), so term-map equality is
operator equality.  All coefficients are exact.
"""

from __future__ import annotations

import math
from functools import lru_cache

from ._terms import TermPoly, add_term
from .exactnum import ExactComplex, ONE, Rational, as_rational

A = "a"
ADAG = "ad"
LEFT = "left"
RIGHT = "right"


class OperatorPoly(TermPoly):
    """Normal-form operator polynomial; keys are (ad exponent, a exponent)."""

    __slots__ = ()
    _sym_hi = "ad"
    _sym_lo = "a"

    @classmethod
    def identity(cls):
        return cls.one()

    def __mul__(self, other):
        if isinstance(other, OperatorPoly):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, OperatorPoly):
            return multiply(other, self)
        return self.scale(other)

    def dagger(self) -> "OperatorPoly":
        """Hermitian adjoint: (ad^m a^n)^dag = ad^n a^m with conjugated coefficients."""
        return OperatorPoly._from_raw(
            {(n, m): c.conjugate() for (m, n), c in self._terms.items()}
        )


A_OP = OperatorPoly.monomial(0, 1)
AD_OP = OperatorPoly.monomial(1, 0)


def normal_order(word, coeff=ONE) -> OperatorPoly:
    """Normal-order a product word of ladder letters ('a' / 'ad').

    Folds letters left to right using a^n * ad = ad * a^n + n a^(n-1),
    which is [a, ad] = 1 applied exhaustively.
    """
    if not isinstance(coeff, ExactComplex):
        coeff = ExactComplex(coeff)
    acc = {(0, 0): coeff} if coeff else {}
    for letter in word:
        if letter == A:
            acc = {(m, n + 1): c for (m, n), c in acc.items()}
        elif letter == ADAG:
            nxt: dict = {}
            for (m, n), c in acc.items():
                add_term(nxt, (m + 1, n), c)
                if n:
                    add_term(nxt, (m, n - 1), c * n)
            acc = nxt
        else:
            raise ValueError(f"unknown ladder letter {letter!r}")
    return OperatorPoly._from_raw(acc)


@lru_cache(maxsize=None)
def _reorder(n: int, p: int):
    """a^n ad^p = sum_k k! C(n,k) C(p,k) ad^(p-k) a^(n-k); integer weights."""
    return tuple(
        (k, math.comb(n, k) * math.comb(p, k) * math.factorial(k))
        for k in range(min(n, p) + 1)
    )


def multiply(F: OperatorPoly, G: OperatorPoly) -> OperatorPoly:
    """Normal form of the operator product F * G."""
    acc: dict = {}
    for (m, n), c in F.items():
        for (p, q), d in G.items():
            base = c * d
            for k, w in _reorder(n, p):
                add_term(acc, (m + p - k, n + q - k), base * w if w != 1 else base)
    return OperatorPoly._from_raw(acc)


def commutator(F: OperatorPoly, G: OperatorPoly) -> OperatorPoly:
    return multiply(F, G) - multiply(G, F)


def formal_deriv(F: OperatorPoly, var: str) -> OperatorPoly:
    """Term-wise formal derivative of the normal form with respect to a or ad."""
    acc: dict = {}
    if var == A:
        for (m, n), c in F.items():
            if n:
                add_term(acc, (m, n - 1), c * n)
    elif var == ADAG:
        for (m, n), c in F.items():
            if m:
                add_term(acc, (m - 1, n), c * m)
    else:
        raise ValueError(f"unknown variable {var!r}")
    return OperatorPoly._from_raw(acc)


def adjoint_deriv(F: OperatorPoly, var: str, side: str) -> OperatorPoly:
    """Derivative superoperator realized as a commutator.

    right/a: -[ad, F]; right/ad: [a, F]; left/a: [F, ad]; left/ad: -[F, a].
    Equal to formal_deriv(F, var) for every polynomial F (property-tested).
    """
    if side == RIGHT:
        if var == A:
            return -commutator(AD_OP, F)
        if var == ADAG:
            return commutator(A_OP, F)
    elif side == LEFT:
        if var == A:
            return commutator(F, AD_OP)
        if var == ADAG:
            return -commutator(F, A_OP)
    raise ValueError(f"unknown variable/side {(var, side)!r}")


@lru_cache(maxsize=None)
def _s_order_terms(m: int, n: int, s: Rational):
    c = (1 - s) / 2
    out = []
    for k in range(min(m, n) + 1):
        w = math.comb(m, k) * math.comb(n, k) * math.factorial(k)
        out.append(((m - k, n - k), w * c**k))
    return tuple(out)


def s_order_expand(m: int, n: int, s) -> OperatorPoly:
    """Normal form of the s-ordered monomial {ad^m a^n}_s.

    {ad^m a^n}_s = sum_k k! C(m,k) C(n,k) ((1-s)/2)^k ad^(m-k) a^(n-k);
    s = 1, 0, -1 give normal, symmetric, and antinormal ordering.
    """
    s = as_rational(s)
    return OperatorPoly._from_raw(
        {key: ExactComplex(q) for key, q in _s_order_terms(m, n, s) if q}
    )


def s_basis_decompose(F: OperatorPoly, s) -> dict:
    """Coefficients d[m,n] with F = sum d[m,n] {ad^m a^n}_s.

    The s-ordered basis is triangular in total degree (the k-th correction
    drops the degree by 2k), so elimination from the top degree down is
    exact and unique; recomposition via s_order_expand restores F.
    """
    s = as_rational(s)
    residual = dict(F.items())
    out: dict = {}
    for d in range(F.degree(), -1, -1):
        level = [key for key in residual if key[0] + key[1] == d]
        for key in level:
            c = residual.pop(key)
            out[key] = c
            for key2, q in _s_order_terms(key[0], key[1], s)[1:]:
                add_term(residual, key2, c * ExactComplex(-q))
    return out
