"""Transforms between operator and phase polynomials, and both star products.

The ordering transform sends the s-ordered basis monomial {ad^m a^n}_s to
als^m al^n; its inverse is s-ordered substitution.  Transporting products
across the transform yields two terminating bidifferential series: the
noncommutative star product on phase polynomials and its commutative
operator-side counterpart.  One-sided Bopp evaluations of both products,
parameter shifts, deformed brackets, and the canonical-quantization
obstruction witness live here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import ccr
from . import phase
from ._terms import add_term
from .ccr import OperatorPoly, LEFT, RIGHT
from .exactnum import ExactComplex, Rational, as_rational
from .phase import PhasePoly


@dataclass(frozen=True)
class SContext:
    """Ordering parameter s (real rational) and positive rational hbar."""

    s: Rational
    hbar: Rational = Rational(1)

    def __post_init__(self):
        object.__setattr__(self, "s", as_rational(self.s))
        object.__setattr__(self, "hbar", as_rational(self.hbar))
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")

    def bracket_prefactor(self) -> ExactComplex:
        """1/(i hbar) as an exact scalar."""
        return ExactComplex(0, -1 / self.hbar)


def cg(F: OperatorPoly, ctx: SContext) -> PhasePoly:
    """s-parameterized symbol of an operator polynomial.

    Decomposes F in the s-ordered basis and reads the coefficients off as a
    phase polynomial, so {ad^m a^n}_s maps to als^m al^n exactly.
    """
    return PhasePoly(ccr.s_basis_decompose(F, ctx.s))


def icg(f: PhasePoly, ctx: SContext) -> OperatorPoly:
    """s-ordered operator substitution of a phase polynomial (inverse of cg)."""
    out: dict = {}
    for (m, n), c in f.items():
        for key, q in ccr._s_order_terms(m, n, ctx.s):
            if q:
                add_term(out, key, c * ExactComplex(q))
    return OperatorPoly._from_raw(out)


def _deriv_of(p, var):
    if isinstance(p, PhasePoly):
        return phase.deriv(p, var)
    return ccr.formal_deriv(p, var)


def _series(f, g, c1, c2, d_first, d_second, product, poly_cls, max_order):
    """sum_{j,k} c1^j c2^k / (j! k!) * product(j,k-derivatives of f and g).

    d_first = (variable on f, variable on g) for the j direction, d_second
    likewise for k.  Terminates because repeated derivatives of polynomials
    vanish; max_order additionally caps the total derivative order j+k.
    """
    # Both series differentiate f by its low variable and g by its high one
    # in the j direction, and the other way around in the k direction.
    f_hi, f_lo = f.max_exponents()
    g_hi, g_lo = g.max_exponents()
    var_f1, var_g1 = d_first
    var_f2, var_g2 = d_second
    jmax = min(f_lo, g_hi) if c1 else 0
    kmax = min(f_hi, g_lo) if c2 else 0

    acc = poly_cls.zero()
    fj, gj = f, g
    for j in range(jmax + 1):
        if fj.is_zero() or gj.is_zero():
            break
        fjk, gjk = fj, gj
        for k in range(kmax + 1):
            if max_order is not None and j + k > max_order:
                break
            if fjk.is_zero() or gjk.is_zero():
                break
            w = (c1**j) * (c2**k) / (math.factorial(j) * math.factorial(k))
            if w:
                acc = acc + product(fjk, gjk).scale(ExactComplex(w))
            fjk = _deriv_of(fjk, var_f2)
            gjk = _deriv_of(gjk, var_g2)
        fj = _deriv_of(fj, var_f1)
        gj = _deriv_of(gj, var_g1)
    return acc


def star(f: PhasePoly, g: PhasePoly, ctx: SContext, max_order: int | None = None) -> PhasePoly:
    """Noncommutative product on symbols matching operator multiplication.

    f star g = sum_{j,k} ((s+1)/2)^j ((s-1)/2)^k / (j! k!)
               (d_al^j d_als^k f) (d_als^j d_al^k g).
    max_order caps j+k, the total derivative order (the order in hbar).
    """
    s = ctx.s
    return _series(
        f, g,
        (s + 1) / 2, (s - 1) / 2,
        (phase.ALPHA, phase.ALPHASTAR),
        (phase.ALPHASTAR, phase.ALPHA),
        phase.mul, PhasePoly, max_order,
    )


def hstar(F: OperatorPoly, G: OperatorPoly, ctx: SContext, max_order: int | None = None) -> OperatorPoly:
    """Commutative operator-side product matching multiplication of symbols.

    F hstar G = sum_{j,k} (-(s+1)/2)^j (-(s-1)/2)^k / (j! k!)
                (d_a^j d_ad^k F) * (d_ad^j d_a^k G)
    with normal-ordered operator products; equals icg(cg(F) cg(G)).
    """
    s = ctx.s
    return _series(
        F, G,
        -(s + 1) / 2, -(s - 1) / 2,
        (ccr.A, ccr.ADAG),
        (ccr.ADAG, ccr.A),
        ccr.multiply, OperatorPoly, max_order,
    )


def star_commutator(f: PhasePoly, g: PhasePoly, ctx: SContext, max_order: int | None = None) -> PhasePoly:
    """(1/(i hbar)) (f star g - g star f); its order-1 truncation is the Poisson bracket."""
    diff = star(f, g, ctx, max_order) - star(g, f, ctx, max_order)
    return diff.scale(ctx.bracket_prefactor())


def deformed_bracket(F: OperatorPoly, G: OperatorPoly, ctx: SContext) -> OperatorPoly:
    """Operator-side image of the Poisson bracket: a deformation of the commutator.

    (1/(i hbar)) (dF/da hstar dG/dad - dF/dad hstar dG/da).
    """
    out = hstar(ccr.formal_deriv(F, ccr.A), ccr.formal_deriv(G, ccr.ADAG), ctx) - hstar(
        ccr.formal_deriv(F, ccr.ADAG), ccr.formal_deriv(G, ccr.A), ctx
    )
    return out.scale(ctx.bracket_prefactor())


def _exp_mixed_series(p, theta, var_hi, var_lo):
    """exp(theta * d_hi d_lo) applied as a terminating series."""
    acc = p
    cur = p
    j = 1
    while True:
        cur = _deriv_of(_deriv_of(cur, var_hi), var_lo)
        if cur.is_zero():
            return acc
        acc = acc + cur.scale(ExactComplex(theta**j / math.factorial(j)))
        j += 1


def shift_phase(f: PhasePoly, from_s, to_s) -> PhasePoly:
    """Re-express a symbol at another ordering parameter.

    shift_phase(cg(F, t), t, s) == cg(F, s).  The symbol pairs with the
    kernel at the negated parameter, so the mixed-derivative exponent
    carries +(to-from)/2 (opposite sign to the operator-side shift).
    """
    theta = (as_rational(to_s) - as_rational(from_s)) / 2
    if not theta:
        return f
    return _exp_mixed_series(f, theta, phase.ALPHASTAR, phase.ALPHA)


def shift_operator(F: OperatorPoly, from_s, to_s) -> OperatorPoly:
    """Re-express an s-ordered quantization at another parameter.

    shift_operator(icg(f, t), t, s) == icg(f, s); exponent -(to-from)/2.
    """
    theta = -(as_rational(to_s) - as_rational(from_s)) / 2
    if not theta:
        return F
    return _exp_mixed_series(F, theta, ccr.ADAG, ccr.A)


def apply_hsbs(var: str, side: str, X: OperatorPoly, ctx: SContext) -> OperatorPoly:
    """One operator-side Bopp superoperator (ladder multiplication plus a
    scaled formal derivative).  All four (variable, side) choices commute."""
    s = ctx.s
    if side == RIGHT:
        if var == ccr.A:
            return ccr.multiply(ccr.A_OP, X) - ccr.formal_deriv(X, ccr.ADAG).scale(
                ExactComplex((s + 1) / 2))
        if var == ccr.ADAG:
            return ccr.multiply(ccr.AD_OP, X) - ccr.formal_deriv(X, ccr.A).scale(
                ExactComplex((s - 1) / 2))
    elif side == LEFT:
        if var == ccr.A:
            return ccr.multiply(X, ccr.A_OP) - ccr.formal_deriv(X, ccr.ADAG).scale(
                ExactComplex((s - 1) / 2))
        if var == ccr.ADAG:
            return ccr.multiply(X, ccr.AD_OP) - ccr.formal_deriv(X, ccr.A).scale(
                ExactComplex((s + 1) / 2))
    raise ValueError(f"unknown variable/side {(var, side)!r}")


def hsbs_apply(f: PhasePoly, G: OperatorPoly, ctx: SContext, side: str = RIGHT) -> OperatorPoly:
    """Evaluate icg(f) hstar G without transforming f.

    Each monomial als^m al^n of f becomes m creation-type and n
    annihilation-type Bopp superoperators applied to G; they commute, so
    the application order is immaterial.
    """
    out = OperatorPoly.zero()
    for (m, n), c in f.items():
        X = G
        for _ in range(n):
            X = apply_hsbs(ccr.A, side, X, ctx)
        for _ in range(m):
            X = apply_hsbs(ccr.ADAG, side, X, ctx)
        out = out + X.scale(c)
    return out


def apply_psbo(var: str, side: str, g: PhasePoly, ctx: SContext) -> PhasePoly:
    """One phase-side Bopp operator (coordinate multiplication plus a scaled
    derivative).  Within one side the two variables obey the ladder CCR."""
    s = ctx.s
    if side == RIGHT:
        if var == phase.ALPHA:
            return phase.mul(phase.AL, g) + phase.deriv(g, phase.ALPHASTAR).scale(
                ExactComplex((s + 1) / 2))
        if var == phase.ALPHASTAR:
            return phase.mul(phase.ALS, g) + phase.deriv(g, phase.ALPHA).scale(
                ExactComplex((s - 1) / 2))
    elif side == LEFT:
        if var == phase.ALPHA:
            return phase.mul(phase.AL, g) + phase.deriv(g, phase.ALPHASTAR).scale(
                ExactComplex((s - 1) / 2))
        if var == phase.ALPHASTAR:
            return phase.mul(phase.ALS, g) + phase.deriv(g, phase.ALPHA).scale(
                ExactComplex((s + 1) / 2))
    raise ValueError(f"unknown variable/side {(var, side)!r}")


def psbo_apply(F: OperatorPoly, g: PhasePoly, ctx: SContext, side: str = RIGHT) -> PhasePoly:
    """Evaluate cg(F) star g through phase-side Bopp operators.

    Right route: F's normal-form word ad^m a^n becomes right-acting Bopp
    operators applied to g, annihilation block innermost; g never gets
    transformed.  Left route (the mirrored evaluation): left-acting Bopp
    operators append letters on the right of the star word, so the
    recovered word of icg(g) is applied to the symbol of F in reading
    order.  Both agree because the Bopp operators share the word algebra.
    """
    out = PhasePoly.zero()
    if side == RIGHT:
        for (m, n), c in F.items():
            X = g
            for _ in range(n):
                X = apply_psbo(phase.ALPHA, side, X, ctx)
            for _ in range(m):
                X = apply_psbo(phase.ALPHASTAR, side, X, ctx)
            out = out + X.scale(c)
        return out
    if side != LEFT:
        raise ValueError(f"unknown side {side!r}")
    f_sym = cg(F, ctx)
    for (p, q), c in icg(g, ctx).items():
        X = f_sym
        for _ in range(p):
            X = apply_psbo(phase.ALPHASTAR, side, X, ctx)
        for _ in range(q):
            X = apply_psbo(phase.ALPHA, side, X, ctx)
        out = out + X.scale(c)
    return out


def odot(F: OperatorPoly, G: OperatorPoly) -> OperatorPoly:
    """Symmetric-ordering product: the operator-side star at s = 0.

    On symmetric-ordered quadrature monomials it concatenates exponents:
    {Q^k P^l}_0 odot {Q^m P^n}_0 = {Q^(k+m) P^(l+n)}_0.
    """
    return hstar(F, G, SContext(0))


def nogo_witness(f: PhasePoly, g: PhasePoly, ctx: SContext) -> OperatorPoly:
    """Residual icg({f,g}) - (1/(i hbar)) [icg f, icg g].

    Zero exactly when the pair quantizes canonically at this s; any pair of
    total degree <= 2 gives zero, while (al^3, als^3) is nonzero at every s.
    """
    lhs = icg(phase.poisson(f, g, ctx.hbar), ctx)
    rhs = ccr.commutator(icg(f, ctx), icg(g, ctx)).scale(ctx.bracket_prefactor())
    return lhs - rhs
