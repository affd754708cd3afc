"""Transforms, star products, Bopp evaluations, shifts, and the no-go witness."""

import random

import pytest
import sympy as sp
from hypothesis import given, settings

from conftest import phase_polys, phase_to_sympy, sympy_star
from cgstar import ccr, phase
from cgstar import correspondence as corr
from cgstar.ccr import AD_OP, A_OP, LEFT, RIGHT, OperatorPoly
from cgstar.correspondence import SContext
from cgstar.exactnum import ExactComplex, Rational
from cgstar.phase import AL, ALS, PhasePoly
from cgstar.randpoly import (
    random_hermitian_operator_poly,
    random_operator_poly,
    random_phase_poly,
)

S_SET = [Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)]
CTXS = [SContext(s) for s in S_SET]


def test_cg_of_s_ordered_basis_is_plain_monomial():
    for ctx in CTXS:
        basis = ccr.s_order_expand(1, 1, ctx.s)
        assert corr.cg(basis, ctx) == PhasePoly.monomial(1, 1)


def test_cg_of_antinormal_pair():
    for ctx in CTXS:
        got = corr.cg(ccr.multiply(A_OP, AD_OP), ctx)
        want = PhasePoly({(1, 1): 1, (0, 0): ExactComplex((1 + ctx.s) / 2)})
        assert got == want


def test_cg_identity():
    for ctx in CTXS:
        assert corr.cg(OperatorPoly.identity(), ctx) == PhasePoly.one()


def test_icg_examples():
    for ctx in CTXS:
        got = corr.icg(PhasePoly.monomial(1, 1), ctx)
        assert got == OperatorPoly({(1, 1): 1, (0, 0): ExactComplex((1 - ctx.s) / 2)})
        assert corr.icg(AL, ctx) == A_OP
    assert corr.icg(PhasePoly.monomial(2, 2), SContext(1)) == OperatorPoly.monomial(2, 2)


def test_roundtrips_random():
    rng = random.Random(10)
    for ctx in CTXS:
        for _ in range(20):
            F = random_operator_poly(rng, 8)
            assert corr.icg(corr.cg(F, ctx), ctx) == F
            f = random_phase_poly(rng, 8)
            assert corr.cg(corr.icg(f, ctx), ctx) == f


def test_star_coordinate_pairs():
    for ctx in CTXS:
        s = ctx.s
        assert corr.star(AL, ALS, ctx) == PhasePoly(
            {(1, 1): 1, (0, 0): ExactComplex((s + 1) / 2)}
        )
        assert corr.star(ALS, AL, ctx) == PhasePoly(
            {(1, 1): 1, (0, 0): ExactComplex((s - 1) / 2)}
        )
        f = random_phase_poly(random.Random(11), 5)
        assert corr.star(PhasePoly.one(), f, ctx) == f


def test_star_noncommutativity_witness():
    for ctx in CTXS:
        diff = corr.star(AL, ALS, ctx) - corr.star(ALS, AL, ctx)
        assert diff == PhasePoly.one()


def test_star_homomorphism_random():
    rng = random.Random(12)
    for ctx in CTXS:
        for _ in range(15):
            F = random_operator_poly(rng, 6)
            G = random_operator_poly(rng, 6)
            assert corr.star(corr.cg(F, ctx), corr.cg(G, ctx), ctx) == corr.cg(
                ccr.multiply(F, G), ctx
            )


@given(phase_polys, phase_polys)
@settings(max_examples=20, deadline=None)
def test_star_matches_sympy(f, g):
    ctx = SContext(Rational(-1, 2))
    lib = phase_to_sympy(corr.star(f, g, ctx))
    oracle = sympy_star(phase_to_sympy(f), phase_to_sympy(g), ctx.s)
    assert sp.expand(lib - oracle) == 0


def test_star_associative_not_commutative():
    rng = random.Random(13)
    for ctx in CTXS:
        f = random_phase_poly(rng, 4)
        g = random_phase_poly(rng, 4)
        h = random_phase_poly(rng, 4)
        assert corr.star(corr.star(f, g, ctx), h, ctx) == corr.star(f, corr.star(g, h, ctx), ctx)


def test_hstar_eq_identity_operand():
    rng = random.Random(14)
    for ctx in CTXS:
        F = random_operator_poly(rng, 6)
        assert corr.hstar(OperatorPoly.identity(), F, ctx) == F
        got = corr.hstar(A_OP, AD_OP, ctx)
        assert got == ccr.s_order_expand(1, 1, ctx.s)


def test_hstar_single_ladder_identity():
    # a hstar F = (1-s)/2 aF + (1+s)/2 Fa, exactly
    rng = random.Random(15)
    for ctx in CTXS:
        s = ctx.s
        for _ in range(10):
            F = random_operator_poly(rng, 6)
            lhs = corr.hstar(A_OP, F, ctx)
            rhs = ccr.multiply(A_OP, F).scale(ExactComplex((1 - s) / 2)) + ccr.multiply(
                F, A_OP
            ).scale(ExactComplex((1 + s) / 2))
            assert lhs == rhs


def test_hstar_homomorphism_random():
    rng = random.Random(16)
    for ctx in CTXS:
        for _ in range(15):
            f = random_phase_poly(rng, 6)
            g = random_phase_poly(rng, 6)
            assert corr.hstar(corr.icg(f, ctx), corr.icg(g, ctx), ctx) == corr.icg(
                phase.mul(f, g), ctx
            )


def test_hstar_commutative_and_associative():
    rng = random.Random(17)
    for ctx in CTXS:
        F = random_operator_poly(rng, 4)
        G = random_operator_poly(rng, 4)
        H = random_operator_poly(rng, 4)
        assert corr.hstar(F, G, ctx) == corr.hstar(G, F, ctx)
        assert corr.hstar(corr.hstar(F, G, ctx), H, ctx) == corr.hstar(
            F, corr.hstar(G, H, ctx), ctx
        )


def test_hstar_respects_ccr_equivalence():
    # (ad a + 1) and the normal form of a*ad are the same operand
    rng = random.Random(18)
    lhs_op = ccr.multiply(A_OP, AD_OP)
    for ctx in CTXS:
        F = random_operator_poly(rng, 5)
        assert corr.hstar(lhs_op, F, ctx) == corr.hstar(
            OperatorPoly({(1, 1): 1, (0, 0): 1}), F, ctx
        )


def test_star_leading_order_and_truncations():
    rng = random.Random(19)
    for ctx in CTXS:
        for _ in range(8):
            f = random_phase_poly(rng, 5)
            g = random_phase_poly(rng, 5)
            assert corr.star(f, g, ctx, max_order=0) == phase.mul(f, g)
            assert corr.star_commutator(f, g, ctx, max_order=1) == phase.poisson(
                f, g, ctx.hbar
            )
            F = random_operator_poly(rng, 5)
            G = random_operator_poly(rng, 5)
            assert corr.hstar(F, G, ctx, max_order=0) == ccr.multiply(F, G)


def test_star_commutator_quadratic_exactness_and_cubic_corrections():
    ctx = SContext(0)
    al2 = PhasePoly.monomial(0, 2)
    als2 = PhasePoly.monomial(2, 0)
    assert corr.star_commutator(al2, als2, ctx) == phase.poisson(al2, als2, 1)
    al3 = PhasePoly.monomial(0, 3)
    als3 = PhasePoly.monomial(3, 0)
    assert corr.star_commutator(al3, als3, ctx) != phase.poisson(al3, als3, 1)
    # degree-1 operands carry no corrections at any s
    for ctx2 in CTXS:
        assert corr.star_commutator(AL, ALS, ctx2) == phase.poisson(AL, ALS, 1)


def test_deformed_bracket_examples():
    for ctx in CTXS:
        got = corr.deformed_bracket(A_OP, AD_OP, ctx)
        assert got == OperatorPoly({(0, 0): ExactComplex(0, -1)})
        assert got == corr.icg(phase.poisson(AL, ALS, 1), ctx)
        F = random_operator_poly(random.Random(20), 4)
        assert corr.deformed_bracket(F, F, ctx).is_zero()
        # [n, a] route: icg of poisson(als al, al) = i a
        got2 = corr.deformed_bracket(
            corr.icg(PhasePoly.monomial(1, 1), ctx), corr.icg(AL, ctx), ctx
        )
        assert got2 == corr.icg(phase.poisson(PhasePoly.monomial(1, 1), AL, 1), ctx)


def test_deformed_bracket_two_path_random():
    rng = random.Random(21)
    for ctx in CTXS:
        for _ in range(8):
            f = random_phase_poly(rng, 5)
            g = random_phase_poly(rng, 5)
            assert corr.deformed_bracket(
                corr.icg(f, ctx), corr.icg(g, ctx), ctx
            ) == corr.icg(phase.poisson(f, g, ctx.hbar), ctx)


def test_shift_phase_examples():
    t, s = Rational(0), Rational(1, 2)
    f = PhasePoly.monomial(1, 1)
    # shifting the symbol of the number operator between parameters
    start = corr.cg(OperatorPoly.monomial(1, 1), SContext(t))
    assert corr.shift_phase(start, t, s) == corr.cg(OperatorPoly.monomial(1, 1), SContext(s))
    assert corr.shift_phase(f, s, s) == f
    al3 = PhasePoly.monomial(0, 3)
    assert corr.shift_phase(al3, Rational(-1), Rational(1)) == al3


def test_shift_operator_examples():
    t, s = Rational(1, 2), Rational(-1)
    start = corr.icg(PhasePoly.monomial(1, 1), SContext(t))
    assert corr.shift_operator(start, t, s) == corr.icg(
        PhasePoly.monomial(1, 1), SContext(s)
    )
    F = random_operator_poly(random.Random(22), 5)
    assert corr.shift_operator(F, s, s) == F
    assert corr.shift_operator(AD_OP, Rational(-1), Rational(1)) == AD_OP


def test_shift_coherence_random():
    rng = random.Random(23)
    for t in S_SET:
        for s in S_SET:
            F = random_operator_poly(rng, 6)
            assert corr.shift_phase(corr.cg(F, SContext(t)), t, s) == corr.cg(F, SContext(s))
            f = random_phase_poly(rng, 6)
            assert corr.shift_operator(corr.icg(f, SContext(t)), t, s) == corr.icg(
                f, SContext(s)
            )
    u, s, t = Rational(-1), Rational(1, 2), Rational(1)
    f = random_phase_poly(rng, 6)
    assert corr.shift_phase(corr.shift_phase(f, u, s), s, t) == corr.shift_phase(f, u, t)


def test_hsbs_examples():
    for ctx in CTXS:
        s = ctx.s
        got = corr.hsbs_apply(PhasePoly.monomial(1, 1), OperatorPoly.identity(), ctx, RIGHT)
        assert got == ccr.s_order_expand(1, 1, s)
        F = random_operator_poly(random.Random(24), 5)
        assert corr.hsbs_apply(PhasePoly.one(), F, ctx, LEFT) == F
        got2 = corr.hsbs_apply(AL, F, ctx, RIGHT)
        want2 = ccr.multiply(A_OP, F).scale(ExactComplex((1 - s) / 2)) + ccr.multiply(
            F, A_OP
        ).scale(ExactComplex((1 + s) / 2))
        assert got2 == want2


def test_hsbs_matches_hstar_route_both_sides():
    rng = random.Random(25)
    for ctx in CTXS:
        for _ in range(6):
            f = random_phase_poly(rng, 4)
            G = random_operator_poly(rng, 4)
            want = corr.hstar(corr.icg(f, ctx), G, ctx)
            for side in (LEFT, RIGHT):
                assert corr.hsbs_apply(f, G, ctx, side) == want


def test_hsbs_pairwise_commutation():
    rng = random.Random(26)
    ops = [(v, sd) for v in (ccr.A, ccr.ADAG) for sd in (LEFT, RIGHT)]
    for ctx in CTXS:
        G = random_operator_poly(rng, 4)
        for i, (v1, s1) in enumerate(ops):
            for v2, s2 in ops[i + 1:]:
                one = corr.apply_hsbs(v1, s1, corr.apply_hsbs(v2, s2, G, ctx), ctx)
                two = corr.apply_hsbs(v2, s2, corr.apply_hsbs(v1, s1, G, ctx), ctx)
                assert one == two, (ctx.s, v1, s1, v2, s2)


def test_psbo_examples():
    for ctx in CTXS:
        s = ctx.s
        got = corr.psbo_apply(ccr.multiply(A_OP, AD_OP), PhasePoly.one(), ctx, RIGHT)
        assert got == PhasePoly({(1, 1): 1, (0, 0): ExactComplex((s + 1) / 2)})
        g = random_phase_poly(random.Random(27), 5)
        assert corr.psbo_apply(OperatorPoly.identity(), g, ctx, LEFT) == g
        got2 = corr.psbo_apply(A_OP, ALS, ctx, RIGHT)
        assert got2 == PhasePoly({(1, 1): 1, (0, 0): ExactComplex((s + 1) / 2)})
        assert got2 == corr.star(AL, ALS, ctx)


def test_psbo_matches_star_route_both_sides():
    rng = random.Random(28)
    for ctx in CTXS:
        for _ in range(6):
            F = random_operator_poly(rng, 4)
            g = random_phase_poly(rng, 4)
            want = corr.star(corr.cg(F, ctx), g, ctx)
            for side in (LEFT, RIGHT):
                assert corr.psbo_apply(F, g, ctx, side) == want


def test_psbo_ccr():
    rng = random.Random(29)
    for ctx in CTXS:
        g = random_phase_poly(rng, 5)
        lhs = corr.apply_psbo(
            phase.ALPHA, RIGHT, corr.apply_psbo(phase.ALPHASTAR, RIGHT, g, ctx), ctx
        )
        rhs = corr.apply_psbo(
            phase.ALPHASTAR, RIGHT, corr.apply_psbo(phase.ALPHA, RIGHT, g, ctx), ctx
        )
        assert lhs - rhs == g
        # same variable, both sides: commute
        a = corr.apply_psbo(phase.ALPHA, LEFT, corr.apply_psbo(phase.ALPHA, RIGHT, g, ctx), ctx)
        b = corr.apply_psbo(phase.ALPHA, RIGHT, corr.apply_psbo(phase.ALPHA, LEFT, g, ctx), ctx)
        assert a == b
        # mixed sides, different variables: commute
        c = corr.apply_psbo(phase.ALPHA, RIGHT, corr.apply_psbo(phase.ALPHASTAR, LEFT, g, ctx), ctx)
        d = corr.apply_psbo(phase.ALPHASTAR, LEFT, corr.apply_psbo(phase.ALPHA, RIGHT, g, ctx), ctx)
        assert c == d


def _sym_quad_op(k: int, l: int, ctx=SContext(0)) -> OperatorPoly:
    return corr.icg(phase.quad_to_alpha({(k, l): 1}), ctx)


def test_odot_quadrature_examples():
    q1 = _sym_quad_op(1, 0)
    p1 = _sym_quad_op(0, 1)
    assert corr.odot(q1, p1) == _sym_quad_op(1, 1)
    F = random_operator_poly(random.Random(30), 5)
    assert corr.odot(OperatorPoly.identity(), F) == F
    assert corr.odot(_sym_quad_op(2, 0), q1) == _sym_quad_op(3, 0)


def test_odot_concatenates_quadrature_exponents():
    for k in range(3):
        for l in range(3 - k):
            for m in range(3):
                for n in range(3 - m):
                    got = corr.odot(_sym_quad_op(k, l), _sym_quad_op(m, n))
                    assert got == _sym_quad_op(k + m, l + n), (k, l, m, n)


def test_symmetric_quadrature_product_explicit():
    # {Q}_0 odot {P}_0 equals (QP + PQ)/2 written in ladder form
    q1, p1 = _sym_quad_op(1, 0), _sym_quad_op(0, 1)
    sym = (ccr.multiply(q1, p1) + ccr.multiply(p1, q1)).scale(ExactComplex(Rational(1, 2)))
    assert corr.odot(q1, p1) == sym
    # and the scaled-quadrature commutator is i/2
    assert ccr.commutator(q1, p1) == OperatorPoly({(0, 0): ExactComplex(0, Rational(1, 2))})


def test_nogo_witness_zero_cases():
    al2 = PhasePoly.monomial(0, 2)
    als2 = PhasePoly.monomial(2, 0)
    for ctx in CTXS:
        assert corr.nogo_witness(AL, ALS, ctx).is_zero()
        # every degree<=2 monomial pair except (al^2, als^2) is anomaly-free at all s
        mono = [PhasePoly.monomial(m, n) for m in range(3) for n in range(3 - m)]
        for f in mono:
            for g in mono:
                if {str(f), str(g)} == {str(al2), str(als2)} and str(f) != str(g):
                    continue
                assert corr.nogo_witness(f, g, ctx).is_zero(), (ctx.s, str(f), str(g))


def test_nogo_witness_quadratic_pair_anomaly():
    # (al^2, als^2) is canonical only at the symmetric point: residual is 2 i s.
    # Hand derivation: {al^2, als^2} = -4i als*al, [a^2, ad^2] = 4 ad a + 2, and
    # icg(als*al) = ad a + (1-s)/2, leaving 2 i s times the identity.
    al2 = PhasePoly.monomial(0, 2)
    als2 = PhasePoly.monomial(2, 0)
    assert corr.nogo_witness(al2, als2, SContext(0)).is_zero()
    for ctx in CTXS:
        want = OperatorPoly({(0, 0): ExactComplex(0, 2 * ctx.s)})
        assert corr.nogo_witness(al2, als2, ctx) == want


def test_nogo_witness_cubic_obstruction():
    al3 = PhasePoly.monomial(0, 3)
    als3 = PhasePoly.monomial(3, 0)
    for ctx in CTXS:
        assert not corr.nogo_witness(al3, als3, ctx).is_zero()
    # frozen symbolic residual at s = 0: the witness is (3/2) i * identity
    res = corr.nogo_witness(al3, als3, SContext(0))
    assert res == OperatorPoly({(0, 0): ExactComplex(0, Rational(3, 2))})


def test_hermiticity_transport():
    rng = random.Random(31)
    for ctx in CTXS:
        for _ in range(8):
            F = random_hermitian_operator_poly(rng, 6)
            assert F.dagger() == F
            sym = corr.cg(F, ctx)
            assert sym.conjugate() == sym


def test_formal_deriv_commutes_with_icg():
    rng = random.Random(32)
    for ctx in CTXS:
        f = random_phase_poly(rng, 6)
        assert corr.icg(phase.deriv(f, phase.ALPHA), ctx) == ccr.formal_deriv(
            corr.icg(f, ctx), ccr.A
        )


def test_scontext_validation():
    with pytest.raises(ValueError):
        SContext(0, 0)
    with pytest.raises(ValueError):
        SContext(0, Rational(-1))
    ctx = SContext("1/2", "2")
    assert ctx.s == Rational(1, 2) and ctx.hbar == Rational(2)
