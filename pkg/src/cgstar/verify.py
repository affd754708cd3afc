"""Named verification suites: every algebraic identity the engine promises,
run over seeded random inputs, plus the numeric-oracle and grid checks.

Each suite returns CheckResult records; a failure carries the suite seed,
case index, and the offending inputs in canonical text, which reproduce
the case exactly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import ccr, correspondence as corr, fock, phase, quasigrid
from .ccr import OperatorPoly, LEFT, RIGHT
from .correspondence import SContext
from .exactnum import ExactComplex, Rational
from .phase import PhasePoly
from .randpoly import random_operator_poly, random_phase_poly

S_TEST_SET = (Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1))


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "ok" if self.passed else "FAIL"
        extra = f" ({len(self.failures)} failing)" if self.failures else ""
        return f"{self.name}: {self.cases - len(self.failures)}/{self.cases} {status}{extra}"


class _Check:
    def __init__(self, name: str, seed: int):
        self.result = CheckResult(name, 0)
        self.seed = seed

    def record(self, ok: bool, detail: str):
        self.result.cases += 1
        if not ok:
            self.result.failures.append(f"seed={self.seed} case={self.result.cases}: {detail}")


def _rng(suite: str, seed: int) -> random.Random:
    return random.Random(f"{suite}:{seed}")


def suite_roundtrip(seed: int = 0, cases: int = 500):
    rng = _rng("roundtrip", seed)
    chk_phase = _Check("cg(icg(f)) == f", seed)
    chk_op = _Check("icg(cg(F)) == F", seed)
    for s in S_TEST_SET:
        ctx = SContext(s)
        for _ in range(cases):
            f = random_phase_poly(rng, 8)
            chk_phase.record(corr.cg(corr.icg(f, ctx), ctx) == f, f"s={s} f={f}")
            F = random_operator_poly(rng, 8)
            chk_op.record(corr.icg(corr.cg(F, ctx), ctx) == F, f"s={s} F={F}")
    return [chk_phase.result, chk_op.result]


def suite_star_homomorphism(seed: int = 0, cases: int = 200):
    rng = _rng("star-homomorphism", seed)
    chk = _Check("star(cg F, cg G) == cg(F*G)", seed)
    for s in S_TEST_SET:
        ctx = SContext(s)
        for _ in range(cases):
            F = random_operator_poly(rng, 6)
            G = random_operator_poly(rng, 6)
            lhs = corr.star(corr.cg(F, ctx), corr.cg(G, ctx), ctx)
            rhs = corr.cg(ccr.multiply(F, G), ctx)
            chk.record(lhs == rhs, f"s={s} F={F} G={G}")
    return [chk.result]


def suite_hstar_homomorphism(seed: int = 0, cases: int = 200):
    rng = _rng("hstar-homomorphism", seed)
    chk = _Check("hstar(icg f, icg g) == icg(f*g)", seed)
    for s in S_TEST_SET:
        ctx = SContext(s)
        for _ in range(cases):
            f = random_phase_poly(rng, 6)
            g = random_phase_poly(rng, 6)
            lhs = corr.hstar(corr.icg(f, ctx), corr.icg(g, ctx), ctx)
            rhs = corr.icg(phase.mul(f, g), ctx)
            chk.record(lhs == rhs, f"s={s} f={f} g={g}")
    return [chk.result]


def suite_bopp(seed: int = 0, cases: int = 100):
    rng = _rng("bopp", seed)
    chk_hsbs = _Check("hsbs_apply == hstar route (both sides)", seed)
    chk_psbo = _Check("psbo_apply == star route (both sides)", seed)
    chk_comm = _Check("operator-side Bopp superoperators commute", seed)
    chk_ccr = _Check("phase-side Bopp CCR", seed)
    hsbs_all = [(v, sd) for v in (ccr.A, ccr.ADAG) for sd in (LEFT, RIGHT)]
    pairs = [(p, q) for i, p in enumerate(hsbs_all) for q in hsbs_all[i + 1:]]
    for s in S_TEST_SET:
        ctx = SContext(s)
        for _ in range(cases):
            f = random_phase_poly(rng, 4)
            G = random_operator_poly(rng, 4)
            want = corr.hstar(corr.icg(f, ctx), G, ctx)
            for side in (LEFT, RIGHT):
                got = corr.hsbs_apply(f, G, ctx, side)
                chk_hsbs.record(got == want, f"s={s} side={side} f={f} G={G}")
            F = random_operator_poly(rng, 4)
            g = random_phase_poly(rng, 4)
            want_p = corr.star(corr.cg(F, ctx), g, ctx)
            for side in (LEFT, RIGHT):
                got_p = corr.psbo_apply(F, g, ctx, side)
                chk_psbo.record(got_p == want_p, f"s={s} side={side} F={F} g={g}")
            (v1, s1), (v2, s2) = pairs[chk_comm.result.cases % len(pairs)]
            one = corr.apply_hsbs(v1, s1, corr.apply_hsbs(v2, s2, G, ctx), ctx)
            two = corr.apply_hsbs(v2, s2, corr.apply_hsbs(v1, s1, G, ctx), ctx)
            chk_comm.record(one == two, f"s={s} pair={(v1, s1, v2, s2)} G={G}")
            # right-side pair realizes the ladder commutation on functions
            lhs = corr.apply_psbo(phase.ALPHA, RIGHT,
                                  corr.apply_psbo(phase.ALPHASTAR, RIGHT, g, ctx), ctx)
            rhs = corr.apply_psbo(phase.ALPHASTAR, RIGHT,
                                  corr.apply_psbo(phase.ALPHA, RIGHT, g, ctx), ctx)
            same_var = corr.apply_psbo(phase.ALPHA, LEFT,
                                       corr.apply_psbo(phase.ALPHA, RIGHT, g, ctx), ctx) == \
                corr.apply_psbo(phase.ALPHA, RIGHT,
                                corr.apply_psbo(phase.ALPHA, LEFT, g, ctx), ctx)
            chk_ccr.record(lhs - rhs == g and same_var, f"s={s} g={g}")
    return [chk_hsbs.result, chk_psbo.result, chk_comm.result, chk_ccr.result]


def suite_shifts(seed: int = 0, cases: int = 100):
    rng = _rng("shifts", seed)
    chk_phase = _Check("shift_phase(cg(F,t),t,s) == cg(F,s)", seed)
    chk_op = _Check("shift_operator(icg(f,t),t,s) == icg(f,s)", seed)
    chk_comp = _Check("shift composition u->s->t == u->t", seed)
    ordered = [(a, b) for a in S_TEST_SET for b in S_TEST_SET]
    for idx in range(cases):
        for (t, s) in ordered:
            F = random_operator_poly(rng, 6)
            got = corr.shift_phase(corr.cg(F, SContext(t)), t, s)
            chk_phase.record(got == corr.cg(F, SContext(s)), f"t={t} s={s} F={F}")
            f = random_phase_poly(rng, 6)
            got_op = corr.shift_operator(corr.icg(f, SContext(t)), t, s)
            chk_op.record(got_op == corr.icg(f, SContext(s)), f"t={t} s={s} f={f}")
        u, s, t = (S_TEST_SET[(idx + k) % len(S_TEST_SET)] for k in range(3))
        f = random_phase_poly(rng, 6)
        chk_comp.record(
            corr.shift_phase(corr.shift_phase(f, u, s), s, t) == corr.shift_phase(f, u, t),
            f"u={u} s={s} t={t} f={f}",
        )
    return [chk_phase.result, chk_op.result, chk_comp.result]


def suite_brackets(seed: int = 0, cases: int = 100):
    rng = _rng("brackets", seed)
    chk_zero = _Check("order-(0,0) star term == f*g", seed)
    chk_pois = _Check("order-1 star commutator == poisson", seed)
    chk_hzero = _Check("order-0 hstar == operator product", seed)
    chk_two = _Check("deformed bracket == icg(poisson) on transforms", seed)
    for s in S_TEST_SET:
        ctx = SContext(s)
        for _ in range(cases):
            f = random_phase_poly(rng, 5)
            g = random_phase_poly(rng, 5)
            chk_zero.record(corr.star(f, g, ctx, max_order=0) == phase.mul(f, g),
                            f"s={s} f={f} g={g}")
            chk_pois.record(
                corr.star_commutator(f, g, ctx, max_order=1) == phase.poisson(f, g, ctx.hbar),
                f"s={s} f={f} g={g}")
            F = random_operator_poly(rng, 5)
            G = random_operator_poly(rng, 5)
            chk_hzero.record(corr.hstar(F, G, ctx, max_order=0) == ccr.multiply(F, G),
                             f"s={s} F={F} G={G}")
            two_path = corr.deformed_bracket(corr.icg(f, ctx), corr.icg(g, ctx), ctx)
            direct = corr.icg(phase.poisson(f, g, ctx.hbar), ctx)
            chk_two.record(two_path == direct, f"s={s} f={f} g={g}")
    return [chk_zero.result, chk_pois.result, chk_hzero.result, chk_two.result]


def suite_nogo(seed: int = 0, cases: int = 0):
    del cases  # exhaustive over monomial pairs; nothing random here
    chk_low = _Check("no residual when deg f + deg g <= 2 (all s)", seed)
    chk_weyl = _Check("no residual for deg <= 2 pairs at s = 0", seed)
    chk_anom = _Check("(al^2, als^2) residual equals 2*i*s", seed)
    chk_cubic = _Check("nonzero residual for (al^3, als^3)", seed)
    mono2 = [PhasePoly.monomial(m, n) for m in range(3) for n in range(3 - m)]
    cubic_f = PhasePoly.monomial(0, 3)
    cubic_g = PhasePoly.monomial(3, 0)
    al2, als2 = PhasePoly.monomial(0, 2), PhasePoly.monomial(2, 0)
    for s in S_TEST_SET:
        ctx = SContext(s)
        for f in mono2:
            for g in mono2:
                if f.degree() + g.degree() <= 2:
                    res = corr.nogo_witness(f, g, ctx)
                    chk_low.record(res.is_zero(), f"s={s} f={f} g={g} residual={res}")
        want = OperatorPoly({(0, 0): ExactComplex(0, 2 * s)})
        chk_anom.record(corr.nogo_witness(al2, als2, ctx) == want, f"s={s}")
        chk_cubic.record(not corr.nogo_witness(cubic_f, cubic_g, ctx).is_zero(), f"s={s}")
    ctx0 = SContext(0)
    for f in mono2:
        for g in mono2:
            res = corr.nogo_witness(f, g, ctx0)
            chk_weyl.record(res.is_zero(), f"f={f} g={g} residual={res}")
    return [chk_low.result, chk_weyl.result, chk_anom.result, chk_cubic.result]


def suite_oracle(seed: int = 0, cases: int = 8, *, N: int = 60, tol: float = 1e-4):
    """Numeric transform against symbolic symbols on an 11x11 grid, |alpha| <= 1.5."""
    rng = _rng("oracle", seed)
    chk = _Check(f"numeric vs symbolic symbol (tol {tol:g})", seed)
    xs = np.linspace(-1.5, 1.5, 11)
    alphas = [complex(x, y) for x in xs for y in xs]
    ops = [OperatorPoly.monomial(m, n) for m in range(4) for n in range(4 - m)]
    ops += [random_operator_poly(rng, 3) for _ in range(cases)]
    s_values = [Rational(0), Rational(1, 2), Rational(1)]
    values = fock.cg_numeric_batch(ops, s_values, alphas, N)
    for iF, F in enumerate(ops):
        for js, s in enumerate(s_values):
            sym = corr.cg(F, SContext(s))
            want = np.array([phase.eval_at(sym, al) for al in alphas])
            dev = float(np.max(np.abs(values[iF, js] - want)))
            chk.record(dev <= tol, f"s={s} F={F} max_dev={dev:.3e}")
    return [chk.result]


def suite_grids(seed: int = 0, cases: int = 0, *, N: int = 60):
    """Closed-form grid targets: Wigner/Husimi shapes and normalizations."""
    del cases
    grid = quasigrid.GridSpec(-4.0, 4.0, -4.0, 4.0, 81, 81)
    xs = grid.re_points()
    r2 = xs[:, None] ** 2 + xs[None, :] ** 2

    chk_vac = _Check("vacuum Wigner == (2/pi) exp(-2|a|^2) within 1e-6", seed)
    chk_f1 = _Check("fock-1 Wigner at origin == -2/pi within 1e-5", seed)
    chk_hus = _Check("smoothed Husimi == (1/pi) exp(-|a|^2) within 2e-3 interior", seed)
    chk_mass = _Check("grid integrals == 1 within 1e-3", seed)
    chk_real = _Check("imaginary parts <= 1e-8 for Hermitian states", seed)
    chk_neg = _Check("fock-1: Wigner negative at origin, Husimi nonnegative", seed)

    vac = quasigrid.quasiprob(quasigrid.fock_state(0, N), 0, grid)
    dev = float(np.max(np.abs(vac.values.real - (2 / math.pi) * np.exp(-2 * r2))))
    chk_vac.record(dev <= 1e-6, f"max_dev={dev:.3e}")
    chk_real.record(float(np.max(np.abs(vac.values.imag))) <= 1e-8, "vacuum")

    f1 = quasigrid.quasiprob(quasigrid.fock_state(1, N), 0, grid)
    origin = f1.values[40, 40]
    chk_f1.record(abs(origin.real - (-2 / math.pi)) <= 1e-5, f"value={origin.real:.8f}")
    chk_real.record(float(np.max(np.abs(f1.values.imag))) <= 1e-8, "fock-1")

    husimi = quasigrid.gaussian_smooth(vac, 0, -1)
    mask = quasigrid.interior_mask(grid, 2.0)  # 4 sigma margin at sigma = 1/2
    dev = float(np.max(np.abs(husimi.values.real - np.exp(-r2) / math.pi)[mask]))
    chk_hus.record(dev <= 2e-3, f"max_dev={dev:.3e}")

    f1_husimi = quasigrid.gaussian_smooth(f1, 0, -1)
    chk_neg.record(
        f1.values[40, 40].real < 0 and float(np.min(f1_husimi.values.real)) >= -1e-6,
        f"wigner(0)={f1.values[40, 40].real:.4f} min_husimi={float(np.min(f1_husimi.values.real)):.2e}",
    )

    coh = quasigrid.quasiprob(quasigrid.coherent_state(1.0, N), 0, grid)
    for name, fld in (("vacuum", vac), ("fock-1", f1), ("husimi", husimi), ("coherent", coh)):
        mass = quasigrid.integrate_grid(fld).real
        chk_mass.record(abs(mass - 1.0) <= 1e-3, f"{name} integral={mass:.6f}")
    return [chk_vac.result, chk_f1.result, chk_hus.result, chk_mass.result,
            chk_real.result, chk_neg.result]


SUITES = {
    "roundtrip": suite_roundtrip,
    "star-homomorphism": suite_star_homomorphism,
    "hstar-homomorphism": suite_hstar_homomorphism,
    "bopp": suite_bopp,
    "shifts": suite_shifts,
    "brackets": suite_brackets,
    "nogo": suite_nogo,
    "oracle": suite_oracle,
    "grids": suite_grids,
}


def run_suite(name: str, seed: int = 0, cases: int | None = None):
    """Run one named suite; returns its CheckResult list."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn = SUITES[name]
    if cases is None:
        return fn(seed)
    return fn(seed, cases)
