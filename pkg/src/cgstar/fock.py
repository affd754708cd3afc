"""Truncated-Fock-space numeric oracle.

Dense number-basis matrices for ladder operators, displacements, and the
s-family of phase-point kernels, plus the trace-based numeric transform
used to cross-check the symbolic core.

Truncation notes.  Kernel blocks are built at a padded internal dimension
and cropped (artifacts concentrate at the matrix edge), and comparisons
discard a guard band.  Traces of the s = 0 kernel against unbounded
polynomial operators do not converge entrywise (the parity diagonal only
converges against trace-class states), so the numeric transform evaluates
them through a coherent-state resolution of the identity, which is
absolutely convergent; for s > 0 the kernel at -s is trace-class with a
closed diagonal form and the plain trace converges geometrically.
"""

from __future__ import annotations

import math
import warnings
from functools import lru_cache

import numpy as np

from .ccr import OperatorPoly
from .exactnum import as_rational

DEFAULT_GUARD = 16


def ladder(N: int):
    """Annihilation/creation matrices: a[n-1, n] = sqrt(n), adag = a^T*."""
    if N < 2:
        raise ValueError("Fock dimension must be at least 2")
    n = np.arange(1, N)
    a = np.zeros((N, N), dtype=complex)
    a[n - 1, n] = np.sqrt(n)
    return a, a.conj().T


def parity(N: int) -> np.ndarray:
    """diag((-1)^n)."""
    return np.diag((-1.0) ** np.arange(N) + 0j)


def op_to_matrix(F: OperatorPoly, N: int) -> np.ndarray:
    """sum c[m,n] adag^m a^n with double-precision coefficients."""
    a, ad = ladder(N)
    max_m, max_n = F.max_exponents()
    ad_pow = [np.eye(N, dtype=complex)]
    for _ in range(max_m):
        ad_pow.append(ad_pow[-1] @ ad)
    a_pow = [np.eye(N, dtype=complex)]
    for _ in range(max_n):
        a_pow.append(a_pow[-1] @ a)
    out = np.zeros((N, N), dtype=complex)
    for (m, n), c in F.items():
        out += c.to_complex() * (ad_pow[m] @ a_pow[n])
    return out


@lru_cache(maxsize=32)
def _displacement_basis(N: int):
    # alpha*adag - alpha^* a = R_theta (|alpha| (adag - a)) R_theta^dag with
    # R_theta = diag(e^{i theta n}); diagonalize the fixed Hermitian
    # -i(adag - a) once per dimension and exponentiate spectrally.
    a, ad = ladder(N)
    K = -1j * (ad - a)
    w, V = np.linalg.eigh(K)
    return w, V, V.conj().T


def displacement(alpha: complex, N: int) -> np.ndarray:
    """Matrix exponential of alpha*adag - alpha^* a (unitary; spectral route).

    Spectrally exact to machine precision for the truncated generator;
    |alpha| > N/4 triggers a truncation warning but still evaluates.
    """
    alpha = complex(alpha)
    if abs(alpha) > N / 4:
        warnings.warn(
            f"displacement |alpha|={abs(alpha):.3g} exceeds N/4={N / 4:.3g}; "
            "truncation artifacts likely",
            stacklevel=2,
        )
    w, V, Vh = _displacement_basis(N)
    r = abs(alpha)
    theta = math.atan2(alpha.imag, alpha.real)
    core = (V * np.exp(1j * r * w)) @ Vh
    ph = np.exp(1j * theta * np.arange(N))
    return (ph[:, None] * core) * ph.conj()[None, :]


def _t0_block(alpha: complex, N: int, guard: int) -> np.ndarray:
    """Top-left N x N block of the s = 0 kernel, built at dimension N + guard.

    Displaced parity: 2 D(a) Pi D(a)^dag == 2 D(2a) Pi exactly, since parity
    conjugation flips the displacement sign and equal generators compose
    additively.
    """
    M = N + guard
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        D2 = displacement(2 * alpha, M)
    signs = (-1.0) ** np.arange(M)
    return (2.0 * D2 * signs[None, :])[:N, :N]


def _diag_kernel(sigma: float, alpha: complex, N: int) -> np.ndarray:
    """Closed form of the trace-class kernel for sigma < 0:

    T_sigma(alpha) = (2/(1-sigma)) D(alpha) r^n D(alpha)^dag with
    r = (sigma+1)/(sigma-1), |r| < 1.  Unit trace exactly; the geometric
    diagonal makes traces against polynomial operators converge.
    """
    r = (sigma + 1) / (sigma - 1)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        D = displacement(alpha, N)
    return (2 / (1 - sigma)) * (D * (r ** np.arange(N))[None, :]) @ D.conj().T


def kernel_matrix(s, alpha: complex, N: int, *, guard: int = DEFAULT_GUARD) -> np.ndarray:
    """Phase-point kernel T_s(alpha) in the number basis.

    s = 0 is twice the displaced parity; s < 0 is obtained from it by a
    Gaussian average over the phase plane with per-axis variance -s/4,
    computed per matrix element by discrete normalized quadrature.  s > 0
    kernels are singular and refused.

    Accuracy note: the averaged samples are displaced parities whose edge
    elements need Fock levels ~(sqrt(N) + 2|beta|)^2, so rows/columns near
    the truncation edge degrade; trust the guard-banded interior block.
    """
    s = float(as_rational(s)) if not isinstance(s, float) else s
    if s > 0:
        raise ValueError("kernel parameter s > 0 is unsupported (singular kernel)")
    if N < 2:
        raise ValueError("Fock dimension must be at least 2")
    alpha = complex(alpha)
    if abs(alpha) > N / 4:
        warnings.warn(
            f"kernel point |alpha|={abs(alpha):.3g} exceeds N/4; truncation artifacts likely",
            stacklevel=2,
        )
    if s == 0:
        return _t0_block(alpha, N, guard)
    sigma = math.sqrt(-s) / 2  # per-axis std of the smoothing kernel
    h = sigma / 3
    half = int(math.ceil(6 * sigma / h))
    offs = np.arange(-half, half + 1) * h
    gx = np.exp(-(offs**2) / (2 * sigma**2))
    w2 = gx[:, None] * gx[None, :]
    w2 /= w2.sum()
    out = np.zeros((N, N), dtype=complex)
    for wx, dx in zip(w2, offs):
        for w, dy in zip(wx, offs):
            if w > 1e-300:
                out += w * _t0_block(alpha + dx + 1j * dy, N, guard)
    return out


def _coherent_batch(gammas, N: int) -> np.ndarray:
    """Rows of truncated coherent amplitudes e^{-|g|^2/2} g^n / sqrt(n!)."""
    g = np.asarray(gammas, dtype=complex).ravel()
    n = np.arange(1, N)
    out = np.empty((len(g), N), dtype=complex)
    out[:, 0] = 1.0
    if N > 1:
        out[:, 1:] = np.cumprod(g[:, None] / np.sqrt(n)[None, :], axis=1)
    return out * np.exp(-np.abs(g) ** 2 / 2)[:, None]


def _reg_t0_block(alpha: complex, N: int, *, radius: float = 3.8, step: float = 0.4) -> np.ndarray:
    """s = 0 kernel block as a coherent-resolution quadrature.

    T_0(alpha) = (2/pi) int d^2 b  e^{a* b - a b*} |a-b><a+b| : inserting the
    coherent resolution around the parity operator gives an absolutely
    convergent representation whose traces against polynomial operators are
    stable (the raw parity-diagonal trace is not).  The radial window is
    capped so the coherent support stays inside the truncation.
    """
    k = int(math.ceil(radius / step))
    offs = np.arange(-k, k + 1) * step
    betas = (offs[:, None] + 1j * offs[None, :]).ravel()
    betas = betas[np.abs(betas) <= radius + 1e-12]
    v_plus = _coherent_batch(alpha + betas, N)
    v_minus = _coherent_batch(alpha - betas, N)
    phase = np.exp(np.conj(alpha) * betas - alpha * np.conj(betas))
    return (2 / math.pi) * step * step * (v_minus * phase[:, None]).T @ v_plus.conj()


def trace_kernel(s, alpha: complex, N: int) -> np.ndarray:
    """Kernel T_{-s}(alpha) in the evaluation form suited for operator traces.

    s = 0: coherent-resolution regularization of the displaced parity;
    s > 0: closed-form trace-class kernel at parameter -s.
    """
    s = float(as_rational(s)) if not isinstance(s, float) else s
    if s < 0:
        raise ValueError("numeric transform requires s >= 0 (kernel parameter -s <= 0)")
    if s == 0:
        return _reg_t0_block(alpha, N)
    return _diag_kernel(-s, alpha, N)


def _trace_product(A: np.ndarray, B: np.ndarray) -> complex:
    # tr(A @ B) without forming the product
    return complex(np.sum(A * B.T))


def cg_numeric_batch(Fs, s_values, alphas, N: int):
    """Numeric symbols Tr[F T_{-s}(alpha)] for several operators and s at once.

    The per-point kernel is shared across operators.  Returns a complex
    array of shape (len(Fs), len(s_values), len(alphas)).

    Args:
        Fs: operator polynomials (total degree <= 8).
        s_values: transform parameters, each >= 0.
        alphas: evaluation points, |alpha| <= 2 recommended.
        N: Fock dimension (>= 40 recommended).
    """
    s_list = [float(as_rational(s)) if not isinstance(s, float) else s for s in s_values]
    if any(s < 0 for s in s_list):
        raise ValueError("numeric transform requires s >= 0 (kernel parameter -s <= 0)")
    for F in Fs:
        if F.degree() > 8:
            raise ValueError("numeric transform supports total degree <= 8")
    alphas = [complex(a) for a in alphas]
    if alphas and max(abs(a) for a in alphas) > 2:
        warnings.warn("numeric transform is calibrated for |alpha| <= 2", stacklevel=2)
    if N < 40:
        warnings.warn("numeric transform is calibrated for N >= 40", stacklevel=2)

    mats = [op_to_matrix(F, N) for F in Fs]
    out = np.zeros((len(Fs), len(s_list), len(alphas)), dtype=complex)
    for ia, al in enumerate(alphas):
        for js, s in enumerate(s_list):
            T = trace_kernel(s, al, N)
            for iF, Fm in enumerate(mats):
                out[iF, js, ia] = _trace_product(Fm, T)
    return out


def cg_numeric(F: OperatorPoly, s, alphas, N: int):
    """Numeric s-symbol values Tr[F T_{-s}(alpha)] at each point of alphas."""
    return list(cg_numeric_batch([F], [s], alphas, N)[0, 0])


def hstar_matrix_oracle(Fm: np.ndarray, Gm: np.ndarray, s, orders: int) -> np.ndarray:
    """Matrix-level operator-star series with derivatives as commutators.

    sum_{j,k<=orders} (-(s+1)/2)^j (-(s-1)/2)^k / (j! k!) (d_a^j d_ad^k F)(d_ad^j d_a^k G)
    where d_a M = [M, adag] and d_ad M = [a, M].  Valid away from the
    truncation edge; compare on a guard-banded block.
    """
    s = float(as_rational(s)) if not isinstance(s, float) else s
    N = Fm.shape[0]
    a, ad = ladder(N)

    def d_a(M):
        return M @ ad - ad @ M

    def d_ad(M):
        return a @ M - M @ a

    c1, c2 = -(s + 1) / 2, -(s - 1) / 2
    out = np.zeros_like(Fm)
    Fj = Fm
    Gj = Gm
    for j in range(orders + 1):
        Fjk, Gjk = Fj, Gj
        for k in range(orders + 1 - j):
            w = c1**j * c2**k / (math.factorial(j) * math.factorial(k))
            if w:
                out = out + w * (Fjk @ Gjk)
            Fjk = d_ad(Fjk)
            Gjk = d_a(Gjk)
        Fj = d_a(Fj)
        Gj = d_ad(Gj)
    return out
