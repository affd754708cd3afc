"""Quasiprobability fields on rectangular phase-plane grids.

Builds standard density matrices, samples their s-parameterized
distributions W^(s)(alpha) = Tr[rho T_{-s}(alpha)] / pi, smooths between
representations (Wigner at index 0, Husimi one Gaussian blur below it),
and integrates grids by plain Riemann summation.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.ndimage import convolve1d

from . import fock
from .exactnum import as_rational


@dataclass(frozen=True)
class GridSpec:
    """Rectangular grid in the complex plane; rows sweep Re, columns Im."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    steps_re: int
    steps_im: int

    def __post_init__(self):
        if not (self.re_max > self.re_min and self.im_max > self.im_min):
            raise ValueError("grid extents must satisfy max > min on both axes")
        if self.steps_re < 8 or self.steps_im < 8:
            raise ValueError("grids need at least 8 steps per axis")

    def re_points(self) -> np.ndarray:
        return np.linspace(self.re_min, self.re_max, self.steps_re)

    def im_points(self) -> np.ndarray:
        return np.linspace(self.im_min, self.im_max, self.steps_im)

    def spacing(self):
        return (
            (self.re_max - self.re_min) / (self.steps_re - 1),
            (self.im_max - self.im_min) / (self.steps_im - 1),
        )

    def max_radius(self) -> float:
        r = max(abs(self.re_min), abs(self.re_max))
        i = max(abs(self.im_min), abs(self.im_max))
        return math.hypot(r, i)


@dataclass
class GridField:
    """Sampled complex field on a GridSpec (values shape: steps_re x steps_im)."""

    spec: GridSpec
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.spec.steps_re, self.spec.steps_im):
            raise ValueError(
                f"field shape {self.values.shape} does not match spec "
                f"({self.spec.steps_re}, {self.spec.steps_im})"
            )


def fock_state(n: int, N: int) -> np.ndarray:
    """Projector onto the n-th number state."""
    if not 0 <= n < N:
        raise ValueError(f"fock index {n} out of range for dimension {N}")
    rho = np.zeros((N, N), dtype=complex)
    rho[n, n] = 1.0
    return rho


def _coherent_vector(alpha0: complex, N: int) -> np.ndarray:
    n = np.arange(N)
    log_fact = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1, N)))))
    amp = np.exp(-abs(alpha0) ** 2 / 2 - log_fact / 2) * (alpha0 + 0j) ** n
    return amp


def coherent_state(alpha0: complex, N: int) -> np.ndarray:
    """Coherent-state density matrix (renormalized after truncation)."""
    alpha0 = complex(alpha0)
    if abs(alpha0) > N / 4:
        raise ValueError(f"coherent amplitude {abs(alpha0):.3g} exceeds N/4")
    v = _coherent_vector(alpha0, N)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def cat_state(alpha0: complex, N: int) -> np.ndarray:
    """Even superposition of opposite coherent amplitudes, normalized."""
    alpha0 = complex(alpha0)
    if abs(alpha0) > N / 4:
        raise ValueError(f"cat amplitude {abs(alpha0):.3g} exceeds N/4")
    v = _coherent_vector(alpha0, N) + _coherent_vector(-alpha0, N)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def load_density_matrix(path: str) -> np.ndarray:
    """Read the sparse JSON form {"dim": N, "entries": [{"row","col","re","im"}]}."""
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    N = int(obj["dim"])
    if N < 2:
        raise ValueError("density matrix dimension must be at least 2")
    rho = np.zeros((N, N), dtype=complex)
    for entry in obj.get("entries", []):
        i, j = int(entry["row"]), int(entry["col"])
        if not (0 <= i < N and 0 <= j < N):
            raise ValueError(f"entry ({i}, {j}) out of range for dim {N}")
        rho[i, j] += float(entry.get("re", 0.0)) + 1j * float(entry.get("im", 0.0))
    return rho


def state_build(spec: str, N: int) -> np.ndarray:
    """Build a density matrix from a state spec string.

    Formats: 'fock:n', 'coherent:re,im', 'cat:re,im', 'file:path'.
    """
    kind, _, arg = spec.partition(":")
    if kind == "fock":
        return fock_state(int(arg), N)
    if kind in ("coherent", "cat"):
        parts = arg.split(",")
        if len(parts) == 1:
            alpha0 = complex(float(parts[0]), 0.0)
        elif len(parts) == 2:
            alpha0 = complex(float(parts[0]), float(parts[1]))
        else:
            raise ValueError(f"bad amplitude spec {arg!r}")
        return coherent_state(alpha0, N) if kind == "coherent" else cat_state(alpha0, N)
    if kind == "file":
        return load_density_matrix(arg)
    raise ValueError(f"unknown state kind {kind!r}")


def _smooth_axes(values: np.ndarray, sigma_re: float, sigma_im: float, dre: float, dim_: float):
    out = values
    for axis, (sigma, step) in enumerate(((sigma_re, dre), (sigma_im, dim_))):
        half = int(math.ceil(6 * sigma / step))
        taps = np.arange(-half, half + 1) * step
        kern = np.exp(-(taps**2) / (2 * sigma**2))
        kern /= kern.sum()
        out = convolve1d(out.real, kern, axis=axis, mode="constant") + 1j * convolve1d(
            out.imag, kern, axis=axis, mode="constant"
        )
    return out


def quasiprob(rho: np.ndarray, s, grid: GridSpec, *, guard: int = fock.DEFAULT_GUARD) -> GridField:
    """Sample W^(s)(alpha) = Tr[rho T_{-s}(alpha)] / pi on the grid.

    Requires s >= 0 so the kernel parameter -s is grid-computable: s = 0
    traces the displaced parity (Wigner field), s > 0 the trace-class
    closed-form kernel at -s (s = 1 is the direct coherent-projector
    route).  Density matrices are trace-class, so the plain truncated
    traces converge.
    """
    s = float(as_rational(s)) if not isinstance(s, float) else s
    if s < 0:
        raise ValueError("quasiprobability sampling requires s >= 0")
    rho = np.asarray(rho, dtype=complex)
    N = rho.shape[0]
    if rho.shape != (N, N) or N < 2:
        raise ValueError("rho must be a square matrix of dimension >= 2")
    if grid.max_radius() > N / 4:
        warnings.warn("grid reaches beyond |alpha| = N/4; truncation artifacts likely",
                      stacklevel=2)

    xs = grid.re_points()
    ys = grid.im_points()
    field = np.zeros((len(xs), len(ys)), dtype=complex)
    for ix, x in enumerate(xs):
        for iy, y in enumerate(ys):
            if s == 0:
                T = fock._t0_block(x + 1j * y, N, guard)
            else:
                T = fock._diag_kernel(-s, x + 1j * y, N)
            field[ix, iy] = np.sum(rho * T.T) / math.pi
    return GridField(grid, field)


def gaussian_smooth(field: GridField, from_s, to_s) -> GridField:
    """Blur a quasiprobability field from index from_s down to to_s.

    The kernel carries variance (from_s - to_s)/2 per complex dimension
    (per-axis std sqrt(from_s - to_s)/2); only the direction to_s < from_s
    exists, and points within 4 sigma of the boundary are uncertified.
    """
    fs = float(as_rational(from_s)) if not isinstance(from_s, float) else from_s
    ts = float(as_rational(to_s)) if not isinstance(to_s, float) else to_s
    if ts == fs:
        return GridField(field.spec, field.values.copy())
    if ts > fs:
        raise ValueError("unsupported smoothing direction: to_s must be < from_s")
    sigma = math.sqrt(fs - ts) / 2
    dre, dim_ = field.spec.spacing()
    if min(field.spec.re_max - field.spec.re_min, field.spec.im_max - field.spec.im_min) < 8 * sigma:
        warnings.warn("grid margins are below 4 sigma; interior region is small",
                      stacklevel=2)
    return GridField(field.spec, _smooth_axes(field.values, sigma, sigma, dre, dim_))


def integrate_grid(field: GridField) -> complex:
    """Riemann sum of the field times the cell area."""
    dre, dim_ = field.spec.spacing()
    return complex(field.values.sum() * dre * dim_)


def interior_mask(spec: GridSpec, margin: float) -> np.ndarray:
    """Boolean mask of points at least `margin` away from every grid edge."""
    xs = spec.re_points()
    ys = spec.im_points()
    ok_x = (xs >= spec.re_min + margin) & (xs <= spec.re_max - margin)
    ok_y = (ys >= spec.im_min + margin) & (ys <= spec.im_max - margin)
    return ok_x[:, None] & ok_y[None, :]


def write_grid_csv(field: GridField, path: str) -> None:
    """Row-major CSV: re_alpha,im_alpha,re_value,im_value at 17 significant digits."""
    xs = field.spec.re_points()
    ys = field.spec.im_points()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("re_alpha,im_alpha,re_value,im_value\n")
        for ix, x in enumerate(xs):
            for iy, y in enumerate(ys):
                v = field.values[ix, iy]
                fh.write(f"{x:.17g},{y:.17g},{v.real:.17g},{v.imag:.17g}\n")
