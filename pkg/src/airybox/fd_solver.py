"""Finite-difference oracle for the box-with-field eigenproblem.

Second-order central differences on N uniform intervals of [-1, 1] give a
symmetric tridiagonal matrix (diagonal 2/h^2 - alpha xi_i, off-diagonal
-1/h^2).  The lowest eigenvalues are found by Sturm-sequence bisection and
the eigenvectors by inverse iteration.  Nothing here touches Airy functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .airy_solver import ForceBalance

BISECT_TOL = 1e-12
INVERSE_MAX_SWEEPS = 50
SHIFT_OFFSET = 1e-10
DEFAULT_N = 4000
MIN_N = 16


class FDConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class FDSpectrum:
    n_intervals: int
    alpha: float
    eigenvalues: list[float]
    eigenvectors: list[np.ndarray] = field(repr=False)

    @property
    def h(self) -> float:
        return 2.0 / self.n_intervals

    @property
    def xi(self) -> np.ndarray:
        """Interior grid points."""
        return -1.0 + self.h * np.arange(1, self.n_intervals)


def fd_matrix(alpha: float, n_intervals: int) -> tuple[np.ndarray, np.ndarray]:
    """(diagonal, off-diagonal) of the discrete operator on interior points."""
    h = 2.0 / n_intervals
    xi = -1.0 + h * np.arange(1, n_intervals)
    diag = 2.0 / h ** 2 - alpha * xi
    off = np.full(n_intervals - 2, -1.0 / h ** 2)
    return diag, off


def sturm_count(diag, off_sq, x: float) -> int:
    """Number of eigenvalues strictly below ``x`` (LDL^T pivot signs)."""
    count = 0
    q = 1.0
    tiny = 1e-300
    for i, d in enumerate(diag):
        if i == 0:
            q = d - x
        else:
            q = (d - x) - off_sq[i - 1] / q
        if q == 0.0:
            q = -tiny
        if q < 0.0:
            count += 1
    return count


def _bisect(diag, off_sq, index: int, lo: float, hi: float, tol: float) -> float:
    # index is 0-based: the eigenvalue with exactly `index` eigenvalues below it
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if sturm_count(diag, off_sq, mid) > index:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _thomas(diag, off, shift: float, rhs) -> list[float]:
    """Solve (T - shift I) y = rhs by elimination without pivoting."""
    n = len(diag)
    c = [0.0] * n
    y = [0.0] * n
    tiny = 1e-14 * max(abs(diag[0]), abs(off[0]) if n > 1 else 1.0)
    b = diag[0] - shift
    if b == 0.0:
        b = tiny
    c[0] = (off[0] / b) if n > 1 else 0.0
    y[0] = rhs[0] / b
    for i in range(1, n):
        b = diag[i] - shift - off[i - 1] * c[i - 1]
        if b == 0.0:
            b = tiny
        if i < n - 1:
            c[i] = off[i] / b
        y[i] = (rhs[i] - off[i - 1] * y[i - 1]) / b
    for i in range(n - 2, -1, -1):
        y[i] -= c[i] * y[i + 1]
    return y


def _apply(diag: np.ndarray, off: np.ndarray, v: np.ndarray) -> np.ndarray:
    out = diag * v
    out[:-1] += off * v[1:]
    out[1:] += off * v[:-1]
    return out


def _inverse_iteration(diag: np.ndarray, off: np.ndarray, lam: float, norm_t: float) -> np.ndarray:
    n = len(diag)
    dl, ol = diag.tolist(), off.tolist()
    for offset in (SHIFT_OFFSET, 1e3 * SHIFT_OFFSET, -1e3 * SHIFT_OFFSET):
        shift = lam + offset
        # deterministic, generic start vector
        v = np.sin(np.arange(1, n + 1) * 0.7071) + 0.5
        v /= np.linalg.norm(v)
        for _ in range(INVERSE_MAX_SWEEPS):
            y = np.array(_thomas(dl, ol, shift, v.tolist()))
            ny = np.linalg.norm(y)
            if not np.isfinite(ny) or ny == 0.0:
                break
            y /= ny
            if y[np.argmax(np.abs(y))] * v[np.argmax(np.abs(y))] < 0:
                y = -y
            change = np.max(np.abs(y - v))
            v = y
            # stop on a settled iterate, not on the residual alone: a small
            # residual still allows neighbour contamination ~ residual / gap
            if change < 1e-13 and np.max(np.abs(_apply(diag, off, v) - lam * v)) < 1e-12 * norm_t:
                return v
    raise FDConvergenceError(f"inverse iteration failed near eigenvalue {lam}")


def fd_spectrum(alpha: float, n_intervals: int = DEFAULT_N, count: int = 4) -> FDSpectrum:
    """Lowest ``count`` eigenpairs of the discretised problem."""
    if not isinstance(n_intervals, int) or n_intervals < MIN_N:
        raise ValueError(f"n_intervals must be an integer >= {MIN_N}")
    if not isinstance(count, int) or not 1 <= count < n_intervals - 1:
        raise ValueError("count must satisfy 1 <= count < n_intervals - 1")
    diag, off = fd_matrix(alpha, n_intervals)
    off_sq = (off * off).tolist()
    dl = diag.tolist()
    h = 2.0 / n_intervals

    # Gershgorin bounds for the whole spectrum
    radius = 2.0 * abs(off[0]) if len(off) else 0.0
    lo0, hi0 = float(diag.min() - radius), float(diag.max() + radius)
    norm_t = max(abs(lo0), abs(hi0))

    values = []
    lo = lo0
    for i in range(count):
        lam = _bisect(dl, off_sq, i, lo, hi0, BISECT_TOL)
        values.append(lam)
        lo = lam
    vectors = []
    for lam in values:
        v = _inverse_iteration(diag, off, lam, norm_t)
        v = v / math.sqrt(0.5 * h * float(np.dot(v, v)))
        if 4.0 * v[0] - v[1] < 0.0:
            v = -v
        vectors.append(v)
    return FDSpectrum(n_intervals=n_intervals, alpha=float(alpha), eigenvalues=values,
                      eigenvectors=vectors)


def fd_boundary_forces(spectrum: FDSpectrum, k: int) -> ForceBalance:
    """Wall forces from second-order one-sided slopes of the k-th eigenvector."""
    if not 1 <= k <= len(spectrum.eigenvalues):
        raise IndexError(f"state k={k} not in computed range 1..{len(spectrum.eigenvalues)}")
    v = spectrum.eigenvectors[k - 1]
    h = spectrum.h
    # psi_0 = psi_N = 0 at the walls
    slope_left = float(4.0 * v[0] - v[1]) / (2.0 * h)
    slope_right = float(-4.0 * v[-1] + v[-2]) / (2.0 * h)
    return ForceBalance(k, spectrum.eigenvalues[k - 1], slope_left ** 2, slope_right ** 2)
