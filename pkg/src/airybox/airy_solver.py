"""Particle in a box [-1, 1] with a uniform field: closed-form Airy solution.

The nondimensional problem is

    -psi'' - alpha xi psi = beta psi,   psi(-1) = psi(1) = 0,
    (1/2) int_{-1}^{1} psi^2 dxi = 1.

With eta = -alpha^{1/3} (xi + beta/alpha) the equation becomes Airy's, so
psi = A (Ai(eta) - w Bi(eta)).  Eigenvalues are the zeros in beta of the
boundary determinant

    D(beta) = Ai(eta_hat) Bi(eta_bar) - Ai(eta_bar) Bi(eta_hat),

where eta_hat / eta_bar are the images of the left / right wall.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .quadrature import DEFAULT_ORDER, gauss_rule, integrate
from .rootfind import Bracket, RootNotConverged, newton_safeguarded, scan_brackets
from .specfun import AiryDomainError, airy

ALPHA_MAX = 1000.0
SCAN_STEP = math.pi ** 2 / 8.0
TOL_BETA = 1e-13
MAX_ITER = 100
POLISH_STEPS = 3
SCAN_CHUNK = 64  # scan-grid points per window extension

JMethod = Literal["analytic", "quadrature"]


class EigenSearchError(RuntimeError):
    """Eigenvalue search failed at a specific state index."""

    def __init__(self, k: int, reason: str):
        super().__init__(f"state k={k}: {reason}")
        self.k = k


@dataclass(frozen=True)
class FieldProblem:
    alpha: float

    def __post_init__(self):
        a = self.alpha
        if not (isinstance(a, (int, float)) and math.isfinite(a)):
            raise ValueError(f"alpha must be a finite real, got {a!r}")
        if a < 0.0 or a > ALPHA_MAX:
            raise ValueError(f"alpha must lie in [0, {ALPHA_MAX}], got {a}")
        object.__setattr__(self, "alpha", float(a))

    @property
    def cbrt_alpha(self) -> float:
        return self.alpha ** (1.0 / 3.0)

    def etas(self, beta: float) -> tuple[float, float]:
        """(eta_hat, eta_bar): transformed coordinates of the left and right wall."""
        a23 = self.alpha ** (2.0 / 3.0)
        return -(beta - self.alpha) / a23, -(beta + self.alpha) / a23


@dataclass(frozen=True)
class EigenState:
    """One solved state.  Transformation-dependent fields are None at alpha = 0."""

    k: int
    beta: float
    eta_hat: float | None = None
    eta_bar: float | None = None
    w: float | None = None
    j_norm: float | None = None
    amplitude: float | None = None
    sign: float = 1.0  # overall sign making dpsi/dxi > 0 at xi = -1
    residual: float | None = None

    @property
    def zero_field(self) -> bool:
        return self.eta_hat is None


@dataclass(frozen=True)
class ForceBalance:
    """Wall forces (dpsi/dxi)^2 at xi = -1 (left) and xi = +1 (right)."""

    k: int
    beta: float
    force_left: float
    force_right: float

    @property
    def difference(self) -> float:
        return self.force_right - self.force_left

    @property
    def force_left_half(self) -> float:
        return 0.5 * self.force_left

    @property
    def force_right_half(self) -> float:
        return 0.5 * self.force_right

    @property
    def difference_half(self) -> float:
        return 0.5 * self.difference


def _require_field(problem: FieldProblem):
    if problem.alpha == 0.0:
        raise ValueError("alpha = 0 has no Airy representation; use the zero-field path")


def characteristic(problem: FieldProblem, beta: float) -> float:
    """Boundary determinant D(beta); its zeros are the eigenvalues."""
    _require_field(problem)
    eh, eb = problem.etas(beta)
    vh, vb = airy(eh), airy(eb)
    return vh.ai * vb.bi - vb.ai * vh.bi


def characteristic_derivative(problem: FieldProblem, beta: float) -> float:
    """dD/dbeta, using d(eta)/d(beta) = -alpha^{-2/3} at both walls."""
    _require_field(problem)
    eh, eb = problem.etas(beta)
    vh, vb = airy(eh), airy(eb)
    s = vh.aip * vb.bi + vh.ai * vb.bip - vb.aip * vh.bi - vb.ai * vh.bip
    return -s / problem.alpha ** (2.0 / 3.0)


def _polish(problem: FieldProblem, beta: float, lo: float, hi: float) -> tuple[float, float]:
    # a few extra Newton steps, kept only while |D| keeps dropping
    d = characteristic(problem, beta)
    for _ in range(POLISH_STEPS):
        if d == 0.0:
            break
        dd = characteristic_derivative(problem, beta)
        if dd == 0.0:
            break
        trial = beta - d / dd
        if not lo <= trial <= hi or trial == beta:
            break
        dt = characteristic(problem, trial)
        if abs(dt) >= abs(d):
            break
        beta, d = trial, dt
    return beta, d


def _mixing_ratio(eh: float, eb: float) -> float:
    vh, vb = airy(eh), airy(eb)
    v = vh if abs(vh.bi) >= abs(vb.bi) else vb
    return v.ai / v.bi


def _f(w: float, eta: float) -> float:
    v = airy(eta)
    return v.ai - w * v.bi


def _fprime(w: float, eta: float) -> float:
    v = airy(eta)
    return v.aip - w * v.bip


def j_analytic(state: EigenState) -> float:
    """Normalisation integral of f^2 from its wall slopes: f'(eta_bar)^2 - f'(eta_hat)^2."""
    if state.zero_field:
        raise ValueError("J is not defined for the zero-field state")
    return _fprime(state.w, state.eta_bar) ** 2 - _fprime(state.w, state.eta_hat) ** 2


def j_quadrature(state: EigenState, order: int = DEFAULT_ORDER, panels: int = 1) -> float:
    """Normalisation integral of f^2 over (eta_bar, eta_hat) by Gauss-Legendre."""
    if state.zero_field:
        raise ValueError("J is not defined for the zero-field state")
    rule = gauss_rule(order)
    w = state.w

    def f2(eta):
        return _f(w, eta) ** 2

    edges = np.linspace(state.eta_bar, state.eta_hat, panels + 1)
    edges[0], edges[-1] = state.eta_bar, state.eta_hat
    return math.fsum(integrate(f2, edges[i], edges[i + 1], rule) for i in range(panels))


def _build_state(problem: FieldProblem, k: int, beta: float, residual: float,
                 j_method: JMethod, gauss_order: int) -> EigenState:
    eh, eb = problem.etas(beta)
    w = _mixing_ratio(eh, eb)
    state = EigenState(k=k, beta=beta, eta_hat=eh, eta_bar=eb, w=w, residual=residual)
    if j_method == "analytic":
        j = j_analytic(state)
    elif j_method == "quadrature":
        j = j_quadrature(state, gauss_order)
    else:
        raise ValueError(f"unknown J method {j_method!r}")
    if not j > 0.0:
        raise EigenSearchError(k, f"non-positive normalisation integral {j}")
    amplitude = math.sqrt(2.0 * problem.cbrt_alpha / j)
    sign = -1.0 if _fprime(w, eh) > 0.0 else 1.0
    return EigenState(k=k, beta=beta, eta_hat=eh, eta_bar=eb, w=w, j_norm=j,
                      amplitude=amplitude, sign=sign, residual=residual)


def zero_field_eigenvalues(count: int) -> list[EigenState]:
    """States sqrt(2) sin(k pi (xi + 1)/2) with beta_k = k^2 pi^2 / 4."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return [EigenState(k=k, beta=k * k * math.pi ** 2 / 4.0, residual=0.0)
            for k in range(1, count + 1)]


def eigenvalues(problem: FieldProblem, count: int, j_method: JMethod = "analytic",
                gauss_order: int = DEFAULT_ORDER) -> list[EigenState]:
    """The lowest ``count`` states, in increasing beta.

    The determinant is scanned upward from beta = -alpha (the bottom of the
    potential) in steps of pi^2/8 and each sign change is polished by
    bracketed Newton.  ``alpha = 0`` is routed to the closed-form sine states.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if problem.alpha == 0.0:
        return zero_field_eigenvalues(count)

    def d(beta):
        return characteristic(problem, beta)

    def dd(beta):
        return characteristic_derivative(problem, beta)

    brackets: list[Bracket] = []
    lo = -problem.alpha
    window = SCAN_STEP * SCAN_CHUNK
    while len(brackets) < count:
        try:
            found = scan_brackets(d, lo, lo + window, SCAN_STEP, count - len(brackets))
        except AiryDomainError as exc:
            raise EigenSearchError(len(brackets) + 1, str(exc)) from exc
        # a root sitting exactly on the shared window edge would be seen twice
        for b in found:
            if not brackets or b.lo >= brackets[-1].hi:
                brackets.append(b)
        lo += window

    states = []
    for k, b in enumerate(brackets[:count], start=1):
        try:
            res = newton_safeguarded(d, dd, b, tol_x=TOL_BETA, max_iter=MAX_ITER)
        except RootNotConverged as exc:
            raise EigenSearchError(k, str(exc)) from exc
        beta, resid = _polish(problem, res.root, b.lo, b.hi)
        states.append(_build_state(problem, k, beta, resid, j_method, gauss_order))
    return states


def eigenfunction(state: EigenState, problem: FieldProblem, xi: float) -> float:
    """Normalised psi(xi) for -1 <= xi <= 1."""
    xi = float(xi)
    if not -1.0 <= xi <= 1.0:
        raise ValueError(f"xi = {xi} outside the box [-1, 1]")
    if problem.alpha == 0.0 or state.zero_field:
        return math.sqrt(2.0) * math.sin(state.k * math.pi * (xi + 1.0) / 2.0)
    # measured from the left wall so that xi = -1 maps to eta_hat exactly
    eta = state.eta_hat - problem.cbrt_alpha * (xi + 1.0)
    if xi == 1.0:
        eta = state.eta_bar
    return state.sign * state.amplitude * _f(state.w, eta)


def wavefunction(state: EigenState, problem: FieldProblem, xis: Iterable[float]) -> np.ndarray:
    return np.array([eigenfunction(state, problem, x) for x in xis])


def boundary_forces(state: EigenState, problem: FieldProblem) -> ForceBalance:
    """Squared wall slopes (2 alpha / J) f'(eta)^2; 2 beta on both walls at alpha = 0."""
    if problem.alpha == 0.0 or state.zero_field:
        return ForceBalance(state.k, state.beta, 2.0 * state.beta, 2.0 * state.beta)
    scale = 2.0 * problem.alpha / state.j_norm
    left = scale * _fprime(state.w, state.eta_hat) ** 2
    right = scale * _fprime(state.w, state.eta_bar) ** 2
    return ForceBalance(state.k, state.beta, left, right)


def force_sweep(problem: FieldProblem, kmax: int, j_method: JMethod = "analytic") -> list[ForceBalance]:
    return [boundary_forces(s, problem) for s in eigenvalues(problem, kmax, j_method)]
