"""Sign-change root isolation and safeguarded Newton polishing in 1D."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

Func = Callable[[float], float]

DEFAULT_TOL_X = 1e-13
DEFAULT_MAX_ITER = 100
DEGENERATE_WIDTH = 1e-12  # times the scan step


class RootNotConverged(RuntimeError):
    pass


def _opposite(a: float, b: float) -> bool:
    # sign test without forming a*b, which can underflow to zero
    return (a < 0.0 < b) or (b < 0.0 < a)


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"bracket needs lo < hi, got ({self.lo}, {self.hi})")
        if not _opposite(self.f_lo, self.f_hi):
            raise ValueError("bracket endpoints must have strictly opposite signs")

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int
    converged: bool


def _degenerate(f: Func, x: float, step: float) -> Bracket | None:
    # f vanishes exactly at a sample: widen symmetrically until the sign flips
    half = 0.5 * step * DEGENERATE_WIDTH
    for _ in range(60):
        lo, hi = x - half, x + half
        f_lo, f_hi = f(lo), f(hi)
        if _opposite(f_lo, f_hi):
            return Bracket(lo, hi, f_lo, f_hi)
        half *= 2.0
        if half > 0.5 * step:
            break
    return None


def scan_brackets(f: Func, lo: float, hi: float, step: float, max_roots: int) -> list[Bracket]:
    """Sample ``f`` on a uniform grid and return the sign-change intervals.

    Brackets come back in increasing order; scanning stops after
    ``max_roots`` of them.
    """
    if not lo < hi:
        raise ValueError("scan needs lo < hi")
    if not step > 0.0:
        raise ValueError("scan step must be positive")
    out: list[Bracket] = []
    if max_roots <= 0:
        return out
    n = int(math.ceil((hi - lo) / step))
    x_prev, f_prev = lo, f(lo)
    if f_prev == 0.0:
        b = _degenerate(f, lo, step)
        if b is not None:
            out.append(b)
    for i in range(1, n + 1):
        x = min(lo + i * step, hi)
        fx = f(x)
        if fx == 0.0:
            b = _degenerate(f, x, step)
            if b is not None:
                out.append(b)
        elif _opposite(f_prev, fx):
            out.append(Bracket(x_prev, x, f_prev, fx))
        if len(out) >= max_roots:
            break
        x_prev, f_prev = x, fx
    return out[:max_roots]


def newton_safeguarded(
    f: Func,
    df: Func,
    bracket: Bracket,
    tol_x: float = DEFAULT_TOL_X,
    tol_f: float | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RootResult:
    """Newton-Raphson kept inside a shrinking sign-change bracket.

    A Newton step that would land outside the current bracket (or a zero
    derivative) is replaced by bisection. ``tol_f`` defaults to ``1e-12``
    times the larger endpoint magnitude of ``f``. Convergence means
    ``|f| <= tol_f`` or the bracket has shrunk to ``tol_x`` (or to adjacent
    floats).
    """
    if tol_f is None:
        tol_f = 1e-12 * max(abs(bracket.f_lo), abs(bracket.f_hi))
    lo, hi = bracket.lo, bracket.hi
    f_lo = bracket.f_lo
    x = 0.5 * (lo + hi)
    for it in range(1, max_iter + 1):
        fx = f(x)
        if abs(fx) <= tol_f:
            return RootResult(x, fx, it, True)
        if (fx < 0.0) == (f_lo < 0.0):
            lo, f_lo = x, fx
        else:
            hi = x
        if hi - lo <= tol_x:
            x = 0.5 * (lo + hi)
            return RootResult(x, f(x), it, True)
        d = df(x)
        x_new = x - fx / d if d != 0.0 and math.isfinite(d) else math.nan
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
            if not (lo < x_new < hi):
                # no float strictly inside: bracket is as tight as it gets
                return RootResult(x, fx, it, True)
        x = x_new
    raise RootNotConverged(
        f"Newton-bisection did not converge in {max_iter} iterations on [{lo}, {hi}]"
    )
