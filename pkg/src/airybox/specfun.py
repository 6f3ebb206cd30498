"""Airy functions Ai, Bi and their derivatives on the real line.

Three regions are used:

* ``|x| <= SERIES_RADIUS``: Maclaurin series about the origin.
* ``SERIES_RADIUS < |x| < ASYMPTOTIC_RADIUS``: one Taylor step of the Airy
  equation ``y'' = x y`` from the nearest point of a cached anchor table.
  The anchors are built once by marching in the numerically stable direction
  (outwards for the oscillatory side and for Bi, inwards from the asymptotic
  region for the decaying Ai).
* ``|x| >= ASYMPTOTIC_RADIUS``: the standard large-argument expansions in
  ``zeta = (2/3)|x|**1.5``, optimally truncated.

Everything is plain float64 arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

SERIES_RADIUS = 2.0
ASYMPTOTIC_RADIUS = 10.0
X_MAX = 25.0
X_MIN = -1.0e5

ANCHOR_SPACING = 0.5
SERIES_RTOL = 1e-17
SERIES_MAX_TERMS = 200
ASYMPTOTIC_MAX_TERMS = 20

# Ai(0), -Ai'(0); Bi(0) = sqrt(3) Ai(0), Bi'(0) = -sqrt(3) Ai'(0)
AI0 = 1.0 / (3.0 ** (2.0 / 3.0) * math.gamma(2.0 / 3.0))
AIP0 = -1.0 / (3.0 ** (1.0 / 3.0) * math.gamma(1.0 / 3.0))
SQRT3 = math.sqrt(3.0)
SQRT_PI = math.sqrt(math.pi)


class AiryDomainError(ValueError):
    """Argument outside the range where the evaluation is validated."""


@dataclass(frozen=True)
class AiryValues:
    x: float
    ai: float
    bi: float
    aip: float
    bip: float

    @property
    def wronskian(self) -> float:
        return self.ai * self.bip - self.aip * self.bi


def _maclaurin(x: float) -> tuple[float, float, float, float]:
    # f = sum 3^k (1/3)_k x^{3k}/(3k)!,  g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!
    x3 = x * x * x
    tf, tg = 1.0, x
    f, g = tf, tg
    fp, gp = 0.0, 1.0
    # derivative terms: d/dx of x^{3k}, x^{3k+1}
    tfp, tgp = 0.0, 1.0
    for k in range(1, SERIES_MAX_TERMS):
        tf *= x3 / ((3 * k - 1) * (3 * k))
        tg *= x3 / ((3 * k) * (3 * k + 1))
        tfp = tf * (3 * k) / x if x != 0.0 else 0.0
        tgp = tg * (3 * k + 1) / x if x != 0.0 else 0.0
        f += tf
        g += tg
        fp += tfp
        gp += tgp
        scale = max(abs(f), abs(g), abs(fp), abs(gp))
        if max(abs(tf), abs(tg), abs(tfp), abs(tgp)) < SERIES_RTOL * scale:
            break
    c1, c2 = AI0, -AIP0
    ai = c1 * f - c2 * g
    aip = c1 * fp - c2 * gp
    bi = SQRT3 * (c1 * f + c2 * g)
    bip = SQRT3 * (c1 * fp + c2 * gp)
    return ai, bi, aip, bip


def _asymptotic_coefficients() -> tuple[list[float], list[float]]:
    u = [1.0]
    for k in range(1, 2 * ASYMPTOTIC_MAX_TERMS + 2):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k))
    v = [-(6 * k + 1) / (6 * k - 1) * uk for k, uk in enumerate(u)]
    return u, v


_U, _V = _asymptotic_coefficients()


def _truncated_sum(terms) -> float:
    """Sum a divergent asymptotic series, stopping at its smallest term."""
    total = 0.0
    previous = math.inf
    for n, t in enumerate(terms):
        if n >= ASYMPTOTIC_MAX_TERMS or abs(t) > previous:
            break
        total += t
        if abs(t) < 1e-17 * abs(total):
            break
        previous = abs(t)
    return total


def _asymptotic_positive(x: float) -> tuple[float, float, float, float]:
    zeta = 2.0 / 3.0 * x * math.sqrt(x)
    q = x ** 0.25
    su_alt = _truncated_sum((-1) ** k * _U[k] / zeta ** k for k in range(len(_U)))
    sv_alt = _truncated_sum((-1) ** k * _V[k] / zeta ** k for k in range(len(_V)))
    su = _truncated_sum(_U[k] / zeta ** k for k in range(len(_U)))
    sv = _truncated_sum(_V[k] / zeta ** k for k in range(len(_V)))
    decay = math.exp(-zeta) / SQRT_PI
    growth = math.exp(zeta) / SQRT_PI
    ai = 0.5 * decay / q * su_alt
    aip = -0.5 * decay * q * sv_alt
    bi = growth / q * su
    bip = growth * q * sv
    return ai, bi, aip, bip


def _asymptotic_negative(x: float) -> tuple[float, float, float, float]:
    z = -x
    zeta = 2.0 / 3.0 * z * math.sqrt(z)
    q = z ** 0.25
    n = len(_U) // 2
    pu = _truncated_sum((-1) ** k * _U[2 * k] / zeta ** (2 * k) for k in range(n))
    qu = _truncated_sum((-1) ** k * _U[2 * k + 1] / zeta ** (2 * k + 1) for k in range(n))
    pv = _truncated_sum((-1) ** k * _V[2 * k] / zeta ** (2 * k) for k in range(n))
    qv = _truncated_sum((-1) ** k * _V[2 * k + 1] / zeta ** (2 * k + 1) for k in range(n))
    phase = zeta - 0.25 * math.pi
    c, s = math.cos(phase), math.sin(phase)
    ai = (c * pu + s * qu) / (SQRT_PI * q)
    bi = (-s * pu + c * qu) / (SQRT_PI * q)
    aip = q * (s * pv - c * qv) / SQRT_PI
    bip = q * (c * pv + s * qv) / SQRT_PI
    return ai, bi, aip, bip


def taylor_step(x0: float, y0: float, dy0: float, h: float) -> tuple[float, float]:
    """Advance a solution of ``y'' = x y`` from ``x0`` to ``x0 + h``.

    The Taylor coefficients about ``x0`` obey an exact three-term recurrence,
    so the only error is truncation, which is driven below rounding.
    """
    c_prev2, c_prev1 = y0, dy0  # c_{n-2}, c_{n-1} at n = 2
    c_prev3 = 0.0
    y = y0 + dy0 * h
    dy = dy0
    hp = h  # h^{n-1}
    small = 0
    for n in range(2, 120):
        c = (x0 * c_prev2 + c_prev3) / (n * (n - 1))
        dterm = n * c * hp
        hp *= h
        term = c * hp
        y += term
        dy += dterm
        if abs(term) <= SERIES_RTOL * abs(y) and abs(dterm) <= SERIES_RTOL * abs(dy):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        c_prev3, c_prev2, c_prev1 = c_prev2, c_prev1, c
    return y, dy


def _raw(x: float) -> tuple[float, float, float, float]:
    if abs(x) <= SERIES_RADIUS:
        return _maclaurin(x)
    if x >= ASYMPTOTIC_RADIUS:
        return _asymptotic_positive(x)
    if x <= -ASYMPTOTIC_RADIUS:
        return _asymptotic_negative(x)
    return _from_anchor(x)


@lru_cache(maxsize=1)
def _anchor_table() -> dict[int, tuple[float, float, float, float]]:
    """Values (ai, bi, aip, bip) at ``j * ANCHOR_SPACING`` for the Taylor region."""
    h = ANCHOR_SPACING
    j_series = int(round(SERIES_RADIUS / h))
    j_asym = int(round(ASYMPTOTIC_RADIUS / h))
    table: dict[int, tuple[float, float, float, float]] = {}
    for j in range(-j_series, j_series + 1):
        table[j] = _maclaurin(j * h)

    # Oscillatory side: both solutions are marched outwards from the series.
    ai, bi, aip, bip = table[-j_series]
    for j in range(-j_series - 1, -j_asym - 1, -1):
        x0 = (j + 1) * h
        ai, aip = taylor_step(x0, ai, aip, -h)
        bi, bip = taylor_step(x0, bi, bip, -h)
        table[j] = (ai, bi, aip, bip)

    # Bi grows to the right, Ai grows to the left; march each where it grows.
    bis = {}
    bi, bip = table[j_series][1], table[j_series][3]
    for j in range(j_series + 1, j_asym + 1):
        bi, bip = taylor_step((j - 1) * h, bi, bip, h)
        bis[j] = (bi, bip)
    ais = {}
    ai, _, aip, _ = _asymptotic_positive(j_asym * h)
    ais[j_asym] = (ai, aip)
    for j in range(j_asym - 1, j_series, -1):
        ai, aip = taylor_step((j + 1) * h, ai, aip, -h)
        ais[j] = (ai, aip)
    for j in range(j_series + 1, j_asym + 1):
        table[j] = (ais[j][0], bis[j][0], ais[j][1], bis[j][1])
    return table


def _from_anchor(x: float) -> tuple[float, float, float, float]:
    j = int(round(x / ANCHOR_SPACING))
    x0 = j * ANCHOR_SPACING
    ai0, bi0, aip0, bip0 = _anchor_table()[j]
    h = x - x0
    ai, aip = taylor_step(x0, ai0, aip0, h)
    bi, bip = taylor_step(x0, bi0, bip0, h)
    return ai, bi, aip, bip


def check_argument(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise AiryDomainError(f"Airy argument must be finite, got {x}")
    if x > X_MAX or x < X_MIN:
        raise AiryDomainError(
            f"Airy argument {x} outside validated range [{X_MIN}, {X_MAX}]"
        )
    return x


def airy(x: float) -> AiryValues:
    """Return Ai, Bi, Ai', Bi' at a real point ``x`` in ``[X_MIN, X_MAX]``."""
    x = check_argument(x)
    ai, bi, aip, bip = _raw(x)
    return AiryValues(x=x, ai=ai, bi=bi, aip=aip, bip=bip)


def _ai_zero_estimate(k: int) -> float:
    t = 3.0 * math.pi * (4 * k - 1) / 8.0
    t2 = t ** -2
    return -t ** (2.0 / 3.0) * (
        1.0 + t2 * (5.0 / 48.0 + t2 * (-5.0 / 36.0 + t2 * (77125.0 / 82944.0)))
    )


def airy_zero_count_below(x: float) -> int:
    """Number of zeros of Ai in ``(x, 0)`` from the asymptotic zero formula."""
    x = float(x)
    if not math.isfinite(x) or x >= 0.0:
        raise AiryDomainError(f"zero count needs a finite negative argument, got {x}")
    # a_k ~ -(3 pi (4k - 1) / 8)^{2/3}; solve for k, then correct locally
    k = max(0, int((8.0 / (3.0 * math.pi) * (-x) ** 1.5 + 1.0) / 4.0) - 1)
    while k > 0 and _ai_zero_estimate(k) <= x:
        k -= 1
    while _ai_zero_estimate(k + 1) > x:
        k += 1
    return k
