"""Double-exponential quadrature on finite and semi-infinite intervals.

tanh-sinh handles algebraic/logarithmic endpoint singularities on finite
intervals; exp-sinh covers [a, inf) for integrands with at least algebraic
decay.  Levels are refined (mesh halved) until two successive estimates
agree below the target tolerance; the returned error estimate is the last
inter-level difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import mpmath
from mpmath import mpf

from .precision import PrecisionContext

_MAX_LEVEL = 12


@dataclass(frozen=True)
class QuadratureResult:
    value: mpf
    error: mpf
    converged: bool
    levels: int

    def require_converged(self) -> mpf:
        if not self.converged:
            raise ArithmeticError(
                f"quadrature did not converge (estimate {self.value}, error {self.error})"
            )
        return self.value


def _tanh_sinh_sum(f, a: mpf, b: mpf, level: int, eps: mpf) -> mpf:
    # sum over nodes x = mid + half*tanh(pi/2 sinh(kh)) at mesh h = 2^-level
    half = (b - a) / 2
    mid = (a + b) / 2
    h = mpf(2) ** (-level)
    piov2 = mpmath.pi / 2
    total = mpf(0)
    k = 0
    while True:
        t = k * h
        sh = mpmath.sinh(t)
        ch = mpmath.cosh(t)
        u = mpmath.tanh(piov2 * sh)
        w = piov2 * ch / mpmath.cosh(piov2 * sh) ** 2
        if w < eps and k > 0:
            break
        if k == 0:
            total += w * f(mid)
        else:
            contrib = mpf(0)
            for x in (mid + half * u, mid - half * u):
                if x != a and x != b:  # clamp exactly-at-endpoint nodes away
                    contrib += f(x)
            total += w * contrib
        k += 1
        if k > 20 * 2**level:
            break
    return total * half * h


def _exp_sinh_sum(f, a: mpf, level: int, eps: mpf, decay_eps: mpf) -> mpf:
    # nodes x = a + exp(pi/2 sinh(kh)); covers [a, inf)
    h = mpf(2) ** (-level)
    piov2 = mpmath.pi / 2
    total = mpf(0)
    # negative k side approaches a, positive k side goes to infinity
    for direction in (1, -1):
        k = 0 if direction == 1 else 1
        small_count = 0
        while True:
            t = direction * k * h
            ex = mpmath.exp(piov2 * mpmath.sinh(t))
            w = piov2 * mpmath.cosh(t) * ex
            x = a + ex
            contrib = w * f(x)
            total += contrib
            k += 1
            if abs(contrib) < decay_eps:
                small_count += 1
                if small_count >= 3:
                    break
            else:
                small_count = 0
            if k > 20 * 2**level:
                break
    return total * h


def integrate(
    f: Callable[[mpf], mpf],
    a,
    b,
    ctx: PrecisionContext,
    tol_offset: int = 5,
    min_level: int = 3,
) -> QuadratureResult:
    """Integrate f over [a, b] (b may be mpmath.inf) to ~10^(-digits+tol_offset)."""
    with ctx.workdps():
        tol = mpf(10) ** (-ctx.digits + tol_offset)
        eps = mpf(10) ** (-ctx.dps - 5)
        a = mpf(a)
        infinite = b == mpmath.inf
        if not infinite:
            b = mpf(b)
            if b < a:
                res = integrate(f, b, a, ctx, tol_offset, min_level)
                return QuadratureResult(-res.value, res.error, res.converged, res.levels)
        prev = None
        value = mpf(0)
        err = mpf("inf")
        for level in range(min_level, _MAX_LEVEL + 1):
            if infinite:
                value = _exp_sinh_sum(f, a, level, eps, eps)
            else:
                value = _tanh_sinh_sum(f, a, b, level, eps)
            if prev is not None:
                err = abs(value - prev)
                scale = max(mpf(1), abs(value))
                if err < tol * scale:
                    return QuadratureResult(ctx.round(value), err, True, level)
            prev = value
        return QuadratureResult(ctx.round(value), err, False, _MAX_LEVEL)
