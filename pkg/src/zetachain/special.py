"""Gamma, digamma and polygamma at arbitrary precision.

All three follow the same scheme: shift the argument upward by recurrence
until the asymptotic (Stirling-type) series converges below the context
tolerance, then sum the series.  The series coefficients are exact Bernoulli
rationals from the exact layer, so these routines are independent of
mpmath's own special-function code (mpmath is used for elementary
operations only); the test suite exploits that independence for
cross-checks.
"""

from __future__ import annotations

import math

import mpmath
from mpmath import mpf

from .exact import bernoulli
from .precision import PrecisionContext


class DomainError(ValueError):
    """Argument outside the domain of a special function (e.g. a pole)."""


def _shift_threshold(dps: int, order: int = 0) -> int:
    # Asymptotic tail behaves like (2j+order)! / ((2pi x)^(2j) x^order);
    # x ~ 0.4*dps plus the derivative order keeps the optimal term below
    # 10^-dps with margin.
    return int(0.4 * dps) + order + 5


def _log_gamma_asymptotic(x: mpf, dps: int) -> mpf:
    # Stirling series; requires x >= _shift_threshold(dps).
    tol = mpf(10) ** (-dps - 2)
    s = (x - mpf(1) / 2) * mpmath.log(x) - x + mpmath.log(2 * mpmath.pi) / 2
    xpow = x
    x2 = x * x
    for j in range(1, 4 * dps):
        b2j = bernoulli(2 * j)
        term = mpf(b2j.numerator) / (b2j.denominator * 2 * j * (2 * j - 1)) / xpow
        s += term
        if abs(term) < tol:
            return s
        xpow *= x2
    raise RuntimeError("Stirling series did not converge; argument shifted too little")


def gamma_fn(s, ctx: PrecisionContext) -> mpf:
    """Gamma(s) for real s, poles at non-positive integers rejected."""
    with ctx.workdps():
        x = mpf(s)
        if x <= 0 and x == mpmath.floor(x):
            raise DomainError(f"gamma pole at s = {s}")
        if x < mpf(1) / 2:
            # reflection keeps the asymptotic argument positive
            refl = mpmath.pi / mpmath.sin(mpmath.pi * x)
            return ctx.round(refl / gamma_fn(1 - x, ctx))
        thresh = _shift_threshold(ctx.dps)
        shift = max(0, int(math.ceil(thresh - x)))
        lg = _log_gamma_asymptotic(x + shift, ctx.dps)
        val = mpmath.exp(lg)
        for i in range(shift):
            val /= x + i
        return ctx.round(val)


def digamma(x, ctx: PrecisionContext) -> mpf:
    """psi(x) for x > 0 via upward recurrence then the asymptotic series."""
    with ctx.workdps():
        t = mpf(x)
        if t <= 0:
            raise DomainError("digamma requires x > 0")
        thresh = _shift_threshold(ctx.dps)
        shift = max(0, int(math.ceil(thresh - t)))
        z = t + shift
        tol = mpf(10) ** (-ctx.dps - 2)
        s = mpmath.log(z) - 1 / (2 * z)
        z2 = z * z
        zpow = z2
        for j in range(1, 4 * ctx.dps):
            b2j = bernoulli(2 * j)
            term = mpf(b2j.numerator) / (b2j.denominator * 2 * j) / zpow
            s -= term
            if abs(term) < tol:
                break
            zpow *= z2
        for i in range(shift):
            s -= 1 / (t + i)
        return ctx.round(s)


def polygamma(m: int, x, ctx: PrecisionContext) -> mpf:
    """psi^(m)(x) for x > 0, m >= 0."""
    if m < 0:
        raise ValueError("derivative order must be non-negative")
    if m == 0:
        return digamma(x, ctx)
    with ctx.workdps():
        t = mpf(x)
        if t <= 0:
            raise DomainError("polygamma requires x > 0")
        thresh = _shift_threshold(ctx.dps, order=m)
        shift = max(0, int(math.ceil(thresh - t)))
        z = t + shift
        tol = mpf(10) ** (-ctx.dps - 2)
        # psi^(m)(z) = (-1)^(m-1) [ (m-1)!/z^m + m!/(2 z^(m+1))
        #              + sum_j B_2j (2j+m-1)!/((2j)! z^(2j+m)) ]
        zm = z**m
        s = mpf(math.factorial(m - 1)) / zm + mpf(math.factorial(m)) / (2 * zm * z)
        z2 = z * z
        zpow = zm * z2
        fact_ratio = mpf(math.factorial(m + 1)) / 2  # (2j+m-1)!/(2j)! at j=1
        for j in range(1, 4 * ctx.dps):
            b2j = bernoulli(2 * j)
            term = mpf(b2j.numerator) / b2j.denominator * fact_ratio / zpow
            s += term
            if abs(term) < tol:
                break
            zpow *= z2
            fact_ratio *= mpf((2 * j + m) * (2 * j + m + 1)) / ((2 * j + 1) * (2 * j + 2))
        sign = 1 if (m % 2 == 1) else -1
        s *= sign
        # downward recurrence: psi^(m)(t) = psi^(m)(t+1) + (-1)^(m+1) m!/t^(m+1)
        rec_sign = mpf(math.factorial(m)) * (1 if m % 2 == 1 else -1)
        for i in range(shift):
            s += rec_sign / (t + i) ** (m + 1)
        return ctx.round(s)


def hsmooth(t, ctx: PrecisionContext) -> mpf:
    """Smooth extension of the harmonic numbers: H(t) = gamma + psi(t+1), t > 0."""
    with ctx.workdps():
        tv = mpf(t)
        if tv <= 0:
            raise DomainError("hsmooth requires t > 0")
        return ctx.round(mpmath.euler + digamma(tv + 1, ctx))


def hsmooth_pow_derivs(t, a, shift, max_order: int, ctx: PrecisionContext) -> list[mpf]:
    """Derivatives d^m/dt^m [ H(t) * (t+shift)^a ] for m = 0..max_order.

    H(t) = gamma + psi(t+1); the power factor has real exponent a and an
    integer offset (shift = 0 for n^a-type sums, 1 for (n+1)^a-type).
    Used by the Euler-Maclaurin tails and the Ramanujan summation scheme,
    where the odd-order derivatives at the cut point are needed exactly
    via the product rule rather than by numeric differentiation.
    """
    with ctx.workdps():
        tv = mpf(t)
        av = mpf(a)
        base = tv + shift
        # u-side: H(t) and psi^(i)(t+1); v-side: falling-factorial powers
        u = [mpmath.euler + digamma(tv + 1, ctx)]
        for i in range(1, max_order + 1):
            u.append(polygamma(i, tv + 1, ctx))
        v = []
        coeff = mpf(1)
        for q in range(max_order + 1):
            v.append(coeff * base ** (av - q))
            coeff *= av - q
        out = []
        for m in range(max_order + 1):
            s = mpf(0)
            for i in range(m + 1):
                s += mpf(math.comb(m, i)) * u[i] * v[m - i]
            out.append(ctx.round(s))
        return out
