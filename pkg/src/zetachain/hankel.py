"""Hankel-contour evaluation of the Bernoulli interpolation and its derivative.

The interpolation sends real s to B_s with B_s = -s zeta(1-s); at positive
integers it reproduces the Bernoulli numbers (B_1 = +1/2).  The contour is
the standard Hankel path: in along the lower edge of the negative real
axis, counterclockwise around a circle of radius < 2pi, out along the
upper edge.  Branch of z^a and log z: cut on the negative real axis,
arg z = -pi below, +pi above.

Sign calibration: with this orientation the raw contour integral
I(u) = (1/2pi i) oint z^-(u+1) e^z/(1-e^z) dz satisfies B_(u+1) =
-Gamma(u+2) I(u); the sign is anchored empirically on B_1 = +1/2 and
checked at the even integers (see tests), since the two printed forms of
the integrand differ by elementary rewriting that does not pin the
orientation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath import mpf

from .precision import PrecisionContext
from .quadrature import integrate
from .special import digamma, gamma_fn
from .zeta import zeta_em, zeta_prime_oracle


@dataclass(frozen=True)
class ContourSpec:
    radius: float = 1.0
    truncation: float | None = None  # rays cut at Re z = -T; default from precision
    nodes_circle: int = 64  # minimum node counts; refinement doubles from here
    nodes_ray: int = 64

    def validate(self) -> None:
        if not 0 < self.radius < 2 * math.pi:
            raise ValueError("contour radius must lie strictly inside (0, 2pi)")
        if self.truncation is not None and self.truncation <= self.radius:
            raise ValueError("ray truncation must exceed the circle radius")

    def cutoff(self, ctx: PrecisionContext) -> mpf:
        # e^-T below half-precision target, with margin
        if self.truncation is not None:
            return mpf(self.truncation)
        return mpf(ctx.digits) * mpmath.log(10) / 2 + 25

    def min_level(self) -> int:
        n = max(self.nodes_circle, self.nodes_ray)
        return max(3, int(math.ceil(math.log2(max(n, 8) / 8))))


def _contour_integral(u, with_log: bool, spec: ContourSpec, ctx: PrecisionContext):
    """(1/2pi i) oint z^-(u+1) (-log z)^b e^z/(1-e^z) dz, b = 1 if with_log."""
    spec.validate()
    with ctx.workdps():
        uv = mpf(u)
        r = mpf(spec.radius)
        T = spec.cutoff(ctx)
        expo = -(uv + 1)
        off = (ctx.digits + 1) // 2 - 3  # target ~10^(-digits/2)

        def ray(t, theta_pi):
            # z = t e^(i theta), theta = +-pi: log z = log t + i theta
            logz = mpmath.log(t) + mpmath.mpc(0, theta_pi * mpmath.pi)
            val = mpmath.exp(expo * logz) * mpmath.exp(-t) / (-mpmath.expm1(-t))
            if with_log:
                val *= -logz
            return val

        def circle(theta):
            logz = mpmath.log(r) + mpmath.mpc(0, theta)
            z = r * mpmath.mpc(mpmath.cos(theta), mpmath.sin(theta))
            val = mpmath.exp(expo * logz) * mpmath.exp(z) / (1 - mpmath.exp(z))
            if with_log:
                val *= -logz
            return val * mpmath.mpc(0, 1) * z  # dz = i z d(theta)

        lvl = spec.min_level()
        lower = integrate(
            lambda t: ray(t, -1), r, T, ctx, tol_offset=off, min_level=lvl
        ).require_converged()
        upper = integrate(
            lambda t: ray(t, +1), r, T, ctx, tol_offset=off, min_level=lvl
        ).require_converged()
        circ = integrate(
            circle, -mpmath.pi, mpmath.pi, ctx, tol_offset=off, min_level=lvl
        ).require_converged()
        total = (lower - upper + circ) / mpmath.mpc(0, 2) / mpmath.pi
        return total


def bernoulli_interp(s, spec: ContourSpec, ctx: PrecisionContext) -> mpf:
    """B_(s+1) from the Hankel contour; s > -1."""
    with ctx.workdps():
        sv = mpf(s)
        raw = _contour_integral(sv, False, spec, ctx)
        val = -gamma_fn(sv + 2, ctx) * raw
        return ctx.round(val.real)


def bernoulli_prime_interp(s, spec: ContourSpec, ctx: PrecisionContext) -> mpf:
    """d/ds B_s at real s, differentiating under the contour integral.

    B_s = -Gamma(s+1) I(s-1) gives
    B'_s = -Gamma(s+1) [ psi(s+1) I(s-1) + I'(s-1) ],
    with I' the same contour carrying an extra -log z factor.
    """
    with ctx.workdps():
        sv = mpf(s)
        i0 = _contour_integral(sv - 1, False, spec, ctx)
        i1 = _contour_integral(sv - 1, True, spec, ctx)
        g = gamma_fn(sv + 1, ctx)
        val = -g * (digamma(sv + 1, ctx) * i0 + i1)
        return ctx.round(val.real)


def lemma3_residual(s, spec: ContourSpec, ctx: PrecisionContext) -> mpf:
    """|B_s + s zeta(1-s)| with B_s from the contour, zeta from the oracle."""
    with ctx.workdps():
        sv = mpf(s)
        if sv <= 0:
            raise ValueError("requires s > 0")
        b = bernoulli_interp(sv - 1, spec, ctx)
        return ctx.round(abs(b + sv * zeta_em(1 - sv, ctx)))


def lemma3_prime_residual(s, spec: ContourSpec, ctx: PrecisionContext) -> mpf:
    """|B'_s - (-zeta(1-s) + s zeta'(1-s))|, contour vs oracle."""
    with ctx.workdps():
        sv = mpf(s)
        bp = bernoulli_prime_interp(sv, spec, ctx)
        target = -zeta_em(1 - sv, ctx) + sv * zeta_prime_oracle(1 - sv, ctx)
        return ctx.round(abs(bp - target))
