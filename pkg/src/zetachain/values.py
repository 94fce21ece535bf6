"""Exact symbolic values in the field Q + Q*gamma + Q*ln(2pi).

Every quantity produced by the zeta'(0)-seeded recurrence chain lives in
this three-dimensional rational vector space, so the chain can be solved
with no floating arithmetic at all; numerics enter only when a triple is
evaluated against a precision context.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import mpf

from .precision import PrecisionContext, const_gamma, const_log2pi

RationalLike = Union[int, Fraction]


class SumConvention(enum.Enum):
    """Index range of the double-Bernoulli sum over l + m = k.

    The l = 0 term is excluded in both variants (B_l/l is undefined there);
    A lets m = 0 contribute (l = 1..k), B does not (l = 1..k-1).
    """

    A = "A"
    B = "B"


@dataclass(frozen=True)
class SymbolicValue:
    """a + b*gamma + c*ln(2pi) with exact rational components."""

    a: Fraction
    b: Fraction
    c: Fraction

    @staticmethod
    def of(a: RationalLike = 0, b: RationalLike = 0, c: RationalLike = 0) -> "SymbolicValue":
        return SymbolicValue(Fraction(a), Fraction(b), Fraction(c))

    @staticmethod
    def rational(q: RationalLike) -> "SymbolicValue":
        return SymbolicValue.of(a=q)

    def __add__(self, other: "SymbolicValue") -> "SymbolicValue":
        return SymbolicValue(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "SymbolicValue") -> "SymbolicValue":
        return SymbolicValue(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> "SymbolicValue":
        return SymbolicValue(-self.a, -self.b, -self.c)

    def scale(self, q: RationalLike) -> "SymbolicValue":
        q = Fraction(q)
        return SymbolicValue(self.a * q, self.b * q, self.c * q)

    def __mul__(self, q: RationalLike) -> "SymbolicValue":
        return self.scale(q)

    __rmul__ = __mul__

    def __truediv__(self, q: RationalLike) -> "SymbolicValue":
        return self.scale(Fraction(1, 1) / Fraction(q))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def numeric(self, ctx: PrecisionContext) -> mpf:
        with ctx.workdps():
            val = (
                mpf(self.a.numerator) / self.a.denominator
                + mpf(self.b.numerator) / self.b.denominator * const_gamma(ctx)
                + mpf(self.c.numerator) / self.c.denominator * const_log2pi(ctx)
            )
            return ctx.round(val)

    def as_strings(self) -> dict[str, str]:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}

    def __str__(self) -> str:
        return f"{self.a} + ({self.b})*gamma + ({self.c})*log(2*pi)"


ValueKind = Union[SymbolicValue, mpf]


@dataclass(frozen=True)
class RegularizedSum:
    """A value assigned to sum_{n>=1} H_n n^k, with its provenance.

    provenance is one of closed_form, chain, ramanujan; value is an exact
    SymbolicValue whenever the provenance permits exactness, else an mpf.
    """

    k: int
    value: ValueKind
    convention: SumConvention
    provenance: str

    def numeric(self, ctx: PrecisionContext) -> mpf:
        if isinstance(self.value, SymbolicValue):
            return self.value.numeric(ctx)
        return self.value
