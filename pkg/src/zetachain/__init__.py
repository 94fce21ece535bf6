"""Exact and arbitrary-precision toolkit for regularized Euler-sum recurrences.

Computes exact Bernoulli/harmonic data, evaluates zeta(s) and zeta'(s) to
arbitrary precision, verifies the telescoping identity for Euler sums via
three independent routes (direct summation, generating functions, Mellin
transforms), evaluates the Hankel-contour interpolation of the Bernoulli
numbers, solves the zeta'(0)-seeded recurrence chain exactly in
Q + Q*gamma + Q*ln(2pi), and quantifies its discrepancy against classical
values alongside a Ramanujan-summation oracle.
"""

__version__ = "0.1.0"
