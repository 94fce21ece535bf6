"""Command-line surface: verification suites, chain reports, oracle tables.

Exit codes: 0 when every asserted residual is within tolerance (chain
discrepancies are findings, never failures), 1 when a rigorously-true
suite fails, 2 on usage errors.  Reports are deterministic at fixed
precision and parameters; wall-clock timings live in a separate block.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

import mpmath
from mpmath import mpf

from . import __version__
from .chain import discrepancy_report, solve_chain
from .eulersums import fundamental_lemma_residual, h_euler_shifted, mellin_fundamental_check
from .exact import BernoulliConvention, bernoulli, bernoulli_self_identity
from .hankel import ContourSpec, bernoulli_interp, lemma3_residual
from .precision import PrecisionContext
from .ramanujan import EMScheme, convergent_selftest, ramanujan_sum
from .values import SumConvention
from .zeta import (
    functional_equation_residual,
    zeta_em,
    zeta_neg_int_exact,
    zeta_odd_from_zprime,
    zeta_prime_em,
    zeta_prime_oracle,
)

SUITE_NAMES = (
    "bernoulli",
    "zeta",
    "functional_equation",
    "fundamental_lemma",
    "mellin",
    "hankel",
    "lemma4",
    "ramanujan",
)


def _check(name: str, residual, tolerance) -> dict:
    ok = residual <= tolerance
    return {
        "name": name,
        "status": "pass" if ok else "fail",
        "residual": str(residual),
        "tolerance": str(tolerance),
    }


def _suite_bernoulli(ctx: PrecisionContext) -> list[dict]:
    checks = []
    bad = 0
    for n in range(2, 31):
        if bernoulli_self_identity(n, BernoulliConvention.CONVENTIONAL_MINUS) != 0:
            bad += 1
    checks.append(_check("self_identity_conventional_minus_n2..30", mpf(bad), mpf(0)))
    plus_n2 = bernoulli_self_identity(2, BernoulliConvention.PAPER_PLUS)
    checks.append(
        _check("self_identity_paper_plus_n2_nonzero", mpf(0 if plus_n2 == 2 else 1), mpf(0))
    )
    return checks


def _suite_zeta(ctx: PrecisionContext) -> list[dict]:
    checks = []
    with ctx.workdps():
        tol = ctx.tolerance(5)
        checks.append(_check("zeta2_pi2_over_6", abs(zeta_em(2, ctx) - mpmath.pi**2 / 6), tol))
        worst = mpf(0)
        for k in range(1, 13):
            ex = zeta_neg_int_exact(k)
            diff = abs(zeta_em(1 - k, ctx) - mpf(ex.numerator) / ex.denominator)
            worst = max(worst, diff)
        checks.append(_check("zeta_neg_int_k1..12", worst, tol))
        zp0 = abs(zeta_prime_em(0, ctx) + mpmath.log(2 * mpmath.pi) / 2)
        checks.append(_check("zeta_prime_zero", zp0, ctx.tolerance(8)))
    return checks


def _suite_functional_equation(ctx: PrecisionContext) -> list[dict]:
    with ctx.workdps():
        tol = ctx.tolerance(8)
        return [
            _check(f"functional_equation_s{s}", functional_equation_residual(s, ctx), tol)
            for s in ("1.25", "1.5", "2", "2.5", "3", "4", "6")
        ]


def _suite_fundamental_lemma(ctx: PrecisionContext) -> list[dict]:
    with ctx.workdps():
        tol = ctx.tolerance(10)
        checks = [
            _check(f"fundamental_lemma_s{s}", fundamental_lemma_residual(mpf(s), ctx), tol)
            for s in ("1.25", "2", "3", "4.5")
        ]
        checks.append(
            _check("shifted_sum_s2_equals_zeta3", abs(h_euler_shifted(2, ctx) - zeta_em(3, ctx)), tol)
        )
        return checks


def _suite_mellin(ctx: PrecisionContext) -> list[dict]:
    checks = []
    with ctx.workdps():
        tol = ctx.tolerance(12)
        for s in (2, 3):
            m = mellin_fundamental_check(s, ctx)
            checks.append(_check(f"mellin_h_s{s}", m.residual_h, tol))
            checks.append(_check(f"mellin_shifted_s{s}", m.residual_shifted, tol))
            checks.append(_check(f"mellin_zeta_s{s}", m.residual_zeta, tol))
            checks.append(_check(f"mellin_combined_s{s}", m.combined, tol))
    return checks


def _suite_hankel(ctx: PrecisionContext) -> list[dict]:
    spec = ContourSpec()
    checks = []
    with ctx.workdps():
        tol = mpf(10) ** (-ctx.digits // 2)
        for n, exact in ((2, mpf(1) / 6), (4, mpf(-1) / 30), (6, mpf(1) / 42)):
            checks.append(
                _check(f"hankel_B{n}", abs(bernoulli_interp(n - 1, spec, ctx) - exact), tol)
            )
        for s in (mpf(1) / 2, mpf(3) / 2, mpf(2), mpf(4)):
            checks.append(_check(f"hankel_lemma3_s{s}", lemma3_residual(s, spec, ctx), tol))
        alt = ContourSpec(radius=3.0)
        drift = abs(bernoulli_interp(mpf("1.5"), spec, ctx) - bernoulli_interp(mpf("1.5"), alt, ctx))
        checks.append(_check("hankel_deformation_invariance", drift, tol))
    return checks


def _suite_lemma4(ctx: PrecisionContext) -> list[dict]:
    # the two printed forms of the zeta(2k+1) relation coincide once
    # zeta(-2k) = 0 is used; both are evaluated from the oracle zeta'(-2k)
    checks = []
    with ctx.workdps():
        tol = ctx.tolerance(8)
        for k in range(1, 5):
            zp = zeta_prime_oracle(-2 * k, ctx)
            form1 = zeta_odd_from_zprime(k, zp, ctx)
            bprime = (2 * k + 1) * zp  # B'_(2k+1) with the trivial zero built in
            two_pi = 2 * mpmath.pi
            form2 = (
                (-1) ** k
                * two_pi ** (2 * k + 1)
                / mpf(mpmath.factorial(2 * k + 1))
                * bprime
                / mpmath.pi
            )
            checks.append(_check(f"lemma4_forms_agree_k{k}", abs(form1 - form2), tol))
    return checks


def _suite_ramanujan(ctx: PrecisionContext) -> list[dict]:
    with ctx.workdps():
        tol = mpf(10) ** (-ctx.digits // 2)
        return [_check("ramanujan_convergent_selftest", convergent_selftest(EMScheme(), ctx), tol)]


_SUITES = {
    "bernoulli": _suite_bernoulli,
    "zeta": _suite_zeta,
    "functional_equation": _suite_functional_equation,
    "fundamental_lemma": _suite_fundamental_lemma,
    "mellin": _suite_mellin,
    "hankel": _suite_hankel,
    "lemma4": _suite_lemma4,
    "ramanujan": _suite_ramanujan,
}


def run_verify(precision: int, suites: list[str]) -> dict:
    ctx = PrecisionContext(precision)
    doc = {
        "tool": "zetachain",
        "version": __version__,
        "kind": "verify",
        "precision_digits": precision,
        "suites": [],
        "timing": {},
    }
    for name in suites:
        t0 = time.perf_counter()
        checks = _SUITES[name](ctx)
        doc["timing"][name] = round(time.perf_counter() - t0, 3)
        doc["suites"].append(
            {
                "name": name,
                "status": "pass" if all(c["status"] == "pass" for c in checks) else "fail",
                "checks": checks,
            }
        )
    doc["status"] = "pass" if all(s["status"] == "pass" for s in doc["suites"]) else "fail"
    return doc


def run_chain(kmax: int, conventions: tuple[SumConvention, ...], precision: int) -> dict:
    ctx = PrecisionContext(precision)
    t0 = time.perf_counter()
    report = discrepancy_report(kmax, conventions, ctx)
    doc = {
        "tool": "zetachain",
        "version": __version__,
        "kind": "chain",
        "precision_digits": precision,
        "report": report.to_dict(),
        "timing": {"chain": round(time.perf_counter() - t0, 3)},
    }
    return doc


def run_oracle(kmax: int, precision: int) -> dict:
    ctx = PrecisionContext(precision)
    scheme = EMScheme()
    t0 = time.perf_counter()
    rows = []
    chains = {c: solve_chain(max(kmax + 1, 1), c) for c in (SumConvention.A, SumConvention.B)}
    for k in range(0, kmax + 1):
        r = ramanujan_sum(k, scheme, ctx)
        with ctx.workdps():
            row = {
                "k": k,
                "ramanujan": str(r.sum.value),
                "stable": r.stable,
                "spread": str(r.spread),
                "scheme": {"N": scheme.N, "J": scheme.J, "lower_limit": 1},
            }
            for conv, chain in chains.items():
                num = chain[k].value.numeric(ctx)
                row[f"chain_{conv.value}"] = str(num)
                row[f"diff_{conv.value}"] = str(ctx.round(abs(r.sum.value - num)))
        rows.append(row)
    return {
        "tool": "zetachain",
        "version": __version__,
        "kind": "oracle",
        "precision_digits": precision,
        "rows": rows,
        "timing": {"oracle": round(time.perf_counter() - t0, 3)},
    }


def chain_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "convention", "a", "b", "c", "numeric", "oracle", "delta"])
    for row in doc["report"]["rows"]:
        trip = row["zprime_chain"]
        writer.writerow(
            [
                row["k"],
                row["convention"],
                trip["a"],
                trip["b"],
                trip["c"],
                row["zprime_numeric"],
                row["zprime_oracle"],
                row["delta"],
            ]
        )
    return buf.getvalue()


def _emit(doc: dict, fmt: str, out: str | None) -> None:
    if fmt == "csv":
        if doc["kind"] != "chain":
            raise SystemExit("csv output is only defined for the chain report")
        text = chain_csv(doc)
    else:
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_conventions(arg: str) -> tuple[SumConvention, ...]:
    if arg == "all":
        return (SumConvention.A, SumConvention.B)
    return tuple(SumConvention(c) for c in arg.split(","))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zetachain")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--precision", type=int, default=50)
    v.add_argument("--suites", default=",".join(SUITE_NAMES))
    v.add_argument("--format", choices=("json",), default="json")
    v.add_argument("--out")

    c = sub.add_parser("chain", help="solve the heuristic chain and report discrepancies")
    c.add_argument("--kmax", type=int, default=8)
    c.add_argument("--convention", default="all", choices=("A", "B", "all"))
    c.add_argument("--precision", type=int, default=50)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--out")

    o = sub.add_parser("oracle", help="Ramanujan-summation values side by side with the chain")
    o.add_argument("--kmax", type=int, default=4)
    o.add_argument("--precision", type=int, default=50)
    o.add_argument("--format", choices=("json",), default="json")
    o.add_argument("--out")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.precision < 15:
        print("precision must be at least 15 digits", file=sys.stderr)
        return 2
    if args.command == "verify":
        suites = [s.strip() for s in args.suites.split(",") if s.strip()]
        unknown = [s for s in suites if s not in _SUITES]
        if unknown:
            print(f"unknown suite(s): {', '.join(unknown)}", file=sys.stderr)
            return 2
        doc = run_verify(args.precision, suites)
        _emit(doc, args.format, args.out)
        return 0 if doc["status"] == "pass" else 1
    if args.command == "chain":
        if args.kmax < 1:
            print("kmax must be >= 1", file=sys.stderr)
            return 2
        doc = run_chain(args.kmax, _parse_conventions(args.convention), args.precision)
        _emit(doc, args.format, args.out)
        return 0
    if args.command == "oracle":
        if not 0 <= args.kmax <= 8:
            print("kmax must be in 0..8", file=sys.stderr)
            return 2
        doc = run_oracle(args.kmax, args.precision)
        _emit(doc, args.format, args.out)
        return 0
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
