import json
from fractions import Fraction

import pytest
from mpmath import mpf

from zetachain.chain import (
    build_relation,
    chain_report_from_dict,
    discrepancy_report,
    extract_zprime_chain,
    oracle_seeded_residual,
    relation_residual,
    solve_chain,
    zeta_odd_chain,
)
from zetachain.precision import PrecisionContext
from zetachain.values import SumConvention, SymbolicValue
from zetachain.zeta import zeta_em, zeta_odd_from_zprime, zeta_prime_oracle

CTX = PrecisionContext(50)
A = SumConvention.A
B = SumConvention.B


def test_build_relation_examples():
    r2 = build_relation(2)
    assert r2.coefficients == (Fraction(1), Fraction(2))
    assert r2.rhs == Fraction(1, 12)
    r3 = build_relation(3)
    assert r3.coefficients == (Fraction(1), Fraction(3), Fraction(3))
    assert r3.rhs == 0
    r4 = build_relation(4)
    assert r4.coefficients == (Fraction(1), Fraction(4), Fraction(6), Fraction(4))
    assert r4.rhs == Fraction(-1, 120)


def test_build_relation_rejects_boundary_case():
    with pytest.raises(ValueError):
        build_relation(1)


def test_seed_and_first_step():
    chain = solve_chain(2, A)
    assert chain[0].value == SymbolicValue.of(Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2))
    assert chain[1].value == SymbolicValue.of(Fraction(-5, 24), Fraction(-1, 4), Fraction(1, 4))
    assert all(v.provenance == "chain" for v in chain)


def test_exactness_witness_s2():
    # 2 S_1 + S_0 collapses to the rational triple (1/12, 0, 0)
    chain = solve_chain(2, A)
    total = chain[1].value * 2 + chain[0].value
    assert total == SymbolicValue.of(Fraction(1, 12), 0, 0)


@pytest.mark.parametrize("conv", [A, B])
def test_chain_satisfies_all_relations_exactly(conv):
    chain = solve_chain(8, conv)
    for s in range(2, 10):
        assert relation_residual(build_relation(s), chain).is_zero()


def test_zprime_chain_triples():
    zps = extract_zprime_chain(3, A)
    assert zps[0] == SymbolicValue.of(Fraction(1, 12), Fraction(1, 6), Fraction(-1, 4))
    zps_b = extract_zprime_chain(3, B)
    assert zps_b[0] != zps[0]
    # everything lies in the symbolic field by construction
    assert all(isinstance(z, SymbolicValue) for z in zps + zps_b)


def test_zprime_chain_numeric_value():
    with CTX.workdps():
        val = extract_zprime_chain(1, A)[0].numeric(CTX)
        assert abs(val - mpf("-0.2799333224520809")) < 1e-14


def test_zeta_odd_chain_roundtrip_with_oracle():
    with CTX.workdps():
        zp_oracle = zeta_prime_oracle(-2, CTX)
        via = zeta_odd_from_zprime(1, zp_oracle, CTX)
        assert abs(via - zeta_em(3, CTX)) < mpf(10) ** (-CTX.digits + 8)


def test_zeta_odd_chain_is_definite():
    with CTX.workdps():
        val = zeta_odd_chain(1, A, CTX)
        chain_zp = extract_zprime_chain(2, A)[1].numeric(CTX)
        assert val == zeta_odd_from_zprime(1, chain_zp, CTX)


def test_discrepancy_report_delta1():
    rep = discrepancy_report(1, (A,), CTX)
    assert len(rep.rows) == 1
    row = rep.rows[0]
    with CTX.workdps():
        assert abs(row.delta - mpf("0.114512178751630")) < 1e-12


def test_discrepancy_differs_by_convention():
    rep = discrepancy_report(1, (A, B), CTX)
    assert rep.rows[0].delta != rep.rows[1].delta


def test_delta_stable_under_precision_doubling():
    fine = CTX.doubled()
    rep = discrepancy_report(2, (A,), CTX)
    rep2 = discrepancy_report(2, (A,), fine)
    with fine.workdps():
        for r1, r2 in zip(rep.rows, rep2.rows):
            assert abs(r1.delta - r2.delta) < mpf(10) ** (-CTX.digits + 5)


def test_report_has_odd_zeta_rows_only_for_even_k():
    rep = discrepancy_report(4, (A,), CTX)
    for row in rep.rows:
        if row.k % 2 == 0:
            assert row.zeta_odd_chain is not None
            assert row.zeta_odd_delta is not None
        else:
            assert row.zeta_odd_chain is None


def test_report_serialization_roundtrip():
    rep = discrepancy_report(3, (A, B), CTX)
    blob = json.dumps(rep.to_dict())
    back = chain_report_from_dict(json.loads(blob))
    assert back.kmax == rep.kmax and back.digits == rep.digits
    for r1, r2 in zip(rep.rows, back.rows):
        # exact fields round-trip losslessly
        assert r1.s_value == r2.s_value
        assert r1.zprime_chain == r2.zprime_chain
        assert r1.convention == r2.convention
        with CTX.workdps():
            assert abs(r1.delta - r2.delta) < mpf(10) ** (-CTX.digits + 3)


def test_oracle_seeded_residual_is_reported_not_zero():
    # the paper's unproven step: oracle-fed sums need not satisfy the relation
    with CTX.workdps():
        res = oracle_seeded_residual(2, A, CTX)
        assert res == res  # finite
        assert abs(res) > mpf("0.01")  # measurably nonzero, which is the finding
