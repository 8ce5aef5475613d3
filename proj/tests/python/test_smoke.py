"""End-to-end smoke checks for the classnum extension module."""

import pytest

import classnum


def test_factor_round_trip():
    assert classnum.factor(41241) == [(3, 1), (59, 1), (233, 1)]
    n = 2**89 - 1
    assert classnum.is_prime(n)
    assert classnum.factor(4 * n) == [(2, 2), (n, 1)]


def test_arithmetic_helpers():
    assert classnum.euler_phi(572) == 240
    assert classnum.multiplicative_order(3, 13) == 3
    assert classnum.odd_part(240) == 15
    with pytest.raises(ValueError):
        classnum.factor(1)


def test_check_theorem1_verdicts():
    v = classnum.check_theorem1(11, 75, e_p=2)
    assert v.kind == classnum.VerdictKind.Witness
    assert v.witness_prime == 5

    v = classnum.check_theorem1(3, 29, subfield_h=3)
    assert v.kind == classnum.VerdictKind.SubfieldDivisibility

    v = classnum.check_theorem1(5, 3, subfield_h=3)
    assert v.is_violation
    with pytest.raises(ValueError):
        classnum.check_theorem1(3, 30)


def test_bound_and_geometric():
    b = classnum.class_number_bound(2, -59)
    assert b.ceiling == 63
    assert b.decimal() == "62.6403187981"
    assert abs(b.value - 62.64031879806290) < 1e-9
    v = classnum.check_geometric(233, 1, 29, 2, -59)
    assert v.kind == classnum.VerdictKind.Witness
    assert v.witness_prime == 29


def test_descend_matches_expression():
    tower = classnum.make_tower(2, [5, 13])
    trace = classnum.descend(tower, 3, 3)
    assert trace.final.kind == classnum.VerdictKind.Witness
    assert trace.final.witness_prime == 13
    assert classnum.evaluate_expression("2^3.29+1").value == 233
    with pytest.raises(classnum.ExpressionError):
        classnum.evaluate_expression("2..3")


def test_dataset_verification():
    records = classnum.all_bundled_records()
    assert len(records) == 39
    report = classnum.verify_records(records)
    assert len(report.rows) == 92
    assert not report.has_violation
    assert report.count(classnum.VerdictKind.Witness) == 78
    assert report.count(classnum.VerdictKind.SubfieldDivisibility) == 14
    tsv = classnum.report_tsv(report)
    assert "# summary: rows=92" in tsv
