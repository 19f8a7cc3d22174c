from fractions import Fraction

import pytest

from HigherPowerSums.powersums import (
    power_sum,
    iterated_sum,
    power_sum_high,
    power_sum_high_convolution,
    power_sum_poly,
    power_sum_high_poly,
    power_sum_high_poly_eq18,
    q_poly,
    q2_closed_form,
    q3_closed_form,
    theorem2_report,
    lemma1_check,
    kimura_root_check,
    faulhaber_form_check,
    q_roots_check,
    theorem1_consistency_check,
    series_oracle_check,
    recurrence_id_check,
)
from HigherPowerSums.utils.errors import InternalInconsistency
from HigherPowerSums.utils.polynomials import Polynomial, Z


def test_power_sum():
    assert power_sum(1, 100) == 5050
    assert power_sum(2, 3) == 14
    assert power_sum(5, 0) == 0
    assert power_sum(0, 7) == 7


def test_iterated_sum():
    assert iterated_sum(2, 1, 3) == 10
    assert iterated_sum(0, 2, 3) == 9
    assert iterated_sum(1, 3, 4) == power_sum(3, 4)
    with pytest.raises(ValueError):
        iterated_sum(-1, 1, 1)


def test_power_sum_high():
    # (e^t + e^(2t))^2 = e^(2t) + 2e^(3t) + e^(4t)
    assert power_sum_high(1, 2, 2) == 12
    assert power_sum_high(2, 2, 2) == 38
    assert power_sum_high(0, 3, 4) == 4 ** 3
    for m in range(6):
        assert power_sum_high(m, 1, 5) == power_sum(m, 5)
    with pytest.raises(ValueError):
        power_sum_high(1, 0, 2)


def test_convolution_matches_direct():
    for m in range(8):
        for k in range(1, 5):
            for n in range(1, 5):
                assert power_sum_high_convolution(m, k, n) == power_sum_high(m, k, n)


def test_power_sum_poly():
    assert power_sum_poly(0) == Z
    assert power_sum_poly(1) == Polynomial([0, Fraction(1, 2), Fraction(1, 2)])
    assert power_sum_poly(3) == Polynomial([0, 0, Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)])
    for m in range(10):
        p = power_sum_poly(m)
        assert all(p(n) == power_sum(m, n) for n in range(8))


def test_q_poly():
    assert q_poly(3, 2).to_list() == ['1/2', '5/2', '7/2', '3/2']
    assert q_poly(0, 4) == Polynomial([1])
    for k in range(1, 7):
        assert q_poly(2, k) == q2_closed_form(k)
        assert q_poly(3, k) == q3_closed_form(k)


def test_power_sum_high_poly():
    assert power_sum_high_poly(2, 2)(2) == 38
    for m in range(7):
        for k in range(1, 5):
            p = power_sum_high_poly(m, k)
            assert p.degree == m + k
            assert p == Z ** k * q_poly(m, k)
            assert p == power_sum_high_poly_eq18(m, k)
            assert all(p(n) == power_sum_high(m, k, n) for n in range(1, 6))


def test_power_sum_high_poly_form_mismatch(monkeypatch):
    monkeypatch.setattr('HigherPowerSums.powersums.q_poly', lambda m, k: Polynomial([1]))
    with pytest.raises(InternalInconsistency, match='form mismatch'):
        power_sum_high_poly.__wrapped__(2, 2)


@pytest.mark.parametrize('m', range(1, 13))
@pytest.mark.parametrize('k', range(1, 7))
def test_theorem2(m, k):
    report = theorem2_report(m, k)
    assert report.ok, report.failures
    multiplicity = report.points[0][2]
    assert multiplicity == (1 if m % 2 == 0 or m == 1 else 2)


def test_lemma1():
    for m in range(1, 13):
        for k in range(1, 9):
            report = lemma1_check(m, k)
            assert report.ok, report.failures
    assert lemma1_check(1, 3).passed == 2
    assert lemma1_check(4, 3).passed == 4
    with pytest.raises(ValueError):
        lemma1_check(0, 1)


def test_kimura():
    for m in range(1, 16):
        assert kimura_root_check(m)
    report = kimura_root_check(2)
    assert report.points[0][2] == '{-1, -1/2, 0}'


def test_faulhaber_form():
    for m in range(1, 16):
        assert faulhaber_form_check(m)
    with pytest.raises(ValueError):
        faulhaber_form_check(0)


def test_q_roots():
    for k in range(1, 9):
        assert q_roots_check(k)
    assert q_roots_check(1).passed == 3


def test_theorem1_consistency():
    for m in range(6):
        for k in range(1, 4):
            for n in range(1, 5):
                report = theorem1_consistency_check(m, k, n, order=8)
                assert report.ok, report.failures
                assert report.passed == 4


def test_series_oracle():
    for m in range(6):
        for k in range(1, 4):
            assert series_oracle_check(m, k, 3)


def test_recurrence_id():
    report = recurrence_id_check(1, 1, 1, 2)
    assert [lhs for _, _, lhs, _ in report.points] == [-4, -4]
    for m in range(5):
        for k in range(1, 5):
            for r in range(1, k + 1):
                for n in range(1, 4):
                    assert recurrence_id_check(m, k, r, n)
    with pytest.raises(ValueError):
        recurrence_id_check(1, 2, 3, 1)
