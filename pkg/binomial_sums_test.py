from math import comb

import pytest

import HigherPowerSums
from HigherPowerSums.binomial_sums import (
    MultipleSumCoefficients,
    enumeration_size,
    multiple_sum_bruteforce,
    multiple_sum_coefficients,
    multiple_sum_c2_closed_form,
    binomial_sum,
    binomial_sum_poly,
    binomial_sum_at_1,
    binomial_sum_at_1_gandhi,
    conjecture_relation_check,
    multiple_sum_c2_check,
    eq23_check,
    eq241_check,
    eq251_check,
    prop32_check,
    lemma2_check,
)
from HigherPowerSums.utils.errors import InstanceTooLarge


def test_coefficients_k2():
    assert multiple_sum_coefficients(2, 1).c == (4, 1)
    assert multiple_sum_coefficients(2, 2).c == (6, 7, 2, 1)
    assert multiple_sum_coefficients(2, 2)[2] == 7
    for n in range(1, 7):
        assert multiple_sum_coefficients(2, n) == multiple_sum_c2_closed_form(n)


def test_coefficients_index():
    c = MultipleSumCoefficients(2, 1, [4, 1])
    assert c.positive
    assert c.evaluate(1) == 6
    assert c.to_dict() == {'k': 2, 'n': 1, 'c': [4, 1]}
    with pytest.raises(IndexError):
        c[0]
    with pytest.raises(ValueError):
        MultipleSumCoefficients(2, 2, [1])


def test_multiple_sum():
    assert multiple_sum_bruteforce(1, 2, 1) == 6
    assert multiple_sum_bruteforce(1, 2, 2) == 30
    assert multiple_sum_bruteforce(3, 1, 4) == 100
    with pytest.raises(ValueError, match='odd'):
        multiple_sum_bruteforce(2, 2, 2)
    with pytest.raises(ValueError):
        multiple_sum_bruteforce(1, 0, 2)


def test_binomial_sum():
    assert binomial_sum(1, 2, 1) == 6
    assert binomial_sum(1, 2, 2) == 30
    assert binomial_sum_poly(1, 2)(2) == 30
    for m in (1, 3, 5):
        for k in range(1, 4):
            p = binomial_sum_poly(m, k)
            assert all(p(n) == binomial_sum(m, k, n) for n in range(1, 5))


def test_cap():
    assert enumeration_size(4, 6) == comb(27, 4) == 17550
    with pytest.raises(InstanceTooLarge) as e:
        multiple_sum_bruteforce(3, 6, 20, cap=1000)
    assert e.value.size > 1000
    assert 'cap 1000' in str(e.value)
    assert multiple_sum_bruteforce(1, 2, 2, cap=10) == 30


def test_conjecture_small_grid():
    for m in (1, 3, 5):
        for k in range(1, 4):
            for n in range(1, 4):
                report = conjecture_relation_check(m, k, n)
                assert report.ok, report.failures
                assert [p[0]['check'] for p in report.points] == ['relation', 'positivity']
    with pytest.raises(ValueError):
        conjecture_relation_check(2, 1, 1)


@pytest.mark.parametrize('m', (1, 3, 5, 7, 9))
@pytest.mark.parametrize('k', range(1, 5))
def test_conjecture_full_grid(m, k):
    for n in range(1, 7):
        report = conjecture_relation_check(m, k, n)
        assert report.ok, report.failures
        assert report.passed == 2


def test_multiple_sum_c2():
    for n in range(1, 5):
        assert multiple_sum_c2_check(n, 3)


def test_binomial_sum_at_1():
    assert binomial_sum_at_1(5, 0) == 0
    for m in (1, 3, 5):
        for k in range(1, 6):
            assert binomial_sum_at_1(m, k) == binomial_sum(m, k, 1)
    for r in range(1, 5):
        for k in range(1, 6):
            assert binomial_sum_at_1_gandhi(r, k) == binomial_sum_at_1(2 * r + 1, k)


def test_identities_at_1():
    for m in (1, 3, 5, 7, 9, 11):
        for k in range(1, 9):
            assert eq23_check(m, k)
            if k >= 2:
                assert eq241_check(m, k)
    for r in range(6):
        for k in range(1, 9):
            assert eq251_check(r, k)
    assert eq251_check(0, 3).passed == 1


def test_polynomial_identities():
    for k in range(1, 9):
        assert prop32_check(k)
    for k in range(1, 11):
        assert lemma2_check(k)


def test_identity_checks_exported():
    assert HigherPowerSums.eq23_check is eq23_check
    assert HigherPowerSums.eq241_check is eq241_check
    assert HigherPowerSums.eq251_check is eq251_check
    assert HigherPowerSums.prop32_check is prop32_check
    assert HigherPowerSums.lemma2_check is lemma2_check
