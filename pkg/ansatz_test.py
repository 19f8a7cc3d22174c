from fractions import Fraction

import pytest

from HigherPowerSums.ansatz import (
    BivariateF,
    TABULATED,
    ansatz_indices,
    tabulated_F,
    eq36_rhs,
    eq36_verify,
    eq36_reconstruct,
    ansatz_gandhi_check,
)
from HigherPowerSums.binomial_sums import binomial_sum_poly
from HigherPowerSums.sequences import gandhi_poly
from HigherPowerSums.utils.errors import InstanceTooLarge
from HigherPowerSums.utils.polynomials import Polynomial


def test_ansatz_indices():
    assert ansatz_indices(1) == [(0, 0)]
    assert ansatz_indices(4) == [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0)]
    assert len(ansatz_indices(6)) == 9
    for r, coefficients in TABULATED.items():
        assert set(coefficients) <= set(ansatz_indices(r))


def test_tabulated():
    f = tabulated_F(4)
    assert f.ansatz[(1, 0)] == Fraction(8, 5)
    assert f.degree == 3
    assert tabulated_F(1).at_w(5) == Polynomial([1])
    # F_2(w, k) = 2k + (2/3)(w+1)/w
    assert tabulated_F(2).at_w(2) == Polynomial([1, 2])
    with pytest.raises(ValueError, match='not tabulated'):
        tabulated_F(7)


def test_bivariate_rejects_outside_ansatz():
    with pytest.raises(ValueError):
        BivariateF(2, {(1, 0): 1})


def test_rows():
    rows = tabulated_F(2).rows()
    assert rows == [{'q': 0, 'j': 0, 'value': '2/3'}, {'q': 0, 'j': 1, 'value': '2'}]


@pytest.mark.parametrize('r', range(1, 7))
def test_eq36_verify(r):
    report = eq36_verify(r, 6)
    assert report.ok, report.failures
    assert report.passed == 6


def test_eq36_rhs():
    assert eq36_rhs(tabulated_F(3), 2) == binomial_sum_poly(7, 2)


def test_gandhi_specialisation():
    for r in range(1, 7):
        assert ansatz_gandhi_check(r)
        assert tabulated_F(r).at_w(2) == gandhi_poly(r)


@pytest.mark.parametrize('r', range(1, 7))
def test_reconstruct_matches_table(r):
    f = eq36_reconstruct(r)
    assert f == tabulated_F(r)
    assert f.verified_up_to == len(ansatz_indices(r)) + 2


def test_reconstruct_limits():
    with pytest.raises(InstanceTooLarge):
        eq36_reconstruct(13)
    with pytest.raises(InstanceTooLarge):
        eq36_reconstruct(3, max_r=2)
    with pytest.raises(ValueError):
        eq36_reconstruct(0)
