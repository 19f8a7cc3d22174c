from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from config import enumeration_cap
from HigherPowerSums.powersums import power_sum_high, power_sum_high_poly
from HigherPowerSums.sequences import p_poly, gandhi_poly
from HigherPowerSums.utils.errors import InstanceTooLarge
from HigherPowerSums.utils.polynomials import Polynomial, binomial_poly, central_binomial_poly, Z
from HigherPowerSums.verifier import VerificationReport

logger = logging.getLogger(__name__)


def enumeration_size(k: int, n: int) -> int:
    """Number of non-decreasing k-tuples drawn from 1..kn"""
    return comb(k * n + k - 1, k)


def _check_cap(k: int, n: int, cap: int | None):
    cap = enumeration_cap if cap is None else cap
    size = enumeration_size(k, n)
    if size > cap:
        raise InstanceTooLarge(size, cap)


@lru_cache(maxsize=None)
def _base_counts(k: int, n: int) -> Counter:
    counts = Counter()
    for qs in combinations_with_replacement(range(1, k * n + 1), k):
        for j, q in enumerate(qs):
            counts[q - j * n] += 1
    logger.debug('enumerated %d tuples for k=%d, n=%d', enumeration_size(k, n), k, n)
    return counts


class MultipleSumCoefficients:
    """
    MultipleSumCoefficients holds c_q(k, n), q = 1..kn, such that the multiple sum
    equals sum_q c_q(k, n) q^m for every odd m
    """
    def __init__(self, k: int, n: int, c: list[int]):
        if len(c) != k * n:
            raise ValueError(f'expected {k * n} coefficients, got {len(c)}')
        self.k = k
        self.n = n
        self.c = tuple(c)

    def __getitem__(self, q: int) -> int:
        """c_q(k, n), 1-based"""
        if not 1 <= q <= len(self.c):
            raise IndexError(q)
        return self.c[q - 1]

    def evaluate(self, m: int) -> int:
        return sum(c * q ** m for q, c in enumerate(self.c, start=1))

    @property
    def positive(self) -> bool:
        return all(c > 0 for c in self.c)

    def to_dict(self) -> dict:
        return {'k': self.k, 'n': self.n, 'c': list(self.c)}

    def __eq__(self, other):
        if not isinstance(other, MultipleSumCoefficients):
            return NotImplemented
        return (self.k, self.n, self.c) == (other.k, other.n, other.c)

    def __repr__(self):
        return f'MultipleSumCoefficients(k={self.k}, n={self.n}, c={list(self.c)})'


def multiple_sum_bruteforce(m: int, k: int, n: int, cap: int | None = None) -> int:
    """
    Sum over 1 <= q_1 <= ... <= q_k <= kn of sum_j (q_j - (j-1)n)^m. With m odd a negative
    base contributes -|base|^m and a zero base contributes nothing.

    :param cap: enumeration cap, defaults to config.enumeration_cap
    :raises InstanceTooLarge: if C(kn + k - 1, k) exceeds the cap
    """
    if m % 2 == 0:
        raise ValueError(f'm must be odd, got {m}')
    if k < 1 or n < 1:
        raise ValueError(f'k and n must be positive, got k={k}, n={n}')
    _check_cap(k, n, cap)
    return sum(count * base ** m for base, count in _base_counts(k, n).items() if base)


def multiple_sum_coefficients(k: int, n: int, cap: int | None = None) -> MultipleSumCoefficients:
    if k < 1 or n < 1:
        raise ValueError(f'k and n must be positive, got k={k}, n={n}')
    _check_cap(k, n, cap)
    counts = _base_counts(k, n)
    return MultipleSumCoefficients(k, n, [counts[q] - counts[-q] for q in range(1, k * n + 1)])


def multiple_sum_c2_closed_form(n: int) -> MultipleSumCoefficients:
    """c_q(2, n) = 2n + q + 1 for q <= n and 2n - q + 1 for n < q <= 2n"""
    return MultipleSumCoefficients(2, n, [2 * n + q + 1 if q <= n else 2 * n - q + 1 for q in range(1, 2 * n + 1)])


def binomial_sum(m: int, k: int, n: int) -> int:
    """sum_{q<k} C(k(n+1), q) S_m^(k-q)(n)"""
    return sum(comb(k * (n + 1), q) * power_sum_high(m, k - q, n) for q in range(k))


@lru_cache(maxsize=None)
def binomial_sum_poly(m: int, k: int) -> Polynomial:
    """Polynomial continuation of binomial_sum in n"""
    if k < 1:
        raise ValueError(f'k must be positive, got {k}')
    total = Polynomial()
    for q in range(k):
        total = total + binomial_poly(k, q) * power_sum_high_poly(m, k - q)
    return total


def binomial_sum_at_1(m: int, k: int) -> int:
    """binomial_sum(m, k, 1) as sum_{q<k} C(2k, q) (k-q)^m; zero for k = 0"""
    return sum(comb(2 * k, q) * (k - q) ** m for q in range(k))


def binomial_sum_at_1_gandhi(r: int, k: int) -> Fraction:
    """(-1)^(r+1) F_r(-k) k^2 C(2k-1, k-1) for the exponent 2r + 1"""
    if r < 1:
        raise ValueError(f'r must be positive, got {r}')
    return (-1) ** (r + 1) * gandhi_poly(r)(-k) * k * k * comb(2 * k - 1, k - 1)


def conjecture_relation_check(m: int, k: int, n: int, cap: int | None = None) -> VerificationReport:
    """
    Multiple sum against the binomial sum for odd m. When they agree the coefficients
    c_q(k, n) are checked for positivity as a separate point labelled 'positivity';
    a positivity failure alone does not falsify the main relation.
    """
    if m % 2 == 0:
        raise ValueError(f'm must be odd, got {m}')
    report = VerificationReport('conjecture')
    params = {'m': m, 'k': k, 'n': n}
    brute = multiple_sum_bruteforce(m, k, n, cap)
    if report.record(params | {'check': 'relation'}, brute, binomial_sum(m, k, n)):
        coefficients = multiple_sum_coefficients(k, n, cap)
        if not coefficients.positive:
            logger.warning('non-positive c_q at k=%d, n=%d: %s', k, n, list(coefficients.c))
        report.record(params | {'check': 'positivity'}, str(min(coefficients.c)), '> 0', ok=coefficients.positive)
    return report


def multiple_sum_c2_check(n: int, m: int) -> VerificationReport:
    report = VerificationReport('multiple-sum-c2')
    coefficients = multiple_sum_coefficients(2, n)
    report.record({'n': n, 'm': m, 'check': 'closed-form'}, coefficients, multiple_sum_c2_closed_form(n))
    report.record({'n': n, 'm': m, 'check': 'evaluate'}, coefficients.evaluate(m), multiple_sum_bruteforce(m, 2, n))
    return report


def eq23_check(m: int, k: int) -> VerificationReport:
    """2 S_m^(k)(1) = sum_{q<=2k} C(2k, q) |k-q|^m for odd m"""
    report = VerificationReport('eq23')
    params = {'m': m, 'k': k}
    report.record(params | {'check': 'at-1'}, binomial_sum(m, k, 1), binomial_sum_at_1(m, k))
    lhs = 2 * binomial_sum_at_1(m, k)
    rhs = sum(comb(2 * k, q) * abs(k - q) ** m for q in range(2 * k + 1))
    report.record(params | {'check': 'symmetric'}, lhs, rhs)
    return report


def eq241_check(m: int, k: int) -> VerificationReport:
    """S_(m+2)^(k)(1) = k^2 S_m^(k)(1) - 2k(2k-1) S_m^(k-1)(1)"""
    report = VerificationReport('eq241')
    lhs = binomial_sum_at_1(m + 2, k)
    rhs = k * k * binomial_sum_at_1(m, k) - 2 * k * (2 * k - 1) * binomial_sum_at_1(m, k - 1)
    report.record({'m': m, 'k': k}, lhs, rhs)
    return report


def eq251_check(r: int, k: int) -> VerificationReport:
    """S_(2r+1)^(k)(1) = P_r(k) (k/2) C(2k, k), and the Gandhi rewriting for r >= 1"""
    report = VerificationReport('eq251')
    params = {'r': r, 'k': k}
    lhs = binomial_sum_at_1(2 * r + 1, k)
    report.record(params | {'check': 'p-poly'}, lhs, p_poly(r)(k) * Fraction(k, 2) * comb(2 * k, k))
    if r >= 1:
        report.record(params | {'check': 'gandhi'}, lhs, binomial_sum_at_1_gandhi(r, k))
    return report


def prop32_check(k: int) -> VerificationReport:
    report = VerificationReport('prop32')
    rhs = Polynomial((0, Fraction(1, 2), Fraction(1, 2))) * k * central_binomial_poly(k)
    report.record({'k': k}, binomial_sum_poly(1, k), rhs)
    return report


def lemma2_check(k: int) -> VerificationReport:
    """C(k(z+1)-1, k-1) = (1/k) sum_{q<k} (k-q) C(k(z+1), q) z^(k-q-1)"""
    report = VerificationReport('lemma2')
    rhs = Polynomial()
    for q in range(k):
        rhs = rhs + binomial_poly(k, q) * (k - q) * Z ** (k - q - 1)
    report.record({'k': k}, central_binomial_poly(k), rhs / k)
    return report
