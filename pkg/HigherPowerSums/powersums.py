from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb

from HigherPowerSums.sequences import bernoulli, bernoulli_high, stirling2, stirling_poly, poly_coefficient
from HigherPowerSums.series import egf_power_sum, egf_factorized_power_sum, egf_signed_power_sum
from HigherPowerSums.utils.errors import InternalInconsistency
from HigherPowerSums.utils.polynomials import (
    Polynomial,
    Z,
    root_multiplicity,
    rational_roots,
    to_faulhaber_form,
)
from HigherPowerSums.verifier import VerificationReport

logger = logging.getLogger(__name__)


def power_sum(m: int, n: int) -> int:
    """S_m(n) = 1^m + 2^m + ... + n^m"""
    return sum(q ** m for q in range(1, n + 1))


def iterated_sum(k: int, m: int, n: int) -> int:
    """
    k-fold sum: S^0_m(n) = n^m, S^k_m(n) = S^(k-1)_m(1) + ... + S^(k-1)_m(n)
    """
    if k < 0:
        raise ValueError(f'k must be nonnegative, got {k}')
    values = [q ** m for q in range(1, n + 1)]
    for _ in range(k):
        total, prefix = 0, []
        for v in values:
            total += v
            prefix.append(total)
        values = prefix
    return values[-1] if values else 0


def power_sum_high(m: int, k: int, n: int) -> int:
    """
    Higher-order power sum S_m^(k)(n), the coefficient of t^m/m! in (e^t + ... + e^(nt))^k.

    :param m: exponent
    :param k: order, positive
    :param n: number of terms, positive
    :return: sum over q of C(k, q)_n (k+q)^m
    """
    if k < 1:
        raise ValueError(f'k must be positive, got {k}')
    return sum(poly_coefficient(k, q, n) * (k + q) ** m for q in range(k * (n - 1) + 1))


@lru_cache(maxsize=None)
def power_sum_high_convolution(m: int, k: int, n: int) -> int:
    """Successive binomial convolutions, seeded with S_0^(k)(n) = n^k"""
    if k == 1:
        return power_sum(m, n)
    return sum(comb(m, q) * power_sum_high_convolution(q, k - 1, n) * power_sum(m - q, n) for q in range(m + 1))


def power_sum_poly(m: int) -> Polynomial:
    """Bernoulli form of S_m(z): (1/(m+1)) sum_q (-1)^q C(m+1, q) B_q z^(m+1-q)"""
    coefficients = [Fraction(0)] * (m + 2)
    for q in range(m + 1):
        coefficients[m + 1 - q] = Fraction((-1) ** q * comb(m + 1, q)) * bernoulli(q) / (m + 1)
    return Polynomial(coefficients)


def _stirling_form(m: int, k: int) -> Polynomial:
    coefficients = [Fraction(0)] * (m + k + 1)
    scale = comb(m + k, k)
    for q in range(m + 1):
        coefficients[m + k - q] = (
            (-1) ** q * comb(m + k, q) * bernoulli_high(q, k) * stirling2(m + k - q, k) / scale
        )
    return Polynomial(coefficients)


@lru_cache(maxsize=None)
def q_poly(m: int, k: int) -> Polynomial:
    """Q_m^(k)(z) = sum_q (-1)^q C(m, q) B_q^(k) B_(m-q)^(-k) z^(m-q)"""
    coefficients = [Fraction(0)] * (m + 1)
    for q in range(m + 1):
        coefficients[m - q] = (-1) ** q * comb(m, q) * bernoulli_high(q, k) * bernoulli_high(m - q, -k)
    return Polynomial(coefficients)


@lru_cache(maxsize=None)
def power_sum_high_poly(m: int, k: int) -> Polynomial:
    """
    Polynomial continuation of S_m^(k)(n) in n, built from the Stirling form and
    cross-checked against z^k Q_m^(k)(z).

    :raises InternalInconsistency: 'form mismatch' if the two constructions differ
    """
    if k < 1:
        raise ValueError(f'k must be positive, got {k}')
    p = _stirling_form(m, k)
    if p != Z ** k * q_poly(m, k):
        raise InternalInconsistency('form mismatch')
    return p


def power_sum_high_poly_eq18(m: int, k: int) -> Polynomial:
    """The intermediate form with the Stirling polynomial f_(m-q)(k) = C(m-q+k, m-q) B_(m-q)^(-k)"""
    coefficients = [Fraction(0)] * (m + k + 1)
    scale = comb(m + k, k)
    for q in range(m + 1):
        coefficients[m + k - q] = (
            (-1) ** q * comb(m + k, q) * bernoulli_high(q, k) * stirling_poly(m - q)(k) / scale
        )
    return Polynomial(coefficients)


def q2_closed_form(k: int) -> Polynomial:
    """Q_2^(k)(z) = (k/12)(z+1)((3k+1)z + 3k-1)"""
    return Fraction(k, 12) * Polynomial((1, 1)) * Polynomial((3 * k - 1, 3 * k + 1))


def q3_closed_form(k: int) -> Polynomial:
    """Q_3^(k)(z) = (k^2/8)(z+1)^2((k+1)z + k-1)"""
    return Fraction(k * k, 8) * Polynomial((1, 1)) ** 2 * Polynomial((k - 1, k + 1))


def theorem2_report(m: int, k: int) -> VerificationReport:
    """
    Multiplicity of z = -1 as a root of Q_m^(k): 1 for even m and m = 1, 2 for odd m >= 3.
    The first derivative there is -k B_m in the simple case and the second derivative is
    nonzero in the double case.
    """
    report = VerificationReport('theorem2')
    params = {'m': m, 'k': k}
    q = q_poly(m, k)
    simple = m % 2 == 0 or m == 1
    report.record(params | {'check': 'multiplicity'}, root_multiplicity(q, -1), 1 if simple else 2)
    if simple:
        report.record(params | {'check': 'derivative'}, q.derivative()(-1), -k * bernoulli(m))
    else:
        value = q.derivative().derivative()(-1)
        report.record(params | {'check': 'second-derivative'}, value, 'nonzero', ok=value != 0)
    return report


def lemma1_check(m: int, k: int) -> VerificationReport:
    """
    First- and second-derivative convolutions at z = -1, each checked in the displayed
    piecewise form and in the unified signed form.
    """
    if m < 1:
        raise ValueError(f'm must be positive, got {m}')
    report = VerificationReport('lemma1')
    params = {'m': m, 'k': k}

    lhs = sum(
        (comb(m, q) * (m - q) * bernoulli_high(q, k) * bernoulli_high(m - q, -k) for q in range(m)),
        Fraction(0)
    )
    rhs = -k * bernoulli(1) if m == 1 else k * bernoulli(m)
    report.record(params | {'check': 'first'}, lhs, rhs)
    report.record(params | {'check': 'first-signed'}, lhs, (-1) ** m * k * bernoulli(m))

    if m >= 2:
        lhs = sum(
            (comb(m, q) * (m - q) * (m - q - 1) * bernoulli_high(q, k) * bernoulli_high(m - q, -k)
             for q in range(m - 1)),
            Fraction(0)
        )
        if m == 2:
            rhs = -k * (3 * k - 1) * bernoulli(2) - 2 * k * k * bernoulli(1)
        else:
            rhs = -k * ((m + 1) * k - m + 1) * bernoulli(m) + m * k * k * bernoulli(m - 1)
        report.record(params | {'check': 'second'}, lhs, rhs)
        signed = -k * ((m + 1) * k - m + 1) * bernoulli(m) + (-1) ** (m + 1) * m * k * k * bernoulli(m - 1)
        report.record(params | {'check': 'second-signed'}, lhs, signed)
    return report


def _roots_text(roots) -> str:
    return '{' + ', '.join(str(r) for r in sorted(roots)) + '}'


def kimura_root_check(m: int) -> VerificationReport:
    """Rational roots of S_m(z) lie in {0, -1, -1/2}; -1/2 is a simple root exactly for even m"""
    if m < 1:
        raise ValueError(f'm must be positive, got {m}')
    report = VerificationReport('kimura')
    p = power_sum_high_poly(m, 1)
    allowed = {Fraction(0), Fraction(-1), Fraction(-1, 2)}
    roots = rational_roots(p)
    report.record({'m': m, 'check': 'containment'}, _roots_text(roots), _roots_text(allowed), ok=roots <= allowed)
    report.record({'m': m, 'check': 'half-root'}, root_multiplicity(p, Fraction(-1, 2)), 1 if m % 2 == 0 else 0)
    return report


def faulhaber_form_check(m: int) -> VerificationReport:
    """S_m(z) is g(z^2 + z) for odd m and (2z+1) g(z^2 + z) for even m"""
    if m < 1:
        raise ValueError(f'm must be positive, got {m}')
    report = VerificationReport('faulhaber-form')
    p = power_sum_poly(m)
    form = to_faulhaber_form(p)
    report.record({'m': m, 'check': 'kind'}, form.kind, 'odd-case' if m % 2 else 'even-case')
    report.record({'m': m, 'check': 'expansion'}, form.expand(), p)
    return report


def q_roots_check(k: int) -> VerificationReport:
    """Closed forms of Q_2^(k), Q_3^(k) and their extra rational roots"""
    report = VerificationReport('q-roots')
    q2 = q_poly(2, k)
    report.record({'k': k, 'check': 'q2-form'}, q2, q2_closed_form(k))
    report.record({'k': k, 'check': 'q2-root'}, q2(Fraction(-(3 * k - 1), 3 * k + 1)), 0)
    q3 = q_poly(3, k)
    report.record({'k': k, 'check': 'q3-form'}, q3, q3_closed_form(k))
    if k >= 2:
        report.record({'k': k, 'check': 'q3-root'}, q3(Fraction(-(k - 1), k + 1)), 0)
    return report


@lru_cache(maxsize=None)
def _egf_row(n: int, k: int, order: int) -> tuple[Fraction, ...]:
    return tuple(egf_power_sum(n, k, order))


def theorem1_consistency_check(m: int, k: int, n: int, order: int = 0) -> VerificationReport:
    """
    S_m^(k)(n) from the direct sum against the convolution form, the series oracle and the
    three polynomial forms evaluated at n.
    """
    report = VerificationReport('theorem1-consistency')
    params = {'m': m, 'k': k, 'n': n}
    direct = power_sum_high(m, k, n)
    report.record(params | {'check': 'convolution'}, power_sum_high_convolution(m, k, n), direct)
    report.record(params | {'check': 'series'}, _egf_row(n, k, max(order, m))[m], direct)
    report.record(params | {'check': 'polynomial'}, power_sum_high_poly(m, k)(n), direct)
    report.record(params | {'check': 'stirling-polynomial'}, power_sum_high_poly_eq18(m, k)(n), direct)
    return report


def series_oracle_check(m: int, k: int, n: int) -> VerificationReport:
    """The plain, factorized and sign-flipped series against the direct sums"""
    report = VerificationReport('series-oracle')
    params = {'m': m, 'k': k, 'n': n}
    direct = power_sum_high(m, k, n)
    report.record(params | {'check': 'plain'}, egf_power_sum(n, k, m)[m], direct)
    report.record(params | {'check': 'factorized'}, egf_factorized_power_sum(n, k, m)[m], direct)
    report.record(params | {'check': 'signed'}, egf_signed_power_sum(n, k, m)[m], (-1) ** m * direct)
    return report


def recurrence_id_check(m: int, k: int, r: int, n: int) -> VerificationReport:
    """
    Stirling-weighted alternating sum of S_q^(r)(n) against its closed form. For r = k the
    closed form collapses to (-1)^m S(k+m, k) n^(m+k), which is checked as well.
    """
    if not 1 <= r <= k:
        raise ValueError(f'id requires 1 <= r <= k, got r={r}, k={k}')
    report = VerificationReport('id')
    params = {'m': m, 'k': k, 'r': r, 'n': n}

    lhs = sum(
        (-1) ** q * comb(m + k, q) * stirling2(m + k - q, k) * power_sum_high(q, r, n)
        for q in range(m + 1)
    )
    rhs = Fraction(
        sum(
            (-1) ** j * comb(m + k, m + k - r - j) * stirling2(m + k - r - j, k - r) * stirling2(r + j, r) * n ** (r + j)
            for j in range(m + 1)
        ),
        comb(k, r)
    )
    report.record(params | {'check': 'general'}, lhs, rhs)
    if r == k:
        report.record(params | {'check': 'diagonal'}, lhs, (-1) ** m * stirling2(k + m, k) * n ** (m + k))
    return report
