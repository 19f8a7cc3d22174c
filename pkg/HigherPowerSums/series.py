from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from HigherPowerSums.utils.math import rational


class TruncatedSeries:
    """
    TruncatedSeries is an exponential generating series known up to t^order:
    coefficients[j] is the coefficient of t^j / j!.
    """

    def __init__(self, coefficients, order: int | None = None):
        cs = [rational(c) for c in coefficients]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError(f'order must be nonnegative, got {order}')
        cs = cs[:order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coefficients = tuple(cs)

    @classmethod
    def unit(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def identity(cls, order: int) -> TruncatedSeries:
        """The series t"""
        return cls([0, 1], order)

    def __getitem__(self, j: int) -> Fraction:
        return self.coefficients[j]

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coefficients], self.order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.unit(self.order) * other
        order = min(self.order, other.order)
        return TruncatedSeries([self[j] + other[j] for j in range(order + 1)], order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coefficients], self.order)
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c / other for c in self.coefficients], self.order)
        return series_div(self, other)

    def __pow__(self, k: int):
        return series_pow(self, k)

    def shift(self) -> TruncatedSeries:
        """
        Divide by t. Since t^(j+1)/(j+1)! = t * t^j/j! / (j+1), the order drops by one.

        :raises ValueError: if the constant term is nonzero
        """
        if self[0] != 0:
            raise ValueError('series with a nonzero constant term is not divisible by t')
        if self.order == 0:
            raise ValueError('order-0 series cannot be shifted')
        return TruncatedSeries([self[j + 1] / (j + 1) for j in range(self.order)], self.order - 1)

    def to_list(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    def __repr__(self):
        return f'TruncatedSeries(order={self.order}, {self.to_list()})'


def series_exp_linear(c, order: int) -> TruncatedSeries:
    """e^(c t): coefficients c^j"""
    c = rational(c)
    return TruncatedSeries([c ** j for j in range(order + 1)], order)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    return TruncatedSeries(
        [sum((comb(m, q) * a[q] * b[m - q] for q in range(m + 1)), Fraction(0)) for m in range(order + 1)],
        order
    )


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """
    Solve q * b = a term by term.

    :raises ValueError: 'non-unit divisor' if b has a zero constant term
    """
    if b[0] == 0:
        raise ValueError('non-unit divisor')
    order = min(a.order, b.order)
    q = []
    for m in range(order + 1):
        acc = a[m] - sum((comb(m, i) * q[i] * b[m - i] for i in range(m)), Fraction(0))
        q.append(acc / b[0])
    return TruncatedSeries(q, order)


def series_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        raise ValueError(f'negative exponent {k}, use series_div')
    result, base = TruncatedSeries.unit(a.order), a
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def _exp_minus_one_over_t(c, order: int) -> TruncatedSeries:
    """(e^(c t) - 1) / t"""
    return (series_exp_linear(c, order + 1) - 1).shift()


def egf_power_sum(n: int, k: int, order: int) -> list[Fraction]:
    """
    Coefficients of (e^t + ... + e^(nt))^k, index m holds S_m^(k)(n).
    """
    g = TruncatedSeries([0], order)
    for q in range(1, n + 1):
        g = g + series_exp_linear(q, order)
    return list(series_pow(g, k).coefficients)


def egf_factorized_power_sum(n: int, k: int, order: int) -> list[Fraction]:
    """
    The same coefficients as egf_power_sum, through A(t)^k C(n, t)^k with
    A(t) = -t / (e^(-t) - 1) and C(n, t) = (e^(nt) - 1) / t.
    """
    a = -(TruncatedSeries.unit(order) / _exp_minus_one_over_t(-1, order))
    c = _exp_minus_one_over_t(n, order)
    return list(series_pow(a * c, k).coefficients)


def egf_signed_power_sum(n: int, r: int, order: int) -> list[Fraction]:
    """
    Coefficients of (-1)^r ((e^(-nt) - 1) / (e^t - 1))^r, index q holds (-1)^q S_q^(r)(n).
    """
    ratio = _exp_minus_one_over_t(-n, order) / _exp_minus_one_over_t(1, order)
    return list((series_pow(ratio, r) * (-1) ** r).coefficients)


def egf_bernoulli_high(k: int, order: int) -> list[Fraction]:
    """
    Coefficients of (t / (e^t - 1))^k, index m holds B_m^(k). Negative k is allowed.
    """
    base = _exp_minus_one_over_t(1, order)
    if k >= 0:
        return list(series_pow(TruncatedSeries.unit(order) / base, k).coefficients)
    return list(series_pow(base, -k).coefficients)


def egf_stirling_column(k: int, order: int) -> list[Fraction]:
    """Coefficients of (e^t - 1)^k / k!, index n holds S(n, k)"""
    s = series_pow(series_exp_linear(1, order) - 1, k) / factorial(k)
    return list(s.coefficients)


def egf_genocchi(order: int) -> list[Fraction]:
    """
    Even-index coefficients of 2t / (e^t + 1).

    :return: list whose element r - 1 is G_(2r), for 2r <= order
    """
    s = TruncatedSeries([0, 2], order) / (series_exp_linear(1, order) + 1)
    return [s[2 * r] for r in range(1, order // 2 + 1)]
