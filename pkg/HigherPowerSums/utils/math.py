from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm

from sympy import divisors as _divisors


def rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('bool is not a rational')
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f'cannot convert {type(value).__name__} to an exact rational')


def exact_str(value) -> str:
    """Canonical text of an exact value: 'p/q' for rationals, to_text() for polynomial objects"""
    if hasattr(value, 'to_text'):
        return value.to_text()
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def divisors(n: int) -> list[int]:
    """
    Positive divisors of a nonzero integer.

    :param n: nonzero integer, sign is ignored
    :return: ascending list of divisors of |n|
    """
    if n == 0:
        raise ValueError('divisors of zero are undefined')
    return [int(d) for d in _divisors(abs(n))]


def common_denominator(values) -> int:
    return lcm(1, *(rational(v).denominator for v in values))


def content(values) -> int:
    return gcd(*values)
