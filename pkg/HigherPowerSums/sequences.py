from __future__ import annotations

import logging
import threading
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from HigherPowerSums.utils.errors import InternalInconsistency
from HigherPowerSums.utils.polynomials import Polynomial, TrivariatePolynomial, Z
from HigherPowerSums.utils.linalg import solve_linear_system
from HigherPowerSums.series import egf_genocchi
from HigherPowerSums.verifier import VerificationReport

logger = logging.getLogger(__name__)


class SequenceCache:
    """
    SequenceCache holds the memo tables of the sequence families. Values are computed
    outside the lock and published with setdefault, so a reader sees either no entry
    or a complete one.
    """
    tables = (
        'bernoulli',
        'bernoulli_high',
        'norlund_chain',
        'norlund_poly',
        'stirling2',
        'stirling_poly',
        'poly_coefficient',
    )

    def __init__(self):
        self._lock = threading.Lock()
        self.clear()

    def lookup(self, table: str, key, compute: Callable):
        memo = self._memo[table]
        try:
            return memo[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return memo.setdefault(key, value)

    def get(self, table: str, key, default=None):
        return self._memo[table].get(key, default)

    def store(self, table: str, key, value):
        """Publish value, replacing an existing entry"""
        with self._lock:
            self._memo[table][key] = value
        return value

    def clear(self):
        with self._lock:
            self._memo = {name: dict() for name in self.tables}

    def size(self, table: str) -> int:
        return len(self._memo[table])

    def __repr__(self):
        return f'SequenceCache({", ".join(f"{t}={len(m)}" for t, m in self._memo.items())})'


cache = SequenceCache()


def _bernoulli_step(m: int) -> Fraction:
    # every B_q, q < m, is already in the cache
    total = sum((comb(m + 1, q) * cache.get('bernoulli', q) for q in range(m)), Fraction(0))
    return (Fraction(int(m == 0)) - total) / (m + 1)


def bernoulli(m: int) -> Fraction:
    """B_m from sum_{q<=m} C(m+1, q) B_q = [m == 0], so B_1 = -1/2"""
    if m < 0:
        raise ValueError(f'm must be nonnegative, got {m}')
    value = cache.get('bernoulli', m)
    if value is None:
        for q in range(m + 1):
            value = cache.lookup('bernoulli', q, lambda: _bernoulli_step(q))
    return value


def _chain_entry(n: int, k: int) -> Fraction:
    # B_n^(k) from B_n^(k+1) = (k-n)/k B_n^(k) - n B_(n-1)^(k), entries of order k - 1 cached
    if n == 0:
        return Fraction(1)
    if k == 1:
        return bernoulli(n)

    def compute():
        prev = k - 1
        return Fraction(prev - n, prev) * _chain_entry(n, prev) - n * _chain_entry(n - 1, prev)

    return cache.lookup('norlund_chain', (n, k), compute)


def _chain(n: int, k: int) -> Fraction:
    """B_n^(k) for k >= 1, filling the recurrence table order by order"""
    bernoulli(n)
    for order in range(2, k + 1):
        if cache.get('norlund_chain', (n, order)) is not None:
            continue
        for j in range(1, n + 1):
            _chain_entry(j, order)
    return _chain_entry(n, k)


def norlund_chain(m: int, k_max: int) -> list[list[Fraction]]:
    """
    Raw table of the Norlund recurrence seeded at k = 1 with the classical Bernoulli numbers.

    :param m: largest index
    :param k_max: largest order, at least 1
    :return: rows[n][k - 1] = B_n^(k) for 0 <= n <= m, 1 <= k <= k_max
    """
    if k_max < 1:
        raise ValueError(f'k_max must be positive, got {k_max}')
    return [[_chain(n, k) for k in range(1, k_max + 1)] for n in range(m + 1)]


def norlund_poly(m: int) -> Polynomial:
    """
    Norlund polynomial: the degree-m polynomial in k with value B_m^(k) at every k.
    Interpolated at k = 1..m+1, then checked at two more nodes.

    :raises InternalInconsistency: 'interpolation inconsistent' if the extra nodes disagree
    """
    if m < 0:
        raise ValueError(f'm must be nonnegative, got {m}')

    def compute():
        nodes = range(1, m + 2)
        rows = [[Fraction(k) ** i for i in range(m + 1)] for k in nodes]
        p = Polynomial(solve_linear_system(rows, [_chain(m, k) for k in nodes]))
        for k in (m + 2, m + 3):
            if p(k) != _chain(m, k):
                raise InternalInconsistency('interpolation inconsistent')
        logger.debug('norlund_poly(%d) interpolated', m)
        return p

    return cache.lookup('norlund_poly', m, compute)


def bernoulli_high(m: int, k: int) -> Fraction:
    """
    :param m: nonnegative index
    :param k: any integer order, negative orders come from the Norlund polynomial
    :return: B_m^(k)
    """
    return cache.lookup('bernoulli_high', (m, k), lambda: norlund_poly(m)(k))


def _stirling2_row(n: int, width: int) -> tuple[int, ...]:
    # S(n, 0..width-1), built row by row from S(0, 0) = 1
    row = cache.get('stirling2', n)
    if row is not None and len(row) >= min(width, n + 1):
        return row
    row = (1,)
    for i in range(1, n + 1):
        size = min(i + 1, width)
        row = tuple(
            (row[j - 1] if j >= 1 else 0) + (j * row[j] if j < len(row) else 0)
            for j in range(size)
        )
    return cache.store('stirling2', n, row)


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError(f'stirling2 arguments must be nonnegative, got ({n}, {k})')
    if k > n:
        return 0
    return _stirling2_row(n, k + 1)[k]


def stirling_poly(m: int) -> Polynomial:
    """f_m(k) = C(m+k, m) B_m^(-k), a degree-2m polynomial with f_m(k) = S(m+k, k)"""
    if m < 0:
        raise ValueError(f'm must be nonnegative, got {m}')

    def compute():
        choose = Polynomial.constant(1)
        for i in range(1, m + 1):
            choose = choose * Polynomial((i, 1))
        choose = choose / factorial(m)
        return choose * norlund_poly(m)(-Z)

    return cache.lookup('stirling_poly', m, compute)


def _poly_coefficient_row(k: int, n: int) -> tuple[int, ...]:
    def compute():
        factor = Polynomial([0] + [1] * n)
        product = factor ** k
        row = tuple(int(product[k + q]) for q in range(k * (n - 1) + 1))

        # convolution recurrence on the row of k - 1 factors, cached by poly_coefficient
        prev = (1,) if k == 1 else _poly_coefficient_row(k - 1, n)
        if k == 1:
            check = tuple(1 for _ in range(n))
        else:
            check = tuple(
                sum(prev[q - i] for i in range(n) if 0 <= q - i < len(prev))
                for q in range(k * (n - 1) + 1)
            )
        if check != row:
            raise InternalInconsistency(f'poly_coefficient row mismatch at k={k}, n={n}')
        return row

    return cache.lookup('poly_coefficient', (k, n), compute)


def poly_coefficient(k: int, q: int, n: int) -> int:
    """
    Polynomial coefficient C(k, q)_n: the coefficient of t^(k+q) in (t + t^2 + ... + t^n)^k.

    :param k: number of factors, positive
    :param q: offset, zero outside 0..k(n-1)
    :param n: number of terms per factor, positive
    """
    if k < 1 or n < 1:
        raise ValueError(f'k and n must be positive, got k={k}, n={n}')
    for j in range(1, k):
        _poly_coefficient_row(j, n)
    row = _poly_coefficient_row(k, n)
    return row[q] if 0 <= q < len(row) else 0


def genocchi(r: int) -> int:
    """G_2r = 2 (1 - 4^r) B_2r"""
    if r < 1:
        raise ValueError(f'r must be positive, got {r}')
    value = 2 * (1 - 4 ** r) * bernoulli(2 * r)
    if value.denominator != 1:
        raise InternalInconsistency(f'G_{2 * r} is not an integer')
    return int(value)


def gandhi_poly(r: int) -> Polynomial:
    """F_1 = 1, F_(r+1)(k) = (k+1)^2 F_r(k+1) - k^2 F_r(k)"""
    if r < 1:
        raise ValueError(f'r must be positive, got {r}')
    f = Polynomial.constant(1)
    shift = Polynomial((1, 1))
    for _ in range(r - 1):
        f = shift * shift * f(shift) - Z * Z * f
    return f


def dumont_foata(r: int) -> TrivariatePolynomial:
    """F_1 = 1, F_(r+1)(x, y, z) = (z+x)(z+y) F_r(x, y, z+1) - z^2 F_r(x, y, z)"""
    if r < 1:
        raise ValueError(f'r must be positive, got {r}')
    x, y, z = TrivariatePolynomial.x(), TrivariatePolynomial.y(), TrivariatePolynomial.z()
    f = TrivariatePolynomial.one()
    for _ in range(r - 1):
        f = (z + x) * (z + y) * f.shift_z(1) - z * z * f
    return f


def p_poly(r: int) -> Polynomial:
    """P_0 = 1, P_(r+1)(k) = k^2 P_r(k) - k(k-1) P_r(k-1)"""
    if r < 0:
        raise ValueError(f'r must be nonnegative, got {r}')
    p = Polynomial.constant(1)
    back = Polynomial((-1, 1))
    for _ in range(r):
        p = Z * Z * p - Z * back * p(back)
    return p


def recurrence_rel1_check(m: int, k: int) -> VerificationReport:
    report = VerificationReport('rec-rel1')
    lhs = sum((comb(m + k, q) * stirling2(m + k - q, k) * bernoulli(q) for q in range(m + 1)), Fraction(0))
    rhs = Fraction(m + k, k) * stirling2(m + k - 1, k - 1)
    report.record({'m': m, 'k': k}, lhs, rhs)
    return report


def impl1_check(m: int, k: int, r: int) -> VerificationReport:
    """
    Two checks at (m, k, r): the Stirling-weighted sum of B_q^(r), and the convolution
    sum_q C(m, q) B_(m-q)^(-k) B_q^(r) = B_m^(r-k).
    """
    if not 1 <= r <= k:
        raise ValueError(f'impl1 requires 1 <= r <= k, got r={r}, k={k}')
    report = VerificationReport('impl1')
    params = {'m': m, 'k': k, 'r': r}

    lhs = sum((comb(m + k, q) * stirling2(m + k - q, k) * bernoulli_high(q, r) for q in range(m + 1)), Fraction(0))
    rhs = Fraction(comb(m + k, k), comb(m + k - r, k - r)) * stirling2(m + k - r, k - r)
    report.record(params | {'check': 'stirling'}, lhs, rhs)

    lhs = sum((comb(m, q) * bernoulli_high(m - q, -k) * bernoulli_high(q, r) for q in range(m + 1)), Fraction(0))
    report.record(params | {'check': 'convolution'}, lhs, bernoulli_high(m, r - k))
    return report


def gandhi_genocchi_check(r: int) -> VerificationReport:
    """F_r(0) = |G_2r|, with G_2r also read off the series 2t/(e^t + 1)"""
    report = VerificationReport('gandhi-genocchi')
    g = genocchi(r)
    report.record({'r': r, 'check': 'constant-term'}, gandhi_poly(r)(0), abs(g))
    report.record({'r': r, 'check': 'series'}, g, egf_genocchi(2 * r)[r - 1])
    report.record({'r': r, 'check': 'p-relation'}, p_poly(r), (-1) ** (r + 1) * Z * gandhi_poly(r)(-Z))
    return report


def dumont_foata_check(r: int) -> VerificationReport:
    """Symmetry under all variable permutations, F_r(1, 1, k) = F_r(k), F_r(1, 1, 1) = |G_(2r+2)|"""
    report = VerificationReport('dumont-foata-symmetry')
    f = dumont_foata(r)
    for order in ((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        report.record({'r': r, 'check': 'permutation ' + ''.join('xyz'[i] for i in order)}, f.permute(order), f)
    report.record({'r': r, 'check': 'gandhi'}, f.specialize(1, 1), gandhi_poly(r))
    report.record({'r': r, 'check': 'genocchi'}, f(1, 1, 1), abs(genocchi(r + 1)))
    return report


def norlund_table_check(m: int, k: int) -> VerificationReport:
    """Norlund polynomial against the recurrence chain, and B_m^(1) = B_m"""
    report = VerificationReport('norlund-table')
    report.record({'m': m, 'k': k, 'check': 'chain'}, bernoulli_high(m, k), _chain(m, k))
    if k == 1:
        report.record({'m': m, 'k': k, 'check': 'classical'}, bernoulli_high(m, 1), bernoulli(m))
    return report


def stirling_poly_check(m: int, k: int) -> VerificationReport:
    """f_m(k) = S(m+k, k) and the difference identity f_m(k) - f_m(k-1) = k f_(m-1)(k)"""
    report = VerificationReport('stirling-poly')
    f = stirling_poly(m)
    report.record({'m': m, 'k': k, 'check': 'value'}, f(k), stirling2(m + k, k))
    if m >= 1:
        report.record(
            {'m': m, 'k': k, 'check': 'difference'},
            f - f(Polynomial((-1, 1))),
            Z * stirling_poly(m - 1)
        )
    return report
