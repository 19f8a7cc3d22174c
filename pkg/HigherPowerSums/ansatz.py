from __future__ import annotations

import logging
from fractions import Fraction

from config import reconstruct_max_r, reconstruct_extra_nodes
from HigherPowerSums.binomial_sums import binomial_sum_poly
from HigherPowerSums.sequences import gandhi_poly
from HigherPowerSums.utils.errors import InconsistentSystem, InstanceTooLarge, InternalInconsistency
from HigherPowerSums.utils.linalg import solve_overdetermined
from HigherPowerSums.utils.polynomials import (
    LaurentPolynomial,
    Polynomial,
    W,
    central_binomial_poly,
    laurent_substitute_w,
    to_faulhaber_form,
)
from HigherPowerSums.verifier import VerificationReport

logger = logging.getLogger(__name__)


def ansatz_indices(r: int) -> list[tuple[int, int]]:
    """Unknowns (q, j) with 0 <= q <= (r-1)//3 and 0 <= j <= r-3q-1"""
    return [(q, j) for q in range((r - 1) // 3 + 1) for j in range(r - 3 * q)]


def ansatz_basis(r: int, q: int, j: int) -> LaurentPolynomial:
    """(w+1)^e / w^(e+q) with e = r - j - 3q - 1, the w-part multiplying k^j"""
    e = r - j - 3 * q - 1
    return LaurentPolynomial.from_polynomial(Polynomial((1, 1)) ** e).shift(-(e + q))


class BivariateF:
    """
    BivariateF is F_r(w, k): a polynomial in k whose coefficients are Laurent polynomials in w
    """
    def __init__(self, r: int, ansatz: dict[tuple[int, int], Fraction]):
        """
        :param r: index, positive
        :param ansatz: (q, j) -> F^(q)_(r,j), missing entries are zero
        """
        unknown = set(ansatz) - set(ansatz_indices(r))
        if unknown:
            raise ValueError(f'coefficients {sorted(unknown)} are outside the ansatz for r={r}')
        self.r = r
        self.ansatz = {key: Fraction(c) for key, c in ansatz.items() if c != 0}
        self.coefficients = dict()
        for (q, j), c in sorted(self.ansatz.items()):
            term = ansatz_basis(r, q, j) * c
            self.coefficients[j] = self.coefficients.get(j, LaurentPolynomial()) + term
        self.coefficients = {j: c for j, c in self.coefficients.items() if c}
        self.verified_up_to = None

    @property
    def degree(self) -> int:
        """Degree in k"""
        return max(self.coefficients, default=-1)

    @property
    def min_exponent(self) -> int | None:
        exponents = [c.min_exponent for c in self.coefficients.values()]
        return min(exponents) if exponents else None

    def at_k(self, k) -> LaurentPolynomial:
        k = Fraction(k)
        total = LaurentPolynomial()
        for j, c in self.coefficients.items():
            total = total + c * k ** j
        return total

    def at_w(self, w) -> Polynomial:
        """Polynomial in k at a fixed nonzero w"""
        return Polynomial(self.coefficients[j](w) if j in self.coefficients else 0 for j in range(self.degree + 1))

    def __eq__(self, other):
        if not isinstance(other, BivariateF):
            return NotImplemented
        return self.r == other.r and self.ansatz == other.ansatz

    def rows(self) -> list[dict]:
        return [{'q': q, 'j': j, 'value': str(self.ansatz.get((q, j), Fraction(0)))} for q, j in ansatz_indices(self.r)]

    def to_dict(self) -> dict:
        return {
            'r': self.r,
            'coefficients': {str(j): c.to_dict() for j, c in sorted(self.coefficients.items())},
            'ansatz': self.rows(),
        }

    def __repr__(self):
        return f'BivariateF(r={self.r}, {self.ansatz})'


_third = Fraction(1, 3)

TABULATED = {
    1: {(0, 0): 1},
    2: {(0, 1): 2, (0, 0): 2 * _third},
    3: {(0, 2): 6, (0, 1): 16 * _third, (0, 0): 4 * _third},
    4: {(0, 3): 24, (0, 2): 40, (0, 1): 24, (0, 0): Fraction(24, 5), (1, 0): Fraction(8, 5)},
    5: {
        (0, 4): 120, (0, 3): 320, (0, 2): Fraction(1016, 3), (0, 1): 160, (0, 0): Fraction(80, 3),
        (1, 1): 32, (1, 0): Fraction(80, 3),
    },
    6: {
        (0, 5): 720, (0, 4): 2800, (0, 3): Fraction(13664, 3), (0, 2): Fraction(55936, 15),
        (0, 1): Fraction(22112, 15), (0, 0): Fraction(22112, 105),
        (1, 2): Fraction(2544, 5), (1, 1): Fraction(13664, 15), (1, 0): Fraction(44224, 105),
    },
}


def tabulated_F(r: int) -> BivariateF:
    if r not in TABULATED:
        raise ValueError('not tabulated')
    return BivariateF(r, TABULATED[r])


def eq36_rhs(f: BivariateF, k: int) -> Polynomial:
    """
    (-w/2)^(r+1) F_r(w, -k) k^2 C(k(z+1)-1, k-1) as a polynomial in z.

    :raises InternalInconsistency: 'denominator not cleared' if negative powers of w survive
    """
    cleared = f.at_k(-k) * LaurentPolynomial.monomial(1, Fraction(-1, 2)) ** (f.r + 1)
    if cleared and cleared.min_exponent < 0:
        raise InternalInconsistency('denominator not cleared')
    return laurent_substitute_w(cleared, W) * (k * k) * central_binomial_poly(k)


def eq36_point_check(r: int, k: int) -> VerificationReport:
    report = VerificationReport('eq36')
    report.record({'r': r, 'k': k}, eq36_rhs(tabulated_F(r), k), binomial_sum_poly(2 * r + 1, k))
    return report


def eq36_verify(r: int, k_max: int) -> VerificationReport:
    """Tabulated F_r against the binomial sum polynomials for k = 1..k_max"""
    return VerificationReport.merge([eq36_point_check(r, k) for k in range(1, k_max + 1)], 'eq36')


def ansatz_gandhi_check(r: int) -> VerificationReport:
    """F_r(2, k) = F_r(k), the Gandhi polynomial"""
    report = VerificationReport('eq36-gandhi')
    report.record({'r': r}, tabulated_F(r).at_w(2), gandhi_poly(r))
    return report


def _target(r: int, k: int) -> LaurentPolynomial:
    # F_r(w, -k) from the binomial sum polynomial
    quotient = binomial_sum_poly(2 * r + 1, k).exact_div(central_binomial_poly(k) * (k * k))
    form = to_faulhaber_form(quotient)
    if form.kind != 'odd-case':
        raise InconsistentSystem()
    return LaurentPolynomial.from_polynomial(form.g).shift(-(r + 1)) * Fraction(-2) ** (r + 1)


def eq36_reconstruct(r: int, extra: int = reconstruct_extra_nodes, max_r: int = reconstruct_max_r) -> BivariateF:
    """
    Solve for the ansatz coefficients F^(q)_(r,j) by equating Laurent coefficients in w at
    k = 1..(number of unknowns), then confirm the result on `extra` further values of k.

    :raises SingularSystem: the fitting nodes do not determine the coefficients
    :raises InconsistentSystem: no exact solution, or the check beyond the fitting nodes fails
    :raises InstanceTooLarge: r above max_r
    """
    if r < 1:
        raise ValueError(f'r must be positive, got {r}')
    if r > max_r:
        raise InstanceTooLarge(r, max_r)

    indices = ansatz_indices(r)
    basis = {key: ansatz_basis(r, *key) for key in indices}
    nodes = range(1, len(indices) + 1)

    rows, rhs = list(), list()
    for k in nodes:
        try:
            target = _target(r, k)
        except ValueError as e:
            raise InconsistentSystem(f'inconsistent: {e}') from e
        exponents = set(target.coefficients)
        for b in basis.values():
            exponents |= set(b.coefficients)
        for e in sorted(exponents):
            rows.append([Fraction(-k) ** j * basis[(q, j)][e] for q, j in indices])
            rhs.append(target[e])

    solution = solve_overdetermined(rows, rhs)
    f = BivariateF(r, dict(zip(indices, solution)))
    logger.info('r=%d: fitted %d coefficients on k=1..%d', r, len(indices), len(nodes))

    last = len(nodes) + extra
    for k in range(1, last + 1):
        if eq36_rhs(f, k) != binomial_sum_poly(2 * r + 1, k):
            raise InconsistentSystem(f'inconsistent at k={k}')
    f.verified_up_to = last
    return f
