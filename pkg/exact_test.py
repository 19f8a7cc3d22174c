import logging
import random
from fractions import Fraction

import pytest
from sympy import Poly, Rational, symbols

from config import seed
from HigherPowerSums.utils import (
    Polynomial,
    LaurentPolynomial,
    TrivariatePolynomial,
    poly_mul,
    poly_compose,
    poly_derivative,
    root_multiplicity,
    rational_roots,
    binomial_poly,
    central_binomial_poly,
    to_faulhaber_form,
    laurent_mul,
    laurent_substitute_w,
    solve_linear_system,
    solve_overdetermined,
    SingularSystem,
    InconsistentSystem,
)
from HigherPowerSums.utils.math import divisors, exact_str
from HigherPowerSums.utils.polynomials import W

logger = logging.getLogger(__name__)

z = symbols('z')


def to_sympy(p: Polynomial) -> Poly:
    return Poly(list(reversed([Rational(c.numerator, c.denominator) for c in p.coefficients])) or [0], z)


def random_poly(rng: random.Random, degree: int) -> Polynomial:
    return Polynomial(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(degree + 1))


def test_normalisation():
    p = Polynomial([1, 2, 0, 0])
    assert p.coefficients == (1, 2)
    assert p.degree == 1
    assert Polynomial([0, 0]).degree == -1
    assert not Polynomial()
    assert Polynomial([Fraction(2, 4)]).coefficients[0] == Fraction(1, 2)


def test_mul_against_sympy():
    rng = random.Random(seed)
    for _ in range(20):
        a, b = random_poly(rng, rng.randint(0, 6)), random_poly(rng, rng.randint(0, 6))
        assert to_sympy(poly_mul(a, b)) == to_sympy(a) * to_sympy(b)


@pytest.mark.parametrize('degree', range(21))
def test_mul_commutative_associative(degree):
    rng = random.Random(seed + 100 + degree)
    a = random_poly(rng, degree)
    b, c = (random_poly(rng, rng.randint(0, degree)) for _ in range(2))
    assert poly_mul(a, b) == poly_mul(b, a)
    assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))


def test_mul_examples():
    assert poly_mul(Polynomial([1, 1]), Polynomial([-1, 1])) == Polynomial([-1, 0, 1])
    assert poly_mul(Polynomial([1, 2]), Polynomial()) == Polynomial()


def test_compose():
    assert poly_compose(Polynomial([0, 0, 1]), Polynomial([1, 1])) == Polynomial([1, 2, 1])
    assert poly_compose(Polynomial([0, 1]), W) == W
    assert poly_compose(Polynomial([5]), Polynomial([1, 1])) == Polynomial([5])


def test_compose_evaluates_consistently():
    rng = random.Random(seed + 1)
    for _ in range(10):
        p, q = random_poly(rng, 4), random_poly(rng, 3)
        x = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert poly_compose(p, q)(x) == p(q(x))


def test_derivative():
    assert poly_derivative(Polynomial([0, 0, 0, 1])) == Polynomial([0, 0, 3])
    assert poly_derivative(Polynomial([7])) == Polynomial()
    assert poly_derivative(Polynomial([0, Fraction(1, 2), Fraction(1, 2)])) == Polynomial([Fraction(1, 2), 1])


def test_divmod():
    p = Polynomial([1, 2, 3, 4])
    d = Polynomial([1, 1])
    q, r = p.divmod(d)
    assert q * d + r == p
    assert r.degree < d.degree
    with pytest.raises(ValueError):
        p.exact_div(d)
    with pytest.raises(ZeroDivisionError):
        p.divmod(Polynomial())


@pytest.mark.parametrize('p, x0, expected', [
    (Polynomial([1, 1]) ** 3, -1, 3),
    (Polynomial([1, 1]) ** 2 * Polynomial([0, 1]), -1, 2),
    (Polynomial([0, 1]) * Polynomial([1, 2]), -1, 0),
    (Polynomial([1, 2]), Fraction(-1, 2), 1),
])
def test_root_multiplicity(p, x0, expected):
    assert root_multiplicity(p, x0) == expected


def test_root_multiplicity_zero_polynomial():
    with pytest.raises(ValueError):
        root_multiplicity(Polynomial(), 1)


def test_rational_roots():
    p = Polynomial([0, 1]) * Polynomial([1, 1]) * Polynomial([1, 2]) / 6
    assert rational_roots(p) == {Fraction(0), Fraction(-1), Fraction(-1, 2)}
    assert rational_roots(Polynomial([1, 0, 1])) == set()
    assert rational_roots(Polynomial([0, 0, 1])) == {Fraction(0)}
    assert rational_roots(Polynomial([-4, 0, 9])) == {Fraction(2, 3), Fraction(-2, 3)}
    with pytest.raises(ValueError):
        rational_roots(Polynomial())


def test_binomial_poly():
    # C(2(z+1), 1) = 2z + 2
    assert binomial_poly(2, 1) == Polynomial([2, 2])
    assert binomial_poly(3, 0) == Polynomial([1])
    # C(k(n+1), q) at n = 2
    assert binomial_poly(3, 4)(2) == 126


def test_central_binomial_poly():
    assert central_binomial_poly(1) == Polynomial([1])
    assert central_binomial_poly(2) == Polynomial([1, 2])
    assert central_binomial_poly(3)(1) == 10
    with pytest.raises(ValueError):
        central_binomial_poly(0)


@pytest.mark.parametrize('p, kind, g', [
    (Polynomial([0, Fraction(1, 2), Fraction(1, 2)]), 'odd-case', Polynomial([0, Fraction(1, 2)])),
    (Polynomial([0, Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)]), 'even-case', Polynomial([0, Fraction(1, 6)])),
    (Polynomial([3]), 'odd-case', Polynomial([3])),
])
def test_faulhaber_form(p, kind, g):
    form = to_faulhaber_form(p)
    assert form.kind == kind
    assert form.g == g
    assert form.expand() == p


def test_faulhaber_form_rejects():
    with pytest.raises(ValueError, match='not representable'):
        to_faulhaber_form(Polynomial([0, 1]))
    with pytest.raises(ValueError):
        to_faulhaber_form(Polynomial())


def test_solve_linear_system():
    assert solve_linear_system([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve_linear_system([[0, 1], [1, 0]], [2, 3]) == [3, 2]
    assert solve_linear_system([], []) == []


def test_solve_linear_system_random():
    rng = random.Random(seed + 2)
    for _ in range(10):
        n = rng.randint(1, 5)
        rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        x = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
        rhs = [sum(a * b for a, b in zip(row, x)) for row in rows]
        try:
            assert solve_linear_system(rows, rhs) == x
        except SingularSystem:
            logger.info('skipped singular random matrix %s', rows)


def test_solve_linear_system_singular():
    with pytest.raises(SingularSystem, match='singular'):
        solve_linear_system([[1, 2], [2, 4]], [1, 2])
    with pytest.raises(ValueError):
        solve_linear_system([[1, 2]], [1])


def test_solve_overdetermined():
    rows = [[1, 0], [0, 1], [1, 1]]
    assert solve_overdetermined(rows, [1, 2, 3]) == [1, 2]
    with pytest.raises(InconsistentSystem, match='inconsistent'):
        solve_overdetermined(rows, [1, 2, 4])
    with pytest.raises(SingularSystem):
        solve_overdetermined([[1, 1], [2, 2], [3, 3]], [1, 2, 3])


def test_laurent():
    a = LaurentPolynomial({-1: 1, 0: 1})      # (w + 1) / w
    b = LaurentPolynomial({1: 1})
    assert laurent_mul(a, b) == LaurentPolynomial({0: 1, 1: 1})
    assert laurent_mul(a, b).min_exponent == 0
    assert a(2) == Fraction(3, 2)
    with pytest.raises(ValueError, match='negative exponents'):
        laurent_substitute_w(a, W)
    assert laurent_substitute_w(laurent_mul(a, b), W) == Polynomial([1, 1, 1])
    assert LaurentPolynomial({0: 0}).coefficients == {}


def test_laurent_rejects_zero():
    for f in (LaurentPolynomial({-1: 1, 0: 1}), LaurentPolynomial({0: 1, 2: 3}), LaurentPolynomial()):
        with pytest.raises(ValueError, match='w = 0'):
            f(0)
    assert LaurentPolynomial({0: 1, 2: 3})(1) == 4


def test_trivariate():
    x, y, zz = TrivariatePolynomial.x(), TrivariatePolynomial.y(), TrivariatePolynomial.z()
    f = (zz + x) * (zz + y) - zz * zz
    assert f == x * zz + y * zz + x * y
    assert f.permute((1, 0, 2)) == f
    assert f.specialize(1, 1) == Polynomial([1, 2])
    assert (zz * zz).shift_z(1) == zz * zz + zz * 2 + TrivariatePolynomial.one()
    assert f(1, 2, 3) == 11


def test_divisors_and_text():
    assert divisors(-12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(ValueError):
        divisors(0)
    assert exact_str(Fraction(-3, 6)) == '-1/2'
    assert exact_str(Polynomial([1, 0, -2])) == '-2*z^2 + 1'
