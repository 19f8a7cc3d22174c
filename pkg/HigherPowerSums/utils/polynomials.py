from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import comb, factorial, gcd

from HigherPowerSums.utils.math import rational, common_denominator, content, divisors


class Polynomial:
    """
    Polynomial is a dense univariate polynomial with exact rational coefficients,
    coefficients[i] holds the coefficient of z^i. Trailing zeros are stripped, so the
    zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ('coefficients',)

    def __init__(self, coefficients=()):
        cs = [rational(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coefficients = tuple(cs)

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> Polynomial:
        if degree < 0:
            raise ValueError(f'negative degree {degree}')
        return cls([0] * degree + [c])

    @classmethod
    def variable(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def from_list(cls, values: list) -> Polynomial:
        return cls(Fraction(v) for v in values)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == Polynomial.constant(other).coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coefficients)

    def __add__(self, other) -> Polynomial:
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        return Polynomial(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0))

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coefficients)
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError('polynomial divided by zero')
            return Polynomial(c / other for c in self.coefficients)
        if isinstance(other, Polynomial):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError('negative power of a polynomial')
        result, base = Polynomial.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation, x may be a rational or another Polynomial (composition)"""
        if isinstance(x, Polynomial):
            return poly_compose(self, x)
        x = rational(x)
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if not other:
            raise ZeroDivisionError('polynomial division by zero polynomial')
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - other.degree, 0)
        lead = other.leading
        for i in range(len(remainder) - 1, other.degree - 1, -1):
            factor = remainder[i] / lead
            if factor == 0:
                continue
            shift = i - other.degree
            quotient[shift] = factor
            for j, c in enumerate(other.coefficients):
                remainder[shift + j] -= factor * c
        return Polynomial(quotient), Polynomial(remainder[:max(other.degree, 0)])

    def exact_div(self, other: Polynomial) -> Polynomial:
        quotient, remainder = self.divmod(other)
        if remainder:
            raise ValueError('polynomial division is not exact')
        return quotient

    def derivative(self) -> Polynomial:
        return poly_derivative(self)

    def compose(self, inner: Polynomial) -> Polynomial:
        return poly_compose(self, inner)

    def primitive(self) -> list[int]:
        """
        Integer coefficients proportional to the polynomial, with positive leading coefficient
        and content one.

        :return: list of ints, index i for z^i
        """
        if not self:
            raise ValueError('zero polynomial')
        d = common_denominator(self.coefficients)
        ints = [int(c * d) for c in self.coefficients]
        g = content(ints)
        if ints[-1] < 0:
            g = -g
        return [i // g for i in ints]

    def to_list(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    def to_text(self, var: str = 'z') -> str:
        if not self:
            return '0'
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else f'{var}^{i}'
                body = power if mag == 1 else f'{mag}*{power}'
            if not terms:
                terms.append(body if c > 0 else f'-{body}')
            else:
                terms.append(f'+ {body}' if c > 0 else f'- {body}')
        return ' '.join(terms)

    def __repr__(self):
        return f'Polynomial({self.to_text()})'


def _as_polynomial(value) -> Polynomial | None:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Polynomial.constant(value)
    return None


Z = Polynomial.variable()
W = Polynomial((0, 1, 1))  # z^2 + z


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if not a or not b:
        return Polynomial()
    out = [Fraction(0)] * (len(a.coefficients) + len(b.coefficients) - 1)
    for i, x in enumerate(a.coefficients):
        if x == 0:
            continue
        for j, y in enumerate(b.coefficients):
            out[i + j] += x * y
    return Polynomial(out)


def poly_compose(outer: Polynomial, inner: Polynomial) -> Polynomial:
    result = Polynomial()
    for c in reversed(outer.coefficients):
        result = result * inner + c
    return result


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(i * c for i, c in enumerate(p.coefficients) if i)


def synthetic_division(p: Polynomial, x0) -> tuple[Polynomial, Fraction]:
    """
    Divide p by (z - x0).

    :return: quotient and remainder p(x0)
    """
    x0 = rational(x0)
    acc = Fraction(0)
    out = []
    for c in reversed(p.coefficients):
        acc = acc * x0 + c
        out.append(acc)
    if not out:
        return Polynomial(), Fraction(0)
    remainder = out.pop()
    return Polynomial(reversed(out)), remainder


def root_multiplicity(p: Polynomial, x0) -> int:
    """
    Multiplicity of x0 as a root of p, 0 when p(x0) != 0.

    :param p: nonzero polynomial
    :param x0: exact rational
    :return: largest e with (z - x0)^e dividing p
    """
    if not p:
        raise ValueError('root multiplicity of the zero polynomial is undefined')
    count = 0
    while True:
        quotient, remainder = synthetic_division(p, x0)
        if remainder != 0:
            return count
        count += 1
        p = quotient


def _vanishes(ints: list[int], num: int, den: int) -> bool:
    n = len(ints) - 1
    total = 0
    for i, a in enumerate(ints):
        if a:
            total += a * num ** i * den ** (n - i)
    return total == 0


def rational_roots(p: Polynomial) -> set[Fraction]:
    """
    All rational roots of p by the rational-root theorem: after clearing denominators,
    every root num/den in lowest terms has num | a_0 and den | a_n.

    :param p: nonzero polynomial
    :return: set of distinct rational roots
    """
    if not p:
        raise ValueError('roots of the zero polynomial are undefined')
    ints = p.primitive()
    roots = set()
    v = 0
    while ints[v] == 0:
        v += 1
    if v:
        roots.add(Fraction(0))
        ints = ints[v:]
    if len(ints) == 1:
        return roots
    for den in divisors(ints[-1]):
        for num in divisors(ints[0]):
            if gcd(num, den) != 1:
                continue
            for s in (1, -1):
                if _vanishes(ints, s * num, den):
                    roots.add(Fraction(s * num, den))
    return roots


def binomial_poly(k: int, q: int) -> Polynomial:
    """C(k(z+1), q) as a polynomial in z of degree q"""
    if q < 0:
        return Polynomial()
    kz = Polynomial((k, k))
    result = Polynomial.constant(1)
    for i in range(q):
        result = result * (kz - i)
    return result / factorial(q)


def central_binomial_poly(k: int) -> Polynomial:
    """C(k(z+1)-1, k-1) as a polynomial in z of degree k-1"""
    if k < 1:
        raise ValueError(f'k must be positive, got {k}')
    kz = Polynomial((k - 1, k))
    result = Polynomial.constant(1)
    for i in range(k - 1):
        result = result * (kz - i)
    return result / factorial(k - 1)


class FaulhaberForm:
    """
    Representation of a polynomial in z through w = z(z+1):
    'odd-case' means p(z) = g(w), 'even-case' means p(z) = (2z+1) g(w).
    """

    kinds = ('odd-case', 'even-case')

    def __init__(self, kind: str, g: Polynomial):
        if kind not in self.kinds:
            raise ValueError(f'unknown Faulhaber form kind {kind}')
        self.kind = kind
        self.g = g

    def expand(self) -> Polynomial:
        p = self.g(W)
        if self.kind == 'even-case':
            p = p * Polynomial((1, 2))
        return p

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'g': self.g.to_list()}

    def __eq__(self, other):
        if not isinstance(other, FaulhaberForm):
            return NotImplemented
        return self.kind == other.kind and self.g == other.g

    def __repr__(self):
        return f'FaulhaberForm({self.kind}, g(w) = {self.g.to_text("w")})'


def _w_expansion(p: Polynomial) -> Polynomial | None:
    g = []
    while p:
        p, remainder = p.divmod(W)
        if remainder.degree > 0:
            return None
        g.append(remainder[0])
    return Polynomial(g)


def to_faulhaber_form(p: Polynomial) -> FaulhaberForm:
    """
    Express p as g(w) or (2z+1) g(w) with w = z^2 + z.

    :param p: nonzero polynomial
    :return: FaulhaberForm, the odd case is preferred when both apply
    :raises ValueError: 'not representable' if p has neither shape
    """
    if not p:
        raise ValueError('zero polynomial has no Faulhaber form')
    g = _w_expansion(p)
    if g is not None:
        return FaulhaberForm('odd-case', g)
    quotient, remainder = p.divmod(Polynomial((1, 2)))
    if not remainder:
        g = _w_expansion(quotient)
        if g is not None:
            return FaulhaberForm('even-case', g)
    raise ValueError('not representable')


class LaurentPolynomial:
    """Finite sum of c * w^e with integer e (possibly negative) and rational c"""

    __slots__ = ('coefficients',)

    def __init__(self, coefficients: dict | None = None):
        self.coefficients = {int(e): rational(c) for e, c in (coefficients or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exponent: int, c=1) -> LaurentPolynomial:
        return cls({exponent: c})

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> LaurentPolynomial:
        return cls(dict(enumerate(p.coefficients)))

    @property
    def min_exponent(self) -> int | None:
        return min(self.coefficients) if self.coefficients else None

    @property
    def max_exponent(self) -> int | None:
        return max(self.coefficients) if self.coefficients else None

    def __getitem__(self, e: int) -> Fraction:
        return self.coefficients.get(e, Fraction(0))

    def __bool__(self):
        return bool(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.coefficients.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = dict(self.coefficients)
        for e, c in other.coefficients.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial({e: c * other for e, c in self.coefficients.items()})
        if isinstance(other, LaurentPolynomial):
            return laurent_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError('negative power of a Laurent polynomial')
        result = LaurentPolynomial({0: 1})
        for _ in range(e):
            result = result * self
        return result

    def shift(self, e: int) -> LaurentPolynomial:
        """Multiply by w^e"""
        return LaurentPolynomial({k + e: c for k, c in self.coefficients.items()})

    def __call__(self, w):
        w = rational(w)
        if w == 0:
            raise ValueError('Laurent polynomial evaluated at w = 0')
        return sum((c * w ** e for e, c in self.coefficients.items()), Fraction(0))

    def to_polynomial(self) -> Polynomial:
        if self.coefficients and self.min_exponent < 0:
            raise ValueError('negative exponents present')
        if not self.coefficients:
            return Polynomial()
        return Polynomial(self[i] for i in range(self.max_exponent + 1))

    def to_dict(self) -> dict:
        return {str(e): str(c) for e, c in sorted(self.coefficients.items())}

    def to_text(self, var: str = 'w') -> str:
        if not self.coefficients:
            return '0'
        return ' + '.join(f'({c})*{var}^{e}' for e, c in sorted(self.coefficients.items(), reverse=True))

    def __repr__(self):
        return f'LaurentPolynomial({self.to_text()})'


def laurent_mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    out = {}
    for e1, c1 in a.coefficients.items():
        for e2, c2 in b.coefficients.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return LaurentPolynomial(out)


def laurent_substitute_w(a: LaurentPolynomial, w: Polynomial = W) -> Polynomial:
    """
    Substitute a polynomial for w in a Laurent polynomial with no negative exponents.

    :raises ValueError: if negative exponents are present
    """
    return a.to_polynomial()(w)


class TrivariatePolynomial:
    """
    Sparse polynomial in x, y, z with rational coefficients keyed by exponent triples (i, j, l).
    """

    __slots__ = ('terms',)

    def __init__(self, terms: dict | None = None):
        self.terms = {tuple(key): rational(c) for key, c in (terms or {}).items() if c != 0}

    @classmethod
    def x(cls):
        return cls({(1, 0, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1, 0): 1})

    @classmethod
    def z(cls):
        return cls({(0, 0, 1): 1})

    @classmethod
    def one(cls):
        return cls({(0, 0, 0): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TrivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return TrivariatePolynomial({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, TrivariatePolynomial):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TrivariatePolynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TrivariatePolynomial({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, TrivariatePolynomial):
            return NotImplemented
        out = {}
        for (i1, j1, l1), c1 in self.terms.items():
            for (i2, j2, l2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2, l1 + l2)
                out[key] = out.get(key, 0) + c1 * c2
        return TrivariatePolynomial(out)

    __rmul__ = __mul__

    def shift_z(self, c=1) -> TrivariatePolynomial:
        """Substitute z -> z + c"""
        c = rational(c)
        out = {}
        for (i, j, l), coefficient in self.terms.items():
            for s in range(l + 1):
                key = (i, j, s)
                out[key] = out.get(key, 0) + coefficient * comb(l, s) * c ** (l - s)
        return TrivariatePolynomial(out)

    def permute(self, order: tuple[int, int, int]) -> TrivariatePolynomial:
        """Rename variables: new exponent at position p is the old exponent at order[p]"""
        return TrivariatePolynomial({tuple(key[p] for p in order): c for key, c in self.terms.items()})

    def specialize(self, x, y) -> Polynomial:
        """Fix x and y, return the polynomial in z"""
        x, y = rational(x), rational(y)
        degree = max((l for _, _, l in self.terms), default=-1)
        out = [Fraction(0)] * (degree + 1)
        for (i, j, l), c in self.terms.items():
            out[l] += c * x ** i * y ** j
        return Polynomial(out)

    def __call__(self, x, y, z):
        return self.specialize(x, y)(z)

    def to_dict(self) -> dict:
        return {f'{i},{j},{l}': str(c) for (i, j, l), c in sorted(self.terms.items())}

    def to_text(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for (i, j, l), c in sorted(self.terms.items(), reverse=True):
            monomial = '*'.join(f'{v}^{e}' for v, e in zip('xyz', (i, j, l)) if e)
            parts.append(f'{c}*{monomial}' if monomial else str(c))
        return ' + '.join(parts)

    def __repr__(self):
        return f'TrivariatePolynomial({self.to_text()})'
