"""Exact arithmetic: Q(sqrt(m)) elements, polynomials, and rational
generating functions with factored denominators Prod (1 - t^a_i).

Everything here is immutable and pure.  Rational numbers are plain
`fractions.Fraction`; there is no custom rational type.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import NonPolynomial

Rational = Fraction


class QuadExt:
    """An element a + b*sqrt(m) of a real quadratic field.

    a and b may be ints or Fractions; m is a squarefree positive radicand.
    Elements with different m never mix (m == 1 is allowed and means a
    rational element, so it coerces freely).
    """

    __slots__ = ("a", "b", "m")

    def __init__(self, a, b=0, m=1):
        if b == 0:
            m = 1
        self.a = a
        self.b = b
        self.m = m

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if self.m != other.m and self.m != 1 and other.m != 1:
                raise ValueError(f"mixing radicands {self.m} and {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a + o.a, self.b + o.b, max(self.m, o.m))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = max(self.m, o.m)
        return QuadExt(
            self.a * o.a + m * self.b * o.b,
            self.a * o.b + self.b * o.a,
            m,
        )

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.m)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.m if self.b else 1))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self):
        return self.b == 0

    def __repr__(self):
        if self.b == 0:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a}, {self.b}, m={self.m})"


def _as_parts(c):
    """(rational part, sqrt part, radicand) of an int/Fraction/QuadExt."""
    if isinstance(c, QuadExt):
        return c.a, c.b, c.m
    return c, 0, 1


class Poly:
    """Polynomial with ascending coefficients; trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = coeffs

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly([])
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out)
        return Poly([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reversed(self):
        """t^deg * self(1/t): the coefficient list read backwards."""
        return Poly(list(reversed(self.coeffs)))

    def __repr__(self):
        return f"Poly({self.coeffs})"


class RationalGF:
    """numerator(t) / Prod_i (1 - t^{a_i}), denominator kept factored."""

    __slots__ = ("numerator", "denom_exponents")

    def __init__(self, numerator, denom_exponents):
        if not isinstance(numerator, Poly):
            numerator = Poly(numerator)
        self.numerator = numerator
        self.denom_exponents = tuple(sorted(denom_exponents))

    def __repr__(self):
        return f"RationalGF({self.numerator.coeffs}, {list(self.denom_exponents)})"


def series_coeffs(gf, n):
    """First n power-series coefficients of gf (t^0 .. t^{n-1})."""
    c = [gf.numerator[i] for i in range(n)]
    # Multiplying by 1/(1-t^a) is a prefix sum with stride a.
    for a in gf.denom_exponents:
        for i in range(a, n):
            c[i] += c[i - a]
    return c


def fit_numerator(seq, denom_exponents, max_deg):
    """Numerator Q with Q / Prod(1-t^a) = seq, or NonPolynomial.

    seq must extend past max_deg + sum(a_i) so the tail check is honest.
    """
    denoms = sorted(denom_exponents)
    margin = sum(denoms)
    if len(seq) <= max_deg + margin:
        raise ValueError(
            f"need more than {max_deg + margin} terms, got {len(seq)}"
        )
    c = list(seq)
    for a in denoms:
        c = [c[i] - (c[i - a] if i >= a else 0) for i in range(len(c))]
    for i in range(max_deg + 1, len(c)):
        if c[i]:
            raise NonPolynomial(
                f"residual coefficient {c[i]} at degree {i} (> {max_deg})"
            )
    return Poly(c[: max_deg + 1])


def is_palindromic(gf):
    """True iff t^d * Q(1/t) = Q(t) for the numerator Q of gf."""
    q = gf.numerator.coeffs
    return bool(q) and q == q[::-1]


def palindromic_ell(gf):
    """The exponent l with F(1/t) = (-1)^m t^l F(t) for palindromic gf."""
    return sum(gf.denom_exponents) - gf.numerator.degree
