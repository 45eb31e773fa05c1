from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from paradim.errors import NonPolynomial
from paradim.exactmath import (
    Poly,
    QuadExt,
    RationalGF,
    fit_numerator,
    is_palindromic,
    palindromic_ell,
    series_coeffs,
)

small_ints = st.integers(min_value=-50, max_value=50)


class TestQuadExt:
    def test_basic_arithmetic(self):
        x = QuadExt(1, 2, 5)
        y = QuadExt(3, -1, 5)
        assert x + y == QuadExt(4, 1, 5)
        # (1 + 2r5)(3 - r5) = 3 - r5 + 6r5 - 2*5
        assert x * y == QuadExt(-7, 5, 5)
        assert x - x == QuadExt(0)
        assert not (x - x)

    def test_conjugate_kills_sqrt_part(self):
        x = QuadExt(2, 3, 2)
        n = x * x.conjugate()
        assert n.is_rational() and n.a == 4 - 9 * 2

    def test_rational_coercion(self):
        assert QuadExt(2) + 3 == QuadExt(5)
        assert 3 * QuadExt(1, 1, 3) == QuadExt(3, 3, 3)
        assert 1 - QuadExt(0, 1, 2) == QuadExt(1, -1, 2)

    def test_mixing_radicands_raises(self):
        with pytest.raises(ValueError):
            QuadExt(0, 1, 2) + QuadExt(0, 1, 3)

    def test_fractions_allowed(self):
        h = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
        # the golden ratio satisfies x^2 = x + 1
        assert h * h == h + 1

    @given(small_ints, small_ints, small_ints, small_ints)
    def test_mul_commutes(self, a, b, c, d):
        x, y = QuadExt(a, b, 3), QuadExt(c, d, 3)
        assert x * y == y * x

    @given(small_ints, small_ints, small_ints, small_ints, small_ints, small_ints)
    def test_mul_distributes(self, a, b, c, d, e, f):
        x, y, z = QuadExt(a, b, 2), QuadExt(c, d, 2), QuadExt(e, f, 2)
        assert x * (y + z) == x * y + x * z


class TestPoly:
    def test_trailing_zeros_trimmed(self):
        assert Poly([1, 2, 0, 0]) == Poly([1, 2])
        assert Poly([0, 0]).degree == -1

    def test_getitem_out_of_range_is_zero(self):
        p = Poly([1, 2, 3])
        assert p[5] == 0 and p[-1] == 0

    def test_mul(self):
        assert Poly([1, 1]) * Poly([1, -1]) == Poly([1, 0, -1])
        assert Poly([1, 1]) * 0 == Poly([])

    def test_call(self):
        p = Poly([1, 0, -2])
        assert p(3) == 1 - 18

    def test_reversed(self):
        assert Poly([1, 2, 3]).reversed() == Poly([3, 2, 1])

    @given(st.lists(small_ints, max_size=6), st.lists(small_ints, max_size=6))
    def test_mul_matches_eval(self, a, b):
        p, q = Poly(a), Poly(b)
        assert (p * q)(7) == p(7) * q(7)


class TestRationalGF:
    def test_geometric_series(self):
        gf = RationalGF([1], [1])
        assert series_coeffs(gf, 5) == [1, 1, 1, 1, 1]

    def test_two_factor_partition_count(self):
        # partitions into parts 2 and 3
        gf = RationalGF([1], [2, 3])
        assert series_coeffs(gf, 10) == [1, 0, 1, 1, 1, 1, 2, 1, 2, 2]

    def test_fit_round_trip(self):
        num = [1, 0, -2, 5]
        den = [2, 3, 4]
        seq = series_coeffs(RationalGF(num, den), 40)
        assert fit_numerator(seq, den, 10) == Poly(num)

    def test_fit_rejects_non_polynomial(self):
        with pytest.raises(NonPolynomial):
            # 1/(1-t)^2 has numerator degree 0 over a single (1-t) factor
            seq = series_coeffs(RationalGF([1], [1, 1]), 30)
            fit_numerator(seq, [1], 5)

    def test_fit_needs_enough_terms(self):
        with pytest.raises(ValueError):
            fit_numerator([1, 2, 3], [2, 3], 5)

    @given(
        st.lists(small_ints, min_size=1, max_size=8),
        st.lists(st.sampled_from([1, 2, 3, 4, 6]), min_size=1, max_size=4),
    )
    def test_fit_inverts_expand(self, num, den):
        deg = len(num) - 1
        n = deg + sum(den) + 5
        seq = series_coeffs(RationalGF(num, den), n)
        assert fit_numerator(seq, den, deg) == Poly(num)

    def test_palindromic(self):
        assert is_palindromic(RationalGF([1, 2, 1], [2, 2]))
        assert not is_palindromic(RationalGF([1, 2], [2, 2]))
        assert not is_palindromic(RationalGF([], [2]))

    def test_palindromic_ell(self):
        gf = RationalGF([1, 0, 1], [4, 6])
        assert palindromic_ell(gf) == 10 - 2
