from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from paradim.arith import (
    a_p,
    bernoulli_b2_chi,
    class_number,
    fundamental_discriminant,
    is_prime,
    primes_up_to,
    split_symbol,
    squarefree_part,
)
from paradim.errors import DSquare, NotSquarefree, UnsupportedPrime


def test_squarefree_part():
    assert squarefree_part(12) == 3
    assert squarefree_part(-18) == -2
    assert squarefree_part(1) == 1
    assert squarefree_part(30) == 30


@given(st.integers(min_value=1, max_value=3000))
def test_squarefree_part_divides(n):
    d0 = squarefree_part(n)
    assert n % d0 == 0
    q = n // d0
    assert round(q ** 0.5) ** 2 == q


def test_fundamental_discriminant():
    assert fundamental_discriminant(5) == 5
    assert fundamental_discriminant(2) == 8
    assert fundamental_discriminant(-1) == -4
    assert fundamental_discriminant(-3) == -3
    assert fundamental_discriminant(12) == 12  # sqrt(12) = 2 sqrt(3)
    with pytest.raises(DSquare):
        fundamental_discriminant(9)


def test_split_symbol():
    # -1 is a square mod p iff p = 1 (mod 4)
    assert split_symbol(-1, 5) == 1
    assert split_symbol(-1, 7) == -1
    assert split_symbol(-1, 2) == 0
    assert split_symbol(2, 7) == 1
    assert split_symbol(2, 5) == -1


def test_class_number_known_values():
    known = {1: 1, 2: 1, 3: 1, 5: 2, 6: 2, 7: 1, 11: 1, 23: 3,
             47: 5, 71: 7, 89: 12, 163: 1}
    for d, h in known.items():
        assert class_number(d) == h, d


def test_class_number_rejects_non_squarefree():
    with pytest.raises(NotSquarefree):
        class_number(12)
    with pytest.raises(NotSquarefree):
        class_number(0)


def test_bernoulli_b2_chi():
    # directly against the defining sum over a period
    for p in (5, 7, 13, 23, 29):
        D0 = fundamental_discriminant(p)
        f = p if p % 4 == 1 else 4 * p
        from paradim.kernels import kronecker
        expected = sum(kronecker(D0, a) * Fraction(a * a, f) for a in range(1, f + 1))
        assert bernoulli_b2_chi(p) == expected
    with pytest.raises(UnsupportedPrime):
        bernoulli_b2_chi(2)


def test_a_p():
    assert a_p(5) == 1 and a_p(13) == 1
    assert a_p(7) == 2 and a_p(23) == 2
    assert a_p(3) == 4 and a_p(11) == 4
    with pytest.raises(UnsupportedPrime):
        a_p(2)


def test_primes():
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_up_to(1) == []
    assert [n for n in range(60) if is_prime(n)] == primes_up_to(59)
    assert len(primes_up_to(607)) == 111
