"""Dimensions of elliptic modular forms: level 1, and newforms of prime
level Gamma_0(p) split by Atkin-Lehner sign."""
from enum import Enum
from fractions import Fraction

from .arith import a_p, class_number, split_symbol
from .errors import NonIntegral, OddWeight, ParityFailure


class ALSign(Enum):
    plus = "plus"
    minus = "minus"


def _br(vals, b):
    return vals[b % len(vals)]


def _to_int(x, what):
    if x.denominator != 1:
        raise NonIntegral(f"{what} = {x} is not an integer")
    return int(x)


def dim_cusp_level1(k):
    """dim S_k(SL_2(Z)) for k >= 0."""
    if k % 2 or k == 0:
        return 0
    val = (
        Fraction(k - 1, 12)
        + Fraction((-1) ** (k // 2), 4)
        + Fraction(_br([1, 0, -1], k), 3)
        - Fraction(1, 2)
        + (1 if k == 2 else 0)
    )
    return _to_int(val, f"dim S_{k}(SL2(Z))")


def dim_modular_level1(k):
    """dim M_k(SL_2(Z)), Eisenstein series included."""
    if k % 2 or k == 2:
        return 0
    if k == 0:
        return 1
    return dim_cusp_level1(k) + 1


def dim_new_gamma0(p, k):
    """dim of the weight-k newspace of Gamma_0(p), trivial character."""
    if k % 2:
        raise OddWeight(f"k = {k} must be even")
    if k < 2:
        return 0
    val = (
        Fraction((p - 1) * (k - 1), 12)
        + Fraction((-1) ** (k // 2 + 1), 4) * (1 - split_symbol(-1, p))
        + Fraction(_br([-1, 0, 1], k), 3) * (1 - split_symbol(-3, p))
        - (1 if k == 2 else 0)
    )
    return _to_int(val, f"dim S_{k}^new(Gamma0({p}))")


def _new_gamma0_diff(p, k):
    """(plus) - (minus) dimension of the weight-k newspace of Gamma_0(p)."""
    d2 = 1 if k == 2 else 0
    if p == 2:
        return ((-1) ** (k // 2) - (-1) ** (((k - 4) * (k - 2) // 8) % 2)) // 2 + d2
    if p == 3:
        return d2 + {0: 1, 2: -1, 4: 0, 6: -1, 8: 1, 10: 0}[k % 12]
    return (-1) ** (k // 2) * a_p(p) * class_number(p) // 2 + d2


def dim_new_gamma0_signed(p, k, sign):
    """Signed newspace dimension: (total +- difference) / 2."""
    if k % 2:
        raise OddWeight(f"k = {k} must be even")
    if k < 2:
        return 0
    total = dim_new_gamma0(p, k)
    diff = _new_gamma0_diff(p, k)
    if (total + diff) % 2:
        raise ParityFailure(
            f"Gamma0({p}) weight {k}: total {total} and difference {diff} have opposite parity"
        )
    if sign is ALSign.plus or sign == "plus":
        return (total + diff) // 2
    return (total - diff) // 2
