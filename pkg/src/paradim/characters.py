"""The seventeen Sp(2) characters chi_1 .. chi_17.

Each chi_i is the character of the irreducible representation with Young
parameters (f1, f2), evaluated at any group element whose principal
polynomial is phi_i(+-x).  Two independent evaluation routes are
provided:

* chi_closed -- the closed-form / periodic-bracket expressions in the
  weight coordinates (k, j) = (f2 + 3, f1 - f2);
* chi_series -- the Weyl character formula
  p_{f1}(p_{f2} + p_{f2-2}) - p_{f2-1}(p_{f1+1} + p_{f1-1})
  where 1/phi_i(x) = sum p_f x^f, computed by the exact integer
  recurrence in Z[sqrt(m)] coming from the degree-4 denominator.

They must agree everywhere; the test suite sweeps this.
"""
from dataclasses import dataclass

from .errors import BadIndex, BadYoung, IrrationalResidue
from .exactmath import Poly, QuadExt


@dataclass(frozen=True)
class WeightParams:
    """Weight (k, j) with the derived Young parameters."""

    k: int
    j: int

    def __post_init__(self):
        if self.k < 3 or self.j < 0 or self.j % 2:
            raise BadYoung(f"need k >= 3 and even j >= 0, got (k,j)=({self.k},{self.j})")

    @property
    def f1(self):
        return self.k + self.j - 3

    @property
    def f2(self):
        return self.k - 3


# phi_i as ascending coefficient lists (c0..c4) over Z[sqrt(m)]:
# each coefficient is (rational part, sqrt part); m is the radicand.
# All are monic reciprocal with constant term 1.
PHI_COEFFS = {
    1: ([(1, 0), (-4, 0), (6, 0), (-4, 0), (1, 0)], 1),   # (x-1)^4
    2: ([(1, 0), (0, 0), (-2, 0), (0, 0), (1, 0)], 1),    # (x-1)^2(x+1)^2
    3: ([(1, 0), (-2, 0), (2, 0), (-2, 0), (1, 0)], 1),   # (x-1)^2(x^2+1)
    4: ([(1, 0), (-1, 0), (0, 0), (-1, 0), (1, 0)], 1),   # (x-1)^2(x^2+x+1)
    5: ([(1, 0), (-3, 0), (4, 0), (-3, 0), (1, 0)], 1),   # (x-1)^2(x^2-x+1)
    6: ([(1, 0), (0, 0), (2, 0), (0, 0), (1, 0)], 1),     # (x^2+1)^2
    7: ([(1, 0), (2, 0), (3, 0), (2, 0), (1, 0)], 1),     # (x^2+x+1)^2
    8: ([(1, 0), (1, 0), (2, 0), (1, 0), (1, 0)], 1),     # (x^2+1)(x^2+x+1)
    9: ([(1, 0), (0, 0), (1, 0), (0, 0), (1, 0)], 1),     # (x^2+x+1)(x^2-x+1)
    10: ([(1, 0), (1, 0), (1, 0), (1, 0), (1, 0)], 1),    # x^4+x^3+x^2+x+1
    11: ([(1, 0), (0, 0), (0, 0), (0, 0), (1, 0)], 1),    # x^4+1
    12: ([(1, 0), (0, 0), (-1, 0), (0, 0), (1, 0)], 1),   # x^4-x^2+1
    13: ([(1, 0), (0, 1), (3, 0), (0, 1), (1, 0)], 5),    # x^4+sqrt5 x^3+3x^2+sqrt5 x+1
    14: ([(1, 0), (0, 2), (4, 0), (0, 2), (1, 0)], 2),    # (x^2+sqrt2 x+1)^2
    15: ([(1, 0), (0, 1), (1, 0), (0, 1), (1, 0)], 2),    # x^4+sqrt2 x^3+x^2+sqrt2 x+1
    16: ([(1, 0), (0, 1), (2, 0), (0, 1), (1, 0)], 2),    # (x^2+sqrt2 x+1)(x^2+1)
    17: ([(1, 0), (0, 1), (2, 0), (0, 1), (1, 0)], 3),    # (x^2+sqrt3 x+1)(x^2+1)
}


def phi_poly(i):
    """phi_i as a Poly over QuadExt (exact, ascending coefficients)."""
    if i not in PHI_COEFFS:
        raise BadIndex(f"character index {i} not in 1..17")
    coeffs, m = PHI_COEFFS[i]
    return Poly([QuadExt(a, b, m) for a, b in coeffs])


def _check_index(i):
    if i not in PHI_COEFFS:
        raise BadIndex(f"character index {i} not in 1..17")


def _check_young(f1, f2):
    if not (f1 >= f2 >= 0) or (f1 - f2) % 2:
        raise BadYoung(f"need f1 >= f2 >= 0 with f1 = f2 (mod 2), got ({f1},{f2})")


# ---------------------------------------------------------------------------
# Series route (Weyl character formula)
# ---------------------------------------------------------------------------

_pf_cache = {}


def _pf(i, upto, negate=False):
    """Coefficients p_0..p_upto of 1/phi_i(x) (or of 1/phi_i(-x)) as
    (rational, sqrt) integer pairs."""
    key = (i, negate)
    cache = _pf_cache.get(key)
    if cache is None:
        cache = [(1, 0)]
        _pf_cache[key] = cache
    coeffs, m = PHI_COEFFS[i]
    if negate:
        coeffs = [(a, b) if n % 2 == 0 else (-a, -b) for n, (a, b) in enumerate(coeffs)]
    c1, c2, c3, c4 = coeffs[1], coeffs[2], coeffs[3], coeffs[4]
    while len(cache) <= upto:
        f = len(cache)
        ra = rb = 0
        for (ca, cb), back in ((c1, 1), (c2, 2), (c3, 3), (c4, 4)):
            if f - back < 0:
                break
            pa, pb = cache[f - back]
            ra += ca * pa + m * cb * pb
            rb += ca * pb + cb * pa
        cache.append((-ra, -rb))
    return cache


def chi_series(i, f1, f2, negate=False):
    """Character value via the power-series route (independent oracle)."""
    _check_index(i)
    _check_young(f1, f2)
    p = _pf(i, f1 + 1, negate)
    _, m = PHI_COEFFS[i]

    def at(f):
        return p[f] if f >= 0 else (0, 0)

    def add(u, v):
        return (u[0] + v[0], u[1] + v[1])

    def mul(u, v):
        return (u[0] * v[0] + m * u[1] * v[1], u[0] * v[1] + u[1] * v[0])

    val = mul(at(f1), add(at(f2), at(f2 - 2)))
    neg = mul(at(f2 - 1), add(at(f1 + 1), at(f1 - 1)))
    ra, rb = val[0] - neg[0], val[1] - neg[1]
    if rb != 0:
        raise IrrationalResidue(f"chi_{i}({f1},{f2}): sqrt({m}) part {rb} != 0")
    return ra


# ---------------------------------------------------------------------------
# Closed forms in (k, j)
# ---------------------------------------------------------------------------

def _br(vals, b):
    """[a_0, ..., a_{m-1}; m]_b -- the entry a_i with b = i (mod m)."""
    return vals[b % len(vals)]


def _exact_div(num, den):
    q, r = divmod(num, den)
    if r:
        raise IrrationalResidue(f"non-exact division {num}/{den}")
    return q


def _sgn(n):
    return -1 if n % 2 else 1


def chi_closed(i, w):
    """chi_i at weight w = WeightParams(k, j) (or a (k, j) pair)."""
    _check_index(i)
    if not isinstance(w, WeightParams):
        w = WeightParams(*w)
    k, j = w.k, w.j

    if i == 1:
        return _exact_div((j + 1) * (k - 2) * (j + k - 1) * (j + 2 * k - 3), 6)
    if i == 2:
        return _sgn(k - 3) * _exact_div((k - 2) * (k + j - 1), 2)
    if i == 3:
        s = _sgn(j // 2)
        return _exact_div(
            _br([s * (k - 2), -(j + k - 1), -s * (k - 2), j + k - 1], k), 2
        )
    if i == 4:
        return _exact_div(
            (j + k - 1) * _br([1, -1, 0], k) + (k - 2) * _br([1, 0, -1], j + k), 3
        )
    if i == 5:
        return (j + k - 1) * _br([-1, -1, 0, 1, 1, 0], k) + (k - 2) * _br(
            [1, 0, -1, -1, 0, 1], j + k
        )
    if i == 6:
        return _sgn((2 * k + j - 6) // 2) * _exact_div(_br([-(k - 2), j + k - 1], k), 2)
    if i == 7:
        rows = {
            0: [2 * k + j - 3, 2 * k + 2 * j - 2, 2 * k - 4],
            1: [-(2 * k + 2 * j - 2), -(2 * k + j - 3), -(2 * k - 4)],
            2: [j + 1, -(j + 1), 0],
        }
        return _exact_div(_br(rows[j % 3], k), 3)
    if i == 8:
        rows = {
            0: [-1, 0, 0, 1, 1, 1, 1, 0, 0, -1, -1, -1],
            2: [1, -1, 0, -1, -1, 0, -1, 1, 0, 1, 1, 0],
            4: [-1, 1, 0, 0, 1, -1, 1, -1, 0, 0, -1, 1],
            6: [1, 0, 0, 1, -1, 1, -1, 0, 0, -1, 1, -1],
            8: [-1, -1, 0, -1, 1, 0, 1, 1, 0, 1, -1, 0],
            10: [1, 1, 0, 0, -1, -1, -1, -1, 0, 0, 1, 1],
        }
        return _br(rows[j % 12], k)
    if i == 9:
        rows = {
            0: [-1, 0, 0, 1, 0, 0],
            2: [1, -1, 0, -1, 1, 0],
            4: [0, 1, 0, 0, -1, 0],
        }
        return _br(rows[j % 6], k)
    if i == 10:
        rows = {
            0: [-1, 0, 0, 1, 0],
            2: [1, -1, 0, 0, 0],
            4: None,
            6: [0, 0, 0, -1, 1],
            8: [0, 1, 0, 0, -1],
        }
        row = rows[j % 10]
        return 0 if row is None else _br(row, k)
    if i == 11:
        rows = {
            0: [-1, 0, 0, 1],
            2: [1, -1, 0, 0],
            4: [1, 0, 0, -1],
            6: [-1, 1, 0, 0],
        }
        return _br(rows[j % 8], k)
    if i == 12:
        rows = {
            0: [-1, 0, 0, 1, -2, 2],
            2: [-1, 1, 0],
            4: [2, -1, 0, 0, 1, -2],
        }
        return _sgn(j // 2) * _br(rows[j % 6], k)
    if i == 13:
        rows = {
            0: [-1, 0, 0, 1, 2, 1, 0, 0, -1, -2],
            2: [1, -1, 0, 2, 0, -1, 1, 0, -2, 0],
            4: [-2, -2, 0, -2, -2, 2, 2, 0, 2, 2],
            6: [0, 2, 0, -1, 1, 0, -2, 0, 1, -1],
            8: [2, 1, 0, 0, -1, -2, -1, 0, 0, 1],
        }
        return _br(rows[j % 10], k)
    if i == 14:
        if j % 4 == 0:
            return _sgn(j // 4) * _br([j + k - 1, j + k - 1, k - 2, k - 2], k)
        return _sgn((j - 2) // 4) * _br([j + k - 1, k - 2, k - 2, j + k - 1], k)
    if i == 15:
        rows = {
            0: [-1, 0, 0, 1, 0, -2, 1, 2, -2, -1, 2, 0],
            2: [1, -1, 0],
            4: [0, -1, 0, 2, -1, -2, 2, 1, -2, 0, 1, 0],
            6: [1, -2, 0, 1, 0, 0, -1, 0, 2, -1, -2, 2],
            8: [1, -1, 0],
            10: [0, -1, 0, 0, 1, 0, -2, 1, 2, -2, -1, 2],
        }
        return _sgn(j // 12) * _br(rows[j % 12], k)
    if i == 16:
        rows = {
            0: [-1, 0, 0, 1, 1, 0, 0, -1],
            2: [1, -1, 0, 0, -1, 1, 0, 0],
            4: [-1, 0, 0, -1, 1, 0, 0, 1],
            6: [1, 1, 0, 0, -1, -1, 0, 0],
        }
        return _br(rows[j % 8], k)
    # i == 17
    rows = {
        0: [-1, 0, 0, 1, 1, -1],
        2: [1, -1, 0],
        4: [-1, -1, 0, 0, 1, 1],
        6: [1, 0, 0, -1, -1, 1],
        8: [-1, 1, 0],
        10: [1, 1, 0, 0, -1, -1],
    }
    return _br(rows[j % 12], k)


def chi(i, w):
    """Dispatcher: the production route is the closed form."""
    return chi_closed(i, w)


def chi_young(i, f1, f2):
    """chi_i in Young coordinates (used by the trace formulas)."""
    _check_young(f1, f2)
    return chi_closed(i, WeightParams(f2 + 3, f1 - f2))


def chi_bracket_young(i, f1, f2):
    """Alternative closed forms indexed directly by (f1, f2), available
    for i in {2, 6, 9, 11, 13}; kept as an independent cross-check."""
    _check_young(f1, f2)
    d = f1 - f2
    if i == 2:
        return _sgn(f1) * _exact_div((f1 + 2) * (f2 + 1), 2)
    if i == 6:
        body = f1 + 2 if f2 % 2 == 0 else -(f2 + 1)
        return _sgn((f1 + f2) // 2) * _exact_div(body, 2)
    if i == 9:
        rows = {
            0: [1, 0, 0, -1, 0, 0],
            2: [-1, 1, 0, 1, -1, 0],
            4: [0, -1, 0, 0, 1, 0],
        }
        return _br(rows[d % 6], f2)
    if i == 11:
        if d % 4 == 0:
            return _sgn(d // 4) * _br([1, -1, 0, 0], f2)
        return _sgn((d - 2) // 4) * _br([0, 1, -1, 0], f2)
    if i == 13:
        rows = {
            0: [1, 2, 1, 0, 0, -1, -2, -1, 0, 0],
            2: [2, 0, -1, 1, 0, -2, 0, 1, -1, 0],
            4: [-2, -2, 2, 2, 0, 2, 2, -2, -2, 0],
            6: [-1, 1, 0, -2, 0, 1, -1, 0, 2, 0],
            8: [0, -1, -2, -1, 0, 0, 1, 2, 1, 0],
        }
        return _br(rows[d % 10], f2)
    raise BadIndex(f"no (f1,f2)-indexed bracket form for chi_{i}")
