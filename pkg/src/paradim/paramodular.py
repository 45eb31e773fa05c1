"""Top-level dimensions of paramodular cusp forms of prime level with
Atkin-Lehner sign, Hilbert series of the graded rings, the sign-bias
check, and the weight-3 vanishing search."""
from dataclasses import dataclass
from functools import lru_cache

from .arith import primes_up_to
from .compact import class_and_type, dim_M_signed
from .data import jacobi_weight2, load_json
from .elliptic import (
    ALSign,
    dim_cusp_level1,
    dim_modular_level1,
    dim_new_gamma0_signed,
)
from .errors import (
    BiasViolation,
    MissingData,
    MissingJacobiData,
    NegativeDim,
    NonPolynomial,
    UnsupportedJ,
)
from .exactmath import RationalGF, fit_numerator
from .siegel1 import dim_cusp_sp4


@dataclass(frozen=True)
class ParamodularDims:
    p: int
    k: int
    j: int
    plus: int
    minus: int

    @property
    def total(self):
        return self.plus + self.minus


def dim_paramodular_signed(p, k, j=0):
    """Signed dimensions of weight det^k Sym(j) paramodular cusp forms of
    prime level p, k >= 3.  Odd j gives the zero space."""
    if j % 2:
        return ParamodularDims(p, k, j, 0, 0)
    sp = dim_cusp_sp4(k, j)
    m = dim_M_signed(p, j + k - 3, k - 3)
    grit = dim_cusp_level1(2 * k + j - 2)
    s_plus = dim_new_gamma0_signed(p, j + 2, ALSign.plus)
    s_minus = dim_new_gamma0_signed(p, j + 2, ALSign.minus)
    dj0 = 1 if j == 0 else 0
    plus = sp + m.minus - s_plus * grit
    minus = (
        sp
        - dj0 * dim_cusp_level1(2 * k - 2)
        - dj0 * (1 if k == 3 else 0)
        + m.plus
        - s_minus * grit
    )
    if plus < 0 or minus < 0:
        raise NegativeDim(f"p={p}, (k,j)=({k},{j}): got ({plus},{minus})")
    return ParamodularDims(p, k, j, plus, minus)


def dim_weight3(p):
    """(plus, minus) in weight 3 via the class and type numbers."""
    H, T = class_and_type(p)
    return H - T, T - 1


def dim_A_signed(p, k):
    """Signed dimensions of the full (cusp + Eisenstein) space, j = 0.

    Weight 0, 1, 2 are handled by their known structure; the weight-2
    cusp space is the Gritsenko lift of weight-2 index-p Jacobi forms
    (valid for p < 277, embedded table covers p <= 97), all of sign +1.
    """
    if k == 0:
        return 1, 0
    if k == 1:
        return 0, 0
    if k == 2:
        table = jacobi_weight2()
        if p not in table:
            raise MissingJacobiData(f"no embedded weight-2 Jacobi dimension for p = {p}")
        return table[p], 0
    d = dim_paramodular_signed(p, k)
    return d.plus + dim_modular_level1(k), d.minus + dim_cusp_level1(k)


def _space_sequence(p, space, nmax, j=0):
    """Dimension sequence (index 0..nmax) of a graded space.

    S+/S-/A+/A-/A are graded by the weight k; M+/M-/M by the Young
    parameter f of the weight (f + j, f).  A spaces exist for j = 0 only.
    """
    if space in ("M", "M+", "M-"):
        out = []
        for f in range(nmax + 1):
            m = dim_M_signed(p, f + j, f)
            out.append({"M": m.total, "M+": m.plus, "M-": m.minus}[space])
        return out
    if space in ("A", "A+", "A-") and j != 0:
        raise UnsupportedJ(f"space {space} is only graded at j = 0, got j = {j}")
    out = []
    for k in range(nmax + 1):
        if space in ("A", "A+", "A-"):
            ap, am = dim_A_signed(p, k)
            out.append({"A": ap + am, "A+": ap, "A-": am}[space])
        else:
            if k < 2 or (k == 2 and j != 0):
                out.append(0)
            elif k == 2:
                ap, _ = dim_A_signed(p, 2)
                out.append(ap if space == "S+" else 0)
            else:
                d = dim_paramodular_signed(p, k, j)
                out.append(d.plus if space == "S+" else d.minus)
    return out


@lru_cache(maxsize=None)
def _printed_registry():
    """(p, space, j) -> record of the embedded Hilbert-series corpus."""
    return {
        (rec["p"], rec["space"], rec.get("j", 0)): rec
        for rec in load_json("hilbert_series.json")
    }


def printed_series(p, space, j=0):
    """The embedded presentation of a graded dimension series, if any."""
    rec = _printed_registry().get((p, space, j))
    if rec is None:
        raise MissingData(f"no embedded series for p={p}, space={space}, j={j}")
    coeffs = [0] * (max(d for d, _ in rec["num"]) + 1)
    for d, c in rec["num"]:
        coeffs[d] += c
    return RationalGF(coeffs, rec["den"])

# For primes without a printed presentation, try these in order; an even
# factor count keeps the palindromicity test well defined (the functional
# equation F(1/t) = (-1)^m t^l F(t) has the same sign for every 4-factor
# presentation).  The last entry always succeeds: every weight graded
# dimension here is a degree-3 quasi-polynomial whose period divides 120.
FALLBACK_DENOMINATORS = [
    [4, 6, 10, 12],
    [4, 4, 6, 12],
    [4, 5, 6, 12],
    [4, 6, 6, 12],
    [4, 6, 8, 12],
    [120, 120, 120, 120],
]


@dataclass(frozen=True)
class HilbertSeries:
    p: int
    space: str
    gf: RationalGF


def hilbert_series(p, space, j=0, kmax=None):
    """Fit the dimension sequence of a graded space to a rational
    function with a factored denominator; for series with an embedded
    presentation its denominator is used and its numerator reproduced."""
    rec = _printed_registry().get((p, space, j))
    candidates = [rec["den"]] if rec is not None else FALLBACK_DENOMINATORS
    last_error = None
    for denoms in candidates:
        margin = sum(denoms)
        n = kmax if kmax is not None else 40 + 2 * margin
        if n <= 2 * margin:
            n = 2 * margin + 40
        seq = _space_sequence(p, space, n, j)
        try:
            num = fit_numerator(seq, denoms, n - margin - 1)
        except NonPolynomial as exc:
            last_error = exc
            continue
        return HilbertSeries(p, space, RationalGF(num, list(denoms)))
    raise last_error


def bias(p, k):
    """(-1)^k (dim plus - dim minus) in weight k, scalar valued."""
    d = dim_paramodular_signed(p, k)
    return (-1) ** k * (d.plus - d.minus)


def search_weight3_zero(pmax):
    """All primes p <= pmax with vanishing weight-3 plus space."""
    return [p for p in primes_up_to(pmax) if dim_weight3(p)[0] == 0]


def check_bias_region(pmax, kmax):
    """Assert bias >= 0 on the rectangle and return the zero pairs."""
    zeros = []
    for p in primes_up_to(pmax):
        for k in range(3, kmax + 1):
            b = bias(p, k)
            if b < 0:
                raise BiasViolation(p, k, b)
            if b == 0:
                zeros.append((p, k))
    return zeros
