"""Independent verification of the compact trace values at p = 2, 3.

The trace of the involution on the diagonal-weight algebraic modular
forms is a finite sum over the coset pi*Gamma_1 inside a 2x2 matrix
group over a maximal order of the definite quaternion algebra ramified
at {p, infinity}.  For p = 2 and p = 3 that coset is small enough
(1920 resp. 720 elements) to enumerate outright: we build every element
from its parametrized families, check the similitude condition, tally
principal polynomials, and recompose the trace from character values.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .characters import chi_young
from .errors import FamilySizeMismatch, NonIntegral, NotSimilitude


class Quat:
    """Quaternion w + x e1 + y e2 + z e3 with e1^2 = -a, e2^2 = -b,
    e3 = e1 e2.  Coefficients are exact rationals."""

    __slots__ = ("w", "x", "y", "z", "a", "b")

    def __init__(self, w, x, y, z, a, b):
        self.w = Fraction(w)
        self.x = Fraction(x)
        self.y = Fraction(y)
        self.z = Fraction(z)
        self.a = a
        self.b = b

    def _like(self, w, x, y, z):
        return Quat(w, x, y, z, self.a, self.b)

    def __add__(self, other):
        return self._like(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return self._like(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self):
        return self._like(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._like(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        a, b = self.a, self.b
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = other.w, other.x, other.y, other.z
        return self._like(
            w1 * w2 - a * x1 * x2 - b * y1 * y2 - a * b * z1 * z2,
            w1 * x2 + x1 * w2 + b * (y1 * z2 - z1 * y2),
            w1 * y2 + y1 * w2 + a * (z1 * x2 - x1 * z2),
            w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def conjugate(self):
        return self._like(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        a, b = self.a, self.b
        return (self.w ** 2 + a * self.x ** 2 + b * self.y ** 2
                + a * b * self.z ** 2)

    def trace(self):
        return 2 * self.w

    def __eq__(self, other):
        return (self.w, self.x, self.y, self.z, self.a, self.b) == \
               (other.w, other.x, other.y, other.z, other.a, other.b)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z, self.a, self.b))

    def __repr__(self):
        return f"Quat({self.w}, {self.x}, {self.y}, {self.z}; a={self.a}, b={self.b})"


class Order:
    """Z-lattice order given by a basis of four quaternions."""

    def __init__(self, basis):
        self.basis = basis
        # columns are the basis coordinates in (1, e1, e2, e3)
        m = [[Fraction(getattr(q, c)) for q in basis] for c in "wxyz"]
        self._inv = _invert4(m)

    def coords(self, q):
        v = (q.w, q.x, q.y, q.z)
        return tuple(sum(row[i] * v[i] for i in range(4)) for row in self._inv)

    def contains(self, q):
        return all(c.denominator == 1 for c in self.coords(q))

    def from_coords(self, c):
        out = self.basis[0] * c[0]
        for i in range(1, 4):
            out = out + self.basis[i] * c[i]
        return out

    def elements_of_norm(self, n, box=2):
        found = []
        for c in product(range(-box, box + 1), repeat=4):
            q = self.from_coords(c)
            if q.norm() == n:
                found.append(q)
        return found

    def units(self):
        return self.elements_of_norm(1)


def _invert4(m):
    """Exact inverse of a 4x4 Fraction matrix by Gauss-Jordan."""
    n = 4
    aug = [list(m[i]) + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [vr - f * vc for vr, vc in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class QuatMat2:
    """2x2 quaternionic matrix (a b; c d)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    def __mul__(self, other):
        return QuatMat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def similitude(self):
        """The scalar n with g g* = n, where g* is the quaternionic
        conjugate transpose; raises NotSimilitude if there is none."""
        off = self.a * self.c.conjugate() + self.b * self.d.conjugate()
        if off != off._like(0, 0, 0, 0):
            raise NotSimilitude("rows are not orthogonal")
        n1 = self.a.norm() + self.b.norm()
        n2 = self.c.norm() + self.d.norm()
        if n1 != n2:
            raise NotSimilitude("rows have different norms")
        return n1

    def trace(self):
        return self.a.trace() + self.d.trace()


def principal_poly(g):
    """Monic degree-4 integer polynomial of a similitude matrix, as an
    ascending coefficient tuple.

    Computed as x^4 - T x^3 + (T^2 - T2)/2 x^2 - T n x + n^2 with
    T = tr(g), T2 = tr(g^2), n the similitude, and cross-checked against
    the entrywise form with middle coefficient
    tr(a) tr(d) - N(b + c-bar) + 2n.
    """
    n = g.similitude()
    t = g.trace()
    t2 = (g * g).trace()
    c2 = (t * t - t2) / 2
    c2_alt = (g.a.trace() * g.d.trace()
              - (g.b + g.c.conjugate()).norm() + 2 * n)
    if c2 != c2_alt:
        raise NotSimilitude(f"inconsistent middle coefficient: {c2} vs {c2_alt}")
    coeffs = (n * n, -t * n, c2, -t, Fraction(1))
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise NonIntegral(f"non-integral principal coefficient {c}")
        out.append(c.numerator)
    return tuple(out)


def _p2_families():
    a, b = 1, 1
    one = Quat(1, 0, 0, 0, a, b)
    qi = Quat(0, 1, 0, 0, a, b)
    qj = Quat(0, 0, 1, 0, a, b)
    qk = Quat(0, 0, 0, 1, a, b)
    zero = Quat(0, 0, 0, 0, a, b)
    order = Order([one, qi, qj, (one + qi + qj + qk) * Fraction(1, 2)])
    units = order.units()
    if len(units) != 24:
        raise FamilySizeMismatch(f"expected 24 units at p=2, got {len(units)}")
    r = qi - qk
    a0s = [one, -one, qi, -qi, qj, -qj, qk, -qk]
    xs = [-qi, qk] + [
        (one * s1 - qi + qj * s2 + qk) * Fraction(1, 2)
        for s1 in (1, -1) for s2 in (1, -1)
    ]
    # elements below are already multiplied through by the uniformizer r
    fams = [[], [], [], [], []]
    for u in units:
        for a0 in a0s:
            ua0 = u * a0
            fams[0].append(QuatMat2(u, -ua0, u, ua0))
            fams[1].append(QuatMat2(u, ua0, -u, ua0))
            fams[2].append(QuatMat2(r * u, zero, zero, r * ua0))
            fams[3].append(QuatMat2(zero, r * ua0, r * u, zero))
            for x in xs:
                rx = r + x
                fams[4].append(QuatMat2(rx * u, x * ua0, x * u, rx * ua0))
    _check_sizes(2, fams, (192, 192, 192, 192, 1152))
    return fams


def _p3_families():
    a, b = 3, 1
    one = Quat(1, 0, 0, 0, a, b)
    alpha = Quat(0, 1, 0, 0, a, b)
    beta = Quat(0, 0, 1, 0, a, b)
    zero = Quat(0, 0, 0, 0, a, b)
    half = Fraction(1, 2)
    order = Order([one, (one + alpha) * half, beta,
                   ((one + alpha) * beta) * half])
    units = order.units()
    if len(units) != 12:
        raise FamilySizeMismatch(f"expected 12 units at p=3, got {len(units)}")
    norm2 = order.elements_of_norm(2)
    norm3 = order.elements_of_norm(3)

    # basis matrix of the stabilized lattice (its Gram has off-diagonal
    # (1+beta)alpha) is g = (1, 1+beta; 0, alpha); the reference coset
    # element is diag(beta alpha, alpha)
    kv = alpha * Fraction(-1, 3)         # alpha^{-1}
    s = one + beta
    t = -(s * kv)
    k1 = (alpha * beta) * Fraction(1, 3)  # (beta alpha)^{-1}

    def local3(q):
        # q is integral at 3 iff its basis coordinates have denominator
        # prime to 3 (halves are fine)
        return all(c.denominator % 3 != 0 for c in order.coords(q))

    def in_coset(delta):
        # delta belongs to the coset iff u = delta gamma0^{-1} is a unit
        # of the lattice at 3, i.e. g u g^{-1} and g u* g^{-1} are both
        # integral there; the checks are staged to fail fast
        u11 = delta.a * k1
        u21 = delta.c * k1
        x11 = u11 + s * u21
        if not local3(x11):
            return False
        y21 = alpha * u21
        if not local3(y21):
            return False
        u12 = delta.b * kv
        u22 = delta.d * kv
        x12 = u12 + s * u22
        if not local3(x11 * t + x12 * kv):
            return False
        y22 = alpha * u22
        if not local3(y21 * t + y22 * kv):
            return False
        c11, c12 = u11.conjugate(), u12.conjugate()
        c21, c22 = u21.conjugate(), u22.conjugate()
        p11 = c11 + s * c12
        if not local3(p11):
            return False
        p21 = alpha * c12
        if not local3(p21):
            return False
        p12 = c21 + s * c22
        if not local3(p11 * t + p12 * kv):
            return False
        p22 = alpha * c22
        return local3(p21 * t + p22 * kv)

    # the four shapes exhaust the integral matrices with delta delta* = 3:
    # row norms split as (3,0)/(0,3), (0,3)/(3,0), (1,2)/(2,1), (2,1)/(1,2)
    fams = [[], [], [], []]
    for A in norm3:
        for D in norm3:
            m = QuatMat2(A, zero, zero, D)
            if in_coset(m):
                fams[0].append(m)
            m = QuatMat2(zero, A, D, zero)
            if in_coset(m):
                fams[1].append(m)
    for c2 in norm2:
        c2bar = c2.conjugate()
        for e1 in units:
            for e2 in units:
                y = -(e1 * c2bar * e2)  # forced by row orthogonality
                m = QuatMat2(e1, y, c2, e2)
                if in_coset(m):
                    fams[2].append(m)
                m = QuatMat2(c2, e2, e1, y)
                if in_coset(m):
                    fams[3].append(m)
    _check_sizes(3, fams, (36, 36, 324, 324))
    return fams


def _check_sizes(p, fams, expected):
    sizes = tuple(len(f) for f in fams)
    if sizes != expected:
        raise FamilySizeMismatch(f"p={p}: family sizes {sizes}, expected {expected}")


@lru_cache(maxsize=None)
def enumerate_pi_gamma(p):
    """Per-family lists of the similitude-p coset elements, p in {2, 3}."""
    if p == 2:
        fams = _p2_families()
    elif p == 3:
        fams = _p3_families()
    else:
        raise ValueError(f"enumeration only implemented for p = 2, 3, got {p}")
    for fam in fams:
        for g in fam:
            if g.similitude() != p:
                raise NotSimilitude(f"p={p}: enumerated element has similitude != {p}")
    return tuple(tuple(f) for f in fams)


@lru_cache(maxsize=None)
def _family_tallies(p):
    return tuple(tuple(sorted(_tally(fam).items()))
                 for fam in enumerate_pi_gamma(p))


def family_tallies(p):
    """List (one dict per family) of principal-polynomial tallies."""
    return [dict(t) for t in _family_tallies(p)]


def principal_tallies(p):
    """Aggregate tally of principal polynomials over the whole coset."""
    total = {}
    for t in _family_tallies(p):
        for key, cnt in t:
            total[key] = total.get(key, 0) + cnt
    return total


def _tally(fam):
    out = {}
    for g in fam:
        key = principal_poly(g)
        out[key] = out.get(key, 0) + 1
    return out


# principal polynomial (ascending coefficients) -> conjugacy-class index
CLASS_OF_POLY = {
    2: {
        (4, 0, -4, 0, 1): 2,    # (x^2-2)^2
        (4, 0, 4, 0, 1): 6,     # (x^2+2)^2
        (4, 0, 2, 0, 1): 9,     # x^4+2x^2+4
        (4, 0, 0, 0, 1): 11,    # x^4+4
        (4, 8, 8, 4, 1): 14,    # (x^2+2x+2)^2
        (4, -8, 8, -4, 1): 14,
        (4, 4, 2, 2, 1): 15,    # x^4+2x^3+2x^2+4x+4
        (4, -4, 2, -2, 1): 15,
        (4, 4, 4, 2, 1): 16,    # (x^2+2x+2)(x^2+2)
        (4, -4, 4, -2, 1): 16,
    },
    3: {
        (9, 0, -6, 0, 1): 2,    # (x^2-3)^2
        (9, 0, 6, 0, 1): 6,     # (x^2+3)^2
        (9, 0, 3, 0, 1): 9,     # x^4+3x^2+9
        (9, 0, 0, 0, 1): 11,    # x^4+9
        (9, 9, 6, 3, 1): 17,    # (x^2+3x+3)(x^2+3)
        (9, -9, 6, -3, 1): 17,
    },
}

COSET_SIZE = {2: 1920, 3: 720}


def verify_trace_p23(p, f1, f2):
    """Trace of the involution at diagonal-adjacent Young weight (f1, f2),
    rebuilt from the enumerated coset; an integer."""
    tallies = principal_tallies(p)
    size = COSET_SIZE[p]
    if sum(tallies.values()) != size:
        raise FamilySizeMismatch(f"p={p}: coset size {sum(tallies.values())} != {size}")
    tr = Fraction(0)
    for key, cnt in tallies.items():
        tr += Fraction(cnt, size) * chi_young(CLASS_OF_POLY[p][key], f1, f2)
    if tr.denominator != 1:
        raise NonIntegral(f"non-integral trace {tr} at p={p}, ({f1},{f2})")
    return tr.numerator


def feasible_ab(p):
    """Integer pairs (a, b) compatible with a similitude-p element whose
    rescaled principal polynomial x^4 - a x^3 + b x^2 - a p x + p^2 has
    all roots of absolute value sqrt(p)."""
    out = []
    amax = 0
    while (amax + 1) ** 2 * p <= 16:
        amax += 1
    for a in range(-amax, amax + 1):
        blo = -(-(p * a * a - 4) // 2)  # ceil((p a^2 - 4)/2)
        bhi = (a * a * p + 8) // 4      # floor(a^2 p / 4 + 2)
        for b in range(blo, bhi + 1):
            if 4 * p * a * a <= (b + 2) ** 2:
                out.append((a, b))
    return sorted(out)
