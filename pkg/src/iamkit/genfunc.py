"""Matrix statistics and the (q, t) generating-function identity.

For a maximal I_k-avoiding matrix M:

* v(M)   sums, over the zeros, the number of ones further down the diagonal;
* v_d(M) is the same sum restricted to zeros on the main diagonal;
* d_s(M) reads, off path s of the matrix (bottom path first, transposing
  first when m > n), the number of zeros up-diagonal of its main-diagonal
  point.

The weighted sum of q^v t^(v_d) times a Pochhammer correction over all
maximal matrices equals a closed triple product; both sides are evaluated
exactly at rational points.  Setting t = 1 collapses the weight to q^v and
the identity becomes a polynomial one, handled by QPoly below.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import symmetry
from .bijection import enumerate_pp, matrix_to_paths
from .core import check_mnk, diag_ones_below, diag_zeros_above
from .oracle import enumerate_maximal_iams

DEFAULT_SEED = 20260814

# exact scalar arithmetic everywhere; never floats
ExactScalar = Fraction


# ---------------------------------------------------------------------------
# statistics


def stat_v_cell(M, i, j):
    """Ones strictly down-diagonal of the zero at (i, j)."""
    if M.entry(i, j) != 0:
        raise ValueError("(%d, %d) is not a zero" % (i, j))
    return diag_ones_below(M, i, j)


def stat_v(M):
    return sum(diag_ones_below(M, i, j) for (i, j) in M.zero_cells())


def stat_vd(M):
    return sum(diag_ones_below(M, i, i)
               for i in range(1, min(M.m, M.n) + 1) if M.entry(i, i) == 0)


def stat_w_cell(M, i, j):
    """Zeros strictly up-diagonal of the one at (i, j)."""
    if M.entry(i, j) != 1:
        raise ValueError("(%d, %d) is not a one" % (i, j))
    return diag_zeros_above(M, i, j)


def stat_d(M, k):
    """The tuple (d_1, ..., d_{k-1}) of up-diagonal zero counts at the
    main-diagonal points of the paths, bottom path first.  Matrices with
    m > n are transposed first so the diagonal crosses every path."""
    if M.m > M.n:
        M = symmetry.apply(M, "transpose")
    m = M.m
    fam = matrix_to_paths(M, k)
    out = []
    for path in fam.paths:
        pts = [p for p in path if p[0] + p[1] == m - 1]
        assert len(pts) == 1, "path misses the diagonal level"
        x, y = pts[0]
        i, j = m - y, x + 1
        assert i == j, "diagonal-level point is off the main diagonal"
        out.append(diag_zeros_above(M, i, j))
    return tuple(out)


@dataclass(frozen=True)
class StatRecord:
    """All statistics of one matrix in a single bundle."""

    v: int
    v_d: int
    d: tuple


def stat_record(M, k):
    return StatRecord(v=stat_v(M), v_d=stat_vd(M), d=stat_d(M, k))


# ---------------------------------------------------------------------------
# exact weights


def _qpochhammer(x, q, r):
    """(x; q)_r = prod_{s=0}^{r-1} (1 - x q^s), exactly."""
    out = Fraction(1)
    p = Fraction(x)
    for _ in range(r):
        out *= 1 - p
        p *= q
    return out


def weight_at(M, k, q, t):
    """The matrix weight q^v t^(v_d) * prod_s (q^{k-s}; q)_{d_s} /
    (t q^{k-s}; q)_{d_s} evaluated at exact rationals.

    Raises ValueError when a Pochhammer denominator vanishes; nothing is
    ever divided through silently.
    """
    q = Fraction(q)
    t = Fraction(t)
    v = stat_v(M)
    vd = stat_vd(M)
    d = stat_d(M, k)
    out = q ** v * t ** vd
    for s in range(1, k):
        num = _qpochhammer(q ** (k - s), q, d[s - 1])
        den = _qpochhammer(t * q ** (k - s), q, d[s - 1])
        if den == 0:
            raise ValueError("vanishing Pochhammer denominator at s=%d" % s)
        out *= num / den
    return out


def gf_lhs(m, n, k, q, t):
    """Sum of weights over every maximal I_k-avoiding m x n matrix."""
    check_mnk(m, n, k)
    return sum(weight_at(M, k, q, t) for M in enumerate_maximal_iams(m, n, k))


def gf_rhs(m, n, k, q, t):
    """The closed product over the (m-k+1) x (n-k+1) x (k-1) box."""
    check_mnk(m, n, k)
    q = Fraction(q)
    t = Fraction(t)
    out = Fraction(1)
    for i in range(1, m - k + 2):
        for j in range(1, n - k + 2):
            for l in range(1, k):
                den = 1 - t * q ** (i + j + l - 2)
                if den == 0:
                    raise ValueError(
                        "product denominator vanishes at (%d,%d,%d)" % (i, j, l))
                out *= (1 - t * q ** (i + j + l - 1)) / den
    return out


def seeded_points(count, seed=DEFAULT_SEED, span=12):
    """Deterministic rational (q, t) sample points, all denominators safe.

    `span` bounds the exponent window checked for vanishing denominators of
    the shape 1 - t q^e; points that would vanish anywhere in it (or make a
    Pochhammer denominator vanish) are skipped and resampled.
    """
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        qn = rng.randint(1, 8)
        qd = rng.randint(qn + 1, 9)   # 0 < q < 1 keeps powers distinct
        tn = rng.randint(1, 9) * rng.choice((1, -1))
        td = rng.randint(1, 9)
        q = Fraction(qn, qd)
        t = Fraction(tn, td)
        if t == 1 or any(t * q ** e == 1 for e in range(0, span + 1)):
            continue
        pts.append((q, t))
    return pts


# ---------------------------------------------------------------------------
# polynomials in q


class QPoly:
    """A polynomial in q with integer coefficients, stored ascending.

    Immutable; the zero polynomial is the empty tuple.  Division is exact
    division (assert on any remainder) -- these polynomials only ever come
    from products known to divide.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(int(c) for c in coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def q_power(cls, e):
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * e + (1,))

    @classmethod
    def one_minus_q_power(cls, e):
        if e <= 0:
            raise ValueError("exponent must be positive")
        return cls((1,) + (0,) * (e - 1) + (-1,))

    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __sub__(self, other):
        out = list(self.coeffs)
        out.extend([0] * (len(other.coeffs) - len(out)))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return QPoly(out)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(out)

    def exact_div(self, other):
        """Quotient self / other; asserts the division leaves no remainder."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if not rem:
            return QPoly()
        qlen = len(rem) - 1 - d
        assert qlen >= 0, "degree of divisor exceeds degree of dividend"
        quot = [0] * (qlen + 1)
        for pos in range(qlen, -1, -1):
            c = rem[pos + d]
            qc, r = divmod(c, lead)
            assert r == 0, "non-exact polynomial division"
            quot[pos] = qc
            if qc:
                for i, oc in enumerate(other.coeffs):
                    rem[pos + i] -= qc * oc
        assert all(c == 0 for c in rem), "non-exact polynomial division"
        return QPoly(quot)

    def __call__(self, x):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def to_list(self):
        return list(self.coeffs) if self.coeffs else [0]

    def __eq__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "QPoly(%r)" % (list(self.coeffs),)


def volume_gf(m, n, k):
    """Sum of q^{v(M)} over maximal matrices, as a polynomial.

    Computed twice -- once from the matrix stream, once by expanding the
    closed product of q-integer ratios -- and the two must agree.
    """
    check_mnk(m, n, k)
    total = QPoly()
    for M in enumerate_maximal_iams(m, n, k):
        total = total + QPoly.q_power(stat_v(M))
    num = QPoly.one()
    den = QPoly.one()
    for i in range(1, m - k + 2):
        for j in range(1, n - k + 2):
            for l in range(1, k):
                num = num * QPoly.one_minus_q_power(i + j + l - 1)
                den = den * QPoly.one_minus_q_power(i + j + l - 2)
    product = num.exact_div(den)
    assert product == total, "stream and product expansions disagree"
    return total


def pp_volume_gf(a, b, c):
    """Sum of q^{volume} over plane partitions in an a x b x c box."""
    total = QPoly()
    for pp in enumerate_pp(a, b, c):
        total = total + QPoly.q_power(pp.volume())
    return total
