"""Matrices, partitions, skew shapes and the increasing-chain predicates.

Everything downstream (oracles, bijections, counting formulas) is phrased in
terms of the objects defined here.  Matrices are 1-indexed with row 1 at the
top, like a printed array.  An *increasing chain* of length k is a sequence of
k one-entries (i_1,j_1),...,(i_k,j_k) with i_1 < ... < i_k and j_1 < ... < j_k;
a matrix "contains I_k" when such a chain exists.
"""

from __future__ import annotations

from bisect import bisect_left


# ---------------------------------------------------------------------------
# binary matrices


class BinaryMatrix:
    """An immutable m-by-n (0,1)-matrix.

    Rows are stored packed as integers with bit (n - j) holding column j, so
    integer order on a row mask equals lexicographic order on its entries.
    """

    __slots__ = ("m", "n", "_rows")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        n = len(rows[0])
        masks = []
        for r in rows:
            if len(r) != n:
                raise ValueError("ragged rows")
            mask = 0
            for x in r:
                if x not in (0, 1):
                    raise ValueError("entries must be 0 or 1, got %r" % (x,))
                mask = (mask << 1) | x
            masks.append(mask)
        self.m = len(rows)
        self.n = n
        self._rows = tuple(masks)

    @classmethod
    def from_masks(cls, m, n, masks):
        """Fast constructor from packed row masks (bit n-j = column j)."""
        if m < 1 or n < 1:
            raise ValueError("matrix needs at least one row and one column")
        masks = tuple(masks)
        if len(masks) != m:
            raise ValueError("expected %d row masks" % m)
        top = 1 << n
        for mk in masks:
            if not 0 <= mk < top:
                raise ValueError("row mask out of range for %d columns" % n)
        obj = object.__new__(cls)
        obj.m = m
        obj.n = n
        obj._rows = masks
        return obj

    # -- access ------------------------------------------------------------

    def entry(self, i, j):
        """Entry at row i, column j (both 1-indexed)."""
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexError((i, j))
        return (self._rows[i - 1] >> (self.n - j)) & 1

    def row_mask(self, i):
        return self._rows[i - 1]

    @property
    def masks(self):
        return self._rows

    def to_lists(self):
        n = self.n
        return [[(mk >> (n - j)) & 1 for j in range(1, n + 1)] for mk in self._rows]

    def ones_count(self):
        return sum(mk.bit_count() for mk in self._rows)

    def one_cells(self):
        """All (i, j) with a 1, in row-major order."""
        out = []
        n = self.n
        for i, mk in enumerate(self._rows, start=1):
            for j in range(1, n + 1):
                if (mk >> (n - j)) & 1:
                    out.append((i, j))
        return out

    def zero_cells(self):
        out = []
        n = self.n
        for i, mk in enumerate(self._rows, start=1):
            for j in range(1, n + 1):
                if not (mk >> (n - j)) & 1:
                    out.append((i, j))
        return out

    # -- serialization -----------------------------------------------------

    def to_json_dict(self):
        return {"m": self.m, "n": self.n, "rows": self.to_lists()}

    @classmethod
    def from_json_dict(cls, obj):
        rows = obj["rows"]
        M = cls(rows)
        if M.m != obj["m"] or M.n != obj["n"]:
            raise ValueError("declared dimensions do not match rows")
        return M

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return (self.m, self.n, self._rows) == (other.m, other.n, other._rows)

    def __hash__(self):
        return hash((self.m, self.n, self._rows))

    def __repr__(self):
        return "BinaryMatrix(%r)" % (self.to_lists(),)

    def __str__(self):
        n = self.n
        return "\n".join(
            "".join(str((mk >> (n - j)) & 1) for j in range(1, n + 1))
            for mk in self._rows
        )


# ---------------------------------------------------------------------------
# increasing chains


def _longest_chain_from_cells(cells):
    """Longest strictly increasing chain among (row, col) cells.

    `cells` must be sorted in row-major order.  Patience-sorting sweep:
    process rows top to bottom and, inside a row, columns right to left so no
    two cells of the same row land in one chain; tails[p] is the least end
    column of a chain of length p+1.
    """
    tails = []
    idx = 0
    total = len(cells)
    while idx < total:
        row = cells[idx][0]
        stop = idx
        while stop < total and cells[stop][0] == row:
            stop += 1
        for pos in range(stop - 1, idx - 1, -1):
            j = cells[pos][1]
            p = bisect_left(tails, j)
            if p == len(tails):
                tails.append(j)
            elif tails[p] > j:
                tails[p] = j
        idx = stop
    return len(tails)


def longest_increasing_chain(M):
    """Length of the longest increasing chain of ones in M."""
    return _longest_chain_from_cells(M.one_cells())


def longest_increasing_chain_quadratic(M):
    """O(N^2) reference implementation, kept for cross-checking."""
    cells = M.one_cells()
    best = []
    out = 0
    for t, (i, j) in enumerate(cells):
        b = 1
        for s in range(t):
            i2, j2 = cells[s]
            if i2 < i and j2 < j and best[s] + 1 > b:
                b = best[s] + 1
        best.append(b)
        if b > out:
            out = b
    return out


def contains_ik(M, k):
    """Does M contain an increasing chain of k ones?"""
    if k < 1:
        raise ValueError("k must be at least 1")
    return longest_increasing_chain(M) >= k


def max_ones(m, n, k):
    """Extremal number of ones: (k-1)(m+n-k+1).  Requires 2 <= k <= min(m,n)."""
    check_mnk(m, n, k)
    return (k - 1) * (m + n - k + 1)


def check_mnk(m, n, k):
    if not (2 <= k <= min(m, n)):
        raise ValueError("need 2 <= k <= min(m, n), got m=%d n=%d k=%d" % (m, n, k))


def _chain_tables(M):
    """Per-cell chain bounds used by maximality tests.

    Returns (U, D) where U[i][j] is the longest chain of ones lying strictly
    above and to the left of (i, j), and D[i][j] the analogue strictly below
    and to the right.  Tables are (m+2) x (n+2), 1-indexed with a zero rim.
    """
    m, n = M.m, M.n
    U = [[0] * (n + 2) for _ in range(m + 2)]
    E = [[0] * (n + 2) for _ in range(m + 2)]  # chain ending exactly at a one
    for i in range(1, m + 1):
        mk = M.row_mask(i)
        for j in range(1, n + 1):
            u = U[i - 1][j]
            if U[i][j - 1] > u:
                u = U[i][j - 1]
            if E[i - 1][j - 1] > u:
                u = E[i - 1][j - 1]
            U[i][j] = u
            if (mk >> (n - j)) & 1:
                E[i][j] = u + 1
    # E propagates to U one step late, so fold ends into the running max:
    # U[i][j] must dominate every E[a][b] with a<i, b<j.  The recurrence above
    # does that because E[a][b] <= U[a+1][b+1] by construction.
    D = [[0] * (n + 2) for _ in range(m + 2)]
    F = [[0] * (n + 2) for _ in range(m + 2)]
    for i in range(m, 0, -1):
        mk = M.row_mask(i)
        for j in range(n, 0, -1):
            d = D[i + 1][j]
            if D[i][j + 1] > d:
                d = D[i][j + 1]
            if F[i + 1][j + 1] > d:
                d = F[i + 1][j + 1]
            D[i][j] = d
            if (mk >> (n - j)) & 1:
                F[i][j] = d + 1
    return U, D


def is_maximal_iam(M, k):
    """Is M an I_k-avoiding matrix to which no further 1 can be added?

    Fast path: an avoiding matrix holding the extremal number of ones is
    always maximal.  Otherwise every 0 is flipped (via chain tables) and must
    complete a chain of length k.
    """
    check_mnk(M.m, M.n, k)
    if longest_increasing_chain(M) >= k:
        return False
    if M.ones_count() == max_ones(M.m, M.n, k):
        return True
    U, D = _chain_tables(M)
    m, n = M.m, M.n
    for i in range(1, m + 1):
        mk = M.row_mask(i)
        for j in range(1, n + 1):
            if not (mk >> (n - j)) & 1:
                if U[i][j] + 1 + D[i][j] < k:
                    return False
    return True


def is_maximal_iam_by_flips(M, k):
    """Literal definition of maximality: flip each zero and re-test.

    Slow; exists so that the production test above has an independent twin.
    """
    check_mnk(M.m, M.n, k)
    if longest_increasing_chain_quadratic(M) >= k:
        return False
    n = M.n
    for i, j in M.zero_cells():
        masks = list(M.masks)
        masks[i - 1] |= 1 << (n - j)
        flipped = BinaryMatrix.from_masks(M.m, n, masks)
        if longest_increasing_chain_quadratic(flipped) < k:
            return False
    return True


# ---------------------------------------------------------------------------
# diagonal scans (shared by bijections and statistics)


def diag_ones_below(M, i, j):
    """Number of d > 0 with a 1 at (i+d, j+d)."""
    c = 0
    d = 1
    while i + d <= M.m and j + d <= M.n:
        c += M.entry(i + d, j + d)
        d += 1
    return c


def diag_zeros_above(M, i, j):
    """Number of d > 0 with a 0 at (i-d, j-d)."""
    c = 0
    d = 1
    while i - d >= 1 and j - d >= 1:
        c += 1 - M.entry(i - d, j - d)
        d += 1
    return c


# ---------------------------------------------------------------------------
# partitions and skew shapes


class Partition:
    """A weakly decreasing tuple of nonnegative integers; () is the empty one.

    Trailing zero parts are kept as given: (3, 0) and (3,) are distinct as
    sequences even though they cut out the same diagram.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        if parts and parts[-1] < 0:
            raise ValueError("parts must be nonnegative: %r" % (parts,))
        self.parts = parts

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i, default=0):
        """1-indexed part access; rows past the end are 0."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else default

    def size(self):
        return sum(self.parts)

    def contains(self, other):
        other = Partition(other)
        return all(self.part(i) >= other.part(i)
                   for i in range(1, len(other) + 1))

    def durfee(self):
        """Side of the largest square fitting in the diagram."""
        d = 0
        for i, p in enumerate(self.parts, start=1):
            if p >= i:
                d = i
        return d

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)


class SkewShape:
    """The diagram lambda/mu: cells (i, j) with mu_i < j <= lambda_i.

    mu is zero-padded to the length of lambda and must fit inside it.
    """

    __slots__ = ("lam", "mu")

    def __init__(self, lam, mu=()):
        lam = Partition(lam)
        mu = Partition(mu)
        if len(mu) > len(lam):
            raise ValueError("mu has more parts than lambda")
        padded = tuple(mu.parts) + (0,) * (len(lam) - len(mu))
        if not lam.contains(padded):
            raise ValueError("mu must fit inside lambda")
        self.lam = lam
        self.mu = Partition(padded)

    @property
    def n_rows(self):
        return len(self.lam)

    @property
    def n_cols(self):
        return self.lam.parts[0] if self.lam.parts else 0

    def row_span(self, i):
        """Columns of row i as the half-open pair (mu_i, lambda_i]."""
        return self.mu.part(i), self.lam.part(i)

    def contains_cell(self, i, j):
        if not 1 <= i <= self.n_rows:
            return False
        lo, hi = self.row_span(i)
        return lo < j <= hi

    def cells(self):
        out = []
        for i in range(1, self.n_rows + 1):
            lo, hi = self.row_span(i)
            out.extend((i, j) for j in range(lo + 1, hi + 1))
        return out

    def cell_count(self):
        return self.lam.size() - self.mu.size()

    def is_rectangle(self):
        ps = self.lam.parts
        return (self.mu.size() == 0 and len(ps) > 0
                and all(p == ps[0] for p in ps) and ps[0] > 0)

    def to_json_dict(self):
        return {"lambda": list(self.lam.parts), "mu": list(self.mu.parts)}

    @classmethod
    def from_json_dict(cls, obj):
        return cls(obj["lambda"], obj.get("mu", ()))

    def __eq__(self, other):
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self.lam == other.lam and self.mu == other.mu

    def __hash__(self):
        return hash((self.lam, self.mu))

    def __repr__(self):
        return "SkewShape(%r, %r)" % (self.lam.parts, self.mu.parts)


class Filling:
    """A 0/1 value on every cell of a skew shape (packed row masks).

    Row masks use the same convention as BinaryMatrix over the full column
    range 1..lambda_1; bits outside the shape are zero.
    """

    __slots__ = ("shape", "_rows")

    def __init__(self, shape, values):
        """values: mapping (i, j) -> 0/1 whose domain is exactly the cells."""
        if not isinstance(shape, SkewShape):
            raise TypeError("shape must be a SkewShape")
        cells = shape.cells()
        if set(values) != set(cells):
            raise ValueError("values must cover exactly the cells of the shape")
        n = shape.n_cols
        masks = [0] * shape.n_rows
        for (i, j), v in values.items():
            if v not in (0, 1):
                raise ValueError("entries must be 0 or 1")
            if v:
                masks[i - 1] |= 1 << (n - j)
        self.shape = shape
        self._rows = tuple(masks)

    @classmethod
    def from_masks(cls, shape, masks):
        obj = object.__new__(cls)
        obj.shape = shape
        obj._rows = tuple(masks)
        return obj

    @property
    def masks(self):
        return self._rows

    def value(self, i, j):
        if not self.shape.contains_cell(i, j):
            raise KeyError((i, j))
        return (self._rows[i - 1] >> (self.shape.n_cols - j)) & 1

    def items(self):
        return [((i, j), self.value(i, j)) for (i, j) in self.shape.cells()]

    def one_cells(self):
        out = []
        n = self.shape.n_cols
        for i, mk in enumerate(self._rows, start=1):
            for j in range(1, n + 1):
                if (mk >> (n - j)) & 1:
                    out.append((i, j))
        return out

    def zero_cells(self):
        return [c for c in self.shape.cells()
                if not (self._rows[c[0] - 1] >> (self.shape.n_cols - c[1])) & 1]

    def ones_count(self):
        return sum(mk.bit_count() for mk in self._rows)

    def as_matrix(self):
        """Embed a rectangular filling as a BinaryMatrix."""
        if not self.shape.is_rectangle():
            raise ValueError("only rectangular fillings embed as matrices")
        return BinaryMatrix.from_masks(self.shape.n_rows, self.shape.n_cols,
                                       self._rows)

    def to_json_dict(self):
        sh = self.shape
        rows = []
        for i in range(1, sh.n_rows + 1):
            lo, hi = sh.row_span(i)
            rows.append([self.value(i, j) for j in range(lo + 1, hi + 1)])
        d = sh.to_json_dict()
        d["rows"] = rows
        return d

    @classmethod
    def from_json_dict(cls, obj):
        sh = SkewShape.from_json_dict(obj)
        values = {}
        for i, row in enumerate(obj["rows"], start=1):
            lo, hi = sh.row_span(i)
            if len(row) != hi - lo:
                raise ValueError("row %d has wrong length" % i)
            for off, v in enumerate(row):
                values[(i, lo + 1 + off)] = v
        return cls(sh, values)

    def __eq__(self, other):
        if not isinstance(other, Filling):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        return "Filling(%r, ones=%r)" % (self.shape, self.one_cells())


# ---------------------------------------------------------------------------
# in-shape containment


def _box_in_shape(shape, i1, j1, i2, j2):
    """Are all four corners of the axis box spanned by the two cells inside?"""
    return (shape.contains_cell(i1, j1) and shape.contains_cell(i1, j2)
            and shape.contains_cell(i2, j1) and shape.contains_cell(i2, j2))


def contains_ik_in_shape(F, k):
    """In-shape containment of I_k, by the literal box definition.

    A chain of k ones counts only if, for every pair of its cells, the full
    axis-aligned box spanned by the pair lies inside the shape.  (For skew
    shapes this is equivalent to plain chain containment; the equivalence is
    exercised in tests, but this routine does not assume it.)
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    ones = F.one_cells()
    shape = F.shape
    total = len(ones)

    def extend(chain, start):
        if len(chain) == k:
            return True
        for t in range(start, total):
            i2, j2 = ones[t]
            li, lj = chain[-1]
            if i2 > li and j2 > lj:
                ok = all(_box_in_shape(shape, a, b, i2, j2) for (a, b) in chain)
                if ok and extend(chain + [(i2, j2)], t + 1):
                    return True
        return False

    for s in range(total):
        if extend([ones[s]], s + 1):
            return True
    return False


def longest_chain_in_filling(F):
    """Longest increasing chain among the ones of a filling (chain semantics)."""
    return _longest_chain_from_cells(F.one_cells())


def _filling_chain_tables(F):
    """(U, D) chain tables over the ones of a filling, as for matrices.

    Indices run over the full bounding rectangle; cells outside the shape
    simply never hold ones, so the recurrences go through unchanged.
    """
    m, n = F.shape.n_rows, F.shape.n_cols
    ones = set(F.one_cells())
    U = [[0] * (n + 2) for _ in range(m + 2)]
    E = [[0] * (n + 2) for _ in range(m + 2)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            u = max(U[i - 1][j], U[i][j - 1], E[i - 1][j - 1])
            U[i][j] = u
            if (i, j) in ones:
                E[i][j] = u + 1
    D = [[0] * (n + 2) for _ in range(m + 2)]
    Fd = [[0] * (n + 2) for _ in range(m + 2)]
    for i in range(m, 0, -1):
        for j in range(n, 0, -1):
            d = max(D[i + 1][j], D[i][j + 1], Fd[i + 1][j + 1])
            D[i][j] = d
            if (i, j) in ones:
                Fd[i][j] = d + 1
    return U, D


def is_maximal_filling(F, k):
    """Avoids I_k inside the shape, and no in-shape 0 can be flipped to 1."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if longest_chain_in_filling(F) >= k:
        return False
    U, D = _filling_chain_tables(F)
    for (i, j) in F.zero_cells():
        if U[i][j] + 1 + D[i][j] < k:
            return False
    return True
