"""The dihedral group acting on matrices, and symmetry tests for plane
partitions.

Group elements are named strings; `apply(M, g)` returns the transformed
matrix.  Quarter turns are defined by composition of transpose and a
reflection rather than by separate index algebra, so the composition law is
structural rather than re-derived.
"""

from __future__ import annotations

from collections import Counter

from . import oracle
from .core import BinaryMatrix, check_mnk, is_maximal_iam

D8_ELEMENTS = ("id", "rot90", "rot180", "rot270",
               "transpose", "antitranspose", "fliph", "flipv")


def _transpose(M):
    n = M.n
    cols = []
    for j in range(1, n + 1):
        mask = 0
        for i in range(1, M.m + 1):
            mask = (mask << 1) | ((M.row_mask(i) >> (n - j)) & 1)
        cols.append(mask)
    return BinaryMatrix.from_masks(n, M.m, cols)


def _bitrev(mask, n):
    out = 0
    for _ in range(n):
        out = (out << 1) | (mask & 1)
        mask >>= 1
    return out


def _fliph(M):
    # reverse the row order (reflection across the horizontal axis)
    return BinaryMatrix.from_masks(M.m, M.n, tuple(reversed(M.masks)))


def _flipv(M):
    # reverse each row (reflection across the vertical axis)
    n = M.n
    return BinaryMatrix.from_masks(M.m, n, tuple(_bitrev(r, n) for r in M.masks))


def apply(M, g):
    """Apply a dihedral element to a matrix.  Non-square matrices change
    shape under the odd elements (transpose, antitranspose, quarter turns)."""
    if g == "id":
        return M
    if g == "transpose":
        return _transpose(M)
    if g == "fliph":
        return _fliph(M)
    if g == "flipv":
        return _flipv(M)
    if g == "rot180":
        return _fliph(_flipv(M))
    if g == "rot90":
        return _transpose(_fliph(M))
    if g == "rot270":
        return _transpose(_flipv(M))
    if g == "antitranspose":
        return _fliph(_transpose(_fliph(M)))
    raise ValueError("unknown group element %r" % (g,))


def compose(g, h):
    """The element equal to applying h first, then g."""
    probe = BinaryMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 0]])  # trivial stabilizer
    target = apply(apply(probe, h), g)
    for e in D8_ELEMENTS:
        if apply(probe, e) == target:
            return e
    raise AssertionError("composition fell outside the group")


def classes_of(M, k):
    """The set of symmetry-class tags that M belongs to.

    Always contains "U".  Square-only tags (DS, AS, DAS, QTS, TS) are only
    reported for square matrices.
    """
    if not is_maximal_iam(M, k):
        raise ValueError("classes_of expects a maximal I_k-avoiding matrix")
    return _tags_of(M)


def _tags_of(M):
    tags = {"U"}
    square = M.m == M.n
    vs = M == _flipv(M)
    hs = M == _fliph(M)
    if vs:
        tags.add("VS")
    if hs:
        tags.add("HS")
    if vs and hs:
        tags.add("VHS")
    if M == _fliph(_flipv(M)):
        tags.add("HTS")
    if square:
        ds = M == _transpose(M)
        as_ = M == apply(M, "antitranspose")
        if ds:
            tags.add("DS")
        if as_:
            tags.add("AS")
        if ds and as_:
            tags.add("DAS")
        if M == apply(M, "rot90"):
            tags.add("QTS")
        if all(M == apply(M, g) for g in D8_ELEMENTS):
            tags.add("TS")
    return frozenset(tags)


# ---------------------------------------------------------------------------
# brute-force class counts


def brute_count_class(tag, m, n, k):
    """Count maximal IAMs in a symmetry class by filtering the oracle stream."""
    check_mnk(m, n, k)
    if tag == "U":
        return oracle.oracle_count(m, n, k)
    return class_histogram(m, n, k)[tag]


def class_histogram(m, n, k, workers=None):
    """Counter mapping each tag to the number of oracle matrices carrying it."""
    check_mnk(m, n, k)
    hist = Counter()
    if workers and workers > 1:
        search = oracle._RectSearch(m, n, k)
        depth = 2 if m > 2 else 1
        prefixes = oracle._viable_prefixes(search, depth)
        tasks = [(m, n, k, p, c, o) for (p, c, o) in prefixes]
        try:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_hist_prefix_task, tasks, chunksize=8):
                    hist.update(part)
            return hist
        except (OSError, RuntimeError):
            pass  # fall through to serial
    for M in oracle.enumerate_maximal_iams(m, n, k):
        hist.update(_tags_of(M))
    return hist


def _hist_prefix_task(args):
    m, n, k, prefix, c_vec, ones = args
    search = oracle._RectSearch(m, n, k)
    hist = Counter()
    for masks in search.complete(prefix, c_vec, ones):
        hist.update(_tags_of(BinaryMatrix.from_masks(m, n, masks)))
    return hist


# ---------------------------------------------------------------------------
# plane-partition symmetries
#
# pi is the (a rows) x (b cols) array of a PlanePartition; see bijection.py.


def pp_reflect(pp):
    """Transpose the array (needs a = b)."""
    if pp.a != pp.b:
        raise ValueError("reflect needs a square array")
    pi = tuple(tuple(pp.pi[i][j] for i in range(pp.a)) for j in range(pp.b))
    return type(pp)(pp.a, pp.b, pp.c, pi)


def pp_complement(pp):
    """Complement inside the box: rotate the array a half turn and replace
    each entry x by c - x."""
    pi = tuple(
        tuple(pp.c - pp.pi[pp.a - 1 - i][pp.b - 1 - j] for j in range(pp.b))
        for i in range(pp.a))
    return type(pp)(pp.a, pp.b, pp.c, pi)


def is_S(pp):
    """Symmetric: fixed by reflection."""
    return pp.a == pp.b and pp.pi == pp_reflect(pp).pi


def is_SC(pp):
    """Self-complementary inside its box."""
    return pp.pi == pp_complement(pp).pi


def is_TC(pp):
    """Transpose-complementary: reflection equals complement."""
    return pp.a == pp.b and pp_reflect(pp).pi == pp_complement(pp).pi


def is_SSC(pp):
    """Symmetric and self-complementary."""
    return is_S(pp) and is_SC(pp)
