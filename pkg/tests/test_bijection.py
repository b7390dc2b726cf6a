"""Matrix <-> paths <-> plane partition: fixtures and round trips."""

import pytest

from iamkit.bijection import (
    PathFamily,
    PlanePartition,
    count_zigzag_decompositions,
    enumerate_pp,
    matrix_to_paths,
    matrix_to_pp,
    path_endpoints,
    paths_to_matrix,
    pp_layers,
    pp_to_matrix,
)
from iamkit.core import BinaryMatrix, max_ones
from iamkit.formulas import hprod
from iamkit.oracle import enumerate_maximal_iams

# ---------------------------------------------------------------------------
# frozen fixtures: the six maximal 3x4 matrices for k=3 with their encodings

SIX = [
    ([[1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 0, 0]], [[0, 0]]),
    ([[1, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 0]], [[1, 0]]),
    ([[1, 1, 1, 1], [1, 0, 0, 1], [1, 1, 1, 1]], [[1, 1]]),
    ([[0, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 0]], [[2, 0]]),
    ([[0, 1, 1, 1], [1, 1, 0, 1], [1, 1, 1, 1]], [[2, 1]]),
    ([[0, 0, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1]], [[2, 2]]),
]

# a 9x7 matrix, maximal for k=5, with a known plane-partition image
BIG = BinaryMatrix([
    [1, 1, 1, 1, 1, 1, 1],
    [1, 0, 0, 1, 1, 1, 1],
    [1, 0, 0, 1, 0, 1, 1],
    [1, 0, 1, 1, 0, 1, 1],
    [1, 1, 1, 0, 1, 1, 1],
    [1, 1, 1, 1, 1, 0, 1],
    [1, 1, 1, 0, 0, 1, 1],
    [1, 1, 1, 0, 1, 1, 0],
    [1, 1, 1, 1, 1, 0, 0],
])
BIG_PI = ((3, 3, 2), (3, 3, 2), (3, 2, 1), (1, 1, 0), (1, 0, 0))


@pytest.mark.parametrize("rows,pi", SIX)
def test_three_by_four_images(rows, pi):
    M = BinaryMatrix(rows)
    pp = matrix_to_pp(M, 3)
    assert (pp.a, pp.b, pp.c) == (1, 2, 2)
    assert [list(r) for r in pp.pi] == pi
    assert pp_to_matrix(pp, 3, 4, 3) == M


def test_three_by_four_images_are_all_of_pp():
    got = {matrix_to_pp(M, 3).pi for M in enumerate_maximal_iams(3, 4, 3)}
    assert got == {pp.pi for pp in enumerate_pp(1, 2, 2)}
    assert len(got) == 6


def test_big_fixture_pp():
    pp = matrix_to_pp(BIG, 5)
    assert (pp.a, pp.b, pp.c) == (5, 3, 4)
    assert pp.pi == BIG_PI
    assert pp_to_matrix(pp, 9, 7, 5) == BIG
    assert BIG.ones_count() == max_ones(9, 7, 5) == 48


def test_big_fixture_layers():
    layers = pp_layers(matrix_to_pp(BIG, 5))
    assert [tuple(l.parts) for l in layers] == [
        (3, 3, 3, 2, 1), (3, 3, 2), (2, 2, 1), ()]


def test_big_fixture_paths():
    fam = matrix_to_paths(BIG, 5)
    assert len(fam.paths) == 4
    starts, ends = path_endpoints(9, 7, 5)
    for s, path in enumerate(fam.paths):
        assert path[0] == starts[s] and path[-1] == ends[s]
    assert paths_to_matrix(fam, 9, 7, 5) == BIG


def test_zigzag_counts():
    for rows, _ in SIX:
        assert count_zigzag_decompositions(BinaryMatrix(rows), 3) == 2
    assert count_zigzag_decompositions(BIG, 5) == 24
    # k = 2: a single zigzag covering everything, always unique
    for M in enumerate_maximal_iams(2, 4, 2):
        assert count_zigzag_decompositions(M, 2) == 1


def test_roundtrips_small_boards():
    for m in range(2, 6):
        for n in range(2, 6):
            for k in range(2, min(m, n) + 1):
                seen = set()
                for M in enumerate_maximal_iams(m, n, k):
                    pp = matrix_to_pp(M, k)
                    assert pp_to_matrix(pp, m, n, k) == M
                    fam = matrix_to_paths(M, k)
                    assert paths_to_matrix(fam, m, n, k) == M
                    seen.add(pp.pi)
                want = {pp.pi for pp in enumerate_pp(m - k + 1, n - k + 1, k - 1)}
                assert seen == want


def test_path_count_invariant():
    # total ones = (k-1)(m+n-2k+3) on the paths plus two corner staircases
    for (m, n, k) in [(4, 5, 3), (5, 5, 4), (5, 6, 5)]:
        stair = (k - 2) * (k - 1) // 2
        for M in enumerate_maximal_iams(m, n, k):
            fam = matrix_to_paths(M, k)
            assert sum(len(p) for p in fam.paths) == (k - 1) * (m + n - 2 * k + 3)
            assert M.ones_count() == (k - 1) * (m + n - 2 * k + 3) + 2 * stair


def test_matrix_to_pp_rejects_non_maximal():
    with pytest.raises(AssertionError):
        matrix_to_pp(BinaryMatrix([[1, 0], [0, 1]]), 2)


def test_paths_to_matrix_rejects_crossing_paths():
    fam = matrix_to_paths(BinaryMatrix(SIX[0][0]), 3)
    # swap the two paths: endpoints no longer match
    swapped = PathFamily((fam.paths[1], fam.paths[0]))
    with pytest.raises(AssertionError):
        paths_to_matrix(swapped, 3, 4, 3)


def test_pp_validation():
    with pytest.raises(ValueError):
        PlanePartition(1, 2, 2, [[1, 2]])  # row increases
    with pytest.raises(ValueError):
        PlanePartition(2, 1, 2, [[1], [2]])  # column increases
    with pytest.raises(ValueError):
        PlanePartition(1, 1, 2, [[3]])  # exceeds the box
    pp = PlanePartition(2, 2, 3, [[3, 1], [2, 0]])
    assert pp.volume() == 6 and pp.trace() == 3


def test_pp_json_roundtrip():
    pp = PlanePartition(2, 3, 4, [[4, 2, 1], [2, 2, 0]])
    assert PlanePartition.from_json_dict(pp.to_json_dict()) == pp


def test_enumerate_pp_counts():
    assert sum(1 for _ in enumerate_pp(1, 2, 2)) == hprod(1, 2, 2) == 6
    assert sum(1 for _ in enumerate_pp(2, 2, 2)) == hprod(2, 2, 2) == 20
    assert sum(1 for _ in enumerate_pp(3, 3, 1)) == hprod(3, 3, 1) == 20
    assert sum(1 for _ in enumerate_pp(0, 3, 2)) == 1  # the empty array


def test_pp_layers_are_nested():
    for pp in enumerate_pp(3, 3, 3):
        layers = pp_layers(pp)
        assert len(layers) == 3
        for a, b in zip(layers, layers[1:]):
            assert a.contains(b)
