"""Dihedral action, class membership, and plane-partition symmetries."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iamkit.bijection import enumerate_pp, matrix_to_pp
from iamkit.core import BinaryMatrix
from iamkit.formulas import count_symmetry
from iamkit.oracle import enumerate_maximal_iams
from iamkit.symmetry import (
    D8_ELEMENTS,
    apply,
    brute_count_class,
    class_histogram,
    classes_of,
    compose,
    is_S,
    is_SC,
    is_SSC,
    is_TC,
    pp_complement,
    pp_reflect,
)


def test_apply_shapes():
    M = BinaryMatrix([[1, 0, 1], [0, 1, 1]])
    assert apply(M, "transpose").to_lists() == [[1, 0], [0, 1], [1, 1]]
    assert apply(M, "fliph").to_lists() == [[0, 1, 1], [1, 0, 1]]
    assert apply(M, "flipv").to_lists() == [[1, 0, 1], [1, 1, 0]]
    assert apply(M, "rot180").to_lists() == [[1, 1, 0], [1, 0, 1]]
    assert apply(M, "rot90").to_lists() == [[0, 1], [1, 0], [1, 1]]
    with pytest.raises(ValueError):
        apply(M, "spin")


def test_group_composition_table():
    # closure and the composition law on a matrix with trivial stabilizer
    M = BinaryMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 0]])
    for g in D8_ELEMENTS:
        for h in D8_ELEMENTS:
            assert apply(apply(M, h), g) == apply(M, compose(g, h))


def test_group_inverses():
    M = BinaryMatrix([[1, 1, 0, 1], [0, 1, 0, 0], [1, 0, 0, 0]])
    pairs = [("rot90", "rot270"), ("transpose", "transpose"),
             ("fliph", "fliph"), ("flipv", "flipv"),
             ("rot180", "rot180"), ("antitranspose", "antitranspose")]
    for g, ginv in pairs:
        assert apply(apply(M, g), ginv) == M


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(0, 1), min_size=4, max_size=4),
                min_size=4, max_size=4))
def test_rot90_has_order_four(rows):
    M = BinaryMatrix(rows)
    R = M
    for _ in range(4):
        R = apply(R, "rot90")
    assert R == M


def test_classes_of_wide_fixture():
    # 9 x 12 matrix, maximal for k = 5, fixed by both axis reflections
    rows = []
    for i in range(1, 10):
        if i in (1, 2, 8, 9):
            rows.append([1] * 12)
        else:
            rows.append([1, 1] + [0] * 8 + [1, 1])
    M = BinaryMatrix(rows)
    tags = classes_of(M, 5)
    assert {"U", "VS", "HS", "VHS", "HTS"} <= tags
    assert "DS" not in tags and "QTS" not in tags  # not square


def test_classes_of_rejects_non_maximal():
    with pytest.raises(ValueError):
        classes_of(BinaryMatrix([[1, 0], [0, 1]]), 2)


def test_brute_counts_spot():
    assert brute_count_class("DS", 3, 3, 3) == 3
    assert brute_count_class("HTS", 3, 4, 3) == 2
    assert brute_count_class("U", 4, 4, 3) == 20
    hist = class_histogram(5, 5, 3)
    for tag in ("U", "DS", "AS", "HTS", "DAS", "VS"):
        assert hist[tag] == count_symmetry(tag, 5, 5, 3)


# ---------------------------------------------------------------------------
# transport to plane-partition symmetries


def transported(M, k):
    return matrix_to_pp(M, k)


def test_class_transport_on_squares():
    # transpose-fixed <-> symmetric array, half-turn-fixed <-> self-
    # complementary, antitranspose-fixed <-> transpose-complementary
    for n in range(2, 6):
        for k in range(2, n + 1):
            for M in enumerate_maximal_iams(n, n, k):
                tags = classes_of(M, k)
                pp = transported(M, k)
                assert ("DS" in tags) == is_S(pp)
                assert ("AS" in tags) == is_TC(pp)
                assert ("HTS" in tags) == is_SC(pp)
                assert ("DAS" in tags) == is_SSC(pp)


def test_class_transport_half_turn_rectangles():
    for (m, n, k) in [(3, 4, 3), (4, 5, 3), (3, 5, 3), (4, 6, 4)]:
        for M in enumerate_maximal_iams(m, n, k):
            pp = transported(M, k)
            assert ("HTS" in classes_of(M, k)) == is_SC(pp)


def test_pp_reflect_and_complement_are_involutions():
    for pp in enumerate_pp(2, 2, 3):
        assert pp_complement(pp_complement(pp)) == pp
        assert pp_reflect(pp_reflect(pp)) == pp
    with pytest.raises(ValueError):
        pp_reflect(next(enumerate_pp(2, 3, 1)))


def test_symmetric_intersection_law():
    # on symmetric arrays, transpose-complementary and self-complementary
    # coincide (reflection fixes the array, so both reduce to the same test)
    for c in (1, 2, 3):
        for pp in enumerate_pp(3, 3, c):
            if is_S(pp):
                assert is_TC(pp) == is_SC(pp)
