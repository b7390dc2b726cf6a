"""Statistics, exact weights, the (q,t) identity, volume polynomials."""

from fractions import Fraction

import pytest

from iamkit.bijection import matrix_to_pp, pp_layers
from iamkit.core import BinaryMatrix
from iamkit.genfunc import (
    QPoly,
    StatRecord,
    gf_lhs,
    gf_rhs,
    pp_volume_gf,
    seeded_points,
    stat_d,
    stat_record,
    stat_v,
    stat_v_cell,
    stat_vd,
    stat_w_cell,
    volume_gf,
    weight_at,
)
from iamkit.formulas import hprod
from iamkit.oracle import enumerate_maximal_iams
from iamkit.symmetry import apply

SIX_STATS = {
    # zero set -> (v, v_d, d) for the maximal 3x4 matrices at k = 3
    ((3, 3), (3, 4)): (0, 0, (0, 0)),
    ((2, 2), (3, 4)): (1, 1, (1, 0)),
    ((2, 2), (2, 3)): (2, 1, (1, 0)),
    ((1, 1), (3, 4)): (2, 2, (1, 1)),
    ((1, 1), (2, 3)): (3, 2, (1, 1)),
    ((1, 1), (1, 2)): (4, 2, (1, 1)),
}


def test_statistics_on_the_six():
    seen = set()
    for M in enumerate_maximal_iams(3, 4, 3):
        key = tuple(M.zero_cells())
        assert key in SIX_STATS
        assert (stat_v(M), stat_vd(M), stat_d(M, 3)) == SIX_STATS[key]
        seen.add(key)
    assert len(seen) == 6


def test_stat_record_bundle():
    M = BinaryMatrix([[1, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 0]])
    assert stat_record(M, 3) == StatRecord(v=1, v_d=1, d=(1, 0))


def test_stat_cell_validation():
    M = BinaryMatrix([[1, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 0]])
    assert stat_v_cell(M, 2, 2) == 1
    assert stat_w_cell(M, 3, 3) == 1
    with pytest.raises(ValueError):
        stat_v_cell(M, 1, 1)
    with pytest.raises(ValueError):
        stat_w_cell(M, 2, 2)


def test_zero_one_pairing():
    # summing "ones below the diagonal" over zeros counts exactly the same
    # diagonal pairs as summing "zeros above" over ones
    for M in enumerate_maximal_iams(4, 5, 3):
        lhs = sum(stat_v_cell(M, i, j) for (i, j) in M.zero_cells())
        rhs = sum(stat_w_cell(M, i, j) for (i, j) in M.one_cells())
        assert lhs == rhs == stat_v(M)


def test_statistics_transport_to_pp():
    # v = volume, v_d = trace, d_s = Durfee square of layer s
    for (m, n, k) in [(3, 4, 3), (4, 4, 3), (4, 5, 3), (5, 5, 4), (4, 4, 4)]:
        for M in enumerate_maximal_iams(m, n, k):
            pp = matrix_to_pp(M, k)
            assert stat_v(M) == pp.volume()
            assert stat_vd(M) == pp.trace()
            layers = pp_layers(pp)
            assert stat_d(M, k) == tuple(l.durfee() for l in layers)


def test_stat_d_transposes_tall_matrices():
    # tall matrices are normalized by transposition, so d is D8-transpose
    # invariant by construction
    for M in enumerate_maximal_iams(5, 3, 3):
        assert stat_d(M, 3) == stat_d(apply(M, "transpose"), 3)


def test_weight_closed_form_one_matrix():
    M = BinaryMatrix([[1, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 0]])
    q, t = Fraction(2, 5), Fraction(3, 7)
    expected = q * t * (1 - q ** 2) / (1 - t * q ** 2)
    assert weight_at(M, 3, q, t) == expected


def test_weight_vanishing_denominator_raises():
    M = BinaryMatrix([[0, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 0]])  # d=(1,1)
    with pytest.raises(ValueError):
        weight_at(M, 3, Fraction(1, 2), Fraction(4))  # t*q^2 = 1


def test_gf_identity_small():
    for (m, n, k) in [(2, 2, 2), (3, 4, 3), (4, 4, 2)]:
        for (q, t) in seeded_points(6, seed=7, span=m + n + k):
            assert gf_lhs(m, n, k, q, t) == gf_rhs(m, n, k, q, t)


def test_gf_rhs_closed_form_example():
    for (q, t) in seeded_points(6, seed=11):
        closed = ((1 - t * q ** 3) * (1 - t * q ** 4)
                  / ((1 - t * q) * (1 - t * q ** 2)))
        assert gf_rhs(3, 4, 3, q, t) == closed


def test_seeded_points_deterministic():
    assert seeded_points(10) == seeded_points(10)
    assert seeded_points(5, seed=3) != seeded_points(5, seed=4)


def test_volume_gf_values():
    assert volume_gf(3, 4, 3).to_list() == [1, 1, 2, 1, 1]
    assert volume_gf(2, 2, 2).to_list() == [1, 1]
    assert volume_gf(3, 3, 3).to_list() == [1, 1, 1]


def test_volume_gf_matches_pp_volume_gf():
    for m in range(2, 5):
        for n in range(m, 5):
            for k in range(2, m + 1):
                assert volume_gf(m, n, k) == \
                    pp_volume_gf(m - k + 1, n - k + 1, k - 1)


def test_volume_gf_at_one_is_the_count():
    for (m, n, k) in [(3, 4, 3), (4, 4, 2), (5, 5, 4)]:
        assert volume_gf(m, n, k)(1) == hprod(m - k + 1, n - k + 1, k - 1)


# ---------------------------------------------------------------------------
# QPoly unit tests


def test_qpoly_arithmetic():
    p = QPoly([1, 2])       # 1 + 2q
    r = QPoly([0, 0, 3])    # 3q^2
    assert (p + r).to_list() == [1, 2, 3]
    assert (p - p).to_list() == [0]
    assert (p * r).to_list() == [0, 0, 3, 6]
    assert QPoly().degree() == -1
    assert QPoly([5]).degree() == 0


def test_qpoly_exact_division():
    num = QPoly([1, 0, 0, 0, -1])   # 1 - q^4 = (1-q)(1+q+q^2+q^3)
    assert num.exact_div(QPoly([1, -1])).to_list() == [1, 1, 1, 1]
    with pytest.raises(AssertionError):
        QPoly([1, 1, 1]).exact_div(QPoly([1, -1]))
    with pytest.raises(ZeroDivisionError):
        QPoly([1]).exact_div(QPoly())


def test_qpoly_eval_and_normalization():
    p = QPoly([2, 0, 1, 0, 0])
    assert p.to_list() == [2, 0, 1]
    assert p(Fraction(1, 2)) == Fraction(9, 4)
    assert QPoly([0, 0]).to_list() == [0]
    assert QPoly.q_power(3).to_list() == [0, 0, 0, 1]
    assert QPoly.one_minus_q_power(2).to_list() == [1, 0, -1]
