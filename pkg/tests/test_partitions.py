import pytest
from hypothesis import given, strategies as st

import crankmex.partitions as pc
from crankmex.partitions import (
    EMPTY,
    FrobeniusSymbol,
    M,
    Partition,
    PartitionError,
    conjugate,
    crank,
    durfee_rect,
    enumerate_partitions,
    frobenius,
    from_frobenius,
    mex,
    mu,
    omega,
    parse_frobenius,
    parse_partition,
)

P = parse_partition


def partitions_upto(w):
    return [p for n in range(w + 1) for p in enumerate_partitions(n)]


@st.composite
def partitions(draw, max_weight=24):
    n = draw(st.integers(0, max_weight))
    return draw(st.sampled_from(enumerate_partitions(n)))


# -- parsing and enumeration -------------------------------------------------------


def test_parse_roundtrip():
    assert P("5,4,4,2,2").parts == (5, 4, 4, 2, 2)
    assert str(P("5,4,4,2,2")) == "5,4,4,2,2"
    assert P("") == EMPTY


@pytest.mark.parametrize("text", ["2,3", "0", "-1", "a,b", "3,,1"])
def test_parse_rejects(text):
    with pytest.raises(PartitionError):
        P(text)


def test_enumeration_counts():
    assert enumerate_partitions(0) == [EMPTY]
    assert [str(p) for p in enumerate_partitions(4)] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    assert len(enumerate_partitions(10)) == 42


def test_enumeration_matches_euler_recurrence():
    # p(n) via the pentagonal recurrence, an independent oracle
    N = 40
    p = [1] + [0] * N
    for n in range(1, N + 1):
        k, total = 1, 0
        while k * (3 * k - 1) // 2 <= n:
            sign = 1 if k % 2 else -1
            total += sign * p[n - k * (3 * k - 1) // 2]
            if k * (3 * k + 1) // 2 <= n:
                total += sign * p[n - k * (3 * k + 1) // 2]
            k += 1
        p[n] = total
    assert [len(enumerate_partitions(n)) for n in range(26)] == p[:26]


def test_generate_distinct():
    assert [str(p) for p in pc.generate_partitions(5, distinct=True)] == ["5", "4,1", "3,2"]


# -- statistics --------------------------------------------------------------------


def test_conjugate_examples():
    assert conjugate(P("5,4,4,2,2")) == P("5,5,3,3,1")
    assert conjugate(EMPTY) == EMPTY
    assert conjugate(P("6")) == P("1,1,1,1,1,1")


def test_omega_mu_crank_examples():
    assert omega(P("5,4,2,2,1,1")) == 2
    assert omega(P("5,4,4,2,2")) == 0
    assert omega(EMPTY) == 0
    assert mu(P("5,4,2,2,1,1")) == 2
    assert mu(P("1,1,1")) == 0
    assert mu(P("3,1")) == 1
    assert crank(P("5,4,4,2,2")) == 5
    assert crank(P("5,4,2,2,1,1")) == 0
    assert crank(P("1")) == -1
    assert crank(EMPTY) == 0


def test_mex_examples():
    assert mex(P("5,4,4,2,2")) == 1
    assert mex(P("5,4,2,1,1")) == 3
    assert mex(P("4,3,2,1")) == 5


def test_frobenius_examples():
    f = frobenius(P("5,4,4,2,2"))
    assert (f.top, f.bottom) == ((4, 2, 1), (4, 3, 0))
    assert str(f) == "4,2,1|4,3,0"
    assert str(frobenius(EMPTY)) == "|"
    assert str(frobenius(P("1"))) == "0|0"
    assert parse_frobenius("4,2,1|4,3,0") == f
    assert from_frobenius(f) == P("5,4,4,2,2")


@pytest.mark.parametrize("top,bottom", [((1, 2), (3, 1)), ((2,), (1, 0)), ((1, 1), (2, 0))])
def test_frobenius_rejects(top, bottom):
    with pytest.raises(PartitionError):
        FrobeniusSymbol(top, bottom)


def test_durfee_examples():
    # sizes 3x3, 3x4, 2x4, 1x4, 1x5
    assert [durfee_rect(P("5,4,4,2,2"), j) for j in range(5)] == [3, 3, 2, 1, 1]
    assert durfee_rect(EMPTY, 3) == 0


def test_conjugate_involution_and_frobenius_roundtrip():
    for p in partitions_upto(18):
        assert conjugate(conjugate(p)) == p
        f = frobenius(p)
        assert from_frobenius(f) == p
        assert len(f.top) + sum(f.top) + sum(f.bottom) == p.weight


def test_durfee_monotone_in_j():
    for p in partitions_upto(18):
        ds = [durfee_rect(p, j) for j in range(8)]
        assert ds == sorted(ds, reverse=True)


@given(partitions())
def test_bounds(p):
    assert mex(p) <= p.weight + 1
    if p.parts:
        assert -p.weight <= crank(p) <= p.weight


# -- counts ------------------------------------------------------------------------


def test_crank_conventions():
    assert (M(0, 0), M(1, 1), M(0, 1), M(-1, 1)) == (1, 1, -1, 1)
    assert M(0, 4) == 1
    assert M(5, 5) == 1
    assert pc.crank_count(1, lambda m: m == 0, conventions=False) == 0


def test_crank_distribution_sums_and_symmetry():
    for n in range(31):
        assert sum(M(m, n) for m in range(-n - 1, n + 2)) == len(enumerate_partitions(n))
        for m in range(n + 2):
            assert M(m, n) == M(-m, n)


def test_crank_nonnegative_equals_odd_mex():
    for n in range(2, 31):
        assert pc.crank_count(n, lambda m: m >= 0) == pc.mex_count(1, 2, n)


def test_mex_examples_from_table():
    assert pc.mex_count(1, 2, 10) == 23
    assert pc.mex_count(1, 4, 8) == 7
    assert pc.mex_count(3, 4, 15, "e") == 24


def test_definitional_splits():
    m = pc.mex_count
    for n in range(31):
        assert m(1, 2, n) == m(1, 4, n) + m(3, 4, n) == m(1, 2, n, "o") + m(1, 2, n, "e")
        assert m(1, 4, n) == m(1, 4, n, "o") + m(1, 4, n, "e")
        assert m(3, 4, n) == m(3, 4, n, "o") + m(3, 4, n, "e")
        assert m(1, 2, n, "o") == m(1, 4, n, "o") + m(3, 4, n, "o")
        assert m(1, 2, n, "e") == m(1, 4, n, "e") + m(3, 4, n, "e")


def test_mex_count_rejects_modulus():
    with pytest.raises(ValueError):
        pc.mex_count(1, 3, 5)


def test_distinct_counts():
    assert pc.distinct_count(5) == 3
    assert pc.distinct_count(5, "o") == 1
    assert pc.distinct_count(0) == 1


def test_frobenius_counts():
    assert pc.frobenius_count(2, pc.no_zero) == 0
    # 2,1,1 = (1|2) and 3,1 = (2|1) have no 0; 2,2 = (1,0|1,0) does
    assert pc.frobenius_count(4, pc.no_zero) == 2
    # 4, 3,1 and 2,1,1 avoid 0 in the top row
    assert pc.frobenius_count(4, pc.no_j_in_top_row(0)) == 3


def test_bottom_row_predicate():
    pred = pc.bottom_first_two_differ_by_one
    assert pred(parse_frobenius("3,1|2,1"))
    assert not pred(parse_frobenius("3,1|3,1"))
    # a single column pads the missing entry with 0
    assert pred(parse_frobenius("2|1"))
    assert not pred(parse_frobenius("2|2"))


def test_stat_table():
    t = pc.stat_table("m_1_2", range(2, 16))
    assert list(t.row().values()) == [1, 2, 3, 4, 6, 8, 12, 16, 23, 30, 42, 54, 73, 94]
    t = pc.stat_table("crank_ge", range(5), j=1)
    assert t.row((("j", 1),)) == {n: pc.crank_count(n, lambda m: m >= 1) for n in range(5)}
    with pytest.raises(ValueError):
        pc.stat_table("nope", range(3))


def test_partition_validation():
    with pytest.raises(PartitionError):
        Partition((1, 2))
    with pytest.raises(PartitionError):
        Partition((2, 0))


def test_crank_le0_conventions_at_one():
    # the partition 1 has crank -1, yet the override table gives crank <= 0 total weight 0 at n = 1
    assert pc.crank_le0_count(1, "o", conventions=False) == 1
    assert pc.crank_le0_count(1, "o") == pc.crank_le0_count(1, "e") == 0
    assert pc.crank_le0_count(1) == pc.crank_count(1, lambda m: m <= 0)
    assert pc.crank_le0_count(0, "e") == 1
    with pytest.raises(ValueError):
        pc.crank_le0_count(3, "x")
