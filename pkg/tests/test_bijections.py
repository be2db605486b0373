from collections import Counter

import pytest
from hypothesis import given, strategies as st

import crankmex.bijections as bj
from crankmex.bijections import BijectionError, OddTriple, parse_triple
from crankmex.partitions import EMPTY, enumerate_partitions, frobenius, parse_partition
from crankmex.suites import SUITES

P = parse_partition


# -- T_j and the first cancellation ------------------------------------------------


def test_tj_weight_five_listing():
    got = {str(t) for t in bj.enumerate_Tj(3, 5)}
    listed = {";3,2;", ";3,1,1;", "2;3;", "1;3,1;", ";4,1;", "1;4;", ";4;1", ";5;"}
    assert got == listed


def test_tj_validation():
    with pytest.raises(BijectionError):
        parse_triple(";2;", 3)
    with pytest.raises(BijectionError):
        parse_triple(";4;2", 3)
    with pytest.raises(BijectionError):
        parse_triple("2,2;4;", 0)
    with pytest.raises(BijectionError):
        parse_triple("1;;", 1)


def test_t0_includes_empty_kappa():
    assert [str(t) for t in bj.enumerate_Tj(0, 0)] == [";;"]
    assert {str(t) for t in bj.enumerate_Tj(0, 1)} == {";1;", "1;;"}


def test_first_cancellation_examples():
    assert bj.first_cancellation(parse_triple("2;3;", 3)) == parse_triple(";3,2;", 3)
    for text in (";5;", ";4;1"):
        t = parse_triple(text, 3)
        assert bj.first_cancellation(t) == t


def test_peak_reduction_examples():
    assert bj.peak_reduction(parse_triple(";5;", 3)) == (P("2"), [3])
    assert bj.peak_reduction(parse_triple(";4;1", 3)) == (P("1,1"), [3])
    with pytest.raises(BijectionError):
        bj.peak_reduction(parse_triple("2;3;", 3))


def test_peak_reduction_inverts_on_fixed_points():
    for j in range(4):
        for w in range(13):
            for t in bj.enumerate_Tj(j, w):
                if bj.is_first_cancellation_fixed(t):
                    p, stairs = bj.peak_reduction(t)
                    assert p.weight + sum(stairs) == w
                    assert bj.peak_restore(p, j, len(stairs)) == t


def test_peak_reduction_signed_count():
    from crankmex.identities import crank_ge_alternating

    for j in range(4):
        W = 12
        oracle = crank_ge_alternating(j, W)
        counts = Counter()
        for w in range(W + 1):
            for t in bj.enumerate_Tj(j, w):
                if bj.is_first_cancellation_fixed(t):
                    counts[w] += t.sign
        assert [counts[w] for w in range(W + 1)] == list(oracle.coeffs)


# -- k-th excess --------------------------------------------------------------------


def test_kth_excess_examples():
    assert bj.kth_excess_split(P("7,1"), 5, 2) == (P("5"), P("2,1"))
    assert bj.kth_excess_merge(P("5"), P("2,1"), 5, 2) == P("7,1")
    assert bj.kth_excess_split(EMPTY, 4, 2) == (EMPTY, EMPTY)


def test_kth_excess_roundtrip():
    n = 6
    for d in range(4):
        for w in range(13):
            for p in enumerate_partitions(w):
                if len(p) > d:
                    continue
                high, low = bj.kth_excess_split(p, n, d)
                assert all(n - d < x <= n for x in high.parts)
                assert len(low) <= d and all(x <= n - d for x in low.parts)
                assert high.weight + low.weight == w
                assert bj.kth_excess_merge(high, low, n, d) == p


def test_kth_excess_rejects_long_partition():
    with pytest.raises(BijectionError):
        bj.kth_excess_split(P("3,2,1"), 5, 2)


# -- second cancellation ------------------------------------------------------------


def test_adjust_is_bijection_onto_adjusted_set():
    for j in range(4):
        domain = [t for w in range(11) for t in bj.enumerate_Tj(j, w)]
        images = [bj.second_cancellation_adjust(t) for t in domain]
        assert len(set(images)) == len(images)
        assert set(images) == {a for w in range(11) for a in bj.enumerate_adjusted(j, w)}
        assert all(bj.second_cancellation_restore(a) == t for a, t in zip(images, domain))
        assert all(a.weight == t.weight and a.sign == t.sign for a, t in zip(images, domain))


def test_second_cancellation_weight_one():
    # (empty; 1; empty) is cancelled against (1; empty; empty) once adjusted
    a = bj.second_cancellation_adjust(parse_triple(";1;", 0))
    b = bj.second_cancellation_adjust(parse_triple("1;;", 0))
    assert bj.second_cancellation(a) == b


# -- Franklin ---------------------------------------------------------------------


def test_franklin_examples():
    assert bj.franklin(P("4,1")) == P("5")
    assert bj.franklin(P("5")) == P("4,1")
    assert bj.franklin(P("3,2")) == P("3,2")
    with pytest.raises(BijectionError):
        bj.franklin(P("2,2"))


@given(st.integers(0, 30).flatmap(lambda n: st.sampled_from(
    [p for p in enumerate_partitions(n) if len(set(p.parts)) == len(p)])))
def test_franklin_involution_property(p):
    q = bj.franklin(p)
    assert bj.franklin(q) == p and q.weight == p.weight
    if q != p:
        assert len(q) % 2 != len(p) % 2


def test_distinct_signed_sum_is_pentagonal():
    from crankmex.qseries import pentagonal_series

    s = pentagonal_series(30)
    for n in range(31):
        total = sum((-1) ** len(p) for p in enumerate_partitions(n) if len(set(p.parts)) == len(p))
        assert total == s[n]


# -- odd triples and crank <= 0 ---------------------------------------------------------


def test_cor36_examples():
    assert bj.cor36_involution(OddTriple(EMPTY, P("3"), P("1"))) == OddTriple(EMPTY, P("3,1"), EMPTY)
    assert bj.cor36_involution(OddTriple(EMPTY, P("1"), P("3"))) == OddTriple(EMPTY, EMPTY, P("3,1"))
    fixed = OddTriple(P("4,2"), EMPTY, EMPTY)
    assert bj.cor36_involution(fixed) == fixed
    with pytest.raises(BijectionError):
        OddTriple(P("3"), EMPTY, EMPTY)


def test_cor38_examples():
    assert bj.cor38_involution(P("2,1,1")) == P("3,1")
    assert bj.cor38_involution(P("3,1")) == P("2,1,1")
    # d = 1 and one part 1 below the square leaves pi and nu empty
    assert bj.is_cor38_fixed(P("1,1"))
    assert bj.cor38_fixedpoint_map(P("1,1")) == P("2")
    with pytest.raises(BijectionError):
        bj.cor38_involution(P("3"))


def test_cor38_fixed_point_images():
    for n in range(21):
        fixed = [p for p in bj.crank_le0_partitions_upto(n) if p.weight == n and bj.is_cor38_fixed(p)]
        images = {bj.cor38_fixedpoint_map(p) for p in fixed}
        expected = {q for q in enumerate_partitions(n)
                    if len(set(q.parts)) == len(q) and all(x % 2 == 0 for x in q.parts)}
        if n == 1:
            assert not fixed
        else:
            assert images == expected
    assert len({bj.cor38_fixedpoint_map(p) for p in bj.crank_le0_partitions_upto(8)
                if p.weight == 8 and bj.is_cor38_fixed(p)}) == 2


# -- Frobenius maps ---------------------------------------------------------------


def test_crank0_examples():
    assert bj.crank0_map(P("3,1")) == P("3,1")
    assert bj.crank0_map(P("4,3,1,1")) == P("4,3,2")
    with pytest.raises(BijectionError, match="crank"):
        bj.crank0_map(P("2,2"))
    assert bj.crank0_inverse(P("4,3,2")) == P("4,3,1,1")


def test_crank0_image_counts():
    from crankmex.partitions import M

    for n in range(2, 21):
        assert len({bj.crank0_map(p) for p in bj.crank0_domain(n)}) == M(0, n)


def test_crank_le_neg_j_examples():
    assert bj.crank_le_neg_j_map(P("2,1,1"), 0) == P("3,1")
    assert bj.crank_le_neg_j_map(P("1"), 1) == EMPTY
    with pytest.raises(BijectionError):
        bj.crank_le_neg_j_map(P("3,1"), 1)


def test_crank_le_neg_j_inverse_roundtrip():
    for j in range(5):
        for n in range(16):
            for p in bj.crank_le_neg_j_domain(n, j):
                q = bj.crank_le_neg_j_map(p, j)
                assert bj.crank_le_neg_j_inverse(q, j) == p
                assert j not in frobenius(q).top


# -- harness self-tests -------------------------------------------------------------


def test_check_map_flags_broken_map():
    domain = bj.distinct_partitions_upto(6)
    report = bj.check_map("shift", domain, lambda p: P(str(p.weight)) if p.parts else p,
                          weight=lambda p: p.weight, sign=lambda p: (-1) ** len(p))
    assert not report.involution_ok and not report.ok


def test_check_injection_flags_collision():
    report = bj.check_injection("collapse", enumerate_partitions(4), lambda p: EMPTY, [EMPTY],
                                weight_shift=-4)
    assert not report.injective_ok


@pytest.mark.parametrize("name,j,w", [
    ("franklin", 0, 20), ("first_cancellation", 2, 9), ("second_cancellation", 1, 9),
    ("cor36", 0, 10), ("cor38", 0, 14), ("crank0", 0, 14), ("crank_le_neg_j", 3, 14),
])
def test_suites_small(name, j, w):
    report = SUITES[name].check(w, j)
    assert report.ok, report.to_dict()
