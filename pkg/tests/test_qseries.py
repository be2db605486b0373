import pytest
from hypothesis import given, strategies as st

import crankmex.partitions as pc
from crankmex.qseries import (
    Series,
    SeriesError,
    XYSeries,
    ZSeries,
    bilateral_sum,
    carlitz_product,
    carlitz_theta,
    crank_gf_bivariate,
    crank_le0_bivariate,
    fine_sides,
    gaussian_binomial,
    pentagonal_series,
    pochhammer,
    qpoch,
    qpoch_inv,
    series_make,
)


def poly(order, *coeffs):
    return Series(order, coeffs)


def test_geometric_telescopes():
    geo = Series(10, [1] * 11)
    assert series_make(10, [(0, 1), (1, -1)]) * geo == Series.one(10)


def test_inverse():
    assert series_make(3, [(0, 1), (1, -1)]).inverse() == poly(3, 1, 1, 1, 1)
    with pytest.raises(SeriesError):
        series_make(3, [(0, 2)]).inverse()


def test_order_mismatch_fails():
    with pytest.raises(SeriesError):
        Series.one(3) + Series.one(4)


@given(st.lists(st.integers(-5, 5), min_size=9, max_size=9), st.lists(st.integers(-5, 5), min_size=9, max_size=9))
def test_ring_laws(a, b):
    x, y = Series(8, a), Series(8, b)
    assert x * y == y * x
    assert (x + y) - y == x
    assert x * (y + Series.one(8)) == x * y + x


def test_pochhammer_examples():
    assert pochhammer(1, 1, 2, 5) == poly(5, 1, -1, -1, 1)
    expected = Series.from_monomials(12, [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)])
    assert qpoch(None, 12) == expected
    assert pochhammer(2, 2, None, 6, sign=-1) == poly(6, 1, 0, 1, 0, 1, 0, 2)


def test_pochhammer_zero_factor():
    with pytest.raises(SeriesError):
        pochhammer(0, 1, 3, 5)
    with pytest.raises(SeriesError):
        pochhammer(0, 1, 3, 5, sign=-1, invert=True)


def test_euler_product_inverse():
    for N in (0, 5, 30):
        assert qpoch(None, N) * qpoch_inv(None, N) == Series.one(N)
    assert list(qpoch_inv(None, 20).coeffs) == [len(pc.enumerate_partitions(n)) for n in range(21)]


def test_pentagonal_series():
    N = 60
    s = pentagonal_series(N)
    assert s == qpoch(None, N)
    pent = {k * (3 * k - 1) // 2 for k in range(-10, 11)}
    for n, c in enumerate(s.coeffs):
        assert c in (-1, 0, 1)
        assert (c != 0) == (n in pent)


def test_gaussian_binomial():
    assert gaussian_binomial(4, 2) == Series(4, [1, 1, 2, 1, 1])
    assert gaussian_binomial(7, 0) == Series.one(0)
    with pytest.raises(SeriesError):
        gaussian_binomial(3, 4)
    for n in range(9):
        for d in range(n + 1):
            g = gaussian_binomial(n, d)
            assert g == gaussian_binomial(n, n - d)
            assert all(c >= 0 for c in g.coeffs) and g.degree() == d * (n - d)
            N = 20
            assert qpoch_inv(d, N) == g.with_order(N) * pochhammer(n - d + 1, 1, d, N, invert=True)


def test_bilateral_sum():
    assert bilateral_sum(lambda k: k * (2 * k + 1), 10) == Series.from_monomials(
        10, [(0, 1), (1, 1), (3, 1), (6, 1), (10, 1)])
    assert bilateral_sum(lambda k: k * (3 * k - 1) // 2, 40, lambda k: (-1) ** k) == qpoch(None, 40)
    one_sided = bilateral_sum(lambda k: k * (k + 1) // 2, 10, start=0)
    assert one_sided == Series.from_monomials(10, [(0, 1), (1, 1), (3, 1), (6, 1), (10, 1)])


def test_bilateral_rejects_noncoercive():
    with pytest.raises(SeriesError):
        bilateral_sum(lambda k: 0, 5)


def test_series_json_roundtrip():
    s = qpoch(None, 10) * 7
    assert s.to_json()[0] == "7"
    assert Series.from_json(s.to_json()) == s


def test_crank_bivariate_matches_enumeration():
    N = 25
    z = crank_gf_bivariate(N)
    assert z.coefficient(0, 0) == 1
    assert z.coefficient(0, 1) == -1
    for n in range(N + 1):
        for m in range(-N, N + 1):
            assert z.coefficient(m, n) == pc.M(m, n)
            assert z.coefficient(m, n) == z.coefficient(-m, n)
            if n >= 2 and abs(m) > n:
                assert z.coefficient(m, n) == 0


def test_zseries_json_sorted():
    z = crank_gf_bivariate(3)
    data = z.to_json()
    assert data == sorted(data, key=lambda t: (t["q"], t["z"]))
    assert ZSeries.from_json(3, data) == z


def test_crank_le0_bivariate():
    N = 30
    z = crank_le0_bivariate(N)
    assert z.coefficient(0, 0) == 1
    assert z.coefficient(2, 2) == 1
    s = Series(N)
    n = 0
    while n * (n + 1) <= N:
        s += qpoch_inv(n, N, step=2).shift(n * (n + 1))
        n += 1
    assert z.at_z(-1) == s


def test_carlitz():
    lhs, rhs = carlitz_product(30), carlitz_theta(30)
    for side in (lhs, rhs):
        assert side.coefficient(0, 0) == 1
        assert side.coefficient(1, 0) == 1
    assert lhs == rhs
    assert isinstance(lhs, XYSeries)


def test_xy_substitution_bound():
    with pytest.raises(SeriesError):
        carlitz_product(5).substitute(1, 1, 10)


@pytest.mark.parametrize("alpha,beta", [(1, 0), (1, 2), (2, 1), (3, 3)])
def test_fine_sides_agree(alpha, beta):
    A, B, C = fine_sides(alpha, beta, 30)
    assert A == B == C
