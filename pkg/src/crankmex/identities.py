"""Registry of generating-function identities, checked coefficient by coefficient.

Each :class:`IdentityEntry` builds one or more ``(label, lhs, rhs)``
comparisons at a truncation order ``N``. The two sides are
:class:`~crankmex.qseries.Series`, :class:`~crankmex.qseries.ZSeries`,
:class:`~crankmex.qseries.XYSeries` or plain ``{n: count}`` dictionaries
produced by enumeration. :func:`verify` reports the first mismatch,
ordered by q-exponent and then by the other exponent.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import partitions as pc
from .qseries import (
    Series,
    XYSeries,
    ZSeries,
    bilateral_sum,
    carlitz_product,
    carlitz_theta,
    crank_gf_bivariate,
    crank_le0_bivariate,
    fine_sides,
    gaussian_binomial,
    pochhammer,
    qpoch,
    qpoch_inv,
)


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    description: str
    kind: str
    build: Callable
    params: dict = field(default_factory=dict)
    grid: tuple = ({},)

    def resolve(self, params: Optional[dict]) -> dict:
        """Fill defaults and range-check ``params``."""
        params = dict(params or {})
        unknown = set(params) - set(self.params)
        if unknown:
            raise ValueError(f"{self.id}: unknown parameters {sorted(unknown)}")
        out = {}
        for name, (default, lo, hi) in self.params.items():
            value = int(params.get(name, default))
            if (lo is not None and value < lo) or (hi is not None and value > hi):
                raise ValueError(f"{self.id}: {name}={value} outside [{lo}, {hi}]")
            out[name] = value
        return out


@dataclass
class Mismatch:
    exponents: tuple
    lhs: int
    rhs: int
    check: str = ""

    def to_dict(self) -> dict:
        return {"check": self.check, "exponents": list(self.exponents), "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass
class VerifyReport:
    id: str
    params: dict
    order: int
    passed: bool
    first_mismatch: Optional[Mismatch] = None
    ms: int = 0

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "params": dict(self.params),
            "order": self.order,
            "pass": self.passed,
            "first_mismatch": self.first_mismatch.to_dict() if self.first_mismatch else None,
            "ms": self.ms,
        }


# -- comparison ----------------------------------------------------------------


def _coefficients(obj) -> tuple[dict, Callable]:
    """Flatten a comparable object to ``{exponents: coeff}`` plus a sort key."""
    if isinstance(obj, Series):
        return {(n,): c for n, c in enumerate(obj.coeffs) if c}, lambda e: e
    if isinstance(obj, ZSeries):
        return dict(obj.terms), lambda e: (e[1], e[0])
    if isinstance(obj, XYSeries):
        return dict(obj.terms), lambda e: (e[0] + e[1], e[0])
    if isinstance(obj, dict):
        return {(n,): c for n, c in obj.items() if c}, lambda e: e
    raise TypeError(f"cannot compare {type(obj).__name__}")


def compare(lhs, rhs, label: str = "") -> Optional[Mismatch]:
    """Return the first coefficient where ``lhs`` and ``rhs`` differ, or ``None``."""
    if type(lhs) is not type(rhs):
        raise TypeError(f"{label}: comparing {type(lhs).__name__} with {type(rhs).__name__}")
    if not isinstance(lhs, dict) and lhs.order != rhs.order:
        raise TypeError(f"{label}: orders {lhs.order} and {rhs.order} differ")
    if isinstance(lhs, dict) and set(lhs) != set(rhs):
        raise TypeError(f"{label}: count tables cover different ranges")
    a, key = _coefficients(lhs)
    b, _ = _coefficients(rhs)
    diffs = [e for e in set(a) | set(b) if a.get(e, 0) != b.get(e, 0)]
    if not diffs:
        return None
    e = min(diffs, key=key)
    return Mismatch(e, a.get(e, 0), b.get(e, 0), label)


# -- shared builders ------------------------------------------------------------


def _seq(fn, ns) -> dict:
    return {n: fn(n) for n in ns}


def _as_series(N: int, fn) -> Series:
    return Series(N, [fn(n) for n in range(N + 1)])


def crank_ge_series(j: int, N: int) -> Series:
    """``sum_n sum_{m>=j} M(m,n) q^n`` by enumeration (with the n <= 1 conventions)."""
    return _as_series(N, lambda n: pc.crank_count(n, lambda m: m >= j))


def crank_ge_alternating(j: int, N: int) -> Series:
    """``1/(q;q)_inf sum_n (-1)^n q^(n(n+1)/2 + j(n+1))``."""
    s = bilateral_sum(lambda n: n * (n + 1) // 2 + j * (n + 1), N, lambda n: (-1) ** n, start=0)
    return s * qpoch_inv(None, N)


def crank_ge_positive(j: int, N: int) -> Series:
    """``sum_n q^((n+1)(n+j)) / ((q;q)_n (q;q)_(n+j))``."""
    s = Series(N)
    n = 0
    while (n + 1) * (n + j) <= N:
        s += (qpoch_inv(n, N) * qpoch_inv(n + j, N)).shift((n + 1) * (n + j))
        n += 1
    return s


def tj_signed_series(j: int, N: int) -> Series:
    """``(q;q)_inf sum_n q^(n+j) / ((q;q)_n (q;q)_(n+j))``: signed weight of ``T_j``."""
    s = Series(N)
    n = 0
    while n + j <= N:
        s += (qpoch_inv(n, N) * qpoch_inv(n + j, N)).shift(n + j)
        n += 1
    return s * qpoch(None, N)


def garvan_fixed_m(m: int, N: int) -> Series:
    """``1/(q;q)_inf sum_{n>=1} (-1)^(n-1) q^(n(n-1)/2 + n|m|) (1 - q^n)``."""
    a = abs(m)
    s = Series(N)
    n = 1
    while n * (n - 1) // 2 + n * a <= N:
        s += Series.monomial(N, n * (n - 1) // 2 + n * a, (-1) ** (n - 1)).mul_binomial(n, -1)
        n += 1
    return s * qpoch_inv(None, N)


def _mex_residue_series(N: int, first: Callable[[int], int], gap: Callable[[int], int]) -> Series:
    """``1/(q;q)_inf sum_k q^first(k) (1 - q^gap(k))``."""
    s = Series(N)
    k = 0
    while first(k) <= N:
        s += Series.monomial(N, first(k)).mul_binomial(gap(k), -1)
        k += 1
    return s * qpoch_inv(None, N)


def _qq_square_sum(N: int) -> Series:
    """``sum_n q^(n(n+1)) / (q;q)_n^2``."""
    s = Series(N)
    n = 0
    while n * (n + 1) <= N:
        s += (qpoch_inv(n, N) * qpoch_inv(n, N)).shift(n * (n + 1))
        n += 1
    return s


def _q2_sum(N: int) -> Series:
    """``sum_n q^(n(n+1)) / (q^2;q^2)_n``."""
    s = Series(N)
    n = 0
    while n * (n + 1) <= N:
        s += qpoch_inv(n, N, step=2).shift(n * (n + 1))
        n += 1
    return s


def _is_double_pentagonal(n: int) -> Optional[int]:
    """The ``m >= 0`` with ``n = m(3m +- 1)``, or ``None``."""
    m = 0
    while m * (3 * m - 1) <= n:
        if n in (m * (3 * m - 1), m * (3 * m + 1)):
            return m
        m += 1
    return None


def _half_distinct(n: int, parity=None) -> int:
    return pc.distinct_count(n // 2, parity) if n % 2 == 0 else 0


# -- entry builders --------------------------------------------------------------


def _garvan_bivariate(p, N):
    table = ZSeries(N, {(m, n): pc.M(m, n) for n in range(N + 1) for m in range(-n, n + 1)})
    return [("product", crank_gf_bivariate(N), table)]


def _garvan_fixed_m(p, N):
    m = p["m"]
    return [("series", _as_series(N, lambda n: pc.M(m, n)), garvan_fixed_m(m, N)),
            ("bivariate", crank_gf_bivariate(N).z_coefficient(m), garvan_fixed_m(m, N))]


def _crank_symmetry(p, N):
    m = p["m"]
    biv = crank_gf_bivariate(N)
    return [("enumeration", _as_series(N, lambda n: pc.M(m, n)), _as_series(N, lambda n: pc.M(-m, n))),
            ("bivariate", biv.z_coefficient(m), biv.z_coefficient(-m))]


def _qbinomial_excess(p, N):
    n, d = p["n"], p["d"]
    if d > n:
        raise ValueError(f"qbinomial-excess: d={d} exceeds n={n}")
    lhs = qpoch_inv(d, N)
    rhs = gaussian_binomial(n, d).with_order(N) * pochhammer(n - d + 1, 1, d, N, invert=True)
    count = _as_series(N, lambda w: sum(1 for _ in pc.generate_partitions(w, max_length=d)))
    return [("series", lhs, rhs), ("enumeration", count, rhs)]


def _thm12(p, N):
    j = p["j"]
    mirrored = _as_series(N, lambda n: pc.crank_count(n, lambda m: m <= -j))
    return [("crank>=j", crank_ge_series(j, N), crank_ge_alternating(j, N)),
            ("crank<=-j", mirrored, crank_ge_alternating(j, N))]


def _thm21(p, N):
    j = p["j"]
    return [("crank>=j", crank_ge_series(j, N), crank_ge_positive(j, N))]


def _lemma22(p, N):
    j = p["j"]
    return [("series", crank_ge_alternating(j, N), crank_ge_positive(j, N)),
            ("enumeration", crank_ge_series(j, N), crank_ge_positive(j, N))]


def _fine_specialized(p, N):
    j = p["j"]
    lhs = tj_signed_series(j, N)
    checks = [("alternating", lhs, crank_ge_alternating(j, N)),
              ("quadratic", lhs, crank_ge_positive(j, N))]
    # Fine at t = q, b = q^j before multiplying through by q^j / (q;q)_j
    A, B, C = fine_sides(1, j, N)
    checks += [("fine A=B", A, B), ("fine B=C", B, C)]
    W = min(N, 10)
    from .bijections import enumerate_Tj

    signed = {w: sum(t.sign for t in enumerate_Tj(j, w)) for w in range(W + 1)}
    checks.append(("T_j enumeration", signed, {w: lhs[w] for w in range(W + 1)}))
    return checks


def _ewell(p, N):
    lhs = bilateral_sum(lambda n: n * (n + 1) // 2, N, lambda n: (-1) ** (n * (n + 1) // 2 % 2), start=0)
    lhs = lhs * qpoch_inv(None, N)
    rhs = pochhammer(2, 2, None, N, sign=-1)
    count = _as_series(N, _half_distinct)
    return [("series", lhs, rhs), ("enumeration", count, rhs)]


def _mex_gf(a, first, gap, sign):
    def build(p, N):
        enum = _as_series(N, lambda n: pc.mex_count(a, 4, n))
        direct = _mex_residue_series(N, first, gap)
        half_sum = _qq_square_sum(N) + _q2_sum(N) * sign
        return [("definition", enum, direct), ("half-sum", enum * 2, half_sum)]
    return build


def cor_oe_folded(N: int, step: int = 1) -> Series:
    """``sum_k q^(k(2k+1)) (1 + q^(2k+1)) / (-q;q^step)_inf``.

    Only ``step=1`` equals ``(q^2;q^2)_inf``; ``step=2`` is kept to show
    that the ``(-q;q^2)_inf`` denominator does not give an identity.
    """
    s = Series(N)
    k = 0
    while k * (2 * k + 1) <= N:
        s += Series.monomial(N, k * (2 * k + 1)).mul_binomial(2 * k + 1, 1)
        k += 1
    return s * pochhammer(1, step, None, N, sign=-1, invert=True)


def _prop_o13(p, N):
    ns = range(N + 1)
    lhs = _seq(lambda n: pc.mex_count(1, 4, n) - pc.mex_count(3, 4, n), ns)
    return [("difference", lhs, _seq(_half_distinct, ns))]


def _thm_4ways(p, N):
    ns = range(N + 1)
    m = pc.mex_count
    first = _seq(lambda n: m(1, 4, n, "o") - m(3, 4, n, "e"), ns)
    second = _seq(lambda n: m(1, 4, n, "e") - m(3, 4, n, "o"), ns)
    return [("odd length", first, _seq(lambda n: _half_distinct(n, "o"), ns)),
            ("even length", second, _seq(lambda n: _half_distinct(n, "e"), ns))]


def _cor_oe(p, N):
    ns = range(N + 1)
    m = pc.mex_count

    def expected(n):
        k = _is_double_pentagonal(n)
        return 0 if k is None else (-1) ** (k + 1)

    diff = _seq(lambda n: m(1, 2, n, "o") - m(1, 2, n, "e"), ns)
    target = pochhammer(2, 2, None, N)
    # signed by (-1)^length, mex 2k+1 contributes q^(k(2k+1)) / ((-q;q)_2k (-q^(2k+2);q)_inf)
    split = Series(N)
    k = 0
    while k * (2 * k + 1) <= N:
        term = pochhammer(1, 1, 2 * k, N, sign=-1, invert=True) * pochhammer(2 * k + 2, 1, None, N, sign=-1, invert=True)
        split += term.shift(k * (2 * k + 1))
        k += 1
    lhs = cor_oe_folded(N, step=1)
    enum = _as_series(N, lambda n: m(1, 2, n, "e") - m(1, 2, n, "o"))
    return [("counts", diff, _seq(expected, ns)), ("gf", lhs, target),
            ("gf split", split, target), ("enumeration", enum, target)]


def _carlitz(p, N):
    D = p["degree"]
    checks = [("xy", carlitz_product(D), carlitz_theta(D))]
    lhs = bilateral_sum(lambda k: k * (2 * k + 1), N) * qpoch_inv(None, N, step=4)
    rhs = pochhammer(3, 4, None, N, sign=-1) * pochhammer(1, 4, None, N, sign=-1)
    checks.append(("x=q^3,y=q", lhs, rhs))
    distinct_odd = _as_series(N, lambda n: sum(1 for q in pc.generate_partitions(n, distinct=True)
                                                 if all(x % 2 for x in q.parts)))
    checks.append(("distinct odd parts", distinct_odd, rhs))
    for alpha, beta in ((1, 1), (2, 1), (1, 2), (3, 1)):
        order = min(N, min(alpha, beta) * (D + 1) - 1)
        checks.append((f"x=q^{alpha},y=q^{beta}", carlitz_product(D).substitute(alpha, beta, order),
                       carlitz_theta(D).substitute(alpha, beta, order)))
    return checks


def _parity_m12(p, N):
    ns = range(N + 1)
    return [("parity", _seq(lambda n: pc.mex_count(1, 2, n) % 2, ns),
             _seq(lambda n: int(_is_double_pentagonal(n) is not None), ns))]


def _oddstats(p, N):
    m = pc.mex_count
    ks = range((N - 1) // 2 + 1)
    base = _seq(lambda k: m(1, 4, 2 * k + 1), ks)
    return [("m34", base, _seq(lambda k: m(3, 4, 2 * k + 1), ks)),
            ("m12 odd", base, _seq(lambda k: m(1, 2, 2 * k + 1, "o"), ks)),
            ("m12 even", base, _seq(lambda k: m(1, 2, 2 * k + 1, "e"), ks))]


def _huh_kim(p, N):
    ns = range(N + 1)
    checks = [("even", _seq(lambda n: pc.crank_le0_count(n, "e"), ns), _seq(lambda n: pc.mex_count(1, 4, n), ns)),
              ("odd", _seq(lambda n: pc.crank_le0_count(n, "o"), ns), _seq(lambda n: pc.mex_count(3, 4, n), ns))]
    biv = crank_le0_bivariate(N)
    table = {(k, n): c for n in ns for k, c in pc.crank_le0_lengths(n).items()}
    checks.append(("bivariate", biv, ZSeries(N, table)))
    middle = Series(N)
    n = 0
    while n * (n + 1) <= N:
        middle += (pochhammer(1, 1, n, N, sign=-1, invert=True) * qpoch_inv(n, N)).shift(n * (n + 1))
        n += 1
    checks += [("z=-1", biv.at_z(-1), middle), ("z=-1 collapsed", middle, _q2_sum(N))]
    return checks


def _cor38(p, N):
    ns = range(N + 1)
    diff = _seq(lambda n: pc.crank_le0_count(n, "e") - pc.crank_le0_count(n, "o"), ns)
    s = Series(N)
    d = 0
    while d * d + d <= N:
        s += qpoch_inv(d, N, step=2).shift(d * d + d)
        d += 1
    return [("counts", diff, _seq(_half_distinct, ns)),
            ("gf", s, pochhammer(2, 2, None, N, sign=-1))]


def _frobenius_crank(p, N):
    true_zero = lambda n: pc.crank_count(n, lambda m: m == 0, conventions=False)
    gf = Series.one(N)
    d = 1
    while d * d + 2 * d <= N:
        gf += (qpoch_inv(d, N) * pochhammer(2, 1, d - 1, N, invert=True)).shift(d * d + 2 * d)
        d += 1
    ns = range(N + 1)
    a = lambda n: pc.frobenius_count(n, pc.no_zero)
    checks = [
        ("crank-0 gf", _as_series(N, true_zero), gf),
        ("a(n)-a(n-1)", _seq(lambda n: pc.M(0, n), ns), _seq(lambda n: a(n) - a(n - 1), ns)),
        ("bottom row", _seq(true_zero, range(1, N + 1)),
         _seq(lambda n: pc.frobenius_count(n, pc.no_zero, pc.bottom_first_two_differ_by_one), range(1, N + 1))),
    ]
    for j in range(5):
        checks.append((f"top row j={j}", _seq(lambda n: pc.crank_count(n, lambda m: m >= j), ns),
                       _seq(lambda n: pc.frobenius_count(n - j, pc.no_j_in_top_row(j)), ns)))
    return checks


_J = {"j": (0, 0, None)}
_J_GRID = tuple({"j": j} for j in range(6))
_M = {"m": (0, None, None)}
_M_GRID = tuple({"m": m} for m in range(-8, 9))


def _build_catalog() -> list[IdentityEntry]:
    E = IdentityEntry
    return [
        E("garvan-bivariate", "two-variable crank generating function", "series-vs-enumeration", _garvan_bivariate),
        E("garvan-fixed-m", "crank generating function at fixed m", "series-vs-enumeration",
          _garvan_fixed_m, _M, _M_GRID),
        E("crank-symmetry", "M(m,n) = M(-m,n)", "count-vs-count", _crank_symmetry, _M, _M_GRID),
        E("qbinomial-excess", "1/(q;q)_d = [n,d] / (q^(n-d+1);q)_d", "series-vs-series",
          _qbinomial_excess, {"n": (4, 0, None), "d": (2, 0, None)},
          tuple({"n": n, "d": d} for n in range(9) for d in range(n + 1))),
        E("thm1.2", "crank >= j, alternating form", "series-vs-enumeration", _thm12, _J, _J_GRID),
        E("thm2.1", "crank >= j, positive form", "series-vs-enumeration", _thm21, _J, _J_GRID),
        E("lemma2.2", "alternating form = positive form", "series-vs-series", _lemma22, _J, _J_GRID),
        E("fine-specialized", "Fine's identity at t=q, b=q^j", "series-vs-series", _fine_specialized, _J, _J_GRID),
        E("ewell", "1/(q;q)_inf sum (-q)^(n(n+1)/2) = (-q^2;q^2)_inf", "series-vs-series", _ewell),
        E("m14-gf", "generating function of m_{1,4}", "series-vs-enumeration",
          _mex_gf(1, lambda k: 2 * k * (4 * k + 1), lambda k: 4 * k + 1, 1)),
        E("m34-gf", "generating function of m_{3,4}", "series-vs-enumeration",
          _mex_gf(3, lambda k: (2 * k + 1) * (4 * k + 3), lambda k: 4 * k + 3, -1)),
        E("prop-o13", "m_{1,4} - m_{3,4} = q(n/2)", "count-vs-count", _prop_o13),
        E("thm-4ways", "length-parity refinement of m_{1,4} vs m_{3,4}", "count-vs-count", _thm_4ways),
        E("cor-oe", "m^o_{1,2} - m^e_{1,2} at doubled pentagonal numbers", "count-vs-count", _cor_oe),
        E("carlitz", "Carlitz product = Ramanujan theta series", "series-vs-series", _carlitz,
          {"degree": (30, 0, None)}, ({"degree": 30},)),
        E("parity-m12", "m_{1,2}(n) odd iff n = m(3m +- 1)", "count-vs-count", _parity_m12),
        E("oddstats", "odd-n coincidences of mex statistics", "count-vs-count", _oddstats),
        E("huh-kim", "crank <= 0 by length parity vs m_{1,4}, m_{3,4}", "count-vs-count", _huh_kim),
        E("cor3.8", "crank <= 0 even minus odd length = q(n/2)", "count-vs-count", _cor38),
        E("frobenius-crank", "crank counts vs Frobenius-symbol counts", "count-vs-count", _frobenius_crank),
    ]


_CATALOG = _build_catalog()
_BY_ID = {e.id: e for e in _CATALOG}


def catalog() -> list[IdentityEntry]:
    return list(_CATALOG)


def get_entry(identity_id: str) -> IdentityEntry:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def check_entry(entry: IdentityEntry, params: Optional[dict] = None, order: int = 40) -> VerifyReport:
    """Run every comparison of ``entry`` and report the first mismatch."""
    if order < 1:
        raise ValueError("order must be at least 1")
    resolved = entry.resolve(params)
    start = time.perf_counter()
    mismatch = None
    for label, lhs, rhs in entry.build(resolved, order):
        mismatch = compare(lhs, rhs, label)
        if mismatch:
            break
    ms = int((time.perf_counter() - start) * 1000)
    return VerifyReport(entry.id, resolved, order, mismatch is None, mismatch, ms)


def verify(identity_id: str, params: Optional[dict] = None, order: int = 40) -> VerifyReport:
    return check_entry(get_entry(identity_id), params, order)


def verify_all(order: int = 40, grids: Optional[dict] = None, ids=None) -> list[VerifyReport]:
    """Verify every entry over its parameter grid; reports come back in catalog order.

    ``grids`` maps an id to a replacement list of parameter dicts; ``ids``
    restricts the run to a subset of the catalog.
    """
    grids = grids or {}
    reports = []
    for entry in _CATALOG:
        if ids is not None and entry.id not in ids:
            continue
        for params in grids.get(entry.id, entry.grid):
            reports.append(check_entry(entry, params, order))
    return reports
