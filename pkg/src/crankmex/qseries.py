"""Truncated power series with exact integer coefficients.

Three flavours are provided:

* :class:`Series` -- univariate in ``q``, coefficients of ``q^0 .. q^N``;
* :class:`ZSeries` -- Laurent in ``z``, truncated in ``q`` (crank generating functions);
* :class:`XYSeries` -- bivariate in ``x, y`` truncated by total degree.

The order ``N`` is fixed at construction and every binary operation checks
that both operands agree on it.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Optional


class SeriesError(ValueError):
    pass


def _check_same_order(a, b):
    if a.order != b.order:
        raise SeriesError(f"order mismatch: {a.order} vs {b.order}")


class Series:
    """Power series in ``q`` truncated after ``q^order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int] = ()):
        if order < 0:
            raise SeriesError("order must be nonnegative")
        cs = list(coeffs)[: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def from_monomials(cls, order: int, monomials: Iterable[tuple]) -> "Series":
        """Sum of ``c * q^e`` over ``(e, c)`` pairs; terms beyond the order are dropped."""
        cs = [0] * (order + 1)
        for e, c in monomials:
            if e < 0:
                raise SeriesError("negative q-exponent")
            if e <= order:
                cs[e] += c
        return cls(order, cs)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls(order, [1])

    @classmethod
    def monomial(cls, order: int, exponent: int, coeff: int = 1) -> "Series":
        return cls.from_monomials(order, [(exponent, coeff)])

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*q^{e}" for e, c in enumerate(self.coeffs) if c]
        return f"Series(order={self.order}: {' + '.join(terms) or '0'})"

    def __neg__(self):
        return Series(self.order, [-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = Series(self.order, [other])
        if not isinstance(other, Series):
            return NotImplemented
        _check_same_order(self, other)
        return Series(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Series(self.order, [other])
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Series(self.order, [other * c for c in self.coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        _check_same_order(self, other)
        N = self.order
        out = [0] * (N + 1)
        b = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a:
                for k in range(N + 1 - i):
                    if b[k]:
                        out[i + k] += a * b[k]
        return Series(N, out)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        """Multiplicative inverse; only defined when the constant term is +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise SeriesError(f"constant term {c0} is not a unit")
        N = self.order
        a = self.coeffs
        inv = [0] * (N + 1)
        inv[0] = c0
        for n in range(1, N + 1):
            s = sum(a[k] * inv[n - k] for k in range(1, n + 1) if a[k])
            inv[n] = -s * c0
        return Series(N, inv)

    def __truediv__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self * other.inverse()

    def shift(self, k: int) -> "Series":
        """Multiply by ``q^k`` (k >= 0)."""
        if k < 0:
            raise SeriesError("negative shift")
        return Series(self.order, [0] * k + list(self.coeffs))

    def mul_binomial(self, exponent: int, coeff: int = -1) -> "Series":
        """Multiply by ``1 + coeff * q^exponent``."""
        if exponent <= 0:
            raise SeriesError("binomial factor needs a positive exponent")
        cs = list(self.coeffs)
        for n in range(self.order, exponent - 1, -1):
            cs[n] += coeff * cs[n - exponent]
        return Series(self.order, cs)

    def div_binomial(self, exponent: int, coeff: int = -1) -> "Series":
        """Divide by ``1 + coeff * q^exponent``."""
        if exponent <= 0:
            raise SeriesError("binomial factor needs a positive exponent")
        cs = list(self.coeffs)
        for n in range(exponent, self.order + 1):
            cs[n] -= coeff * cs[n - exponent]
        return Series(self.order, cs)

    def with_order(self, order: int) -> "Series":
        """Re-truncate (or zero-extend) to a different order."""
        return Series(order, self.coeffs)

    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient, -1 for zero."""
        for e in range(self.order, -1, -1):
            if self.coeffs[e]:
                return e
        return -1

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list) -> "Series":
        return cls(len(data) - 1, [int(c) for c in data])


def series_make(order: int, monomials: Iterable[tuple]) -> Series:
    return Series.from_monomials(order, monomials)


def _factor_exponents(base: int, step: int, count, order: int):
    if step < 1:
        raise SeriesError("step must be positive")
    if base < 0:
        raise SeriesError("base exponent must be nonnegative")
    infinite = count is None or count == math.inf
    i = 0
    while infinite or i < count:
        e = base + step * i
        if e > order:
            break
        yield e
        i += 1


def pochhammer(base: int, step: int, count, order: int, sign: int = 1, invert: bool = False) -> Series:
    """``(a; q^step)_count`` with ``a = sign * q^base``, truncated at ``order``.

    This is the product of ``1 - sign * q^(base + step*i)`` for ``i < count``;
    ``count=None`` (or ``math.inf``) gives the infinite product, which only
    needs the finitely many factors below the truncation order. With
    ``invert=True`` the reciprocal is returned.
    """
    if sign not in (1, -1):
        raise SeriesError("sign must be +1 or -1")
    s = Series.one(order)
    for e in _factor_exponents(base, step, count, order):
        if e == 0:
            if sign == 1:
                raise SeriesError("factor 1 - q^0 vanishes")
            if invert:
                raise SeriesError("factor 1 + q^0 = 2 is not a unit")
            s = s * 2
            continue
        s = s.div_binomial(e, -sign) if invert else s.mul_binomial(e, -sign)
    return s


def qpoch(n, order: int, step: int = 1) -> Series:
    """``(q^step; q^step)_n``; ``n=None`` for the infinite product."""
    return pochhammer(step, step, n, order)


def qpoch_inv(n, order: int, step: int = 1) -> Series:
    """``1 / (q^step; q^step)_n``."""
    return pochhammer(step, step, n, order, invert=True)


def gaussian_binomial(n: int, d: int, order: Optional[int] = None) -> Series:
    """The Gaussian polynomial ``[n choose d]`` as a series of order >= d(n-d)."""
    if not 0 <= d <= n:
        raise SeriesError(f"d={d} out of range for n={n}")
    deg = d * (n - d)
    N = deg if order is None else order
    if N < deg:
        raise SeriesError(f"order {N} below the degree {deg}")
    return qpoch(n, N) * qpoch_inv(d, N) * qpoch_inv(n - d, N)


def bilateral_sum(exponent: Callable[[int], int], order: int,
                  sign: Optional[Callable[[int], int]] = None, start: Optional[int] = None) -> Series:
    """``sum_k sign(k) q^exponent(k)`` over all integers k (or k >= start).

    The range of k is found by scanning outward from 0 (or ``start``) in each
    direction until three consecutive exponents exceed the order, so the
    exponent must grow away from the starting point.
    """
    if sign is None:
        sign = lambda k: 1
    cs = [0] * (order + 1)
    limit = 4 * (order + 16)
    k0 = 0 if start is None else start
    directions = [1] if start is not None else [1, -1]
    for direction in directions:
        k = k0 if direction == 1 else k0 - 1
        misses = 0
        while misses < 3:
            if abs(k - k0) > limit:
                raise SeriesError("exponent function does not grow; sum does not truncate")
            e = exponent(k)
            if e < 0:
                raise SeriesError(f"negative exponent {e} at k={k}")
            if e <= order:
                cs[e] += sign(k)
                misses = 0
            else:
                misses += 1
            k += direction
    return Series(order, cs)


def pentagonal_series(order: int) -> Series:
    """``sum_k (-1)^k q^(k(3k-1)/2)``, the expansion of ``(q;q)_inf``."""
    return bilateral_sum(lambda k: k * (3 * k - 1) // 2, order, lambda k: (-1) ** (k % 2))


# -- ZSeries ------------------------------------------------------------------


class ZSeries:
    """Series in ``z^{+-1}`` and ``q``, truncated after ``q^order``.

    Stored sparsely as ``{(m, n): c}`` with ``|m| <= order`` and ``0 <= n <= order``.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Optional[dict] = None):
        self.order = order
        clean = {}
        for (m, n), c in (terms or {}).items():
            if n < 0:
                raise SeriesError("negative q-exponent")
            if n > order or not c:
                continue
            if abs(m) > order:
                raise SeriesError(f"z-exponent {m} outside [-{order}, {order}]")
            clean[(m, n)] = c
        self.terms = clean

    def coefficient(self, m: int, n: int) -> int:
        return self.terms.get((m, n), 0)

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __repr__(self):
        return f"ZSeries(order={self.order}, {len(self.terms)} terms)"

    def __add__(self, other):
        _check_same_order(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return ZSeries(self.order, out)

    def __neg__(self):
        return ZSeries(self.order, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ZSeries(self.order, {k: other * c for k, c in self.terms.items()})
        _check_same_order(self, other)
        out = {}
        N = self.order
        for (m1, n1), c1 in self.terms.items():
            for (m2, n2), c2 in other.terms.items():
                if n1 + n2 <= N:
                    key = (m1 + m2, n1 + n2)
                    out[key] = out.get(key, 0) + c1 * c2
        return ZSeries(N, out)

    def at_z(self, value: int) -> Series:
        """Substitute an integer for ``z`` (``z = +-1`` for Laurent terms)."""
        cs = [0] * (self.order + 1)
        for (m, n), c in self.terms.items():
            if m < 0 and value not in (1, -1):
                raise SeriesError("negative z-power needs z = +-1")
            cs[n] += c * (value ** m if m >= 0 else value ** (-m))
        return Series(self.order, cs)

    def z_coefficient(self, m: int) -> Series:
        """The series in ``q`` multiplying ``z^m``."""
        cs = [0] * (self.order + 1)
        for (k, n), c in self.terms.items():
            if k == m:
                cs[n] += c
        return Series(self.order, cs)

    def to_json(self) -> list:
        return [{"z": m, "q": n, "c": str(c)}
                for (m, n), c in sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0]))]

    @classmethod
    def from_json(cls, order: int, data: list) -> "ZSeries":
        return cls(order, {(d["z"], d["q"]): int(d["c"]) for d in data})


class _ZGrid:
    """Dense working array for ZSeries builders: ``rows[n][m + N]``."""

    def __init__(self, N: int):
        self.N = N
        self.rows = [[0] * (2 * N + 1) for _ in range(N + 1)]

    def add(self, m: int, n: int, c: int):
        if n <= self.N:
            self.rows[n][m + self.N] += c

    def geometric(self, k: int, dz: int):
        """Multiply by ``1 / (1 - z^dz q^k)`` = ``sum_i z^(i dz) q^(i k)``."""
        N, rows = self.N, self.rows
        for n in range(k, N + 1):
            src, dst = rows[n - k], rows[n]
            if dz == 0:
                for i in range(2 * N + 1):
                    dst[i] += src[i]
            elif dz > 0:
                for i in range(dz, 2 * N + 1):
                    dst[i] += src[i - dz]
            else:
                for i in range(0, 2 * N + 1 + dz):
                    dst[i] += src[i - dz]

    def to_zseries(self) -> ZSeries:
        N = self.N
        return ZSeries(N, {(i - N, n): c for n, row in enumerate(self.rows) for i, c in enumerate(row) if c})


def crank_gf_bivariate(order: int) -> ZSeries:
    """``(q;q)_inf / ((zq;q)_inf (q/z;q)_inf)`` expanded to ``q^order``."""
    N = order
    g = _ZGrid(N)
    for n, c in enumerate(qpoch(None, N).coeffs):
        g.add(0, n, c)
    for k in range(1, N + 1):
        g.geometric(k, 1)
        g.geometric(k, -1)
    return g.to_zseries()


def crank_le0_bivariate(order: int) -> ZSeries:
    """``sum_n z^(2n) q^(n(n+1)) / ((zq;q)_n (q;q)_n)``; ``z`` marks the number of parts."""
    N = order
    total = _ZGrid(N)
    n = 0
    while n * (n + 1) <= N:
        g = _ZGrid(N)
        g.add(2 * n, n * (n + 1), 1)
        for k in range(1, n + 1):
            g.geometric(k, 1)
            g.geometric(k, 0)
        for r in range(N + 1):
            total.rows[r] = [a + b for a, b in zip(total.rows[r], g.rows[r])]
        n += 1
    return total.to_zseries()


# -- XYSeries -----------------------------------------------------------------


class XYSeries:
    """Series in ``x, y`` (nonnegative exponents) truncated at total degree ``total_order``."""

    __slots__ = ("order", "terms")

    def __init__(self, total_order: int, terms: Optional[dict] = None):
        self.order = total_order
        clean = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise SeriesError("negative exponent in XYSeries")
            if a + b <= total_order and c:
                clean[(a, b)] = c
        self.terms = clean

    @property
    def total_order(self) -> int:
        return self.order

    @classmethod
    def one(cls, total_order: int) -> "XYSeries":
        return cls(total_order, {(0, 0): 1})

    def coefficient(self, a: int, b: int) -> int:
        return self.terms.get((a, b), 0)

    def __eq__(self, other):
        if not isinstance(other, XYSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __repr__(self):
        return f"XYSeries(total_order={self.order}, {len(self.terms)} terms)"

    def __add__(self, other):
        _check_same_order(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return XYSeries(self.order, out)

    def __mul__(self, other):
        _check_same_order(self, other)
        out = {}
        D = self.order
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                if a1 + a2 + b1 + b2 <= D:
                    key = (a1 + a2, b1 + b2)
                    out[key] = out.get(key, 0) + c1 * c2
        return XYSeries(D, out)

    def mul_binomial(self, a: int, b: int, coeff: int) -> "XYSeries":
        """Multiply by ``1 + coeff * x^a y^b``."""
        out = dict(self.terms)
        for (i, k), c in self.terms.items():
            if i + a + k + b <= self.order:
                key = (i + a, k + b)
                out[key] = out.get(key, 0) + coeff * c
        return XYSeries(self.order, out)

    def substitute(self, alpha: int, beta: int, order: int) -> Series:
        """Set ``x = q^alpha``, ``y = q^beta``.

        Only exact when every dropped term (total degree > D) lands above
        ``q^order``, i.e. ``order < min(alpha, beta) * (D + 1)``.
        """
        if alpha < 1 or beta < 1:
            raise SeriesError("substitution exponents must be positive")
        if order >= min(alpha, beta) * (self.order + 1):
            raise SeriesError(f"total degree {self.order} too small for q-order {order}")
        return Series.from_monomials(order, ((alpha * a + beta * b, c) for (a, b), c in self.terms.items()))


def carlitz_product(total_order: int) -> XYSeries:
    """``prod_{n>=1} (1 - x^n y^n)(1 + x^n y^(n-1))(1 + x^(n-1) y^n)``."""
    D = total_order
    s = XYSeries.one(D)
    n = 1
    while 2 * n - 1 <= D:
        s = s.mul_binomial(n, n, -1).mul_binomial(n, n - 1, 1).mul_binomial(n - 1, n, 1)
        n += 1
    return s


def carlitz_theta(total_order: int) -> XYSeries:
    """``sum_{n in Z} x^(n(n+1)/2) y^(n(n-1)/2)`` (total degree ``n^2``)."""
    terms = {}
    n = 0
    while n * n <= total_order:
        for k in {n, -n}:
            key = (k * (k + 1) // 2, k * (k - 1) // 2)
            terms[key] = terms.get(key, 0) + 1
        n += 1
    return XYSeries(total_order, terms)


def fine_sides(alpha: int, beta: int, order: int) -> tuple:
    """The three members of Fine's identity at ``t = q^alpha``, ``b = q^beta``.

    Returns ``(A, B, C)`` with

    * ``A = (t;q)_inf sum_n t^n / ((q;q)_n (bq;q)_n)``
    * ``B = 1/(bq;q)_inf sum_n (t;q)_n/(q;q)_n (-b)^n q^(n(n+1)/2)``
    * ``C = sum_n (bt)^n q^(n^2) / ((q;q)_n (bq;q)_n)``
    """
    if alpha < 1 or beta < 0:
        raise SeriesError("need alpha >= 1 and beta >= 0")
    N = order
    A = Series(N)
    n = 0
    while alpha * n <= N:
        A += (qpoch_inv(n, N) * pochhammer(beta + 1, 1, n, N, invert=True)).shift(alpha * n)
        n += 1
    A = A * pochhammer(alpha, 1, None, N)

    B = Series(N)
    n = 0
    while n * (n + 1) // 2 + beta * n <= N:
        term = pochhammer(alpha, 1, n, N) * qpoch_inv(n, N)
        B += term.shift(n * (n + 1) // 2 + beta * n) * (-1) ** n
        n += 1
    B = B * pochhammer(beta + 1, 1, None, N, invert=True)

    C = Series(N)
    n = 0
    while n * n + (alpha + beta) * n <= N:
        C += (qpoch_inv(n, N) * pochhammer(beta + 1, 1, n, N, invert=True)).shift(n * n + (alpha + beta) * n)
        n += 1
    return A, B, C
