"""Executable versions of the bijections and sign-reversing involutions.

Each involution ``f`` comes in two flavours: ``f(x)`` returns the image and
``f_move(x)`` additionally returns a :class:`Move` describing what moved
(``None`` at a fixed point); the CLI uses the latter for traces.
:func:`check_map` and :func:`check_injection` verify the advertised
properties by exhausting a finite domain.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, NamedTuple, Optional

from .partitions import (
    EMPTY,
    Partition,
    conjugate,
    crank,
    durfee_rect,
    enumerate_partitions,
    frobenius,
    generate_partitions,
    is_distinct,
    no_j_in_top_row,
    no_zero,
    bottom_first_two_differ_by_one,
    omega,
)

INF = math.inf


class BijectionError(ValueError):
    """Input outside the domain of a map, or a map produced an invalid object."""


class Move(NamedTuple):
    part: int
    source: str
    target: str


def _smallest(parts: Iterable[int]) -> float:
    return min(parts, default=INF)


def _remove_one(p: Partition, x: int) -> Partition:
    parts = list(p.parts)
    parts.reverse()
    parts.remove(x)
    parts.reverse()
    return Partition(tuple(parts))


def _insert(p: Partition, x: int) -> Partition:
    return Partition.from_parts(p.parts + (x,))


# -- the triples T_j ------------------------------------------------------------


@dataclass(frozen=True)
class TripleTj:
    """A triple ``(pi; kappa; nu)``: distinct parts, a peaked partition, bounded parts.

    ``kappa`` has largest part (the peak) at least ``j`` and every part of
    ``nu`` is at most ``peak - j``. For ``j = 0`` an empty ``kappa`` is allowed
    and read as a peak of 0, which is what the generating function
    ``(q;q)_inf sum_n q^(n+j) / ((q;q)_n (q;q)_(n+j))`` counts at ``n = 0``.
    """

    j: int
    pi: Partition
    kappa: Partition
    nu: Partition

    def __post_init__(self):
        if self.j < 0:
            raise BijectionError("j must be nonnegative")
        if not is_distinct(self.pi):
            raise BijectionError(f"pi={self.pi} has repeated parts")
        if not self.kappa.parts and self.j > 0:
            raise BijectionError("kappa must be nonempty")
        if self.peak < self.j:
            raise BijectionError(f"peak {self.peak} is below j={self.j}")
        if self.nu.parts and self.nu.parts[0] > self.peak - self.j:
            raise BijectionError(f"nu={self.nu} has a part above peak - j")

    @property
    def peak(self) -> int:
        return self.kappa.parts[0] if self.kappa.parts else 0

    @property
    def sign(self) -> int:
        return -1 if len(self.pi) % 2 else 1

    @property
    def weight(self) -> int:
        return self.pi.weight + self.kappa.weight + self.nu.weight

    def __str__(self):
        return f"{self.pi};{self.kappa};{self.nu}"


def parse_triple(text: str, j: int) -> TripleTj:
    from .partitions import parse_partition

    pieces = text.split(";")
    if len(pieces) != 3:
        raise BijectionError(f"expected 'pi;kappa;nu', got {text!r}")
    return TripleTj(j, *(parse_partition(s) for s in pieces))


def enumerate_Tj(j: int, w: int) -> list[TripleTj]:
    """Every triple in ``T_j`` of total weight ``w``."""
    out = []
    for a in range(w + 1):
        for pi in generate_partitions(a, distinct=True):
            for b in range(w - a + 1):
                kappas = list(generate_partitions(b))
                if b == 0 and j > 0:
                    kappas = []
                for kappa in kappas:
                    peak = kappa.parts[0] if kappa.parts else 0
                    if peak < j:
                        continue
                    for nu in generate_partitions(w - a - b, max_part=peak - j):
                        out.append(TripleTj(j, pi, kappa, nu))
    return out


def first_cancellation_move(t: TripleTj) -> tuple[TripleTj, Optional[Move]]:
    kappa_rest = t.kappa.parts[1:]
    x = _smallest(t.pi.parts)
    if not kappa_rest and x > t.peak:
        return t, None
    s = _smallest(t.kappa.parts) if t.kappa.parts else INF
    if x <= s:
        return TripleTj(t.j, _remove_one(t.pi, x), _insert(t.kappa, x), t.nu), Move(x, "pi", "kappa")
    y = min(kappa_rest)
    if y < x:
        return TripleTj(t.j, _insert(t.pi, y), _remove_one(t.kappa, y), t.nu), Move(y, "kappa", "pi")
    raise BijectionError(f"no rule applies to {t}")


def first_cancellation(t: TripleTj) -> TripleTj:
    """Move the smallest part of ``pi`` into ``kappa`` or the smallest non-peak part back.

    Fixed points are the triples whose ``kappa`` is the peak alone and whose
    ``pi`` parts all exceed the peak.
    """
    return first_cancellation_move(t)[0]


def is_first_cancellation_fixed(t: TripleTj) -> bool:
    return len(t.kappa) <= 1 and _smallest(t.pi.parts) > t.peak


def peak_reduction(t: TripleTj) -> tuple[Partition, list[int]]:
    """Strip the staircase ``j, j+1, ..., j+r`` from a fixed point of the first cancellation.

    ``j`` comes off the peak and ``j+i`` off the ``i``-th smallest part of
    ``pi``; what is left, merged with ``nu``, is an ordinary partition.
    Returns that partition and the staircase.
    """
    if not is_first_cancellation_fixed(t):
        raise BijectionError(f"{t} is not fixed by the first cancellation")
    j = t.j
    n = t.peak - j
    reduced = [x - (j + i) for i, x in enumerate(reversed(t.pi.parts), start=1)]
    parts = [n] + reduced + list(t.nu.parts)
    staircase = list(range(j, j + len(t.pi) + 1))
    return Partition.from_parts(x for x in parts if x > 0), staircase


def peak_restore(p: Partition, j: int, staircase_length: int) -> TripleTj:
    """Inverse of :func:`peak_reduction`."""
    r = staircase_length - 1
    if r < 0:
        raise BijectionError("staircase must have at least one part")
    padded = list(p.parts) + [0] * max(0, r + 1 - len(p))
    top, n, nu = padded[:r], padded[r], padded[r + 1:]
    pi = [x + j + i for i, x in enumerate(reversed(top), start=1)]
    kappa = Partition((n + j,)) if n + j else EMPTY
    return TripleTj(j, Partition.from_parts(pi), kappa, Partition(tuple(nu)))


# -- the k-th excess bijection ---------------------------------------------------


def _excess_step(lam: list[int], m: int, d: int) -> tuple[int, list[int]]:
    for pos in range(1, d + 1):
        i = d + 1 - pos
        x = lam[0] - m - i
        if x < 0:
            continue
        new = lam[1:pos] + [x] + lam[pos:]
        if all(a >= b for a, b in zip(new, new[1:])):
            return i, new
    raise BijectionError(f"no excess step for {lam}")


def kth_excess_split(p: Partition, n: int, d: int) -> tuple[Partition, Partition]:
    """Split a partition with at most ``d`` parts into ``(high, low)``.

    ``high`` has parts in ``[n-d+1, n]`` and ``low`` has at most ``d`` parts,
    each at most ``n-d``. While the first row is longer than ``m = n-d`` it
    loses ``m+i`` cells and the remainder is reinserted at row ``d+1-i``;
    exactly one ``i`` in ``1..d`` keeps the rows weakly decreasing.
    """
    if d < 0 or n < d:
        raise BijectionError(f"need 0 <= d <= n, got n={n}, d={d}")
    if len(p) > d:
        raise BijectionError(f"{p} has more than {d} parts")
    m = n - d
    lam = list(p.parts) + [0] * (d - len(p))
    high = []
    while lam and lam[0] > m:
        i, lam = _excess_step(lam, m, d)
        high.append(m + i)
    return Partition.from_parts(high), Partition(tuple(x for x in lam if x))


def kth_excess_merge(high: Partition, low: Partition, n: int, d: int) -> Partition:
    """Inverse of :func:`kth_excess_split`."""
    if d < 0 or n < d:
        raise BijectionError(f"need 0 <= d <= n, got n={n}, d={d}")
    m = n - d
    if len(low) > d or (low.parts and low.parts[0] > m):
        raise BijectionError(f"low={low} does not fit in a {d} x {m} box")
    if any(not m < h <= n for h in high.parts):
        raise BijectionError(f"high={high} has parts outside [{m + 1}, {n}]")
    lam = list(low.parts) + [0] * (d - len(low))
    for h in sorted(high.parts):
        i = h - m
        pos = d + 1 - i
        x = lam[pos - 1]
        lam = [x + h] + lam[: pos - 1] + lam[pos:]
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise BijectionError("merge produced an invalid partition")
    return Partition(tuple(x for x in lam if x))


# -- second cancellation -----------------------------------------------------------


@dataclass(frozen=True)
class AdjustedTriple:
    """``(pi; K; N)`` after the second-cancellation rearrangement.

    ``K`` has ``j``-Durfee height ``d`` and row ``d+1`` equal to ``d+j``
    (so ``K`` is empty when ``d = j = 0``); ``N`` is unrestricted.
    """

    j: int
    pi: Partition
    kappa: Partition
    nu: Partition

    def __post_init__(self):
        if not is_distinct(self.pi):
            raise BijectionError(f"pi={self.pi} has repeated parts")
        d = durfee_rect(self.kappa, self.j)
        row = self.kappa.parts[d] if len(self.kappa) > d else 0
        if row != d + self.j:
            raise BijectionError(f"kappa={self.kappa} has row {d + 1} = {row}, expected {d + self.j}")

    @property
    def sign(self) -> int:
        return -1 if len(self.pi) % 2 else 1

    @property
    def weight(self) -> int:
        return self.pi.weight + self.kappa.weight + self.nu.weight

    def __str__(self):
        return f"{self.pi};{self.kappa};{self.nu}"


def second_cancellation_adjust(t: TripleTj) -> AdjustedTriple:
    """Rearrange ``(pi; kappa; nu)`` around the ``j``-Durfee rectangle of ``kappa`` minus its peak.

    The cells right of the rectangle and the parts of ``nu`` in
    ``[n-d+1, n]`` are merged by the k-th excess bijection; the peak
    ``n+j`` is split as ``d+j`` (into ``kappa``) and ``n-d`` (into ``nu``).
    """
    j = t.j
    n = t.peak - j
    rest = Partition(t.kappa.parts[1:])
    d = durfee_rect(rest, j)
    right = Partition(tuple(x - (d + j) for x in rest.parts[:d] if x > d + j))
    below = rest.parts[d:]
    high = Partition(tuple(x for x in t.nu.parts if x > n - d))
    low_nu = tuple(x for x in t.nu.parts if x <= n - d)
    merged = kth_excess_merge(high, right, n, d)
    rows = [d + j + (merged.parts[i] if i < len(merged) else 0) for i in range(d)]
    kappa = Partition.from_parts([x for x in rows + [d + j] + list(below) if x > 0])
    nu = Partition.from_parts([x for x in low_nu + (n - d,) if x > 0])
    return AdjustedTriple(j, t.pi, kappa, nu)


def second_cancellation_restore(a: AdjustedTriple) -> TripleTj:
    """Inverse of :func:`second_cancellation_adjust`."""
    j = a.j
    d = durfee_rect(a.kappa, j)
    rows = a.kappa.parts[:d]
    below = a.kappa.parts[d + 1:]
    top_nu = a.nu.parts[0] if a.nu.parts else 0
    n = d + top_nu
    merged = Partition(tuple(x - (d + j) for x in rows if x > d + j))
    high, right = kth_excess_split(merged, n, d)
    rect_rows = [d + j + (right.parts[i] if i < len(right) else 0) for i in range(d)]
    kappa = Partition.from_parts([n + j] + rect_rows + list(below)) if n + j else Partition.from_parts(rect_rows + list(below))
    nu = Partition.from_parts(list(a.nu.parts[1:]) + list(high.parts))
    return TripleTj(j, a.pi, kappa, nu)


def enumerate_adjusted(j: int, w: int) -> list[AdjustedTriple]:
    """All adjusted triples of weight ``w``."""
    out = []
    for a in range(w + 1):
        for pi in generate_partitions(a, distinct=True):
            for b in range(w - a + 1):
                for kappa in generate_partitions(b):
                    d = durfee_rect(kappa, j)
                    row = kappa.parts[d] if len(kappa) > d else 0
                    if row != d + j:
                        continue
                    for nu in generate_partitions(w - a - b):
                        out.append(AdjustedTriple(j, pi, kappa, nu))
    return out


def second_cancellation_move(a: AdjustedTriple) -> tuple[AdjustedTriple, Optional[Move]]:
    x = _smallest(a.pi.parts)
    y = _smallest(a.nu.parts)
    if x == INF and y == INF:
        return a, None
    if x <= y:
        return AdjustedTriple(a.j, _remove_one(a.pi, x), a.kappa, _insert(a.nu, x)), Move(x, "pi", "nu")
    return AdjustedTriple(a.j, _insert(a.pi, y), a.kappa, _remove_one(a.nu, y)), Move(y, "nu", "pi")


def second_cancellation(a: AdjustedTriple) -> AdjustedTriple:
    """Swap the smaller of min(pi), min(nu) across; fixed points are ``(empty; K; empty)``."""
    return second_cancellation_move(a)[0]


# -- Franklin ------------------------------------------------------------------------


def franklin_move(p: Partition) -> tuple[Partition, Optional[Move]]:
    if not is_distinct(p):
        raise BijectionError(f"{p} does not have distinct parts")
    parts = list(p.parts)
    k = len(parts)
    if k == 0:
        return p, None
    s = parts[-1]
    r = 1
    while r < k and parts[r] == parts[0] - r:
        r += 1
    if s <= r and not (s == r == k):
        new = [x + 1 if i < s else x for i, x in enumerate(parts[:-1])]
        return Partition(tuple(new)), Move(s, "smallest part", "staircase")
    if s > r and not (s == r + 1 and r == k):
        new = [x - 1 if i < r else x for i, x in enumerate(parts)] + [r]
        return Partition(tuple(new)), Move(r, "staircase", "smallest part")
    return p, None


def franklin(p: Partition) -> Partition:
    """Franklin's involution on partitions into distinct parts.

    Compares the smallest part ``s`` with the length ``r`` of the run
    ``l_1, l_1 - 1, ...`` at the top. Fixed points are the pentagonal
    shapes ``(2k-1, ..., k)`` and ``(2k, ..., k+1)``.
    """
    return franklin_move(p)[0]


def is_pentagonal_staircase(p: Partition) -> bool:
    k = len(p)
    return p.parts in (tuple(range(2 * k - 1, k - 1, -1)), tuple(range(2 * k, k, -1)))


# -- (distinct even; odd; distinct odd) triples ------------------------------------


@dataclass(frozen=True)
class OddTriple:
    """``(pi; mu; nu)``: distinct even parts, odd parts, distinct odd parts."""

    pi: Partition
    mu: Partition
    nu: Partition

    def __post_init__(self):
        if not is_distinct(self.pi) or any(x % 2 for x in self.pi.parts):
            raise BijectionError(f"pi={self.pi} must have distinct even parts")
        if any(x % 2 == 0 for x in self.mu.parts):
            raise BijectionError(f"mu={self.mu} must have odd parts")
        if not is_distinct(self.nu) or any(x % 2 == 0 for x in self.nu.parts):
            raise BijectionError(f"nu={self.nu} must have distinct odd parts")

    @property
    def sign(self) -> int:
        return -1 if (len(self.pi) + len(self.mu)) % 2 else 1

    @property
    def weight(self) -> int:
        return self.pi.weight + self.mu.weight + self.nu.weight

    def __str__(self):
        return f"{self.pi};{self.mu};{self.nu}"


def enumerate_odd_triples(w: int) -> list[OddTriple]:
    evens = {a: [Partition(tuple(2 * x for x in p)) for p in generate_partitions(a // 2, distinct=True)]
             for a in range(0, w + 1, 2)}
    odds = {b: [p for p in generate_partitions(b) if all(x % 2 for x in p.parts)] for b in range(w + 1)}
    dodds = {c: [p for p in odds[c] if is_distinct(p)] for c in range(w + 1)}
    out = []
    for a in range(0, w + 1, 2):
        for b in range(w - a + 1):
            c = w - a - b
            for pi, mu_, nu in product(evens[a], odds[b], dodds[c]):
                out.append(OddTriple(pi, mu_, nu))
    return out


def cor36_involution_move(t: OddTriple) -> tuple[OddTriple, Optional[Move]]:
    x = _smallest(t.mu.parts)
    y = _smallest(t.nu.parts)
    if x == INF and y == INF:
        return t, None
    if x < y:
        return OddTriple(t.pi, _remove_one(t.mu, x), _insert(t.nu, x)), Move(x, "mu", "nu")
    return OddTriple(t.pi, _insert(t.mu, y), _remove_one(t.nu, y)), Move(y, "nu", "mu")


def cor36_involution(t: OddTriple) -> OddTriple:
    """Move min(mu) into nu when it is smaller than min(nu), else min(nu) into mu."""
    return cor36_involution_move(t)[0]


# -- nonpositive crank involution ---------------------------------------------------


def _le0_decompose(p: Partition) -> tuple[int, Partition, Partition]:
    if crank(p) > 0:
        raise BijectionError(f"crank({p}) = {crank(p)} > 0")
    d = durfee_rect(p, 0)
    below = list(p.parts[d:])
    if below.count(1) < d:
        raise BijectionError(f"{p} has fewer than {d} parts 1 below its Durfee square")
    for _ in range(d):
        below.remove(1)
    right = Partition(tuple(x - d for x in p.parts[:d] if x > d))
    return d, Partition(tuple(below)), conjugate(right)


def _le0_assemble(d: int, pi: Partition, nu: Partition) -> Partition:
    right = conjugate(nu)
    rows = [d + (right.parts[i] if i < len(right) else 0) for i in range(d)]
    return Partition(tuple(rows) + pi.parts + (1,) * d)


def cor38_involution_move(p: Partition) -> tuple[Partition, Optional[Move]]:
    d, pi, nu = _le0_decompose(p)
    counts = Counter(pi.parts)
    x = min((v for v, c in counts.items() if c % 2), default=INF)
    y = _smallest(nu.parts)
    if x == INF and y == INF:
        return p, None
    if x <= y:
        out, move = _le0_assemble(d, _remove_one(pi, x), _insert(nu, x)), Move(x, "pi", "nu")
    else:
        out, move = _le0_assemble(d, _insert(pi, y), _remove_one(nu, y)), Move(y, "nu", "pi")
    if crank(out) > 0 or out.weight != p.weight:
        raise BijectionError(f"involution left the domain: {p} -> {out}")
    return out, move


def cor38_involution(p: Partition) -> Partition:
    """Sign-reversing involution on partitions with crank <= 0.

    With Durfee square ``d``, ``pi`` is what lies below the square minus
    ``d`` parts 1 and ``nu`` is the conjugate of what lies to its right.
    The smallest odd-multiplicity part of ``pi`` and the smallest part of
    ``nu`` are compared and one of them changes sides. The partition ``1``
    is excluded: its only part 1 sits inside the Durfee square.
    """
    return cor38_involution_move(p)[0]


def is_cor38_fixed(p: Partition) -> bool:
    d, pi, nu = _le0_decompose(p)
    return not nu.parts and all(c % 2 == 0 for c in Counter(pi.parts).values())


def cor38_fixedpoint_map(p: Partition) -> Partition:
    """Send a fixed point to a partition into distinct even parts.

    The Durfee square plus ``d`` ones becomes the rows ``2d, 2d-2, ..., 2``
    and the conjugate of ``pi`` is added row by row.
    """
    if not is_cor38_fixed(p):
        raise BijectionError(f"{p} is not a fixed point")
    d, pi, _ = _le0_decompose(p)
    extra = conjugate(pi)
    if len(extra) > d:
        raise BijectionError("conjugate of pi is too long")
    return Partition(tuple(2 * (d - i) + (extra.parts[i] if i < len(extra) else 0) for i in range(d)))


# -- Frobenius maps --------------------------------------------------------------


def crank0_map(p: Partition) -> Partition:
    """Delete the ``d`` parts 1 of a crank-0 partition and add a row ``d`` under its Durfee square."""
    if not p.parts or crank(p) != 0:
        raise BijectionError(f"crank({p}) = {crank(p)} != 0")
    d = omega(p)
    if durfee_rect(p, 0) != d or any(x <= d for x in p.parts[:d]):
        raise BijectionError(f"{p} does not have the crank-0 shape")
    rest = [x for x in p.parts if x != 1]
    return Partition.from_parts(rest + [d])


def crank0_inverse(p: Partition) -> Partition:
    d = durfee_rect(p, 0)
    if len(p) <= d or p.parts[d] != d:
        raise BijectionError(f"{p} has no row {d} under its Durfee square")
    parts = list(p.parts[:d]) + list(p.parts[d + 1:]) + [1] * d
    return Partition.from_parts(parts)


def crank_le_neg_j_map(p: Partition, j: int) -> Partition:
    """Delete ``d+j`` parts 1 and add 1 to each of the ``d`` largest parts.

    ``d`` is the height of the ``j``-Durfee rectangle; the result weighs
    ``|p| - j`` and its Frobenius top row avoids ``j``.
    """
    if j < 0:
        raise BijectionError("j must be nonnegative")
    if crank(p) > -j:
        raise BijectionError(f"crank({p}) = {crank(p)} is not <= {-j}")
    d = durfee_rect(p, j)
    ones = omega(p)
    if ones < d + j or len(p) - (d + j) < d:
        raise BijectionError(f"{p} has too few parts 1 for j={j}")
    parts = list(p.parts[: len(p) - (d + j)])
    for i in range(d):
        parts[i] += 1
    return Partition(tuple(parts))


def crank_le_neg_j_inverse(p: Partition, j: int) -> Partition:
    d = durfee_rect(p, j + 1)
    parts = [x - 1 if i < d else x for i, x in enumerate(p.parts)] + [1] * (d + j)
    return Partition.from_parts([x for x in parts if x > 0])


# -- verification harness ------------------------------------------------------


@dataclass
class MapReport:
    name: str
    domain_size: int
    involution_ok: bool
    weight_ok: bool
    sign_ok: bool
    fixed_points: list = field(default_factory=list)
    fixed_points_ok: bool = True
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.involution_ok and self.weight_ok and self.sign_ok and self.fixed_points_ok

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "domain_size": self.domain_size,
            "involution_ok": self.involution_ok,
            "weight_ok": self.weight_ok,
            "sign_ok": self.sign_ok,
            "fixed_points": [str(x) for x in self.fixed_points],
            "fixed_points_ok": self.fixed_points_ok,
            "ok": self.ok,
        }


def check_map(name: str, domain: Iterable, fn: Callable, *, weight: Callable = None,
              sign: Callable = None, is_fixed: Callable = None, max_failures: int = 5) -> MapReport:
    """Exhaustively check that ``fn`` is a weight-preserving, sign-reversing involution.

    ``is_fixed`` is the expected fixed-point characterization; the report
    records whether the actual fixed points match it exactly.
    """
    weight = weight or (lambda x: x.weight)
    sign = sign or (lambda x: x.sign)
    items = list(domain)
    members = set(items)
    inv = wt = sg = fx = True
    fixed, failures = [], []

    def fail(msg):
        if len(failures) < max_failures:
            failures.append(msg)

    for x in items:
        try:
            y = fn(x)
            back = fn(y)
        except BijectionError as e:
            inv = False
            fail(f"{x}: {e}")
            continue
        if back != x or y not in members:
            inv = False
            fail(f"{x} -> {y} -> {back}")
        if weight(y) != weight(x):
            wt = False
            fail(f"weight changed on {x}")
        if y == x:
            fixed.append(x)
        elif sign(y) != -sign(x):
            sg = False
            fail(f"sign not reversed on {x}")
        if is_fixed is not None and is_fixed(x) != (y == x):
            fx = False
            fail(f"fixed-point characterization fails on {x}")
    return MapReport(name, len(items), inv, wt, sg, fixed, fx, failures)


@dataclass
class InjectionReport:
    name: str
    domain_size: int
    injective_ok: bool
    image_ok: bool
    weight_ok: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.injective_ok and self.image_ok and self.weight_ok

    def to_dict(self) -> dict:
        return {"name": self.name, "domain_size": self.domain_size, "injective_ok": self.injective_ok,
                "image_ok": self.image_ok, "weight_ok": self.weight_ok, "ok": self.ok}


def check_injection(name: str, domain: Iterable, fn: Callable, codomain: Iterable, *,
                    weight_shift: int = 0, weight: Callable = None) -> InjectionReport:
    """Check ``fn`` is injective on ``domain`` with image exactly ``codomain``.

    ``weight_shift`` is the expected change ``weight(fn(x)) - weight(x)``.
    """
    weight = weight or (lambda x: x.weight)
    items = list(domain)
    target = set(codomain)
    images, failures = [], []
    wt = True
    for x in items:
        try:
            y = fn(x)
        except BijectionError as e:
            failures.append(f"{x}: {e}")
            continue
        images.append(y)
        if weight(y) - weight(x) != weight_shift:
            wt = False
    injective = len(set(images)) == len(images) == len(items)
    image_ok = set(images) == target
    if not image_ok:
        failures.append(f"image differs from codomain in {len(set(images) ^ target)} elements")
    return InjectionReport(name, len(items), injective, image_ok, wt, failures[:5])


# -- standard domains ---------------------------------------------------------------


def distinct_partitions_upto(w: int) -> list[Partition]:
    return [p for n in range(w + 1) for p in generate_partitions(n, distinct=True)]


def crank_le0_partitions_upto(w: int) -> list[Partition]:
    """Partitions with crank <= 0 of weight <= w, without the exceptional ``1``."""
    return [p for n in range(w + 1) for p in enumerate_partitions(n)
            if crank(p) <= 0 and p.parts != (1,)]


def crank0_domain(n: int) -> list[Partition]:
    return [p for p in enumerate_partitions(n) if p.parts and crank(p) == 0]


def crank0_codomain(n: int) -> list[Partition]:
    return [p for p in enumerate_partitions(n)
            if no_zero(frobenius(p)) and bottom_first_two_differ_by_one(frobenius(p))]


def crank_le_neg_j_domain(n: int, j: int) -> list[Partition]:
    """Partitions of ``n`` with crank <= -j, leaving out the partition ``1`` when j = 0."""
    return [p for p in enumerate_partitions(n)
            if crank(p) <= -j and not (j == 0 and p.parts == (1,))]


def no_j_top_codomain(n: int, j: int) -> list[Partition]:
    if n < 0:
        return []
    pred = no_j_in_top_row(j)
    return [p for p in enumerate_partitions(n) if pred(frobenius(p))]
