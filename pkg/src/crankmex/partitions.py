"""Integer partitions and the statistics used throughout the package.

Partitions are immutable, weakly decreasing tuples of positive integers.
Everything here works by direct enumeration, so these functions double as
the brute-force oracle for the series identities in :mod:`crankmex.identities`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional


class PartitionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool):
                raise PartitionError(f"part {x!r} is not an integer")
            if x < 1:
                raise PartitionError(f"part {x} is not positive")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts {parts} are not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(map(str, self.parts))

    def __repr__(self):
        return f"Partition({list(self.parts)})"


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts, e.g. ``"5,4,4,2,2"``; ``""`` is the empty partition."""
    text = text.strip()
    if not text:
        return EMPTY
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise PartitionError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


def is_distinct(p: Partition) -> bool:
    return all(a > b for a, b in zip(p.parts, p.parts[1:]))


def _generate(n: int, max_part: int, max_length: Optional[int], distinct: bool) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    rest_len = None if max_length is None else max_length - 1
    for first in range(min(n, max_part), 0, -1):
        if distinct and first * (first + 1) // 2 < n:
            break
        for tail in _generate(n - first, first - 1 if distinct else first, rest_len, distinct):
            yield (first,) + tail


def generate_partitions(n: int, max_part: Optional[int] = None, max_length: Optional[int] = None,
                        distinct: bool = False) -> Iterator[Partition]:
    """Yield partitions of ``n`` in lexicographically decreasing order.

    ``max_part`` and ``max_length`` bound the largest part and the number of
    parts; ``distinct`` restricts to partitions into distinct parts.
    """
    if n < 0:
        return
    bound = n if max_part is None else min(n, max_part)
    for parts in _generate(n, bound, max_length, distinct):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple:
    return tuple(generate_partitions(n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, lexicographically decreasing; ``p(0) = 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_all_partitions(n))


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return EMPTY
    return Partition(tuple(sum(1 for x in p.parts if x > i) for i in range(p.parts[0])))


def omega(p: Partition) -> int:
    """Number of parts equal to 1."""
    return sum(1 for x in p.parts if x == 1)


def mu(p: Partition) -> int:
    """Number of parts strictly larger than ``omega(p)``."""
    w = omega(p)
    return sum(1 for x in p.parts if x > w)


def crank(p: Partition) -> int:
    """Dyson's crank. The empty partition gets crank 0."""
    if not p.parts:
        return 0
    w = omega(p)
    if w == 0:
        return p.parts[0]
    return mu(p) - w


def mex(p: Partition) -> int:
    """Smallest positive integer that is not a part."""
    present = set(p.parts)
    k = 1
    while k in present:
        k += 1
    return k


def durfee_rect(p: Partition, j: int = 0) -> int:
    """Height ``d`` of the largest ``d x (d+j)`` rectangle inside the Ferrers diagram."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    d = 0
    while d < len(p.parts) and p.parts[d] >= d + 1 + j:
        d += 1
    return d


# -- Frobenius symbols -------------------------------------------------------


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Two equal-length strictly decreasing rows of nonnegative integers."""

    top: tuple = ()
    bottom: tuple = ()

    def __post_init__(self):
        top, bottom = tuple(self.top), tuple(self.bottom)
        if len(top) != len(bottom):
            raise PartitionError("Frobenius rows have different lengths")
        for row in (top, bottom):
            if any(x < 0 for x in row):
                raise PartitionError("Frobenius entries must be nonnegative")
            if any(a <= b for a, b in zip(row, row[1:])):
                raise PartitionError(f"Frobenius row {row} is not strictly decreasing")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def weight(self) -> int:
        return len(self.top) + sum(self.top) + sum(self.bottom)

    def __len__(self):
        return len(self.top)

    def __str__(self):
        return ",".join(map(str, self.top)) + "|" + ",".join(map(str, self.bottom))


def parse_frobenius(text: str) -> FrobeniusSymbol:
    """Parse ``"t1,t2|b1,b2"``; ``"|"`` is the empty symbol."""
    if text.count("|") != 1:
        raise PartitionError(f"cannot parse Frobenius symbol {text!r}")
    top, bottom = text.split("|")
    try:
        rows = [tuple(int(t) for t in row.split(",")) if row.strip() else () for row in (top, bottom)]
    except ValueError:
        raise PartitionError(f"cannot parse Frobenius symbol {text!r}") from None
    return FrobeniusSymbol(*rows)


def frobenius(p: Partition) -> FrobeniusSymbol:
    d = durfee_rect(p, 0)
    conj = conjugate(p)
    top = tuple(p.parts[i] - (i + 1) for i in range(d))
    bottom = tuple(conj.parts[i] - (i + 1) for i in range(d))
    return FrobeniusSymbol(top, bottom)


def from_frobenius(f: FrobeniusSymbol) -> Partition:
    d = len(f)
    rows = [f.top[i] + i + 1 for i in range(d)]
    cols = [f.bottom[i] + i + 1 for i in range(d)]
    r = d + 1
    while d and cols[0] >= r:
        rows.append(sum(1 for c in cols if c >= r))
        r += 1
    return Partition(tuple(rows))


def no_zero(f: FrobeniusSymbol) -> bool:
    return 0 not in f.top and 0 not in f.bottom


def no_j_in_top_row(j: int) -> Callable[[FrobeniusSymbol], bool]:
    def pred(f: FrobeniusSymbol) -> bool:
        return j not in f.top
    pred.__name__ = f"no_{j}_in_top_row"
    return pred


def bottom_first_two_differ_by_one(f: FrobeniusSymbol) -> bool:
    """First two bottom entries differ by 1; a missing second entry counts as 0.

    The empty symbol never qualifies.
    """
    if not f.bottom:
        return False
    second = f.bottom[1] if len(f.bottom) > 1 else 0
    return f.bottom[0] - second == 1


def frobenius_count(n: int, *predicates: Callable[[FrobeniusSymbol], bool]) -> int:
    """Number of partitions of ``n`` whose Frobenius symbol satisfies every predicate."""
    if n < 0:
        return 0
    return sum(1 for f in _frobenius_symbols(n) if all(pred(f) for pred in predicates))


@lru_cache(maxsize=None)
def _frobenius_symbols(n: int) -> tuple:
    return tuple(frobenius(p) for p in _all_partitions(n))


# -- crank counts ------------------------------------------------------------

# M(m, n) for n in {0, 1} is fixed by convention, not by enumeration.
_SMALL_M = {(0, 0): 1, (1, 1): 1, (0, 1): -1, (-1, 1): 1}


@lru_cache(maxsize=None)
def crank_distribution(n: int) -> dict:
    """Map crank value -> number of partitions of ``n`` (plain enumeration)."""
    return dict(Counter(crank(p) for p in _all_partitions(n)))


def M(m: int, n: int) -> int:
    """Number of partitions of ``n`` with crank ``m``, with the n <= 1 conventions."""
    if n < 0:
        return 0
    if n <= 1:
        return _SMALL_M.get((m, n), 0)
    return crank_distribution(n).get(m, 0)


def crank_count(n: int, predicate: Callable[[int], bool], conventions: bool = True) -> int:
    """Sum of ``M(m, n)`` over crank values ``m`` satisfying ``predicate``.

    With ``conventions=False`` the n <= 1 override table is ignored and the
    result is the true number of partitions (the empty one has crank 0).
    """
    if n < 0:
        return 0
    if conventions and n <= 1:
        return sum(c for (m, k), c in _SMALL_M.items() if k == n and predicate(m))
    return sum(c for m, c in crank_distribution(n).items() if predicate(m))


def _parity_ok(p: Partition, parity: Optional[str]) -> bool:
    if parity is None:
        return True
    if parity == "o":
        return len(p) % 2 == 1
    if parity == "e":
        return len(p) % 2 == 0
    raise ValueError(f"parity must be 'o', 'e' or None, not {parity!r}")


def crank_le0_lengths(n: int, conventions: bool = True) -> Counter:
    """Partitions of ``n`` with crank <= 0, counted by length.

    Under the conventions the override table gives crank <= 0 a total weight
    of M(0,1) + M(-1,1) = 0 at n = 1, so the partition ``1`` contributes
    nothing there; this matches the two-variable series for these counts.
    """
    if n < 0 or (conventions and n == 1):
        return Counter()
    return Counter(len(p) for p in _all_partitions(n) if crank(p) <= 0)


def crank_le0_count(n: int, parity: Optional[str] = None, conventions: bool = True) -> int:
    """Number of partitions of ``n`` with crank <= 0, optionally by length parity."""
    wanted = {None: (0, 1), "e": (0,), "o": (1,)}
    if parity not in wanted:
        raise ValueError(f"parity must be 'o', 'e' or None, not {parity!r}")
    return sum(c for k, c in crank_le0_lengths(n, conventions).items() if k % 2 in wanted[parity])


# -- mex and distinct-part counts ---------------------------------------------


@lru_cache(maxsize=None)
def _mex_table(n: int) -> dict:
    table = Counter()
    for p in _all_partitions(n):
        table[(mex(p), len(p) % 2)] += 1
    return dict(table)


def mex_count(a: int, b: int, n: int, parity: Optional[str] = None) -> int:
    """``m_{a,b}(n)``: partitions of ``n`` with mex congruent to ``a`` mod ``b``.

    ``parity`` is ``'o'``/``'e'`` to count only odd/even length partitions.
    """
    if b not in (2, 4):
        raise ValueError(f"unsupported modulus {b}; use 2 or 4")
    if not 0 <= a < b:
        raise ValueError(f"residue {a} out of range for modulus {b}")
    if n < 0:
        return 0
    want = {None: (0, 1), "o": (1,), "e": (0,)}
    if parity not in want:
        raise ValueError(f"parity must be 'o', 'e' or None, not {parity!r}")
    return sum(c for (x, par), c in _mex_table(n).items() if x % b == a and par in want[parity])


def distinct_count(n: int, parity: Optional[str] = None) -> int:
    """``q(n)``, or ``q^o(n)`` / ``q^e(n)`` with a length-parity filter."""
    if n < 0:
        return 0
    return sum(1 for p in generate_partitions(n, distinct=True) if _parity_ok(p, parity))


# -- tables -------------------------------------------------------------------


@dataclass
class StatTable:
    """A named statistic evaluated over a range of ``n``."""

    name: str
    values: dict

    def row(self, params: tuple = ()) -> dict:
        return {n: v for (ps, n), v in self.values.items() if ps == params}


def _stat_functions() -> dict:
    def parity_stat(a, b, parity):
        return lambda n, **_: mex_count(a, b, n, parity)

    stats = {
        "p": lambda n, **_: len(_all_partitions(n)),
        "q": lambda n, **_: distinct_count(n),
        "q_o": lambda n, **_: distinct_count(n, "o"),
        "q_e": lambda n, **_: distinct_count(n, "e"),
        "crank": lambda n, m=0, **_: M(m, n),
        "crank_ge": lambda n, j=0, **_: crank_count(n, lambda c: c >= j),
        "crank_le0": lambda n, **_: crank_le0_count(n),
        "crank_le0_o": lambda n, **_: crank_le0_count(n, "o"),
        "crank_le0_e": lambda n, **_: crank_le0_count(n, "e"),
        "frob_no_zero": lambda n, **_: frobenius_count(n, no_zero),
        "frob_no_j_top": lambda n, j=0, **_: frobenius_count(n, no_j_in_top_row(j)),
    }
    for a, b in ((1, 2), (1, 4), (3, 4)):
        stats[f"m_{a}_{b}"] = parity_stat(a, b, None)
        stats[f"m_{a}_{b}_o"] = parity_stat(a, b, "o")
        stats[f"m_{a}_{b}_e"] = parity_stat(a, b, "e")
    return stats


STATISTICS = _stat_functions()


def stat_table(name: str, ns: Iterable[int], **params) -> StatTable:
    """Evaluate the statistic ``name`` (a key of ``STATISTICS``) for each ``n``."""
    try:
        fn = STATISTICS[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}") from None
    key = tuple(sorted(params.items()))
    return StatTable(name, {(key, n): fn(n, **params) for n in ns})
