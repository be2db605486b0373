"""Named bijection suites shared by the command line and the test suite.

Each :class:`Suite` knows how to parse a traced input, take one step of its
map, and run an exhaustive check up to a weight bound. Involution suites also
compare the signed fixed-point counts with an independent q-series oracle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import bijections as bj
from .identities import crank_ge_positive, tj_signed_series
from .partitions import Partition, parse_partition
from .qseries import Series, pentagonal_series, pochhammer


@dataclass
class SuiteReport:
    name: str
    reports: list
    oracle_ok: Optional[bool] = None
    oracle_detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports) and self.oracle_ok is not False

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "oracle_ok": self.oracle_ok,
            "oracle": self.oracle_detail,
            "reports": [r.to_dict() for r in self.reports],
        }


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    parse: Callable[[str, int], object]
    step: Callable[[object, int], tuple]
    check: Callable[[int, int], SuiteReport]
    default_weight: int = 14
    uses_j: bool = False
    involution: bool = True


def _signed_by_weight(items, weight=lambda x: x.weight, sign=lambda x: x.sign) -> Counter:
    out = Counter()
    for x in items:
        out[weight(x)] += sign(x)
    return out


def _match(name: str, counts: Counter, oracle: Series, ws) -> tuple[bool, dict]:
    got = [counts.get(w, 0) for w in ws]
    want = [oracle[w] for w in ws]
    return got == want, {"weights": list(ws), "fixed_signed": got, "oracle": want}


def _length_sign(p: Partition) -> int:
    return -1 if len(p) % 2 else 1


def _weight(p: Partition) -> int:
    return p.weight


# -- checks ---------------------------------------------------------------------


def check_first_cancellation(w: int, j: int) -> SuiteReport:
    domain = [t for n in range(w + 1) for t in bj.enumerate_Tj(j, n)]
    r = bj.check_map(f"first_cancellation j={j}", domain, bj.first_cancellation,
                     is_fixed=bj.is_first_cancellation_fixed)
    ok, detail = _match(r.name, _signed_by_weight(r.fixed_points), tj_signed_series(j, w), range(w + 1))
    return SuiteReport(r.name, [r], ok, detail)


def check_second_cancellation(w: int, j: int) -> SuiteReport:
    domain = [a for n in range(w + 1) for a in bj.enumerate_adjusted(j, n)]
    r = bj.check_map(f"second_cancellation j={j}", domain, bj.second_cancellation,
                     is_fixed=lambda a: not a.pi.parts and not a.nu.parts)
    # fixed points (empty; K; empty) are counted by the positive crank >= j sum
    ok, detail = _match(r.name, _signed_by_weight(r.fixed_points), crank_ge_positive(j, w), range(w + 1))
    return SuiteReport(r.name, [r], ok, detail)


def check_franklin(w: int, j: int = 0) -> SuiteReport:
    r = bj.check_map("franklin", bj.distinct_partitions_upto(w), bj.franklin,
                     weight=_weight, sign=_length_sign, is_fixed=bj.is_pentagonal_staircase)
    counts = _signed_by_weight(r.fixed_points, _weight, _length_sign)
    ok, detail = _match(r.name, counts, pentagonal_series(w), range(w + 1))
    return SuiteReport(r.name, [r], ok, detail)


def check_cor36(w: int, j: int = 0) -> SuiteReport:
    domain = [t for n in range(w + 1) for t in bj.enumerate_odd_triples(n)]
    r = bj.check_map("cor36", domain, bj.cor36_involution,
                     is_fixed=lambda t: not t.mu.parts and not t.nu.parts)
    ok, detail = _match(r.name, _signed_by_weight(r.fixed_points), pochhammer(2, 2, None, w), range(w + 1))
    return SuiteReport(r.name, [r], ok, detail)


def check_cor38(w: int, j: int = 0) -> SuiteReport:
    r = bj.check_map("cor38", bj.crank_le0_partitions_upto(w), bj.cor38_involution,
                     weight=_weight, sign=_length_sign, is_fixed=bj.is_cor38_fixed)
    counts = _signed_by_weight(r.fixed_points, _weight, _length_sign)
    images = [bj.cor38_fixedpoint_map(p) for p in r.fixed_points]
    image_ok = len(set(images)) == len(images) and all(
        q.weight == p.weight and all(x % 2 == 0 for x in q.parts) and len(set(q.parts)) == len(q)
        for p, q in zip(r.fixed_points, images))
    ok, detail = _match(r.name, counts, pochhammer(2, 2, None, w, sign=-1), range(w + 1))
    detail["fixedpoint_map_ok"] = image_ok
    return SuiteReport(r.name, [r], ok and image_ok, detail)


def check_crank0(w: int, j: int = 0) -> SuiteReport:
    reports = [bj.check_injection(f"crank0 n={n}", bj.crank0_domain(n), bj.crank0_map, bj.crank0_codomain(n))
               for n in range(2, w + 1)]
    return SuiteReport("crank0", reports)


def check_crank_le_neg_j(w: int, j: int) -> SuiteReport:
    reports = [bj.check_injection(f"crank_le_neg_j j={j} n={n}", bj.crank_le_neg_j_domain(n, j),
                                  lambda p: bj.crank_le_neg_j_map(p, j), bj.no_j_top_codomain(n - j, j),
                                  weight_shift=-j)
               for n in range(w + 1)]
    return SuiteReport(f"crank_le_neg_j j={j}", reports)


# -- single steps for tracing -------------------------------------------------------


def _second_step(t, j):
    adjusted = bj.second_cancellation_adjust(t)
    return bj.second_cancellation_move(adjusted)


def _parse_partition(text, j):
    return parse_partition(text)


def _parse_odd(text, j):
    pieces = text.split(";")
    if len(pieces) != 3:
        raise bj.BijectionError(f"expected 'pi;mu;nu', got {text!r}")
    return bj.OddTriple(*(parse_partition(s) for s in pieces))


SUITES = {
    s.name: s
    for s in (
        Suite("franklin", "Franklin's involution on distinct partitions", _parse_partition,
              lambda p, j: bj.franklin_move(p), check_franklin, 30),
        Suite("first_cancellation", "first cancellation on T_j triples", bj.parse_triple,
              lambda t, j: bj.first_cancellation_move(t), check_first_cancellation, 14, True),
        Suite("second_cancellation", "second cancellation on adjusted T_j triples", bj.parse_triple,
              _second_step, check_second_cancellation, 14, True),
        Suite("cor36", "involution on (distinct even; odd; distinct odd) triples", _parse_odd,
              lambda t, j: bj.cor36_involution_move(t), check_cor36, 16),
        Suite("cor38", "involution on partitions with crank <= 0", _parse_partition,
              lambda p, j: bj.cor38_involution_move(p), check_cor38, 20),
        Suite("crank0", "crank 0 partitions to Frobenius symbols without 0", _parse_partition,
              lambda p, j: (bj.crank0_map(p), None), check_crank0, 25, involution=False),
        Suite("crank_le_neg_j", "crank <= -j partitions to Frobenius symbols avoiding j on top",
              _parse_partition, lambda p, j: (bj.crank_le_neg_j_map(p, j), None), check_crank_le_neg_j, 25,
              True, involution=False),
    )
}


def trace_line(suite: Suite, text: str, j: int = 0) -> str:
    """One trace line ``in → out [moved: part p from X to Y | fixed]``."""
    x = suite.parse(text, j)
    y, move = suite.step(x, j)
    shown_in = str(x)
    if suite.name == "second_cancellation":
        shown_in = f"{x} ⇒ {bj.second_cancellation_adjust(x)}"
    if move is not None:
        note = f" [moved: part {move.part} from {move.source} to {move.target}]"
    elif suite.involution:
        note = " [fixed]"
    else:
        note = ""
    return f"{shown_in} → {y}{note}"
