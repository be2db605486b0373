"""Checking generating-function identities coefficient by coefficient.

Run with ``python demos/02_identities.py``.
"""

import dataclasses

from crankmex import identities
from crankmex.identities import crank_ge_alternating, crank_ge_positive
from crankmex.qseries import Series

# Two very different series for partitions with crank at least j.
j, N = 2, 15
print("alternating form:", crank_ge_alternating(j, N).coeffs)
print("positive form:   ", crank_ge_positive(j, N).coeffs)

print()
for report in identities.verify_all(order=30, ids={"ewell", "carlitz", "huh-kim", "frobenius-crank"}):
    print(f"{report.id:16s} {report.params}  pass={report.passed}  {report.ms} ms")

# A deliberately broken right-hand side shows what a failure report looks like.
entry = identities.get_entry("thm2.1")


def broken(params, order):
    label, lhs, rhs = entry.build(params, order)[0]
    return [(label, lhs, rhs + Series.monomial(order, 9, -3))]


report = identities.check_entry(dataclasses.replace(entry, build=broken), {"j": 1}, 12)
print("\ncorrupted:", report.to_dict())
