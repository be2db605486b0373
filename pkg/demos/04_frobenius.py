"""Crank conditions read off Frobenius symbols.

Run with ``python demos/04_frobenius.py``.
"""

import crankmex.bijections as bj
import crankmex.partitions as pc

n = 8
print(f"crank 0 partitions of {n} and their images:")
for p in bj.crank0_domain(n):
    q = bj.crank0_map(p)
    print(f"   {str(p):12s} -> {str(q):8s} {pc.frobenius(q)}")

a = [pc.frobenius_count(k, pc.no_zero) for k in range(12)]
print("\nsymbols without 0:", a)
print("first differences:", [a[0]] + [a[k] - a[k - 1] for k in range(1, 12)])
print("M(0, n):          ", [pc.M(0, k) for k in range(12)])

j = 2
print(f"\ncrank <= -{j} at n = 9, moved to partitions of {9 - j} with no {j} in the top row:")
for p in bj.crank_le_neg_j_domain(9, j):
    q = bj.crank_le_neg_j_map(p, j)
    print(f"   {str(p):18s} -> {str(q):8s} {pc.frobenius(q)}")
