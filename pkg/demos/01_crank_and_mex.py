"""A tour of the two statistics and the counts that tie them together.

Run with ``python demos/01_crank_and_mex.py``.
"""

import crankmex.partitions as pc
from crankmex import parse_partition

lam = parse_partition("5,4,4,2,2")
print(f"partition       {lam}")
print(f"crank           {pc.crank(lam)}   (no parts 1, so the largest part)")
print(f"mex             {pc.mex(lam)}")
print(f"conjugate       {pc.conjugate(lam)}")
print(f"Frobenius       {pc.frobenius(lam)}")
print(f"j-Durfee sizes  {[pc.durfee_rect(lam, j) for j in range(5)]}")

with_ones = parse_partition("5,4,2,2,1,1")
print(f"\n{with_ones}: omega={pc.omega(with_ones)}, mu={pc.mu(with_ones)}, crank={pc.crank(with_ones)}")

# Partitions with nonnegative crank are equinumerous with partitions of odd mex.
print("\n n  crank>=0  m_1_2")
for n in range(2, 13):
    print(f"{n:2d}  {pc.crank_count(n, lambda m: m >= 0):8d}  {pc.mex_count(1, 2, n):5d}")

# Splitting by length parity pairs crank <= 0 with the mex residues mod 4.
print("\n n  even crank<=0  m_1_4   odd crank<=0  m_3_4")
for n in range(2, 13):
    print(f"{n:2d}  {pc.crank_le0_count(n, 'e'):13d}  {pc.mex_count(1, 4, n):5d}"
          f"   {pc.crank_le0_count(n, 'o'):12d}  {pc.mex_count(3, 4, n):5d}")
