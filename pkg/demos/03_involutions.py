"""Sign-reversing involutions, step by step.

Run with ``python demos/03_involutions.py``.
"""

import crankmex.bijections as bj
from crankmex.suites import SUITES, trace_line

print("T_3 at weight 5 under the first cancellation:")
for t in bj.enumerate_Tj(3, 5):
    print("  ", trace_line(SUITES["first_cancellation"], str(t), 3))

print("\nThe survivors lose a staircase and become ordinary partitions:")
for t in bj.enumerate_Tj(3, 5):
    if bj.is_first_cancellation_fixed(t):
        p, stairs = bj.peak_reduction(t)
        print(f"   {t}  ->  {p}  staircase {stairs}")

print("\nFranklin on distinct partitions of 7:")
for p in bj.distinct_partitions_upto(7):
    if p.weight == 7:
        print("  ", trace_line(SUITES["franklin"], str(p)))

print("\nCrank <= 0 partitions of 8 left fixed, sent to distinct even parts:")
for p in bj.crank_le0_partitions_upto(8):
    if p.weight == 8 and bj.is_cor38_fixed(p):
        print(f"   {p}  ->  {bj.cor38_fixedpoint_map(p)}")

report = SUITES["second_cancellation"].check(10, 1)
print(f"\nsecond cancellation, j=1, weight <= 10: ok={report.ok}")
print("   fixed points by weight:", report.oracle_detail["fixed_signed"])
