"""Frozen reference data.

``A064428`` holds terms ``n = 0..30`` of OEIS A064428, the number of
partitions of ``n`` with nonnegative crank. No network lookup happens at
run time. The terms were produced by summing the fixed-crank generating
functions ``sum_{m>=0} sum_n M(m,n) q^n``, a route that never enumerates
mex values. Terms 2..15 also match the ``m_1_2`` row of the mex reference
table.
"""

A064428 = (
    1, 0, 1, 2, 3, 4, 6, 8, 12, 16, 23, 30, 42, 54, 73, 94,
    124, 158, 206, 260, 334, 420, 532, 664, 835, 1034, 1288, 1588, 1962, 2404, 2953,
)

A064428_OFFSET = 0

# rows of the mex reference table, columns n = 2..15
TABLE1_NS = tuple(range(2, 16))
TABLE1_ROWS = (
    "m_1_2", "m_1_4", "m_3_4", "m_1_2_o", "m_1_2_e", "m_1_4_o", "m_1_4_e", "m_3_4_o", "m_3_4_e",
)
