"""Reference counts of the refined mex statistics for n = 2..15, used as fixed expectations."""

TABLE1_NS = list(range(2, 16))

TABLE1 = {
    "m_1_2": [1, 2, 3, 4, 6, 8, 12, 16, 23, 30, 42, 54, 73, 94],
    "m_1_4": [1, 1, 2, 2, 4, 4, 7, 8, 13, 15, 23, 27, 39, 47],
    "m_3_4": [0, 1, 1, 2, 2, 4, 5, 8, 10, 15, 19, 27, 34, 47],
    "m_1_2_o": [1, 1, 2, 2, 3, 4, 6, 8, 11, 15, 21, 27, 36, 47],
    "m_1_2_e": [0, 1, 1, 2, 3, 4, 6, 8, 12, 15, 21, 27, 37, 47],
    "m_1_4_o": [1, 1, 1, 1, 2, 2, 3, 4, 6, 8, 11, 14, 19, 24],
    "m_1_4_e": [0, 0, 1, 1, 2, 2, 4, 4, 7, 7, 12, 13, 20, 23],
    "m_3_4_o": [0, 0, 1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 17, 23],
    "m_3_4_e": [0, 1, 0, 1, 1, 2, 2, 4, 5, 8, 9, 14, 17, 24],
}
