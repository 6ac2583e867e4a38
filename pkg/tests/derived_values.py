"""Expected values frozen from the brute-force reference in ``bruteforce.py``.

Regenerate by rerunning the reference over all labelled graphs of order
<= 6; none of these numbers were produced by the package under test.
"""

# e(n, m; p) keyed by (n, m, p)
EXTREMAL_E = {
    (3, 0, 3): 0,
    (3, 1, 3): 1,
    (3, 2, 3): 2,
    (3, 0, 4): 0,
    (3, 1, 4): 2,
    (3, 2, 4): 4,
    (4, 0, 4): 0,
    (4, 1, 4): 1,
    (4, 2, 4): 2,
    (4, 3, 4): 3,
    (4, 4, 4): 4,
    (4, 5, 4): 5,
    (3, 0, 5): 0,
    (3, 1, 5): 2,
    (3, 2, 5): 6,
    (4, 0, 5): 0,
    (4, 1, 5): 1,
    (4, 2, 5): 3,
    (4, 3, 5): 5,
    (4, 4, 5): 6,
    (4, 5, 5): 8,
    (5, 0, 5): 0,
    (5, 1, 5): 1,
    (5, 2, 5): 2,
    (5, 3, 5): 3,
    (5, 4, 5): 4,
    (5, 5, 5): 5,
    (5, 6, 5): 6,
    (5, 7, 5): 7,
    (5, 8, 5): 8,
    (5, 9, 5): 9,
    (3, 0, 6): 0,
    (3, 1, 6): 3,
    (3, 2, 6): 9,
    (4, 0, 6): 0,
    (4, 1, 6): 1,
    (4, 2, 6): 4,
    (4, 3, 6): 6,
    (4, 4, 6): 9,
    (4, 5, 6): 12,
    (5, 0, 6): 0,
    (5, 1, 6): 1,
    (5, 2, 6): 3,
    (5, 3, 6): 4,
    (5, 4, 6): 6,
    (5, 5, 6): 7,
    (5, 6, 6): 9,
    (5, 7, 6): 10,
    (5, 8, 6): 12,
    (5, 9, 6): 13,
    (6, 0, 6): 0,
    (6, 1, 6): 1,
    (6, 2, 6): 2,
    (6, 3, 6): 3,
    (6, 4, 6): 4,
    (6, 5, 6): 5,
    (6, 6, 6): 6,
    (6, 7, 6): 7,
    (6, 8, 6): 8,
    (6, 9, 6): 9,
    (6, 10, 6): 10,
    (6, 11, 6): 11,
    (6, 12, 6): 12,
    (6, 13, 6): 13,
    (6, 14, 6): 14,
}

# min alpha over (n, m) graphs of order p, keyed by (n, m, p)
ALPHA_MIN = {
    (3, 0, 3): 3,
    (3, 1, 3): 2,
    (3, 2, 3): 2,
    (3, 0, 4): 4,
    (3, 1, 4): 2,
    (3, 2, 4): 2,
    (4, 0, 4): 4,
    (4, 1, 4): 3,
    (4, 2, 4): 2,
    (4, 3, 4): 2,
    (4, 4, 4): 2,
    (4, 5, 4): 2,
    (3, 0, 5): 5,
    (3, 1, 5): 3,
    (3, 2, 5): 2,
    (4, 0, 5): 5,
    (4, 1, 5): 4,
    (4, 2, 5): 3,
    (4, 3, 5): 2,
    (4, 4, 5): 2,
    (4, 5, 5): 2,
    (5, 0, 5): 5,
    (5, 1, 5): 4,
    (5, 2, 5): 3,
    (5, 3, 5): 3,
    (5, 4, 5): 2,
    (5, 5, 5): 2,
    (5, 6, 5): 2,
    (5, 7, 5): 2,
    (5, 8, 5): 2,
    (5, 9, 5): 2,
    (3, 0, 6): 6,
    (3, 1, 6): 3,
    (3, 2, 6): 3,
    (4, 0, 6): 6,
    (4, 1, 6): 5,
    (4, 2, 6): 3,
    (4, 3, 6): 2,
    (4, 4, 6): 2,
    (4, 5, 6): 2,
    (5, 0, 6): 6,
    (5, 1, 6): 5,
    (5, 2, 6): 3,
    (5, 3, 6): 3,
    (5, 4, 6): 2,
    (5, 5, 6): 2,
    (5, 6, 6): 2,
    (5, 7, 6): 2,
    (5, 8, 6): 2,
    (5, 9, 6): 2,
    (6, 0, 6): 6,
    (6, 1, 6): 5,
    (6, 2, 6): 4,
    (6, 3, 6): 3,
    (6, 4, 6): 3,
    (6, 5, 6): 3,
    (6, 6, 6): 2,
    (6, 7, 6): 2,
    (6, 8, 6): 2,
    (6, 9, 6): 2,
    (6, 10, 6): 2,
    (6, 11, 6): 2,
    (6, 12, 6): 2,
    (6, 13, 6): 2,
    (6, 14, 6): 2,
}

# max edges with no cycle of length 3..n, keyed by (n, p)
GIRTH_EXTREMAL = {
    (3, 3): 2,
    (3, 4): 4,
    (4, 4): 3,
    (3, 5): 6,
    (4, 5): 5,
    (5, 5): 4,
    (3, 6): 9,
    (4, 6): 6,
    (5, 6): 6,
    (6, 6): 5,
}

# number of (n, m) graph classes of order p, keyed by (n, m, p)
NM_CLASS_COUNTS = {
    (3, 0, 3): 1,
    (3, 1, 3): 2,
    (3, 2, 3): 3,
    (3, 0, 4): 1,
    (3, 1, 4): 3,
    (3, 2, 4): 7,
    (4, 0, 4): 1,
    (4, 1, 4): 2,
    (4, 2, 4): 4,
    (4, 3, 4): 7,
    (4, 4, 4): 9,
    (4, 5, 4): 10,
    (3, 0, 5): 1,
    (3, 1, 5): 3,
    (3, 2, 5): 14,
    (4, 0, 5): 1,
    (4, 1, 5): 2,
    (4, 2, 5): 5,
    (4, 3, 5): 13,
    (4, 4, 5): 22,
    (4, 5, 5): 29,
    (5, 0, 5): 1,
    (5, 1, 5): 2,
    (5, 2, 5): 4,
    (5, 3, 5): 8,
    (5, 4, 5): 14,
    (5, 5, 5): 20,
    (5, 6, 5): 26,
    (5, 7, 5): 30,
    (5, 8, 5): 32,
    (5, 9, 5): 33,
    (3, 0, 6): 1,
    (3, 1, 6): 4,
    (3, 2, 6): 38,
    (4, 0, 6): 1,
    (4, 1, 6): 2,
    (4, 2, 6): 7,
    (4, 3, 6): 27,
    (4, 4, 6): 69,
    (4, 5, 6): 120,
    (5, 0, 6): 1,
    (5, 1, 6): 2,
    (5, 2, 6): 5,
    (5, 3, 6): 12,
    (5, 4, 6): 29,
    (5, 5, 6): 53,
    (5, 6, 6): 87,
    (5, 7, 6): 119,
    (5, 8, 6): 140,
    (5, 9, 6): 150,
    (6, 0, 6): 1,
    (6, 1, 6): 2,
    (6, 2, 6): 4,
    (6, 3, 6): 9,
    (6, 4, 6): 18,
    (6, 5, 6): 33,
    (6, 6, 6): 54,
    (6, 7, 6): 78,
    (6, 8, 6): 102,
    (6, 9, 6): 123,
    (6, 10, 6): 138,
    (6, 11, 6): 147,
    (6, 12, 6): 152,
    (6, 13, 6): 154,
    (6, 14, 6): 155,
}

# R(n, r; k, s) keyed by (n, r, k, s); None means larger than 6
RAMSEY_UP_TO_6 = {
    (2, 1, 2, 1): 2,
    (2, 1, 3, 1): 3,
    (2, 1, 3, 2): 3,
    (2, 1, 3, 3): 3,
    (2, 1, 4, 1): 4,
    (2, 1, 4, 2): 4,
    (2, 1, 4, 3): 4,
    (2, 1, 4, 4): 4,
    (2, 1, 4, 5): 4,
    (2, 1, 4, 6): 4,
    (3, 1, 2, 1): 3,
    (3, 2, 2, 1): 3,
    (3, 3, 2, 1): 3,
    (3, 1, 3, 1): 6,
    (3, 1, 3, 2): 5,
    (3, 1, 3, 3): 3,
    (3, 2, 3, 1): 5,
    (3, 2, 3, 2): 3,
    (3, 2, 3, 3): 3,
    (3, 3, 3, 1): 3,
    (3, 3, 3, 2): 3,
    (3, 3, 3, 3): 3,
    (3, 1, 4, 1): None,
    (3, 1, 4, 2): None,
    (3, 1, 4, 3): None,
    (3, 1, 4, 4): 5,
    (3, 1, 4, 5): 4,
    (3, 1, 4, 6): 4,
    (3, 2, 4, 1): None,
    (3, 2, 4, 2): 5,
    (3, 2, 4, 3): 4,
    (3, 2, 4, 4): 4,
    (3, 2, 4, 5): 4,
    (3, 2, 4, 6): 4,
    (3, 3, 4, 1): 4,
    (3, 3, 4, 2): 4,
    (3, 3, 4, 3): 4,
    (3, 3, 4, 4): 4,
    (3, 3, 4, 5): 4,
    (3, 3, 4, 6): 4,
    (4, 1, 2, 1): 4,
    (4, 2, 2, 1): 4,
    (4, 3, 2, 1): 4,
    (4, 4, 2, 1): 4,
    (4, 5, 2, 1): 4,
    (4, 6, 2, 1): 4,
    (4, 1, 3, 1): None,
    (4, 1, 3, 2): None,
    (4, 1, 3, 3): 4,
    (4, 2, 3, 1): None,
    (4, 2, 3, 2): 5,
    (4, 2, 3, 3): 4,
    (4, 3, 3, 1): None,
    (4, 3, 3, 2): 4,
    (4, 3, 3, 3): 4,
    (4, 4, 3, 1): 5,
    (4, 4, 3, 2): 4,
    (4, 4, 3, 3): 4,
    (4, 5, 3, 1): 4,
    (4, 5, 3, 2): 4,
    (4, 5, 3, 3): 4,
    (4, 6, 3, 1): 4,
    (4, 6, 3, 2): 4,
    (4, 6, 3, 3): 4,
    (4, 1, 4, 1): None,
    (4, 1, 4, 2): None,
    (4, 1, 4, 3): None,
    (4, 1, 4, 4): None,
    (4, 1, 4, 5): 5,
    (4, 1, 4, 6): 4,
    (4, 2, 4, 1): None,
    (4, 2, 4, 2): None,
    (4, 2, 4, 3): None,
    (4, 2, 4, 4): 5,
    (4, 2, 4, 5): 4,
    (4, 2, 4, 6): 4,
    (4, 3, 4, 1): None,
    (4, 3, 4, 2): None,
    (4, 3, 4, 3): 6,
    (4, 3, 4, 4): 4,
    (4, 3, 4, 5): 4,
    (4, 3, 4, 6): 4,
    (4, 4, 4, 1): None,
    (4, 4, 4, 2): 5,
    (4, 4, 4, 3): 4,
    (4, 4, 4, 4): 4,
    (4, 4, 4, 5): 4,
    (4, 4, 4, 6): 4,
    (4, 5, 4, 1): 5,
    (4, 5, 4, 2): 4,
    (4, 5, 4, 3): 4,
    (4, 5, 4, 4): 4,
    (4, 5, 4, 5): 4,
    (4, 5, 4, 6): 4,
    (4, 6, 4, 1): 4,
    (4, 6, 4, 2): 4,
    (4, 6, 4, 3): 4,
    (4, 6, 4, 4): 4,
    (4, 6, 4, 5): 4,
    (4, 6, 4, 6): 4,
}

# isomorphism classes per order
CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}

TRIANGLE_FREE_ORDER_5 = 14
