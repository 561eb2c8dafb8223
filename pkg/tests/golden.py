"""Frozen expected values shared by the test modules.

Polynomials are ascending coefficient tuples, indexed by the number of
shrubs n (the t**(3n) coefficient of the matching series).  Scaled
entries are written as (factor, inner) pairs exactly as published, and
expanded by ``scaled``.
"""


def scaled(factor, inner):
    return tuple(factor * c for c in inner)


# plain word-ascent series, through t^15
R_COEFFS = {
    0: (1,),
    1: (0, 1, 1),
    2: (0, 0, 16, 39, 24, 1),
    3: (0, 0, 0, 1036, 4183, 5506, 2536, 178, 1),
    4: (0, 0, 0, 0, 174664, 992094, 2054131, 1896937, 726622, 67768, 1383, 1),
    5: (
        0, 0, 0, 0, 0,
        60849880, 446105914, 1272918569, 1800188609, 1307663949,
        442673265, 49244651, 1720211, 10951, 1,
    ),
}

# total rise, through t^15
RT_COEFFS = {
    0: (1,),
    1: (2,),
    2: (76, 4),
    3: (12104, 1328, 8),
    4: (5048368, 843440, 21776, 16),
    5: (4354721312, 977383552, 48921792, 349312, 32),
}

# base rise, through t^18
RB_COEFFS = {
    0: (1,),
    1: (2,),
    2: scaled(40, (1, 1)),
    3: scaled(2240, (1, 4, 1)),
    4: scaled(246400, (1, 11, 11, 1)),
    5: scaled(44844800, (1, 26, 66, 26, 1)),
    6: scaled(12197785600, (1, 57, 302, 302, 57, 1)),
}

# lexicographic rise, through t^18
RL_COEFFS = {
    0: (1,),
    1: (2,),
    2: scaled(16, (4, 1)),
    3: scaled(192, (43, 26, 1)),
    4: scaled(2816, (983, 975, 141, 1)),
    5: scaled(46592, (41141, 57086, 16506, 766, 1)),
    6: scaled(835584, (2848169, 5084786, 2311247, 261973, 4324, 1)),
}

# adjacent rise, through t^18
RA_COEFFS = {
    0: (1,),
    1: (2,),
    2: scaled(40, (1, 1)),
    3: (3194, 7052, 3194),
    4: scaled(880, (757, 2603, 2603, 757)),
    5: scaled(2, (143658061, 671012156, 1061347566, 671012156, 143658061)),
    6: scaled(
        136,
        (1634102299, 9646627503, 21007526198, 21007526198, 9646627503, 1634102299),
    ),
}

GF_GOLDEN = {
    "ris": R_COEFFS,
    "risT": RT_COEFFS,
    "risB": RB_COEFFS,
    "risL": RL_COEFFS,
    "risA": RA_COEFFS,
}

# the four linear-extension sequences, terms 0..10
LA_TERMS = (
    1,
    2,
    40,
    3194,
    666160,
    287316122,
    222237912664,
    280180369563194,
    537546603651987424,
    1490424231594917313242,
    5735930050702709579598280,
)
LB_TERMS = (
    1,
    9,
    477,
    74601,
    25740261,
    16591655817,
    17929265150637,
    30098784753112329,
    74180579084559895221,
    256937013876000351610089,
    1208025937371403268201735037,
)
LE_TERMS = (
    1,
    3,
    99,
    11259,
    3052323,
    1620265923,
    1488257158851,
    2172534146099019,
    4736552519729393091,
    14708695606607601165843,
    62671742039942099631403299,
)
LS_TERMS = (
    1,
    5,
    169,
    19241,
    5216485,
    2769073949,
    2543467934449,
    3712914075133121,
    8094884285992309261,
    25137521105896509819605,
    107107542395866078895709049,
)

SEQ_GOLDEN = {"LA": LA_TERMS, "LB": LB_TERMS, "LE": LE_TERMS, "LS": LS_TERMS}

# the worked five-shrub example: word 5 12 9 6 13 15 1 4 10 7 11 8 2 14 3
EXAMPLE_TRIPLES = ((5, 12, 9), (6, 13, 15), (1, 4, 10), (7, 11, 8), (2, 14, 3))
EXAMPLE_WORD = (5, 12, 9, 6, 13, 15, 1, 4, 10, 7, 11, 8, 2, 14, 3)
