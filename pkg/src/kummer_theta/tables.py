"""Tabulated values the `verify` command checks the computations against."""

GAMMA_R4 = (1, 1, 0, 35, 140, 273, 448, 715, 870, 715, 448, 273, 140, 35, 0, 1, 1)

# n -> [N_0^{n+1}, N_1^{n+1}, ...] for a 2n-dimensional variety of Kummer type
COMPONENTS = {
    1: [0, 1],
    3: [140, 0, 1],
    5: [1008, 140, 0, 1],
    7: [4398, 1008, 140, 0, 1],
    9: [14688, 4398, 1008, 140, 0, 1],
    2: [36, 1],
    4: [378, 36, 1],
    6: [2185, 378, 36, 1],
    8: [8485, 2185, 378, 36, 1],
    10: [24453, 8485, 2185, 378, 36, 1],
}
ISOLATED_BOUND = 47

# d -> (#q(xi) = 0, #q(xi) = 1)
Q_SPLIT = {
    3: (15, 20),
    5: (141, 132),
    7: (355, 360),
    9: (355, 360),
    11: (141, 132),
    13: (15, 20),
}

HUDSON_GRID = (
    ("1", "ab'", "bc'", "ca'"),
    ("ac'", "a'", "c", "bb'"),
    ("ba'", "cc'", "b'", "a"),
    ("cb'", "b", "aa'", "c'"),
)

SIX_ONE = ("ab'", "ac'", "ba'", "bc'", "ca'", "cb'")

# Pairing of triples xi with divisors, q(xi) = 0 (support C)
CORRESPONDENCE_Q0 = (
    ("a,a',aa'", "1+a+a'+aa'"),
    ("b,b',bb'", "1+b+b'+bb'"),
    ("c,c',cc'", "1+c+c'+cc'"),
    ("a,b,c", "1+a+b+c"),
    ("a',b',c'", "1+a'+b'+c'"),
    ("aa',bb',cc'", "1+aa'+bb'+cc'"),
    ("c',ca',cb'", "a'+b'+c+cc'"),
    ("a',ab',ac'", "a+b'+c'+aa'"),
    ("b,cb',ab'", "a+b'+c+bb'"),
    ("b',bc',ba'", "a'+b+c'+bb'"),
    ("c,bc',ac'", "a+b+c'+cc'"),
    ("a,ba',ca'", "a'+b+c+aa'"),
    ("aa',bc',cb'", "a+a'+bb'+cc'"),
    ("bb',ca',ac'", "b+b'+aa'+cc'"),
    ("cc',ab',ba'", "c+c'+aa'+bb'"),
)

# q(xi) = 1 (support B_x, x = first summand).  The reference second row reads
# (ba',cc',ab') -> 1+ba'+cc'+ab', which has q = 0 and repeats the last q = 0
# row; the row below is the evidently intended one.
CORRESPONDENCE_Q1 = (
    ("ac',ba',cb'", "1+ac'+ba'+cb'"),
    ("ab',bc',ca'", "1+ab'+bc'+ca'"),
    ("a,b',ab'", "cc'+ca'+ba'+bc'"),
    ("a',b,ba'", "cc'+cb'+ab'+ac'"),
    ("a,c',ac'", "bb'+ba'+ca'+cb'"),
    ("a',c,ca'", "bb'+bc'+ab'+ac'"),
    ("b,c',bc'", "aa'+ab'+ca'+cb'"),
    ("b',c,cb'", "aa'+ac'+bc'+ba'"),
    ("a,bb',cb'", "c'+ca'+ba'+ac'"),
    ("b,aa',ca'", "c'+cb'+bc'+ab'"),
    ("a',bb',bc'", "c+ca'+ab'+ac'"),
    ("b',aa',ac'", "c+cb'+ba'+bc'"),
    ("a,cc',bc'", "b'+ba'+ca'+ab'"),
    ("c,aa',ba'", "b'+ac'+bc'+cb'"),
    ("a',cc',cb'", "b+ba'+ac'+ab'"),
    ("c',aa',ab'", "b+bc'+ca'+cb'"),
    ("b,cc',ac'", "a'+ab'+ba'+cb'"),
    ("c,bb',ab'", "a'+ac'+bc'+ca'"),
    ("b',cc',ca'", "a+ab'+bc'+ba'"),
    ("c',bb',ba'", "a+ac'+ca'+cb'"),
)
CORRECTED_ROW = ("ab',bc',ca'", "1+ab'+bc'+ca'")
PRINTED_ROW = ("ba',cc',ab'", "1+ba'+cc'+ab'")

# d = 5 examples: (xi, q(xi), support set, singular points)
D5_EXAMPLES = (
    ("ab',a',c,b,c'", 1, "contains_10_1", ("ba'",)),
    ("ab',cb',a',bb',c'", 0, "contains_6_1", ("b", "b'")),
    ("1,ac',ab',b',c'", 0, "contains_6_1", ("b'", "c'")),
)

SP_ORDER = 720
