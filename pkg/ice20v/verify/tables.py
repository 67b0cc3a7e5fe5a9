"""
Reference values the verification suites compare against.

Every table carries a short source string that ends up next to each check in the report.
"""

import typing as t

# DWBC1 and DWBC2 configurations, quarter-turn symmetric tilings of the holey Aztec square.
A_SEQUENCE = [1, 3, 23, 433, 19705, 2151843, 561696335, 349667866305]
A_SOURCE = "A_n: DWBC1/DWBC2 configurations = quarter-turn symmetric tilings"

# DWBC3 configurations, domino tilings of the triangle.
B_SEQUENCE = [1, 3, 29, 901, 89893, 28793575]
B_SOURCE = "B_n: DWBC3 configurations = tilings of the triangle T_n"

DWBC4_SEQUENCE = [1, 3, 59, 7813, 6953685]
DWBC4_SOURCE = "DWBC4 configurations on the n x n grid"

# k -> counts for n = 1..6; rows saturate once k >= n-1.
PENTAGON_TABLE: t.Dict[int, t.List[int]] = {
    1: [1, 4, 56, 2640, 411840, 210613312],
    2: [1, 4, 60, 3268, 628420, 417062340],
    3: [1, 4, 60, 3328, 675584, 495222784],
    4: [1, 4, 60, 3328, 678912, 507356160],
    5: [1, 4, 60, 3328, 678912, 508035072],
}
PENTAGON_SOURCE = "pentagon p_{n,k} = tilings of the raised triangle T_{n,k}"

# (b, c) -> N_{a,b,c} for a = 0..6.
NABC_TABLE: t.Dict[t.Tuple[int, int], t.List[int]] = {
    (0, 1): [1, 3, 8, 21, 55, 144, 377],
    (0, 2): [1, 8, 59, 415, 2874, 19810, 136358],
    (1, 1): [3, 11, 41, 153, 571, 2131, 7953],
    (0, 3): [1, 21, 415, 7813, 143336, 2598735, 46881130],
    (1, 2): [8, 85, 959, 10934, 124869, 1426389, 16294360],
    (2, 1): [5, 23, 103, 456, 2009, 8833, 38803],
    (0, 4): [1, 55, 2874, 143336, 6953685, 331859360, 15697347566],
    (1, 3): [21, 604, 19018, 615405, 20055060, 654666505, 21378877706],
    (2, 2): [20, 333, 5331, 83821, 1305844, 20250090, 313317426],
    (3, 1): [7, 39, 201, 1000, 4888, 23673, 114087],
    (0, 5): [1, 144, 19810, 2598735, 331859360, 41634316343, 5164420164680],
    (1, 4): [55, 4194, 355234, 31391724, 2816672309, 254000932538, 22940968768675],
    (2, 3): [76, 4151, 213173, 10696445, 530068706, 26081095911, 1278122145554],
    (3, 2): [36, 881, 18859, 379449, 7391755, 141473217, 2681264915],
    (4, 1): [9, 59, 343, 1880, 9976, 51944, 267385],
}
NABC_SOURCE = "N_{a,b,c}: DWBC4 on the (a+b+1) x (b+c+1) rectangle"

# Coefficients of τ^0, τ^1, ... for n = 1..7.
REFINED_TYPE1: t.List[t.List[int]] = [
    [1],
    [1, 2],
    [3, 14, 6],
    [23, 198, 166, 46],
    [433, 6322, 7874, 4210, 866],
    [19705, 468866, 777258, 606026, 240578, 39410],
    [2151843, 81652574, 169682406, 172604734, 99699558, 31601534, 4303686],
]
REFINED_TYPE2: t.List[t.List[int]] = [
    [1],
    [2, 1],
    [10, 10, 3],
    [122, 182, 106, 23],
    [3594, 7098, 6042, 2538, 433],
    [254138, 623062, 691642, 423302, 139994, 19705],
    [42978130, 125667490, 171143570, 136152146, 65650546, 17952610, 2151843],
]
REFINED_SOURCE = "refined quarter-turn tilings by the endpoint of the last path"

# (boundary kind, symmetry) -> counts for n = 1, 2, ...
SYMMETRY_COUNTS: t.Dict[t.Tuple[str, str], t.List[int]] = {
    ("DWBC1", "SAPM"): [1, 3, 13, 85, 861],
    ("DWBC2", "SAPM"): [1, 3, 13, 85, 861],
    ("DWBC1", "TCAPM"): [1, 2, 6, 28, 204],
    ("DWBC2", "TCAPM"): [1, 2, 6, 28, 204],
    ("DWBC3", "SAPM"): [1, 3, 15, 135, 2223],
    ("DWBC4", "SAPM"): [1, 3, 27, 639],
    ("DWBC4", "HTAPM"): [1, 1, 7, 53],
}
SYMMETRY_SOURCE = "symmetry classes of alternating phase matrices"

SIX_VERTEX_CENSUS_3 = [1, 2, 2, 2, 4, 4, 8]

# Matrices of the four types, as entry codes.
EXAMPLE_APMS: t.Dict[int, t.List[t.List[str]]] = {
    1: [
        ["0", "0", "-w", "0", "0"],
        ["0", "0", "1", "-w2", "0"],
        ["-w2", "-w2", "0", "0", "1"],
        ["0", "0", "-w", "0", "0"],
        ["0", "0", "-w", "0", "0"],
    ],
    2: [
        ["0", "0", "-w", "0", "0"],
        ["0", "0", "-w", "0", "0"],
        ["1", "0", "0", "-w2", "-w2"],
        ["0", "-w2", "1", "0", "0"],
        ["0", "0", "-w", "0", "0"],
    ],
    3: [
        ["0", "1", "0", "0", "0"],
        ["1", "0", "0", "0", "0"],
        ["-w", "0", "0", "0", "0"],
        ["w2", "0", "0", "-w", "0"],
        ["1", "w", "-w2", "1", "-w2"],
    ],
    4: [
        ["-w", "w2", "w2", "w2", "-1", "0"],
        ["0", "1", "-w2", "0", "w", "0"],
        ["0", "-w", "-1", "-w", "0", "-1"],
        ["0", "0", "-w2", "0", "1", "w"],
        ["w2", "w2", "w2", "-w", "0", "w"],
        ["1", "-w2", "-w2", "-w2", "w", "-w2"],
    ],
}
EXAMPLE_SOURCE = "worked example matrix of type {kind}"

# Line sums of the type 4 example: rows as multiples of ω², columns of ω, diagonals 1-n..n-1.
EXAMPLE_TYPE4_ROW_SUMS = [4, -2, 2, -2, 3, -5]
EXAMPLE_TYPE4_COLUMN_SUMS = [-2, -2, 1, -2, 2, 3]
EXAMPLE_TYPE4_DIAGONAL_SUMS = [1, 0, 0, 0, 1, 1, 1, -1, -2, -1, 0]

# (log A_n)/n² at n = 7 and 8, rounded to five digits.
TREND_DENSITIES = {7: 0.41115, 8: 0.41532}
TREND_FLOOR = 0.41
