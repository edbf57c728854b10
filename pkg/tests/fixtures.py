"""Arrays printed in the worked examples, row by row."""

from gebr.code import ArrayCodeword, GebrParams

GEBR_6_3_2 = GebrParams(6, 3, 2)
GEBR_6_2_2 = GebrParams(6, 2, 2)
GEBR_9_3_3 = GebrParams(9, 3, 3)

EX2_ROWS = [
    "010100",
    "101110",
    "101000",
    "001111",
    "111100",
    "100001",
]
EX2_ALT_ROWS = [
    "110000",
    "001010",
    "101000",
    "101011",
    "011000",
    "100001",
]
EX3_ROWS = [
    "011110",
    "111001",
    "101110",
    "011110",
    "111001",
    "101110",
]
EX3_ALT_ROWS = [
    "111010",
    "011101",
    "001010",
    "111010",
    "011101",
    "001010",
]
EX4_ROWS = [
    "001100101",
    "010011001",
    "011011110",
    "011111111",
    "100010011",
    "100001110",
    "010011010",
    "110001010",
    "111010000",
]


def grid(params, rows):
    return ArrayCodeword.from_rows(params, [[int(ch) for ch in row] for row in rows])


def ex2():
    return grid(GEBR_6_3_2, EX2_ROWS)


def ex2_alt():
    return grid(GEBR_6_3_2, EX2_ALT_ROWS)


def ex3():
    return grid(GEBR_6_2_2, EX3_ROWS)


def ex3_alt():
    return grid(GEBR_6_2_2, EX3_ALT_ROWS)


def ex4():
    return grid(GEBR_9_3_3, EX4_ROWS)
