"""Published leading sections of the named matrices, transcribed verbatim.

These are reference data for the reproduction checks.  They are compared
against computed sections and never used to compute anything.  One entry
(``bell2C`` row 5) is known to disagree with the exact value; see the
README for the explanation.
"""

FIBONACCI = [
    [1],
    [0, 1],
    [0, 1, 1],
    [0, 0, 2, 1],
    [0, 0, 1, 3, 1],
]

FIBONACCI_INVERSE = [
    [1],
    [0, 1],
    [0, -1, 1],
    [0, 2, -2, 1],
    [0, -5, 5, -3, 1],
]

LUCAS_INVERSE = [
    [1],
    [-2, 1],
    [6, -3, 1],
    [-20, 10, -4, 1],
    [70, -35, 15, -5, 1],
]

CATALAN_R = [
    [1],
    [0, 1],
    [0, 1, 1],
    [0, 2, 2, 1],
    [0, 5, 5, 3, 1],
]

CATALAN_Q = [
    [1],
    [2, 1],
    [6, 3, 1],
    [20, 10, 4, 1],
    [70, 35, 15, 5, 1],
]

BELL_2C = [
    [1],
    [2, 1],
    [4, 4, 1],
    [10, 12, 6, 1],
    [28, 36, 24, 8, 1],
    [84, 112, 96, 40, 10, 1],
]

# (catalog name, reference rows, identifier used in reports)
DISPLAYS = [
    ("FS", FIBONACCI, "display-fibonacci"),
    ("FSinv", FIBONACCI_INVERSE, "display-fibonacci-inverse"),
    ("LSinv", LUCAS_INVERSE, "display-lucas-inverse"),
    ("DFSinvD", CATALAN_R, "display-catalan-r"),
    ("DLSinvD", CATALAN_Q, "display-catalan-q"),
    ("bell2C", BELL_2C, "display-bell-2c"),
]
