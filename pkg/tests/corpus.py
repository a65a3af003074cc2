"""Named diagrams shared by the test modules."""

from turaev import braid_closure, parse_braid, parse_pd

TREFOIL_PD = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"

PD_CODES = {
    "3_1": TREFOIL_PD,
    "4_1": "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)",
    "5_1": "X(1,6,2,7),X(3,8,4,9),X(5,10,6,1),X(7,2,8,3),X(9,4,10,5)",
    "5_2": "X(1,4,2,5),X(3,8,4,9),X(5,10,6,1),X(9,6,10,7),X(7,2,8,3)",
    "6_1": "X(1,4,2,5),X(7,10,8,11),X(3,9,4,8),X(9,3,10,2),X(5,12,6,1),X(11,6,12,7)",
    "6_2": "X(1,4,2,5),X(5,10,6,11),X(3,9,4,8),X(9,3,10,2),X(7,12,8,1),X(11,6,12,7)",
    "6_3": "X(4,2,5,1),X(8,4,9,3),X(12,9,1,10),X(10,5,11,6),X(6,11,7,12),X(2,8,3,7)",
    "7_1": "X(1,8,2,9),X(3,10,4,11),X(5,12,6,13),X(7,14,8,1),X(9,2,10,3),X(11,4,12,5),X(13,6,14,7)",
    "8_19": "X(4,2,5,1),X(8,4,9,3),X(9,15,10,14),X(5,13,6,12),X(13,7,14,6),X(11,1,12,16),X(15,11,16,10),X(2,8,3,7)",
}

BRAIDS = {
    "3_1 (s1^3)": ("s1^3", 2),
    "4_1 (3-braid)": ("s1 s2^-1 s1 s2^-1", 3),
    "alternating 3-braid": ("s1^2 s2^-1 s1 s2^-2", 3),
    "alternating 4-braid": ("s1 s2^-1 s3 s1 s2^-1 s3 s2^-1", 4),
    "10_124": ("s1^5 s2 s1^3 s2", 3),
    "T(3,4)": ("s1 s2 s1 s2 s1 s2 s1 s2", 3),
    "8_20 braid": ("s1^3 s2^-1 s1^-3 s2^-1", 3),
    "mixed 10": ("s1 s1 s2 s1^-1 s2 s2 s1 s2^-1 s1 s2", 3),
    "mixed 11": ("s1 s2 s1^-1 s2 s3 s2^-1 s1 s3^-1 s2 s1 s3", 4),
    "kinked trefoil": ("s1^3 s2", 3),
    "kinked figure-eight": ("s1 s2^-1 s1 s2^-1 s3^-1", 4),
}


def corpus():
    """All corpus diagrams as (name, Diagram) pairs."""
    out = [(name, parse_pd(code)) for name, code in PD_CODES.items()]
    out += [(name, braid_closure(parse_braid(word, n))) for name, (word, n) in BRAIDS.items()]
    return out


# reduced alternating diagrams, with |sigma| from standard knot tables
ALTERNATING = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1",
               "3_1 (s1^3)", "4_1 (3-braid)", "alternating 3-braid", "alternating 4-braid"]
NON_ALTERNATING = ["8_19", "10_124", "T(3,4)", "8_20 braid", "mixed 10", "mixed 11"]
