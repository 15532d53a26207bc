"""Published values for the order-96 reflection group, used as verification targets.

Class and character indices here follow the published numbering (1-based in
the source, 0-based in these tuples); nothing in the computation depends on
that numbering, it is only matched against afterwards.

Closed forms are given as tuples of ``(coeff, base, offset)`` meaning
``coeff * base**(k + offset)``; dimension formulas use
``(coeff, base, k_mult, offset)`` meaning ``coeff * base**(k_mult*k + offset)``.
"""
from __future__ import annotations

from fractions import Fraction as F

GROUP_ORDER = 96
N_CLASSES = 16
N_SUBGROUP_CLASSES = 24
FAITHFUL_DEGREES = (96, 48, 32, 24, 24)
DEGREE_SUM = 36
DEGREE_MULTISET = (1,) * 4 + (2,) * 6 + (3,) * 4 + (4,) * 2

LABELS = ("theta1", "theta3", "theta4", "theta8", "theta9")
DEGREE_OF = {"theta1": 96, "theta3": 48, "theta4": 32, "theta8": 24, "theta9": 24}

FIXED_POINTS = {
    "theta1": (96, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "theta3": (48, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 0),
    "theta4": (32, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 0, 0, 0, 0),
    "theta8": (24, 0, 0, 0, 0, 0, 0, 0, 4, 0, 4, 0, 0, 0, 4, 0),
    "theta9": (24, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 4, 0, 4, 0),
}

MULTIPLICITIES = {
    "theta1": (1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4),
    "theta3": (1, 1, 0, 0, 2, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2),
    "theta4": (1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2),
    "theta8": (1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1),
    "theta9": (1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1),
}

# which closed-form family each irreducible falls in
LETTERS = {
    "theta1": "aaaaeeeeeellllpp",
    "theta3": "aaccefggggllnnpp",
    "theta4": "aaaaeeeeeellllpp",
    "theta8": "abbbefeefflmmmpp",
    "theta9": "abbbefffeelmmmpp",
}

_FAMILY_24 = {
    "a": ((F(1, 4), 24, -1), (F(3), 4, -2)),
    "b": ((F(1, 4), 24, -1), (F(-1), 4, -2)),
    "e": ((F(1, 2), 24, -1), (F(1, 2), 4, -1)),
    "f": ((F(1, 2), 24, -1), (F(-1, 2), 4, -1)),
    "l": ((F(1, 32), 24, 0), (F(-3), 4, -2)),
    "m": ((F(1, 32), 24, 0), (F(1), 4, -2)),
    "p": ((F(1), 24, -1),),
}

# formulas exactly as printed
FORMULAS = {
    "theta1": {
        "a": ((F(1), 96, -1),),
        "e": ((F(1, 48), 96, 0),),
        "l": ((F(1, 32), 96, 0),),
        "p": ((F(96, 24), 1, 0),),
    },
    "theta3": {
        "a": ((F(1, 2), 48, -1), (F(1, 2), 8, -1)),
        "c": ((F(1, 2), 48, -1), (F(-1, 2), 8, -1)),
        "e": ((F(1), 48, -1), (F(1), 8, -1)),
        "f": ((F(1), 48, -1), (F(-1), 8, -1)),
        "g": ((F(1), 48, -1),),
        "l": ((F(1, 32), 48, 0), (F(-1, 2), 8, -1)),
        "n": ((F(1, 32), 48, 0), (F(1, 2), 8, -1)),
        "p": ((F(1, 24), 48, 0),),
    },
    "theta4": {
        "a": ((F(1, 3), 32, -1), (F(1, 12), 8, 0)),
        "e": ((F(1, 48), 32, 0), (F(-1, 12), 8, 0)),
        "l": ((F(1), 32, -1),),
        "p": ((F(1, 24), 32, 0), (F(1, 12), 8, 0)),
    },
    "theta8": dict(_FAMILY_24),
    "theta9": dict(_FAMILY_24),
}

# printed formula -> corrected formula, with the reason
CORRECTIONS = {
    ("theta1", "p"): (
        ((F(1, 24), 96, 0),),
        "printed as the constant 96/24; the k-dependence 96^k/24 is forced by the "
        "degree-4 multiplicity of the regular character and by the dimension table",
    ),
}

# simple components as printed: (count, family letter), in printed order
GROUPINGS = {
    "theta1": ((4, "a"), (6, "e"), (4, "l"), (2, "p")),
    "theta3": ((2, "a"), (2, "c"), (1, "e"), (1, "f"), (4, "g"), (2, "l"), (2, "n"), (2, "p")),
    "theta4": ((4, "a"), (6, "e"), (4, "l"), (2, "p")),
    "theta8": ((1, "a"), (3, "b"), (1, "e"), (3, "f"), (2, "e"), (1, "l"), (3, "m"), (2, "p")),
    "theta9": ((1, "a"), (3, "b"), (1, "e"), (3, "f"), (2, "e"), (1, "l"), (3, "m"), (2, "p")),
}

DIM_FORMULAS = {
    "theta1": ((F(1), 96, 2, -1),),
    "theta3": ((F(1, 2), 48, 2, -1), (F(1, 2), 8, 2, -1)),
    "theta4": ((F(1, 3), 32, 2, -1), (F(1, 12), 8, 2, 0)),
    "theta8": ((F(1, 4), 24, 2, -1), (F(3), 4, 2, -2)),
    "theta9": ((F(1, 4), 24, 2, -1), (F(3), 4, 2, -2)),
}

DIM_TABLE = {
    "theta1": (96, 884736, 8153726976, 75144747810816),
    "theta3": (28, 55552, 127418368, 293535219712),
    "theta4": (16, 11264, 11206656, 11454644224),
    "theta8": (9, 3504, 1991424, 1146630144),
    "theta9": (9, 3504, 1991424, 1146630144),
}


def eval_dim_formula(terms, k: int) -> F:
    return sum((c * F(b) ** (km * k + off) for c, b, km, off in terms), F(0))


def formula_terms(label: str, letter: str, corrected: bool = True):
    if corrected and (label, letter) in CORRECTIONS:
        return CORRECTIONS[(label, letter)][0]
    return FORMULAS[label][letter]
