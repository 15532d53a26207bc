"""Permutation characters of actions and their irreducible decompositions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .character_table import CharTable, ClassFunction, inner_product
from .errors import NonIntegerMultiplicity, NotTransitive
from .exact_algebra import CycNum
from .group_engine import ClassData
from .subgroup_lattice import CosetAction


@dataclass(frozen=True)
class PermChar:
    values: tuple[int, ...]
    source: str

    @property
    def degree(self) -> int:
        return self.values[0]

    def class_function(self) -> ClassFunction:
        return ClassFunction.from_ints(self.values)

    def power(self, k: int) -> PermChar:
        return PermChar(tuple(v**k for v in self.values), f"{self.source}^{k}")


@dataclass(frozen=True)
class MultVector:
    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)


def permutation_character(a: CosetAction, c: ClassData) -> PermChar:
    """Fixed-point counts of the action at each class representative."""
    if a.degree < 1:
        raise ValueError("action has no points")
    return PermChar(tuple(a.fixed_points(x) for x in c.representatives), a.label)


def orbit_count(theta: PermChar, c: ClassData) -> Fraction:
    """Burnside: average number of fixed points."""
    return Fraction(sum(s * v for s, v in zip(c.sizes, theta.values)), c.group.order)


def _as_int(q: CycNum, what: str) -> int:
    if not q.is_rational():
        raise NonIntegerMultiplicity(f"{what} is irrational: {q}")
    f = q.to_fraction()
    if f.denominator != 1 or f < 0:
        raise NonIntegerMultiplicity(f"{what} is not a nonnegative integer: {f}")
    return f.numerator


def decompose(theta: PermChar, x: CharTable, c: ClassData) -> MultVector:
    """Multiplicities <theta, chi_i>; raises if any is not a nonnegative integer."""
    f = theta.class_function()
    return MultVector(tuple(_as_int(inner_product(f, chi, c), f"<{theta.source}, chi_{i + 1}>") for i, chi in enumerate(x.rows)))


def decompose_by_inverse(theta: PermChar, x: CharTable) -> MultVector:
    """Multiplicities from the row vector of theta times X^-1."""
    inv = x.inverse
    r = len(x)
    out = []
    for i in range(r):
        acc = CycNum.from_rational(0)
        for j, v in enumerate(theta.values):
            if v:
                acc = acc + inv[j][i].scale(v)
        out.append(_as_int(acc, f"(theta X^-1)_{i + 1}"))
    return MultVector(tuple(out))


def reconstruct(m: MultVector, x: CharTable) -> list[CycNum]:
    """sum_i m_i chi_i as a list of class values."""
    r = len(x.classes)
    out = [CycNum.from_rational(0)] * r
    for mi, chi in zip(m.entries, x.rows):
        if mi:
            out = [a + b.scale(mi) for a, b in zip(out, chi.values)]
    return out


def is_multiplicity_free(m: MultVector) -> bool:
    return all(v in (0, 1) for v in m.entries)


def contains_identity_once(m: MultVector) -> bool:
    return m.entries[0] == 1


def is_doubly_transitive(m: MultVector) -> bool:
    if m.entries[0] != 1:
        raise NotTransitive("trivial character multiplicity is not 1")
    nonzero = [v for v in m.entries if v]
    return len(nonzero) == 2 and all(v == 1 for v in nonzero)


def predicates(m: MultVector) -> dict[str, bool]:
    transitive = contains_identity_once(m)
    return {
        "transitive": transitive,
        "multiplicity_free": is_multiplicity_free(m),
        "doubly_transitive": transitive and is_doubly_transitive(m),
    }


def constituents(m: MultVector) -> list[tuple[int, int]]:
    """(irreducible index, multiplicity) for nonzero entries, 0-based."""
    return [(i, v) for i, v in enumerate(m.entries) if v]


def format_decomposition(m: MultVector, names: Sequence[str] | None = None) -> str:
    names = names or [f"chi{i + 1}" for i in range(len(m))]
    parts = [(names[i] if v == 1 else f"{v}*{names[i]}") for i, v in constituents(m)]
    return " + ".join(parts) if parts else "0"
