"""Multiplicities in tensor powers of a permutation representation.

For a permutation character theta, the k-th tensor power has character
theta^k (pointwise), and its centralizer ring is a direct sum of full matrix
algebras M_d, one per irreducible with multiplicity d > 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .character_table import CharTable
from .errors import ConsistencyError
from .exact_algebra import CycNum, mat_mul
from .group_engine import ClassData
from .perm_characters import MultVector, PermChar, decompose


@dataclass(frozen=True)
class ClosedForm:
    """k -> sum over bases v of coeff_v * v^(k-1), stored as sorted (v, coeff) pairs."""

    terms: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_dict(cls, terms: dict[int, Fraction]) -> ClosedForm:
        return cls(tuple(sorted((v, Fraction(c)) for v, c in terms.items() if c)))

    def __call__(self, k: int) -> Fraction:
        return sum((c * Fraction(v) ** (k - 1) for v, c in self.terms), Fraction(0))

    def as_int(self, k: int) -> int:
        q = self(k)
        if q.denominator != 1:
            raise ConsistencyError(f"closed form is not integral at k={k}: {q}")
        return q.numerator

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for v, c in sorted(self.terms, key=lambda t: -t[0]):
            mag = abs(c)
            body = f"{v}^(k-1)" if v != 1 else ""
            if not body:
                term = str(mag)
            elif mag == 1:
                term = body
            elif mag.denominator == 1:
                term = f"{mag.numerator}*{body}"
            elif mag.numerator == 1:
                term = f"{body}/{mag.denominator}"
            else:
                term = f"{mag.numerator}*{body}/{mag.denominator}"
            out.append(("-" if c < 0 else "+", term))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, term in out[1:]:
            s += f" {sign} {term}"
        return s


@dataclass(frozen=True)
class TransitionMatrix:
    entries: tuple[tuple[int, ...], ...]

    def apply(self, d: tuple[int, ...]) -> tuple[int, ...]:
        """Row vector times the matrix."""
        r = len(self.entries)
        return tuple(sum(d[i] * self.entries[i][j] for i in range(r) if d[i]) for j in range(r))


@dataclass(frozen=True)
class WedderburnStructure:
    # (matrix size d, number of simple components M_d), d > 0, sorted by d
    components: tuple[tuple[int, int], ...]
    dimension: int
    # grouping by closed-form identity: (closed form, irreducible indices)
    families: tuple[tuple[ClosedForm, tuple[int, ...]], ...] = ()

    def __str__(self) -> str:
        return " + ".join(f"{n}M_{d}" if n > 1 else f"M_{d}" for d, n in self.components)


class TensorAnalysis:
    """Tensor-power data for one permutation character against one table."""

    def __init__(self, theta: PermChar, table: CharTable):
        self.theta = theta
        self.table = table
        self.classes: ClassData = table.classes
        if len(theta.values) != len(table):
            raise ValueError("permutation character does not match the table")

    @cached_property
    def base(self) -> MultVector:
        return decompose(self.theta, self.table, self.classes)

    @cached_property
    def transition(self) -> TransitionMatrix:
        x = self.table.matrix()
        scaled = [[v.scale(t) for v, t in zip(row, self.theta.values)] for row in x]
        prod = mat_mul(scaled, self.table.inverse)
        ints = []
        for i, row in enumerate(prod):
            out = []
            for j, v in enumerate(row):
                q = v if isinstance(v, CycNum) else CycNum.from_rational(v)
                if not q.is_rational() or q.to_fraction().denominator != 1:
                    raise ConsistencyError(f"transition matrix entry ({i}, {j}) is not an integer: {q}")
                out.append(q.to_int())
            ints.append(tuple(out))
        return TransitionMatrix(tuple(ints))

    def direct(self, k: int) -> tuple[int, ...]:
        """<theta^k, chi_i> by the inner product formula."""
        n = self.classes.group.order
        sizes = self.classes.sizes
        powered = [s * v**k for s, v in zip(sizes, self.theta.values)]
        out = []
        for row in self.table.conj_rows:
            acc = CycNum.from_rational(0)
            for w, val in zip(powered, row.values):
                if w:
                    acc = acc + val.scale(w)
            q = acc.to_fraction() / n
            if q.denominator != 1 or q < 0:
                raise ConsistencyError(f"tensor multiplicity is not a nonnegative integer: {q}")
            out.append(q.numerator)
        return tuple(out)

    def recurrence(self, k: int) -> tuple[int, ...]:
        d = self.base.entries
        a = self.transition
        for _ in range(k - 1):
            d = a.apply(d)
        return d

    def multiplicities(self, k: int) -> MultVector:
        if k < 1:
            raise ValueError("k must be at least 1")
        rec = self.recurrence(k)
        dir_ = self.direct(k)
        if rec != dir_:
            raise ConsistencyError(f"recurrence and inner product disagree at k={k}")
        return MultVector(rec)

    @cached_property
    def closed_forms(self) -> tuple[ClosedForm, ...]:
        n = self.classes.group.order
        sizes = self.classes.sizes
        values = sorted({v for v in self.theta.values if v})
        forms = []
        for row in self.table.conj_rows:
            terms = {}
            for v in values:
                acc = CycNum.from_rational(0)
                for j, t in enumerate(self.theta.values):
                    if t == v:
                        acc = acc + row[j].scale(sizes[j])
                if not acc.is_rational():
                    raise ConsistencyError(f"closed-form coefficient for base {v} is irrational")
                terms[v] = v * acc.to_fraction() / n
            forms.append(ClosedForm.from_dict(terms))
        return tuple(forms)

    def wedderburn(self, k: int) -> WedderburnStructure:
        d = self.multiplicities(k).entries
        counts: dict[int, int] = {}
        for v in d:
            if v:
                counts[v] = counts.get(v, 0) + 1
        fam: dict[ClosedForm, list[int]] = {}
        for i, f in enumerate(self.closed_forms):
            if d[i]:
                fam.setdefault(f, []).append(i)
        return WedderburnStructure(
            tuple(sorted(counts.items())),
            sum(v * v for v in d),
            tuple((f, tuple(ix)) for f, ix in fam.items()),
        )

    def spectral_dimension(self, k: int) -> int:
        sizes = self.classes.sizes
        n = self.classes.group.order
        total = sum(s * v ** (2 * k) for s, v in zip(sizes, self.theta.values))
        if total % n:
            raise ConsistencyError("spectral dimension is not an integer")
        return total // n

    def dimension(self, k: int) -> int:
        squares = sum(v * v for v in self.multiplicities(k).entries)
        spectral = self.spectral_dimension(k)
        if squares != spectral:
            raise ConsistencyError(f"sum of squares {squares} != spectral sum {spectral} at k={k}")
        return squares


def transition_matrix(t: PermChar, x: CharTable, c: ClassData | None = None) -> TransitionMatrix:
    return TensorAnalysis(t, x).transition


def tensor_multiplicities(t: PermChar, k: int, x: CharTable, c: ClassData | None = None) -> MultVector:
    return TensorAnalysis(t, x).multiplicities(k)


def closed_forms(t: PermChar, x: CharTable, c: ClassData | None = None) -> list[ClosedForm]:
    return list(TensorAnalysis(t, x).closed_forms)


def wedderburn(t: PermChar, k: int, x: CharTable, c: ClassData | None = None) -> WedderburnStructure:
    return TensorAnalysis(t, x).wedderburn(k)


def dim_centralizer(t: PermChar, k: int, x: CharTable, c: ClassData | None = None) -> int:
    return TensorAnalysis(t, x).dimension(k)
