"""Irreducible character tables by the Dixon-Schneider method.

Class-sum structure constants are reduced mod a prime p = 1 (mod exponent),
the common eigenvectors of the class matrices are split out over GF(p), and
each character value is lifted back to an exact cyclotomic number through
the eigenvalue multiplicities of the representing matrix.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import SplittingFailure
from .exact_algebra import CycNum, fp_discrete_root_table, mat_inverse, smallest_prime_1_mod
from .group_engine import ClassData, FinGroup


@dataclass(eq=False)
class ClassFunction:
    values: tuple[CycNum, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> CycNum:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __mul__(self, other: ClassFunction) -> ClassFunction:
        return ClassFunction(tuple(a * b for a, b in zip(self.values, other.values)))

    def conj(self) -> ClassFunction:
        return ClassFunction(tuple(v.conj() for v in self.values))

    @classmethod
    def from_ints(cls, values: Sequence[int], conductor: int = 1) -> ClassFunction:
        return cls(tuple(CycNum.from_rational(v, conductor) for v in values))


@dataclass(eq=False)
class CharTable:
    """Rows are irreducible characters, columns are conjugacy classes.

    Row 0 is the trivial character.  ``conductor`` is the group exponent and
    every entry is stored over Q(zeta_conductor).
    """

    rows: tuple[ClassFunction, ...]
    classes: ClassData = field(repr=False)
    conductor: int
    prime: int

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def class_sizes(self) -> list[int]:
        return self.classes.sizes

    @property
    def class_orders(self) -> list[int]:
        return self.classes.orders

    @property
    def degrees(self) -> list[int]:
        return [row[0].to_int() for row in self.rows]

    def matrix(self) -> list[list[CycNum]]:
        return [list(r.values) for r in self.rows]

    @cached_property
    def inverse(self) -> list[list[CycNum]]:
        """X^-1 by exact Gauss-Jordan elimination (no use of orthogonality)."""
        return mat_inverse(self.matrix())

    @cached_property
    def conj_rows(self) -> tuple[ClassFunction, ...]:
        return tuple(r.conj() for r in self.rows)


def inner_product(f: ClassFunction, h: ClassFunction, c: ClassData) -> CycNum:
    """(1/|G|) * sum over classes of |C| f(C) conj(h(C))."""
    if len(f) != len(c) or len(h) != len(c):
        raise ValueError("class function length does not match the class count")
    acc = CycNum.from_rational(0)
    for size, a, b in zip(c.sizes, f.values, h.values):
        acc = acc + (a * b.conj()).scale(size)
    return acc / c.group.order


def sum_of_degrees(t: CharTable) -> int:
    return sum(t.degrees)


# ---------------------------------------------------------------------------
# GF(p) linear algebra on row-major lists of ints


def _nullspace_mod(m: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : m v = 0} over GF(p), m given as rows."""
    rows = [r[:] for r in m]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc] % p
        basis.append(v)
    return basis


def class_matrices(c: ClassData) -> list[list[list[int]]]:
    """Structure constants: ``M[j][k][l]`` = #{x in C_j : x^-1 z_l in C_k}.

    Then C_j C_k = sum_l M[j][k][l] C_l as class sums.
    """
    g = c.group
    r = len(c)
    M = [[[0] * r for _ in range(r)] for _ in range(r)]
    mt = g.mul_table
    inv = g.inverses
    cls = c.class_of
    for l, z in enumerate(c.representatives):
        for x in range(g.order):
            y = mt[inv[x]][z]
            M[cls[x]][cls[y]][l] += 1
    return M


def _split(spaces: list[list[list[int]]], mat: list[list[int]], p: int) -> list[list[list[int]]]:
    # each space is a list of basis column-vectors, invariant under mat
    r = len(mat)
    out = []
    for basis in spaces:
        if len(basis) == 1:
            out.append(basis)
            continue
        # image of the basis under mat, as an r x d matrix
        img = [[sum(mat[i][k] * b[k] for k in range(r)) % p for b in basis] for i in range(r)]
        base = [[b[i] for b in basis] for i in range(r)]
        pieces = []
        total = 0
        for lam in range(p):
            sys = [[(img[i][j] - lam * base[i][j]) % p for j in range(len(basis))] for i in range(r)]
            ker = _nullspace_mod(sys, p)
            if ker:
                vecs = [[sum(basis[j][i] * k[j] for j in range(len(basis))) % p for i in range(r)] for k in ker]
                pieces.append(vecs)
                total += len(vecs)
                if total == len(basis):
                    break
        if total != len(basis):
            raise SplittingFailure("class matrix is not diagonalizable over GF(p)")
        out.extend(pieces)
    return out


def _cmp_key(row: ClassFunction) -> tuple:
    return (row[0].to_int(), tuple(v.sort_key() for v in row.values))


def dixon_schneider(g: FinGroup, c: ClassData) -> CharTable:
    """Exact irreducible character table of g."""
    r = len(c)
    e = g.exponent
    n = g.order
    p = smallest_prime_1_mod(e, 2 * math.sqrt(n))
    roots = fp_discrete_root_table(p, e)
    sizes = c.sizes
    M = class_matrices(c)

    # M[j] acting on column vectors: (M_j w)_k = sum_l M[j][k][l] w_l
    spaces = [[[1 if i == k else 0 for i in range(r)] for k in range(r)]]
    for j in range(1, r):
        if all(len(s) == 1 for s in spaces):
            break
        spaces = _split(spaces, [[x % p for x in row] for row in M[j]], p)
    if not all(len(s) == 1 for s in spaces):
        raise SplittingFailure("class matrices did not separate all irreducibles")

    inv_cls = c.inverse_class
    rows: list[ClassFunction] = []
    for (w,) in spaces:
        if w[0] % p == 0:
            raise SplittingFailure("eigenvector vanishes on the identity class")
        s = pow(w[0], -1, p)
        omega = [x * s % p for x in w]
        # chi(1)^2 = |G| / sum_j omega_j omega_{j*} / |C_j|
        t = sum(omega[j] * omega[inv_cls[j]] * pow(sizes[j], -1, p) for j in range(r)) % p
        deg_sq = n * pow(t, -1, p) % p
        deg = next((d for d in range(1, (p + 1) // 2) if d * d % p == deg_sq), None)
        if deg is None or n % deg:
            raise SplittingFailure("could not recover an integral character degree")
        modp = [omega[j] * deg * pow(sizes[j], -1, p) % p for j in range(r)]
        rows.append(ClassFunction(tuple(_lift(modp, c, j, deg, roots, p, e) for j in range(r))))

    rows.sort(key=_cmp_key)
    trivial = next(i for i, row in enumerate(rows) if all(v == 1 for v in row.values))
    rows.insert(0, rows.pop(trivial))
    return CharTable(tuple(rows), c, e, p)


def _lift(modp: list[int], c: ClassData, j: int, deg: int, roots: list[int], p: int, e: int) -> CycNum:
    # eigenvalue multiplicities of rho(g) for g in class j, recovered mod p
    o = c.classes[j].element_order
    step = e // o
    inv_o = pow(o, -1, p)
    terms: dict[int, int] = {}
    for k in range(o):
        acc = 0
        for l in range(o):
            acc += modp[c.power(j, l)] * roots[(-step * k * l) % e]
        m = acc * inv_o % p
        if m > deg:
            raise SplittingFailure("eigenvalue multiplicity out of range")
        if m:
            terms[k * step] = m
    return CycNum.from_terms(e, terms)


# ---------------------------------------------------------------------------
# helpers used by tests and reports


def is_orthonormal(t: CharTable) -> bool:
    c = t.classes
    for i, a in enumerate(t.rows):
        for j, b in enumerate(t.rows):
            if inner_product(a, b, c) != (1 if i == j else 0):
                return False
    return True


def columns_orthogonal(t: CharTable) -> bool:
    r = len(t)
    n = t.classes.group.order
    sizes = t.class_sizes
    for j in range(r):
        for k in range(r):
            acc = sum((row[j] * row[k].conj() for row in t.rows), CycNum.from_rational(0))
            want = Fraction(n, sizes[j]) if j == k else 0
            if acc != want:
                return False
    return True
