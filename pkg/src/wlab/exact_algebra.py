"""Exact arithmetic: cyclotomic numbers over Q and small prime-field helpers.

Rationals are :class:`fractions.Fraction` throughout.  A :class:`CycNum` is an
element of Q(zeta_n) stored in the power basis ``1, z, ..., z^(phi(n)-1)``
reduced modulo the n-th cyclotomic polynomial, so equality is plain
coefficient equality once two numbers share a conductor.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# integer polynomials and number theory


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (coefficient lists, low degree first).

    ``den`` must be monic.
    """
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + dn]
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num[:dn]):
        raise ArithmeticError("polynomial division is not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % q for q in range(3, math.isqrt(p) + 1, 2))


def prime_factors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group GF(p)*."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    qs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("unreachable")


def fp_discrete_root_table(p: int, e: int) -> list[int]:
    """Powers ``[w^0, w^1, ..., w^(e-1)]`` of a fixed primitive e-th root of unity in GF(p).

    ``w`` is ``g^((p-1)/e)`` for the smallest primitive root ``g``, so the
    choice is deterministic.  Raises ``ValueError`` unless p is a prime with
    ``p = 1 (mod e)``.
    """
    if e < 1:
        raise ValueError("e must be positive")
    if not is_prime(p) or (p - 1) % e:
        raise ValueError(f"no primitive {e}-th root of unity in GF({p})")
    w = pow(primitive_root(p), (p - 1) // e, p)
    table = [1]
    for _ in range(e - 1):
        table.append(table[-1] * w % p)
    return table


def smallest_prime_1_mod(e: int, lower: float) -> int:
    """Smallest prime p with p = 1 (mod e) and p > lower."""
    p = e + 1
    while p <= lower or not is_prime(p):
        p += e
    return p


class FpElem:
    """Element of the prime field GF(p)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other) -> int:
        if isinstance(other, FpElem):
            if other.modulus != self.modulus:
                raise ValueError("mismatched moduli")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FpElem(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FpElem(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FpElem(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FpElem(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.value, self.modulus)

    def inverse(self) -> FpElem:
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse in GF(p)")
        return FpElem(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self * FpElem(v, self.modulus).inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FpElem(pow(self.value, k, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElem({self.value}, {self.modulus})"


# ---------------------------------------------------------------------------
# cyclotomic numbers


@lru_cache(maxsize=None)
def _power_reductions(n: int) -> tuple[tuple[int, ...], ...]:
    # row j: coordinates of z^j (0 <= j < n) in the power basis mod Phi_n
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z: shift up, then fold the z^deg term
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _units(n: int) -> tuple[int, ...]:
    return tuple(a for a in range(1, n + 1) if math.gcd(a, n) == 1)


def _as_fraction(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class CycNum:
    """Exact element of Q(zeta_n), immutable.

    Build with :meth:`zeta`, :meth:`from_rational` or :meth:`from_terms`.
    Arithmetic between different conductors promotes to the lcm, and plain
    ints / Fractions are accepted as operands.
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable[Rational]):
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if conductor < 1:
            raise ValueError("conductor must be positive")
        if len(coeffs) != euler_phi(conductor):
            raise ValueError("coefficient vector has the wrong length")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[int, Rational] | Iterable[tuple[int, Rational]]) -> CycNum:
        """Reduce ``sum c_j z_n^j`` (any integer exponents) to canonical form."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        rows = _power_reductions(n)
        acc = [Fraction(0)] * euler_phi(n)
        for j, c in items:
            if not c:
                continue
            row = rows[j % n]
            for i, r in enumerate(row):
                if r:
                    acc[i] += r * c
        return cls(n, acc)

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> CycNum:
        return cls.from_terms(n, {power: 1})

    @classmethod
    def from_rational(cls, q: Rational, conductor: int = 1) -> CycNum:
        return cls.from_terms(conductor, {0: q})

    # -- structure ---------------------------------------------------------

    def promote(self, n: int) -> CycNum:
        """Re-express in Q(zeta_n); n must be a multiple of the conductor."""
        if n == self.conductor:
            return self
        if n % self.conductor:
            raise ValueError(f"cannot embed Q(zeta_{self.conductor}) in Q(zeta_{n})")
        step = n // self.conductor
        return CycNum.from_terms(n, ((j * step, c) for j, c in enumerate(self.coeffs)))

    def _pair(self, other) -> tuple[CycNum, CycNum]:
        if not isinstance(other, CycNum):
            other = CycNum.from_rational(other, self.conductor)
        if other.conductor == self.conductor:
            return self, other
        n = math.lcm(self.conductor, other.conductor)
        return self.promote(n), other.promote(n)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def to_int(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise ValueError(f"{q} is not an integer")
        return q.numerator

    def galois(self, a: int) -> CycNum:
        """Image under the automorphism z -> z^a (gcd(a, n) = 1)."""
        n = self.conductor
        if math.gcd(a, n) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        return CycNum.from_terms(n, ((j * a, c) for j, c in enumerate(self.coeffs)))

    def conj(self) -> CycNum:
        return self.galois(-1)

    def norm(self) -> Fraction:
        prod = self
        for a in _units(self.conductor)[1:]:
            prod = prod * self.galois(a)
        return prod.to_fraction()

    def inverse(self) -> CycNum:
        if self.is_zero():
            raise ZeroDivisionError("CycNum division by zero")
        if self.is_rational():
            return CycNum.from_rational(1 / self.coeffs[0], self.conductor)
        others = CycNum.from_rational(1, self.conductor)
        for a in _units(self.conductor)[1:]:
            others = others * self.galois(a)
        nrm = (self * others).to_fraction()
        return others * (1 / nrm)

    def reduce_conductor(self) -> CycNum:
        """The same number written over the smallest conductor that contains it."""
        n = self.conductor
        for d in sorted(d for d in range(1, n + 1) if n % d == 0):
            if d == n:
                return self
            if d % 4 == 2:
                # Q(zeta_d) == Q(zeta_{d/2}) for these, already tried
                continue
            fixing = [a for a in _units(n) if a % d == 1 % d]
            if all(self.galois(a) == self for a in fixing):
                return self._solve_in(d)
        return self

    def _solve_in(self, d: int) -> CycNum:
        # express self in the power basis of Q(zeta_d) by linear solve over Q
        basis = [CycNum.zeta(d, j).promote(self.conductor).coeffs for j in range(euler_phi(d))]
        m = len(basis)
        rows = [[basis[j][i] for j in range(m)] + [self.coeffs[i]] for i in range(len(self.coeffs))]
        sol = _solve_consistent(rows, m)
        return CycNum(d, sol)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (CycNum, int, Fraction)):
            return NotImplemented
        a, b = self._pair(other)
        return CycNum(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, (CycNum, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q: Rational) -> CycNum:
        return CycNum(self.conductor, [x * q for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._pair(other)
        n = a.conductor
        prod: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    k = (i + j) % n
                    prod[k] = prod.get(k, 0) + x * y
        return CycNum.from_terms(n, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("CycNum division by zero")
            return self.scale(1 / _as_fraction(other))
        if not isinstance(other, CycNum):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.from_rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(self.coeffs[0])
            else:
                r = self.reduce_conductor()
                h = hash((r.conductor, r.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def sort_key(self) -> tuple:
        """Deterministic total order key (not the complex ordering)."""
        return (self.conductor, self.coeffs)

    # -- output ------------------------------------------------------------

    def to_complex(self) -> complex:
        n = self.conductor
        return sum(float(c) * cmath.exp(2j * cmath.pi * k / n) for k, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [[j, f"{c.numerator}/{c.denominator}"] for j, c in enumerate(self.coeffs) if c],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> CycNum:
        return cls.from_terms(int(obj["conductor"]), ((int(j), Fraction(c)) for j, c in obj["coeffs"]))

    def __str__(self):
        r = self.reduce_conductor()
        if r.is_rational():
            return str(r.coeffs[0])
        n = r.conductor
        parts = []
        for j, c in enumerate(r.coeffs):
            if not c:
                continue
            z = "" if j == 0 else ("E(%d)" % n if j == 1 else "E(%d)^%d" % (n, j))
            if not z:
                term = str(abs(c))
            elif abs(c) == 1:
                term = z
            else:
                term = f"{abs(c)}*{z}"
            parts.append(("-" if c < 0 else "+", term))
        sign, first = parts[0]
        s = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            s += sign + term
        return s

    def __repr__(self):
        return f"CycNum({self.conductor}, {[str(c) for c in self.coeffs]})"


def _solve_consistent(rows: list[list[Fraction]], m: int) -> list[Fraction]:
    """Solve an overdetermined but consistent system given as augmented rows."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[m] for row in rows[r:]):
        raise ArithmeticError("inconsistent linear system")
    sol = [Fraction(0)] * m
    for i, col in enumerate(pivots):
        sol[col] = rows[i][m]
    return sol


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_conj(a: CycNum) -> CycNum:
    return a.conj()


# ---------------------------------------------------------------------------
# exact matrices over CycNum


def mat_mul(a: list[list], b: list[list]) -> list[list]:
    inner = len(b)
    cols = len(b[0])
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = 0
            for k in range(inner):
                x = row[k]
                y = b[k][j]
                if x != 0 and y != 0:
                    acc = x * y + acc
            new.append(acc)
        out.append(new)
    return out


def mat_inverse(m: list[list[CycNum]]) -> list[list[CycNum]]:
    """Gauss-Jordan inverse over the cyclotomic field."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    one = CycNum.from_rational(1)
    zero = CycNum.from_rational(0)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if not _to_cyc(aug[i][col]).is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = _to_cyc(aug[col][col]).inverse()
        aug[col] = [_to_cyc(x) * inv for x in aug[col]]
        for i in range(n):
            f = _to_cyc(aug[i][col])
            if i != col and not f.is_zero():
                aug[i] = [_to_cyc(x) - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def _to_cyc(x) -> CycNum:
    return x if isinstance(x, CycNum) else CycNum.from_rational(x)
