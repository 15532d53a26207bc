from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wlab.exact_algebra import (
    CycNum,
    FpElem,
    cyc_conj,
    cyc_mul,
    cyclotomic_poly,
    euler_phi,
    fp_discrete_root_table,
    mat_inverse,
    mat_mul,
    smallest_prime_1_mod,
)

CONDUCTORS = [3, 4, 8, 12, 24]


def z(n, j=1):
    return CycNum.zeta(n, j)


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert euler_phi(24) == 8


def test_i_squared():
    assert cyc_mul(z(4), z(4)) == -1


def test_cube_roots_sum_to_zero():
    assert (1 + z(3) + z(3, 2)).is_zero()


def test_one_plus_zeta8_norm():
    x = 1 + z(8)
    got = cyc_mul(x, cyc_conj(x))
    # expanded by hand: 2 + z + z^-1 = 2 + z - z^3 since z^4 = -1
    assert got == CycNum(8, [2, 1, 0, -1])
    assert abs(got.to_complex() - (2 + 2**0.5)) < 1e-12


def test_conj_examples():
    assert cyc_conj(z(4)) == -z(4)
    assert cyc_conj(CycNum.from_rational(Fraction(3, 2))) == Fraction(3, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 12, 24])
def test_full_coset_sums_vanish(n):
    # sum over the n-th roots, and over each coset of a proper subgroup of them
    assert CycNum.from_terms(n, {j: 1 for j in range(n)}).is_zero()
    for d in range(2, n + 1):
        if n % d == 0:
            step = n // d
            for shift in range(step):
                total = CycNum.from_terms(n, {shift + step * j: 1 for j in range(d)})
                assert total.is_zero()
                assert not any(total.coeffs)


def test_promotion_and_cross_conductor_equality():
    assert z(4) == z(8, 2) == z(24, 6)
    assert hash(z(4)) == hash(z(24, 6))
    assert z(3) * z(4) == z(12, 7)
    assert z(6) == -z(3, 2)
    assert z(6).reduce_conductor().conductor == 3


def test_rational_round_trip():
    q = Fraction(-7, 9)
    x = CycNum.from_rational(q, 24)
    assert x.is_rational() and x.to_fraction() == q
    with pytest.raises(ValueError):
        z(4).to_fraction()


def test_json_round_trip():
    x = CycNum.from_terms(24, {0: Fraction(1, 2), 5: -3, 7: 2})
    obj = x.to_json()
    assert obj["conductor"] == 24
    assert [j for j, _ in obj["coeffs"]] == sorted(j for j, _ in obj["coeffs"])
    assert all("/" in c for _, c in obj["coeffs"])
    assert CycNum.from_json(obj) == x


def test_str_forms():
    assert str(z(4)) == "E(4)"
    assert str(-1 + z(4)) == "-1+E(4)"
    assert str(CycNum.from_rational(Fraction(3, 2), 8)) == "3/2"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        CycNum.from_rational(0, 8).inverse()


small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cycnums(draw, n=None):
    n = n or draw(st.sampled_from(CONDUCTORS))
    return CycNum(n, draw(st.lists(small_q, min_size=euler_phi(n), max_size=euler_phi(n))))


@st.composite
def triples(draw):
    n = draw(st.sampled_from(CONDUCTORS))
    return draw(cycnums(n)), draw(cycnums(n)), draw(cycnums(n))


@settings(max_examples=60, deadline=None)
@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) - b == a
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=60, deadline=None)
@given(triples())
def test_float_embedding_agrees(t):
    a, b, c = t
    exact = a * b - c.conj()
    approx = a.to_complex() * b.to_complex() - c.to_complex().conjugate()
    assert abs(exact.to_complex() - approx) < 1e-10


@settings(max_examples=40, deadline=None)
@given(cycnums())
def test_conj_involution(a):
    assert a.conj().conj() == a
    assert hash(a.reduce_conductor()) == hash(a)
    assert a.reduce_conductor() == a


def test_fp_root_table_examples():
    assert fp_discrete_root_table(13, 4)[1] in (5, 8)
    assert fp_discrete_root_table(13, 1) == [1]
    with pytest.raises(ValueError):
        fp_discrete_root_table(15, 2)
    with pytest.raises(ValueError):
        fp_discrete_root_table(13, 5)


def test_fp_root_97_24_against_brute_force():
    table = fp_discrete_root_table(97, 24)
    w = table[1]
    # brute-force multiplicative orders in GF(97)
    def order(x):
        k, y = 1, x
        while y != 1:
            y = y * x % 97
            k += 1
        return k

    assert order(w) == 24
    assert pow(w, 12, 97) != 1 and pow(w, 8, 97) != 1
    assert w == 43  # 5 is the smallest generator mod 97, 5^4 = 43
    assert len(set(table)) == 24


def test_smallest_prime():
    assert smallest_prime_1_mod(24, 2 * 96**0.5) == 73
    assert smallest_prime_1_mod(4, 2 * 4**0.5) == 5


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 96), st.integers(0, 96), st.integers(1, 96))
def test_fpelem_field_axioms(a, b, c):
    p = 97
    x, y, w = FpElem(a, p), FpElem(b, p), FpElem(c, p)
    assert (x + y) * w == x * w + y * w
    assert w * w.inverse() == 1
    assert (x / w) * w == x
    assert w ** 96 == 1


def test_matrix_inverse():
    i = z(4)
    m = [[CycNum.from_rational(1), CycNum.from_rational(1)], [CycNum.from_rational(1), -i]]
    inv = mat_inverse(m)
    prod = mat_mul(m, inv)
    assert prod[0][0] == 1 and prod[1][1] == 1 and prod[0][1] == 0 and prod[1][0] == 0
