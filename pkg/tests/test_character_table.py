import pytest

from wlab.character_table import (
    ClassFunction,
    columns_orthogonal,
    dixon_schneider,
    inner_product,
    is_orthonormal,
    sum_of_degrees,
)
from wlab.exact_algebra import CycNum
from wlab.group_engine import conjugacy_classes, group_from_presentation, parse_presentation

from conftest import Q8_TABLE, Q8_TEXT, S3_TABLE, S3_TEXT, cyclic_table_ok, cyclic_text, matches_hand_table


def table_for(text):
    g = group_from_presentation(parse_presentation(text))
    c = conjugacy_classes(g)
    return g, c, dixon_schneider(g, c)


def test_s3_hand_table():
    _, _, x = table_for(S3_TEXT)
    assert matches_hand_table(x, *S3_TABLE)
    assert sum_of_degrees(x) == 4


def test_q8_hand_table():
    _, _, x = table_for(Q8_TEXT)
    assert matches_hand_table(x, *Q8_TABLE)


@pytest.mark.parametrize("n", range(1, 9))
def test_cyclic_tables(n):
    g, c, x = table_for(cyclic_text(n))
    assert cyclic_table_ok(g, c, x)
    assert sum_of_degrees(x) == n


def test_trivial_group():
    _, _, x = table_for(cyclic_text(1))
    assert len(x) == 1 and sum_of_degrees(x) == 1


@pytest.fixture(scope="module")
def h1_table(h1, h1_classes):
    return dixon_schneider(h1, h1_classes)


def test_h1_orthogonality(h1_table):
    assert is_orthonormal(h1_table)
    assert columns_orthogonal(h1_table)


def test_h1_degrees(h1_table):
    degs = h1_table.degrees
    assert sorted(degs) == [1] * 4 + [2] * 6 + [3] * 4 + [4] * 2
    assert sum(degs) == 36
    assert sum(d * d for d in degs) == 96
    assert h1_table.prime == 73
    assert all(v == 1 for v in h1_table.rows[0].values)


def test_h1_inverse_class_gives_conjugate(h1_table, h1_classes):
    inv = h1_classes.inverse_class
    for row in h1_table.rows:
        for j in range(len(row)):
            assert row[j].conj() == row[inv[j]]


def test_h1_values_bounded_by_degree(h1_table):
    for row in h1_table.rows:
        d = row[0].to_int()
        assert all(abs(v.to_complex()) <= d + 1e-9 for v in row.values)


def test_h1_galois_closed(h1_table):
    # Galois conjugates of irreducible characters are irreducible
    rows = {tuple(row.values) for row in h1_table.rows}
    for a in (5, 7, 11, 13, 17, 19, 23):
        for row in h1_table.rows:
            assert tuple(v.galois(a) for v in row.values) in rows


def test_h1_table_inverse(h1_table):
    x, xi = h1_table.matrix(), h1_table.inverse
    r = len(x)
    for i in range(r):
        for j in range(r):
            acc = sum((x[i][k] * xi[k][j] for k in range(r)), CycNum.from_rational(0))
            assert acc == (1 if i == j else 0)


def test_inner_product_length_check(h1_table, h1_classes):
    with pytest.raises(ValueError):
        inner_product(ClassFunction.from_ints([1, 2]), h1_table.rows[0], h1_classes)


def test_regular_character_decomposes_by_degree(h1_table, h1_classes):
    reg = ClassFunction.from_ints([96] + [0] * 15)
    for row in h1_table.rows:
        assert inner_product(reg, row, h1_classes) == row[0]
