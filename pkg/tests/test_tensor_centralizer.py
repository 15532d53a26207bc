from fractions import Fraction

import pytest

from wlab.character_table import dixon_schneider
from wlab.group_engine import conjugacy_classes, group_from_presentation, parse_presentation
from wlab.perm_characters import permutation_character
from wlab.subgroup_lattice import coset_action, subgroup_record
from wlab.tensor_centralizer import (
    ClosedForm,
    closed_forms,
    dim_centralizer,
    tensor_multiplicities,
    transition_matrix,
    wedderburn,
)

from conftest import S3_TEXT


def orbits_on_tuples(gens, degree, length):
    """Number of orbits of the permutation group on degree**length tuples."""
    n = degree**length
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in gens:
        for code in range(n):
            img, rest, mul = 0, code, 1
            for _ in range(length):
                img += p[rest % degree] * mul
                rest //= degree
                mul *= degree
            ra, rb = find(code), find(img)
            if ra != rb:
                parent[ra] = rb
    return sum(1 for i in range(n) if find(i) == i)


def test_trivial_character_gives_identity():
    g = group_from_presentation(parse_presentation(S3_TEXT))
    c = conjugacy_classes(g)
    x = dixon_schneider(g, c)
    theta = permutation_character(coset_action(g, subgroup_record(g, range(6))), c)
    a = transition_matrix(theta, x)
    assert a.entries == tuple(tuple(int(i == j) for j in range(3)) for i in range(3))
    assert dim_centralizer(theta, 5, x) == 1


def test_transition_entries_nonnegative_integers(h1_analysis):
    for f in h1_analysis.faithful.values():
        a = f.tensor.transition
        assert all(isinstance(v, int) and v >= 0 for row in a.entries for v in row)


def test_regular_square(h1_analysis):
    t = h1_analysis.faithful["theta1"].tensor
    assert sorted(set(t.multiplicities(2).entries)) == [96, 192, 288, 384]


def test_published_family_forms(h1_analysis):
    a = h1_analysis
    # trivial constituent counts for theta3 and theta8
    t3 = a.faithful["theta3"].tensor.closed_forms[0]
    assert t3 == ClosedForm.from_dict({48: Fraction(1, 2), 8: Fraction(1, 2)})
    assert str(t3) == "48^(k-1)/2 + 8^(k-1)/2"
    t8 = a.faithful["theta8"].tensor.closed_forms[0]
    assert t8 == ClosedForm.from_dict({24: Fraction(1, 4), 4: Fraction(3, 4)})


def test_regular_top_degree_form(h1_analysis):
    a = h1_analysis
    t = a.faithful["theta1"].tensor
    for i, d in enumerate(a.table.degrees):
        if d == 4:
            cf = t.closed_forms[i]
            assert all(cf(k) == Fraction(96**k, 24) for k in range(1, 9))


def test_wedderburn_examples(h1_analysis):
    a = h1_analysis
    assert str(a.faithful["theta1"].tensor.wedderburn(1)) == "4M_1 + 6M_2 + 4M_3 + 2M_4"
    assert str(a.faithful["theta8"].tensor.wedderburn(1)) == "9M_1"
    w = a.faithful["theta8"].tensor.wedderburn(2)
    assert sum(n * d * d for d, n in w.components) == w.dimension == 3504


def test_dimensions_small_k(h1_analysis):
    dims = {lab: f.tensor.dimension(1) for lab, f in h1_analysis.faithful.items()}
    assert dims == {"theta1": 96, "theta3": 28, "theta4": 16, "theta8": 9, "theta9": 9}


@pytest.mark.parametrize("label,k", [("theta8", 1), ("theta8", 2), ("theta9", 2), ("theta4", 1), ("theta3", 1)])
def test_dimension_equals_orbit_count(h1_analysis, label, k):
    # dim End_G(V^k) = number of orbits on 2k-tuples of points
    f = h1_analysis.faithful[label]
    gens = f.action.generator_images
    assert orbits_on_tuples(gens, f.degree, 2 * k) == f.tensor.dimension(k)


def test_three_routes_agree(h1_analysis):
    for f in h1_analysis.faithful.values():
        t = f.tensor
        for k in range(1, 9):
            d = t.direct(k)
            assert t.recurrence(k) == d
            assert tuple(cf.as_int(k) for cf in t.closed_forms) == d
            assert sum(v * v for v in d) == t.spectral_dimension(k)


def test_module_wrappers_agree(h1_analysis):
    a = h1_analysis
    f = a.faithful["theta4"]
    assert tensor_multiplicities(f.theta, 3, a.table) == f.tensor.multiplicities(3)
    assert closed_forms(f.theta, a.table) == list(f.tensor.closed_forms)
    assert wedderburn(f.theta, 2, a.table).components == f.tensor.wedderburn(2).components


def test_k_must_be_positive(h1_analysis):
    with pytest.raises(ValueError):
        h1_analysis.faithful["theta8"].tensor.multiplicities(0)


def test_closed_form_formatting():
    assert str(ClosedForm.from_dict({48: Fraction(1, 2), 8: Fraction(1, 2)})) == "48^(k-1)/2 + 8^(k-1)/2"
    assert str(ClosedForm.from_dict({24: Fraction(1, 4), 4: Fraction(-1, 4)})) == "24^(k-1)/4 - 4^(k-1)/4"
    assert str(ClosedForm.from_dict({})) == "0"
