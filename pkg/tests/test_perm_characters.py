from collections import Counter

import pytest

from wlab.character_table import dixon_schneider
from wlab.errors import NonIntegerMultiplicity, NotTransitive
from wlab.group_engine import conjugacy_classes, group_from_presentation, parse_presentation
from wlab.perm_characters import (
    MultVector,
    PermChar,
    constituents,
    decompose,
    decompose_by_inverse,
    format_decomposition,
    is_doubly_transitive,
    is_multiplicity_free,
    orbit_count,
    permutation_character,
    predicates,
    reconstruct,
)
from wlab.subgroup_lattice import coset_action, direct_sum, enumerate_subgroups, subgroup_record

from conftest import S3_TEXT


@pytest.fixture(scope="module")
def s3_data():
    g = group_from_presentation(parse_presentation(S3_TEXT))
    c = conjugacy_classes(g)
    return g, c, dixon_schneider(g, c), enumerate_subgroups(g)


def test_regular_decomposes_by_degree(h1_analysis):
    a = h1_analysis
    m = a.faithful["theta1"].multiplicities
    assert list(m) == a.table.degrees


def test_theta8_vector_up_to_numbering(h1_analysis):
    a = h1_analysis
    printed = (1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1)
    printed_degrees = (1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4)
    m = a.faithful["theta8"].multiplicities
    assert Counter(zip(a.table.degrees, m)) == Counter(zip(printed_degrees, printed))


def test_trivial_action(s3_data):
    g, c, x, _ = s3_data
    act = coset_action(g, subgroup_record(g, range(g.order)))
    theta = permutation_character(act, c)
    assert theta.values == (1, 1, 1)
    m = decompose(theta, x, c)
    assert constituents(m) == [(0, 1)]
    assert not is_doubly_transitive(m)


def test_natural_s3_is_doubly_transitive(s3_data):
    g, c, x, subs = s3_data
    h = next(h for h in subs if h.order == 2)
    m = decompose(permutation_character(coset_action(g, h), c), x, c)
    assert predicates(m) == {"transitive": True, "multiplicity_free": True, "doubly_transitive": True}


def test_regular_sum_not_transitive(s3_data):
    g, c, x, subs = s3_data
    reg = coset_action(g, subs[0])
    both = direct_sum(reg, reg)
    theta = permutation_character(both, c)
    m = decompose(theta, x, c)
    assert m[0] == 2
    assert not predicates(m)["transitive"]
    with pytest.raises(NotTransitive):
        is_doubly_transitive(m)
    assert orbit_count(theta, c) == len(both.orbits()) == 2


def test_burnside_for_direct_sums(h1, h1_classes):
    subs = enumerate_subgroups(h1)
    for i in range(0, len(subs), 5):
        for j in range(1, len(subs), 7):
            s = direct_sum(coset_action(h1, subs[i]), coset_action(h1, subs[j]))
            assert orbit_count(permutation_character(s, h1_classes), h1_classes) == len(s.orbits())


def test_two_decomposition_paths(h1_analysis):
    a = h1_analysis
    for f in a.faithful.values():
        assert decompose_by_inverse(f.theta, a.table) == decompose(f.theta, a.table, a.classes)
        assert reconstruct(f.multiplicities, a.table) == list(f.theta.class_function())


def test_predicates_on_h1(h1_analysis):
    a = h1_analysis
    for lab, f in a.faithful.items():
        p = predicates(f.multiplicities)
        assert p["transitive"] and not p["doubly_transitive"]
        assert p["multiplicity_free"] == (lab in ("theta8", "theta9"))


def test_non_character_rejected(s3_data):
    _, c, x, _ = s3_data
    with pytest.raises(NonIntegerMultiplicity):
        decompose(PermChar((2, 1, 0), "bogus"), x, c)


def test_formatting():
    m = MultVector((1, 0, 2))
    assert format_decomposition(m) == "chi1 + 2*chi3"
    assert is_multiplicity_free(MultVector((1, 1, 0)))
    assert not is_multiplicity_free(m)
