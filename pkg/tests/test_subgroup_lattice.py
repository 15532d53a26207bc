from collections import Counter

import pytest

from wlab.group_engine import group_from_presentation, parse_presentation
from wlab.subgroup_lattice import (
    coset_action,
    core_of,
    direct_sum,
    enumerate_subgroups,
    faithful_actions,
    generator_words,
    is_normal,
    subgroup_record,
)

from conftest import Q8_TEXT, S3_TEXT, brute_force_subgroup_classes, cyclic_text

SMALL = [("S3", S3_TEXT), ("Q8", Q8_TEXT)] + [(f"C{n}", cyclic_text(n)) for n in range(1, 9)]


@pytest.fixture(scope="module")
def h1_subs(h1):
    return enumerate_subgroups(h1)


@pytest.mark.parametrize("name,text", SMALL)
def test_small_groups_against_brute_force(name, text):
    g = group_from_presentation(parse_presentation(text))
    assert len(enumerate_subgroups(g)) == brute_force_subgroup_classes(g)


def test_known_counts():
    s3 = group_from_presentation(parse_presentation(S3_TEXT))
    c4 = group_from_presentation(parse_presentation(cyclic_text(4)))
    q8 = group_from_presentation(parse_presentation(Q8_TEXT))
    assert len(enumerate_subgroups(s3)) == 4
    assert len(enumerate_subgroups(c4)) == 3
    assert len(enumerate_subgroups(q8)) == 6


def test_h1_census(h1_subs):
    assert len(h1_subs) == 24
    faithful = [h for h in h1_subs if h.is_faithful_action]
    assert len(faithful) == 5
    assert Counter(h.index for h in faithful) == Counter([96, 48, 32, 24, 24])


def _key(g, members):
    return min(tuple(sorted(g.conj(h, x) for h in members)) for x in range(g.order))


def test_h1_representatives_closed_and_pairwise_nonconjugate(h1, h1_subs):
    keys = set()
    for h in h1_subs:
        mem = set(h.members)
        assert all(h1.mul(a, b) in mem for a in mem for b in mem)
        assert h1.order % h.order == 0
        assert h.index * h.order == h1.order
        keys.add(_key(h1, h.members))
    assert len(keys) == len(h1_subs)


def test_h1_list_is_complete(h1, h1_subs):
    # contains the trivial subgroup and is closed (up to conjugacy) under
    # adjoining one element, so every subgroup is reached by induction on
    # generators
    keys = {_key(h1, h.members) for h in h1_subs}
    assert (0,) in keys
    for h in h1_subs:
        for x in range(h1.order):
            if x not in h:
                assert _key(h1, h1.closure(list(h.members) + [x])) in keys


def test_conjugate_counts(h1, h1_subs):
    for h in h1_subs:
        conj = {tuple(sorted(h1.conj(y, x) for y in h.members)) for x in range(h1.order)}
        assert h.n_conjugates == len(conj)
        assert is_normal(h1, h) == (len(conj) == 1)


def test_generators_generate(h1, h1_subs):
    for h in h1_subs:
        assert h1.closure(h.generators) == frozenset(h.members)
        words = generator_words(h1, h)
        assert {h1.element_from_word(w) for w in words} == set(h.generators)


def test_kernel_is_core(h1, h1_subs):
    for h in h1_subs:
        act = coset_action(h1, h)
        assert act.degree == h.index
        assert act.is_transitive()
        assert act.kernel() == frozenset(core_of(h1, h).members)
        assert len(act.kernel()) == h.core_order


def test_coset_action_is_homomorphism(h1, h1_subs):
    act = coset_action(h1, h1_subs[5])
    for x in range(0, 96, 7):
        for y in range(0, 96, 11):
            px, py, pxy = act.perm(x), act.perm(y), act.perm(h1.mul(x, y))
            assert tuple(py[px[i]] for i in range(act.degree)) == pxy


def test_faithful_actions(h1, h1_subs):
    acts = faithful_actions(h1, h1_subs)
    assert sorted(a.degree for a in acts) == [24, 24, 32, 48, 96]
    assert all(a.kernel() == frozenset([0]) for a in acts)


def test_direct_sum_orbits(h1, h1_subs):
    a = coset_action(h1, h1_subs[-1])
    b = coset_action(h1, h1_subs[-2])
    s = direct_sum(a, b)
    assert s.degree == a.degree + b.degree
    assert sorted(len(o) for o in s.orbits()) == sorted([a.degree, b.degree])
    assert not s.is_transitive()


def test_subgroup_record_of_whole_group(h1):
    rec = subgroup_record(h1, range(96))
    assert rec.index == 1 and rec.core_order == 96 and not rec.is_faithful_action
