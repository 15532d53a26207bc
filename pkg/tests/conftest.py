from __future__ import annotations

import itertools

import pytest

from wlab.exact_algebra import CycNum
from wlab.group_engine import FinGroup, conjugacy_classes, group_from_presentation, load_presentation, parse_presentation
from wlab.pipeline import analyze
from wlab.verify import verify

S3_TEXT = "gens: s t\nrel: s^2\nrel: t^2\nrel: s t s t s t\n"
Q8_TEXT = "gens: i j\nrel: i^4\nrel: i i J J\nrel: J i j i\n"


def cyclic_text(n: int) -> str:
    return f"gens: a\nrel: a^{n}\n"


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def h1_pres():
    return load_presentation()


@pytest.fixture(scope="session")
def h1(h1_pres):
    return group_from_presentation(h1_pres)


@pytest.fixture(scope="session")
def h1_classes(h1):
    return conjugacy_classes(h1)


@pytest.fixture(scope="session")
def h1_analysis(h1_pres):
    a = analyze(h1_pres)
    summary = verify(a)
    a.summary = summary
    return a


@pytest.fixture(scope="session")
def s3_pres():
    return parse_presentation(S3_TEXT)


@pytest.fixture(scope="session")
def s3(s3_pres):
    return group_from_presentation(s3_pres)


@pytest.fixture(scope="session")
def q8_pres():
    return parse_presentation(Q8_TEXT)


def brute_force_subgroups(g: FinGroup) -> list[frozenset[int]]:
    """Every subset containing the identity that is closed under products."""
    n = g.order
    out = []
    others = range(1, n)
    for r in range(n):
        for rest in itertools.combinations(others, r):
            s = frozenset((0,) + rest)
            if all(g.mul(a, b) in s for a in s for b in s):
                out.append(s)
    return out


def brute_force_subgroup_classes(g: FinGroup) -> int:
    subs = brute_force_subgroups(g)
    seen: set[frozenset[int]] = set()
    count = 0
    for h in subs:
        if h in seen:
            continue
        count += 1
        for x in range(g.order):
            seen.add(frozenset(g.conj(y, x) for y in h))
    return count


# (size, element order) per class, then rows in the same column order
S3_TABLE = ([(1, 1), (3, 2), (2, 3)], [(1, 1, 1), (1, -1, 1), (2, 0, -1)])
Q8_TABLE = (
    [(1, 1), (1, 2), (2, 4), (2, 4), (2, 4)],
    [(1, 1, 1, 1, 1), (1, 1, 1, -1, -1), (1, 1, -1, 1, -1), (1, 1, -1, -1, 1), (2, -2, 0, 0, 0)],
)


def matches_hand_table(x, cols, rows) -> bool:
    """True if some column permutation respecting (size, order) maps the
    hand-written rows onto the computed rows as a set."""
    ours = list(zip(x.class_sizes, x.class_orders))
    if sorted(ours) != sorted(cols):
        return False
    computed = {tuple(v.reduce_conductor() for v in row.values) for row in x.rows}
    for perm in itertools.permutations(range(len(cols))):
        if any(cols[perm[j]] != ours[j] for j in range(len(ours))):
            continue
        hand = {tuple(CycNum.from_rational(r[perm[j]]) for j in range(len(ours))) for r in rows}
        if hand == computed:
            return True
    return False


def cyclic_table_ok(g, c, x) -> bool:
    """chi_j(a^m) = zeta_n^(j m), checked element by element."""
    n = g.order
    exps = [len(w) if all(t > 0 for t in w) else -len(w) for w in g.words]
    got = {tuple(row[c.class_of[e]].reduce_conductor() for e in range(n)) for row in x.rows}
    want = {tuple(CycNum.zeta(n, j * m % n).reduce_conductor() for m in exps) for j in range(n)}
    return got == want
