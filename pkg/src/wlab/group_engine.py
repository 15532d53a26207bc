"""Finitely presented groups, coset enumeration and conjugacy classes.

Words are tuples of signed, 1-based generator indices: ``2`` is the second
generator and ``-2`` its inverse.  Group elements act on the right, so a
product ``x * y`` means "apply x, then y".
"""
from __future__ import annotations

import math
import os
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Sequence

from .errors import CosetLimitExceeded, NonFaithfulAction, PresentationError

Word = tuple[int, ...]
Perm = tuple[int, ...]

DEFAULT_COSET_LIMIT = 200_000


def free_reduce(word: Sequence[int]) -> Word:
    out: list[int] = []
    for g in word:
        if g == 0:
            raise PresentationError("generator index 0 is not allowed")
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def invert_word(word: Sequence[int]) -> Word:
    return tuple(-g for g in reversed(word))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    subgroup: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(free_reduce(r) for r in self.relators))
        object.__setattr__(self, "subgroup", tuple(free_reduce(w) for w in self.subgroup))
        n = len(self.generators)
        for w in self.relators + self.subgroup:
            if any(abs(g) > n for g in w):
                raise PresentationError(f"word {w} uses an unknown generator")

    def parse_word(self, text: str) -> Word:
        return _parse_word(text, self.generators)

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        toks = []
        for g in word:
            name = self.generators[abs(g) - 1]
            toks.append(name if g > 0 else _inverse_token(name))
        return " ".join(toks)


def _inverse_token(name: str) -> str:
    if name.islower():
        return name.upper()
    return name + "^-1"


_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*?)(?:\^(-?\d+))?$")


def _parse_word(text: str, gens: Sequence[str]) -> Word:
    lookup = {name: i + 1 for i, name in enumerate(gens)}
    for name, i in list(lookup.items()):
        if name.islower():
            lookup.setdefault(name.upper(), -i)
    word: list[int] = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m or m.group(1) not in lookup:
            raise PresentationError(f"unknown token {tok!r}")
        g = lookup[m.group(1)]
        k = int(m.group(2)) if m.group(2) is not None else 1
        word.extend([g if k > 0 else -g] * abs(k))
    return free_reduce(word)


def parse_presentation(text: str) -> Presentation:
    """Parse the line-based presentation format.

    ::

        gens: s t
        rel: s s s s
        rel: s t s T S T
        sub: s          # optional subgroup generators

    An uppercase token is the inverse of its lowercase generator; ``x^k``
    is accepted as shorthand for a power.
    """
    gens: tuple[str, ...] | None = None
    rels: list[str] = []
    subs: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise PresentationError(f"line {lineno}: expected 'key: value'")
        if key == "gens":
            if gens is not None:
                raise PresentationError(f"line {lineno}: duplicate gens line")
            gens = tuple(rest.split())
            if not gens or len(set(gens)) != len(gens):
                raise PresentationError(f"line {lineno}: bad generator list")
            for g in gens:
                if not re.fullmatch(r"[a-z][a-z0-9_]*", g):
                    raise PresentationError(f"line {lineno}: generator names must be lowercase, got {g!r}")
        elif key in ("rel", "sub"):
            if gens is None:
                raise PresentationError(f"line {lineno}: {key} before gens")
            (rels if key == "rel" else subs).append(rest)
        else:
            raise PresentationError(f"line {lineno}: unknown key {key!r}")
    if gens is None:
        raise PresentationError("missing gens line")
    if not rels:
        raise PresentationError("at least one relator is required")
    return Presentation(
        gens,
        tuple(_parse_word(r, gens) for r in rels),
        tuple(_parse_word(s, gens) for s in subs),
    )


def load_presentation(path: str | os.PathLike | None = None) -> Presentation:
    """Read a presentation file; ``None`` gives the bundled order-96 group."""
    if path is None:
        path = Path(__file__).with_name("data") / "h1.txt"
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise PresentationError(f"{path}: not UTF-8 text") from exc
    return parse_presentation(text)


# ---------------------------------------------------------------------------
# coset enumeration


@dataclass(frozen=True)
class CosetTable:
    """Complete coset table.

    ``rows[c][2*i]`` is the image of coset ``c`` under generator ``i`` and
    ``rows[c][2*i + 1]`` under its inverse.  Coset 0 is the subgroup itself.
    """

    presentation: Presentation
    subgroup_words: tuple[Word, ...]
    rows: tuple[tuple[int, ...], ...]
    complete: bool = True

    @property
    def index(self) -> int:
        return len(self.rows)

    def generator_perm(self, i: int) -> Perm:
        return tuple(row[2 * i] for row in self.rows)

    def trace(self, coset: int, word: Sequence[int]) -> int:
        for g in word:
            coset = self.rows[coset][_col(g)]
        return coset


def _col(g: int) -> int:
    return 2 * (g - 1) if g > 0 else 2 * (-g - 1) + 1


class _Restart(Exception):
    pass


class _Enumerator:
    """HLT coset enumeration with a lookahead pass when the live-coset bound is hit."""

    def __init__(self, pres: Presentation, subgroup: Sequence[Word], limit: int):
        self.ncols = 2 * len(pres.generators)
        self.inv = [c ^ 1 for c in range(self.ncols)]
        self.rels = [[_col(g) for g in r] for r in pres.relators if r]
        # cyclic conjugates are redundant for HLT, inverses are not needed
        self.subs = [[_col(g) for g in w] for w in subgroup if w]
        self.limit = limit
        self.table: list[list[int]] = [[-1] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.queue: list[int] = []

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        if self.live >= self.limit:
            self.lookahead()
            if self.live >= self.limit:
                raise CosetLimitExceeded(f"coset enumeration exceeded {self.limit} live cosets")
            raise _Restart
        b = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(b)
        self.live += 1
        self.table[c][x] = b
        self.table[b][self.inv[x]] = c

    def merge(self, a: int, b: int) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.parent[hi] = lo
        self.live -= 1
        self.queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        self.queue = []
        self.merge(a, b)
        i = 0
        while i < len(self.queue):
            g = self.queue[i]
            i += 1
            for x in range(self.ncols):
                d = self.table[g][x]
                if d < 0:
                    continue
                xi = self.inv[x]
                if self.table[d][xi] == g:
                    self.table[d][xi] = -1
                mu, nu = self.rep(g), self.rep(d)
                if self.table[mu][x] >= 0:
                    self.merge(nu, self.table[mu][x])
                elif self.table[nu][xi] >= 0:
                    self.merge(mu, self.table[nu][xi])
                else:
                    self.table[mu][x] = nu
                    self.table[nu][xi] = mu

    def scan(self, a: int, word: list[int], fill: bool) -> None:
        t = self.table
        f, i = a, 0
        b, j = a, len(word) - 1
        while True:
            while i <= j and t[f][word[i]] >= 0:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][self.inv[word[j]]] >= 0:
                b = t[b][self.inv[word[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][word[i]] = b
                t[b][self.inv[word[i]]] = f
                return
            if not fill:
                return
            self.define(f, word[i])

    def lookahead(self) -> None:
        c = 0
        while c < len(self.table):
            if self.is_live(c):
                for w in self.rels:
                    self.scan(c, w, fill=False)
                    if not self.is_live(c):
                        break
            c += 1

    def run(self) -> None:
        while True:
            try:
                for w in self.subs:
                    self.scan(0, w, fill=True)
                break
            except _Restart:
                continue
        a = 0
        while a < len(self.table):
            try:
                if self.is_live(a):
                    for w in self.rels:
                        self.scan(a, w, fill=True)
                        if not self.is_live(a):
                            break
                    if self.is_live(a):
                        for x in range(self.ncols):
                            if self.table[a][x] < 0:
                                self.define(a, x)
            except _Restart:
                continue
            a += 1

    def standardized(self) -> tuple[tuple[int, ...], ...]:
        # renumber live cosets in breadth-first order from coset 0
        order = {0: 0}
        todo = deque([0])
        while todo:
            c = todo.popleft()
            for x in range(self.ncols):
                d = self.rep(self.table[c][x])
                if d not in order:
                    order[d] = len(order)
                    todo.append(d)
        rows = [None] * len(order)
        for c, new in order.items():
            rows[new] = tuple(order[self.rep(self.table[c][x])] for x in range(self.ncols))
        return tuple(rows)


def todd_coxeter(
    pres: Presentation,
    subgroup_words: Sequence[Sequence[int]] | None = None,
    coset_limit: int | None = None,
) -> CosetTable:
    """Enumerate the right cosets of the subgroup generated by ``subgroup_words``.

    With ``subgroup_words=None`` the presentation's own ``sub:`` words are
    used; pass ``[]`` for the trivial subgroup.  Raises
    :class:`CosetLimitExceeded` if more than ``coset_limit`` cosets are live
    after a lookahead pass.
    """
    if coset_limit is None:
        coset_limit = int(os.environ.get("WLAB_COSET_LIMIT", DEFAULT_COSET_LIMIT))
    if not pres.relators:
        raise PresentationError("at least one relator is required")
    words = pres.subgroup if subgroup_words is None else tuple(free_reduce(w) for w in subgroup_words)
    enum = _Enumerator(pres, words, coset_limit)
    enum.run()
    return CosetTable(pres, words, enum.standardized())


# ---------------------------------------------------------------------------
# enumerated groups


def compose(a: Perm, b: Perm) -> Perm:
    """a then b."""
    return tuple(b[i] for i in a)


def invert_perm(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


@dataclass(eq=False)
class FinGroup:
    """Fully enumerated permutation group.

    Element 0 is the identity; elements are numbered in breadth-first order
    over the generators, and ``words[i]`` is a shortest word for element i.
    """

    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]
    words: tuple[Word, ...]
    presentation: Presentation | None = None
    index_of: dict[Perm, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index_of = {p: i for i, p in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return len(self.elements[0])

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        idx = self.index_of
        els = self.elements
        return tuple(tuple(idx[compose(a, b)] for b in els) for a in els)

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(self.index_of[invert_perm(p)] for p in self.elements)

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self.index_of[g] for g in self.generators)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.mul_table[self.mul_table[self.inverses[g]][x]][g]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverses[x], -k
        out = 0
        base = x
        while k:
            if k & 1:
                out = self.mul_table[out][base]
            base = self.mul_table[base][base]
            k >>= 1
        return out

    def element_from_word(self, word: Sequence[int]) -> int:
        gi = self.generator_indices
        x = 0
        for g in word:
            y = gi[abs(g) - 1]
            x = self.mul_table[x][y if g > 0 else self.inverses[y]]
        return x

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(element_order(self, x) for x in range(self.order))

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.element_orders)

    def is_abelian(self) -> bool:
        gi = self.generator_indices
        return all(self.mul(a, b) == self.mul(b, a) for a in gi for b in gi)

    def closure(self, gens: Sequence[int]) -> frozenset[int]:
        """Subgroup generated by the given element indices."""
        seen = {0}
        todo = [0]
        gens = [g for g in dict.fromkeys(gens) if g != 0]
        mt = self.mul_table
        while todo:
            x = todo.pop()
            for g in gens:
                y = mt[x][g]
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return frozenset(seen)


def element_order(g: FinGroup, x: int) -> int:
    k, y = 1, x
    while y != 0:
        y = g.mul(y, x)
        k += 1
    return k


def generate_group(gens: Sequence[Perm], presentation: Presentation | None = None) -> FinGroup:
    """Breadth-first closure of a set of permutations of equal degree."""
    gens = tuple(tuple(g) for g in gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    ident = tuple(range(n))
    elements = [ident]
    words: list[Word] = [()]
    seen = {ident: 0}
    i = 0
    letters = []
    for k, g in enumerate(gens):
        letters.append((k + 1, g))
        letters.append((-(k + 1), invert_perm(g)))
    while i < len(elements):
        x = elements[i]
        for sym, g in letters:
            y = compose(x, g)
            if y not in seen:
                seen[y] = len(elements)
                elements.append(y)
                words.append(words[i] + (sym,))
        i += 1
    return FinGroup(gens, tuple(elements), tuple(words), presentation)


def build_group(table: CosetTable, check_faithful: bool = True) -> FinGroup:
    """Group generated by the generator permutations of a complete coset table.

    If the table is over a nontrivial subgroup and ``check_faithful`` is set,
    the abstract order is enumerated separately and :class:`NonFaithfulAction`
    is raised when the permutation image is smaller.
    """
    if not table.complete:
        raise ValueError("coset table is incomplete")
    ngens = len(table.presentation.generators)
    grp = generate_group([table.generator_perm(i) for i in range(ngens)], table.presentation)
    if check_faithful and table.subgroup_words:
        regular = todd_coxeter(table.presentation, [])
        if regular.index != grp.order:
            raise NonFaithfulAction(
                f"action on {table.index} cosets has image of order {grp.order}, "
                f"but the group has order {regular.index}"
            )
    return grp


def group_from_presentation(pres: Presentation, coset_limit: int | None = None) -> FinGroup:
    """Regular representation of the presented group."""
    return build_group(todd_coxeter(pres, [], coset_limit))


# ---------------------------------------------------------------------------
# conjugacy classes


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]
    element_order: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(eq=False)
class ClassData:
    group: FinGroup
    classes: tuple[ConjugacyClass, ...]
    class_of: tuple[int, ...]
    # power_map[c][m] = class of rep(c)^m, for 0 <= m < exponent
    power_map: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    @property
    def orders(self) -> list[int]:
        return [c.element_order for c in self.classes]

    @property
    def representatives(self) -> list[int]:
        return [c.representative for c in self.classes]

    def power(self, c: int, m: int) -> int:
        return self.power_map[c][m % self.group.exponent]

    @cached_property
    def inverse_class(self) -> tuple[int, ...]:
        return tuple(self.power(c, -1) for c in range(len(self.classes)))


def conjugacy_classes(g: FinGroup) -> ClassData:
    """Conjugacy classes in canonical order.

    Classes are sorted by (element order, class size, power-map profile,
    least member index).  The profile lists (order, size) of the class of
    ``rep^m`` for every ``m`` below the exponent, which makes the ordering
    independent of how the classes were discovered.
    """
    n = g.order
    gens = g.generator_indices
    owner = [-1] * n
    raw: list[list[int]] = []
    for x in range(n):
        if owner[x] >= 0:
            continue
        cid = len(raw)
        owner[x] = cid
        members = [x]
        todo = [x]
        while todo:
            y = todo.pop()
            for s in gens:
                z = g.conj(y, s)
                if owner[z] < 0:
                    owner[z] = cid
                    members.append(z)
                    todo.append(z)
        raw.append(sorted(members))
    orders = g.element_orders
    exp = g.exponent
    size = [len(m) for m in raw]

    def profile(cid: int) -> tuple:
        x = raw[cid][0]
        return tuple(
            (orders[y], size[owner[y]]) for y in (g.power(x, m) for m in range(exp))
        )

    keys = sorted(range(len(raw)), key=lambda c: (orders[raw[c][0]], size[c], profile(c), raw[c][0]))
    renum = {old: new for new, old in enumerate(keys)}
    classes = tuple(ConjugacyClass(raw[c][0], tuple(raw[c]), orders[raw[c][0]]) for c in keys)
    class_of = tuple(renum[owner[x]] for x in range(n))
    power_map = tuple(
        tuple(class_of[g.power(cl.representative, m)] for m in range(exp)) for cl in classes
    )
    return ClassData(g, classes, class_of, power_map)
