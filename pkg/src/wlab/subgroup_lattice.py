"""Subgroups up to conjugacy, cores, and transitive coset actions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import CapExceeded
from .group_engine import FinGroup, Perm, Word

DEFAULT_ORDER_CAP = 10_000


@dataclass(frozen=True)
class SubgroupRecord:
    members: tuple[int, ...]
    order: int
    index: int
    class_id: int
    core_order: int
    is_faithful_action: bool
    generators: tuple[int, ...]
    n_conjugates: int

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)


def _conjugate(g: FinGroup, members, x: int) -> tuple[int, ...]:
    return tuple(sorted(g.conj(h, x) for h in members))


def _conjugates(g: FinGroup, members) -> set[tuple[int, ...]]:
    return {_conjugate(g, members, x) for x in range(g.order)}


def _core(g: FinGroup, members) -> frozenset[int]:
    core = set(members)
    for x in range(g.order):
        core.intersection_update(g.conj(h, x) for h in members)
    return frozenset(core)


def _small_generating_set(g: FinGroup, members: Sequence[int]) -> tuple[int, ...]:
    gens: list[int] = []
    span = frozenset([0])
    target = len(members)
    # larger element orders first tends to give fewer generators
    for x in sorted(members, key=lambda y: (-g.element_orders[y], y)):
        if len(span) == target:
            break
        if x not in span:
            gens.append(x)
            span = g.closure(gens)
    return tuple(sorted(gens))


def _record(g: FinGroup, members: frozenset[int] | Sequence[int], class_id: int = -1) -> SubgroupRecord:
    mem = tuple(sorted(members))
    core = _core(g, mem)
    return SubgroupRecord(
        members=mem,
        order=len(mem),
        index=g.order // len(mem),
        class_id=class_id,
        core_order=len(core),
        is_faithful_action=len(core) == 1,
        generators=_small_generating_set(g, mem),
        n_conjugates=len(_conjugates(g, mem)),
    )


def enumerate_subgroups(g: FinGroup, order_cap: int = DEFAULT_ORDER_CAP) -> list[SubgroupRecord]:
    """One representative per conjugacy class of subgroups.

    Starts from the cyclic subgroups and extends every class representative
    by every element until no new class appears.  Every subgroup is reached
    up to conjugacy because it sits at the top of a chain whose steps each
    add one element.
    """
    if g.order > order_cap:
        raise CapExceeded(f"group order {g.order} exceeds cap {order_cap}")
    found: dict[tuple[int, ...], frozenset[int]] = {}
    todo: list[frozenset[int]] = []
    # every conjugate of every class found so far
    seen: set[tuple[int, ...]] = set()

    def add(sub: frozenset[int]) -> None:
        if tuple(sorted(sub)) in seen:
            return
        conjs = _conjugates(g, sub)
        seen.update(conjs)
        key = min(conjs)
        found[key] = frozenset(key)
        todo.append(frozenset(key))

    add(frozenset([0]))
    for x in range(g.order):
        add(g.closure([x]))
    while todo:
        h = todo.pop()
        hgens = list(_small_generating_set(g, sorted(h)))
        for x in range(g.order):
            if x not in h:
                add(g.closure(hgens + [x]))

    recs = [_record(g, members) for members in found.values()]
    recs.sort(key=lambda r: (r.order, -r.n_conjugates, r.core_order, r.members))
    return [_with_id(r, i) for i, r in enumerate(recs)]


def _with_id(r: SubgroupRecord, i: int) -> SubgroupRecord:
    return SubgroupRecord(
        r.members, r.order, r.index, i, r.core_order, r.is_faithful_action, r.generators, r.n_conjugates
    )


def subgroup_record(g: FinGroup, members: Sequence[int]) -> SubgroupRecord:
    """Record for an arbitrary subgroup given by its elements (class id -1)."""
    mem = g.closure(list(members))
    if len(mem) != len(set(members)):
        raise ValueError("members do not form a subgroup")
    return _record(g, mem)


def core_of(g: FinGroup, h: SubgroupRecord) -> SubgroupRecord:
    """Largest normal subgroup of g inside h."""
    return _record(g, _core(g, h.members))


def is_normal(g: FinGroup, h: SubgroupRecord) -> bool:
    return h.core_order == h.order


# ---------------------------------------------------------------------------
# actions


@dataclass(eq=False)
class CosetAction:
    """Permutation action of a group on a finite set.

    For a coset action, point ``i`` is the right coset ``H * reps[i]``.
    ``element_images[x]`` is the permutation induced by group element x.
    """

    group: FinGroup
    degree: int
    element_images: tuple[Perm, ...]
    label: str

    @property
    def generator_images(self) -> tuple[Perm, ...]:
        return tuple(self.element_images[i] for i in self.group.generator_indices)

    def perm(self, x: int) -> Perm:
        return self.element_images[x]

    def fixed_points(self, x: int) -> int:
        return sum(1 for i, j in enumerate(self.element_images[x]) if i == j)

    def kernel(self) -> frozenset[int]:
        ident = tuple(range(self.degree))
        return frozenset(x for x, p in enumerate(self.element_images) if p == ident)

    def orbits(self) -> list[list[int]]:
        seen = [False] * self.degree
        out = []
        gens = self.generator_images
        for start in range(self.degree):
            if seen[start]:
                continue
            orb = [start]
            seen[start] = True
            for a in orb:
                for p in gens:
                    b = p[a]
                    if not seen[b]:
                        seen[b] = True
                        orb.append(b)
            out.append(sorted(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1


def coset_action(g: FinGroup, h: SubgroupRecord, label: str | None = None) -> CosetAction:
    """Right-multiplication action of g on the right cosets of h."""
    mt = g.mul_table
    coset_of = [-1] * g.order
    reps: list[int] = []
    for x in range(g.order):
        if coset_of[x] < 0:
            cid = len(reps)
            reps.append(x)
            for y in h.members:
                coset_of[mt[y][x]] = cid
    images = tuple(tuple(coset_of[mt[r][x]] for r in reps) for x in range(g.order))
    if label is None:
        label = f"H{h.class_id}" if h.class_id >= 0 else "H"
    return CosetAction(g, len(reps), images, label)


def direct_sum(a: CosetAction, b: CosetAction, label: str | None = None) -> CosetAction:
    """Disjoint union of two actions of the same group (intransitive)."""
    if a.group is not b.group:
        raise ValueError("actions of different groups")
    shift = a.degree
    images = tuple(pa + tuple(i + shift for i in pb) for pa, pb in zip(a.element_images, b.element_images))
    return CosetAction(a.group, a.degree + b.degree, images, label or f"{a.label}+{b.label}")


def faithful_actions(g: FinGroup, subgroups: Sequence[SubgroupRecord]) -> list[CosetAction]:
    return [coset_action(g, h) for h in subgroups if h.is_faithful_action]


def generator_words(g: FinGroup, h: SubgroupRecord) -> list[Word]:
    return [g.words[x] for x in h.generators]
