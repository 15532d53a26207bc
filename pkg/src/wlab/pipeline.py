"""End-to-end computation: presentation -> group -> tables -> tensor data."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .character_table import CharTable, dixon_schneider
from .group_engine import ClassData, FinGroup, Presentation, conjugacy_classes, group_from_presentation
from .perm_characters import MultVector, PermChar, decompose, permutation_character
from .subgroup_lattice import CosetAction, SubgroupRecord, coset_action, enumerate_subgroups
from .tensor_centralizer import TensorAnalysis

log = logging.getLogger(__name__)


@dataclass(eq=False)
class FaithfulAction:
    label: str
    subgroup: SubgroupRecord
    action: CosetAction
    theta: PermChar
    tensor: TensorAnalysis

    @property
    def degree(self) -> int:
        return self.action.degree

    @property
    def multiplicities(self) -> MultVector:
        return self.tensor.base


@dataclass(eq=False)
class Analysis:
    presentation: Presentation
    group: FinGroup
    classes: ClassData
    subgroups: list[SubgroupRecord]
    table: CharTable
    faithful: dict[str, FaithfulAction] = field(default_factory=dict)
    # set when the faithful actions were matched to published labels
    matched: object | None = None

    def select(self, spec: str | Sequence[str] = "all") -> list[FaithfulAction]:
        """Faithful actions by label; accepts 'all', 'theta8', '8' or a comma list."""
        if isinstance(spec, str):
            if spec.strip().lower() == "all":
                return list(self.faithful.values())
            spec = [s.strip() for s in spec.split(",") if s.strip()]
        out = []
        for s in spec:
            cands = [s, f"theta{s}", f"H{s}"]
            hit = next((self.faithful[c] for c in cands if c in self.faithful), None)
            if hit is None:
                raise KeyError(f"no faithful action labelled {s!r}; have {sorted(self.faithful)}")
            out.append(hit)
        return out

    def relabel(self, names: dict[str, str]) -> None:
        """Rename faithful actions (old label -> new label), in the order of ``names``."""
        fresh: dict[str, FaithfulAction] = {}
        for old, new in names.items():
            fa = self.faithful[old]
            fa.label = new
            fa.action.label = new
            fa.theta = PermChar(fa.theta.values, new)
            fa.tensor.theta = fa.theta
            fresh[new] = fa
        for old, fa in self.faithful.items():
            if old not in names:
                fresh[old] = fa
        self.faithful = fresh


def analyze(pres: Presentation, coset_limit: int | None = None) -> Analysis:
    g = group_from_presentation(pres, coset_limit)
    log.info("group of order %d", g.order)
    c = conjugacy_classes(g)
    subs = enumerate_subgroups(g)
    log.info("%d classes, %d subgroup classes", len(c), len(subs))
    x = dixon_schneider(g, c)
    a = Analysis(pres, g, c, subs, x)
    for h in subs:
        if h.is_faithful_action:
            act = coset_action(g, h)
            theta = permutation_character(act, c)
            a.faithful[act.label] = FaithfulAction(act.label, h, act, theta, TensorAnalysis(theta, x))
    return a


def all_coset_actions(a: Analysis) -> list[tuple[SubgroupRecord, CosetAction, PermChar]]:
    out = []
    for h in a.subgroups:
        act = coset_action(a.group, h)
        out.append((h, act, permutation_character(act, a.classes)))
    return out


def decomposition(theta: PermChar, a: Analysis) -> MultVector:
    return decompose(theta, a.table, a.classes)
