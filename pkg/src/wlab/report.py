"""Rendering of analyses as JSON, CSV and markdown, and the full pipeline run."""
from __future__ import annotations

import csv
import io
import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import published as pub
from .character_table import sum_of_degrees
from .errors import WlabError
from .group_engine import Presentation, load_presentation
from .perm_characters import format_decomposition, predicates
from .pipeline import Analysis, FaithfulAction, analyze
from .subgroup_lattice import generator_words
from .verify import Matching, VerificationSummary, letter_runs, verify

log = logging.getLogger(__name__)

TARGETS = ("prop1", "prop2", "theorem", "corollary", "dimtable")
MAX_K = 16


def parse_k_range(text: str) -> tuple[int, ...]:
    """'3', '1..4', '1-4' or '1,2,5' -> sorted tuple of k."""
    out: set[int] = set()
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        for sep in ("..", "-"):
            if sep in part:
                lo, hi = part.split(sep, 1)
                out.update(range(int(lo), int(hi) + 1))
                break
        else:
            out.add(int(part))
    return tuple(sorted(out))


@dataclass
class RunConfig:
    presentation: str | None = None
    coset_limit: int | None = None
    ks: tuple[int, ...] = (1, 2, 3, 4)
    json_path: str | None = None
    csv_path: str | None = None
    markdown_path: str | None = None
    targets: tuple[str, ...] = TARGETS
    # reserved; no algorithm is randomized
    seed: int = 0

    def __post_init__(self):
        if not self.ks:
            raise ValueError("k range is empty")
        if any(k < 1 or k > MAX_K for k in self.ks):
            raise ValueError(f"k must lie in 1..{MAX_K}")
        if not (self.json_path or self.csv_path or self.markdown_path):
            raise ValueError("at least one output format is required")
        targets = set()
        for t in self.targets:
            if t == "all":
                targets.update(TARGETS)
            elif t in TARGETS:
                targets.add(t)
            else:
                raise ValueError(f"unknown report target {t!r}")
        self.targets = tuple(t for t in TARGETS if t in targets)


# ---------------------------------------------------------------------------
# JSON


def group_json(a: Analysis) -> dict:
    g, c = a.group, a.classes
    pres = a.presentation
    return {
        "generators": list(pres.generators),
        "relators": [pres.format_word(r) for r in pres.relators],
        "order": g.order,
        "exponent": g.exponent,
        "classes": [
            {
                "id": i + 1,
                "size": cl.size,
                "element_order": cl.element_order,
                "representative": pres.format_word(g.words[cl.representative]),
            }
            for i, cl in enumerate(c.classes)
        ],
    }


def subgroups_json(a: Analysis) -> list[dict]:
    pres = a.presentation
    return [
        {
            "id": h.class_id,
            "order": h.order,
            "index": h.index,
            "core_order": h.core_order,
            "faithful": h.is_faithful_action,
            "conjugates": h.n_conjugates,
            "generators": [pres.format_word(w) for w in generator_words(a.group, h)],
        }
        for h in a.subgroups
    ]


def chartable_json(a: Analysis) -> dict:
    x = a.table
    return {
        "order": a.group.order,
        "conductor": x.conductor,
        "prime": x.prime,
        "class_sizes": x.class_sizes,
        "class_orders": x.class_orders,
        "degrees": x.degrees,
        "rows": [[v.promote(x.conductor).to_json() for v in row.values] for row in x.rows],
    }


def action_json(f: FaithfulAction) -> dict:
    return {
        "label": f.label,
        "subgroup": f.subgroup.class_id,
        "degree": f.degree,
        "fixed_points": list(f.theta.values),
        "multiplicities": list(f.multiplicities.entries),
        "predicates": predicates(f.multiplicities),
    }


def tensor_json(f: FaithfulAction, ks: Sequence[int]) -> dict:
    t = f.tensor
    return {
        "label": f.label,
        "closed_forms": [
            {"terms": [[v, f"{q.numerator}/{q.denominator}"] for v, q in cf.terms], "text": str(cf)}
            for cf in t.closed_forms
        ],
        "powers": [
            {
                "k": k,
                "multiplicities": [str(d) for d in t.multiplicities(k).entries],
                "components": [[str(d), n] for d, n in t.wedderburn(k).components],
                "dimension": str(t.dimension(k)),
            }
            for k in ks
        ],
    }


def matching_json(m: Matching | None) -> dict | None:
    if m is None:
        return None
    return {
        "labels": m.names,
        "class_witness": None if m.class_perm is None else [j + 1 for j in m.class_perm],
        "irreducible_witness": None if m.char_perm is None else [j + 1 for j in m.char_perm],
        "degree24_assignments_matching": m.alternatives,
    }


def dim_rows(a: Analysis, ks: Sequence[int]) -> list[tuple[str, list[int]]]:
    """Rows of the dimension table; equal adjacent rows are merged as 'x=y'."""
    rows: list[tuple[str, list[int]]] = []
    for f in a.faithful.values():
        dims = [f.tensor.dimension(k) for k in ks]
        if rows and rows[-1][1] == dims:
            rows[-1] = (f"{rows[-1][0]}={f.label}", dims)
        else:
            rows.append((f.label, dims))
    return rows


def dim_table_csv(a: Analysis, ks: Sequence[int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["action"] + [f"k={k}" for k in ks])
    for label, dims in dim_rows(a, ks):
        w.writerow([label] + dims)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# markdown


def md_table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    out = ["| " + " | ".join(map(str, header)) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(map(str, r)) + " |" for r in rows]
    return "\n".join(out) + "\n"


def _class_header(a: Analysis) -> list[str]:
    return [f"C{i + 1} ({cl.size}, o{cl.element_order})" for i, cl in enumerate(a.classes.classes)]


def group_markdown(a: Analysis) -> str:
    g = a.group
    rows = [
        [f"C{i + 1}", cl.size, cl.element_order, a.presentation.format_word(g.words[cl.representative])]
        for i, cl in enumerate(a.classes.classes)
    ]
    return (
        f"## Group\n\norder {g.order}, exponent {g.exponent}, {len(a.classes)} conjugacy classes\n\n"
        + md_table(["class", "size", "order", "representative"], rows)
    )


def chartable_markdown(a: Analysis) -> str:
    x = a.table
    rows = [[f"chi{i + 1}"] + [str(v) for v in row.values] for i, row in enumerate(x.rows)]
    return (
        f"## Character table\n\nprime {x.prime}, values in Q(E({x.conductor})), "
        f"sum of degrees {sum_of_degrees(x)}\n\n" + md_table([""] + _class_header(a), rows)
    )


def _published_order_note(m: Matching | None) -> str:
    if m is None or m.class_perm is None:
        return ""
    cw = " ".join(f"C{i + 1}->C{j + 1}" for i, j in enumerate(m.class_perm))
    out = f"Class witness (published numbering -> ours): {cw}\n\n"
    perm = m.char_perm or m.char_perm_mult
    if perm is not None:
        xw = " ".join(f"chi{i + 1}->chi{j + 1}" for i, j in enumerate(perm))
        out += f"Irreducible witness (published numbering -> ours, up to table automorphism): {xw}\n\n"
    return out


def permchars_markdown(a: Analysis) -> str:
    acts = list(a.faithful.values())
    m = a.matched
    out = "## Permutation characters\n\n"
    out += md_table([""] + _class_header(a), [[f.label] + list(f.theta.values) for f in acts])
    out += "\n" + _published_order_note(m)
    if m is not None and m.class_perm is not None:
        rows = [[f.label] + [f.theta.values[j] for j in m.class_perm] for f in acts]
        out += "In published class order:\n\n" + md_table([""] + [f"C{i + 1}" for i in range(len(a.classes))], rows)
    out += "\n## Decompositions\n\n"
    out += md_table(
        ["action", "degree", "decomposition", "multiplicities"],
        [[f.label, f.degree, format_decomposition(f.multiplicities), list(f.multiplicities.entries)] for f in acts],
    )
    perm = None if m is None else (m.char_perm or m.char_perm_mult)
    if perm is not None:
        rows = [[f.label, [f.multiplicities[j] for j in perm]] for f in acts]
        out += "\nIn published irreducible order:\n\n" + md_table(["action", "multiplicities"], rows)
    out += "\n## Predicates\n\n"
    rows = []
    for f in acts:
        p = predicates(f.multiplicities)
        rows.append(
            [f.label, f.subgroup.is_faithful_action, p["transitive"], p["multiplicity_free"], p["doubly_transitive"]]
        )
    out += md_table(["action", "faithful", "transitive", "multiplicity-free", "doubly transitive"], rows)
    return out


def _family_letters(f: FaithfulAction, m: Matching | None) -> str | None:
    if m is None or f.label not in pub.LETTERS:
        return None
    return pub.LETTERS[f.label]


def _grouping_str(runs) -> str:
    return " + ".join(f"{n}M_{ch}" if n > 1 else f"M_{ch}" for n, ch in runs)


def structure_markdown(a: Analysis, ks: Sequence[int]) -> str:
    m = a.matched
    out = "## Centralizer ring structure\n\n"
    perm = None if m is None else (m.char_perm or m.char_perm_mult)
    for f in a.faithful.values():
        t = f.tensor
        out += f"### {f.label}\n\n"
        letters = _family_letters(f, m)
        if letters is not None and perm is not None:
            forms = {}
            for i, ch in enumerate(letters):
                forms.setdefault(ch, t.closed_forms[perm[i]])
            out += "Families: " + ", ".join(f"{ch}_k = {forms[ch]}" for ch in sorted(forms)) + "\n\n"
            grouping = pub.GROUPINGS.get(f.label) or tuple(letter_runs(letters))
            merged: dict[str, int] = {}
            for n, ch in grouping:
                merged[ch] = merged.get(ch, 0) + n
            out += "Grouped as published: " + _grouping_str(grouping) + "\n\n"
            out += "Merged by family: " + _grouping_str([(n, ch) for ch, n in sorted(merged.items())]) + "\n\n"
        else:
            out += "Closed forms: " + "; ".join(f"chi{i + 1}: {cf}" for i, cf in enumerate(t.closed_forms)) + "\n\n"
        rows = [[k, str(t.wedderburn(k)), t.dimension(k)] for k in ks]
        out += md_table(["k", "structure", "dimension"], rows) + "\n"
    return out


def dimensions_markdown(a: Analysis, ks: Sequence[int]) -> str:
    rows = []
    for f in a.faithful.values():
        t = f.tensor
        for k in ks:
            sq = sum(d * d for d in t.multiplicities(k).entries)
            formula = pub.eval_dim_formula(pub.DIM_FORMULAS[f.label], k) if f.label in pub.DIM_FORMULAS and a.matched else "-"
            rows.append([f.label, k, sq, t.spectral_dimension(k), formula])
    return "## Dimensions\n\n" + md_table(["action", "k", "sum of squares", "spectral sum", "published formula"], rows)


def dimtable_markdown(a: Analysis, ks: Sequence[int]) -> str:
    rows = [[label] + dims for label, dims in dim_rows(a, ks)]
    return "## Dimension table\n\n" + md_table(["action"] + [f"k={k}" for k in ks], rows)


def summary_markdown(s: VerificationSummary) -> str:
    rows = [[c.id, c.status, c.detail.replace("|", "/")] for c in s.claims]
    verdict = "ALL CLAIMS PASS" if s.ok else "FAILED"
    return f"## Verification: {verdict}\n\n" + md_table(["claim", "status", "detail"], rows)


def notes_markdown() -> str:
    lines = ["## Reading notes", ""]
    for (lab, letter), (_, why) in pub.CORRECTIONS.items():
        lines.append(f"- {lab} {letter}_k: {why}.")
    lines.append("- The k-th tensor power character is taken to be theta^k (pointwise).")
    lines.append("- The k=1 multiplicity list is read as d^(k) at k=1.")
    lines.append("- The identity class in the sum-of-degrees remark is class C1.")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# pipeline


def full_json(a: Analysis, s: VerificationSummary, ks: Sequence[int]) -> dict:
    return {
        "status": "ok" if s.ok else "FAILED",
        "group": group_json(a),
        "subgroups": subgroups_json(a),
        "character_table": chartable_json(a),
        "matching": matching_json(a.matched),
        "actions": [action_json(f) for f in a.faithful.values()],
        "tensor": [tensor_json(f, ks) for f in a.faithful.values()],
        "dim_table": [{"action": label, "dims": [str(d) for d in dims]} for label, dims in dim_rows(a, ks)],
        "verification": s.to_json(),
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_text(path: str, text: str) -> None:
    if path == "-":
        print(text, end="")
        return
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def build_markdown(a: Analysis, s: VerificationSummary, cfg: RunConfig) -> str:
    parts = ["# Permutation representations and tensor centralizers\n"]
    parts.append(group_markdown(a))
    if "prop1" in cfg.targets or "prop2" in cfg.targets:
        parts.append(chartable_markdown(a))
        parts.append(permchars_markdown(a))
    if "theorem" in cfg.targets:
        parts.append(structure_markdown(a, cfg.ks))
    if "corollary" in cfg.targets:
        parts.append(dimensions_markdown(a, cfg.ks))
    if "dimtable" in cfg.targets:
        parts.append(dimtable_markdown(a, cfg.ks))
    parts.append(notes_markdown())
    parts.append(summary_markdown(s))
    return "\n".join(parts)


def run_pipeline(cfg: RunConfig) -> tuple[VerificationSummary, list[str]]:
    """Run everything and write the requested outputs.

    A presentation that fails to parse raises before anything is written.
    Later failures write a FAILED marker to each requested output and
    re-raise.
    """
    pres: Presentation = load_presentation(cfg.presentation)
    written: list[str] = []
    try:
        a = analyze(pres, cfg.coset_limit)
        s = verify(a, cfg.ks)
    except WlabError as exc:
        marker = f"FAILED: {type(exc).__name__}: {exc}\n"
        for path, text in (
            (cfg.json_path, dumps({"status": "FAILED", "error": str(exc)})),
            (cfg.csv_path, marker),
            (cfg.markdown_path, marker),
        ):
            if path:
                write_text(path, text)
                written.append(path)
        raise
    if cfg.json_path:
        write_text(cfg.json_path, dumps(full_json(a, s, cfg.ks)))
        written.append(cfg.json_path)
    if cfg.csv_path:
        write_text(cfg.csv_path, dim_table_csv(a, cfg.ks))
        written.append(cfg.csv_path)
    if cfg.markdown_path:
        write_text(cfg.markdown_path, build_markdown(a, s, cfg))
        written.append(cfg.markdown_path)
    log.info("wrote %s", ", ".join(written))
    return s, written


def env_coset_limit(value: int | None) -> int | None:
    if value is not None:
        return value
    env = os.environ.get("WLAB_COSET_LIMIT")
    return int(env) if env else None
