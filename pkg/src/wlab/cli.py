"""Command-line interface: ``wlab group|subgroups|chartable|permchars|tensor|verify``."""
from __future__ import annotations

import argparse
import logging
import sys

from . import report
from .errors import WlabError
from .group_engine import conjugacy_classes, group_from_presentation, load_presentation
from .pipeline import Analysis, analyze
from .subgroup_lattice import enumerate_subgroups
from .verify import verify

log = logging.getLogger("wlab")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--presentation", metavar="FILE", help="presentation file (default: bundled order-96 group)")
    p.add_argument("--coset-limit", type=int, metavar="N", help="live-coset bound (env WLAB_COSET_LIMIT)")


def _analysis(args) -> Analysis:
    a = analyze(load_presentation(args.presentation), report.env_coset_limit(args.coset_limit))
    # attaches published labels when the group matches
    verify(a, getattr(args, "k", None) or (1,))
    return a


def cmd_group_build(args) -> int:
    pres = load_presentation(args.presentation)
    g = group_from_presentation(pres, report.env_coset_limit(args.coset_limit))
    a = Analysis(pres, g, conjugacy_classes(g), [], None)  # type: ignore[arg-type]
    if args.json:
        report.write_text(args.json, report.dumps(report.group_json(a)))
    print(report.group_markdown(a), end="")
    return 0


def cmd_subgroups(args) -> int:
    pres = load_presentation(args.presentation)
    g = group_from_presentation(pres, report.env_coset_limit(args.coset_limit))
    subs = enumerate_subgroups(g)
    a = Analysis(pres, g, conjugacy_classes(g), subs, None)  # type: ignore[arg-type]
    data = report.subgroups_json(a)
    if args.json:
        report.write_text(args.json, report.dumps(data))
    rows = [[d["id"], d["order"], d["index"], d["core_order"], d["faithful"], ", ".join(d["generators"])] for d in data]
    print(f"{len(subs)} conjugacy classes of subgroups\n")
    print(report.md_table(["id", "order", "index", "core", "faithful", "generators"], rows), end="")
    return 0


def cmd_chartable(args) -> int:
    from .character_table import dixon_schneider

    pres = load_presentation(args.presentation)
    g = group_from_presentation(pres, report.env_coset_limit(args.coset_limit))
    c = conjugacy_classes(g)
    a = Analysis(pres, g, c, [], dixon_schneider(g, c))
    if args.json:
        report.write_text(args.json, report.dumps(report.chartable_json(a)))
    md = report.chartable_markdown(a)
    if args.markdown:
        report.write_text(args.markdown, md)
    if not (args.json or args.markdown):
        print(md, end="")
    return 0


def cmd_permchars(args) -> int:
    a = _analysis(args)
    md = report.permchars_markdown(a)
    if args.json:
        report.write_text(args.json, report.dumps([report.action_json(f) for f in a.faithful.values()]))
    if args.markdown:
        report.write_text(args.markdown, md)
    if not (args.json or args.markdown):
        print(md, end="")
    return 0


def cmd_tensor(args) -> int:
    a = _analysis(args)
    chosen = a.select(args.theta)
    a.faithful = {f.label: f for f in chosen}
    ks = args.k
    md = report.structure_markdown(a, ks) + "\n" + report.dimensions_markdown(a, ks) + "\n" + report.dimtable_markdown(a, ks)
    if args.json:
        data = {
            "tensor": [report.tensor_json(f, ks) for f in chosen],
            "dim_table": [{"action": lab, "dims": [str(d) for d in dims]} for lab, dims in report.dim_rows(a, ks)],
        }
        report.write_text(args.json, report.dumps(data))
    if args.csv:
        report.write_text(args.csv, report.dim_table_csv(a, ks))
    if args.markdown:
        report.write_text(args.markdown, md)
    if not (args.json or args.csv or args.markdown):
        print(md, end="")
    return 0


def cmd_verify(args) -> int:
    md = args.markdown
    if not (args.json or args.csv or md):
        md = "-"
    cfg = report.RunConfig(
        presentation=args.presentation,
        coset_limit=report.env_coset_limit(args.coset_limit),
        ks=args.k,
        json_path=args.json,
        csv_path=args.csv,
        markdown_path=md,
        targets=tuple(args.targets.split(",")),
    )
    summary, _ = report.run_pipeline(cfg)
    for line in summary.lines():
        print(line, file=sys.stderr)
    return 0 if summary.ok else 1


def _k_range(text: str) -> tuple[int, ...]:
    try:
        ks = report.parse_k_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad k range {text!r}") from exc
    if not ks:
        raise argparse.ArgumentTypeError("k range is empty")
    if ks[0] < 1 or ks[-1] > report.MAX_K:
        raise argparse.ArgumentTypeError(f"k must lie in 1..{report.MAX_K}")
    return ks


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wlab", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    grp = sub.add_parser("group", help="build the group from its presentation")
    gsub = grp.add_subparsers(dest="group_command", required=True)
    p = gsub.add_parser("build", help="enumerate the group and its conjugacy classes")
    _common(p)
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_group_build)

    p = sub.add_parser("subgroups", help="subgroups up to conjugacy")
    _common(p)
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser("chartable", help="irreducible character table")
    _common(p)
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--markdown", metavar="OUT")
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("permchars", help="permutation characters of the faithful transitive actions")
    _common(p)
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--markdown", metavar="OUT")
    p.set_defaults(func=cmd_permchars)

    p = sub.add_parser("tensor", help="tensor-power multiplicities and centralizer dimensions")
    _common(p)
    p.add_argument("--theta", default="all", help="'all' or comma list of action labels (e.g. 1,8 or theta3)")
    p.add_argument("--k", type=_k_range, default=(1, 2, 3, 4), help="k values, e.g. 1..4")
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--csv", metavar="OUT")
    p.add_argument("--markdown", metavar="OUT")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("verify", help="run the full pipeline and check every published claim")
    _common(p)
    p.add_argument("--k", type=_k_range, default=(1, 2, 3, 4))
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--csv", metavar="OUT")
    p.add_argument("--markdown", metavar="OUT")
    p.add_argument("--targets", default="all", help="comma list of prop1,prop2,theorem,corollary,dimtable or all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (WlabError, OSError, ValueError, KeyError) as exc:
        print(f"wlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
