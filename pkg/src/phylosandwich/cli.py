"""Command-line entry point.

Exit codes: 0 compatible / success, 1 incompatible, 2 inconclusive (budget),
64 usage error, 65 data error.  Data goes to stdout, messages to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .characters import CharacterDataError, CharacterSet, parse_characters
from .experiments import DATASETS, dataset, random_characters, scan_subsets, verify_f4_counterexample
from .graphs import chordless_cycles, is_chordal
from .intersection import build_instance
from .sandwich import SandwichInstance, closure, load_instance
from .solver import DEFAULT_BUDGET, solve
from .tree import build_phylogeny, is_convex
from .triangulations import count_proper_triangulations

EXIT_OK, EXIT_INCOMPATIBLE, EXIT_INCONCLUSIVE = 0, 1, 2
EXIT_USAGE, EXIT_DATA = 64, 65

EPILOG = """exit codes:
  0   compatible / success
  1   incompatible (or closure found no completion)
  2   inconclusive: search budget exhausted
  64  usage error
  65  data error (missing or malformed input)

INPUT is a character file, an instance JSON file, a bundled dataset name
(example1, sec4, fig6, fig7) or 'random' (uses --seed).
"""

STATUS_EXIT = {"compatible": EXIT_OK, "incompatible": EXIT_INCOMPATIBLE, "inconclusive": EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(source: str, seed: int) -> CharacterSet | SandwichInstance:
    path = Path(source)
    if not path.exists():
        if source in DATASETS:
            return dataset(source).payload
        if source == "random":
            return random_characters(seed, 6, 5, 4)
        raise DataError(f"cannot read {source}: no such file or dataset")
    try:
        text = path.read_text(encoding="utf-8")
        if path.suffix == ".json":
            return load_instance(text)
        return parse_characters(text)
    except (OSError, UnicodeDecodeError, CharacterDataError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise DataError(f"{source}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _instance(payload) -> SandwichInstance:
    return build_instance(payload) if isinstance(payload, CharacterSet) else payload


def cmd_check(args, out) -> int:
    payload = _load(args.input, args.seed)
    inst = _instance(payload)
    report = solve(inst, args.budget)
    fmt = args.format or "json"
    tree = None
    if report.status == "compatible" and isinstance(payload, CharacterSet):
        tree = build_phylogeny(payload, report.completion)
    if fmt == "json":
        data = report.to_json(inst)
        data["newick"] = tree.to_newick() if tree else None
        out.write(_dump(data))
    elif fmt == "newick":
        if not isinstance(payload, CharacterSet):
            raise UsageError("--format newick needs character data, not an instance")
        if tree:
            out.write(tree.to_newick() + "\n")
    else:
        out.write(inst.to_dot(report.completion.fill if report.completion else ()))
    print(f"{report.status} ({report.nodes} search nodes)", file=sys.stderr)
    return STATUS_EXIT[report.status]


def cmd_closure(args, out) -> int:
    inst = _instance(_load(args.input, args.seed))
    outcome = closure(inst)
    if (args.format or "json") == "dot" and outcome.feasible:
        out.write(outcome.instance.to_dot())
    else:
        out.write(_dump(outcome.report(inst)))
    return EXIT_OK if outcome.feasible else EXIT_INCOMPATIBLE


def cmd_tree(args, out) -> int:
    payload = _load(args.input, args.seed)
    if not isinstance(payload, CharacterSet):
        raise UsageError("tree needs character data, not an instance")
    report = solve(build_instance(payload), args.budget)
    if report.status != "compatible":
        print(f"no tree: {report.status}", file=sys.stderr)
        return STATUS_EXIT[report.status]
    tree = build_phylogeny(payload, report.completion)
    fmt = args.format or "newick"
    if fmt == "newick":
        out.write(tree.to_newick() + "\n")
    elif fmt == "dot":
        out.write(tree.to_dot())
    else:
        out.write(_dump({"newick": tree.to_newick(), "convex": {c.name: is_convex(tree, c) for c in payload.characters}}))
    return EXIT_OK


def cmd_scan(args, out) -> int:
    payload = _load(args.input, args.seed)
    if not isinstance(payload, CharacterSet):
        raise UsageError("scan needs character data, not an instance")
    k = args.k if args.k is not None else max(1, len(payload) - 1)
    if not 1 <= k <= len(payload):
        raise UsageError(f"--k must lie in 1..{len(payload)}")
    report = scan_subsets(payload, k, budget=args.budget, workers=args.workers)
    out.write(_dump(report.to_json()))
    return STATUS_EXIT[report.full_set_status]


def _demo_characters(name: str, cs: CharacterSet, budget: int) -> tuple[dict, int]:
    inst = build_instance(cs)
    result = solve(inst, budget)
    data = {
        "dataset": name,
        "characters": cs.names,
        "species": list(cs.universe),
        "vertices": inst.n,
        "edges": len(inst.edges),
        "conflicts": len(inst.conflicts),
        "chordal": is_chordal(inst.adjacency()),
        "closure": closure(inst).report(inst),
        "solve": result.to_json(inst),
    }
    if len(cs) > 1:
        data["scan"] = scan_subsets(cs, len(cs) - 1, budget=budget).to_json()
    if result.status == "compatible":
        tree = build_phylogeny(cs, result.completion)
        data["newick"] = tree.to_newick()
        data["convex"] = {c.name: is_convex(tree, c) for c in cs.characters}
    if name == "sec4":
        ok, f4 = verify_f4_counterexample(cs)
        data["f4_counterexample"] = {"verified": ok, **f4}
    return data, STATUS_EXIT[result.status]


def _demo_instance(name: str, inst: SandwichInstance, budget: int) -> tuple[dict, int]:
    result = solve(inst, budget)
    cycles = []
    for cycle in chordless_cycles(inst.adjacency()):
        cycles.append({
            "cycle": [inst.name(v) for v in cycle],
            "proper_triangulations": count_proper_triangulations(cycle, inst.conflicts),
        })
    data = {
        "dataset": name,
        "vertices": inst.n,
        "edges": len(inst.edges),
        "conflicts": len(inst.conflicts),
        "chordless_cycles": cycles,
        "closure": closure(inst).report(inst),
        "solve": result.to_json(inst),
    }
    return data, STATUS_EXIT[result.status]


def cmd_demo(args, out) -> int:
    if args.name not in DATASETS:
        raise UsageError(f"unknown dataset {args.name!r}; choose from {', '.join(sorted(DATASETS))}")
    ds = dataset(args.name)
    if ds.is_characters:
        data, code = _demo_characters(args.name, ds.payload, args.budget)
    else:
        data, code = _demo_instance(args.name, ds.payload, args.budget)
    out.write(_dump(data))
    return code


def cmd_export(args, out) -> int:
    inst = _instance(_load(args.input, args.seed))
    fmt = "dot" if args.dot else (args.format or "json")
    if fmt == "newick":
        raise UsageError("export writes json or dot")
    out.write(inst.to_dot() if fmt == "dot" else _dump(inst.to_json()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "newick", "dot"], default=None)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    common.add_argument("--seed", type=int, default=0, help="seed for the 'random' input")

    parser = _Parser(
        prog="phylosandwich",
        description="Character compatibility via proper chordal completion.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="decide compatibility")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("closure", parents=[common], help="forced/forbidden closure report")
    p.add_argument("input")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("tree", parents=[common], help="perfect phylogeny as Newick")
    p.add_argument("input")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("scan", parents=[common], help="compatibility of every k-subset")
    p.add_argument("input")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("demo", parents=[common], help="run a bundled dataset end to end")
    p.add_argument("name")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("export", parents=[common], help="write the instance as JSON or DOT")
    p.add_argument("input")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_export)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.budget < 1 or getattr(args, "workers", 1) < 1:
            raise UsageError("--budget and --workers must be positive")
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
