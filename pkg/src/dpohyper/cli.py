"""Command-line front end.

Every subcommand prints one JSON document on stdout. Exit codes: 0 ok,
1 the question was answered negatively, 2 bad input, 3 an exhaustive search
exceeded its size bound. File arguments accept ``-`` for stdin, which is also
the default, so commands chain in pipelines::

    dpohyper gadget --kind m --n 3 | dpohyper compete | dpohyper witness --kinds m
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import __version__
from .competition import (
    DoublyPartialOrder,
    build_dpo,
    competition_graph,
    competition_hypergraph,
    verify_structure_lemmas,
)
from .errors import DPOError, TooLarge
from .hypergraph import Graph, Hypergraph, is_chordal
from .interval import is_interval, is_interval_graph
from .patterns import (
    FAMILIES,
    check_realization,
    embed_interval_hypergraph,
    find_forbidden_witness,
    gadget_dpo,
    generate_pattern,
    generate_staircase,
    parse_pattern_name,
    search_realization,
)

SCHEMA_VERSION = "1"
EXIT_CODES = {"ok": 0, "falsified": 1, "input_error": 2, "too_large": 3}


@dataclass
class CommandOutcome:
    status: str
    payload: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def render(self) -> str:
        doc = {"schema_version": SCHEMA_VERSION, "status": self.status}
        doc.update(self.payload)
        return json.dumps(doc, indent=2)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Report usage problems as input errors instead of exiting.
    def error(self, message):
        raise UsageError(message)


def _read_json(path: str) -> dict:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise DPOError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DPOError(f"{path} is not valid JSON: {exc}") from exc


def _points(path: str) -> DoublyPartialOrder:
    return DoublyPartialOrder.from_json(_read_json(path))


def _hyper(path: str) -> Hypergraph:
    return Hypergraph.from_json(_read_json(path))


def _verdict(ok: bool) -> str:
    return "ok" if ok else "falsified"


def _cmd_compete(args) -> CommandOutcome:
    return CommandOutcome("ok", competition_hypergraph(_points(args.points)).to_json())


def _cmd_compete_graph(args) -> CommandOutcome:
    return CommandOutcome("ok", competition_graph(_points(args.points)).to_json())


def _cmd_interval(args) -> CommandOutcome:
    cert = is_interval(_hyper(args.hyper))
    return CommandOutcome(_verdict(cert.interval), cert.to_json())


def _cmd_interval_graph(args) -> CommandOutcome:
    g = Graph.from_json(_read_json(args.graph))
    ok = is_interval_graph(g)
    return CommandOutcome(_verdict(ok), {"interval": ok})


def _cmd_chordal(args) -> CommandOutcome:
    report = is_chordal(_hyper(args.hyper))
    return CommandOutcome(_verdict(report.chordal), report.to_json())


def _cmd_witness(args) -> CommandOutcome:
    kinds = [k.strip().upper() for k in args.kinds.split(",") if k.strip()]
    bad = [k for k in kinds if k not in FAMILIES]
    if bad or not kinds:
        raise DPOError(f"--kinds takes a comma list of {','.join(f.lower() for f in FAMILIES)}")
    w = find_forbidden_witness(_hyper(args.hyper), kinds, max_subset=args.max_subset)
    return CommandOutcome(_verdict(w is not None), {"found": w is not None, "witness": w and w.to_json()})


def _cmd_pattern(args) -> CommandOutcome:
    p = parse_pattern_name(args.name)
    doc = {"pattern": p.name}
    doc.update(generate_pattern(p).to_json())
    return CommandOutcome("ok", doc)


def _cmd_gadget(args) -> CommandOutcome:
    pts = gadget_dpo(args.kind, args.n)
    return CommandOutcome("ok", build_dpo(pts).to_json())


def _cmd_staircase(args) -> CommandOutcome:
    a, b = generate_staircase(args.n)
    doc = build_dpo(a + b).to_json()
    doc["A"] = [p.id for p in a]
    doc["B"] = [p.id for p in b]
    return CommandOutcome("ok", doc)


def _cmd_embed(args) -> CommandOutcome:
    h = _hyper(args.hyper)
    cert = is_interval(h)
    if not cert.interval:
        return CommandOutcome("input_error", {"error": "hypergraph is not interval", "interval": False})
    pts = embed_interval_hypergraph(h, cert.ordering)
    doc = build_dpo(pts).to_json()
    doc["ordering"] = list(cert.ordering)
    return CommandOutcome("ok", doc)


def _cmd_check(args) -> CommandOutcome:
    d = _points(args.points)
    report = check_realization(d.points, _hyper(args.hyper))
    return CommandOutcome(_verdict(report.realized), report.to_json())


def _cmd_realize(args) -> CommandOutcome:
    report = search_realization(
        _hyper(args.hyper), args.grid, args.extra, args.budget, args.seed, threads=args.threads
    )
    return CommandOutcome(_verdict(report.realized), report.to_json())


def _cmd_lemmas(args) -> CommandOutcome:
    violations = verify_structure_lemmas(_points(args.points))
    return CommandOutcome(_verdict(not violations), {"violations": [v.to_json() for v in violations]})


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dpohyper", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    add("compete", _cmd_compete, "competition hypergraph with witness map").add_argument("points", nargs="?", default="-")
    add("compete-graph", _cmd_compete_graph, "competition graph").add_argument("points", nargs="?", default="-")
    add("interval", _cmd_interval, "interval hypergraph test with ordering").add_argument("hyper", nargs="?", default="-")
    add("interval-graph", _cmd_interval_graph, "interval graph test").add_argument("graph", nargs="?", default="-")
    add("chordal", _cmd_chordal, "hypergraph chordality").add_argument("hyper", nargs="?", default="-")

    p = add("witness", _cmd_witness, "search for a forbidden pattern")
    p.add_argument("hyper", nargs="?", default="-")
    p.add_argument("--kinds", default="c,m,f,o1,o2")
    p.add_argument("--max-subset", type=int, default=None)

    add("pattern", _cmd_pattern, "emit a forbidden pattern (c3, m2, f1, o1, ...)").add_argument("name")

    p = add("gadget", _cmd_gadget, "point set containing M_n or F_n")
    p.add_argument("--kind", required=True, type=str.lower, choices=["m", "f"])
    p.add_argument("--n", required=True, type=int)

    add("staircase", _cmd_staircase, "the A_n and B_n point families").add_argument("--n", required=True, type=int)
    add("embed", _cmd_embed, "DPO whose competition hypergraph contains an interval hypergraph").add_argument(
        "hyper", nargs="?", default="-"
    )

    p = add("check", _cmd_check, "is a point set's competition hypergraph H plus isolated points?")
    p.add_argument("points")
    p.add_argument("hyper")

    p = add("realize", _cmd_realize, "random search for a realization of H plus isolated points")
    p.add_argument("hyper", nargs="?", default="-")
    p.add_argument("--grid", type=int, default=8)
    p.add_argument("--extra", type=int, default=2)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--threads", type=int, default=1)

    add("lemmas", _cmd_lemmas, "check the down-right structure lemmas").add_argument("points", nargs="?", default="-")
    return parser


def dispatch(argv: Sequence[str]) -> CommandOutcome:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            raise UsageError("missing subcommand")
        return args.func(args)
    except (UsageError, DPOError) as exc:
        return CommandOutcome("input_error", {"error": f"{type(exc).__name__}: {exc}"})
    except TooLarge as exc:
        return CommandOutcome("too_large", {"error": str(exc)})


def main(argv: Optional[Sequence[str]] = None) -> int:
    outcome = dispatch(sys.argv[1:] if argv is None else argv)
    print(outcome.render())
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
