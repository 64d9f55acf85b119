"""``tdsr`` command-line interface.

Machine-readable results (JSON, DOT or CSV) go to stdout, a one-line human
summary to stderr.  Exit status: 0 success, 1 domain error or failed
verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .domination import domination_profile, require_no_isolated
from .errors import TdsrError
from .families import generate, parse_family
from .graph import Graph, from_edge_list, parse_vertex_list, set_label
from .realize import (
    SUITES,
    family_stream,
    hunt_d0_gap,
    records_to_csv,
    records_to_json,
    run_suite,
    survey_small_graphs,
)
from .reconfig import DEFAULT_CAP, build, component_of, connectivity, d0, reconfigure


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _graph_from_args(args, parser) -> Graph:
    if bool(args.input) == bool(args.family):
        parser.error("give exactly one of --input or --family")
    if args.input:
        return from_edge_list(Path(args.input).read_text())
    return generate(parse_family(args.family))


def _need(args, parser, *names):
    for name in names:
        if getattr(args, name) is None:
            parser.error(f"--{name.replace('_', '-')} is required for '{args.command}'")


def _cmd_profile(g, args, out, err):
    prof = domination_profile(g)
    out.write(_dump(prof.to_json()))
    err.write(f"gamma_t={prof.gamma_t} Gamma_t={prof.Gamma_t} minimal sets={prof.num_mtds}\n")


def _cmd_build(g, args, out, err):
    dk = build(g, args.k, args.cap)
    if args.format == "dot":
        out.write(dk.to_dot())
    else:
        out.write(_dump(dk.to_json()))
    err.write(f"D_{args.k}^t: {len(dk.vertices)} vertices, {len(dk.edges)} edges\n")


def _cmd_connectivity(g, args, out, err):
    rep = connectivity(g, args.k, args.cap)
    out.write(_dump(rep.to_json()))
    err.write(f"D_{args.k}^t has {rep.num_components} component(s)\n")


def _cmd_d0(g, args, out, err):
    prof = domination_profile(g)
    value = d0(g, args.cap)
    out.write(_dump({"d0": value, "Gamma_t": prof.Gamma_t, "gamma_t": prof.gamma_t}))
    err.write(f"d0={value}\n")


def _cmd_path(g, args, out, err):
    s, t = parse_vertex_list(args.from_), parse_vertex_list(args.to)
    found = reconfigure(g, s, t, args.k)
    if found is None:
        out.write(_dump({"found": False}))
        err.write(f"{set_label(s)} and {set_label(t)} lie in different components\n")
    else:
        out.write(_dump({"found": True, **found.to_json()}))
        err.write(f"{found.moves} move(s)\n")


def _cmd_component(g, args, out, err):
    info = component_of(g, parse_vertex_list(args.from_), args.k)
    out.write(_dump(info.to_json()))
    err.write(f"component of size {info.size}\n")


def _cmd_verify(args, out, err) -> int:
    records = run_suite(args.suite, args.max_n, args.jobs)
    out.write(records_to_csv(records) if args.format == "csv" else records_to_json(records) + "\n")
    failed = [r for r in records if not r.passed]
    err.write(f"{args.suite}: {len(records) - len(failed)}/{len(records)} verdicts pass\n")
    for r in failed:
        err.write(f"FAIL {r.claim} {r.instance}: expected {r.expected!r}, computed {r.computed!r}\n")
    return 1 if failed else 0


def _cmd_survey(args, out, err):
    census = survey_small_graphs(args.max_n or 6, args.jobs)
    out.write(_dump(census.to_json()))
    err.write(f"cycles {census.cycles}, paths {census.paths}\n")


def _cmd_hunt(args, out, err):
    stream = family_stream(args.stream, args.min_n, args.max_n or 10, args.count, args.seed)
    hits = hunt_d0_gap(stream, args.alpha)
    out.write(_dump([h.to_json() for h in hits]))
    err.write(f"{len(hits)} graph(s) with d0 - Gamma_t >= {args.alpha}\n")


GRAPH_COMMANDS = {
    "profile": _cmd_profile,
    "build": _cmd_build,
    "connectivity": _cmd_connectivity,
    "d0": _cmd_d0,
    "path": _cmd_path,
    "component": _cmd_component,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdsr", description="Total domination reconfiguration toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in GRAPH_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", help="edge-list file ('n <count>' header, 'u v' lines)")
        p.add_argument("--family", help="generated family, e.g. cycle:8 or spider:2,2,2")
        p.add_argument("--k", type=int)
        p.add_argument("--from", dest="from_")
        p.add_argument("--to")
        p.add_argument("--format", choices=("json", "dot"), default="json")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of states")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("verify")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-n", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("survey")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("hunt")
    p.add_argument("--stream", choices=("cycles", "paths", "trees", "connected"), default="cycles")
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--alpha", type=int, default=2)
    p.add_argument("--count", type=int, default=50, help="random trees per order")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command in GRAPH_COMMANDS:
            if args.command in ("build", "connectivity", "path", "component"):
                _need(args, parser, "k")
            if args.command in ("path", "component"):
                _need(args, parser, "from_")
            if args.command == "path":
                _need(args, parser, "to")
            g = _graph_from_args(args, parser)
            require_no_isolated(g)
            GRAPH_COMMANDS[args.command](g, args, out, err)
            return 0
        if args.command == "verify":
            return _cmd_verify(args, out, err)
        if args.command == "survey":
            _cmd_survey(args, out, err)
        elif args.command == "hunt":
            _cmd_hunt(args, out, err)
        return 0
    except SystemExit as exc:
        return int(exc.code or 0)
    except TdsrError as exc:
        err.write(f"error[{exc.code}]: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"error[io]: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
