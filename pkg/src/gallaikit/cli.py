"""Command-line interface.

Exit codes: 0 success, 1 input/parse error, 2 usage error, 3 verification
failure, 4 numeric error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import operators as ops
from . import spectral
from .errors import ConvergenceError, GraphError, InputError
from .generators import GENERATORS, generate
from .graph import Graph, is_connected
from .io import Report, iter_graph6, parse_edgelist, write_edgelist, write_graph6
from .regularity import classify, is_srg
from .theorems import THEOREMS, verify

EXIT_OK, EXIT_INPUT, EXIT_USAGE, EXIT_VERIFY, EXIT_NUMERIC = 0, 1, 2, 3, 4

TRANSFORMS = {
    "line": lambda g: ops.line_graph(g).graph,
    "gallai": lambda g: ops.gallai(g).graph,
    "antigallai": lambda g: ops.anti_gallai(g).graph,
    "semitotal": ops.semi_total_point,
    "complement": ops.complement,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _add_source(p):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--in", dest="infile", metavar="FILE", help="graph file ('-' for stdin, the default)")
    src.add_argument("--gen", nargs="+", metavar="NAME", help="generator name followed by integer parameters")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gallaikit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="emit a corpus graph")
    p.add_argument("name", choices=sorted(GENERATORS))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")

    p = sub.add_parser("transform", help="apply a graph operator")
    p.add_argument("kind", choices=sorted(TRANSFORMS))
    _add_source(p)

    p = sub.add_parser("params", help="regularity classification as JSON")
    _add_source(p)

    p = sub.add_parser("spectrum", help="adjacency spectrum as JSON")
    _add_source(p)
    p.add_argument("--closed-form", choices=("srg", "rcn"))
    p.add_argument("--cycle-length", type=int, help="n for --closed-form rcn (default: order of the input cycle)")

    p = sub.add_parser("verify", help="check the theorems on a graph")
    p.add_argument("theorem", choices=["all"] + list(THEOREMS))
    _add_source(p)
    p.add_argument("--json", metavar="FILE", help="also write the report here")
    p.add_argument("--spectra", action="store_true", help="include spectra of G, Gallai and anti-Gallai")
    p.add_argument("--timing", action="store_true", help="record wall-clock stage durations")

    p = sub.add_parser("interlace", help="do the inner eigenvalues interlace the outer ones?")
    p.add_argument("--inner", required=True, help="comma-separated values or a spectrum JSON file")
    p.add_argument("--outer", required=True, help="comma-separated values or a spectrum JSON file")
    return parser


def _load(args, stdin) -> list[tuple[str, Graph]]:
    if args.gen:
        name, *raw = args.gen
        try:
            params = [int(x) for x in raw]
            return [(f"gen:{' '.join(args.gen)}", generate(name, params))]
        except (ValueError, InputError) as exc:
            raise UsageError(str(exc)) from None
    if args.infile and args.infile != "-":
        label = args.infile
        text = Path(label).read_text()
    else:
        label = "stdin"
        text = stdin.read()
    if args.format == "edgelist":
        return [(label, parse_edgelist(text))]
    graphs = list(iter_graph6(text.splitlines()))
    if not graphs:
        raise InputError("no graph in input")
    if len(graphs) == 1:
        return [(label, graphs[0])]
    return [(f"{label}:{i + 1}", g) for i, g in enumerate(graphs)]


def _emit_json(docs: list, out) -> None:
    if len(docs) == 1:
        out.write(json.dumps(docs[0], sort_keys=True, indent=2) + "\n")
    else:
        for d in docs:
            out.write(json.dumps(d, sort_keys=True) + "\n")


def _spectrum_values(spec: str) -> list[float]:
    path = Path(spec)
    if path.is_file():
        return list(json.loads(path.read_text())["values"])
    try:
        return [float(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"cannot read spectrum {spec!r}") from None


def _closed_form(kind: str, g: Graph, cycle_length):
    if kind == "srg":
        rep = classify(g)
        if not is_srg(rep):
            raise InputError(f"closed form srg needs a strongly regular graph (got {rep.level})")
        return spectral.srg_spectrum(rep.n, rep.k, rep.lam, rep.mu)
    if cycle_length is None:
        if not (is_connected(g) and g.n >= 3 and set(g.degrees()) == {2}):
            raise InputError("closed form rcn needs --cycle-length or a cycle as input")
        cycle_length = g.n
    return spectral.rcn_spectrum(cycle_length)


def _verify_report(label: str, g: Graph, args) -> Report:
    timing = {}
    t0 = time.perf_counter()
    report = Report(label, classify(g))
    timing["classify"] = time.perf_counter() - t0
    if args.spectra:
        t0 = time.perf_counter()
        report.spectra = [("graph", spectral.eigenvalues(g)),
                          ("gallai", spectral.eigenvalues(ops.gallai(g).graph)),
                          ("anti_gallai", spectral.eigenvalues(ops.anti_gallai(g).graph))]
        timing["spectra"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    report.verdicts = verify(g, args.theorem)
    timing["verify"] = time.perf_counter() - t0
    if args.timing:
        report.timing = timing
    return report


def run_cli(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args, stdin, stdout)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        stderr.write(parser.format_usage() + f"{exc}\n")
        return EXIT_USAGE
    except ConvergenceError as exc:
        stderr.write(f"numeric error: {exc}\n")
        return EXIT_NUMERIC
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT


def _dispatch(args, stdin, stdout) -> int:
    if args.command == "generate":
        try:
            g = generate(args.name, args.params)
        except InputError as exc:
            raise UsageError(str(exc)) from None
        text = write_edgelist(g) if args.format == "edgelist" else write_graph6(g).decode() + "\n"
        if args.out:
            Path(args.out).write_text(text)
        else:
            stdout.write(text)
        return EXIT_OK

    if args.command == "interlace":
        result = spectral.interlaces(_spectrum_values(args.inner), _spectrum_values(args.outer))
        stdout.write(json.dumps(result) + "\n")
        return EXIT_OK

    graphs = _load(args, stdin)

    if args.command == "transform":
        for _, g in graphs:
            stdout.write(write_graph6(TRANSFORMS[args.kind](g)).decode() + "\n")
        return EXIT_OK

    if args.command == "params":
        docs = []
        for label, g in graphs:
            docs.append({"input": label, "regularity": classify(g).to_dict(),
                         "connected": is_connected(g)})
        _emit_json(docs, stdout)
        return EXIT_OK

    if args.command == "spectrum":
        docs = []
        for label, g in graphs:
            s = (_closed_form(args.closed_form, g, args.cycle_length) if args.closed_form
                 else spectral.eigenvalues(g))
            docs.append({"input": label, "spectrum": s.to_dict()})
        _emit_json(docs, stdout)
        return EXIT_OK

    reports = [_verify_report(label, g, args) for label, g in graphs]
    if len(reports) == 1:
        text = reports[0].to_json() + "\n"
    else:
        text = "".join(r.to_json(indent=None) + "\n" for r in reports)
    stdout.write(text)
    if args.json:
        Path(args.json).write_text(text)
    return EXIT_VERIFY if any(r.failed for r in reports) else EXIT_OK


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
