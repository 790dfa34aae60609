"""Command-line interface: ``crnreal <subcommand> ...``."""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from .network import DomainError, FluxSystem, MassActionSystem, NetworkError
from .realize import (PreconditionError, SearchConfig, check_dynamical_equivalence, check_flux_equivalence,
                      eliminate, realize_flux_cb, realize_flux_db, realize_ma_cb_at_state, realize_ma_cb_search,
                      realize_ma_db_at_state, realize_ma_rev, realize_ma_wr)
from .reports import (EXIT_DATA, EXIT_USAGE, analyze_report, canonical, check_report, eliminate_report,
                      error_report, realize_report, render_text)
from .textio import ParseError, emit_dot, format_document, load, parse_complex, parse_state


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


def _load(path: str):
    try:
        return load(path)
    except ParseError as exc:
        raise DataError(f"{path}: parse error: {exc}") from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable report")
    common.add_argument("--dot", metavar="PATH", help="write a Graphviz DOT file")

    p = _Parser(prog="crnreal", description="Exact realizations of reaction networks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="structural summary of a network")
    a.add_argument("file")
    a.add_argument("--at", metavar="X1,X2,...", help="state for pointwise classification (mass-action)")

    c = sub.add_parser("check", parents=[common], help="flux or dynamical equivalence of two systems")
    c.add_argument("file_a")
    c.add_argument("file_b")

    for name, what in (("realize-cb", "complex-balanced"), ("realize-db", "detailed-balanced"),
                       ("realize-wr", "weakly reversible"), ("realize-rev", "reversible")):
        r = sub.add_parser(name, parents=[common], help=f"find an equivalent {what} system")
        r.add_argument("file")
        r.add_argument("--out", metavar="PATH", help="write the witness in the text format")
        if name in ("realize-cb", "realize-db"):
            mode = r.add_mutually_exclusive_group()
            mode.add_argument("--at", metavar="X1,X2,...", help="fixed state (mass-action input)")
            if name == "realize-cb":
                mode.add_argument("--search", action="store_true",
                                  help="search over states (default for mass-action input)")
        if name == "realize-cb":
            r.add_argument("--seed", type=_u64, default=0)
            r.add_argument("--multistarts", type=_positive, default=200)

    e = sub.add_parser("eliminate", parents=[common], help="remove a virtual source")
    e.add_argument("file")
    e.add_argument("--vertex", required=True, metavar="COMPLEX")
    e.add_argument("--out", metavar="PATH", help="write the resulting system in the text format")
    return p


def _write(path: Optional[str], text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")


def _require(system, cls, command: str):
    if not isinstance(system, cls):
        want = "flux" if cls is FluxSystem else "mass-action"
        raise UsageError(f"{command} needs a {want} document")
    return system


def _analyze(args):
    doc = _load(args.file)
    state = None
    if args.at is not None:
        _require(doc.system, MassActionSystem, "analyze --at")
        state = parse_state(args.at, doc.network.dimension)
    _write(args.dot, emit_dot(doc))
    return analyze_report(doc, state)


def _check(args):
    a, b = _load(args.file_a).system, _load(args.file_b).system
    if a.species != b.species:
        raise UsageError("the two documents declare different species")
    if isinstance(a, FluxSystem) and isinstance(b, FluxSystem):
        return check_report("flux equivalence", check_flux_equivalence(a, b))
    if isinstance(a, MassActionSystem) and isinstance(b, MassActionSystem):
        return check_report("dynamical equivalence", check_dynamical_equivalence(a, b))
    raise UsageError("check needs two flux documents or two mass-action documents")


def _realize(args):
    doc = _load(args.file)
    system = doc.system
    cmd = args.command
    if cmd in ("realize-cb", "realize-db") and isinstance(system, FluxSystem):
        if args.at is not None:
            raise UsageError("--at applies to mass-action documents only")
        res = realize_flux_cb(system) if cmd == "realize-cb" else realize_flux_db(system)
        procedure = "linear feasibility on source vertices"
    elif cmd in ("realize-cb", "realize-db"):
        M = _require(system, MassActionSystem, cmd)
        if args.at is not None:
            x0 = parse_state(args.at, doc.network.dimension)
            res = (realize_ma_cb_at_state if cmd == "realize-cb" else realize_ma_db_at_state)(M, x0)
            procedure = "linear feasibility at a fixed state"
        elif cmd == "realize-db":
            raise UsageError("realize-db on a mass-action document needs --at")
        else:
            res = realize_ma_cb_search(M, SearchConfig(multistarts=args.multistarts, seed=args.seed))
            procedure = f"state search (seed {args.seed}, {args.multistarts} multistarts)"
    else:
        M = _require(system, MassActionSystem, cmd)
        res = realize_ma_wr(M) if cmd == "realize-wr" else realize_ma_rev(M)
        procedure = "dense support with trimming"
    if res.found:
        witness = canonical(res.system)
        _write(args.out, format_document(witness))
        _write(args.dot, emit_dot(witness))
    return realize_report(cmd, procedure, res)


def _eliminate(args):
    doc = _load(args.file)
    system = doc.system
    if not isinstance(system, (FluxSystem, MassActionSystem)):
        raise UsageError("eliminate needs a flux or mass-action document")
    try:
        vertex = parse_complex(args.vertex, doc.species)
    except ParseError as exc:
        raise UsageError(f"--vertex: {exc.message}") from exc
    if doc.network.index_of(vertex) is None:
        raise UsageError(f"--vertex {args.vertex!r} is not a vertex of the network")
    result, report = eliminate(system, vertex)
    _write(args.out, format_document(canonical(result)))
    _write(args.dot, emit_dot(canonical(result)))
    return eliminate_report(result, report)


_COMMANDS = {"analyze": _analyze, "check": _check, "realize-cb": _realize, "realize-db": _realize,
             "realize-wr": _realize, "realize-rev": _realize, "eliminate": _eliminate}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rep = _COMMANDS[args.command](args)
    except (DataError, DomainError, NetworkError) as exc:
        rep = error_report(args.command, EXIT_DATA, str(exc))
    except (UsageError, PreconditionError) as exc:
        rep = error_report(args.command, EXIT_USAGE, str(exc))
    except ValueError as exc:  # e.g. malformed --at
        rep = error_report(args.command, EXIT_USAGE, str(exc))
    except OSError as exc:
        rep = error_report(args.command, EXIT_USAGE, f"{exc.strerror}: {exc.filename}")
    if args.json:
        sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    elif rep["status"] == "error":
        sys.stderr.write(render_text(rep))
    else:
        sys.stdout.write(render_text(rep))
    return rep["exit_code"]


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
