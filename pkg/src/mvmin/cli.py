"""Command-line front end.

Exit codes: 0 success (or "equivalent"), 1 validation failure (or "not
equivalent"), 2 usage, parse, domain or capacity error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .completion import canonize, check_same_space, complete, equivalent_by_completion
from .dynamics import async_ts, sync_ts, ts_equal
from .errors import CapacityError, ModelError, ParseError
from .fileformat import export_ts, parse_document, serialize_model
from .minimization import equivalent_by_minimization, minimize
from .model import RegulatoryGraph, Parametrization, limits, validate
from .normalization import normalize, observability_report
from .oracle import ts_observable_oracle, ts_observable_oracle_mtv

TRANSFORMS = {
    "canonize": canonize,
    "complete": complete,
    "normalize": normalize,
    "minimize": minimize,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument(
        "--max-states", type=int, default=argparse.SUPPRESS, metavar="N",
        help="refuse state spaces larger than N (default 2^22)",
    )
    caps.add_argument(
        "--max-contexts", type=int, default=argparse.SUPPRESS, metavar="N",
        help="refuse more than N contexts per component (default 2^20)",
    )

    p = _Parser(
        prog="mvmin",
        description="Equivalence and minimization of multi-valued logical network models.",
        parents=[caps],
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(
        dest="command", required=True, parser_class=_Parser, metavar="<command>"
    )

    s = sub.add_parser("validate", parents=[caps], help="check a model file")
    s.add_argument("file")

    s = sub.add_parser("ts", parents=[caps], help="write the transition system")
    s.add_argument("file")
    s.add_argument("--sync", action="store_true", help="synchronous instead of asynchronous update")
    s.add_argument("--format", choices=("edges", "dot"), default="edges")
    s.add_argument("-o", "--output")

    for name, fn in TRANSFORMS.items():
        s = sub.add_parser(name, parents=[caps], help=f"write the {name}d model")
        s.add_argument("file")
        s.add_argument("-o", "--output")

    s = sub.add_parser("observability", parents=[caps], help="per-edge observability report")
    s.add_argument("file")
    s.add_argument("--machine", action="store_true", help="one 'edge ...' line per edge")

    s = sub.add_parser("equiv", parents=[caps], help="decide dynamical equivalence")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--method", choices=("minimize", "complete", "ts"), default="minimize")

    # debugging aid, not listed in --help
    s = sub.add_parser("oracle", parents=[caps])
    s.add_argument("file")
    return p


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_document(text).model
    except ParseError as exc:
        raise ParseError(f"{path}: {exc.message}", exc.line, exc.column) from None


def _emit(text: str, output: str | None, stdout) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)


def _report_table(graph: RegulatoryGraph, params: Parametrization) -> str:
    rows = [("edge", "param", "ts")]
    for r in observability_report(graph, params):
        u, n, v = r.edge
        rows.append((f"{u} -{n}-> {v}", _yn(r.observable_in_param), _yn(r.observable_in_ts)))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    return "".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in rows
    )


def _yn(b: bool) -> str:
    return "observable" if b else "hidden"


def _dispatch(args, stdout) -> int:
    cmd = args.command
    if cmd == "validate":
        try:
            graph, params = _load(args.file)
        except ParseError as exc:
            stdout.write(f"{exc}\n")
            return 1
        diags = validate(graph, params)
        for d in diags:
            stdout.write(f"{d}\n")
        return 1 if diags else 0

    if cmd == "equiv":
        a, b = _load(args.file_a), _load(args.file_b)
        if args.method == "minimize":
            same = equivalent_by_minimization(*a, *b)
        elif args.method == "complete":
            same = equivalent_by_completion(*a, *b)
        else:
            check_same_space(a.graph, b.graph)
            same = ts_equal(async_ts(*a), async_ts(*b))
        stdout.write("equivalent\n" if same else "not equivalent\n")
        return 0 if same else 1

    graph, params = _load(args.file)
    if cmd == "ts":
        ts = (sync_ts if args.sync else async_ts)(graph, params)
        _emit(export_ts(ts, args.format), args.output, stdout)
    elif cmd in TRANSFORMS:
        _emit(serialize_model(*TRANSFORMS[cmd](graph, params)), args.output, stdout)
    elif cmd == "observability":
        if args.machine:
            stdout.write("".join(r.line() + "\n" for r in observability_report(graph, params)))
        else:
            stdout.write(_report_table(graph, params))
    elif cmd == "oracle":
        for e in graph.sorted_edges:
            stdout.write(
                f"edge {e.source} {e.threshold} {e.target} "
                f"direct={str(ts_observable_oracle(graph, params, e)).lower()} "
                f"mtv={str(ts_observable_oracle_mtv(graph, params, e)).lower()}\n"
            )
    return 0


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        stderr.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        with limits(getattr(args, "max_states", None), getattr(args, "max_contexts", None)):
            return _dispatch(args, stdout)
    except CapacityError as exc:
        stderr.write(f"mvmin: capacity error: {exc.cap} exceeded ({exc.requested} > {exc.limit})\n")
        return 2
    except (ModelError, _UsageError) as exc:
        stderr.write(f"mvmin: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
