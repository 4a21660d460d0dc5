"""Line-oriented model format and transition-system export.

Model documents look like::

    # toy network
    component v 2
    component u 1
    edge u 1 v
    edge v 2 v
    edge v 1 u
    param v v:0 u:0 = 2
    param v v:2 u:0 = 1
    param v v:0 u:1 = 2
    param v v:2 u:1 = 1
    param u v:0 = 0
    param u v:1 = 1

A ``param`` row names a context of its target by the low endpoint of each
regulator's activity interval.  Regulators with a single interval may be left
out.  ``param <target> default = <value>`` fills every context not given
explicitly.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .dynamics import TransitionSystem
from .errors import ParseError
from .model import (
    Context,
    Edge,
    Model,
    Parametrization,
    RegulatoryGraph,
    activity_intervals,
    contexts,
    format_context,
)

MAX_LEVEL = 2**16 - 1

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*\Z")
_INT = re.compile(r"[0-9]+\Z")
_TOKEN = re.compile(r"\S+")


@dataclass
class _Tok:
    text: str
    line: int
    col: int


@dataclass
class _ParamRow:
    target: _Tok
    selectors: list[tuple[_Tok, _Tok, _Tok]]  # (whole, regulator, low)
    value: _Tok
    default: bool


@dataclass
class ModelDocument:
    """A parsed model with the source text and where each item was declared."""

    source: str
    model: Model
    locations: dict = field(default_factory=dict)


def _err(tok: _Tok, message: str) -> ParseError:
    return ParseError(message, tok.line, tok.col)


def _level(tok: _Tok, what: str) -> int:
    if not _INT.match(tok.text):
        raise _err(tok, f"{what} must be a non-negative integer, got {tok.text!r}")
    val = int(tok.text)
    if val > MAX_LEVEL:
        raise _err(tok, f"{what} {val} exceeds the maximum level {MAX_LEVEL}")
    return val


def _tokenize(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0]
        toks = [_Tok(m.group(), lineno, m.start() + 1) for m in _TOKEN.finditer(line)]
        if toks:
            yield lineno, toks


def parse_document(text: str) -> ModelDocument:
    comps: list[tuple[str, int]] = []
    locations: dict = {}
    edge_toks: list[tuple[_Tok, _Tok, _Tok, _Tok]] = []
    rows: list[_ParamRow] = []

    for lineno, toks in _tokenize(text):
        kw = toks[0]
        args = toks[1:]
        if kw.text == "component":
            if len(args) != 2:
                raise _err(kw, "expected: component <name> <max_level>")
            name, lvl = args
            if not _NAME.match(name.text):
                raise _err(name, f"invalid component name {name.text!r}")
            if ("component", name.text) in locations:
                raise _err(name, f"component {name.text!r} declared twice")
            rho = _level(lvl, "max level")
            if rho < 1:
                raise _err(lvl, "max level must be >= 1")
            comps.append((name.text, rho))
            locations[("component", name.text)] = (name.line, name.col)
        elif kw.text == "edge":
            if len(args) != 3:
                raise _err(kw, "expected: edge <source> <threshold> <target>")
            edge_toks.append((kw, *args))
        elif kw.text == "param":
            rows.append(_param_row(kw, args))
        else:
            raise _err(kw, f"unknown keyword {kw.text!r}")

    rho = dict(comps)

    def known(tok: _Tok) -> str:
        if tok.text not in rho:
            raise _err(tok, f"unknown component {tok.text!r}")
        return tok.text

    edges = []
    for kw, src, thr, tgt in edge_toks:
        s, t = known(src), known(tgt)
        n = _level(thr, "threshold")
        if not 1 <= n <= rho[s]:
            raise _err(thr, f"threshold {n} outside [1, {rho[s]}] of {s}")
        e = Edge(s, n, t)
        if ("edge", e) in locations:
            raise _err(kw, f"duplicate edge {s} {n} {t}")
        locations[("edge", e)] = (kw.line, kw.col)
        edges.append(e)

    graph = RegulatoryGraph(tuple(comps), frozenset(edges))
    tables = _resolve_params(graph, rows, locations)
    return ModelDocument(text, Model(graph, Parametrization(tables)), locations)


def _param_row(kw: _Tok, args: list[_Tok]) -> _ParamRow:
    if len(args) < 4 or args[-2].text != "=" or sum(a.text == "=" for a in args) != 1:
        raise _err(kw, "expected: param <target> <regulator>:<low>... = <value>")
    target, *sels, _, value = args
    if len(sels) == 1 and sels[0].text == "default":
        return _ParamRow(target, [], value, True)
    parsed = []
    for sel in sels:
        name, sep, low = sel.text.partition(":")
        if not sep or not name or not low:
            raise _err(sel, f"selector must look like <regulator>:<low>, got {sel.text!r}")
        parsed.append(
            (
                sel,
                _Tok(name, sel.line, sel.col),
                _Tok(low, sel.line, sel.col + len(name) + 1),
            )
        )
    return _ParamRow(target, parsed, value, False)


def _resolve_params(graph: RegulatoryGraph, rows: list[_ParamRow], locations: dict) -> dict:
    rho = dict(graph.components)
    tables: dict[str, dict[Context, int]] = {v: {} for v in graph.names}
    defaults: dict[str, int] = {}
    last_row: dict[str, _Tok] = {}

    for row in rows:
        v = row.target.text
        if v not in rho:
            raise _err(row.target, f"unknown component {v!r}")
        val = _level(row.value, "parameter value")
        if val > rho[v]:
            raise _err(row.value, f"parameter value {val} outside [0, {rho[v]}] of {v}")
        last_row[v] = row.target
        if row.default:
            if v in defaults:
                raise _err(row.target, f"second default row for {v}")
            defaults[v] = val
            locations[("default", v)] = (row.target.line, row.target.col)
            continue
        ctx = _context_from_selectors(graph, v, row)
        if ctx in tables[v]:
            raise _err(row.target, f"duplicate parameter row for {v} {format_context(ctx)}")
        tables[v][ctx] = val
        locations[("param", v, ctx)] = (row.target.line, row.target.col)

    for v in graph.names:
        ctxs = contexts(graph, v)
        missing = [c for c in ctxs if c not in tables[v]]
        if missing and v in defaults:
            for c in missing:
                tables[v][c] = defaults[v]
            missing = []
        if missing:
            line, col = locations[("component", v)]
            tok = last_row.get(v, _Tok(v, line, col))
            raise _err(
                tok,
                f"no parameter for {v} in context {format_context(missing[0])}"
                + (f" and {len(missing) - 1} more" if len(missing) > 1 else ""),
            )
        tables[v] = {c: tables[v][c] for c in ctxs}
    return tables


def _context_from_selectors(graph: RegulatoryGraph, v: str, row: _ParamRow) -> Context:
    given: dict[str, tuple[_Tok, int]] = {}
    for whole, name, low in row.selectors:
        if name.text not in graph.index:
            raise _err(name, f"unknown component {name.text!r}")
        if name.text in given:
            raise _err(whole, f"regulator {name.text} selected twice")
        given[name.text] = (low, _level(low, "interval low endpoint"))
    ctx = []
    for u in graph.names:
        ivs = activity_intervals(graph, u, v)
        if u in given:
            tok, low = given[u]
            match = [iv for iv in ivs if iv.low == low]
            if not match:
                raise _err(
                    tok,
                    f"no context of {v} has an interval of {u} starting at {low}"
                    f" (intervals: {' '.join(str(i) for i in ivs)})",
                )
            ctx.append(match[0])
        elif len(ivs) == 1:
            ctx.append(ivs[0])
        else:
            raise _err(row.target, f"missing selector for regulator {u} of {v}")
    return tuple(ctx)


def parse_model(text: str) -> Model:
    return parse_document(text).model


def serialize_model(graph: RegulatoryGraph, params: Parametrization) -> str:
    """Canonical text: components, sorted edges, then rows in context order."""
    out = [f"component {n} {r}" for n, r in graph.components]
    out += [f"edge {e.source} {e.threshold} {e.target}" for e in graph.sorted_edges]
    for v in graph.names:
        regs = [graph.index[u] for u in graph.regulators(v)]
        table = params[v]
        if not regs:
            [ctx] = contexts(graph, v)
            out.append(f"param {v} default = {table[ctx]}")
            continue
        for ctx in contexts(graph, v):
            sels = " ".join(f"{graph.names[i]}:{ctx[i].low}" for i in regs)
            out.append(f"param {v} {sels} = {table[ctx]}")
    return "\n".join(out) + "\n"


def _fmt_state(s) -> str:
    return "(" + ",".join(str(x) for x in s) + ")"


def export_ts(ts: TransitionSystem, fmt: str = "edges") -> str:
    if fmt == "edges":
        return "".join(f"{_fmt_state(a)} -> {_fmt_state(b)}\n" for a, b in ts.transitions)
    if fmt == "dot":
        names = ",".join(n for n, _ in ts.dimensions)
        out = ["digraph ts {", f'  label="({names})";']
        for s in itertools.product(*(range(r + 1) for _, r in ts.dimensions)):
            out.append(f'  "{_fmt_state(s)}";')
        for a, b in ts.transitions:
            out.append(f'  "{_fmt_state(a)}" -> "{_fmt_state(b)}";')
        out.append("}")
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown transition system format {fmt!r}")
