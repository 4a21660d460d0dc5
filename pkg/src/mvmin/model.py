"""Regulatory graphs, activity intervals, regulatory contexts and parametrizations.

A regulatory graph has components, each with a maximal activity level, and
threshold-labelled edges ``(source, threshold, target)``.  For a target ``v``
the thresholds of the edges ``u -> v``, extended by ``0`` and ``max(u) + 1``,
cut the levels of ``u`` into activity intervals.  A regulatory context of ``v``
picks one activity interval for every component; the contexts of ``v`` partition
the state space and a parametrization assigns a target level to each of them.

All values here are immutable after construction.
"""

from __future__ import annotations

import itertools
import math
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Iterator, Mapping, NamedTuple, Sequence

from .errors import CapacityError, StructuralError

State = tuple[int, ...]


class Edge(NamedTuple):
    source: str
    threshold: int
    target: str

    def __str__(self) -> str:
        return f"({self.source},{self.threshold},{self.target})"


class ActivityInterval(NamedTuple):
    """Half-open level range ``[low, high)``."""

    low: int
    high: int

    def __contains__(self, level: object) -> bool:
        return isinstance(level, int) and self.low <= level < self.high

    def __str__(self) -> str:
        return f"[{self.low},{self.high})"


# One interval per component, in declaration order.  Equality and hashing of a
# context reduce to its tuple of low endpoints, since the highs follow from the
# graph.
Context = tuple[ActivityInterval, ...]


def format_context(ctx: Context) -> str:
    return "(" + ",".join(str(i) for i in ctx) + ")"


# ---------------------------------------------------------------------------
# capacity limits


@dataclass(frozen=True)
class Limits:
    max_states: int = 2**22
    max_contexts: int = 2**20


_limits: ContextVar[Limits] = ContextVar("mvmin_limits", default=Limits())


def current_limits() -> Limits:
    return _limits.get()


@contextmanager
def limits(max_states: int | None = None, max_contexts: int | None = None):
    """Temporarily override the state and context caps."""
    old = _limits.get()
    new = Limits(
        max_states=old.max_states if max_states is None else max_states,
        max_contexts=old.max_contexts if max_contexts is None else max_contexts,
    )
    token = _limits.set(new)
    try:
        yield new
    finally:
        _limits.reset(token)


# ---------------------------------------------------------------------------
# graph


def edge_order(graph: "RegulatoryGraph") -> Callable[[Edge], tuple[int, int, int]]:
    """Sort key: (source index, target index, threshold)."""
    index = graph.index

    def key(e: Edge) -> tuple[int, int, int]:
        return (index[e.source], index[e.target], e.threshold)

    return key


@dataclass(frozen=True)
class RegulatoryGraph:
    """Components with maximal levels plus a set of threshold-labelled edges.

    ``components`` keeps declaration order, which fixes the order of state
    tuples, of context tuples and of serialized output.
    """

    components: tuple[tuple[str, int], ...]
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple((str(n), int(r)) for n, r in self.components)
        )
        object.__setattr__(
            self, "edges", frozenset(Edge(s, int(t), d) for s, t, d in self.edges)
        )

    @cached_property
    def _hash(self) -> int:
        return hash((self.components, self.edges))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.components)

    @cached_property
    def index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    @cached_property
    def max_levels(self) -> tuple[int, ...]:
        return tuple(r for _, r in self.components)

    def rho(self, name: str) -> int:
        return self.max_levels[self.position(name)]

    def position(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise StructuralError(f"unknown component {name!r}") from None

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges, key=edge_order(self)))

    def thresholds(self, source: str, target: str) -> tuple[int, ...]:
        return tuple(
            sorted(e.threshold for e in self.edges if e.source == source and e.target == target)
        )

    def regulators(self, target: str) -> tuple[str, ...]:
        """Components with at least one edge into ``target``, in declaration order."""
        srcs = {e.source for e in self.edges if e.target == target}
        return tuple(n for n in self.names if n in srcs)

    def with_edges(self, edges) -> "RegulatoryGraph":
        return RegulatoryGraph(self.components, frozenset(edges))

    def all_edges(self) -> tuple[Edge, ...]:
        """Every edge a complete graph over these components has, in edge order."""
        return tuple(
            Edge(u, n, v)
            for u, ru in self.components
            for v in self.names
            for n in range(1, ru + 1)
        )

    def missing_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.all_edges() if e not in self.edges)

    def is_complete(self) -> bool:
        return not self.missing_edges()

    def state_count(self) -> int:
        return math.prod(r + 1 for r in self.max_levels)


def extended_thresholds(graph: RegulatoryGraph, u: str, v: str) -> tuple[int, ...]:
    """Thresholds of ``u -> v`` together with ``0`` and ``max(u) + 1``, ascending."""
    ru = graph.rho(u)
    graph.position(v)
    return tuple(sorted({0, ru + 1, *graph.thresholds(u, v)}))


def activity_intervals(graph: RegulatoryGraph, u: str, v: str) -> tuple[ActivityInterval, ...]:
    ts = extended_thresholds(graph, u, v)
    return tuple(ActivityInterval(a, b) for a, b in zip(ts, ts[1:]))


class _Layout(NamedTuple):
    intervals: tuple[tuple[ActivityInterval, ...], ...]
    # lookup[i][level] -> interval of component i containing that level
    lookup: tuple[tuple[ActivityInterval, ...], ...]


@lru_cache(maxsize=8192)
def _layout(graph: RegulatoryGraph, v: str) -> _Layout:
    intervals = tuple(activity_intervals(graph, u, v) for u in graph.names)
    lookup = tuple(
        tuple(iv for iv in ivs for _ in range(iv.low, iv.high)) for ivs in intervals
    )
    return _Layout(intervals, lookup)


def context_count(graph: RegulatoryGraph, v: str) -> int:
    return math.prod(len(graph.thresholds(u, v)) + 1 for u in graph.names)


@lru_cache(maxsize=8192)
def _contexts(graph: RegulatoryGraph, v: str) -> tuple[Context, ...]:
    ivs = _layout(graph, v).intervals
    # first component varies fastest, matching the usual tabular layout
    return tuple(tuple(reversed(p)) for p in itertools.product(*reversed(ivs)))


def contexts(graph: RegulatoryGraph, v: str) -> tuple[Context, ...]:
    """All regulatory contexts of ``v``.

    Raises CapacityError when the table would exceed the context cap.
    """
    graph.position(v)
    count = context_count(graph, v)
    cap = current_limits().max_contexts
    if count > cap:
        raise CapacityError("max-contexts", cap, count)
    return _contexts(graph, v)


def context_of(graph: RegulatoryGraph, v: str, state: Sequence[int]) -> Context:
    lookup = _layout(graph, v).lookup
    return tuple(lookup[i][x] for i, x in enumerate(state))


def substitute(t: tuple, i: int, value) -> tuple:
    return t[:i] + (value,) + t[i + 1 :]


def states(graph: RegulatoryGraph) -> Iterator[State]:
    """Every state, last component varying fastest.

    Raises CapacityError when the state space exceeds the state cap.
    """
    count = graph.state_count()
    cap = current_limits().max_states
    if count > cap:
        raise CapacityError("max-states", cap, count)
    return itertools.product(*(range(r + 1) for r in graph.max_levels))


def coarsen_context(old: RegulatoryGraph, v: str, ctx: Context) -> Context:
    """The context of ``v`` in ``old`` that contains the lower corner of ``ctx``.

    When ``old`` has a subset of the thresholds, this is the context that
    ``ctx`` was split from.  With a superset, it is the lower half of a split.
    """
    return context_of(old, v, tuple(iv.low for iv in ctx))


# ---------------------------------------------------------------------------
# parametrization


@dataclass(frozen=True)
class Parametrization:
    """Target level per regulatory context, one table per component."""

    tables: Mapping[str, Mapping[Context, int]]

    def __getitem__(self, v: str) -> Mapping[Context, int]:
        return self.tables[v]

    def value(self, v: str, ctx: Context) -> int:
        return self.tables[v][ctx]

    def replace(self, v: str, table: Mapping[Context, int]) -> "Parametrization":
        tables = dict(self.tables)
        tables[v] = dict(table)
        return Parametrization(tables)

    def rows(self, graph: RegulatoryGraph, v: str) -> list[int]:
        """Values of ``v`` listed in context order."""
        table = self.tables[v]
        return [table[c] for c in contexts(graph, v)]

    @classmethod
    def from_rows(cls, graph: RegulatoryGraph, rows: Mapping[str, Sequence[int]]) -> "Parametrization":
        tables = {}
        for v in graph.names:
            ctxs = contexts(graph, v)
            vals = list(rows[v])
            if len(vals) != len(ctxs):
                raise StructuralError(
                    f"{v}: expected {len(ctxs)} values, got {len(vals)}"
                )
            tables[v] = dict(zip(ctxs, vals))
        return cls(tables)

    @classmethod
    def from_function(cls, graph: RegulatoryGraph, fn: Callable[[str, Context], int]) -> "Parametrization":
        return cls({v: {c: fn(v, c) for c in contexts(graph, v)} for v in graph.names})


class Model(NamedTuple):
    graph: RegulatoryGraph
    params: Parametrization


def same_state_space(a: RegulatoryGraph, b: RegulatoryGraph) -> bool:
    return a.components == b.components


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind} at {self.location}: {self.message}"


def validate(graph: RegulatoryGraph, params: Parametrization | None) -> list[Diagnostic]:
    """Check graph invariants and, if the graph is sound, parametrization totality and range."""
    out: list[Diagnostic] = []
    seen = set()
    for name, r in graph.components:
        if name in seen:
            out.append(Diagnostic("duplicate-component", name, "component declared twice"))
        seen.add(name)
        if r < 1:
            out.append(Diagnostic("max-level", name, f"max level must be >= 1, got {r}"))
    rho = dict(graph.components)
    rank = {n: i for i, (n, _) in enumerate(graph.components)}
    last = len(rank)
    for e in sorted(
        graph.edges,
        key=lambda e: (rank.get(e.source, last), rank.get(e.target, last), e.threshold, e),
    ):
        for end in (e.source, e.target):
            if end not in rho:
                out.append(Diagnostic("unknown-component", str(e), f"unknown component {end!r}"))
        if e.source in rho and not 1 <= e.threshold <= rho[e.source]:
            out.append(
                Diagnostic(
                    "threshold",
                    str(e),
                    f"threshold must lie in [1, {rho[e.source]}], got {e.threshold}",
                )
            )
    if out or params is None:
        return out

    for v in graph.names:
        table = params.tables.get(v)
        if table is None:
            out.append(Diagnostic("totality", v, "no parameter table"))
            continue
        ctxs = contexts(graph, v)
        known = set(ctxs)
        for c in ctxs:
            if c not in table:
                out.append(Diagnostic("totality", v, f"missing value for context {format_context(c)}"))
                continue
            val = table[c]
            if not isinstance(val, int) or not 0 <= val <= rho[v]:
                out.append(
                    Diagnostic(
                        "range",
                        v,
                        f"value {val} for context {format_context(c)} outside [0, {rho[v]}]",
                    )
                )
        for c in table:
            if c not in known:
                out.append(Diagnostic("extra-context", v, f"{c!r} is not a context of {v}"))
    for v in params.tables:
        if v not in rho:
            out.append(Diagnostic("unknown-component", v, "parameter table for unknown component"))
    return out
