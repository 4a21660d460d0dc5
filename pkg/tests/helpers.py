"""Shared model builders for the test-suite."""

import random
from pathlib import Path

from hypothesis import strategies as st

from mvmin import Edge, Model, Parametrization, RegulatoryGraph, parse_model
from mvmin.model import contexts

DATA = Path(__file__).parent / "data"

# PASS/FAIL lines collected by the acceptance suite
ACCEPTANCE: list[str] = []


def load(name: str) -> Model:
    return parse_model((DATA / f"{name}.mvm").read_text())


def random_model(rng: random.Random, max_components=4, max_level=3, edge_prob=None) -> Model:
    n = rng.randint(1, max_components)
    comps = tuple((f"c{i}", rng.randint(1, max_level)) for i in range(n))
    base = RegulatoryGraph(comps)
    p = rng.uniform(0.1, 0.7) if edge_prob is None else edge_prob
    graph = base.with_edges(e for e in base.all_edges() if rng.random() < p)
    params = Parametrization.from_function(graph, lambda v, c: rng.randint(0, graph.rho(v)))
    return Model(graph, params)


def random_params(rng: random.Random, graph: RegulatoryGraph) -> Parametrization:
    return Parametrization.from_function(graph, lambda v, c: rng.randint(0, graph.rho(v)))


@st.composite
def models(draw, max_components=3, max_level=3):
    n = draw(st.integers(1, max_components))
    comps = tuple((f"c{i}", draw(st.integers(1, max_level))) for i in range(n))
    base = RegulatoryGraph(comps)
    every = base.all_edges()
    chosen = draw(st.lists(st.booleans(), min_size=len(every), max_size=len(every)))
    graph = base.with_edges(e for e, keep in zip(every, chosen) if keep)
    tables = {}
    for v in graph.names:
        ctxs = contexts(graph, v)
        vals = draw(
            st.lists(st.integers(0, graph.rho(v)), min_size=len(ctxs), max_size=len(ctxs))
        )
        tables[v] = dict(zip(ctxs, vals))
    return Model(graph, Parametrization(tables))


def edges(*triples):
    return [Edge(*t) for t in triples]
