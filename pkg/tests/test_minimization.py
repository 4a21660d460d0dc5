import random

import pytest
from hypothesis import given, settings

from helpers import load, models, random_model
from mvmin import (
    ContractError,
    DomainError,
    Edge,
    Parametrization,
    RegulatoryGraph,
    async_ts,
    complete_step,
    equivalent_by_completion,
    equivalent_by_minimization,
    minimize,
    minimize_step,
    normalize,
    ts_equal,
)
from mvmin.normalization import is_normalized, observable_in_param
from mvmin.oracle import enumerate_models


def test_minimize_step_autoreg_normal_gives_autoreg_min():
    assert minimize_step(*load("autoreg_normal")) == load("autoreg_min")


def test_minimize_step_identity_on_minimal():
    assert minimize_step(*load("autoreg_min")) == load("autoreg_min")


def test_minimize_step_toy():
    g, k = minimize_step(*load("toy"))
    assert g.edges == {Edge("v", 2, "v"), Edge("v", 1, "u")}
    assert k.rows(g, "v") == [2, 1]
    assert (g, k) == load("toy_min")


def test_minimize_step_rejects_non_normalized():
    with pytest.raises(ContractError):
        minimize_step(*load("autoreg"))


@pytest.mark.parametrize(
    "start, end", [("toy", "toy_min"), ("autoreg", "autoreg_min"), ("autoreg_normal", "autoreg_min"), ("autoreg_min", "autoreg_min")]
)
def test_minimize(start, end):
    assert minimize(*load(start)) == load(end)


def test_equivalent_by_minimization():
    assert equivalent_by_minimization(*load("toy"), *load("toy_min"))
    assert equivalent_by_minimization(*load("autoreg"), *load("autoreg_min"))
    assert not equivalent_by_minimization(*load("toy"), *load("autoreg_normal"))
    assert not ts_equal(async_ts(*load("toy")), async_ts(*load("autoreg_normal")))


def test_equivalent_by_minimization_domain_error():
    g = RegulatoryGraph((("v", 2),))
    k = Parametrization.from_rows(g, {"v": [0]})
    with pytest.raises(DomainError):
        equivalent_by_minimization(*load("toy"), g, k)


@settings(max_examples=100, deadline=None)
@given(models())
def test_minimize_conservative_and_idempotent(model):
    m = minimize(*model)
    assert ts_equal(async_ts(*model), async_ts(*m))
    assert minimize(*m) == m
    assert is_normalized(*m)
    assert all(observable_in_param(*m, e) for e in m.graph.edges)


@settings(max_examples=100, deadline=None)
@given(models())
def test_minimize_step_conservative(model):
    n = normalize(*model)
    after = minimize_step(*n)
    assert ts_equal(async_ts(*n), async_ts(*after))
    assert is_normalized(*after)


@settings(max_examples=60, deadline=None)
@given(models())
def test_minimize_step_is_inverted_by_complete_step(model):
    n = normalize(*model)
    after = minimize_step(*n)
    removed = n.graph.edges - after.graph.edges
    if removed:
        [edge] = removed
        assert complete_step(*after, edge) == n


def test_minimize_order_independent():
    rng = random.Random(3)
    for _ in range(300):
        g, k = random_model(rng)
        reverse = lambda e: tuple(-x for x in (g.index[e.source], g.index[e.target], e.threshold))
        shuffled = {e: rng.random() for e in g.all_edges()}
        ref = minimize(g, k)
        assert minimize(g, k, order=reverse) == ref
        assert minimize(g, k, order=shuffled.__getitem__) == ref


def test_minimal_edge_count_exhaustive():
    comps = [("a", 1), ("b", 1)]
    fewest = {}
    for g, k in enumerate_models(comps):
        ts = async_ts(g, k)
        fewest[ts] = min(fewest.get(ts, 99), len(g.edges))
    for g, k in enumerate_models(comps):
        assert len(minimize(g, k).graph.edges) == fewest[async_ts(g, k)]


def test_minimal_edge_count_ternary_sample():
    # |V| = 2 with rho = (2, 1): every model of a TS class, sampled over starting points
    comps = [("a", 2), ("b", 1)]
    fewest = {}
    starts = []
    for i, (g, k) in enumerate(enumerate_models(comps)):
        ts = async_ts(g, k).transitions
        fewest[ts] = min(fewest.get(ts, 99), len(g.edges))
        if i % 97 == 0:
            starts.append((g, k, ts))
    for g, k, ts in starts:
        assert len(minimize(g, k).graph.edges) == fewest[ts]


def test_three_way_agreement_random_pairs():
    rng = random.Random(17)
    seen = set()
    for _ in range(200):
        a = random_model(rng, max_components=3, max_level=3)
        g2 = a.graph.with_edges(e for e in a.graph.all_edges() if rng.random() < 0.5)
        # either a structurally different model with the same dynamics or a random one
        if rng.random() < 0.5:
            b = minimize(*a)
            full = complete_step(*b)
            b = full if rng.random() < 0.5 else b
        else:
            b = (g2, Parametrization.from_function(g2, lambda v, c: rng.randint(0, g2.rho(v))))
        t = ts_equal(async_ts(*a), async_ts(*b))
        assert equivalent_by_minimization(*a, *b) == t
        assert equivalent_by_completion(*a, *b) == t
        seen.add(t)
    assert seen == {True, False}
