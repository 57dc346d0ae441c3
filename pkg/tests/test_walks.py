import math
from fractions import Fraction as F

import pytest

from liegraph import catalog
from liegraph.graph import build_graph
from liegraph.walks import (
    EventuallyPeriodic,
    Terminating,
    ad_walk,
    edge_weight,
    numeric_eval,
    series_vector,
    similarity_oracle,
    similarity_series,
)


@pytest.fixture(scope="module")
def wh2():
    b = catalog.get("wh2").basis
    return b, build_graph(b), {n: i for i, n in enumerate(b.names)}


def test_periodic_walk(wh2):
    b, G, ix = wh2
    w = ad_walk(b, G, ix["N"], ix["P"])
    assert w.classification == EventuallyPeriodic(0, 2)
    assert [w.vertex_at(n) for n in range(5)] == [ix["P"], ix["X"]] * 2 + [ix["P"]]


def test_terminating_walk(wh2):
    b, G, ix = wh2
    w = ad_walk(b, G, ix["X"], ix["N"])
    assert w.classification == Terminating(2)
    with pytest.raises(IndexError):
        w.vertex_at(3)


@pytest.mark.parametrize("order", [0, 1, 5, 12])
def test_series_matches_oracle(wh2, order):
    b, G, ix = wh2
    for j, k in [("N", "P"), ("N", "X"), ("X", "N"), ("P", "N"), ("X", "P")]:
        s = similarity_series(b, G, ix[j], ix[k], order)
        assert series_vector(b, s) == similarity_oracle(b, ix[j], ix[k], order)


def test_grouped_and_totals(wh2):
    b, G, ix = wh2
    s = similarity_series(b, G, ix["N"], ix["P"], 4)
    groups = s.grouped()
    assert [n for n, _ in groups[ix["P"]]] == [0, 2, 4]
    assert dict(s.totals())[ix["P"]] == 1 - F(1, 2) + F(1, 24)


def test_numeric_convergence(wh2):
    b, G, ix = wh2
    sums = dict(numeric_eval(similarity_series(b, G, ix["N"], ix["P"], 20)))
    assert math.isclose(sums[ix["P"]], math.cos(1), abs_tol=1e-12)
    assert math.isclose(sums[ix["X"]], math.sin(1), abs_tol=1e-12)


def test_edge_weight_checks_membership(wh2):
    b, G, ix = wh2
    e = G.edges[0]
    assert edge_weight(b, e) == b.alpha[e.start][e.label]
    with pytest.raises(ValueError):
        edge_weight(b, (e.start, e.label, (e.end + 1) % b.m))


def test_negative_order(wh2):
    b, G, ix = wh2
    with pytest.raises(ValueError):
        similarity_series(b, G, 0, 1, -1)


def test_su2_rotation_walk():
    b = catalog.get("su2").basis
    G = build_graph(b)
    w = ad_walk(b, G, 2, 0)
    assert w.classification == EventuallyPeriodic(0, 2)
    s = similarity_series(b, G, 2, 0, 15)
    assert series_vector(b, s) == similarity_oracle(b, 2, 0, 15)
