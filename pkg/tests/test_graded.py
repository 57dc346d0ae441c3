import pytest

from liegraph import catalog
from liegraph.exact import Subspace
from liegraph.graded import (
    Finest,
    GradationError,
    build_graded_graph,
    graded_derived_series,
    graded_lcs,
    granularity,
    is_finest_known,
    singleton_gradation,
    verify_gradation,
)


def test_l3_two_part():
    mg = catalog.get("l3_alpha_m1_4").gradation
    assert granularity(mg) == 2
    assert is_finest_known(mg) is Finest.unknown
    assert graded_derived_series(mg).dims == [3, 2, 0]
    lcs = graded_lcs(mg)
    assert lcs.dims == [3, 2] and not lcs.mismatches


def test_graded_graph_edges():
    G = build_graded_graph(catalog.get("l3_alpha_m1_4").gradation)
    assert set(G.edges) == {(0, 1, 0), (1, 0, 0)}
    g = catalog.get("heisenberg").algebra
    one = verify_gradation(g, [Subspace.full(3)], [[0]])
    assert build_graded_graph(one).edges == ((0, 0, 0),)


def test_singleton_gradation_matches_basis_graph():
    from liegraph.graph import build_graph

    b = catalog.get("solvable7").basis
    mg = singleton_gradation(b)
    assert is_finest_known(mg) is Finest.yes_minimal
    assert set(build_graded_graph(mg).edges) == set(build_graph(b).edges)
    with pytest.raises(GradationError):
        singleton_gradation(catalog.get("l3_alpha_m1").basis)


def test_not_direct_sum():
    g = catalog.get("heisenberg").algebra
    with pytest.raises(GradationError):
        verify_gradation(g, [[(1, 0, 0), (0, 1, 0)], [(0, 1, 0)]], [[None, None], [None, None]])


def test_escaping_bracket():
    g = catalog.get("heisenberg").algebra
    parts = [[(1, 0, 0)], [(0, 1, 0)], [(0, 0, 1)]]
    delta = [[None, None, None], [None, None, 1], [None, 1, None]]
    res = verify_gradation(g, parts, delta)
    assert not res.ok and res.pair == (1, 2)
    good = verify_gradation(g, parts, lambda j, k: 0 if {j, k} == {1, 2} else None)
    assert good.ok and good.names == ("g1", "g2", "g3")


def test_coarse_gradation_message():
    # everything in one part: the graded derived series cannot see [g, g] < g
    g = catalog.get("heisenberg").algebra
    mg = verify_gradation(g, [Subspace.full(3)], [[0]])
    gs = graded_derived_series(mg)
    assert gs.mismatches and gs.messages()[0] == "gradation too coarse at stage 1"


def test_sl3_root_gradation():
    mg = catalog.get("sl3").gradation
    assert mg.m == 7
    assert not graded_derived_series(mg).mismatches
