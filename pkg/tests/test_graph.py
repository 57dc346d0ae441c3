from collections import Counter
from itertools import product

import pytest

from liegraph import catalog
from liegraph.graph import (
    Edge,
    InvalidPatternError,
    LieGraph,
    SubgraphType,
    build_graph,
    classify_three_vertex,
    delta_composition_check,
    edge_type,
    graph_isomorphic,
    scan_all_triples,
    unconnected_components,
    validate_bounds,
    validate_edge_rules,
)

# every assignment of {zero, a, b, c} to the pairs ab, ac, bc, counted by type
TAXONOMY = {
    "I": 1, "II": 3, "III": 6, "IV": 3, "V": 3, "VI": 3, "VII": 6, "VIII": 6,
    "IX": 1, "X": 3, "XI": 3, "XII": 6, "XIII": 2, "XIV": 6, "XV": 6, "XVI": 6,
}


def _config_graph(targets):
    edges = []
    for (j, k), t in zip([(0, 1), (0, 2), (1, 2)], targets):
        if t is not None:
            edges += [Edge(j, k, t), Edge(k, j, t)]
    return LieGraph(3, edges, names=("a", "b", "c"))


def test_all_64_configurations():
    counts = Counter()
    for targets in product([None, 0, 1, 2], repeat=3):
        counts[classify_three_vertex(_config_graph(targets), (0, 1, 2)).value] += 1
    assert dict(counts) == TAXONOMY
    assert sum(counts.values()) == 64


def test_validity_flags():
    assert not SubgraphType.InvalidXIV.valid
    assert SubgraphType.VIII.valid and not SubgraphType.VIII.proper
    assert SubgraphType.X.choice_dependent and not SubgraphType.IX.choice_dependent


def test_unmatched_pattern():
    g = LieGraph(3, [Edge(0, 1, 2)], names=("a", "b", "c"))
    with pytest.raises(InvalidPatternError):
        classify_three_vertex(g, (0, 1, 2))
    assert scan_all_triples(g) == {(0, 1, 2): None}


def test_build_graph_edge_pairs():
    G = build_graph(catalog.get("heisenberg").basis)
    assert len(G.edges) == 2
    assert validate_edge_rules(G).ok
    assert validate_bounds(G).ok


def test_edge_rule_violation_detected():
    g = LieGraph(3, [Edge(0, 1, 2)])
    assert not validate_edge_rules(g).ok
    g = LieGraph(3, [Edge(0, 0, 1), Edge(0, 0, 1)])
    assert not validate_edge_rules(g).ok


def test_edge_types():
    assert edge_type((0, 1, 2)) == "Wedge"
    assert edge_type((0, 1, 0)) == edge_type((0, 1, 1)) == "Loop"
    with pytest.raises(ValueError):
        edge_type((1, 1, 0))


def test_isomorphism_bijection():
    a = build_graph(catalog.get("sl2").basis)
    b = build_graph(catalog.get("bianchi_vi").basis)
    iso = graph_isomorphic(a, a)
    assert iso is not None
    assert graph_isomorphic(a, b) is None


def test_components():
    comps = unconnected_components(build_graph(catalog.get("lorentz_n").basis))
    assert sorted(len(c) for c in comps) == [3, 3]
    assert len(unconnected_components(build_graph(catalog.get("abelian3").basis))) == 3


def test_delta_composition():
    h = delta_composition_check(build_graph(catalog.get("heisenberg").basis))
    assert h["choice_independent_sufficient"]
    s = delta_composition_check(build_graph(catalog.get("su2").basis))
    assert not s["choice_independent_sufficient"]
