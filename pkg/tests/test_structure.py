from liegraph import catalog
from liegraph.algebra import center_oracle, radical_oracle
from liegraph.graph import build_graph
from liegraph.structure import (
    center_via_kernels,
    central_vertices,
    enumerate_ideals,
    extend_basis_with_center,
    is_abelian_graph,
    levi_report,
    loose_ends,
    ltd_classification,
    reachability_closure,
    satisfies_igp,
    semisimplicity_report,
    simplicity_necessary,
    sinkholes,
    zn_symmetry,
)


def graph(name):
    e = catalog.get(name)
    return e, build_graph(e.basis)


def test_sinkholes_and_loose_ends():
    _, G = graph("heisenberg")
    assert {G.names[v] for v in sinkholes(G)} == {"e1"}
    assert {G.names[v] for v in loose_ends(G)} == {"e2", "e3"}
    _, G = graph("su2")
    assert not sinkholes(G) and not loose_ends(G)


def test_center_via_kernels_matches_oracle():
    for name in ("heisenberg", "heisenberg2", "nilpotent7", "schrodinger_m1", "l41", "tight3"):
        e = catalog.get(name)
        assert center_via_kernels(e.basis) == center_oracle(e.algebra), name


def test_central_vertices():
    e, G = graph("schrodinger_m1")
    sinks, _ = central_vertices(G, e.basis)
    assert {G.names[v] for v in sinks} == {"z"}


def test_extend_basis_with_center_keeps_admissibility():
    e = catalog.get("heisenberg")
    b = extend_basis_with_center(e.algebra, e.basis)
    assert b.ok


def test_igp_and_closures():
    e, G = graph("schrodinger_m1")
    ix = {n: i for i, n in enumerate(e.basis.names)}
    qpz = reachability_closure(G, ix["q"])
    assert satisfies_igp(G, qpz)
    assert not satisfies_igp(G, {ix["h"]})


def test_ideals_heisenberg():
    e, G = graph("heisenberg")
    rep = enumerate_ideals(G, e.basis)
    dims = sorted(i.span.dim for i in rep.ideals)
    assert dims == [0, 1, 2, 2, 3]
    assert not rep.truncated


def test_ideals_guard_truncates():
    e, G = graph("abelian3")
    rep = enumerate_ideals(G, e.basis, guard=2)
    assert rep.truncated


def test_ltd():
    _, G = graph("schrodinger_m1")
    ltd = ltd_classification(G)
    assert ltd.vertex_tag[G.names.index("z")] == "D"
    assert G.names.index("h") in ltd.lakes()


def test_simplicity_and_semisimplicity():
    e, G = graph("su2")
    assert simplicity_necessary(G)
    rep = semisimplicity_report(e.algebra, e.basis, G)
    assert rep.verdict and rep.sinkhole_free and rep.loose_end_free
    assert any("Cartan: semisimple" in line for line in rep.lines(G.names))
    e, G = graph("lorentz_n")
    rep = semisimplicity_report(e.algebra, e.basis, G)
    assert rep.verdict and len(rep.simple_candidates) == 2


def test_zn():
    ok, cyc = zn_symmetry(graph("su2")[1])
    assert ok and len(cyc) == 3
    assert zn_symmetry(graph("sl2")[1]) == (False, None)


def test_abelian_graph():
    assert is_abelian_graph(graph("abelian3")[1])
    assert not is_abelian_graph(graph("heisenberg")[1])


def test_levi_poincare():
    e, G = graph("poincare")
    lev = levi_report(e.algebra, e.basis, G)
    assert lev.radical == radical_oracle(e.algebra)
    assert lev.radical_vertices is not None and len(lev.radical_vertices) == 4
    assert lev.radical_summary() == "radical dim 4 abelian"
    assert all(x.end in lev.radical_vertices and x.start not in lev.radical_vertices for x in lev.cross_edges)


def test_levi_semisimple():
    e, G = graph("sl2")
    assert levi_report(e.algebra, e.basis, G).radical_summary() == "radical {0}"
