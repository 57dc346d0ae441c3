"""Center, ideals, river taxonomy, semisimplicity diagnostics and symmetry on graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .admissibility import check_admissible
from .algebra import (
    LieAlgebra,
    center_oracle,
    is_ideal,
    is_semisimple_cartan,
    lower_central_series_oracle,
    radical_oracle,
    subalgebra,
)
from .exact import Subspace, kernel, lin_comb, proportional, scalar
from .graph import Edge, LieGraph, unconnected_components
from .series import self_contained_strong_sets, strongly_connected_components

__all__ = [
    "central_vertices",
    "extend_basis_with_center",
    "center_via_kernels",
    "is_abelian_graph",
    "satisfies_igp",
    "IdealSet",
    "IdealReport",
    "enumerate_ideals",
    "reachability_closure",
    "LTDClass",
    "ltd_classification",
    "sinkholes",
    "loose_ends",
    "simplicity_necessary",
    "SemisimplicityReport",
    "semisimplicity_report",
    "killing_support",
    "semisimple_killing_necessary",
    "zn_symmetry",
    "LeviReport",
    "levi_report",
]


def _span(b, vertices: Iterable[int]) -> Subspace:
    g = b.algebra
    return Subspace(g.dim, [b.elements[v] for v in vertices], g.field_d)


def sinkholes(g: LieGraph) -> frozenset:
    starts = {e.start for e in g.edges}
    return frozenset(v for v in g.vertices if v not in starts)


def loose_ends(g: LieGraph) -> frozenset:
    starts = {e.start for e in g.edges}
    ends = {e.end for e in g.edges}
    return frozenset(v for v in g.vertices if v in starts and v not in ends)


def central_vertices(g: LieGraph, b) -> tuple:
    """Vertices that start no edge, and their span (contained in the center)."""
    w = sinkholes(g)
    return w, _span(b, w)


def extend_basis_with_center(alg: LieAlgebra, b):
    """Adjoin center basis vectors not proportional to existing elements."""
    elems = list(b.elements)
    names = list(b.names)
    for z in center_oracle(alg).rows:
        if any(proportional(z, x) is not None for x in elems):
            continue
        elems.append(z)
        names.append(alg.format_vec(z))
    if len(elems) == b.m:
        return b
    res = check_admissible(alg, elems, names)
    # brackets with central elements vanish, so this cannot fail
    assert res.ok, "adding central elements broke admissibility"
    return res


def center_via_kernels(b) -> Subspace:
    """Intersection over l of ker(alpha^(l)), mapped to reference coordinates.

    alpha^(l) keeps alpha[j][k] where delta(j, k) == l and is zero elsewhere.
    """
    if not b.minimal:
        raise ValueError("the kernel characterization needs a minimal basis")
    g = b.algebra
    m = b.m
    zero = scalar(0, g.field_d)
    rows = []
    for ell in range(m):
        for j in range(m):
            row = tuple(b.alpha[j][k] if b.delta[j][k] == ell else zero for k in range(m))
            if any(row):
                rows.append(row)
    coords = kernel(rows, m, g.field_d)
    vecs = [lin_comb(c, b.elements, g.dim, g.field_d) for c in coords]
    return Subspace(g.dim, vecs, g.field_d)


def is_abelian_graph(g: LieGraph) -> bool:
    return not g.edges


def satisfies_igp(g: LieGraph, w: Iterable[int]) -> bool:
    """No edge starts inside ``w`` and ends outside it."""
    w = set(w)
    return not any(e.start in w and e.end not in w for e in g.edges)


def reachability_closure(g: LieGraph, seed: int) -> frozenset:
    succ = g.successors()
    seen = {seed}
    stack = [seed]
    while stack:
        v = stack.pop()
        for w in succ.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


@dataclass(frozen=True)
class IdealSet:
    vertices: frozenset
    closure: bool
    span: Subspace


@dataclass
class IdealReport:
    ideals: list
    closures: dict  # seed -> closure
    truncated: bool = False


def enumerate_ideals(g: LieGraph, b, guard: int = 20) -> IdealReport:
    """Ideals spanned by reachability closures and their unions, each re-checked.

    With more than ``guard`` distinct closures only pairwise unions are formed
    and the report is flagged as truncated.
    """
    alg = b.algebra
    closures = {v: reachability_closure(g, v) for v in g.sorted_vertices()}
    distinct = sorted(set(closures.values()), key=lambda s: (len(s), sorted(s)))
    truncated = len(distinct) > guard
    sets = {frozenset(), frozenset(g.vertices)} | set(distinct)
    if truncated:
        for a, c in combinations(distinct, 2):
            sets.add(a | c)
    else:
        frontier = set(distinct)
        while frontier:
            new = set()
            for a in frontier:
                for c in distinct:
                    u = a | c
                    if u not in sets:
                        new.add(u)
            sets |= new
            frontier = new
    found = []
    seen_spans = set()
    closure_sets = set(distinct)
    for s in sorted(sets, key=lambda s: (len(s), sorted(s))):
        span = _span(b, s)
        if not is_ideal(alg, span):
            raise AssertionError(f"vertex set {sorted(s)} has the ideal-graph-property but no ideal span")
        if span in seen_spans:
            continue
        seen_spans.add(span)
        found.append(IdealSet(s, s in closure_sets, span))
    return IdealReport(found, closures, truncated)


@dataclass
class LTDClass:
    vertex_tag: dict
    edge_tag: dict
    sinkholes: frozenset
    loose_ends: frozenset

    def lakes(self) -> frozenset:
        return frozenset(v for v, t in self.vertex_tag.items() if t == "L")


def ltd_classification(g: LieGraph) -> LTDClass:
    """L: on a closed walk; T: not L but reaches an L vertex; D: everything else."""
    comps = strongly_connected_components(g.vertices, g.edges)
    comp_of = {v: c for c in comps for v in c}
    lake = set()
    for e in g.edges:
        if comp_of[e.start] == comp_of[e.end]:
            lake.update(comp_of[e.start])
    # reverse reachability from lakes
    pred: dict = {}
    for e in g.edges:
        pred.setdefault(e.end, set()).add(e.start)
    feeds = set()
    stack = list(lake)
    while stack:
        v = stack.pop()
        for u in pred.get(v, ()):
            if u not in lake and u not in feeds:
                feeds.add(u)
                stack.append(u)
    vtag = {v: ("L" if v in lake else "T" if v in feeds else "D") for v in g.sorted_vertices()}
    etag = {}
    for e in g.edges:
        if e.start in lake and comp_of[e.start] == comp_of[e.end]:
            etag[e] = "L"
        elif vtag[e.end] in ("L", "T"):
            etag[e] = "T"
        else:
            etag[e] = "D"
    return LTDClass(vtag, etag, sinkholes(g), loose_ends(g))


def simplicity_necessary(g: LieGraph) -> bool:
    """Some closed walk visits every vertex (start -> end graph strongly connected)."""
    if not g.edges:
        return False
    comps = strongly_connected_components(g.vertices, g.edges)
    return len(comps) == 1


@dataclass
class SemisimplicityReport:
    sinkhole_free: bool
    loose_end_free: bool
    every_vertex_on_self_contained_cycle: bool  # conjecture-based, advisory only
    killing_support_necessary: bool
    cartan_semisimple: bool
    components: list
    simple_candidates: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.cartan_semisimple

    def lines(self, names) -> list:
        def yn(x):
            return "yes" if x else "no"

        out = [
            f"graph: sinkhole-free {yn(self.sinkhole_free)}",
            f"graph: loose-end-free {yn(self.loose_end_free)}",
            f"graph: every vertex on a self-contained closed walk {yn(self.every_vertex_on_self_contained_cycle)} (conjecture, advisory)",
            f"graph: Killing support rows nonempty {yn(self.killing_support_necessary)}",
            f"Cartan: {'semisimple' if self.cartan_semisimple else 'not semisimple'}",
        ]
        if self.cartan_semisimple:
            comps = "; ".join("{" + ",".join(names[v] for v in c) + "}" for c in self.components)
            out.append(f"unconnected components: {len(self.components)} ({comps})")
        return out


def semisimplicity_report(alg: LieAlgebra, b, g: LieGraph) -> SemisimplicityReport:
    covered = set()
    for s in self_contained_strong_sets(g):
        covered |= s
    cartan = is_semisimple_cartan(alg)
    comps = unconnected_components(g)
    return SemisimplicityReport(
        sinkhole_free=not sinkholes(g),
        loose_end_free=not loose_ends(g),
        every_vertex_on_self_contained_cycle=covered == set(g.vertices),
        killing_support_necessary=semisimple_killing_necessary(g),
        cartan_semisimple=cartan,
        components=comps,
        simple_candidates=comps if cartan else [],
    )


def killing_support(g: LieGraph) -> tuple:
    """support[j][k]: edges (l,k,l') and (l',j,l) exist for some l, l'."""
    n = g.n
    delta = {(e.start, e.label): e.end for e in g.edges}
    out = [[False] * n for _ in range(n)]
    for (ell, k), ell2 in delta.items():
        for j in range(n):
            if delta.get((ell2, j)) == ell:
                out[j][k] = True
    return tuple(tuple(r) for r in out)


def semisimple_killing_necessary(g: LieGraph) -> bool:
    sup = killing_support(g)
    return all(any(sup[v]) for v in g.vertices)


def _automorphic_cycle(g: LieGraph, order: list) -> bool:
    pi = {order[i]: order[(i + 1) % len(order)] for i in range(len(order))}
    es = set(g.edges)
    return all(Edge(pi[e.start], pi[e.label], pi[e.end]) in es for e in g.edges)


def zn_symmetry(g: LieGraph):
    """(True, cycle) when some automorphism permutes all vertices in a single n-cycle.

    The cycle is returned as the vertex order v0 -> v1 -> ... -> v0.
    """
    verts = g.sorted_vertices()
    n = len(verts)
    if n <= 1:
        return True, verts
    es = set(g.edges)
    sig = {
        v: (sum(e.start == v for e in g.edges), sum(e.label == v for e in g.edges), sum(e.end == v for e in g.edges))
        for v in verts
    }
    if len(set(sig.values())) != 1:
        return False, None
    order = [verts[0]]
    used = {verts[0]}

    def partial_ok() -> bool:
        pi = {order[i]: order[i + 1] for i in range(len(order) - 1)}
        for e in g.edges:
            if e.start in pi and e.label in pi and e.end in pi:
                if Edge(pi[e.start], pi[e.label], pi[e.end]) not in es:
                    return False
        return True

    def extend() -> bool:
        if len(order) == n:
            return _automorphic_cycle(g, order)
        for w in verts:
            if w in used:
                continue
            order.append(w)
            used.add(w)
            if partial_ok() and extend():
                return True
            order.pop()
            used.discard(w)
        return False

    if extend():
        return True, list(order)
    return False, None


@dataclass
class LeviReport:
    radical: Subspace
    radical_vertices: frozenset | None
    semisimple_dim: int
    cross_edges: list
    radical_nilpotent: bool
    radical_nilpotency_step: int | None
    radical_solvable: bool = True

    def radical_summary(self) -> str:
        if self.radical.dim == 0:
            return "radical {0}"
        if self.radical_nilpotent:
            if self.radical_nilpotency_step == 1:
                return f"radical dim {self.radical.dim} abelian"
            return f"radical dim {self.radical.dim} nilpotent({self.radical_nilpotency_step}-step)"
        return f"radical dim {self.radical.dim} solvable, not nilpotent"


def levi_report(alg: LieAlgebra, b, g: LieGraph) -> LeviReport:
    rad = radical_oracle(alg)
    w = frozenset(v for v in g.vertices if rad.contains(b.elements[v]))
    rad_vertices = w if (_span(b, w) == rad and satisfies_igp(g, w)) else None
    cross = []
    if rad_vertices is not None:
        cross = [e for e in g.edges if e.start not in rad_vertices and e.end in rad_vertices]
    if rad.dim:
        sub = subalgebra(alg, rad)
        lcs = lower_central_series_oracle(sub)
        nil = lcs.terminated
        step = len(lcs.stages) - 1 if nil else None
    else:
        nil, step = True, 0
    return LeviReport(rad, rad_vertices, alg.dim - rad.dim, cross, nil, step)
