"""Labeled directed graphs of admissible bases.

An edge ``(start, label, end)`` records [x_start, x_label] = alpha * x_end.
Vertices are 0-based indices into the basis; labels are always vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "Edge",
    "LieGraph",
    "EdgeRuleReport",
    "BoundsReport",
    "SubgraphType",
    "InvalidPatternError",
    "TEMPLATES",
    "build_graph",
    "validate_edge_rules",
    "validate_bounds",
    "classify_three_vertex",
    "scan_all_triples",
    "delta_composition_check",
    "graph_isomorphic",
    "unconnected_components",
    "edge_type",
    "out_degree",
    "in_degree",
]


class Edge(NamedTuple):
    start: int
    label: int
    end: int


@dataclass(frozen=True)
class LieGraph:
    n: int
    edges: tuple
    aux_edges: tuple = ()
    names: tuple = ()
    vertices: frozenset = None

    def __post_init__(self):
        edges = tuple(sorted({Edge(*e) for e in self.edges}))
        aux = tuple(sorted({Edge(*e) for e in self.aux_edges}))
        verts = frozenset(range(self.n)) if self.vertices is None else frozenset(self.vertices)
        names = tuple(self.names) if self.names else tuple(f"v{i + 1}" for i in range(self.n))
        for e in edges + aux:
            if not all(0 <= x < self.n for x in e):
                raise ValueError(f"edge {e} references a vertex outside 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "aux_edges", aux)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "names", names)

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)

    def restrict(self, keep: Iterable[int], aux: Iterable = ()) -> "LieGraph":
        """Induced subgraph: vertices ``keep`` and edges with all three parts inside."""
        keep = frozenset(keep)
        edges = [e for e in self.edges if e.start in keep and e.label in keep and e.end in keep]
        return LieGraph(self.n, edges, tuple(aux), self.names, keep)

    def edge_name(self, e: Edge) -> str:
        s, l, t = (self.names[i] for i in e)
        return f"({s},{l},{t})"

    def successors(self) -> dict:
        """start -> set of ends, ignoring labels."""
        out = {v: set() for v in self.vertices}
        for e in self.edges:
            out.setdefault(e.start, set()).add(e.end)
        return out

    def target(self, s: int, l: int):
        for e in self.edges:
            if e.start == s and e.label == l:
                return e.end
        return None


def build_graph(b) -> LieGraph:
    """Edges (j,k,delta) and (k,j,delta) for every nonzero bracket of an admissible basis."""
    edges = []
    for j, k, _alpha, t in b.bracket_pairs():
        edges.append(Edge(j, k, t))
        edges.append(Edge(k, j, t))
    return LieGraph(b.m, edges, (), b.names)


def out_degree(g: LieGraph, v: int) -> int:
    return sum(1 for e in g.edges if e.start == v)


def in_degree(g: LieGraph, v: int) -> int:
    return sum(1 for e in g.edges if e.end == v)


@dataclass
class EdgeRuleReport:
    ok: bool
    violations: list = field(default_factory=list)  # (rule, edge or pair)


def validate_edge_rules(g: LieGraph, allow_self_label: bool = False) -> EdgeRuleReport:
    """(a) start != label, (b) mirrored edge present, (c) (start, label) fixes the end."""
    rep = EdgeRuleReport(ok=True)
    es = set(g.edges)
    ends = {}
    for e in g.edges:
        if e.start == e.label and not allow_self_label:
            rep.violations.append(("a", e))
        if Edge(e.label, e.start, e.end) not in es:
            rep.violations.append(("b", e))
        ends.setdefault((e.start, e.label), set()).add(e.end)
    for key, targets in sorted(ends.items()):
        if len(targets) > 1:
            rep.violations.append(("c", key))
    rep.ok = not rep.violations
    return rep


@dataclass
class BoundsReport:
    ok: bool
    n_edges: int
    max_edges: int
    violations: list = field(default_factory=list)


def validate_bounds(g: LieGraph) -> BoundsReport:
    n = len(g.vertices)
    cap = n * (n - 1)
    rep = BoundsReport(ok=True, n_edges=len(g.edges), max_edges=cap)
    if len(g.edges) > cap:
        rep.violations.append(("edges", len(g.edges)))
    if len(g.edges) % 2:
        rep.violations.append(("parity", len(g.edges)))
    for v in g.sorted_vertices():
        if out_degree(g, v) > n - 1:
            rep.violations.append(("out_degree", v))
        if in_degree(g, v) > cap:
            rep.violations.append(("in_degree", v))
    rep.ok = not rep.violations
    return rep


class SubgraphType(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"
    VIII = "VIII"
    IX = "IX"
    X = "X"
    XI = "XI"
    InvalidXII = "XII"
    InvalidXIII = "XIII"
    InvalidXIV = "XIV"
    InvalidXV = "XV"
    InvalidXVI = "XVI"

    @property
    def valid(self) -> bool:
        return not self.name.startswith("Invalid")

    @property
    def proper(self) -> bool:
        return self.valid and self is not SubgraphType.VIII

    @property
    def choice_dependent(self) -> bool:
        return self in (SubgraphType.X, SubgraphType.XI)


_a, _b, _c = 0, 1, 2
T = SubgraphType
TEMPLATES = {
    T.I: frozenset(),
    T.II: frozenset({(_a, _b, _c), (_b, _a, _c)}),
    T.III: frozenset({(_a, _b, _a), (_b, _a, _a)}),
    T.IV: frozenset({(_c, _b, _a), (_b, _c, _a), (_c, _a, _b), (_a, _c, _b)}),
    T.V: frozenset({(_a, _c, _c), (_c, _a, _c), (_b, _c, _c), (_c, _b, _c)}),
    T.VI: frozenset({(_c, _a, _a), (_a, _c, _a), (_c, _b, _b), (_b, _c, _b)}),
    T.VII: frozenset({(_a, _c, _c), (_c, _a, _c), (_a, _b, _c), (_b, _a, _c)}),
    T.VIII: frozenset({(_a, _c, _c), (_c, _a, _c), (_b, _c, _a), (_c, _b, _a)}),
    T.IX: frozenset({(_a, _b, _c), (_b, _a, _c), (_b, _c, _a), (_c, _b, _a), (_c, _a, _b), (_a, _c, _b)}),
    T.X: frozenset({(_c, _a, _a), (_a, _c, _a), (_c, _b, _b), (_b, _c, _b), (_a, _b, _c), (_b, _a, _c)}),
    T.XI: frozenset({(_a, _c, _c), (_c, _a, _c), (_b, _c, _c), (_c, _b, _c), (_a, _b, _c), (_b, _a, _c)}),
    T.InvalidXII: frozenset({(_a, _c, _c), (_c, _a, _c), (_c, _b, _b), (_b, _c, _b)}),
    T.InvalidXIII: frozenset({(_a, _c, _c), (_c, _a, _c), (_c, _b, _b), (_b, _c, _b), (_b, _a, _a), (_a, _b, _a)}),
    T.InvalidXIV: frozenset({(_c, _a, _a), (_a, _c, _a), (_c, _b, _b), (_b, _c, _b), (_a, _b, _b), (_b, _a, _b)}),
    T.InvalidXV: frozenset({(_a, _c, _c), (_c, _a, _c), (_a, _b, _c), (_b, _a, _c), (_b, _c, _a), (_c, _b, _a)}),
    T.InvalidXVI: frozenset({(_a, _c, _c), (_c, _a, _c), (_a, _b, _c), (_b, _a, _c), (_c, _b, _b), (_b, _c, _b)}),
}
del T


class InvalidPatternError(ValueError):
    """Three-vertex edge set that matches no template (edge rules already broken)."""


def _induced(g: LieGraph, triple: Sequence[int]) -> frozenset:
    s = set(triple)
    return frozenset(e for e in g.edges if e.start in s and e.label in s and e.end in s)


def classify_three_vertex(g: LieGraph, triple: Sequence[int]) -> SubgraphType:
    triple = tuple(triple)
    if len(set(triple)) != 3:
        raise ValueError("need three distinct vertices")
    edges = _induced(g, triple)
    for kind, template in TEMPLATES.items():
        if len(template) != len(edges):
            continue
        for perm in permutations(triple):
            if frozenset((perm[s], perm[l], perm[t]) for s, l, t in template) == edges:
                return kind
    names = ", ".join(g.names[v] for v in triple)
    raise InvalidPatternError(f"edges on {{{names}}} match no three-vertex pattern")


def scan_all_triples(g: LieGraph) -> dict:
    """Type of every three-vertex subset; unmatched subsets map to ``None``."""
    out = {}
    for triple in combinations(g.sorted_vertices(), 3):
        try:
            out[triple] = classify_three_vertex(g, triple)
        except InvalidPatternError:
            out[triple] = None
    return out


def delta_composition_check(g: LieGraph) -> dict:
    """Two delta(j, delta(k, l)) tests.

    ``choice_independent_sufficient``: no composition is nonzero.
    ``proper_minimal_necessary``: over pairwise distinct j, k, l at most one
    nonzero value occurs.
    """
    delta = {(e.start, e.label): e.end for e in g.edges}
    verts = g.sorted_vertices()
    any_nonzero = False
    values = set()
    for k in verts:
        for l in verts:
            m = delta.get((k, l))
            if m is None:
                continue
            for j in verts:
                t = delta.get((j, m))
                if t is None:
                    continue
                any_nonzero = True
                if j != k and k != l and l != j:
                    values.add(t)
    return {
        "choice_independent_sufficient": not any_nonzero,
        "proper_minimal_necessary": len(values) <= 1,
    }


def _signature(g: LieGraph) -> dict:
    sig = {}
    for v in g.vertices:
        sig[v] = (
            sum(1 for e in g.edges if e.start == v),
            sum(1 for e in g.edges if e.label == v),
            sum(1 for e in g.edges if e.end == v),
            sum(1 for e in g.edges if e.start == v and e.end == v),
        )
    return sig


def graph_isomorphic(g1: LieGraph, g2: LieGraph, max_n: int = 10):
    """Vertex bijection ``{v1: v2}`` carrying the edge set of g1 onto g2, or None.

    Backtracking over degree-compatible assignments; intended for n <= ``max_n``.
    Auxiliary edges are ignored.
    """
    v1, v2 = g1.sorted_vertices(), g2.sorted_vertices()
    if len(v1) != len(v2) or len(g1.edges) != len(g2.edges):
        return None
    if len(v1) > max_n:
        raise ValueError(f"isomorphism search limited to {max_n} vertices")
    s1, s2 = _signature(g1), _signature(g2)
    if Counter(s1.values()) != Counter(s2.values()):
        return None
    e2 = set(g2.edges)
    by_vertex = {v: [e for e in g1.edges if v in e] for v in v1}
    # most constrained vertices first
    order = sorted(v1, key=lambda v: (-len(by_vertex[v]), v))
    mapping: dict = {}
    used: set = set()

    def consistent(v) -> bool:
        for e in by_vertex[v]:
            if all(x in mapping for x in e):
                if Edge(mapping[e.start], mapping[e.label], mapping[e.end]) not in e2:
                    return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in v2:
            if w in used or s1[v] != s2[w]:
                continue
            mapping[v] = w
            used.add(w)
            if consistent(v) and extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if extend(0):
        return dict(sorted(mapping.items()))
    return None


def unconnected_components(g: LieGraph) -> list:
    """Connected components of the undirected start-end adjacency, labels ignored."""
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        a, b = find(e.start), find(e.end)
        if a != b:
            parent[max(a, b)] = min(a, b)
    comps: dict = {}
    for v in g.sorted_vertices():
        comps.setdefault(find(v), []).append(v)
    return sorted((tuple(c) for c in comps.values()), key=lambda c: c[0])


def edge_type(e: Sequence[int]) -> str:
    s, l, t = e
    if s == l:
        raise ValueError("start equals label")
    if t in (s, l):
        return "Loop"
    return "Wedge"
