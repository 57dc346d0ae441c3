"""Derived and lower central series read off the graph by pruning.

Derived step: keep the ends of edges whose start and label both survive.
LCS step: keep the ends of edges whose start survives; edges whose start and
end survive but whose label was dropped are kept aside as auxiliary edges.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterable

from .exact import Subspace
from .graph import Edge, LieGraph

__all__ = [
    "GraphSeries",
    "Walk",
    "derived_graph_series",
    "derived_graph_series_redundant",
    "lcs_graph_series",
    "is_solvable_graph",
    "is_nilpotent_graph",
    "nilpotency_index",
    "longest_walk_length",
    "self_contained_strong_sets",
    "strongly_connected_components",
    "find_cycle",
    "iter_walks",
    "stage_spans",
]


@dataclass
class GraphSeries:
    stages: list
    terminated: bool
    stable_from: int

    @property
    def vertex_counts(self) -> list:
        return [len(s.vertices) for s in self.stages]

    def padded_counts(self, length: int) -> list:
        c = self.vertex_counts
        return c + [c[-1]] * max(0, length - len(c))

    def stage(self, k: int) -> LieGraph:
        return self.stages[min(k, len(self.stages) - 1)]


@dataclass
class Walk:
    """v0, e0, v1, e1, ... with e_i = (v_i, label, v_{i+1})."""

    vertices: list
    edges: list = field(default_factory=list)

    def __post_init__(self):
        for i, e in enumerate(self.edges):
            if e.start != self.vertices[i] or e.end != self.vertices[i + 1]:
                raise ValueError(f"edge {e} does not continue the walk at step {i}")

    @property
    def closed(self) -> bool:
        return bool(self.edges) and self.vertices[0] == self.vertices[-1]

    @property
    def self_contained(self) -> bool:
        vs = set(self.vertices)
        return all(e.label in vs for e in self.edges)

    @property
    def is_path(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    @property
    def is_trail(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


def _run(g: LieGraph, step) -> GraphSeries:
    cur = g.restrict(g.vertices)
    stages = [cur]
    while cur.vertices:
        keep, aux = step(cur.vertices)
        if keep == cur.vertices:
            return GraphSeries(stages, False, len(stages) - 1)
        cur = g.restrict(keep, aux)
        stages.append(cur)
    return GraphSeries(stages, True, len(stages) - 1)


def derived_graph_series(g: LieGraph) -> GraphSeries:
    def step(alive):
        keep = frozenset(e.end for e in g.edges if e.start in alive and e.label in alive)
        return keep, ()

    return _run(g, step)


def derived_graph_series_redundant(g: LieGraph, b) -> GraphSeries:
    """Derived pruning that also keeps dropped vertices lying in the span of the survivors."""
    n, d = b.algebra.dim, b.algebra.field_d

    def step(alive):
        keep = {e.end for e in g.edges if e.start in alive and e.label in alive}
        if keep:
            span = Subspace(n, [b.elements[v] for v in keep], d)
            keep |= {v for v in alive - keep if span.contains(b.elements[v])}
        return frozenset(keep), ()

    return _run(g, step)


def lcs_graph_series(g: LieGraph) -> GraphSeries:
    def step(alive):
        keep = frozenset(e.end for e in g.edges if e.start in alive)
        aux = [e for e in g.edges if e.start in keep and e.end in keep and e.label not in keep]
        return keep, aux

    return _run(g, step)


def stage_spans(series: GraphSeries, b) -> list:
    n, d = b.algebra.dim, b.algebra.field_d
    return [Subspace(n, [b.elements[v] for v in s.vertices], d) for s in series.stages]


# -- digraph helpers (start -> end, labels ignored) ---------------------------

def strongly_connected_components(vertices: Iterable[int], edges: Iterable[Edge]) -> list:
    """Tarjan's algorithm, iterative; components returned as sorted tuples in sorted order."""
    vertices = sorted(set(vertices))
    adj = {v: [] for v in vertices}
    for e in edges:
        if e.start in adj and e.end in adj:
            adj[e.start].append(e.end)
    for v in adj:
        adj[v] = sorted(set(adj[v]))
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    comps = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            for j in range(i, len(adj[v])):
                w = adj[v][j]
                if w not in index:
                    work.append((v, j + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return sorted(comps)


def find_cycle(g: LieGraph):
    """Vertices of some directed cycle (start -> end), or None when acyclic."""
    succ = {v: sorted(s) for v, s in g.successors().items()}
    color = {v: 0 for v in succ}
    for root in sorted(succ):
        if color[root]:
            continue
        path = [root]
        iters = [iter(succ[root])]
        color[root] = 1
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                color[path.pop()] = 2
                iters.pop()
                continue
            if color[nxt] == 1:
                return path[path.index(nxt):]
            if color[nxt] == 0:
                color[nxt] = 1
                path.append(nxt)
                iters.append(iter(succ[nxt]))
    return None


def _closed_walk_through(vertices: Iterable[int], edges: list) -> Walk:
    """Closed walk visiting every vertex of a strongly connected edge set."""
    verts = sorted(set(vertices))
    out: dict = {}
    for e in sorted(edges):
        out.setdefault(e.start, []).append(e)

    def path(a, b):
        # BFS over edges, returns the edge list of a shortest nonempty walk a -> b
        prev = {}
        frontier = [a]
        seen = set()
        while frontier:
            nxt = []
            for v in frontier:
                for e in out.get(v, []):
                    if e.end in seen:
                        continue
                    seen.add(e.end)
                    prev[e.end] = e
                    if e.end == b:
                        seq = [e]
                        while seq[0].start != a:
                            seq.insert(0, prev[seq[0].start])
                        return seq
                    nxt.append(e.end)
            frontier = nxt
        raise ValueError("edge set is not strongly connected")

    walk_edges = []
    cur = verts[0]
    for t in verts[1:] + [verts[0]]:
        walk_edges.extend(path(cur, t))
        cur = t
    vs = [walk_edges[0].start] + [e.end for e in walk_edges]
    return Walk(vs, walk_edges)


def self_contained_strong_sets(g: LieGraph, vertices: Iterable[int] | None = None) -> list:
    """Maximal vertex sets W whose induced edges (labels in W too) are strongly connected.

    These are exactly the vertex sets of maximal self-contained closed walks.
    """
    todo = [frozenset(g.vertices if vertices is None else vertices)]
    found = []
    while todo:
        w = todo.pop()
        edges = [e for e in g.edges if e.start in w and e.label in w and e.end in w]
        comps = strongly_connected_components(w, edges)
        for c in comps:
            cs = set(c)
            inner = [e for e in edges if e.start in cs and e.end in cs]
            if not inner:
                continue
            if len(c) == len(w):
                found.append(frozenset(c))
            else:
                todo.append(frozenset(c))
    return sorted(found, key=lambda s: sorted(s))


@dataclass
class SolvabilityResult:
    solvable: bool
    series: GraphSeries
    witness: Walk | None = None

    def __bool__(self) -> bool:
        return self.solvable


def is_solvable_graph(g: LieGraph) -> SolvabilityResult:
    """Solvable iff derived pruning empties the graph; otherwise a self-contained closed walk."""
    series = derived_graph_series(g)
    if series.terminated:
        return SolvabilityResult(True, series)
    fix = series.stages[-1]
    # a source component of the fixpoint is closed under labels, since both
    # (s,l,e) and (l,s,e) point into e
    sets = self_contained_strong_sets(g, fix.vertices)
    if not sets:
        raise AssertionError("nonempty derived fixpoint without a self-contained cycle")
    best = sets[0]
    edges = [e for e in g.edges if e.start in best and e.label in best and e.end in best]
    return SolvabilityResult(False, series, _closed_walk_through(best, edges))


@dataclass
class NilpotencyResult:
    nilpotent: bool
    cycle: list | None = None

    def __bool__(self) -> bool:
        return self.nilpotent


def is_nilpotent_graph(g: LieGraph) -> NilpotencyResult:
    cyc = find_cycle(g)
    return NilpotencyResult(cyc is None, cyc)


def longest_walk_length(g: LieGraph) -> int | None:
    """Longest directed walk (edge count) in an acyclic graph; None if a cycle exists."""
    if find_cycle(g) is not None:
        return None
    succ = g.successors()
    memo: dict = {}

    def depth(v):
        if v not in memo:
            memo[v] = max((1 + depth(w) for w in succ.get(v, ())), default=0)
        return memo[v]

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10 * len(g.vertices) + 100))
    try:
        return max((depth(v) for v in g.vertices), default=0)
    finally:
        sys.setrecursionlimit(limit)


def nilpotency_index(g: LieGraph) -> int | None:
    """Longest walk + 1 for nilpotent graphs (1 when there are no edges), else None."""
    ell = longest_walk_length(g)
    if ell is None:
        return None
    return ell + 1


def iter_walks(g: LieGraph, max_len: int):
    """Every directed walk with 1..max_len edges."""
    out: dict = {}
    for e in g.edges:
        out.setdefault(e.start, []).append(e)
    stack = [Walk([v], []) for v in g.sorted_vertices()]
    while stack:
        w = stack.pop()
        if w.edges:
            yield w
        if len(w.edges) >= max_len:
            continue
        for e in out.get(w.vertices[-1], []):
            stack.append(Walk(w.vertices + [e.end], w.edges + [e]))
