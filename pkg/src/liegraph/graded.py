"""Magma gradations: subspace-labeled graphs and their graded series.

Parts are 0-based; ``delta[j][k] is None`` records a vanishing bracket
[g_j, g_k] = 0.  A user-supplied total table is projected onto that
convention during verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations_with_replacement
from typing import Sequence

from .algebra import (
    LieAlgebra,
    derived_series_oracle,
    lower_central_series_oracle,
    subspace_bracket,
)
from .exact import Subspace
from .graph import Edge, LieGraph
from .series import GraphSeries, derived_graph_series, lcs_graph_series

__all__ = [
    "GradationError",
    "MagmaGradation",
    "GradationFailure",
    "GradedSeries",
    "Finest",
    "verify_gradation",
    "build_graded_graph",
    "graded_derived_series",
    "graded_lcs",
    "granularity",
    "is_finest_known",
    "singleton_gradation",
]


class GradationError(ValueError):
    pass


@dataclass(frozen=True)
class MagmaGradation:
    algebra: LieAlgebra
    parts: tuple
    delta: tuple
    names: tuple = ()
    ok = True

    @property
    def m(self) -> int:
        return len(self.parts)

    def span_of(self, idx) -> Subspace:
        out = Subspace.zero(self.algebra.dim, self.algebra.field_d)
        for i in idx:
            out = out + self.parts[i]
        return out


@dataclass(frozen=True)
class GradationFailure:
    pair: tuple
    vector: tuple
    ok = False


def verify_gradation(g: LieAlgebra, parts: Sequence, delta_table, names: Sequence[str] | None = None):
    """Check a direct-sum decomposition and [g_j, g_k] inside g_delta(j,k).

    ``parts`` are Subspaces or lists of coordinate vectors; ``delta_table`` is
    an m x m table (or a callable) of 0-based targets, ``None`` meaning zero.
    Returns a :class:`MagmaGradation` or a :class:`GradationFailure`.
    """
    if not parts:
        raise GradationError("no parts given")
    subs = []
    for p in parts:
        s = p if isinstance(p, Subspace) else Subspace(g.dim, p, g.field_d)
        if s.dim == 0:
            raise GradationError("empty part")
        subs.append(s)
    total = sum(s.dim for s in subs)
    whole = Subspace.zero(g.dim, g.field_d)
    for s in subs:
        whole = whole + s
    if total != g.dim or whole.dim != g.dim:
        raise GradationError(f"parts do not form a direct sum of the algebra (dims {[s.dim for s in subs]})")
    m = len(subs)

    def lookup(j, k):
        if callable(delta_table):
            return delta_table(j, k)
        v = delta_table[j][k]
        return None if v is None else int(v)

    delta = [[None] * m for _ in range(m)]
    for j, k in combinations_with_replacement(range(m), 2):
        br = subspace_bracket(g, subs[j], subs[k])
        if br.dim == 0:
            continue
        t = lookup(j, k)
        if t is None or not 0 <= t < m or not br.issubspace(subs[t]):
            target = subs[t] if t is not None and 0 <= t < m else Subspace.zero(g.dim, g.field_d)
            bad = next(r for r in br.rows if not target.contains(r))
            return GradationFailure((j, k), bad)
        delta[j][k] = delta[k][j] = t
    if names is None:
        names = tuple(f"g{i + 1}" for i in range(m))
    return MagmaGradation(g, tuple(subs), tuple(tuple(r) for r in delta), tuple(names))


def singleton_gradation(b) -> MagmaGradation:
    """Gradation by the one-dimensional spans of a minimal admissible basis."""
    if not b.minimal:
        raise GradationError("need a minimal basis")
    g = b.algebra
    parts = [Subspace(g.dim, [e], g.field_d) for e in b.elements]
    res = verify_gradation(g, parts, b.delta, b.names)
    assert res.ok
    return res


def build_graded_graph(mg: MagmaGradation) -> LieGraph:
    """Edges (j,k,delta) and (k,j,delta) for j <= k with a nonzero bracket; j == k gives one self-edge."""
    edges = []
    for j, k in combinations_with_replacement(range(mg.m), 2):
        t = mg.delta[j][k]
        if t is None:
            continue
        edges.append(Edge(j, k, t))
        edges.append(Edge(k, j, t))
    return LieGraph(mg.m, edges, (), mg.names)


@dataclass
class GradedSeries:
    series: GraphSeries
    spans: list
    oracle: list
    mismatches: list = field(default_factory=list)

    @property
    def dims(self) -> list:
        return [s.dim for s in self.spans]

    def messages(self) -> list:
        return [f"gradation too coarse at stage {k}" for k in self.mismatches]


def _compare(mg: MagmaGradation, series: GraphSeries, oracle) -> GradedSeries:
    spans = [mg.span_of(s.vertices) for s in series.stages]
    length = max(len(spans), len(oracle.stages))
    mism = []
    for k in range(length):
        a = spans[min(k, len(spans) - 1)]
        b = oracle.stage(k)
        if a != b:
            mism.append(k)
    return GradedSeries(series, spans, list(oracle.stages), mism)


def graded_derived_series(mg: MagmaGradation) -> GradedSeries:
    g = build_graded_graph(mg)
    return _compare(mg, derived_graph_series(g), derived_series_oracle(mg.algebra))


def graded_lcs(mg: MagmaGradation) -> GradedSeries:
    g = build_graded_graph(mg)
    return _compare(mg, lcs_graph_series(g), lower_central_series_oracle(mg.algebra))


def granularity(mg: MagmaGradation) -> int:
    return mg.m


class Finest(Enum):
    yes_minimal = "yes_minimal"
    unknown = "unknown"


def is_finest_known(mg: MagmaGradation, g: LieAlgebra | None = None) -> Finest:
    g = g or mg.algebra
    return Finest.yes_minimal if mg.m == g.dim else Finest.unknown
