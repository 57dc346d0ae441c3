"""Deterministic ad-walks and the similarity series they realize.

Convention: exp(-x_j) x_k exp(x_j) = sum_n (1/n!) (-ad_{x_j})^n (x_k).
Since (-ad_{x_j}) x_s = [x_s, x_j], one step from s along label j lands on
delta(s, j) with weight omega = alpha[s][j].  The sign is folded into omega.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import bracket
from .exact import Scalar, scalar, vec_add, vec_is_zero, vec_scale
from .graph import LieGraph

__all__ = [
    "Terminating",
    "EventuallyPeriodic",
    "WeightedWalk",
    "SimilaritySeries",
    "edge_weight",
    "ad_walk",
    "similarity_series",
    "numeric_eval",
    "similarity_oracle",
    "series_vector",
]


@dataclass(frozen=True)
class Terminating:
    length: int


@dataclass(frozen=True)
class EventuallyPeriodic:
    preperiod: int
    period: int


@dataclass(frozen=True)
class WeightedWalk:
    label: int
    start: int
    visited: tuple  # (vertex, cumulative weight product) per step
    edges: tuple
    classification: object

    def vertex_at(self, n: int) -> int:
        """Vertex reached after n steps (periodic walks are unrolled)."""
        c = self.classification
        if isinstance(c, Terminating):
            if n > c.length:
                raise IndexError("walk already terminated")
            return self.visited[n][0]
        if n < c.preperiod + c.period:
            return self.visited[n][0]
        return self.visited[c.preperiod + (n - c.preperiod) % c.period][0]


def edge_weight(b, e) -> Scalar:
    """Exact alpha[start][label] of an edge of the graph of ``b``."""
    s, l, t = e
    if not (0 <= s < b.m and 0 <= l < b.m) or b.delta[s][l] != t:
        raise ValueError(f"edge {tuple(e)} is not in the graph")
    return b.alpha[s][l]


def _step_edges(g: LieGraph, j: int) -> dict:
    return {e.start: e for e in g.edges if e.label == j}


def ad_walk(b, g: LieGraph, j: int, k: int) -> WeightedWalk:
    """Follow the unique j-labeled edge from k until none is left or a vertex repeats."""
    step = _step_edges(g, j)
    one = scalar(1, b.algebra.field_d)
    visited = [(k, one)]
    edges = []
    seen = {k: 0}
    cur, w = k, one
    while cur in step:
        e = step[cur]
        w = w * edge_weight(b, e)
        cur = e.end
        edges.append(e)
        if cur in seen:
            pre = seen[cur]
            period = len(edges) - pre
            # determinism: the cycle repeats verbatim
            for rep in range(2 * period):
                assert step[edges[pre + rep % period].start] == edges[pre + rep % period]
            return WeightedWalk(j, k, tuple(visited), tuple(edges), EventuallyPeriodic(pre, period))
        seen[cur] = len(visited)
        visited.append((cur, w))
    return WeightedWalk(j, k, tuple(visited), tuple(edges), Terminating(len(edges)))


@dataclass(frozen=True)
class SimilaritySeries:
    walk: WeightedWalk
    order: int
    terms: tuple  # (n, vertex, coefficient)

    def grouped(self) -> dict:
        """vertex -> list of (n, coefficient), in order of first appearance."""
        out: dict = {}
        for n, v, c in self.terms:
            out.setdefault(v, []).append((n, c))
        return out

    def totals(self) -> list:
        """(vertex, exact partial sum) in order of first appearance."""
        out = []
        for v, ts in self.grouped().items():
            acc = ts[0][1]
            for _, c in ts[1:]:
                acc = acc + c
            out.append((v, acc))
        return out


def similarity_series(b, g: LieGraph, j: int, k: int, order: int) -> SimilaritySeries:
    """Terms (n, vertex, prod omega / n!) for n = 0..order along the ad-walk."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    walk = ad_walk(b, g, j, k)
    d = b.algebra.field_d
    terms = [(0, k, scalar(1, d))]
    w = scalar(1, d)
    cur = k
    step = {e.start: e for e in walk.edges}
    for n in range(1, order + 1):
        e = step.get(cur)
        if e is None:
            break
        w = w * edge_weight(b, e)
        cur = e.end
        terms.append((n, cur, w * Fraction(1, math.factorial(n))))
    return SimilaritySeries(walk, order, tuple(terms))


def numeric_eval(series: SimilaritySeries) -> list:
    """(vertex, float partial sum); ``math.fsum`` keeps the rounding at one ulp level."""
    return [(v, math.fsum(float(c) for _, c in ts)) for v, ts in series.grouped().items()]


def series_vector(b, series: SimilaritySeries):
    """The partial sum as a coordinate vector in the algebra."""
    g = b.algebra
    out = g.zero()
    for _, v, c in series.terms:
        out = vec_add(out, vec_scale(c, b.elements[v]))
    return out


def similarity_oracle(b, j: int, k: int, order: int):
    """sum_{n <= order} (1/n!) (-ad x_j)^n x_k by repeated brackets."""
    g = b.algebra
    xj = b.elements[j]
    term = b.elements[k]
    out = term
    for n in range(1, order + 1):
        term = vec_scale(Fraction(1, n), bracket(g, term, xj))
        if vec_is_zero(term):
            break
        out = vec_add(out, term)
    return out
