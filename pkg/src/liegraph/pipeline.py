"""End-to-end analysis shared by the CLI, the selftest and the catalog checks."""

from __future__ import annotations

from .algebra import (
    center_oracle,
    derived_series_oracle,
    is_semisimple_cartan,
    lower_central_series_oracle,
    radical_oracle,
    verify_lie,
)
from .graded import build_graded_graph, graded_derived_series, graded_lcs
from .graph import build_graph, scan_all_triples, unconnected_components
from .series import (
    derived_graph_series,
    is_nilpotent_graph,
    is_solvable_graph,
    lcs_graph_series,
    nilpotency_index,
    stage_spans,
)
from .structure import center_via_kernels

__all__ = ["observe", "oracle_equivalence"]


def observe(entry) -> dict:
    """Recompute every ``expected`` key of a catalog entry."""
    g = entry.algebra
    der = derived_series_oracle(g)
    lcs = lower_central_series_oracle(g)
    out = {
        "dim": g.dim,
        "solvable": der.terminated,
        "nilpotent": lcs.terminated,
        "index": len(lcs.stages) - 1 if lcs.terminated else None,
        "center": center_oracle(g).dim,
        "radical": radical_oracle(g).dim,
        "semisimple": is_semisimple_cartan(g),
        "derived": der.dims,
        "lcs": lcs.dims,
    }
    b = entry.basis
    if b is not None:
        G = build_graph(b)
        out["m"] = b.m
        out["edges"] = len(G.edges)
        out["components"] = len(unconnected_components(G))
        if b.m == 3:
            t = scan_all_triples(G)[(0, 1, 2)]
            out["triple"] = t.value if t is not None else None
    if entry.gradation is not None:
        out["granularity"] = entry.gradation.m
    return out


def oracle_equivalence(alg, basis=None, gradation=None) -> list:
    """Mismatches between graph-side and oracle-side answers (empty list when consistent)."""
    bad = []
    if not verify_lie(alg).ok:
        return ["not a Lie algebra"]
    der = derived_series_oracle(alg)
    lcs = lower_central_series_oracle(alg)
    if basis is not None:
        G = build_graph(basis)
        ds = derived_graph_series(G)
        ls = lcs_graph_series(G)
        for label, gs, orc in (("derived", ds, der), ("lcs", ls, lcs)):
            spans = stage_spans(gs, basis)
            for k in range(max(len(spans), len(orc.stages)) + 1):
                if spans[min(k, len(spans) - 1)] != orc.stage(k):
                    bad.append(f"{label} stage {k}")
            if basis.minimal and len(spans) != len(orc.stages):
                bad.append(f"{label} length")
        if basis.minimal and center_via_kernels(basis) != center_oracle(alg):
            bad.append("center")
        if bool(is_solvable_graph(G)) != der.terminated:
            bad.append("solvable verdict")
        if bool(is_nilpotent_graph(G)) != lcs.terminated:
            bad.append("nilpotent verdict")
        idx = nilpotency_index(G)
        if lcs.terminated and idx != len(lcs.stages) - 1 and basis.minimal:
            bad.append("nilpotency index")
    if gradation is not None:
        build_graded_graph(gradation)
        if graded_derived_series(gradation).mismatches:
            bad.append("graded derived")
        if graded_lcs(gradation).mismatches:
            bad.append("graded lcs")
    return bad
