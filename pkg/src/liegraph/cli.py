"""Command-line interface.

Exit codes: 0 success, 1 validation failure (Jacobi, admissibility, data),
2 schema or usage error.  Sources are JSON files, ``catalog:NAME`` or
``fixture:NAME``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import catalog
from .admissibility import eigen_basis_search
from .algebra import (
    is_reductive_oracle,
    verify_lie,
)
from .catalog import CatalogEntry, UnknownEntryError
from .graded import build_graded_graph, graded_derived_series, graded_lcs, is_finest_known
from .graph import (
    build_graph,
    scan_all_triples,
    unconnected_components,
    validate_bounds,
    validate_edge_rules,
)
from .io import DataError, SchemaError, dumps, emit_dot, emit_levi_dot, emit_series_dot, load
from .pipeline import observe, oracle_equivalence
from .series import (
    derived_graph_series,
    is_nilpotent_graph,
    is_solvable_graph,
    lcs_graph_series,
    nilpotency_index,
    stage_spans,
)
from .structure import (
    center_via_kernels,
    central_vertices,
    enumerate_ideals,
    levi_report,
    ltd_classification,
    semisimplicity_report,
    zn_symmetry,
)
from .walks import Terminating, numeric_eval, similarity_series

ARROW = " → "


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _resolve(src: str) -> CatalogEntry:
    try:
        if src.startswith("catalog:"):
            return catalog.get(src.split(":", 1)[1])
        if src.startswith("fixture:"):
            name = src.split(":", 1)[1]
            return CatalogEntry(name, catalog.fixture(name))
    except UnknownEntryError as exc:
        raise CliError(str(exc).strip('"'), 2) from None
    if not Path(src).exists():
        raise CliError(f"no such file: {src}", 2)
    try:
        return load(src)
    except SchemaError as exc:
        raise CliError(str(exc), 2) from None
    except DataError as exc:
        raise CliError(str(exc), 1) from None


def _require_lie(entry: CatalogEntry) -> None:
    rep = verify_lie(entry.algebra)
    if not rep.ok:
        raise CliError("not a Lie algebra:\n  " + "\n  ".join(rep.describe(entry.algebra)), 1)


def _basis(entry: CatalogEntry):
    if entry.basis is not None:
        return entry.basis
    return eigen_basis_search(entry.algebra)


def _graph_for(entry: CatalogEntry):
    """(graph, basis or None, gradation or None) for the series commands."""
    b = _basis(entry)
    if b is not None:
        return build_graph(b), b, None
    if entry.gradation is not None:
        return build_graded_graph(entry.gradation), None, entry.gradation
    raise CliError("no admissible basis found within the search budget and no gradation given "
                   "(an empty search is not a proof of non-admissibility)", 1)


def _write(path, text: str) -> None:
    if path:
        Path(path).write_text(text)


def _names(g, vs) -> str:
    return "{" + ",".join(g.names[v] for v in sorted(vs)) + "}"


# -- commands ---------------------------------------------------------------------

def cmd_validate(args) -> int:
    entry = _resolve(args.source)
    g = entry.algebra
    rep = verify_lie(g)
    if not rep.ok:
        print("invalid: " + "; ".join(rep.describe(g)))
        return 1
    print(f"valid Lie algebra, dim {g.dim}" + (f" over Q(sqrt {g.field_d})" if g.field_d else ""))
    if entry.basis is not None:
        kind = "minimal" if entry.basis.minimal else "redundant"
        print(f"admissible basis: {entry.basis.m} elements ({kind})")
    if entry.gradation is not None:
        print(f"gradation: {entry.gradation.m} parts")
    return 0


def cmd_graph(args) -> int:
    entry = _resolve(args.source)
    _require_lie(entry)
    b = _basis(entry)
    if b is None:
        raise CliError("no admissible basis found within the search budget", 1)
    G = build_graph(b)
    kind = "minimal" if b.minimal else "redundant"
    print(f"{len(G.vertices)} vertices ({kind}), {len(G.edges)} edges")
    for e in G.edges:
        print(f"  {G.edge_name(e)}")
    rules = validate_edge_rules(G)
    bounds = validate_bounds(G)
    print(f"edge rules: {'ok' if rules.ok else rules.violations}")
    print(f"bounds: {bounds.n_edges} <= {bounds.max_edges} {'ok' if bounds.ok else bounds.violations}")
    if len(G.vertices) <= 12:
        scan = scan_all_triples(G)
        counts: dict = {}
        for t in scan.values():
            key = "unmatched" if t is None else t.value
            counts[key] = counts.get(key, 0) + 1
        print("three-vertex types: " + ", ".join(f"{k}:{v}" for k, v in sorted(counts.items())))
    _write(args.dot, emit_dot(G, entry.name))
    return 0


def _series_line(counts, tail) -> str:
    return ARROW.join(str(c) for c in counts) + f" ({tail})"


def cmd_derived(args) -> int:
    entry = _resolve(args.source)
    _require_lie(entry)
    G, b, mg = _graph_for(entry)
    if mg is not None:
        gs = graded_derived_series(mg)
        series, counts = gs.series, gs.dims
    else:
        series = derived_graph_series(G)
        counts = [sp.dim for sp in stage_spans(series, b)]
    if series.terminated:
        tail = f"solvable, derived length {len(series.stages) - 1}"
    else:
        res = is_solvable_graph(G)
        walk = " -> ".join(G.names[v] for v in res.witness.vertices)
        tail = f"not solvable; self-contained closed walk {walk}"
    print(_series_line(counts, tail))
    _write(args.dot, emit_series_dot(series, entry.name, "D"))
    return 0


def cmd_lcs(args) -> int:
    entry = _resolve(args.source)
    _require_lie(entry)
    G, b, mg = _graph_for(entry)
    if mg is not None:
        gs = graded_lcs(mg)
        series, counts = gs.series, gs.dims
    else:
        series = lcs_graph_series(G)
        counts = [sp.dim for sp in stage_spans(series, b)]
    if series.terminated:
        tail = f"nilpotent, index {len(series.stages) - 1}"
    else:
        cyc = is_nilpotent_graph(G).cycle
        tail = "not nilpotent; cycle " + " -> ".join(G.names[v] for v in cyc + cyc[:1])
    print(_series_line(counts, tail))
    _write(args.dot, emit_series_dot(series, entry.name, "C"))
    return 0


def cmd_ideals(args) -> int:
    entry = _resolve(args.source)
    _require_lie(entry)
    b = _basis(entry)
    if b is None:
        raise CliError("no admissible basis found within the search budget", 1)
    G = build_graph(b)
    rep = enumerate_ideals(G, b)
    for seed, cl in sorted(rep.closures.items()):
        print(f"closure({G.names[seed]}) = {_names(G, cl)}")
    for ideal in rep.ideals:
        tag = " (closure)" if ideal.closure else ""
        print(f"ideal {_names(G, ideal.vertices)} dim {ideal.span.dim}{tag}")
    if rep.truncated:
        print("note: only pairwise unions were formed")
    return 0


def classify_report(entry: CatalogEntry) -> dict:
    alg = entry.algebra
    b = _basis(entry)
    out: dict = {"name": entry.name, "dim": alg.dim}
    obs = observe(CatalogEntry(entry.name, alg, b, entry.gradation))
    out.update({k: obs[k] for k in ("solvable", "nilpotent", "index", "center", "radical", "semisimple")})
    out["abelian"] = alg.is_abelian()
    out["reductive"] = is_reductive_oracle(alg)
    if b is None:
        out["graph"] = None
        lev = None
    else:
        G = build_graph(b)
        lev = levi_report(alg, b, G)
        ss = semisimplicity_report(alg, b, G)
        ltd = ltd_classification(G)
        zn, cyc = zn_symmetry(G)
        sinks, _ = central_vertices(G, b)
        out["graph"] = {
            "vertices": b.m,
            "minimal": b.minimal,
            "edges": len(G.edges),
            "components": [[G.names[v] for v in c] for c in unconnected_components(G)],
            "sinkholes": [G.names[v] for v in sorted(sinks)],
            "loose_ends": [G.names[v] for v in sorted(ltd.loose_ends)],
            "ltd": {G.names[v]: t for v, t in ltd.vertex_tag.items()},
            "zn_symmetry": [G.names[v] for v in cyc] if zn else None,
            "simple_candidates": [[G.names[v] for v in c] for c in ss.simple_candidates],
            "nilpotency_index": nilpotency_index(G),
            "center_via_kernels": center_via_kernels(b).dim if b.minimal else None,
        }
        if lev.radical_vertices is not None:
            out["graph"]["cross_edges"] = [G.edge_name(e) for e in lev.cross_edges]
    rad_text = lev.radical_summary() if lev is not None else _radical_text(alg)
    out["summary"] = "; ".join([
        "solvable" if out["solvable"] else "not solvable",
        "semisimple" if out["semisimple"] else "not semisimple",
        rad_text,
    ])
    return out


def _radical_text(alg) -> str:
    from .algebra import lower_central_series_oracle, radical_oracle, subalgebra

    rad = radical_oracle(alg)
    if rad.dim == 0:
        return "radical {0}"
    lcs = lower_central_series_oracle(subalgebra(alg, rad))
    if lcs.terminated:
        return f"radical dim {rad.dim} nilpotent({len(lcs.stages) - 1}-step)"
    return f"radical dim {rad.dim} solvable, not nilpotent"


def cmd_classify(args) -> int:
    entry = _resolve(args.source)
    _require_lie(entry)
    rep = classify_report(entry)
    if args.json:
        print(json.dumps(rep, indent=2, sort_keys=True))
        return 0
    yn = lambda x: "yes" if x else "no"  # noqa: E731
    print(rep["summary"])
    print(f"abelian: {yn(rep['abelian'])}")
    nil = f"yes, index {rep['index']}" if rep["nilpotent"] else "no"
    print(f"nilpotent: {nil}")
    print(f"center dim: {rep['center']}")
    print(f"reductive: {yn(rep['reductive'])}")
    gr = rep["graph"]
    if gr is None:
        print("graph: no admissible basis found within the search budget")
        return 0
    print(f"graph: {gr['vertices']} vertices ({'minimal' if gr['minimal'] else 'redundant'}), {gr['edges']} edges")
    print("components: " + " ".join("{" + ",".join(c) + "}" for c in gr["components"]))
    print("sinkholes: " + (",".join(gr["sinkholes"]) or "none"))
    print("loose ends: " + (",".join(gr["loose_ends"]) or "none"))
    print("L/T/D: " + " ".join(f"{k}:{v}" for k, v in gr["ltd"].items()))
    print("simple candidates: " + (" ".join("{" + ",".join(c) + "}" for c in gr["simple_candidates"]) or "none"))
    zn = gr["zn_symmetry"]
    print("Z_n symmetry: " + ("yes (" + " -> ".join(zn) + ")" if zn else "no"))
    if "cross_edges" in gr and gr["cross_edges"]:
        print("Levi cross edges: " + " ".join(gr["cross_edges"]))
    if args.dot:
        b = _basis(entry)
        G = build_graph(b)
        _write(args.dot, emit_levi_dot(G, b, levi_report(entry.algebra, b, G), entry.name))
    return 0


def cmd_graded(args) -> int:
    entry = _resolve(args.source)
    _require_lie(entry)
    mg = entry.gradation
    if mg is None:
        raise CliError("source has no gradation", 1)
    G = build_graded_graph(mg)
    print(f"granularity {mg.m} ({is_finest_known(mg).value})")
    print(f"graph: {mg.m} vertices, {len(G.edges)} edges")
    for name, gs in (("derived", graded_derived_series(mg)), ("lcs", graded_lcs(mg))):
        print(f"{name}: " + ARROW.join(str(d) for d in gs.dims))
        for msg in gs.messages():
            print(f"  {msg}")
    _write(args.dot, emit_dot(G, entry.name))
    return 0


def cmd_similarity(args) -> int:
    entry = _resolve(args.source)
    _require_lie(entry)
    b = _basis(entry)
    if b is None:
        raise CliError("no admissible basis found within the search budget", 1)
    G = build_graph(b)
    try:
        j, k = b.names.index(args.by), b.names.index(args.on)
    except ValueError:
        raise CliError(f"unknown basis element; choose from {', '.join(b.names)}", 2) from None
    s = similarity_series(b, G, j, k, args.order)
    c = s.walk.classification
    kind = (f"terminating, length {c.length}" if isinstance(c, Terminating)
            else f"eventually periodic, preperiod {c.preperiod}, period {c.period}")
    print(f"walk by {args.by} on {args.on}: {kind}")
    nums = dict(numeric_eval(s))
    for v, terms in s.grouped().items():
        coeffs = " ".join(f"[{n}] {x}" for n, x in terms)
        print(f"  {G.names[v]}: {coeffs}")
        print(f"    sum ~ {nums[v]!r}")
    if not isinstance(c, Terminating):
        print(f"  remainder bound 1/({args.order}+1)! = {1 / math.factorial(args.order + 1):.3e}")
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.list_names():
            e = catalog.get(name)
            parts = [f"dim {e.algebra.dim}"]
            if e.basis is not None:
                parts.append(f"basis {e.basis.m}")
            if e.gradation is not None:
                parts.append(f"gradation {e.gradation.m}")
            print(f"{name}: " + ", ".join(parts))
        return 0
    if not args.name:
        raise CliError("catalog export needs a NAME", 2)
    try:
        entry = catalog.get(args.name)
    except UnknownEntryError as exc:
        raise CliError(str(exc).strip('"'), 2) from None
    text = dumps(entry)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_selftest(args) -> int:
    failures = 0
    for name in catalog.list_names():
        e = catalog.get(name)
        bad = oracle_equivalence(e.algebra, e.basis, e.gradation)
        obs = observe(e)
        bad += [f"expected {k}={v!r}, got {obs.get(k)!r}" for k, v in e.expected.items() if obs.get(k) != v]
        if bad:
            failures += 1
            print(f"FAIL {name}: " + "; ".join(bad))
        elif args.verbose:
            print(f"ok   {name}")
    total = len(catalog.list_names())
    print(f"selftest: {total - failures}/{total} catalog entries consistent")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liegraph", description="Graph analysis of Lie algebras")
    sub = p.add_subparsers(dest="command", required=True)

    def src(sp):
        sp.add_argument("source", help="JSON file, catalog:NAME or fixture:NAME")

    sp = sub.add_parser("validate", help="check schema, antisymmetry and Jacobi")
    src(sp)
    sp.set_defaults(func=cmd_validate)
    for name, fn, helptext in (
        ("graph", cmd_graph, "print the associated graph"),
        ("derived", cmd_derived, "derived series by graph pruning"),
        ("lcs", cmd_lcs, "lower central series by graph pruning"),
        ("graded", cmd_graded, "gradation pipeline"),
    ):
        sp = sub.add_parser(name, help=helptext)
        src(sp)
        sp.add_argument("--dot", metavar="FILE", help="write DOT output")
        sp.set_defaults(func=fn)
    sp = sub.add_parser("ideals", help="ideals from reachability closures")
    src(sp)
    sp.set_defaults(func=cmd_ideals)
    sp = sub.add_parser("classify", help="structural report")
    src(sp)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--dot", metavar="FILE", help="write the Levi view as DOT")
    sp.set_defaults(func=cmd_classify)
    sp = sub.add_parser("similarity", help="ad-walk similarity series")
    src(sp)
    sp.add_argument("--by", required=True, help="generator (basis element name)")
    sp.add_argument("--on", required=True, help="transformed element (basis element name)")
    sp.add_argument("--order", type=int, default=10)
    sp.set_defaults(func=cmd_similarity)
    sp = sub.add_parser("catalog", help="built-in algebras")
    sp.add_argument("action", choices=["list", "export"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_catalog)
    sp = sub.add_parser("selftest", help="oracle-equivalence suite over the catalog")
    sp.add_argument("-v", "--verbose", action="store_true")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "order", 0) < 0:
        print("error: --order must be nonnegative", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
