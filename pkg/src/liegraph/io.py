"""JSON algebra files and DOT rendering.

Files use 1-based indices.  A bracket entry ``{"i": 1, "j": 2, "coeffs": {"3": "1/2"}}``
means [x_1, x_2] = 1/2 x_3; omitted brackets are zero.  Scalars are decimal or
fraction strings, integers, or ``{"a": ..., "b": ...}`` for a + b sqrt(d).
A gradation ``delta`` is upper triangular: row j lists targets for k >= j,
with 0 for a vanishing bracket.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .admissibility import check_admissible
from .algebra import AntisymmetryError, LieAlgebra
from .catalog import CatalogEntry
from .exact import Scalar
from .graded import verify_gradation

__all__ = [
    "SCHEMA",
    "LoadError",
    "SchemaError",
    "DataError",
    "entry_to_json",
    "entry_from_json",
    "dumps",
    "load",
    "save",
    "emit_dot",
    "emit_series_dot",
    "emit_levi_dot",
]

_SCALAR = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*[-+]?\d+(\s*/\s*\d+|\.\d+)?\s*$"},
        {
            "type": "object",
            "properties": {"a": {"$ref": "#/$defs/rational"}, "b": {"$ref": "#/$defs/rational"}},
            "additionalProperties": False,
        },
    ]
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {
        "rational": {
            "oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*[-+]?\d+(\s*/\s*\d+|\.\d+)?\s*$"}]
        },
        "scalar": _SCALAR,
        "vector": {"type": "array", "items": {"$ref": "#/$defs/scalar"}, "minItems": 1},
    },
    "type": "object",
    "required": ["dim", "brackets"],
    "properties": {
        "name": {"type": "string"},
        "dim": {"type": "integer", "minimum": 1},
        "field_d": {"type": "integer", "minimum": 0},
        "basis_names": {"type": "array", "items": {"type": "string", "minLength": 1}},
        "brackets": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "j", "coeffs"],
                "properties": {
                    "i": {"type": "integer", "minimum": 1},
                    "j": {"type": "integer", "minimum": 1},
                    "coeffs": {
                        "type": "object",
                        "patternProperties": {r"^[1-9][0-9]*$": {"$ref": "#/$defs/scalar"}},
                        "additionalProperties": False,
                    },
                },
                "additionalProperties": False,
            },
        },
        "admissible_basis": {"type": "array", "items": {"$ref": "#/$defs/vector"}, "minItems": 1},
        "admissible_names": {"type": "array", "items": {"type": "string"}},
        "gradation": {
            "type": "object",
            "required": ["parts", "delta"],
            "properties": {
                "parts": {
                    "type": "array",
                    "minItems": 1,
                    "items": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/vector"}},
                },
                "delta": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
                "names": {"type": "array", "items": {"type": "string"}},
            },
            "additionalProperties": False,
        },
        "notes": {"type": "string"},
    },
    "additionalProperties": False,
}


class LoadError(ValueError):
    code = "load"


class SchemaError(LoadError):
    code = "schema"

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer
        super().__init__(f"schema error at {pointer}: {message}")


class DataError(LoadError):
    """Schema-valid input that still does not describe a valid object."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"{code}: {message}")


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path) or "/"


def _scalar_json(x: Scalar):
    return x.to_json()


def entry_to_json(entry: CatalogEntry) -> dict:
    g = entry.algebra
    brackets = []
    for (j, k), v in sorted(g.structure_constants().items()):
        coeffs = {str(i + 1): _scalar_json(x) for i, x in enumerate(v) if x}
        brackets.append({"i": j + 1, "j": k + 1, "coeffs": coeffs})
    out = {
        "name": entry.name,
        "dim": g.dim,
        "field_d": g.field_d,
        "basis_names": list(g.names),
        "brackets": brackets,
    }
    if entry.basis is not None:
        out["admissible_basis"] = [[_scalar_json(x) for x in v] for v in entry.basis.elements]
        out["admissible_names"] = list(entry.basis.names)
    mg = entry.gradation
    if mg is not None:
        out["gradation"] = {
            "parts": [[[_scalar_json(x) for x in r] for r in p.rows] for p in mg.parts],
            "delta": [[0 if mg.delta[j][k] is None else mg.delta[j][k] + 1 for k in range(j, mg.m)]
                      for j in range(mg.m)],
            "names": list(mg.names),
        }
    if entry.notes:
        out["notes"] = entry.notes
    return out


def entry_from_json(obj: dict) -> CatalogEntry:
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(obj), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise SchemaError(_pointer(err.absolute_path), err.message)
    dim = obj["dim"]
    d = obj.get("field_d", 0)
    names = obj.get("basis_names")
    if names is not None and len(names) != dim:
        raise SchemaError("/basis_names", f"expected {dim} names, got {len(names)}")

    def sc(x, where):
        try:
            return Scalar.from_json(x, d)
        except (ValueError, ZeroDivisionError) as exc:
            raise DataError("scalar", f"{where}: {exc}") from None

    def vector(v, where):
        if len(v) != dim:
            raise DataError("length", f"{where}: vector of length {len(v)}, expected {dim}")
        return tuple(sc(x, f"{where}/{i}") for i, x in enumerate(v))

    table: dict = {}
    for n, br in enumerate(obj["brackets"]):
        i, j = br["i"] - 1, br["j"] - 1
        if i >= dim or j >= dim:
            raise DataError("index", f"/brackets/{n}: index out of range for dim {dim}")
        vec = {}
        for key, x in br["coeffs"].items():
            t = int(key) - 1
            if t >= dim:
                raise DataError("index", f"/brackets/{n}/coeffs/{key}: index out of range for dim {dim}")
            vec[t] = sc(x, f"/brackets/{n}/coeffs/{key}")
        if (i, j) in table or (j, i) in table:
            prev = table.get((i, j))
            if prev is None:
                prev = {t: -x for t, x in table[(j, i)].items()}
            if {t: x for t, x in prev.items() if x} != {t: x for t, x in vec.items() if x}:
                raise DataError("antisymmetry", f"/brackets/{n}: [x{i + 1}, x{j + 1}] contradicts an earlier entry")
            continue
        table[(i, j)] = vec
    try:
        g = LieAlgebra(dim, table, names, d)
    except AntisymmetryError as exc:
        raise DataError("antisymmetry", str(exc)) from None
    except ValueError as exc:
        raise DataError("algebra", str(exc)) from None
    basis = None
    if "admissible_basis" in obj:
        elems = [vector(v, f"/admissible_basis/{n}") for n, v in enumerate(obj["admissible_basis"])]
        try:
            res = check_admissible(g, elems, obj.get("admissible_names"))
        except ValueError as exc:
            raise DataError("admissibility", str(exc)) from None
        basis = res if res.ok else None
        if basis is None:
            raise DataError("admissibility", res.describe(obj.get("admissible_names") or
                                                         [str(k + 1) for k in range(len(elems))], g))
    mg = None
    if "gradation" in obj:
        gr = obj["gradation"]
        parts = [[vector(v, f"/gradation/parts/{p}/{n}") for n, v in enumerate(part)]
                 for p, part in enumerate(gr["parts"])]
        m = len(parts)
        tri = gr["delta"]
        if len(tri) != m or any(len(row) != m - j for j, row in enumerate(tri)):
            raise SchemaError("/gradation/delta", f"expected an upper triangular table for {m} parts")
        delta = [[None] * m for _ in range(m)]
        for j in range(m):
            for off, t in enumerate(tri[j]):
                if t > m:
                    raise DataError("index", f"/gradation/delta/{j}/{off}: target {t} out of range")
                delta[j][j + off] = delta[j + off][j] = None if t == 0 else t - 1
        try:
            res = verify_gradation(g, parts, delta, gr.get("names"))
        except ValueError as exc:
            raise DataError("gradation", str(exc)) from None
        if not res.ok:
            a, b = res.pair
            raise DataError("gradation", f"[g{a + 1}, g{b + 1}] leaves its target part")
        mg = res
    return CatalogEntry(obj.get("name", "unnamed"), g, basis, mg, {}, obj.get("notes", ""))


def dumps(entry: CatalogEntry) -> str:
    return json.dumps(entry_to_json(entry), indent=2, sort_keys=True) + "\n"


def load(path) -> CatalogEntry:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError("/", f"invalid JSON: {exc}") from None
    return entry_from_json(obj)


def save(entry: CatalogEntry, path) -> None:
    Path(path).write_text(dumps(entry))


# -- DOT -------------------------------------------------------------------------

def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edge_lines(g, node, edges, style="", only=None) -> list:
    groups: dict = {}
    for e in edges:
        groups.setdefault((e.start, e.end), []).append(e.label)
    out = []
    for (s, t), labels in sorted(groups.items()):
        if only is not None and (s not in only or t not in only):
            continue
        lab = ",".join(g.names[v] for v in sorted(labels))
        attrs = f"label={_q(lab)}" + (f", {style}" if style else "")
        out.append(f"  {node(s)} -> {node(t)} [{attrs}];")
    return out


def emit_dot(g, title: str = "G") -> str:
    """One arrow per (start, end) pair labeled by every label vertex; auxiliary edges dashed."""
    lines = [f"digraph {_q(title)} {{", "  node [shape=circle];"]
    for v in g.sorted_vertices():
        lines.append(f"  {_q(g.names[v])};")
    node = lambda v: _q(g.names[v])  # noqa: E731
    lines += _edge_lines(g, node, g.edges)
    lines += _edge_lines(g, node, g.aux_edges, "style=dashed")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_series_dot(series, title: str = "series", prefix: str = "D") -> str:
    lines = [f"digraph {_q(title)} {{", "  node [shape=circle];"]
    for k, st in enumerate(series.stages):
        node = lambda v, k=k: _q(f"{prefix}{k}:{st.names[v]}")  # noqa: E731
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f"    label={_q(f'{prefix}^{k}')};")
        for v in st.sorted_vertices():
            lines.append(f"    {node(v)} [label={_q(st.names[v])}];")
        lines += ["  " + s for s in _edge_lines(st, node, st.edges)]
        lines += ["  " + s for s in _edge_lines(st, node, st.aux_edges, "style=dashed")]
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_levi_dot(g, basis, levi, title: str = "levi") -> str:
    """Radical green, complement blue, cross edges dashed orange."""
    rad = {v for v in g.vertices if levi.radical.contains(basis.elements[v])}
    lines = [f"digraph {_q(title)} {{", "  node [shape=circle];"]
    for v in g.sorted_vertices():
        color = "green" if v in rad else "blue"
        lines.append(f"  {_q(g.names[v])} [color={color}];")
    node = lambda v: _q(g.names[v])  # noqa: E731
    cross = set(levi.cross_edges)
    inner_r = [e for e in g.edges if e not in cross and e.start in rad and e.end in rad]
    inner_s = [e for e in g.edges if e not in cross and e.start not in rad and e.end not in rad]
    rest = [e for e in g.edges if e not in cross and e not in inner_r and e not in inner_s]
    lines += _edge_lines(g, node, inner_r, "color=green")
    lines += _edge_lines(g, node, inner_s, "color=blue")
    lines += _edge_lines(g, node, sorted(cross), "color=orange, style=dashed")
    lines += _edge_lines(g, node, rest, "color=gray")
    lines.append("}")
    return "\n".join(lines) + "\n"
