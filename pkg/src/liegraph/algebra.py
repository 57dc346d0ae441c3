"""Lie algebras given by structure constants, plus the linear-algebra oracle.

The oracle computes derived/lower central series, center, Killing form,
radical, ideals and normalizers directly from the bracket, without looking
at any graph.  Graph results elsewhere in the package are checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .exact import (
    Subspace,
    Vec,
    coordinates,
    inverse,
    kernel,
    mat_vec,
    rref,
    scalar,
    transpose,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)

__all__ = [
    "AntisymmetryError",
    "LieAlgebra",
    "LieReport",
    "OracleSeries",
    "bracket",
    "verify_lie",
    "change_basis",
    "subalgebra",
    "subspace_bracket",
    "derived_series_oracle",
    "lower_central_series_oracle",
    "is_solvable_oracle",
    "is_nilpotent_oracle",
    "center_oracle",
    "killing_form",
    "killing_value",
    "is_semisimple_cartan",
    "radical_oracle",
    "InternalConsistencyError",
    "is_ideal",
    "normalizer",
    "is_reductive_oracle",
]


class AntisymmetryError(ValueError):
    """Structure constants given for (j,k) and (k,j) that are not negatives of each other."""

    def __init__(self, j: int, k: int, message: str = ""):
        self.pair = (j, k)
        super().__init__(message or f"antisymmetry violated for pair ({j}, {k})")


class LieAlgebra:
    """Structure constants c[(j,k)] = [x_j, x_k] for j < k, over Q(sqrt d).

    ``table`` may list a pair in either order; listing both orders is allowed
    only when the two entries are negatives of each other.
    """

    __slots__ = ("dim", "names", "field_d", "_c", "_ad")

    def __init__(self, dim: int, table: Mapping, names: Sequence[str] | None = None, field_d: int = 0):
        self.dim = int(dim)
        self.field_d = int(field_d)
        if names is None:
            names = [f"x{i + 1}" for i in range(self.dim)]
        self.names = tuple(names)
        if len(self.names) != self.dim:
            raise ValueError(f"{len(self.names)} names for dimension {self.dim}")
        if len(set(self.names)) != self.dim:
            raise ValueError("basis names must be distinct")
        d = self.field_d
        c: dict = {}
        for (j, k), v in table.items():
            if not (0 <= j < self.dim and 0 <= k < self.dim):
                raise IndexError(f"bracket index ({j}, {k}) out of range for dim {self.dim}")
            v = self._as_vec(v)
            if j == k:
                if not vec_is_zero(v):
                    raise AntisymmetryError(j, k, f"[x{j + 1}, x{j + 1}] must vanish")
                continue
            key, val = ((j, k), v) if j < k else ((k, j), vec_scale(-1, v))
            if key in c and c[key] != val:
                raise AntisymmetryError(j, k)
            c[key] = val
        self._c = {key: v for key, v in c.items() if not vec_is_zero(v)}
        self._ad = None
        # make sure the scalars all live in one field
        for v in self._c.values():
            for x in v:
                if x.d != d:
                    raise ValueError("mixed fields in structure constants")

    def _as_vec(self, v) -> Vec:
        d = self.field_d
        if isinstance(v, Mapping):
            out = list(zero_vec(self.dim, d))
            for idx, coef in v.items():
                if not 0 <= idx < self.dim:
                    raise IndexError(f"coefficient index {idx} out of range")
                out[idx] = scalar(coef, d)
            return tuple(out)
        v = tuple(scalar(x, d) for x in v)
        if len(v) != self.dim:
            raise ValueError("structure constant vector has wrong length")
        return v

    @classmethod
    def from_named(cls, names: Sequence[str], table: Mapping, field_d: int = 0) -> "LieAlgebra":
        """Build from ``{("a","b"): {"c": coef, ...}}`` keyed by basis names."""
        index = {n: i for i, n in enumerate(names)}
        raw = {}
        for (a, b), rhs in table.items():
            raw[(index[a], index[b])] = {index[k]: v for k, v in rhs.items()}
        return cls(len(names), raw, names, field_d)

    # -- access ---------------------------------------------------------------
    def c(self, j: int, k: int) -> Vec:
        """[x_j, x_k] in the reference basis."""
        if j == k:
            return zero_vec(self.dim, self.field_d)
        if j < k:
            return self._c.get((j, k)) or zero_vec(self.dim, self.field_d)
        v = self._c.get((k, j))
        return vec_scale(-1, v) if v else zero_vec(self.dim, self.field_d)

    def nonzero_pairs(self):
        return sorted(self._c)

    def structure_constants(self) -> dict:
        return dict(self._c)

    def zero(self) -> Vec:
        return zero_vec(self.dim, self.field_d)

    def unit(self, i: int) -> Vec:
        return unit_vec(self.dim, i, self.field_d)

    def vector(self, coeffs) -> Vec:
        """Vector from a ``{name or index: coef}`` mapping or a plain sequence."""
        if isinstance(coeffs, Mapping):
            out = list(self.zero())
            for key, coef in coeffs.items():
                i = self.names.index(key) if isinstance(key, str) else key
                out[i] = out[i] + scalar(coef, self.field_d)
            return tuple(out)
        return tuple(scalar(x, self.field_d) for x in coeffs)

    def ad(self, j: int):
        """Matrix of ad_{x_j}: column m holds [x_j, x_m]."""
        if self._ad is None:
            self._ad = [transpose([self.c(i, m) for m in range(self.dim)]) for i in range(self.dim)]
        return self._ad[j]

    def ad_of(self, x: Vec):
        cols = [bracket(self, x, self.unit(m)) for m in range(self.dim)]
        return transpose(cols)

    def is_abelian(self) -> bool:
        return not self._c

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.dim, self.field_d, self._c) == (other.dim, other.field_d, other._c)

    def __hash__(self):
        return hash((self.dim, self.field_d, tuple(sorted(self._c.items()))))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, d={self.field_d}, nonzero brackets={len(self._c)})"

    def format_vec(self, v: Vec) -> str:
        parts = []
        for x, name in zip(v, self.names):
            if not x:
                continue
            if x == 1:
                parts.append(name)
            elif x == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"({x}){name}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _check_dim(g: LieAlgebra, v: Sequence) -> None:
    if len(v) != g.dim:
        raise ValueError(f"dimension mismatch: vector of length {len(v)} in algebra of dim {g.dim}")


def bracket(g: LieAlgebra, x: Vec, y: Vec) -> Vec:
    _check_dim(g, x)
    _check_dim(g, y)
    acc = list(g.zero())
    for (j, k), v in g._c.items():
        coef = x[j] * y[k] - x[k] * y[j]
        if not coef:
            continue
        for i, t in enumerate(v):
            if t:
                acc[i] = acc[i] + coef * t
    return tuple(acc)


@dataclass
class LieReport:
    ok: bool
    antisymmetry: list = field(default_factory=list)  # (j, k, residual)
    jacobi: list = field(default_factory=list)  # (j, k, l, residual)

    def describe(self, g: LieAlgebra) -> list:
        lines = []
        for j, k, r in self.antisymmetry:
            lines.append(f"antisymmetry ({g.names[j]}, {g.names[k]}): residual {g.format_vec(r)}")
        for j, k, l, r in self.jacobi:
            lines.append(
                f"Jacobi ({g.names[j]}, {g.names[k]}, {g.names[l]}): residual {g.format_vec(r)}"
            )
        return lines


def verify_lie(g: LieAlgebra) -> LieReport:
    rep = LieReport(ok=True)
    e = [g.unit(i) for i in range(g.dim)]
    for j in range(g.dim):
        if not vec_is_zero(bracket(g, e[j], e[j])):
            rep.antisymmetry.append((j, j, bracket(g, e[j], e[j])))
        for k in range(j + 1, g.dim):
            r = vec_add(g.c(j, k), g.c(k, j))
            if not vec_is_zero(r):
                rep.antisymmetry.append((j, k, r))
    for j, k, l in combinations(range(g.dim), 3):
        r = vec_add(
            vec_add(bracket(g, e[j], g.c(k, l)), bracket(g, e[k], g.c(l, j))),
            bracket(g, e[l], g.c(j, k)),
        )
        if not vec_is_zero(r):
            rep.jacobi.append((j, k, l, r))
    rep.ok = not rep.antisymmetry and not rep.jacobi
    return rep


def change_basis(g: LieAlgebra, new_basis: Sequence[Vec], names: Sequence[str] | None = None) -> LieAlgebra:
    """Structure constants of g in the basis ``new_basis`` (given in reference coordinates)."""
    new_basis = [tuple(scalar(x, g.field_d) for x in v) for v in new_basis]
    if len(new_basis) != g.dim:
        raise ValueError(f"need exactly {g.dim} vectors, got {len(new_basis)}")
    for v in new_basis:
        _check_dim(g, v)
    try:
        pinv = inverse(new_basis, g.field_d)
    except ValueError:
        raise ValueError("new basis is linearly dependent") from None
    pinv_t = transpose(pinv)
    table = {}
    for j, k in combinations(range(g.dim), 2):
        w = bracket(g, new_basis[j], new_basis[k])
        if not vec_is_zero(w):
            table[(j, k)] = mat_vec(pinv_t, w)
    return LieAlgebra(g.dim, table, names, g.field_d)


def subalgebra(g: LieAlgebra, u: Subspace, names: Sequence[str] | None = None) -> LieAlgebra:
    """Restriction of the bracket to a subalgebra u, in the basis ``u.rows``."""
    rows = list(u.rows)
    table = {}
    for j, k in combinations(range(len(rows)), 2):
        w = bracket(g, rows[j], rows[k])
        if vec_is_zero(w):
            continue
        c = coordinates(w, rows)
        if c is None:
            raise ValueError("subspace is not closed under the bracket")
        table[(j, k)] = c
    return LieAlgebra(len(rows), table, names, g.field_d)


def subspace_bracket(g: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    if u.n != g.dim or v.n != g.dim:
        raise ValueError("subspace lives in a different ambient space")
    out = []
    for a in u.rows:
        for b in v.rows:
            w = bracket(g, a, b)
            if not vec_is_zero(w):
                out.append(w)
    return Subspace(g.dim, out, g.field_d)


@dataclass
class OracleSeries:
    """Series stages up to the first repeat; ``terminated`` means the last stage is {0}."""

    stages: list
    terminated: bool
    stable_from: int

    @property
    def dims(self) -> list:
        return [s.dim for s in self.stages]

    def padded_dims(self, length: int) -> list:
        d = self.dims
        return d + [d[-1]] * max(0, length - len(d))

    def stage(self, k: int) -> Subspace:
        return self.stages[min(k, len(self.stages) - 1)]


def _series(g: LieAlgebra, step, start: Subspace | None = None) -> OracleSeries:
    cur = start if start is not None else Subspace.full(g.dim, g.field_d)
    stages = [cur]
    while cur.dim:
        nxt = step(cur)
        if nxt == cur:
            return OracleSeries(stages, False, len(stages) - 1)
        stages.append(nxt)
        cur = nxt
    return OracleSeries(stages, True, len(stages) - 1)


def derived_series_oracle(g: LieAlgebra, start: Subspace | None = None) -> OracleSeries:
    return _series(g, lambda s: subspace_bracket(g, s, s), start)


def lower_central_series_oracle(g: LieAlgebra, start: Subspace | None = None) -> OracleSeries:
    full = Subspace.full(g.dim, g.field_d)
    return _series(g, lambda s: subspace_bracket(g, full, s), start)


def is_solvable_oracle(g: LieAlgebra) -> bool:
    return derived_series_oracle(g).terminated


def is_nilpotent_oracle(g: LieAlgebra) -> bool:
    return lower_central_series_oracle(g).terminated


def center_oracle(g: LieAlgebra) -> Subspace:
    # x is central iff sum_j x_j [x_j, x_k] = 0 for every k
    rows = []
    for k in range(g.dim):
        cols = [g.c(j, k) for j in range(g.dim)]
        rows.extend(transpose(cols))
    return Subspace(g.dim, kernel(rows, g.dim, g.field_d), g.field_d)


def killing_form(g: LieAlgebra):
    ads = [g.ad(j) for j in range(g.dim)]
    n = g.dim
    d = g.field_d
    out = [[scalar(0, d)] * n for _ in range(n)]
    for j in range(n):
        for k in range(j, n):
            a, b = ads[j], ads[k]
            tr = scalar(0, d)
            for i in range(n):
                for m in range(n):
                    if a[i][m] and b[m][i]:
                        tr = tr + a[i][m] * b[m][i]
            out[j][k] = tr
            out[k][j] = tr
    return tuple(tuple(r) for r in out)


def killing_value(g: LieAlgebra, x: Vec, y: Vec):
    b = killing_form(g)
    return sum((x[j] * b[j][k] * y[k] for j in range(g.dim) for k in range(g.dim)), scalar(0, g.field_d))


def is_semisimple_cartan(g: LieAlgebra) -> bool:
    if g.dim == 0:
        return True
    return rref(killing_form(g), g.field_d)[1] == g.dim


class InternalConsistencyError(RuntimeError):
    pass


def radical_oracle(g: LieAlgebra) -> Subspace:
    """rad(g) = {x : B(x, [g,g]) = 0}, re-checked to be a solvable ideal."""
    full = Subspace.full(g.dim, g.field_d)
    d1 = subspace_bracket(g, full, full)
    b = killing_form(g)
    rows = [mat_vec(b, y) for y in d1.rows]
    rad = Subspace(g.dim, kernel(rows, g.dim, g.field_d), g.field_d) if rows else full
    if not is_ideal(g, rad):
        raise InternalConsistencyError("radical candidate is not an ideal")
    if not derived_series_oracle(g, rad).terminated:
        raise InternalConsistencyError("radical candidate is not solvable")
    return rad


def is_ideal(g: LieAlgebra, u: Subspace) -> bool:
    for i in range(g.dim):
        for r in u.rows:
            w = bracket(g, g.unit(i), r)
            if not vec_is_zero(w) and not u.contains(w):
                return False
    return True


def normalizer(g: LieAlgebra, u: Subspace) -> Subspace:
    """{x : [x, u] subset of u}."""
    if u.dim in (0, g.dim):
        return Subspace.full(g.dim, g.field_d)
    # functionals vanishing on u
    annihilators = kernel(u.rows, g.dim, g.field_d)
    rows = []
    for r in u.rows:
        images = [bracket(g, g.unit(j), r) for j in range(g.dim)]
        for w in annihilators:
            rows.append(tuple(sum((a * b for a, b in zip(w, img)), scalar(0, g.field_d)) for img in images))
    return Subspace(g.dim, kernel(rows, g.dim, g.field_d), g.field_d)


def is_reductive_oracle(g: LieAlgebra) -> bool:
    """g = [g,g] + Z(g) as a direct sum with [g,g] semisimple."""
    full = Subspace.full(g.dim, g.field_d)
    d1 = subspace_bracket(g, full, full)
    z = center_oracle(g)
    if (d1 & z).dim or (d1 + z).dim != g.dim:
        return False
    if d1.dim == 0:
        return True
    return is_semisimple_cartan(subalgebra(g, d1))
