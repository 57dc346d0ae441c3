"""Exact scalars in Q(sqrt d) and dense linear algebra over them.

Every algebra fixes one square-free ``d``; ``d = 0`` means plain rationals.
Vectors are tuples of :class:`Scalar`, matrices are tuples of row tuples.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "FieldError",
    "Scalar",
    "Vec",
    "Mat",
    "scalar",
    "vec",
    "mat",
    "zero_vec",
    "unit_vec",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_is_zero",
    "lin_comb",
    "mat_vec",
    "mat_mul",
    "transpose",
    "identity",
    "rref",
    "rank",
    "kernel",
    "inverse",
    "coordinates",
    "proportional",
    "Subspace",
    "in_span",
    "subspace_sum",
    "subspace_intersection",
    "subspace_equal",
]


class FieldError(ValueError):
    """Raised for an invalid d or for mixing scalars from different fields."""


def _squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class Scalar:
    """a + b*sqrt(d) with rational a, b."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        d = int(d)
        if d != 0 and not _squarefree(d):
            raise FieldError(f"d must be 0 or a square-free integer > 1, got {d}")
        a = Fraction(a)
        b = Fraction(b)
        if d == 0 and b != 0:
            raise FieldError("irrational part needs d > 0")
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "Scalar":
        s = object.__new__(cls)
        s.a = a
        s.b = b
        s.d = d
        return s

    # -- coercion -----------------------------------------------------------
    def _co(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.d != self.d:
                raise FieldError(f"cannot mix Q(sqrt {self.d}) with Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Rational)):
            return Scalar._raw(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return Scalar._raw(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return Scalar._raw(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Scalar._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        if not self.b and not o.b:
            return Scalar._raw(self.a * o.a, Fraction(0), self.d)
        return Scalar._raw(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar._raw(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        if not self.b:
            return Scalar._raw(1 / self.a, Fraction(0), self.d)
        n = self.norm()
        return Scalar._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar._raw(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons --------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            if other.d != self.d:
                # equal only when both are plain rationals
                return not self.b and not other.b and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def is_rational(self) -> bool:
        return not self.b

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    # -- text ---------------------------------------------------------------
    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        b = "" if self.b == 1 else "-" if self.b == -1 else f"{self.b}*"
        root = f"{b}sqrt({self.d})"
        if not self.a:
            return root
        if root.startswith("-"):
            return f"{self.a}{root}"
        return f"{self.a}+{root}"

    def to_json(self):
        if not self.b:
            return str(self.a)
        return {"a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json(cls, obj, d: int = 0) -> "Scalar":
        if isinstance(obj, dict):
            return cls(Fraction(str(obj.get("a", "0"))), Fraction(str(obj.get("b", "0"))), d)
        if isinstance(obj, bool):
            raise ValueError("boolean is not a scalar")
        if isinstance(obj, (int, str)):
            return cls(Fraction(str(obj).strip()), 0, d)
        raise ValueError(f"cannot read scalar from {obj!r}")


Vec = tuple  # tuple[Scalar, ...]
Mat = tuple  # tuple[Vec, ...]


def scalar(x, d: int = 0) -> Scalar:
    if isinstance(x, Scalar):
        if x.d != d and x.b:
            raise FieldError(f"cannot move {x} into Q(sqrt {d})")
        return x if x.d == d else Scalar._raw(x.a, Fraction(0), d)
    if isinstance(x, str):
        return Scalar(Fraction(x), 0, d)
    return Scalar(x, 0, d)


def vec(xs: Iterable, d: int = 0) -> Vec:
    return tuple(scalar(x, d) for x in xs)


def mat(rows: Iterable[Iterable], d: int = 0) -> Mat:
    return tuple(vec(r, d) for r in rows)


def zero_vec(n: int, d: int = 0) -> Vec:
    z = Scalar._raw(Fraction(0), Fraction(0), d)
    return (z,) * n


def unit_vec(n: int, i: int, d: int = 0) -> Vec:
    v = list(zero_vec(n, d))
    v[i] = Scalar._raw(Fraction(1), Fraction(0), d)
    return tuple(v)


def _check_len(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")


def vec_add(u: Vec, v: Vec) -> Vec:
    _check_len(u, v)
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    _check_len(u, v)
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(c, v: Vec) -> Vec:
    return tuple(c * x for x in v)


def vec_is_zero(v: Vec) -> bool:
    return not any(v)


def lin_comb(coeffs: Sequence, vectors: Sequence[Vec], n: int, d: int = 0) -> Vec:
    acc = list(zero_vec(n, d))
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, x in enumerate(v):
            if x:
                acc[i] = acc[i] + c * x
    return tuple(acc)


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(_dot(row, v) for row in m)


def _dot(u: Sequence, v: Sequence):
    _check_len(u, v)
    acc = None
    for x, y in zip(u, v):
        if x and y:
            acc = x * y if acc is None else acc + x * y
    if acc is None:
        return (u[0] * 0) if u else 0
    return acc


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(_dot(r, c) for c in bt) for r in a)


def identity(n: int, d: int = 0) -> Mat:
    return tuple(unit_vec(n, i, d) for i in range(n))


def _field_of(m: Sequence[Sequence]) -> int:
    for row in m:
        for x in row:
            if isinstance(x, Scalar):
                return x.d
    return 0


def _rref_work(m: Sequence[Sequence], d=None):
    if d is None:
        d = _field_of(m)
    rows = [[scalar(x, d) for x in r] for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        pivot_row = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Sequence[Sequence], d=None):
    """Return ``(R, rank)``; pivots are taken at the first nonzero column from the leftmost row."""
    rows, pivots = _rref_work(m, d)
    return tuple(tuple(r) for r in rows), len(pivots)


def rank(m: Sequence[Sequence]) -> int:
    return rref(m)[1]


def kernel(m: Sequence[Sequence], ncols: int | None = None, d=None) -> list:
    """Basis of {v : m v = 0}, one vector per free column."""
    if d is None:
        d = _field_of(m)
    if ncols is None:
        if not m:
            raise ValueError("kernel of an empty matrix needs ncols")
        ncols = len(m[0])
    if not m:
        return [unit_vec(ncols, i, d) for i in range(ncols)]
    rows, pivots = _rref_work(m, d)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = list(zero_vec(ncols, d))
        v[f] = scalar(1, d)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        out.append(tuple(v))
    return out


def inverse(m: Sequence[Sequence], d=None) -> Mat:
    if d is None:
        d = _field_of(m)
    n = len(m)
    aug = [list(r) + list(unit_vec(n, i, d)) for i, r in enumerate(m)]
    rows, pivots = _rref_work(aug, d)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(r[n:]) for r in rows)


def coordinates(v: Vec, basis: Sequence[Vec]):
    """Coefficients c with sum c_i basis_i == v, or None if v is outside the span.

    When the basis is dependent the solution with zero free coefficients is returned.
    """
    d = _field_of([v]) if v else 0
    k = len(basis)
    if k == 0:
        return () if vec_is_zero(v) else None
    aug = [[basis[i][row] for i in range(k)] + [v[row]] for row in range(len(v))]
    rows, pivots = _rref_work(aug, d)
    if k in pivots:
        return None
    c = list(zero_vec(k, d))
    for i, pc in enumerate(pivots):
        c[pc] = rows[i][k]
    return tuple(c)


def proportional(u: Vec, v: Vec):
    """Return kappa != 0 with u == kappa * v, or None.

    Two zero vectors give kappa = 1; a zero vector is proportional to nothing else.
    """
    _check_len(u, v)
    uz = vec_is_zero(u)
    vz = vec_is_zero(v)
    if uz and vz:
        d = _field_of([u, v])
        return scalar(1, d)
    if uz or vz:
        return None
    kappa = None
    for x, y in zip(u, v):
        if not y:
            if x:
                return None
            continue
        if kappa is None:
            kappa = x / y
        elif x != kappa * y:
            return None
    return kappa


class Subspace:
    """A subspace of F^n stored as the nonzero rows of an rref matrix."""

    __slots__ = ("n", "d", "rows")

    def __init__(self, n: int, vectors: Iterable[Sequence] = (), d: int = 0):
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise ValueError(f"dimension mismatch: vector of length {len(v)} in F^{n}")
        self.n = n
        self.d = d
        if vectors:
            rows, r = rref(vectors, d)
            self.rows = rows[:r]
        else:
            self.rows = ()

    @classmethod
    def zero(cls, n: int, d: int = 0) -> "Subspace":
        return cls(n, (), d)

    @classmethod
    def full(cls, n: int, d: int = 0) -> "Subspace":
        return cls(n, identity(n, d), d)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list:
        return list(self.rows)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.n:
            raise ValueError("dimension mismatch")
        if vec_is_zero(v):
            return True
        return rank(list(self.rows) + [tuple(scalar(x, self.d) for x in v)]) == self.dim

    __contains__ = contains

    def _same_ambient(self, other: "Subspace") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: F^{self.n} vs F^{other.n}")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace(self.n, list(self.rows) + list(other.rows), self.d)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.n, self.d)
        a, b = self.rows, other.rows
        # columns: coefficients on rows of a then rows of b
        system = [[a[i][c] for i in range(len(a))] + [-b[j][c] for j in range(len(b))]
                  for c in range(self.n)]
        sols = kernel(system, len(a) + len(b), self.d)
        vecs = [lin_comb(s[: len(a)], a, self.n, self.d) for s in sols]
        return Subspace(self.n, vecs, self.d)

    def issubspace(self, other: "Subspace") -> bool:
        self._same_ambient(other)
        return all(other.contains(r) for r in self.rows)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        body = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.rows)
        return f"Subspace(n={self.n}, dim={self.dim}, [{body}])"


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    if not basis:
        return vec_is_zero(v)
    d = _field_of([v, *basis])
    return Subspace(len(v), basis, d).contains(v)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u + v


def subspace_intersection(u: Subspace, v: Subspace) -> Subspace:
    return u & v


def subspace_equal(u: Subspace, v: Subspace) -> bool:
    u._same_ambient(v)
    return u == v
