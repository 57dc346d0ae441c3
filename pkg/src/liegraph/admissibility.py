"""Graph-admissible spanning sets: checking, nilpotent closure, and a bounded search.

A spanning set x_1..x_m is admissible when every bracket [x_j, x_k] is zero
or a nonzero multiple alpha[j][k] of a single member x_delta[j][k].
Indices here are 0-based and a vanishing bracket has ``delta = None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import sympy

from .algebra import LieAlgebra, bracket, is_nilpotent_oracle
from .exact import Scalar, Subspace, kernel, proportional, scalar, vec_is_zero

__all__ = [
    "AdmissibilityError",
    "ZeroElementError",
    "DuplicateElementError",
    "NonSpanningError",
    "AdmissibleBasis",
    "AdmissibilityFailure",
    "check_admissible",
    "nilpotent_closure_basis",
    "eigen_basis_search",
    "eigenvalues_in_field",
    "reference_basis",
]


class AdmissibilityError(ValueError):
    code = "admissibility"


class ZeroElementError(AdmissibilityError):
    code = "zero_element"

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"element {index} is the zero vector")


class DuplicateElementError(AdmissibilityError):
    code = "proportional_duplicate"

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"elements {i} and {j} are proportional")


class NonSpanningError(AdmissibilityError):
    code = "non_spanning"

    def __init__(self, rank: int, dim: int):
        self.rank = rank
        super().__init__(f"elements span a {rank}-dimensional subspace of a {dim}-dimensional algebra")


@dataclass(frozen=True)
class AdmissibleBasis:
    algebra: LieAlgebra
    elements: tuple
    alpha: tuple
    delta: tuple
    names: tuple
    ok = True

    @property
    def m(self) -> int:
        return len(self.elements)

    @property
    def minimal(self) -> bool:
        return self.m == self.algebra.dim

    def target(self, j: int, k: int):
        return self.delta[j][k]

    def bracket_pairs(self):
        """(j, k, alpha, target) for every j < k with a nonzero bracket."""
        for j, k in combinations(range(self.m), 2):
            t = self.delta[j][k]
            if t is not None:
                yield j, k, self.alpha[j][k], t

    def span(self) -> Subspace:
        return Subspace(self.algebra.dim, self.elements, self.algebra.field_d)


@dataclass(frozen=True)
class AdmissibilityFailure:
    pair: tuple
    bracket: tuple
    ok = False

    def describe(self, names: Sequence[str], g: LieAlgebra) -> str:
        j, k = self.pair
        return (f"[{names[j]}, {names[k]}] = {g.format_vec(self.bracket)} "
                "is neither zero nor proportional to a listed element")


def _element_names(g: LieAlgebra, elements) -> tuple:
    out = []
    for v in elements:
        nz = [i for i, x in enumerate(v) if x]
        if len(nz) == 1 and v[nz[0]] == 1:
            out.append(g.names[nz[0]])
        else:
            out.append(g.format_vec(v))
    return tuple(out)


def reference_basis(g: LieAlgebra) -> list:
    return [g.unit(i) for i in range(g.dim)]


def check_admissible(g: LieAlgebra, elements: Sequence, names: Sequence[str] | None = None):
    """Return an :class:`AdmissibleBasis` or an :class:`AdmissibilityFailure`.

    Zero elements, proportional duplicates and non-spanning sets raise
    distinct :class:`AdmissibilityError` subclasses.
    """
    if not elements:
        raise AdmissibilityError("no elements given")
    d = g.field_d
    elements = tuple(tuple(scalar(x, d) for x in v) for v in elements)
    for i, v in enumerate(elements):
        if len(v) != g.dim:
            raise ValueError(f"element {i} has length {len(v)}, expected {g.dim}")
        if vec_is_zero(v):
            raise ZeroElementError(i)
    for i, j in combinations(range(len(elements)), 2):
        if proportional(elements[i], elements[j]) is not None:
            raise DuplicateElementError(i, j)
    span = Subspace(g.dim, elements, d)
    if span.dim != g.dim:
        raise NonSpanningError(span.dim, g.dim)
    m = len(elements)
    zero = scalar(0, d)
    alpha = [[zero] * m for _ in range(m)]
    delta = [[None] * m for _ in range(m)]
    for j, k in combinations(range(m), 2):
        w = bracket(g, elements[j], elements[k])
        if vec_is_zero(w):
            continue
        for t, x in enumerate(elements):
            kappa = proportional(w, x)
            if kappa is not None:
                alpha[j][k], alpha[k][j] = kappa, -kappa
                delta[j][k] = delta[k][j] = t
                break
        else:
            return AdmissibilityFailure((j, k), w)
    names = tuple(names) if names is not None else _element_names(g, elements)
    if len(names) != m:
        raise ValueError("one name per element required")
    return AdmissibleBasis(
        g,
        elements,
        tuple(tuple(r) for r in alpha),
        tuple(tuple(r) for r in delta),
        names,
    )


def _closure(g: LieAlgebra, start: Sequence, limit: int):
    """Adjoin non-proportional brackets until closed; None if more than ``limit`` elements appear."""
    elems = [tuple(v) for v in start if not vec_is_zero(v)]
    done = set()
    changed = True
    while changed:
        changed = False
        for j, k in combinations(range(len(elems)), 2):
            if (j, k) in done:
                continue
            done.add((j, k))
            w = bracket(g, elems[j], elems[k])
            if vec_is_zero(w):
                continue
            if any(proportional(w, x) is not None for x in elems):
                continue
            elems.append(w)
            changed = True
            if len(elems) > limit:
                return None
    return elems


def nilpotent_closure_basis(g: LieAlgebra, start: Sequence | None = None):
    """Redundant admissible basis built by closing the reference basis under brackets."""
    if not is_nilpotent_oracle(g):
        raise AdmissibilityError("algebra is not nilpotent")
    start = reference_basis(g) if start is None else start
    # every new element lies deeper in the lower central series, so this ends
    elems = _closure(g, start, limit=10**6)
    res = check_admissible(g, elems)
    assert res.ok, "closure of a nilpotent algebra must be admissible"
    return res


def _to_sympy(x: Scalar):
    r = sympy.Rational(x.a.numerator, x.a.denominator)
    if x.b:
        r += sympy.Rational(x.b.numerator, x.b.denominator) * sympy.sqrt(x.d)
    return r


def _from_sympy(e, d: int):
    e = sympy.expand(e)
    if d:
        root = sympy.sqrt(d)
        b = e.coeff(root)
        a = sympy.expand(e - b * root)
    else:
        a, b = e, sympy.Integer(0)
    if not (a.is_Rational and b.is_Rational):
        return None
    return Scalar(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)), d)


def eigenvalues_in_field(m, d: int) -> list:
    """Distinct eigenvalues of a square matrix that lie in Q(sqrt d), sorted numerically."""
    n = len(m)
    if n == 0:
        return []
    lam = sympy.Symbol("lam")
    sm = sympy.Matrix(n, n, lambda i, j: _to_sympy(scalar(m[i][j], d)))
    poly = sm.charpoly(lam).as_expr()
    if d:
        _, factors = sympy.factor_list(poly, lam, extension=sympy.sqrt(d))
    else:
        _, factors = sympy.factor_list(poly, lam)
    roots = []
    for f, _mult in factors:
        p = sympy.Poly(f, lam)
        if p.degree() != 1:
            continue
        c1, c0 = p.all_coeffs()
        r = _from_sympy(-c0 / c1, d)
        if r is not None and r not in roots:
            roots.append(r)
    roots.sort(key=float)
    return roots


def _ad_eigenvectors(g: LieAlgebra, i: int) -> list:
    d = g.field_d
    a = g.ad(i)
    out = []
    for lam in eigenvalues_in_field(a, d):
        shifted = [[a[r][c] - (lam if r == c else 0) for c in range(g.dim)] for r in range(g.dim)]
        out.extend(kernel(shifted, g.dim, d))
    return out


def _complete(g: LieAlgebra, vectors: list) -> list:
    """Drop proportional repeats, then extend by reference vectors until spanning."""
    out = []
    for v in vectors:
        if vec_is_zero(v) or any(proportional(v, w) is not None for w in out):
            continue
        out.append(v)
    span = Subspace(g.dim, out, g.field_d)
    for i in range(g.dim):
        if span.dim == g.dim:
            break
        e = g.unit(i)
        if not span.contains(e):
            out.append(e)
            span = span + Subspace(g.dim, [e], g.field_d)
    return out


def _candidates(g: LieAlgebra, closure_limit: int):
    yield reference_basis(g)
    if is_nilpotent_oracle(g):
        yield nilpotent_closure_basis(g).elements
    for i in range(g.dim):
        vecs = _ad_eigenvectors(g, i)
        if not vecs:
            continue
        ordered = sorted(vecs, key=lambda v: 0 if v == g.unit(i) else 1)
        yield _complete(g, [g.unit(i)] + ordered)
        yield _complete(g, ordered)
    closed = _closure(g, reference_basis(g), closure_limit)
    if closed is not None:
        yield closed


def eigen_basis_search(g: LieAlgebra, budget: int = 64):
    """Best-effort search for an admissible basis; ``None`` proves nothing.

    Tries the reference basis, the nilpotent closure, ad-eigenvector bases in
    Q(sqrt d), and finally a bracket closure of the reference basis capped at
    ``3 * dim`` elements.  Each candidate costs one unit of ``budget``.
    """
    seen = set()
    for cand in _candidates(g, 3 * g.dim):
        if budget <= 0:
            return None
        key = tuple(cand)
        if key in seen:
            continue
        seen.add(key)
        budget -= 1
        try:
            res = check_admissible(g, cand)
        except AdmissibilityError:
            continue
        if res.ok:
            return res
    return None
