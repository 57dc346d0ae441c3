"""Built-in algebras with canonical bases or gradations and frozen expectations.

Physics algebras with factors of i are stored over Q by absorbing i into the
generator names (for instance J' = iJ); proportionality structure, and so the
graph, is unchanged by that rescaling.

``expected`` keys: dim, solvable, nilpotent, index (nilpotency index or None),
center, radical (dimensions), semisimple, derived and lcs (oracle stage
dimensions up to the first repeat).  Entries with a basis add m, edges and
components; three-dimensional ones may add the three-vertex ``triple`` type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .admissibility import AdmissibleBasis, check_admissible
from .algebra import LieAlgebra
from .exact import Scalar
from .graded import MagmaGradation, verify_gradation

__all__ = [
    "CatalogEntry",
    "UnknownEntryError",
    "get",
    "list_names",
    "fixture",
    "fixture_names",
    "BIANCHI",
    "abelian",
    "heisenberg",
    "l3_alpha",
    "schrodinger",
    "n_q",
    "l34",
    "l35",
    "l42",
    "l45",
    "l46",
    "l48",
    "l49",
    "sl3",
    "optomechanical_table",
    "wh2_table",
]


class UnknownEntryError(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    basis: AdmissibleBasis | None = None
    gradation: MagmaGradation | None = None
    expected: dict = field(default_factory=dict)
    notes: str = ""


F = Fraction
_ENTRIES: dict = {}


def _register(fn):
    _ENTRIES[fn.__name__.lstrip("_")] = fn
    return fn


def _entry(name, alg, elements=None, basis_names=None, gradation=None, expected=None, notes=""):
    basis = None
    if elements is not None:
        vecs = [alg.vector(e) for e in elements]
        basis = check_admissible(alg, vecs, basis_names)
        if not basis.ok:
            raise AssertionError(f"catalog basis of {name} is not admissible")
    mg = None
    if gradation is not None:
        parts, delta = gradation
        parts = [[alg.vector(v) for v in p] for p in parts]
        mg = verify_gradation(alg, parts, delta)
        if not mg.ok:
            raise AssertionError(f"catalog gradation of {name} fails")
    return CatalogEntry(name, alg, basis, mg, dict(expected or {}), notes)


def _ref(alg) -> list:
    return [{n: 1} for n in alg.names]


def _delta(m: int, pairs: dict) -> list:
    """Symmetric 0-based table from ``{(j, k): target}`` with j <= k."""
    t = [[None] * m for _ in range(m)]
    for (j, k), v in pairs.items():
        t[j][k] = t[k][j] = v
    return t


def _eps(i: int, j: int):
    """(k, sign) with eps_{ijk} = sign for distinct i, j in 0..2."""
    k = 3 - i - j
    return k, (1 if (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1)


# -- parametric tables ---------------------------------------------------------

def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, [f"e{i + 1}" for i in range(n)])


def heisenberg(n: int = 1) -> LieAlgebra:
    """Basis z, q_1, p_1, ..., q_n, p_n with [q_j, p_j] = z."""
    names = ["z"] + [s for j in range(1, n + 1) for s in (f"q{j}", f"p{j}")]
    if n == 1:
        names = ["e1", "e2", "e3"]
    table = {(names[2 * j + 1], names[2 * j + 2]): {names[0]: 1} for j in range(n)}
    return LieAlgebra.from_named(names, table)


def l3_alpha(alpha) -> LieAlgebra:
    a = F(alpha)
    return LieAlgebra.from_named(
        ["x1", "x2", "x3"],
        {("x1", "x3"): {"x2": -1}, ("x2", "x3"): {"x1": -a, "x2": -1}},
    )


def l21() -> LieAlgebra:
    return LieAlgebra.from_named(["e1", "e2"], {("e1", "e2"): {"e2": 1}})


def l21_plus_l1() -> LieAlgebra:
    return LieAlgebra.from_named(["e1", "e2", "e3"], {("e1", "e2"): {"e2": 1}})


def l34(alpha) -> LieAlgebra:
    return LieAlgebra.from_named(
        ["e1", "e2", "e3"], {("e1", "e3"): {"e1": 1}, ("e2", "e3"): {"e2": F(alpha)}}
    )


def l35(beta) -> LieAlgebra:
    b = F(beta)
    return LieAlgebra.from_named(
        ["e1", "e2", "e3"],
        {("e1", "e3"): {"e1": b, "e2": -1}, ("e2", "e3"): {"e1": 1, "e2": b}},
    )


_E4 = ["e1", "e2", "e3", "e4"]


def l42(beta) -> LieAlgebra:
    return LieAlgebra.from_named(_E4, {
        ("e1", "e4"): {"e1": F(beta)},
        ("e2", "e4"): {"e2": 1},
        ("e3", "e4"): {"e2": 1, "e3": 1},
    })


def l45(a, b, c) -> LieAlgebra:
    return LieAlgebra.from_named(_E4, {
        ("e1", "e4"): {"e1": F(a)},
        ("e2", "e4"): {"e2": F(b)},
        ("e3", "e4"): {"e3": F(c)},
    })


def l46(a, b) -> LieAlgebra:
    return LieAlgebra.from_named(_E4, {
        ("e1", "e4"): {"e1": F(a)},
        ("e2", "e4"): {"e2": F(b), "e3": -1},
        ("e3", "e4"): {"e2": 1, "e3": F(b)},
    })


def l48(beta) -> LieAlgebra:
    b = F(beta)
    return LieAlgebra.from_named(_E4, {
        ("e2", "e3"): {"e1": 1},
        ("e1", "e4"): {"e1": 1 + b},
        ("e2", "e4"): {"e2": 1},
        ("e3", "e4"): {"e3": b},
    })


def l49(alpha) -> LieAlgebra:
    a = F(alpha)
    return LieAlgebra.from_named(_E4, {
        ("e2", "e3"): {"e1": 1},
        ("e1", "e4"): {"e1": 2 * a},
        ("e2", "e4"): {"e2": a, "e3": -1},
        ("e3", "e4"): {"e2": 1, "e3": a},
    })


def schrodinger(m: int) -> LieAlgebra:
    """sl2 (h, x, y) acting on the Heisenberg algebra with q_j, p_j, z."""
    qs = [f"q{j}" for j in range(1, m + 1)]
    ps = [f"p{j}" for j in range(1, m + 1)]
    if m == 1:
        qs, ps = ["q"], ["p"]
    names = ["h", "x", "y"] + [s for pair in zip(qs, ps) for s in pair] + ["z"]
    table = {("h", "x"): {"x": 2}, ("h", "y"): {"y": -2}, ("x", "y"): {"h": 1}}
    for q, p in zip(qs, ps):
        table[("h", q)] = {q: 1}
        table[("h", p)] = {p: -1}
        table[("y", q)] = {p: 1}
        table[("x", p)] = {q: 1}
        table[(q, p)] = {"z": 1}
    return LieAlgebra.from_named(names, table)


def n_q(q) -> LieAlgebra:
    return LieAlgebra.from_named(["x1", "x2", "x3", "x4", "y1", "y2"], {
        ("x1", "x2"): {"y1": 1},
        ("x1", "x3"): {"y2": 1},
        ("x2", "x4"): {"y2": 1},
        ("x3", "x4"): {"y1": F(q)},
    })


_SL3 = ["h1", "h2", "e12", "e21", "e13", "e31", "e23", "e32"]


def sl3() -> LieAlgebra:
    """sl(3) in the Chevalley-type basis h1 = E11-E22, h2 = E22-E33 and E_jk."""

    def mat_of(name):
        m = {}
        if name == "h1":
            m = {(0, 0): 1, (1, 1): -1}
        elif name == "h2":
            m = {(1, 1): 1, (2, 2): -1}
        else:
            m = {(int(name[1]) - 1, int(name[2]) - 1): 1}
        return m

    def commutator(a, b):
        out: dict = {}
        for (i, j), x in a.items():
            for (k, l), y in b.items():
                if j == k:
                    out[(i, l)] = out.get((i, l), 0) + x * y
                if l == i:
                    out[(k, j)] = out.get((k, j), 0) - x * y
        return {key: v for key, v in out.items() if v}

    def decompose(m):
        # diagonal part d0, d1, d2 with trace 0 equals d0*h1 + (d0+d1)*h2
        vec = {}
        d = [m.get((i, i), 0) for i in range(3)]
        if d[0]:
            vec["h1"] = d[0]
        if d[0] + d[1]:
            vec["h2"] = d[0] + d[1]
        for (i, j), v in m.items():
            if i != j:
                vec[f"e{i + 1}{j + 1}"] = v
        return vec

    table = {}
    for a_i, a in enumerate(_SL3):
        for b in _SL3[a_i + 1:]:
            r = decompose(commutator(mat_of(a), mat_of(b)))
            if r:
                table[(a, b)] = r
    return LieAlgebra.from_named(_SL3, table)


def _lorentz() -> LieAlgebra:
    names = ["J1", "J2", "J3", "K1", "K2", "K3"]
    table = {}
    for i in range(3):
        for j in range(i + 1, 3):
            k, s = _eps(i, j)
            table[(names[i], names[j])] = {names[k]: s}
            table[(names[3 + i], names[3 + j])] = {names[k]: s}
    for i in range(3):
        for j in range(3):
            if i != j:
                k, s = _eps(i, j)
                table[(names[i], names[3 + j])] = {names[3 + k]: s}
    return LieAlgebra.from_named(names, table)


def _poincare_like(galileo: bool) -> LieAlgebra:
    J = ["J1", "J2", "J3"]
    K = ["K1", "K2", "K3"]
    P = ["P1", "P2", "P3"]
    names = J + K + P + ["H"]
    table = {}
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            k, s = _eps(i, j)
            if i < j:
                table[(J[i], J[j])] = {J[k]: s}
                if not galileo:
                    table[(K[i], K[j])] = {J[k]: -s}
            table[(J[i], K[j])] = {K[k]: s}
            table[(J[i], P[j])] = {P[k]: s}
    for i in range(3):
        if not galileo:
            table[(K[i], P[i])] = {"H": -1}
        table[(K[i], "H")] = {P[i]: -1}
    return LieAlgebra.from_named(names, table)


def wh2_table() -> LieAlgebra:
    return LieAlgebra.from_named(["N", "X", "P", "I"], {
        ("N", "X"): {"P": 1},
        ("N", "P"): {"X": -1},
        ("X", "P"): {"I": -2},
    })


_OPTO = ["a", "b", "c", "p1", "p2", "p3", "q1", "q2", "q3", "z1", "y2", "y1", "y3", "z3"]


def optomechanical_table() -> LieAlgebra:
    table = {
        ("a", "b"): {"c": -2},
        ("a", "c"): {"b": 2},
        ("b", "c"): {"a": 8},
    }
    # symmetric coupling matrix; z2 = y1 + y2 is not a reference element
    cmat = {
        (1, 1): {"z1": 2}, (1, 2): {"y2": 2}, (1, 3): {"y1": 2},
        (2, 2): {"y1": 2, "y2": 2}, (2, 3): {"y3": 2}, (3, 3): {"z3": 2},
    }
    for j in (1, 2, 3):
        p, q = f"p{j}", f"q{j}"
        table[("a", p)] = {q: -1}
        table[("a", q)] = {p: 1}
        table[("b", p)] = {p: -2}
        table[("b", q)] = {q: 2}
        table[("c", p)] = {q: -2}
        table[("c", q)] = {p: -2}
        for k in (1, 2, 3):
            table[(p, f"q{k}")] = cmat[(min(j, k), max(j, k))]
    return LieAlgebra.from_named(_OPTO, table)


# -- improper fixtures (fail verify_lie; not listed) ----------------------------

def _type_viii() -> LieAlgebra:
    return LieAlgebra.from_named(["a", "b", "c"], {("a", "c"): {"c": 1}, ("b", "c"): {"a": 1}})


def _passes_scan() -> LieAlgebra:
    return LieAlgebra.from_named(
        ["a", "b", "c", "e", "f"],
        {("a", "c"): {"e": 1}, ("b", "c"): {"a": 1}, ("b", "e"): {"f": 1}},
    )


_FIXTURES = {"type_viii": _type_viii, "passes_scan": _passes_scan}


def fixture(name: str) -> LieAlgebra:
    """Bracket tables that violate the Jacobi identity, for negative tests."""
    try:
        return _FIXTURES[name]()
    except KeyError:
        raise UnknownEntryError(name) from None


def fixture_names() -> list:
    return sorted(_FIXTURES)


# -- expectations helpers --------------------------------------------------------

def _exp(dim, solvable, nilpotent, index, center, radical, semisimple, derived, lcs, **graph):
    out = dict(dim=dim, solvable=solvable, nilpotent=nilpotent, index=index, center=center,
               radical=radical, semisimple=semisimple, derived=derived, lcs=lcs)
    out.update(graph)
    return out


# -- entries -----------------------------------------------------------------------

@_register
def _abelian3():
    g = abelian(3)
    return _entry("abelian3", g, _ref(g), expected=_exp(
        3, True, True, 1, 3, 3, False, [3, 0], [3, 0], m=3, edges=0, components=3, triple="I"))


@_register
def _aff():
    g = l21()
    return _entry("aff", g, _ref(g), expected=_exp(
        2, True, False, None, 0, 2, False, [2, 1, 0], [2, 1], m=2, edges=2, components=1),
        notes="affine algebra of the line, l21")


@_register
def _aff_plus_r_a():
    g = LieAlgebra.from_named(["x1", "x2", "x3"], {("x2", "x3"): {"x3": 1}, ("x3", "x1"): {"x3": 1}})
    return _entry("aff_plus_r_a", g, [{"x1": 1}, {"x3": 1}, {"x2": 1}], expected=_exp(
        3, True, False, None, 1, 3, False, [3, 1, 0], [3, 1], m=3, edges=4, components=1, triple="V"),
        notes="center x1+x2 is not a vertex in this basis")


@_register
def _aff_plus_r_b():
    g = LieAlgebra.from_named(["x1", "x2", "x3"], {("x2", "x3"): {"x3": 1}, ("x3", "x1"): {"x3": 1}})
    return _entry("aff_plus_r_b", g, [{"x1": 1}, {"x3": 1}, {"x1": 1, "x2": 1}], ["x1", "x3", "x1+x2"],
                  expected=_exp(3, True, False, None, 1, 3, False, [3, 1, 0], [3, 1],
                                m=3, edges=2, components=2, triple="III"),
                  notes="the central element x1+x2 appears as a sinkhole")


@_register
def _heisenberg():
    g = heisenberg(1)
    return _entry("heisenberg", g, _ref(g), expected=_exp(
        3, True, True, 2, 1, 3, False, [3, 1, 0], [3, 1, 0], m=3, edges=2, components=1, triple="II"),
        notes="[e2,e3] = e1")


@_register
def _heisenberg2():
    g = heisenberg(2)
    return _entry("heisenberg2", g, _ref(g), expected=_exp(
        5, True, True, 2, 1, 5, False, [5, 1, 0], [5, 1, 0], m=5, edges=4, components=1))


_L21L1 = dict(dim=3, solvable=True, nilpotent=False, index=None, center=1, radical=3,
              semisimple=False, derived=[3, 1, 0], lcs=[3, 1])


@_register
def _bianchi_iii():
    g = l21_plus_l1()
    return _entry("bianchi_iii", g, _ref(g), expected=dict(_L21L1, m=3, edges=2, components=2, triple="III"))


@_register
def _bianchi_iv():
    g = l35(0)
    return _entry("bianchi_iv", g, _ref(g), expected=_exp(
        3, True, False, None, 0, 3, False, [3, 2, 0], [3, 2], m=3, edges=4, components=1, triple="IV"),
        notes="l35 with beta = 0")


@_register
def _bianchi_v():
    g = l21_plus_l1()
    return _entry("bianchi_v", g, [{"e1": 1}, {"e1": 1, "e3": 1}, {"e2": 1}], ["e1", "e1+e3", "e2"],
                  expected=dict(_L21L1, m=3, edges=4, components=1, triple="V"))


@_register
def _bianchi_vi():
    g = l34(1)
    return _entry("bianchi_vi", g, _ref(g), expected=_exp(
        3, True, False, None, 0, 3, False, [3, 2, 0], [3, 2], m=3, edges=4, components=1, triple="VI"),
        notes="l33 = l34 with alpha = 1")


@_register
def _bianchi_vii():
    g = l21_plus_l1()
    return _entry("bianchi_vii", g, [{"e1": 1}, {"e2": 1, "e3": 1}, {"e2": 1}], ["e1", "e2+e3", "e2"],
                  expected=dict(_L21L1, m=3, edges=4, components=1, triple="VII"))


@_register
def _bianchi_xi():
    g = l21_plus_l1()
    return _entry("bianchi_xi", g, [{"e2": 1}, {"e1": 1, "e2": -1}, {"e1": 1, "e2": 1, "e3": 1}],
                  ["e2", "e1-e2", "e1+e2+e3"],
                  expected=dict(_L21L1, m=3, edges=6, components=1, triple="XI"))


@_register
def _l34_2():
    g = l34(2)
    return _entry("l34_2", g, _ref(g), expected=_exp(
        3, True, False, None, 0, 3, False, [3, 2, 0], [3, 2], m=3, edges=4, components=1, triple="VI"))


@_register
def _su2():
    g = LieAlgebra.from_named(["e1", "e2", "e3"], {
        ("e1", "e2"): {"e3": 1}, ("e2", "e3"): {"e1": 1}, ("e3", "e1"): {"e2": 1}})
    return _entry("su2", g, _ref(g), expected=_exp(
        3, False, False, None, 0, 0, True, [3], [3], m=3, edges=6, components=1, triple="IX"))


def _sl2_std() -> LieAlgebra:
    return LieAlgebra.from_named(["h", "x", "y"], {
        ("h", "x"): {"x": 2}, ("h", "y"): {"y": -2}, ("x", "y"): {"h": 1}})


_SL2_EXP = dict(dim=3, solvable=False, nilpotent=False, index=None, center=0, radical=0,
                semisimple=True, derived=[3], lcs=[3])


@_register
def _sl2():
    g = _sl2_std()
    return _entry("sl2", g, _ref(g), expected=dict(_SL2_EXP, m=3, edges=6, components=1, triple="X"))


@_register
def _sl2_rotated():
    g = LieAlgebra.from_named(["h", "x", "y"], {
        ("h", "x"): {"x": 2}, ("h", "y"): {"y": -2}, ("x", "y"): {"h": 1}}, field_d=2)
    r = Scalar(0, F(1, 2), 2)  # 1/sqrt(2)
    return _entry("sl2_rotated", g, [{"h": 1}, {"x": r, "y": -r}, {"x": r, "y": r}],
                  ["h", "(x-y)/sqrt2", "(x+y)/sqrt2"],
                  expected=dict(_SL2_EXP, m=3, edges=6, components=1, triple="IX"),
                  notes="same algebra as sl2, basis rotated by 1/sqrt(2)")


@_register
def _sl2_z3():
    g = _sl2_std()
    parts = [[{"h": 1}], [{"x": 1}], [{"y": 1}]]
    # cyclic group of order 3 with identity 0; vanishing pairs project to None
    delta = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    return _entry("sl2_z3", g, _ref(g), gradation=(parts, delta), expected=dict(
        _SL2_EXP, m=3, edges=6, components=1, granularity=3))


@_register
def _l3_alpha_2():
    g = l3_alpha(2)
    return _entry("l3_alpha_2", g, [{"x3": 1}, {"x1": 1, "x2": 1}, {"x1": -2, "x2": 1}],
                  ["x3", "x1+x2", "-2x1+x2"],
                  expected=_exp(3, True, False, None, 0, 3, False, [3, 2, 0], [3, 2],
                                m=3, edges=4, components=1, triple="VI"),
                  notes="eigenvectors of ad(x3) with eigenvalues 2 and -1")


@_register
def _l3_alpha_1():
    g = LieAlgebra.from_named(["x1", "x2", "x3"], {
        ("x1", "x3"): {"x2": -1}, ("x2", "x3"): {"x1": -1, "x2": -1}}, field_d=5)
    phi = Scalar(F(1, 2), F(1, 2), 5)
    return _entry("l3_alpha_1", g, [{"x3": 1}, {"x1": 1, "x2": phi}, {"x1": 1, "x2": 1 - phi}],
                  ["x3", "x1+phi*x2", "x1+(1-phi)*x2"],
                  expected=_exp(3, True, False, None, 0, 3, False, [3, 2, 0], [3, 2],
                                m=3, edges=4, components=1, triple="VI"),
                  notes="phi is the golden ratio; needs Q(sqrt 5)")


_L3_GRADING = ([[{"x1": 1}, {"x2": 1}], [{"x3": 1}]], _delta(2, {(0, 1): 0}))


@_register
def _l3_alpha_m1():
    g = l3_alpha(-1)
    return _entry("l3_alpha_m1", g, [{"x1": 1}, {"x2": 1}, {"x3": 1}, {"x1": 1, "x2": -1}],
                  ["x1", "x2", "x3", "x1-x2"], gradation=_L3_GRADING,
                  expected=_exp(3, True, False, None, 0, 3, False, [3, 2, 0], [3, 2],
                                m=4, edges=6, components=1, granularity=2),
                  notes="redundant basis; ad(x3) cycles x1 -> x2 -> x1-x2 -> x1 up to scale")


@_register
def _l3_alpha_m1_2():
    g = l3_alpha(F(-1, 2))
    return _entry("l3_alpha_m1_2", g, gradation=_L3_GRADING, expected=_exp(
        3, True, False, None, 0, 3, False, [3, 2, 0], [3, 2], granularity=2),
        notes="alpha = -1/2; two-part gradation; the search finds a 5-element admissible basis")


@_register
def _l3_alpha_m1_4():
    g = l3_alpha(F(-1, 4))
    return _entry("l3_alpha_m1_4", g, gradation=_L3_GRADING, expected=_exp(
        3, True, False, None, 0, 3, False, [3, 2, 0], [3, 2], granularity=2),
        notes="alpha = -1/4; not graph-admissible")


@_register
def _l32():
    g = LieAlgebra.from_named(["e1", "e2", "e3"], {("e1", "e3"): {"e1": 1}, ("e2", "e3"): {"e1": 1, "e2": 1}})
    return _entry("l32", g, gradation=([[{"e1": 1}, {"e2": 1}], [{"e3": 1}]], _delta(2, {(0, 1): 0})),
                  expected=_exp(3, True, False, None, 0, 3, False, [3, 2, 0], [3, 2], granularity=2))


@_register
def _l41():
    g = LieAlgebra.from_named(_E4, {("e2", "e4"): {"e1": 1}, ("e3", "e4"): {"e2": 1}})
    return _entry("l41", g, _ref(g), expected=_exp(
        4, True, True, 3, 1, 4, False, [4, 2, 0], [4, 2, 1, 0], m=4, edges=4, components=1))


@_register
def _l42():
    g = l42(2)
    return _entry("l42", g, gradation=(
        [[{"e1": 1}], [{"e2": 1}, {"e3": 1}], [{"e4": 1}]], _delta(3, {(0, 2): 0, (1, 2): 1})),
        expected=_exp(4, True, False, None, 0, 4, False, [4, 3, 0], [4, 3], granularity=3),
        notes="beta = 2")


@_register
def _l43():
    g = LieAlgebra.from_named(_E4, {("e1", "e4"): {"e1": 1}, ("e3", "e4"): {"e2": 1}})
    return _entry("l43", g, _ref(g), expected=_exp(
        4, True, False, None, 1, 4, False, [4, 2, 0], [4, 2, 1], m=4, edges=4, components=1))


@_register
def _l44():
    g = LieAlgebra.from_named(_E4, {
        ("e1", "e4"): {"e1": 1}, ("e2", "e4"): {"e1": 1, "e2": 1}, ("e3", "e4"): {"e2": 1, "e3": 1}})
    return _entry("l44", g, gradation=(
        [[{"e1": 1}, {"e2": 1}, {"e3": 1}], [{"e4": 1}]], _delta(2, {(0, 1): 0})),
        expected=_exp(4, True, False, None, 0, 4, False, [4, 3, 0], [4, 3], granularity=2))


@_register
def _l45():
    g = l45(1, 2, 3)
    return _entry("l45", g, _ref(g), expected=_exp(
        4, True, False, None, 0, 4, False, [4, 3, 0], [4, 3], m=4, edges=6, components=1),
        notes="(alpha, beta, gamma) = (1, 2, 3)")


@_register
def _l46():
    g = l46(1, 1)
    return _entry("l46", g, gradation=(
        [[{"e1": 1}], [{"e2": 1}, {"e3": 1}], [{"e4": 1}]], _delta(3, {(0, 2): 0, (1, 2): 1})),
        expected=_exp(4, True, False, None, 0, 4, False, [4, 3, 0], [4, 3], granularity=3),
        notes="(alpha, beta) = (1, 1)")


@_register
def _l47():
    g = LieAlgebra.from_named(_E4, {
        ("e2", "e3"): {"e1": 1}, ("e1", "e4"): {"e1": 2},
        ("e2", "e4"): {"e2": 1}, ("e3", "e4"): {"e2": 1, "e3": 1}})
    return _entry("l47", g, gradation=(
        [[{"e1": 1}], [{"e2": 1}, {"e3": 1}], [{"e4": 1}]],
        _delta(3, {(1, 1): 0, (0, 2): 0, (1, 2): 1})),
        expected=_exp(4, True, False, None, 0, 4, False, [4, 3, 1, 0], [4, 3], granularity=3))


@_register
def _l48():
    g = l48(F(1, 2))
    return _entry("l48", g, _ref(g), expected=_exp(
        4, True, False, None, 0, 4, False, [4, 3, 1, 0], [4, 3], m=4, edges=8, components=1),
        notes="beta = 1/2")


@_register
def _l49_0():
    g = l49(0)
    return _entry("l49_0", g, _ref(g), expected=_exp(
        4, True, False, None, 1, 4, False, [4, 3, 1, 0], [4, 3], m=4, edges=6, components=1))


@_register
def _l49_1():
    g = l49(1)
    return _entry("l49_1", g, gradation=(
        [[{"e1": 1}], [{"e2": 1}, {"e3": 1}], [{"e4": 1}]],
        _delta(3, {(1, 1): 0, (0, 2): 0, (1, 2): 1})),
        expected=_exp(4, True, False, None, 0, 4, False, [4, 3, 1, 0], [4, 3], granularity=3),
        notes="alpha = 1")


@_register
def _l410():
    g = LieAlgebra.from_named(_E4, {
        ("e1", "e3"): {"e1": 1}, ("e2", "e3"): {"e2": 1},
        ("e1", "e4"): {"e2": -1}, ("e2", "e4"): {"e1": 1}})
    return _entry("l410", g, _ref(g), expected=_exp(
        4, True, False, None, 0, 4, False, [4, 2, 0], [4, 2], m=4, edges=8, components=1))


@_register
def _tight3():
    g = LieAlgebra.from_named(["x1", "x2", "x3"], {
        ("x1", "x2"): {"x1": 1}, ("x1", "x3"): {"x1": 1}, ("x2", "x3"): {"x1": -1}})
    return _entry("tight3", g, _ref(g), expected=_exp(
        3, True, False, None, 1, 3, False, [3, 1, 0], [3, 1], m=3, edges=6, components=1),
        notes="attains the edge bound n(n-1)")


@_register
def _solvable7():
    names = [f"x{j}" for j in range(7)]
    table = {("x0", "x1"): {"x1": 1}}
    for j in range(2, 7):
        table[("x0", f"x{j}")] = {f"x{j}": -(7 - j)}
    for j in range(2, 6):
        table[("x1", f"x{j}")] = {f"x{j + 1}": 1}
    g = LieAlgebra.from_named(names, table)
    return _entry("solvable7", g, _ref(g), expected=_exp(
        7, True, False, None, 0, 7, False, [7, 6, 4, 0], [7, 6], m=7, edges=20, components=1))


@_register
def _nilpotent7():
    names = [f"v{j}" for j in range(1, 8)]
    g = LieAlgebra.from_named(names, {("v1", f"v{j}"): {f"v{j + 1}": 1} for j in range(2, 7)})
    return _entry("nilpotent7", g, _ref(g), expected=_exp(
        7, True, True, 6, 1, 7, False, [7, 5, 0], [7, 5, 4, 3, 2, 1, 0], m=7, edges=10, components=1),
        notes="filiform: [v1, vj] = v(j+1)")


def _schrodinger_exp(m):
    n = 4 + 2 * m
    return _exp(n, False, False, None, 1, 2 * m + 1, False, [n], [n],
                m=n, edges=6 + 10 * m, components=1)


@_register
def _schrodinger_m1():
    g = schrodinger(1)
    return _entry("schrodinger_m1", g, _ref(g), expected=_schrodinger_exp(1))


@_register
def _schrodinger_m2():
    g = schrodinger(2)
    return _entry("schrodinger_m2", g, _ref(g), expected=_schrodinger_exp(2))


_LORENTZ_NOTE = "J' = iJ absorbs the imaginary unit so [K,K] = eps J' with real constants"


@_register
def _lorentz_jk():
    g = _lorentz()
    return _entry("lorentz_jk", g, _ref(g), expected=_exp(
        6, False, False, None, 0, 0, True, [6], [6], m=6, edges=24, components=1), notes=_LORENTZ_NOTE)


@_register
def _lorentz_n():
    g = _lorentz()
    elems = [{f"J{i}": 1, f"K{i}": -1} for i in (1, 2, 3)] + [{f"J{i}": 1, f"K{i}": 1} for i in (1, 2, 3)]
    names = [f"N{i}" for i in (1, 2, 3)] + [f"M{i}" for i in (1, 2, 3)]
    return _entry("lorentz_n", g, elems, names, expected=_exp(
        6, False, False, None, 0, 0, True, [6], [6], m=6, edges=12, components=2),
        notes=_LORENTZ_NOTE + "; N = J' - K, M = J' + K, [N,N] = 2 eps N")


@_register
def _poincare():
    g = _poincare_like(False)
    return _entry("poincare", g, _ref(g), expected=_exp(
        10, False, False, None, 0, 4, False, [10], [10], m=10, edges=48, components=1),
        notes="i absorbed into the generators; translations P, H form the radical")


@_register
def _galileo():
    g = _poincare_like(True)
    return _entry("galileo", g, _ref(g), expected=_exp(
        10, False, False, None, 0, 7, False, [10, 9], [10, 9], m=10, edges=36, components=1),
        notes="boosts commute with each other and with P")


@_register
def _wh2():
    g = wh2_table()
    return _entry("wh2", g, _ref(g), expected=_exp(
        4, True, False, None, 1, 4, False, [4, 3, 1, 0], [4, 3], m=4, edges=6, components=1),
        notes="N = i a^+a, X = i(a + a^+), P = a - a^+, I = i")


@_register
def _n_q():
    g = n_q(F(1, 2))
    return _entry("n_q", g, _ref(g), expected=_exp(
        6, True, True, 2, 2, 6, False, [6, 2, 0], [6, 2, 0], m=6, edges=8, components=1),
        notes="q = 1/2")


@_register
def _optomechanical():
    g = optomechanical_table()
    elems = _ref(g) + [{"y1": 1, "y2": 1}]
    return _entry("optomechanical", g, elems, list(_OPTO) + ["z2"], expected=_exp(
        14, False, False, None, 5, 11, False, [14], [14], m=15, edges=60, components=1),
        notes="z2 = y1 + y2 makes the 15-element basis redundant")


@_register
def _sl3():
    g = sl3()
    elems = _ref(g) + [{"h1": 1, "h2": 1}]
    roots = {"e12": (1, -1, 0), "e21": (-1, 1, 0), "e13": (1, 0, -1),
             "e31": (-1, 0, 1), "e23": (0, 1, -1), "e32": (0, -1, 1)}
    labels = ["g0"] + list(roots)
    parts = [[{"h1": 1}, {"h2": 1}]] + [[{r: 1}] for r in roots]
    vec = {"g0": (0, 0, 0), **roots}
    pairs = {}
    for j in range(7):
        for k in range(j, 7):
            s = tuple(a + b for a, b in zip(vec[labels[j]], vec[labels[k]]))
            if s in vec.values() and not (j == 0 and k == 0):
                pairs[(j, k)] = labels.index(next(n for n in labels if vec[n] == s))
    return _entry("sl3", g, elems, list(_SL3) + ["h1+h2"], gradation=(parts, _delta(7, pairs)),
                  expected=_exp(8, False, False, None, 0, 0, True, [8], [8],
                                m=9, edges=54, components=1, granularity=7),
                  notes="root gradation: Cartan part plus six root spaces")


BIANCHI = {
    "I": "abelian3", "II": "heisenberg", "III": "bianchi_iii", "IV": "bianchi_iv",
    "V": "bianchi_v", "VI": "bianchi_vi", "VII": "bianchi_vii", "IX": "su2",
    "X": "sl2", "XI": "bianchi_xi",
}


@lru_cache(maxsize=None)
def get(name: str) -> CatalogEntry:
    try:
        build = _ENTRIES[name]
    except KeyError:
        raise UnknownEntryError(f"unknown catalog entry {name!r}") from None
    return build()


def list_names() -> list:
    return sorted(_ENTRIES)
