"""Property tests: algebraic invariants and graph/oracle agreement on generated tables."""

import json
from fractions import Fraction

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from liegraph.admissibility import check_admissible, reference_basis
from liegraph.algebra import (
    LieAlgebra,
    bracket,
    change_basis,
    derived_series_oracle,
    is_semisimple_cartan,
    lower_central_series_oracle,
    verify_lie,
)
from liegraph.catalog import CatalogEntry
from liegraph.exact import Scalar, Subspace, vec_add, vec_scale
from liegraph.graph import build_graph, validate_bounds, validate_edge_rules
from liegraph.io import dumps, entry_from_json
from liegraph.pipeline import oracle_equivalence
from liegraph.series import derived_graph_series, lcs_graph_series, stage_spans
from liegraph.walks import series_vector, similarity_oracle, similarity_series

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
fields = st.sampled_from([2, 3, 5, 7])


@st.composite
def field_elements(draw, d=None):
    d = draw(fields) if d is None else d
    return Scalar(draw(rationals), draw(rationals), d)


@st.composite
def same_field(draw, k):
    d = draw(fields)
    return [draw(field_elements(d)) for _ in range(k)]


@given(same_field(3))
def test_field_axioms(xs):
    a, b, c = xs
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1


@given(same_field(1))
def test_scalar_json(xs):
    (x,) = xs
    assert Scalar.from_json(json.loads(json.dumps(x.to_json())), x.d) == x


@st.composite
def admissible_tables(draw):
    n = draw(st.integers(2, 5))
    table = {}
    for j in range(n):
        for k in range(j + 1, n):
            if draw(st.booleans()) and draw(st.booleans()):
                table[(j, k)] = {draw(st.integers(0, n - 1)): draw(st.sampled_from([-2, -1, 1, 2, Fraction(1, 3)]))}
    g = LieAlgebra(n, table)
    assume(verify_lie(g).ok)
    b = check_admissible(g, reference_basis(g))
    assume(b.ok)
    return g, b


SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])


@SETTINGS
@given(admissible_tables())
def test_graph_matches_oracle(gb):
    g, b = gb
    assert oracle_equivalence(g, b) == []


@SETTINGS
@given(admissible_tables())
def test_graph_invariants(gb):
    g, b = gb
    G = build_graph(b)
    assert validate_edge_rules(G).ok
    assert validate_bounds(G).ok
    ds = stage_spans(derived_graph_series(G), b)
    ls = stage_spans(lcs_graph_series(G), b)
    for k in range(1, len(ds)):
        assert ds[k] <= ds[k - 1]
    for k in range(1, len(ls)):
        assert ls[k] <= ls[k - 1]
    # D^k g is inside C^k g
    for k in range(min(len(ds), len(ls))):
        assert ds[k] <= ls[k]


@SETTINGS
@given(admissible_tables(), st.data())
def test_similarity_matches_oracle(gb, data):
    g, b = gb
    G = build_graph(b)
    j = data.draw(st.integers(0, b.m - 1))
    k = data.draw(st.integers(0, b.m - 1))
    order = data.draw(st.integers(0, 8))
    assert series_vector(b, similarity_series(b, G, j, k, order)) == similarity_oracle(b, j, k, order)


@SETTINGS
@given(admissible_tables())
def test_json_roundtrip(gb):
    g, b = gb
    e = CatalogEntry("t", g, b)
    back = entry_from_json(json.loads(dumps(e)))
    assert back.algebra == g and back.basis.elements == b.elements


@SETTINGS
@given(admissible_tables(), st.data())
def test_bilinear_antisymmetric(gb, data):
    g, _ = gb
    vec = st.lists(rationals, min_size=g.dim, max_size=g.dim)
    x, y, z = (tuple(Scalar(c) for c in data.draw(vec)) for _ in range(3))
    c = Scalar(data.draw(rationals))
    assert bracket(g, x, y) == vec_scale(-1, bracket(g, y, x))
    assert bracket(g, vec_add(x, vec_scale(c, z)), y) == vec_add(bracket(g, x, y), vec_scale(c, bracket(g, z, y)))


@SETTINGS
@given(admissible_tables(), st.data())
def test_change_of_basis_invariants(gb, data):
    g, _ = gb
    n = g.dim
    rows = data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=n, max_size=n))
    assume(Subspace(n, rows).dim == n)
    h = change_basis(g, rows)
    assert verify_lie(h).ok
    assert derived_series_oracle(h).dims == derived_series_oracle(g).dims
    assert lower_central_series_oracle(h).dims == lower_central_series_oracle(g).dims
    assert is_semisimple_cartan(h) == is_semisimple_cartan(g)


@given(st.integers(2, 5), st.data())
def test_subspace_dimension_formula(n, data):
    vecs = st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), max_size=n)
    u = Subspace(n, data.draw(vecs))
    v = Subspace(n, data.draw(vecs))
    assert (u + v).dim + (u & v).dim == u.dim + v.dim
    assert (u & v) <= u and u <= (u + v)
