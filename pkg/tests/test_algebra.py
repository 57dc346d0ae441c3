from fractions import Fraction as F

import pytest

from liegraph import catalog
from liegraph.algebra import (
    AntisymmetryError,
    LieAlgebra,
    bracket,
    center_oracle,
    change_basis,
    derived_series_oracle,
    is_ideal,
    is_nilpotent_oracle,
    is_reductive_oracle,
    is_semisimple_cartan,
    is_solvable_oracle,
    killing_value,
    lower_central_series_oracle,
    normalizer,
    radical_oracle,
    subalgebra,
    verify_lie,
)
from liegraph.exact import Subspace


def heis():
    return LieAlgebra.from_named(["x", "y", "z"], {("x", "y"): {"z": 1}})


def test_bracket_antisymmetric():
    g = heis()
    x, y = g.unit(0), g.unit(1)
    assert bracket(g, x, y) == g.unit(2)
    assert bracket(g, y, x) == g.vector({"z": -1})


def test_both_orders_must_agree():
    with pytest.raises(AntisymmetryError):
        LieAlgebra(3, {(0, 1): {2: 1}, (1, 0): {2: 1}})
    g = LieAlgebra(3, {(0, 1): {2: 1}, (1, 0): {2: -1}})
    assert g == heis().__class__(3, {(0, 1): {2: 1}})


def test_self_bracket_rejected():
    with pytest.raises(AntisymmetryError):
        LieAlgebra(2, {(0, 0): {1: 1}})


def test_index_out_of_range():
    with pytest.raises(IndexError):
        LieAlgebra(2, {(0, 2): {1: 1}})


def test_jacobi_failure_reported():
    g = catalog.fixture("type_viii")
    rep = verify_lie(g)
    assert not rep.ok and not rep.antisymmetry
    assert rep.describe(g) == ["Jacobi (a, b, c): residual -a"]


def test_series_of_heisenberg():
    g = heis()
    assert derived_series_oracle(g).dims == [3, 1, 0]
    assert lower_central_series_oracle(g).dims == [3, 1, 0]
    assert center_oracle(g) == Subspace(3, [(0, 0, 1)])
    assert is_nilpotent_oracle(g) and is_solvable_oracle(g)


def test_sl2_semisimple_and_reductive():
    g = catalog.get("sl2").algebra
    assert is_semisimple_cartan(g)
    assert is_reductive_oracle(g)
    assert radical_oracle(g).dim == 0
    assert killing_value(g, g.unit(0), g.unit(0)) == 8


def test_gl2_like_is_reductive_not_semisimple():
    sl2 = catalog.get("sl2").algebra
    names = list(sl2.names) + ["c"]
    table = {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}
    g = LieAlgebra(4, table, names)
    assert is_reductive_oracle(g)
    assert not is_semisimple_cartan(g)
    assert radical_oracle(g) == center_oracle(g)


def test_change_basis_preserves_structure():
    g = catalog.get("sl2").algebra
    h = change_basis(g, [g.vector({"h": 1}), g.vector({"x": 1, "y": 1}), g.vector({"x": 1, "y": -1})])
    assert verify_lie(h).ok
    assert derived_series_oracle(h).dims == [3]
    assert is_semisimple_cartan(h)


def test_ideal_and_normalizer():
    g = catalog.get("schrodinger_m1").algebra
    rad = radical_oracle(g)
    assert is_ideal(g, rad)
    assert normalizer(g, rad).dim == g.dim
    sub = subalgebra(g, rad)
    assert lower_central_series_oracle(sub).dims == [3, 1, 0]


def test_l3_alpha_not_nilpotent():
    g = catalog.l3_alpha(F(-1, 4))
    assert verify_lie(g).ok
    assert is_solvable_oracle(g) and not is_nilpotent_oracle(g)
