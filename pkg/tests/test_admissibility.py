from fractions import Fraction as F

import pytest

from liegraph import catalog
from liegraph.admissibility import (
    AdmissibilityError,
    DuplicateElementError,
    NonSpanningError,
    ZeroElementError,
    check_admissible,
    eigen_basis_search,
    eigenvalues_in_field,
    nilpotent_closure_basis,
    reference_basis,
)
from liegraph.exact import Scalar


def test_reference_basis_of_sl2():
    g = catalog.get("sl2").algebra
    b = check_admissible(g, reference_basis(g))
    assert b.ok and b.minimal
    assert b.delta[0][1] == 1 and b.alpha[0][1] == 2
    assert b.alpha[1][0] == -2


def test_failure_reports_pair():
    g = catalog.l3_alpha(F(-1, 4))
    res = check_admissible(g, reference_basis(g))
    assert not res.ok
    assert res.pair == (1, 2)
    assert "proportional" in res.describe(g.names, g)


@pytest.mark.parametrize("elems,exc", [
    ([(0, 0, 0), (0, 1, 0), (0, 0, 1)], ZeroElementError),
    ([(1, 0, 0), (2, 0, 0), (0, 1, 0), (0, 0, 1)], DuplicateElementError),
    ([(1, 0, 0), (0, 1, 0)], NonSpanningError),
    ([], AdmissibilityError),
])
def test_structural_errors(elems, exc):
    g = catalog.get("heisenberg").algebra
    with pytest.raises(exc):
        check_admissible(g, elems)


def test_nilpotent_closure():
    g = catalog.get("nilpotent7").algebra
    b = nilpotent_closure_basis(g)
    assert b.ok
    with pytest.raises(AdmissibilityError):
        nilpotent_closure_basis(catalog.get("sl2").algebra)


def test_eigenvalues_in_q_sqrt5():
    g = catalog.l3_alpha(1)
    ad3 = g.ad(2)
    # eigenvalues of ad x3 on L3_1 are 0 and (1 +- sqrt5)/2 up to sign
    vals = eigenvalues_in_field(ad3, 5)
    assert len(vals) == 3
    assert all(isinstance(v, Scalar) for v in vals)
    assert eigenvalues_in_field(ad3, 0) == [0]


def test_search_alpha_one_needs_sqrt5():
    assert eigen_basis_search(catalog.l3_alpha(1)) is None
    b = eigen_basis_search(catalog.get("l3_alpha_1").algebra)
    assert b is not None and b.minimal


@pytest.mark.parametrize("alpha", [0, 2, F(-2, 9), F(3, 4)])
def test_search_minimal_for_split_alpha(alpha):
    b = eigen_basis_search(catalog.l3_alpha(alpha))
    assert b is not None and b.minimal


def test_search_redundant_for_alpha_minus_one():
    b = eigen_basis_search(catalog.l3_alpha(-1))
    assert b is not None and not b.minimal
