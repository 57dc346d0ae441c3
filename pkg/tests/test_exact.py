from fractions import Fraction as F

import pytest

from liegraph.exact import (
    FieldError,
    Scalar,
    Subspace,
    coordinates,
    inverse,
    kernel,
    mat,
    mat_mul,
    identity,
    proportional,
    rank,
    rref,
    scalar,
    vec,
)

R2 = Scalar(0, 1, 2)


def test_sqrt2_squared():
    assert R2 * R2 == 2
    assert (1 + R2) * (1 - R2) == -1


def test_inverse_and_division():
    x = Scalar(3, F(1, 2), 5)
    assert x * x.inverse() == 1
    assert (x / x) == 1
    assert 1 / Scalar(0, 1, 3) == Scalar(0, F(1, 3), 3)


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        Scalar(0, 0, 2).inverse()


@pytest.mark.parametrize("d", [1, 4, 8, -3])
def test_bad_field(d):
    with pytest.raises(FieldError):
        Scalar(1, 1, d)


def test_mixing_fields():
    with pytest.raises(FieldError):
        Scalar(1, 1, 2) + Scalar(1, 1, 3)


def test_rational_promotes():
    assert Scalar(1, 0, 5) + F(1, 2) == Scalar(F(3, 2), 0, 5)
    assert scalar(3) == 3
    assert hash(Scalar(2, 0, 0)) == hash(Scalar(2, 0, 0))


def test_json_roundtrip():
    for x in (Scalar(F(-7, 3)), Scalar(1, -2, 7)):
        assert Scalar.from_json(x.to_json(), x.d) == x
    assert Scalar(F(1, 2)).to_json() == "1/2"


def test_str():
    assert str(Scalar(1, -1, 2)) == "1-sqrt(2)"
    assert str(Scalar(0, F(1, 2), 3)) == "1/2*sqrt(3)"


def test_rref_rank_kernel():
    m = mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2
    ker = kernel(m)
    assert len(ker) == 1
    for row in m:
        assert sum((a * b for a, b in zip(row, ker[0])), scalar(0)) == 0
    r, rk = rref(m)[:2]
    assert rk == 2


def test_inverse_matrix_over_q_sqrt2():
    m = mat([[1, R2], [R2, 3]], 2)
    assert mat_mul(m, inverse(m, 2)) == identity(2, 2)


def test_singular_inverse():
    with pytest.raises(ValueError):
        inverse(mat([[1, 2], [2, 4]]))


def test_coordinates_and_proportional():
    basis = [vec([1, 1]), vec([1, -1])]
    assert coordinates(vec([3, 1]), basis) == (2, 1)
    assert proportional(vec([2, 4]), vec([1, 2])) == 2
    assert proportional(vec([2, 4]), vec([1, 3])) is None


def test_subspace_ops():
    u = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    v = Subspace(3, [(0, 1, 0), (0, 0, 1)])
    assert (u & v) == Subspace(3, [(0, 1, 0)])
    assert (u + v).dim == 3
    assert Subspace(3, [(1, 1, 0)]) <= u
    assert not v.contains((1, 0, 0))
    assert Subspace(3, [(2, 2, 0), (1, 1, 0)]).dim == 1
