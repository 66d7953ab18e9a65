import numpy as np
import pytest
from hypothesis import given, assume
from hypothesis import strategies as st

from conftest import nonzero_quaternions, quaternions, units
from qfueter.errors import DomainError
from qfueter.quaternion import (
    I,
    J,
    K,
    ONE,
    STANDARD_BASIS,
    ZERO,
    ComplexSlice,
    ImaginaryUnit,
    OrthonormalBasis,
    Quaternion,
    bar_theta,
    cayley_dickson_mul,
    complete_basis,
    dot,
    format_quaternion,
    inversion,
    isclose,
    mul,
    theta,
)
from qfueter.linmap import inversion_differential, RealLinearMap


def test_unit_products():
    assert I * J == K
    assert J * I == -K
    assert J * K == I and K * I == J
    for u in (I, J, K):
        assert u * u == -ONE


def test_expanded_product():
    # (1 + i)(1 + j) = 1 + j + i + ij
    assert (ONE + I) * (ONE + J) == Quaternion(1, 1, 1, 1)


@given(quaternions)
def test_one_is_neutral(x):
    assert x * ONE == x and ONE * x == x


@given(quaternions, quaternions)
def test_norm_is_multiplicative(x, y):
    assert abs((x * y).norm() - x.norm() * y.norm()) <= 1e-12 * (1 + x.norm() * y.norm())


@given(quaternions, quaternions)
def test_conjugation_reverses_products(x, y):
    assert x.conj().conj() == x
    assert (x * y).conj() == y.conj() * x.conj()


@given(nonzero_quaternions)
def test_inverse(x):
    assert isclose(x * x.inverse(), ONE, 1e-9)
    assert isclose(x.inverse() * x, ONE, 1e-9)


@given(quaternions, quaternions)
def test_cayley_dickson_route_agrees(x, y):
    assert isclose(mul(x, y), cayley_dickson_mul(x, y), 1e-12)


@given(quaternions, quaternions)
def test_dot_is_real_part_of_product_with_conjugate(x, y):
    assert abs(dot(x, y) - (x * y.conj()).x0) <= 1e-10 * (1 + x.norm() * y.norm())
    assert abs(dot(x, x) - x.norm_sq()) <= 1e-12 * (1 + x.norm_sq())


def test_zero_has_no_inverse():
    with pytest.raises(DomainError):
        ZERO.inverse()


def test_imaginary_unit_validation():
    g = ImaginaryUnit(0, 0.6, 0.8, 0)
    assert g * g == -ONE
    with pytest.raises(DomainError):
        ImaginaryUnit(1, 0, 0, 0)
    with pytest.raises(DomainError):
        ImaginaryUnit(0, 2, 0, 0)


@given(units(), units())
def test_slices_meet_in_the_reals(g, h):
    assume(abs(abs(dot(g, h)) - 1) > 1e-3)
    cg, ch = ComplexSlice(ImaginaryUnit(g)), ComplexSlice(ImaginaryUnit(h))
    x = cg.element(0.7, 1.3)
    assert cg.contains(x)
    assert not ch.contains(x)
    assert ch.contains(Quaternion(2.5))


def test_theta_examples():
    assert theta(I, J) == -J
    assert theta(Quaternion(3.0), Quaternion(1, 2, 3, 4)) == Quaternion(1, 2, 3, 4)
    with pytest.raises(DomainError):
        theta(ZERO, I)


def test_bar_theta_examples():
    z1, z2 = complex(0.3, -1.2), complex(2.0, 0.5)
    x = STANDARD_BASIS.join_left(z1, z2)
    # bar_theta_i(z1 + z2 j) = conj(z1) + j conj(z2)
    assert bar_theta(I, x) == STANDARD_BASIS.join_right(z1.conjugate(), z2.conjugate())
    # bar_theta_j(z1 + z2 j) = z1 - j z2
    assert bar_theta(J, x) == STANDARD_BASIS.join_right(z1, -z2)
    assert bar_theta(ONE, x) == x.conj()


@given(nonzero_quaternions, nonzero_quaternions, quaternions)
def test_theta_composition(p, q, x):
    lhs = bar_theta(p, bar_theta(q, x))
    assert isclose(lhs, theta(p * q, x), 1e-8)
    assert isclose(theta(p, theta(q, x)), theta(p * q, x), 1e-8)


@given(nonzero_quaternions, quaternions)
def test_theta_preserves_imaginary_norm(p, x):
    y = theta(p, x.im())
    assert abs(y.x0) <= 1e-9 * (1 + x.norm())
    assert abs(y.norm() - x.im().norm()) <= 1e-9 * (1 + x.norm())


def test_basis_orientation():
    assert STANDARD_BASIS.positive
    assert OrthonormalBasis(J, I, K).orientation == "negative"
    with pytest.raises(DomainError):
        OrthonormalBasis(I, I, K)
    with pytest.raises(DomainError):
        OrthonormalBasis(I, J, Quaternion(0, 0, 0, 2))


def test_complete_basis_examples():
    b = complete_basis(K)
    assert (b.e1, b.e2, b.e3) == (I, J, K)
    b = complete_basis(I)
    assert b.e3 == I and b.positive
    assert np.allclose(b.matrix().T @ b.matrix(), np.eye(4))


@given(units(), st.sampled_from([1, 3]))
def test_complete_basis_random(g, slot):
    b = complete_basis(g, slot)
    assert b.positive
    assert isclose(b.e3 if slot == 3 else b.e1, g, 1e-9)
    assert isclose(b.e1 * b.e2, b.e3, 1e-9)
    assert np.allclose(b.matrix().T @ b.matrix(), np.eye(4), atol=1e-12)


def test_complete_basis_is_deterministic():
    g = Quaternion(0, 0.48, 0.6, 0.64)
    assert complete_basis(g) == complete_basis(g)


@given(quaternions)
def test_split_join_round_trip(x):
    for b in (STANDARD_BASIS, complete_basis(Quaternion(0, 1, 2, 2) * (1 / 3))):
        assert isclose(b.join_left(*b.split_left(x)), x, 1e-12)
        assert isclose(b.join_right(*b.split_right(x)), x, 1e-12)


def test_inversion_examples():
    q = Quaternion(0.5, -1, 2, 0.25)
    assert inversion(ZERO, q) == q.conj().inverse()
    assert inversion(ZERO, ONE) == ONE
    assert inversion(ZERO, 2 * I) == 0.5 * I
    with pytest.raises(DomainError):
        inversion(q, q)


def test_inversion_differential():
    assert inversion_differential(ZERO, ONE).allclose(RealLinearMap(-np.diag([1.0, -1, -1, -1])))
    # central differences at p = i
    p, h = I, 1e-5
    cols = []
    for e in STANDARD_BASIS.vectors():
        cols.append(((inversion(ZERO, p + e * h) - inversion(ZERO, p - e * h)) * (0.5 / h)).to_array())
    fd = np.column_stack(cols)
    assert np.allclose(inversion_differential(ZERO, p).matrix, fd, atol=1e-6)


def test_format_quaternion():
    assert format_quaternion(ZERO) == "0.0"
    assert format_quaternion(Quaternion(1, 0, -2, 0.5)) == "1.0-2.0j+0.5k"
    assert str(-K) == "-1.0k"
