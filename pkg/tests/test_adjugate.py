import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import maps, positive_bases, regular_maps, rngs
from qfueter.adjugate import (
    abc_criterion,
    adjugate,
    adjugate_is_left_regular,
    adjugate_matrix,
    complex_det,
    complex_pair_coefficients,
    det4,
    det_M_identity,
    hermitian_M,
    is_rl_biregular,
    jac,
    map_from_pair_coefficients,
    rl_biregular_via_det,
)
from qfueter.errors import DomainError
from qfueter.forms import size, structure_matrices
from qfueter.linmap import (
    RealLinearMap,
    bar_theta_map,
    conj_map,
    from_bar_theta,
    from_complex_pair_function,
    is_left_regular,
    is_right_regular,
    random_basis,
    random_regular_map,
    rank,
)
from qfueter.quaternion import I, J, K, ONE, ZERO, OrthonormalBasis, Quaternion

# rows (f1, f2, conj f1, conj f2), columns (z1, z2, conj z1, conj z2)
IDENTITY_JAC = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex)


def test_identity_jacobian_is_a_permutation():
    # x = z1 + z2 j = z1 + j conj(z2), so f2 = conj(z2)
    assert np.allclose(jac(RealLinearMap.identity()).entries, IDENTITY_JAC)
    assert np.allclose(jac(RealLinearMap.identity(), direction="rl").entries, IDENTITY_JAC)


def test_jacobian_example():
    L = from_complex_pair_function(lambda z1, z2: (2 * z1 + 1j * z2.conjugate(), z1.conjugate() - z2))
    J4 = jac(L).entries
    assert np.allclose(J4[0], [2, 0, 0, 1j])
    assert np.allclose(J4[1], [0, -1, 1, 0])
    assert np.allclose(J4[2], [0, -1j, 2, 0])


@given(maps)
def test_jacobian_reproduces_the_map(L):
    x = Quaternion(0.3, -1.1, 0.7, 2.0)
    for direction in ("lr", "rl"):
        assert (jac(L, direction=direction).apply(x) - L(x)).norm() < 1e-9 * (1 + L.norm())


def test_jacobian_needs_positive_basis():
    with pytest.raises(DomainError):
        jac(RealLinearMap.identity(), OrthonormalBasis(J, I, K))


@given(maps)
def test_complex_determinant_is_minus_real_determinant(L):
    assert abs(complex_det(L) + L.det()) < 1e-9 * (1 + abs(L.det()) + L.norm() ** 4)
    J4 = jac(L).entries
    assert abs(det4(J4) - np.linalg.det(J4)) < 1e-9 * (1 + L.norm() ** 4)


@settings(max_examples=10)
@given(rngs)
def test_cofactor_adjugate_matches_sympy(rng):
    m = rng.integers(-4, 5, size=(4, 4)) + 1j * rng.integers(-4, 5, size=(4, 4))
    exact = sympy.Matrix(4, 4, [sympy.Integer(int(z.real)) + sympy.I * int(z.imag) for z in m.ravel()]).adjugate()
    expected = np.array([[complex(exact[r, c]) for c in range(4)] for r in range(4)])
    assert np.allclose(adjugate_matrix(m), expected)


@given(maps)
def test_adjugate_inverts_up_to_complex_determinant(L):
    adj = adjugate(L)
    d = complex_det(L)
    tol = 1e-8 * (1 + L.norm() ** 4)
    assert np.abs(L.matrix @ adj.matrix - d * np.eye(4)).max() < tol
    assert np.abs(adj.matrix @ L.matrix - d * np.eye(4)).max() < tol


def test_adjugate_of_identity_is_minus_identity():
    assert adjugate(RealLinearMap.identity()).allclose(-RealLinearMap.identity())


def test_adjugate_of_low_rank_maps_vanishes():
    L = from_complex_pair_function(lambda z1, z2: (z1, 0))
    assert rank(L) == 2
    assert adjugate(L).allclose(RealLinearMap.zero(), 1e-12)


def test_adjugate_of_rank_three_map_has_rank_one():
    L = from_complex_pair_function(lambda z1, z2: (z1 + z1.conjugate(), z2.conjugate()))
    assert rank(L) == 3
    adj = adjugate(L)
    assert rank(adj) == 1
    assert np.allclose(L.matrix @ adj.matrix, 0)


@given(maps)
def test_pair_coefficients_round_trip(L):
    pc = complex_pair_coefficients(L)
    assert map_from_pair_coefficients(pc.m1, pc.m2, pc.n1, pc.n2).allclose(L, 1e-9)
    x = Quaternion(1.5, 0.2, -0.4, 0.9)
    assert (pc.apply(x) - L(x)).norm() < 1e-9 * (1 + L.norm())


@given(maps)
def test_regular_pattern_matches_regularity(L):
    assert complex_pair_coefficients(L).regular_pattern() == is_right_regular(L)


@given(regular_maps)
def test_det_M_identity(L):
    detM, q = det_M_identity(L)
    assert abs(detM - q) < 1e-9 * (1 + L.norm_sq() ** 3)


def test_det_M_identity_needs_regular_maps():
    with pytest.raises(DomainError):
        det_M_identity(conj_map())


@given(regular_maps)
def test_det_M_from_the_cubic_expressions(L):
    e1, e2 = abc_criterion(complex_pair_coefficients(L))
    detM = np.linalg.det(structure_matrices(L).M)
    assert abs(16 * detM - (abs(e1) ** 2 + abs(e2) ** 2)) < 1e-8 * (1 + L.norm_sq() ** 3)


@given(regular_maps)
def test_M_from_hermitian_products(L):
    pc = complex_pair_coefficients(L)
    assert np.allclose(hermitian_M(pc), structure_matrices(L).M, atol=1e-9 * (1 + L.norm_sq()))


@given(regular_maps, positive_bases)
def test_M_from_hermitian_products_any_basis(L, b):
    pc = complex_pair_coefficients(L, b)
    assert np.allclose(hermitian_M(pc), structure_matrices(L, b).M, atol=1e-9 * (1 + L.norm_sq()))


def test_biregular_examples():
    assert is_rl_biregular(bar_theta_map(I))
    assert not is_rl_biregular(from_bar_theta([ZERO, ONE, ONE, ONE]))
    assert not is_rl_biregular(conj_map())
    # size 2 and invertible
    L = from_bar_theta([ZERO, ONE, 2 * ONE, ZERO])
    assert rank(L) == 4 and size(L) == 2
    assert abs(L.det() + 9) < 1e-12
    assert is_rl_biregular(L) and rl_biregular_via_det(L)
    # z1 + conj(z1) + j conj(z2): singular, size 3
    L = map_from_pair_coefficients(ONE, ZERO, ONE, J)
    assert rank(L) == 3 and size(L) == 3
    assert abs(np.linalg.det(structure_matrices(L).M) - 0.0625) < 1e-12
    assert not is_rl_biregular(L) and not rl_biregular_via_det(L)


@settings(max_examples=40)
@given(rngs, st.sampled_from([(), (3,)]))
def test_biregularity_equivalences(rng, zero_slots):
    L = random_regular_map(rng, random_basis(rng), zero_slots)
    if rank(L) < 4:
        return
    small = size(L) <= 2
    detM = np.linalg.det(structure_matrices(L).M)
    flat = abs(detM) <= 1e-9 * (1 + L.norm_sq() ** 3)
    assert small == bool(zero_slots)
    assert small == flat
    assert small == adjugate_is_left_regular(L)
    assert small == is_rl_biregular(L)
    assert small == rl_biregular_via_det(L)
    if small:
        assert L.det() < 0
        assert is_left_regular(adjugate(L), 1e-9)


def test_pair_coefficient_examples():
    pc = complex_pair_coefficients(bar_theta_map(I))
    for got, want in zip((pc.m1, pc.m2, pc.n1, pc.n2), (ZERO, ZERO, ONE, J)):
        assert (got - want).norm() < 1e-12
    pc = complex_pair_coefficients(from_complex_pair_function(lambda z1, z2: (-1j * z1, 0)))
    for got, want in zip((pc.m1, pc.m2, pc.n1, pc.n2), (-I, ZERO, ZERO, ZERO)):
        assert (got - want).norm() < 1e-12
    pc = complex_pair_coefficients(RealLinearMap.zero())
    assert all(q.norm() == 0 for q in (pc.m1, pc.m2, pc.n1, pc.n2))


def _diagonal_M_map(rng):
    # lam_l e_l mutually orthogonal makes their Gram matrix diagonal
    Q, _ = np.linalg.qr(rng.normal(size=(4, 4)))
    coeffs = [ZERO]
    for n, e in enumerate((I, J, K)):
        v = Quaternion.from_array(Q[:, n] * rng.uniform(0.5, 2))
        coeffs.append(v * e.inverse())
    return from_bar_theta(coeffs)


@given(rngs)
def test_diagonal_M_conditions(rng):
    L = _diagonal_M_map(rng)
    M = structure_matrices(L).M
    assert np.allclose(M, np.diag(np.diag(M)), atol=1e-9)
    pc = complex_pair_coefficients(L)
    (a1, a2), (b1, b2), (c1, c2) = pc.a, pc.b, pc.c
    cj = np.conj
    assert abs(cj(a1) * c1 + cj(a2) * c2 + b1 * cj(c1) + b2 * cj(c2)) < 1e-9
    assert abs((a1 * cj(b1) + a2 * cj(b2)).imag) < 1e-9
    n = np.linalg.norm
    expected = n(pc.a + pc.b) ** 2 * n(pc.a - pc.b) ** 2 * n(pc.c) ** 2 / 16
    assert abs(np.linalg.det(M) - expected) < 1e-9 * (1 + L.norm_sq() ** 3)
