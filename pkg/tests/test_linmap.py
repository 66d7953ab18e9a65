import numpy as np
import pytest
from hypothesis import given

from conftest import bases, maps, nonzero_quaternions, positive_bases, regular_maps, rngs
from qfueter.linmap import (
    RealLinearMap,
    bar_theta_map,
    conj_map,
    decompose_bar_theta,
    from_bar_theta,
    from_complex_pair_function,
    inner,
    is_left_regular,
    is_right_regular,
    left_mult_map,
    qdot_left,
    qdot_right,
    random_regular_map,
    rank,
    real_part_map,
    right_mult_map,
)
from qfueter.quaternion import I, J, K, ONE, ZERO, Quaternion, dot, isclose


def test_matrix_columns_are_images_of_the_basis():
    L = left_mult_map(I)
    assert L(ONE) == I and L(J) == K
    R = right_mult_map(I)
    assert R(J) == -K
    assert np.allclose(conj_map().matrix, np.diag([1.0, -1, -1, -1]))


@given(nonzero_quaternions, nonzero_quaternions)
def test_qdot_of_bar_thetas(p, q):
    # (T_u, T_v)_l = <u, v> u conj(v) for unit u, v
    u, v = p * (1 / p.norm()), q * (1 / q.norm())
    got = qdot_left(bar_theta_map(u), bar_theta_map(v))
    assert isclose(got, u * v.conj() * dot(u, v), 1e-9)
    assert isclose(qdot_left(bar_theta_map(u), bar_theta_map(u)), ONE, 1e-9)


@given(maps, maps, bases)
def test_qdot_does_not_depend_on_the_basis(G, L, b):
    assert isclose(qdot_left(G, L, b), qdot_left(G, L), 1e-9)
    assert isclose(qdot_right(G, L, b), qdot_right(G, L), 1e-9)


@given(maps, maps)
def test_real_part_of_qdot_is_the_inner_product(G, L):
    assert abs(qdot_left(G, L).x0 - inner(G, L)) < 1e-9
    assert abs(qdot_right(G, L).x0 - inner(G, L)) < 1e-9
    assert abs(inner(L, L) - L.norm_sq()) < 1e-9


@given(maps, bases)
def test_decomposition_round_trip(L, b):
    for side in ("left", "right"):
        dec = decompose_bar_theta(L, b, side)
        assert dec.assemble().allclose(L, 1e-9)
        assert from_bar_theta(dec.coeffs, b, side).allclose(L, 1e-9)


@given(maps, bases)
def test_norm_is_sum_of_coefficient_norms(L, b):
    dec = decompose_bar_theta(L, b)
    assert abs(sum(c.norm_sq() for c in dec.coeffs) - L.norm_sq()) < 1e-9 * (1 + L.norm_sq())


@given(maps)
def test_right_regular_iff_first_coefficient_vanishes(L):
    lam0 = decompose_bar_theta(L).coeffs[0]
    L0 = L - bar_theta_map(ONE).lmul(lam0)
    assert is_right_regular(L0)
    assert is_right_regular(L) == (lam0.norm() <= 1e-12 * max(1.0, L.norm()))


@given(regular_maps)
def test_regular_maps_never_have_rank_one(L):
    assert is_right_regular(L)
    assert rank(L) != 1


def test_regularity_examples():
    assert not is_right_regular(conj_map())
    assert is_right_regular(bar_theta_map(I))
    assert is_left_regular(bar_theta_map(I))
    assert not is_right_regular(real_part_map())
    assert not is_left_regular(real_part_map())


def test_left_and_right_regularity_differ():
    # i bar_theta_i is right regular; sum e i bar_theta_i(e) = 4i, so not left regular
    L = from_bar_theta([ZERO, I, ZERO, ZERO])
    assert is_right_regular(L)
    assert not is_left_regular(L)
    assert is_left_regular(from_bar_theta([ZERO, J, ZERO, ZERO]))


def test_rank_examples():
    assert rank(RealLinearMap.zero()) == 0
    assert rank(RealLinearMap.identity()) == 4
    assert rank(real_part_map()) == 1
    assert rank(from_complex_pair_function(lambda z1, z2: (z1, 0))) == 2
    assert rank(from_complex_pair_function(lambda z1, z2: (z1 + z1.conjugate(), z2.conjugate()))) == 3


@given(rngs, positive_bases)
def test_random_regular_map_respects_zero_slots(rng, b):
    L = random_regular_map(rng, b, zero_slots=(2,))
    dec = decompose_bar_theta(L, b)
    assert dec.coeffs[0].norm() < 1e-12 and dec.coeffs[2].norm() < 1e-12


def test_real_part_coefficients():
    dec = decompose_bar_theta(real_part_map())
    for c in dec.coeffs:
        assert isclose(c, Quaternion(0.25), 1e-12)


def test_from_bar_theta_rejects_wrong_arity():
    with pytest.raises(ValueError):
        from_bar_theta([ONE, ZERO])
