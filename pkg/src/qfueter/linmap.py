"""Real linear self-maps of H, quaternionic scalar products and decompositions."""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quaternion import (
    EPS_ALG,
    ONE,
    STANDARD_BASIS,
    ZERO,
    OrthonormalBasis,
    Quaternion,
    as_quaternion,
    format_quaternion,
)

EPS_RANK = 1e-8


def left_matrix(p):
    """Matrix of x -> p x."""
    a, b, c, d = p
    return np.array([
        [a, -b, -c, -d],
        [b, a, -d, c],
        [c, d, a, -b],
        [d, -c, b, a],
    ])


def right_matrix(p):
    """Matrix of x -> x p."""
    a, b, c, d = p
    return np.array([
        [a, -b, -c, -d],
        [b, a, d, -c],
        [c, -d, a, b],
        [d, c, -b, a],
    ])


CONJ_MATRIX = np.diag([1.0, -1.0, -1.0, -1.0])


class RealLinearMap:
    """A real linear map H -> H stored as a 4x4 matrix over (1, i, j, k)."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        m = np.array(matrix, dtype=float)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        m.setflags(write=False)
        self.matrix = m

    @classmethod
    def from_function(cls, fn):
        """Sample fn on the standard basis; fn must be real linear."""
        cols = [as_quaternion(fn(e)).to_array() for e in (ONE, Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1))]
        return cls(np.column_stack(cols))

    @classmethod
    def zero(cls):
        return cls(np.zeros((4, 4)))

    @classmethod
    def identity(cls):
        return cls(np.eye(4))

    def __call__(self, q):
        return Quaternion.from_array(self.matrix @ as_quaternion(q).to_array())

    def __add__(self, other):
        return RealLinearMap(self.matrix + other.matrix)

    def __sub__(self, other):
        return RealLinearMap(self.matrix - other.matrix)

    def __neg__(self):
        return RealLinearMap(-self.matrix)

    def __mul__(self, s):
        """Real scalar multiple, or x -> Lambda(x) p for a quaternion p."""
        if isinstance(s, Quaternion):
            return self.rmul(s)
        return RealLinearMap(self.matrix * float(s))

    def __rmul__(self, s):
        if isinstance(s, Quaternion):
            return self.lmul(s)
        return RealLinearMap(self.matrix * float(s))

    def __matmul__(self, other):
        """Composition self o other."""
        return RealLinearMap(self.matrix @ other.matrix)

    def lmul(self, p):
        """x -> p Lambda(x)."""
        return RealLinearMap(left_matrix(p) @ self.matrix)

    def rmul(self, p):
        """x -> Lambda(x) p."""
        return RealLinearMap(right_matrix(p) @ self.matrix)

    def det(self):
        return float(np.linalg.det(self.matrix))

    def inverse(self):
        if rank(self) < 4:
            raise DomainError("map is not invertible")
        return RealLinearMap(np.linalg.inv(self.matrix))

    def norm_sq(self):
        return 0.25 * float(np.sum(self.matrix ** 2))

    def norm(self):
        return float(np.sqrt(self.norm_sq()))

    def allclose(self, other, tol=EPS_ALG):
        scale = max(1.0, float(np.max(np.abs(self.matrix))), float(np.max(np.abs(other.matrix))))
        return bool(np.max(np.abs(self.matrix - other.matrix)) <= tol * scale)

    def to_json(self):
        return [[float(x) for x in row] for row in self.matrix]

    def __repr__(self):
        return f"RealLinearMap({self.to_json()!r})"


def conj_map():
    """cj: x -> conj(x)."""
    return RealLinearMap(CONJ_MATRIX)


def left_mult_map(p):
    return RealLinearMap(left_matrix(p))


def right_mult_map(p):
    return RealLinearMap(right_matrix(p))


def theta_map(p):
    if p.norm_sq() == 0:
        raise DomainError("theta needs a nonzero quaternion")
    return RealLinearMap(left_matrix(p) @ right_matrix(p.inverse()))


def bar_theta_map(p):
    if p.norm_sq() == 0:
        raise DomainError("bar_theta needs a nonzero quaternion")
    return RealLinearMap(left_matrix(p) @ right_matrix(p.inverse()) @ CONJ_MATRIX)


def real_part_map():
    m = np.zeros((4, 4))
    m[0, 0] = 1.0
    return RealLinearMap(m)


def inner(G, L):
    """<G, L> = re of either quaternionic scalar product."""
    return 0.25 * float(np.sum(G.matrix * L.matrix))


def qdot_left(G, L, basis=STANDARD_BASIS):
    """(G, L)_l = 1/4 sum G(e) conj(L(e))."""
    out = ZERO
    for e in basis.vectors():
        out = out + G(e) * L(e).conj()
    return out * 0.25


def qdot_right(G, L, basis=STANDARD_BASIS):
    """(G, L)_r = 1/4 sum conj(G(e)) L(e)."""
    out = ZERO
    for e in basis.vectors():
        out = out + G(e).conj() * L(e)
    return out * 0.25


@dataclass(frozen=True)
class BarThetaDecomposition:
    """Coefficients of L = sum lam_l bar_theta_{e_l} (left) or sum bar_theta_{e_l} lam_l (right)."""

    basis: OrthonormalBasis
    side: str
    coeffs: tuple

    def terms(self):
        out = []
        for lam, e in zip(self.coeffs, self.basis.vectors()):
            t = bar_theta_map(e)
            out.append(t.lmul(lam) if self.side == "left" else t.rmul(lam))
        return out

    def assemble(self):
        total = RealLinearMap.zero()
        for t in self.terms():
            total = total + t
        return total

    def to_json(self):
        return {"basis": self.basis.to_list(), "side": self.side,
                "coeffs": [c.to_list() for c in self.coeffs]}

    def __str__(self):
        names = ("e0", "e1", "e2", "e3")
        if self.side == "left":
            return " + ".join(f"({format_quaternion(c)})T[{n}]" for c, n in zip(self.coeffs, names))
        return " + ".join(f"T[{n}]({format_quaternion(c)})" for c, n in zip(self.coeffs, names))


def decompose_bar_theta(L, basis=STANDARD_BASIS, side="left"):
    if side == "left":
        coeffs = tuple(qdot_left(L, bar_theta_map(e), basis) for e in basis.vectors())
    elif side == "right":
        coeffs = tuple(qdot_right(bar_theta_map(e), L, basis) for e in basis.vectors())
    else:
        raise ValueError("side must be 'left' or 'right'")
    return BarThetaDecomposition(basis, side, coeffs)


def from_bar_theta(coeffs, basis=STANDARD_BASIS, side="left"):
    coeffs = tuple(as_quaternion(c) for c in coeffs)
    if len(coeffs) != 4:
        raise ValueError("need four coefficients")
    return BarThetaDecomposition(basis, side, coeffs).assemble()


def _scale(L):
    return max(1.0, L.norm())


def right_regularity_defect(L, basis=STANDARD_BASIS):
    """(L, cj)_l; zero exactly for right-regular maps."""
    return qdot_left(L, conj_map(), basis)


def right_regularity_sum(L, basis=STANDARD_BASIS):
    """sum L(e_l) e_l, the second characterization of right regularity."""
    out = ZERO
    for e in basis.vectors():
        out = out + L(e) * e
    return out


def left_regularity_defect(L, basis=STANDARD_BASIS):
    return qdot_right(conj_map(), L, basis)


def is_right_regular(L, tol=EPS_ALG):
    return right_regularity_defect(L).norm() <= tol * _scale(L)


def is_left_regular(L, tol=EPS_ALG):
    return left_regularity_defect(L).norm() <= tol * _scale(L)


def singular_values(L):
    return np.linalg.svd(L.matrix, compute_uv=False)


def rank(L, tol=EPS_RANK):
    s = singular_values(L)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def inversion_differential(q0, p):
    """d tau^{q0}_p : v -> -(conj(p) - conj(q0))^-1 conj(v) (conj(p) - conj(q0))^-1."""
    q0, p = as_quaternion(q0), as_quaternion(p)
    d = (p - q0).conj()
    if d.norm_sq() == 0.0:
        raise DomainError("inversion is not differentiable at its center")
    dinv = d.inverse()
    return RealLinearMap(-(left_matrix(dinv) @ right_matrix(dinv) @ CONJ_MATRIX))


def random_quaternion(rng, scale=1.0):
    return Quaternion.from_array(rng.normal(size=4) * scale)


def random_basis(rng, orientation="positive"):
    """Haar-ish random orthonormal imaginary triple."""
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    if np.linalg.det(q) < 0:
        q[:, 2] = -q[:, 2]
    if orientation == "negative":
        q[:, 2] = -q[:, 2]
    e = [Quaternion(0.0, *q[:, n]) for n in range(3)]
    return OrthonormalBasis(*e)


def random_map(rng):
    return RealLinearMap(rng.normal(size=(4, 4)))


def random_regular_map(rng, basis=None, zero_slots=()):
    """sum_{l>=1} lam_l bar_theta_{e_l} with random coefficients; slots in zero_slots vanish."""
    basis = basis or random_basis(rng)
    coeffs = [ZERO]
    for slot in (1, 2, 3):
        coeffs.append(ZERO if slot in zero_slots else random_quaternion(rng))
    return from_bar_theta(coeffs, basis, "left")


def from_complex_pair_function(fn, basis=STANDARD_BASIS):
    """Map x = z1 + z2 e2 -> u + e2 v where (u, v) = fn(z1, z2); fn must be real linear."""
    return RealLinearMap.from_function(lambda x: basis.join_right(*fn(*basis.split_left(x))))
