"""Complex Jacobians, the adjugate map, the det(M) identity and biregularity of linear maps."""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .forms import structure_matrices
from .linmap import (
    EPS_RANK,
    conj_map,
    from_bar_theta,
    is_left_regular,
    is_right_regular,
    qdot_right,
    rank,
    right_regularity_defect,
)
from .quaternion import EPS_ALG, STANDARD_BASIS

# column order of a Jacobian: (z1, z2, conj z1, conj z2)
_CONJ_COLS = [2, 3, 0, 1]


def _require_positive(basis):
    if not basis.positive:
        raise DomainError("complex Jacobians need a positively oriented basis")


def _wirtinger_columns(fn):
    """4 columns of d(f1, f2)/d(z1, z2, conj z1, conj z2) for a real-linear fn: C^2 -> C^2."""
    out = np.zeros((2, 4), dtype=complex)
    for k, unit in enumerate(((1.0, 0.0), (0.0, 1.0))):
        at_one = np.array(fn(*unit), dtype=complex)
        at_i = np.array(fn(*(1j * u for u in unit)), dtype=complex)
        out[:, k] = 0.5 * (at_one - 1j * at_i)
        out[:, k + 2] = 0.5 * (at_one + 1j * at_i)
    return out


def _complete_rows(top):
    J = np.zeros((4, 4), dtype=complex)
    J[:2] = top
    J[2:] = np.conj(top[:, _CONJ_COLS])
    return J


@dataclass(frozen=True)
class ComplexJacobian:
    """4x4 matrix over the slice C_{e1}, rows (f1, f2, conj f1, conj f2).

    direction "lr": input z1 + z2 e2, output f1 + e2 f2.
    direction "rl": input w1 + e2 w2, output g1 + g2 e2.
    """

    basis: object
    direction: str
    entries: np.ndarray

    def apply(self, x):
        if self.direction == "lr":
            z1, z2 = self.basis.split_left(x)
        else:
            z1, z2 = self.basis.split_right(x)
        f = self.entries[:2] @ np.array([z1, z2, np.conj(z1), np.conj(z2)])
        if self.direction == "lr":
            return self.basis.join_right(f[0], f[1])
        return self.basis.join_left(f[0], f[1])

    def to_json(self):
        return [[[float(z.real), float(z.imag)] for z in row] for row in self.entries]


def jac(L, basis=STANDARD_BASIS, direction="lr"):
    _require_positive(basis)
    if direction == "lr":
        fn = lambda z1, z2: basis.split_right(L(basis.join_left(z1, z2)))
    elif direction == "rl":
        fn = lambda w1, w2: basis.split_left(L(basis.join_right(w1, w2)))
    else:
        raise ValueError("direction must be 'lr' or 'rl'")
    return ComplexJacobian(basis, direction, _complete_rows(_wirtinger_columns(fn)))


def det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _minor(m, r, c):
    return [[m[a][b] for b in range(len(m)) if b != c] for a in range(len(m)) if a != r]


def det4(m):
    return sum((-1) ** c * m[0][c] * det3(_minor(m, 0, c)) for c in range(4))


def adjugate_matrix(m):
    """Transposed cofactor matrix of a 4x4 matrix."""
    m = [[complex(x) for x in row] for row in np.asarray(m)]
    out = np.zeros((4, 4), dtype=complex)
    for r in range(4):
        for c in range(4):
            out[c, r] = (-1) ** (r + c) * det3(_minor(m, r, c))
    return out


@dataclass(frozen=True)
class ComplexPairCoefficients:
    """L(z1 + z2 e2) = m1 z1 + m2 z2 + n1 conj(z1) + n2 conj(z2) and the derived pairs a, b, c."""

    basis: object
    m1: object
    m2: object
    n1: object
    n2: object

    @property
    def a(self):
        return np.array(self.basis.split_right(self.m1 * self.basis.e2))

    @property
    def b(self):
        return np.array(self.basis.split_right(self.m2))

    @property
    def c(self):
        return np.array(self.basis.split_right(self.n1))

    def lambdas(self):
        e2 = self.basis.e2
        return (
            (self.n1 + self.n2 * e2) * 0.5,
            (self.n1 - self.n2 * e2) * 0.5,
            (self.m1 + self.m2 * e2) * 0.5,
            (self.m1 - self.m2 * e2) * 0.5,
        )

    def apply(self, x):
        z1, z2 = self.basis.split_left(x)
        s = self.basis.slice_number
        return (self.m1 * s(z1) + self.m2 * s(z2)
                + self.n1 * s(np.conj(z1)) + self.n2 * s(np.conj(z2)))

    def regular_pattern(self, tol=EPS_ALG):
        """n2 = n1 e2, the pair-form test for right regularity."""
        scale = max(1.0, self.n1.norm(), self.n2.norm())
        return (self.n2 - self.n1 * self.basis.e2).norm() <= tol * scale

    def to_json(self):
        return {k: getattr(self, k).to_list() for k in ("m1", "m2", "n1", "n2")}


def _pair_quaternions(J, basis, direction):
    """Columns of the top rows as quaternions; lr gives J1c + e2 J2c, rl gives J1c + J2c e2."""
    out = []
    e2 = basis.e2
    s = basis.slice_number
    for c in range(4):
        if direction == "lr":
            out.append(s(J[0, c]) + e2 * s(J[1, c]))
        else:
            out.append(s(J[0, c]) + s(J[1, c]) * e2)
    return out


def complex_pair_coefficients(L, basis=STANDARD_BASIS):
    J = jac(L, basis, "lr").entries
    m1, m2, n1, n2 = _pair_quaternions(J, basis, "lr")
    return ComplexPairCoefficients(basis, m1, m2, n1, n2)


def pair_coefficients_from_lambdas(lams, basis=STANDARD_BASIS):
    """Invert lam0 = (n1 + n2 e2)/2, ... for the quaternions m1, m2, n1, n2."""
    l0, l1, l2, l3 = lams
    e2 = basis.e2
    return ComplexPairCoefficients(basis, l2 + l3, -((l2 - l3) * e2), l0 + l1, -((l0 - l1) * e2))


def map_from_pair_coefficients(m1, m2, n1, n2, basis=STANDARD_BASIS):
    _require_positive(basis)
    pc = ComplexPairCoefficients(basis, m1, m2, n1, n2)
    return from_bar_theta(pc.lambdas(), basis, "left")


def right_lambdas_from_jac_rl(J, basis):
    """Right-sided coefficients of the map with Jacobian J in direction rl.

    With underline-m1 = J11 + J21 e2 etc. as the coefficients of w1, w2,
    conj w1, conj w2, the right decomposition reads
    lam0 = (n1 + e2 n2)/2, lam1 = (n1 - e2 n2)/2, lam2 = (m1 + e2 m2)/2,
    lam3 = (m1 - e2 m2)/2.
    """
    m1, m2, n1, n2 = _pair_quaternions(np.asarray(J), basis, "rl")
    e2 = basis.e2
    return (
        (n1 + e2 * n2) * 0.5,
        (n1 - e2 * n2) * 0.5,
        (m1 + e2 * m2) * 0.5,
        (m1 - e2 * m2) * 0.5,
    )


def map_from_jac_rl(J, basis=STANDARD_BASIS):
    _require_positive(basis)
    return from_bar_theta(right_lambdas_from_jac_rl(J, basis), basis, "right")


def complex_det(L, basis=STANDARD_BASIS):
    """Determinant of jac^lr; equals minus the real determinant of L."""
    return float(det4(jac(L, basis, "lr").entries).real)


def adjugate(L, basis=STANDARD_BASIS):
    """The map whose rl-Jacobian is the adjugate of the lr-Jacobian of L."""
    J = jac(L, basis, "lr").entries
    return map_from_jac_rl(adjugate_matrix(J), basis)


def adjugate_right_lambdas(L, basis=STANDARD_BASIS):
    J = jac(L, basis, "lr").entries
    return right_lambdas_from_jac_rl(adjugate_matrix(J), basis)


def det_M_identity(L, basis=STANDARD_BASIS):
    """(det M, |lam0_adj|^2 / 4) where lam0_adj = (cj, L^adjg)_r."""
    if not is_right_regular(L):
        raise DomainError(f"det(M) identity needs a right-regular map; (L, cj)_l = {right_regularity_defect(L)}")
    detM = float(np.linalg.det(structure_matrices(L, basis).M))
    lam0 = adjugate_right_lambdas(L, basis)[0]
    return detM, 0.25 * lam0.norm_sq()


def abc_criterion(pc):
    a1, a2 = pc.a
    b1, b2 = pc.b
    c1, c2 = pc.c
    cj = np.conj
    expr1 = ((abs(a2) ** 2 - abs(b2) ** 2) * c1
             + (-a1 * cj(a2) + b1 * cj(b2)) * c2
             + (a1 * b2 - a2 * b1) * cj(c2))
    expr2 = ((cj(a1) * cj(b2) - cj(a2) * cj(b1)) * c1
             + (a1 * cj(a2) - b1 * cj(b2)) * cj(c1)
             + (abs(b1) ** 2 - abs(a1) ** 2) * cj(c2))
    return complex(expr1), complex(expr2)


def abc_scale(pc):
    return (np.linalg.norm(pc.a) + np.linalg.norm(pc.b) + np.linalg.norm(pc.c)) ** 3


def abc_vanishes(pc, tol=1e-9):
    e1, e2 = abc_criterion(pc)
    scale = abc_scale(pc)
    return abs(e1) <= tol * scale and abs(e2) <= tol * scale


def hermitian(u, v):
    return complex(np.sum(np.asarray(u) * np.conj(v)))


def hermitian_M(pc):
    """M of a regular map rebuilt from the pairs a, b, c."""
    a, b, c = pc.a, pc.b, pc.c
    m = np.zeros((3, 3))
    m[0, 0] = hermitian(c, c).real
    m[1, 1] = 0.25 * hermitian(a - b, a - b).real
    m[2, 2] = 0.25 * hermitian(a + b, a + b).real
    m[0, 1] = m[1, 0] = 0.5 * hermitian(1j * c, a - b).real
    # <lam1 e1, lam3 e3> = -<n1, m1 e2 + m2>/2, hence the minus sign
    m[0, 2] = m[2, 0] = -0.5 * hermitian(c, a + b).real
    m[1, 2] = m[2, 1] = 0.25 * hermitian(-a + b, 1j * (a + b)).real
    return m


def is_rl_biregular(L, tol=EPS_RANK):
    """Right-regular, invertible, with left-regular inverse."""
    if not is_right_regular(L) or rank(L, tol) < 4:
        return False
    return is_left_regular(L.inverse(), 1e-9)


def rl_biregular_via_det(L, tol=EPS_RANK):
    """Rank 4 and det M = 0, the equivalent test."""
    if not is_right_regular(L) or rank(L, tol) < 4:
        return False
    M = structure_matrices(L).M
    return abs(np.linalg.det(M)) <= tol * max(np.trace(M), 1e-300) ** 3


def adjugate_is_left_regular(L):
    adj = adjugate(L)
    scale = max(1.0, L.norm() ** 3)
    return qdot_right(conj_map(), adj).norm() <= 1e-9 * scale
