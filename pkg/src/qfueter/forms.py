"""Structure forms A, M, the map L_Lambda, the quadratic form Q and complex-linearity classification."""

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .linmap import (
    EPS_RANK,
    RealLinearMap,
    bar_theta_map,
    decompose_bar_theta,
    inner,
    is_right_regular,
    left_matrix,
    right_matrix,
    right_regularity_defect,
)
from .quaternion import EPS_ALG, STANDARD_BASIS, ImaginaryUnit, Quaternion, as_quaternion, dot


def form_A_direct(L, p, q):
    """<R_p o L, L o L_q> straight from the definition."""
    p, q = as_quaternion(p), as_quaternion(q)
    return inner(RealLinearMap(right_matrix(p) @ L.matrix), RealLinearMap(L.matrix @ left_matrix(q)))


def direct_A_matrix(L, basis=STANDARD_BASIS):
    units = (basis.e1, basis.e2, basis.e3)
    return np.array([[form_A_direct(L, p, q) for q in units] for p in units])


def _cyclic(a, b):
    return 1.0 if (a, b) in ((1, 2), (2, 3), (3, 1)) else -1.0


def closed_form_A(coeffs, basis):
    """A from the left decomposition coefficients lam_0..lam_3 of L in `basis`."""
    lam = list(coeffs)
    e = basis.vectors()
    sq = [c.norm_sq() for c in lam]
    weighted = [lam[n] * e[n] for n in range(4)]
    orient = 1.0 if basis.positive else -1.0
    A = np.zeros((3, 3))
    for a in (1, 2, 3):
        A[a - 1, a - 1] = -sq[0] - sq[a] + sum(sq[b] for b in (1, 2, 3) if b != a)
        for b in (1, 2, 3):
            if b == a:
                continue
            c = 6 - a - b
            A[a - 1, b - 1] = (-2.0 * dot(weighted[a], weighted[b])
                               + 2.0 * orient * _cyclic(a, b) * dot(lam[0], weighted[c]))
    return A


def m_from_a(A):
    return 0.5 * (np.trace(A) * np.eye(3) - A)


def symmetric_eigen(S):
    """Ascending eigenpairs of a symmetric 3x3 matrix; each eigenvector has its largest entry positive."""
    S = 0.5 * (np.asarray(S, dtype=float) + np.asarray(S, dtype=float).T)
    w, V = np.linalg.eigh(S)
    for n in range(V.shape[1]):
        v = V[:, n]
        if v[np.argmax(np.abs(v))] < 0:
            V[:, n] = -v
    return w, V


@dataclass(frozen=True)
class StructureMatrices:
    basis: object
    A: np.ndarray
    M: np.ndarray
    trace: float
    norm_sq: float
    regular: bool
    size: int | None = None

    def L_of(self, g):
        """L_Lambda(g) as an imaginary quaternion."""
        G = self.basis.imag_coords(as_quaternion(g))
        return self.basis.from_imag_coords(self.A @ G)

    def A_form(self, h, g):
        return float(self.basis.imag_coords(as_quaternion(h)) @ self.A @ self.basis.imag_coords(as_quaternion(g)))

    def Q_matrix(self):
        return self.A.T @ self.A

    def to_json(self):
        return {
            "basis": self.basis.to_list(),
            "A": [[float(x) for x in row] for row in self.A],
            "M": [[float(x) for x in row] for row in self.M],
            "trace": float(self.trace),
            "size": self.size,
        }


def structure_matrices(L, basis=STANDARD_BASIS, tol=EPS_RANK):
    dec = decompose_bar_theta(L, basis, "left")
    A = closed_form_A(dec.coeffs, basis)
    M = m_from_a(A)
    regular = is_right_regular(L)
    s = _size_from_M(M, tol) if regular else None
    return StructureMatrices(basis, A, M, float(np.trace(A)), L.norm_sq(), regular, s)


def _size_from_M(M, tol):
    tr = float(np.trace(M))
    if tr <= 0.0:
        return 0
    w, _ = symmetric_eigen(M)
    return int(np.sum(w > tol * tr))


def _require_regular(L, what):
    if not is_right_regular(L):
        d = right_regularity_defect(L)
        raise DomainError(f"{what} needs a right-regular map; (L, cj)_l = {d} is not zero")


def size(L, tol=EPS_RANK):
    """Number of nonzero terms in a minimal bar-theta decomposition (rank of M)."""
    _require_regular(L, "size")
    return structure_matrices(L, STANDARD_BASIS, tol).size


def L_map(L, g, basis=STANDARD_BASIS):
    return structure_matrices(L, basis).L_of(g)


def form_Q(L, g):
    return L_map(L, g).norm_sq()


def complex_linearity_defect(L, g, h):
    """|| L + R_h o L o L_g ||."""
    g, h = as_quaternion(g), as_quaternion(h)
    D = L.matrix + right_matrix(h) @ L.matrix @ left_matrix(g)
    return float(np.sqrt(0.25 * np.sum(D ** 2)))


def is_complex_linear(L, g, h, tol=EPS_ALG):
    """L(g x) = L(x) h for all x."""
    return complex_linearity_defect(L, g, h) < tol * max(1.0, L.norm())


@dataclass(frozen=True)
class ComplexLinearitySolution:
    """Solution set of L(g x) = L(x) h over pairs of imaginary units.

    kind is one of "empty", "antipodal_pair", "graph", "all".  For an
    antipodal pair the solutions are (unit, partner) and (-unit, -partner).
    For a graph every g has exactly one partner h = h_matrix @ g.
    size and c_value are None for maps that are not right-regular.
    """

    kind: str
    size: int | None
    c_value: int | None
    unit: ImaginaryUnit | None = None
    partner: ImaginaryUnit | None = None
    h_matrix: np.ndarray | None = field(default=None, compare=False)

    def partner_of(self, g):
        """The h completing g, or None when g admits none; for kind 'all' returns None too."""
        g = as_quaternion(g)
        if self.kind == "graph":
            v = self.h_matrix @ g.imag_vector()
            return ImaginaryUnit.from_vector(v)
        if self.kind == "antipodal_pair":
            d = dot(g, self.unit)
            if abs(abs(d) - 1.0) < 1e-8:
                return self.partner if d > 0 else ImaginaryUnit(-self.partner)
        return None

    def admits(self, g, h, tol=1e-8):
        if self.kind == "all":
            return True
        if self.kind == "empty":
            return False
        p = self.partner_of(g)
        return p is not None and (as_quaternion(h) - p).norm() < tol

    def to_json(self):
        return {
            "kind": self.kind,
            "size": self.size,
            "c_value": self.c_value,
            "unit": None if self.unit is None else self.unit.to_list(),
            "partner": None if self.partner is None else self.partner.to_list(),
        }


def _std_vector(basis, v):
    return basis.imag_matrix() @ v


def classify_complex_linearity(L, basis=STANDARD_BASIS, tol=EPS_RANK):
    """All (g, h) with L complex linear from (H, L_g) to (H, R_h).

    Right-regular maps are classified through the kernel of M.  Other maps
    fall back on the top eigenspace of Q = A^T A, which has dimension 0, 1
    or 3.
    """
    sm = structure_matrices(L, basis, tol)
    if sm.regular:
        return _classify_regular(L, sm)
    return _classify_general(L, sm)


def _classify_regular(L, sm):
    s = sm.size
    if s == 0:
        return ComplexLinearitySolution("all", 0, 3)
    if s == 3:
        return ComplexLinearitySolution("empty", 3, 0)
    w, V = symmetric_eigen(sm.M)
    if s == 2:
        g = ImaginaryUnit.from_vector(_std_vector(sm.basis, V[:, 0]))
        g = ImaginaryUnit.from_vector(_sign_fixed(g.imag_vector()))
        return ComplexLinearitySolution("antipodal_pair", 2, 1, g, g)
    e1 = ImaginaryUnit.from_vector(_sign_fixed(_std_vector(sm.basis, V[:, 2])))
    H = bar_theta_map(e1).matrix[1:, 1:]
    return ComplexLinearitySolution("graph", 1, 2, e1, None, H)


def _sign_fixed(v):
    v = np.asarray(v, dtype=float)
    return -v if v[np.argmax(np.abs(v))] < 0 else v


def _classify_general(L, sm):
    n2 = sm.norm_sq
    n4 = n2 ** 2
    w, V = symmetric_eigen(sm.Q_matrix())
    hits = int(np.sum(np.abs(w - n4) <= EPS_ALG * n4))
    R = sm.basis.imag_matrix()
    H = R @ sm.A @ R.T / n2
    if hits == 0:
        return ComplexLinearitySolution("empty", None, None)
    if hits == 1:
        g = ImaginaryUnit.from_vector(_sign_fixed(R @ V[:, 2]))
        return ComplexLinearitySolution("antipodal_pair", None, None, g,
                                        ImaginaryUnit.from_vector(H @ g.imag_vector()), H)
    return ComplexLinearitySolution("graph", None, None, None, None, H)


def max_eigen_holomorphy_check(L, basis=STANDARD_BASIS):
    """Top eigenvalue of A^T A equals ||L||^4 exactly when some (g, h) makes L complex linear."""
    sm = structure_matrices(L, basis)
    n4 = sm.norm_sq ** 2
    if n4 == 0.0:
        return True
    w, _ = symmetric_eigen(sm.Q_matrix())
    return bool(abs(w[-1] - n4) <= EPS_ALG * n4)


def complex_linear_projection(L, g, h):
    """Orthogonal projection onto maps with L(g x) = L(x) h: (L - R_h L L_g) / 2."""
    g, h = as_quaternion(g), as_quaternion(h)
    return RealLinearMap(0.5 * (L.matrix - right_matrix(h) @ L.matrix @ left_matrix(g)))


def lambda_hat_map(g):
    """x -> <g, x> - g <1, x>, a regular map of size 2 complex linear for (g, g)."""
    g = as_quaternion(g)
    return RealLinearMap.from_function(lambda x: Quaternion(dot(g, x)) - g * x.x0)
