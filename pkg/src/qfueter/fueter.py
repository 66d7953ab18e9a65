"""Regular polynomial functions H -> H: Fueter operators, differentials and classification."""

import itertools
from dataclasses import dataclass, field

import numpy as np

from .adjugate import map_from_pair_coefficients
from .errors import DomainError, NotRegularError
from .forms import classify_complex_linearity, structure_matrices, symmetric_eigen
from .linmap import EPS_RANK, RealLinearMap, decompose_bar_theta, from_bar_theta, rank
from .polynomial import Polynomial
from .quaternion import (
    ONE,
    STANDARD_BASIS,
    ImaginaryUnit,
    Quaternion,
    as_quaternion,
    bar_theta,
    complete_basis,
    dot,
)

PARTIALS = ("z1", "z2", "zb1", "zb2")
_B = STANDARD_BASIS


def _split(p):
    p = as_quaternion(p)
    return complex(p.x0, p.x1), complex(p.x2, p.x3)


def _join(u, v):
    """u + j v for u, v in the slice of i."""
    return _B.join_right(u, v)


class QPolynomialFunction:
    """f(z1 + z2 j) = f1(z1, z2) + j f2(z1, z2) with f1, f2 complex polynomials."""

    def __init__(self, f1, f2):
        self.f1 = f1 if isinstance(f1, Polynomial) else Polynomial.constant(f1)
        self.f2 = f2 if isinstance(f2, Polynomial) else Polynomial.constant(f2)
        self._partials = {
            (k, v): poly.diff(v) for k, poly in ((1, self.f1), (2, self.f2)) for v in PARTIALS
        }

    def __call__(self, p):
        z1, z2 = _split(p)
        return _join(self.f1(z1, z2), self.f2(z1, z2))

    def __eq__(self, other):
        if not isinstance(other, QPolynomialFunction):
            return NotImplemented
        return self.f1 == other.f1 and self.f2 == other.f2

    __hash__ = None

    def partial(self, k, var):
        return self._partials[(k, var)]

    def partials_at(self, p):
        """Dict (k, var) -> d f_k / d var at p, var in z1, z2, zb1, zb2."""
        z1, z2 = _split(p)
        return {key: complex(poly(z1, z2)) for key, poly in self._partials.items()}

    def degree(self):
        return max(self.f1.degree(), self.f2.degree())

    def is_constant(self):
        return self.f1.is_constant() and self.f2.is_constant()

    def __repr__(self):
        return f"QPolynomialFunction({self.f1!r}, {self.f2!r})"


def _crf_pair(d):
    cj = np.conj
    u = d[(1, "zb1")] - cj(d[(2, "zb2")])
    v = d[(2, "zb1")] + cj(d[(1, "zb2")])
    return u, v


def crf_right(F, p):
    """The right Cauchy-Riemann-Fueter operator of F at p."""
    return _join(*_crf_pair(F.partials_at(p)))


def crf_right_polynomials(F):
    u = F.partial(1, "zb1") - F.partial(2, "zb2").conj()
    v = F.partial(2, "zb1") + F.partial(1, "zb2").conj()
    return u, v


def crf_left(F, p):
    """1/2 sum e_l df(e_l), the left operator."""
    D = differential_at(F, p)
    out = Quaternion()
    for e in _B.vectors():
        out = out + e * D(e)
    return out * 0.5


def crf_right_real(F, p):
    """1/2 sum df(e_l) e_l, the right operator in real coordinates."""
    D = differential_at(F, p)
    out = Quaternion()
    for e in _B.vectors():
        out = out + D(e) * e
    return out * 0.5


def _lambda_coeffs(d):
    cj = np.conj
    half = 0.5
    return (
        _join(d[(1, "zb1")] - cj(d[(2, "zb2")]), d[(2, "zb1")] + cj(d[(1, "zb2")])) * half,
        _join(d[(1, "zb1")] + cj(d[(2, "zb2")]), d[(2, "zb1")] - cj(d[(1, "zb2")])) * half,
        _join(d[(1, "z1")] - cj(d[(2, "z2")]), d[(2, "z1")] + cj(d[(1, "z2")])) * half,
        _join(d[(1, "z1")] + cj(d[(2, "z2")]), d[(2, "z1")] - cj(d[(1, "z2")])) * half,
    )


def differential_coefficients(F, p):
    """Left bar-theta coefficients of df_p in the standard basis."""
    return _lambda_coeffs(F.partials_at(p))


def differential_at(F, p):
    return from_bar_theta(differential_coefficients(F, p), _B, "left")


def differential_from_pairs(F, p):
    """df_p assembled from m_k = df_1/dz_k + j df_2/dz_k, n_k likewise with conjugate variables."""
    d = F.partials_at(p)
    q = [_join(d[(1, v)], d[(2, v)]) for v in PARTIALS]
    return map_from_pair_coefficients(q[0], q[1], q[2], q[3], _B)


def differential_fd(F, p, step=1e-5):
    p = as_quaternion(p)
    cols = []
    for e in _B.vectors():
        cols.append(((F(p + e * step) - F(p - e * step)) * (0.5 / step)).to_array())
    return RealLinearMap(np.column_stack(cols))


def holomorphy_criterion(F, p):
    """The two cubic expressions in the partials; both vanish iff df_p is complex linear for some (g, h)."""
    d = F.partials_at(p)
    cj = np.conj
    f1z1, f1z2, f1b1 = d[(1, "z1")], d[(1, "z2")], d[(1, "zb1")]
    f2z1, f2z2, f2b1 = d[(2, "z1")], d[(2, "z2")], d[(2, "zb1")]
    mixed = cj(f2z1) * f1z1 + f1z2 * cj(f2z2)
    e1 = ((abs(f1z1) ** 2 - abs(f2z2) ** 2) * f1b1
          + mixed * f2b1
          - (cj(f2z1) * f2z2 + cj(f1z1) * f1z2) * cj(f2b1))
    e2 = ((f2z1 * cj(f2z2) + f1z1 * cj(f1z2)) * f1b1
          + mixed * cj(f1b1)
          - (abs(f1z2) ** 2 - abs(f2z1) ** 2) * cj(f2b1))
    return complex(e1), complex(e2)


def criterion_scale(F, p):
    d = F.partials_at(p)
    return sum(abs(v) for v in d.values()) ** 3


def _sample_points(n=12, seed=20240917):
    rng = np.random.default_rng(seed)
    pts = [Quaternion(), *_B.vectors()]
    pts += [Quaternion.from_array(rng.uniform(-1, 1, 4)) for _ in range(n - len(pts))]
    return pts


def check_right_regular(F, tol=1e-12):
    """Raise NotRegularError with a witness point unless F is right Fueter-regular."""
    u, v = crf_right_polynomials(F)
    scale = max(1.0, F.f1.max_coeff(), F.f2.max_coeff())
    if u.is_zero(tol * scale) and v.is_zero(tol * scale):
        return
    best = max(_sample_points(), key=lambda p: crf_right(F, p).norm())
    value = crf_right(F, best)
    raise NotRegularError(f"function is not right Fueter-regular: crf_right = {value} at {best}",
                          witness=best, value=value)


def is_right_regular_function(F):
    try:
        check_right_regular(F)
    except NotRegularError:
        return False
    return True


# size/rank pairs allowed for differentials of regular functions
ALLOWED_SIZE_RANK = {0: {0}, 1: {4}, 2: {2, 4}, 3: {3, 4}}


@dataclass(frozen=True)
class PointClassification:
    point: Quaternion
    size: int
    rank: int
    solutions: object
    criterion_values: tuple
    M: np.ndarray = field(compare=False)

    def to_json(self):
        return {
            "point": self.point.to_list(),
            "size": self.size,
            "rank": self.rank,
            "solutions": self.solutions.to_json(),
            "criterion": [[v.real, v.imag] for v in self.criterion_values],
            "M": [[float(x) for x in row] for row in self.M],
        }


def _normalized(D):
    # size, rank and kernels are scale invariant; rescaling keeps M from underflowing
    s = float(np.abs(D.matrix).max())
    return (RealLinearMap(D.matrix / s), s) if s > 0 else (D, 1.0)


def classify_at(F, p, tol=EPS_RANK, checked=False):
    if not checked:
        check_right_regular(F)
    p = as_quaternion(p)
    D, s = _normalized(differential_at(F, p))
    sm = structure_matrices(D, _B, tol)
    sol = classify_complex_linearity(D, _B, tol)
    return PointClassification(p, sm.size, rank(D, tol), sol, holomorphy_criterion(F, p), sm.M * s * s)


class StepTooLargeError(DomainError):
    code = "step_too_large"


def structure_field(F, path, tol=EPS_RANK):
    """Unit kernel vector of M along a path, signs chosen by continuity."""
    check_right_regular(F)
    out = []
    for n, p in enumerate(path):
        p = as_quaternion(p)
        D, _ = _normalized(differential_at(F, p))
        sm = structure_matrices(D, _B, tol)
        if sm.size != 2:
            raise DomainError(f"path point {n} ({p}) has size {sm.size}, not 2")
        _, V = symmetric_eigen(sm.M)
        v = V[:, 0]
        if out:
            prev = out[-1].imag_vector()
            d = float(np.dot(v, prev))
            if abs(d) < 1e-3:
                raise StepTooLargeError(f"sign of the structure field is ambiguous between points {n - 1} and {n}")
            if d < 0:
                v = -v
        out.append(ImaginaryUnit.from_vector(v))
    return out


@dataclass(frozen=True)
class ConformalAffine:
    """f(x) = lam bar_theta_g(x) + mu."""

    g: ImaginaryUnit
    lam: Quaternion
    mu: Quaternion
    absolutely_biregular: bool
    inverse_lam: Quaternion
    inverse_mu: Quaternion

    def __call__(self, x):
        return self.lam * bar_theta(self.g, as_quaternion(x)) + self.mu

    def inverse(self, y):
        return bar_theta(self.g, as_quaternion(y)) * self.inverse_lam + self.inverse_mu

    def to_json(self):
        return {
            "g": self.g.to_list(),
            "lambda": self.lam.to_list(),
            "mu": self.mu.to_list(),
            "absolutely_biregular": self.absolutely_biregular,
            "inverse": {"lambda": self.inverse_lam.to_list(), "mu": self.inverse_mu.to_list()},
        }


def conformal_affine_recover(F, points=None, tol=EPS_RANK):
    check_right_regular(F)
    points = points or _sample_points()
    D = differential_at(F, points[0])
    for p in points:
        Dp = differential_at(F, p)
        s = structure_matrices(Dp, _B, tol).size
        if s != 1:
            raise DomainError(f"differential at {p} has size {s}, not 1")
        if not Dp.allclose(D, 1e-9):
            raise DomainError(f"differential is not constant (differs at {p})")
    sol = classify_complex_linearity(D, _B, tol)
    g = sol.unit
    lam = D(ONE) * bar_theta(g, ONE).inverse()
    lam_dec = decompose_bar_theta(D, complete_basis(g, slot=1), "left").coeffs[1]
    if not (lam - lam_dec).norm() <= 1e-9 * max(1.0, lam.norm()):
        raise DomainError("conformal coefficient extraction is inconsistent")
    mu = F(Quaternion())
    biregular = abs(dot(lam, g)) <= 1e-9 * lam.norm()
    linv = lam.inverse()
    return ConformalAffine(g, lam, mu, biregular, bar_theta(g, linv), -bar_theta(g, linv * mu))


@dataclass(frozen=True)
class FunctionClassification:
    """case is one of constant, conformal_affine, generic_size2, generic_size3."""

    case: str
    samples: list
    constant: Quaternion | None = None
    conformal: ConformalAffine | None = None
    exceptional_samples: list = field(default_factory=list)

    def to_json(self):
        return {
            "case": self.case,
            "constant": None if self.constant is None else self.constant.to_list(),
            "conformal": None if self.conformal is None else self.conformal.to_json(),
            "exceptional_samples": [p.to_list() for p in self.exceptional_samples],
            "samples": [s.to_json() for s in self.samples],
        }


DEFAULT_BOX = (-1.0, 1.0) * 4


def grid_points(box=DEFAULT_BOX, grid_n=5):
    axes = [np.linspace(box[2 * k], box[2 * k + 1], grid_n) for k in range(4)]
    return [Quaternion(*c) for c in itertools.product(*axes)]


def classify_function(F, box=DEFAULT_BOX, grid_n=5, tol=EPS_RANK):
    check_right_regular(F)
    samples = [classify_at(F, p, tol, checked=True) for p in grid_points(box, grid_n)]
    generic = max(s.size for s in samples)
    if generic == 0:
        return FunctionClassification("constant", samples, constant=F(samples[0].point))
    if generic == 1:
        return FunctionClassification("conformal_affine", samples, conformal=conformal_affine_recover(F, tol=tol))
    exceptional = [s.point for s in samples if s.size < generic]
    return FunctionClassification(f"generic_size{generic}", samples, exceptional_samples=exceptional)
