"""Built-in corpus of worked examples with their expected values.

Each fixture carries a source in the text formats of the parser and a check
routine returning (label, ok, detail) triples.
"""

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .adjugate import (
    abc_criterion,
    adjugate,
    adjugate_matrix,
    adjugate_is_left_regular,
    complex_pair_coefficients,
    det_M_identity,
    is_rl_biregular,
    jac,
)
from .forms import (
    classify_complex_linearity,
    direct_A_matrix,
    is_complex_linear,
    lambda_hat_map,
    max_eigen_holomorphy_check,
    structure_matrices,
)
from .fueter import (
    classify_at,
    classify_function,
    conformal_affine_recover,
    crf_left,
    crf_right,
    differential_at,
    holomorphy_criterion,
)
from .linmap import (
    RealLinearMap,
    bar_theta_map,
    conj_map,
    decompose_bar_theta,
    from_bar_theta,
    from_complex_pair_function,
    inversion_differential,
    is_left_regular,
    is_right_regular,
    rank,
    real_part_map,
)
from .parser import format_polynomial, parse_function, parse_map
from .polynomial import Polynomial
from .quaternion import (
    I,
    J,
    K,
    ONE,
    ZERO,
    OrthonormalBasis,
    Quaternion,
    bar_theta,
    inversion,
)

TOL = 1e-9
SEED = 7


@dataclass(frozen=True)
class Fixture:
    name: str
    tags: tuple
    summary: str
    source: str
    check: object = field(repr=False, compare=False)

    def matches(self, selector):
        return selector is None or selector == self.name or selector in self.tags

    def run(self):
        return [(label, bool(ok), detail) for label, ok, detail in self.check()]


def close(a, b, tol=TOL):
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(a), initial=0.0)), float(np.max(np.abs(b), initial=0.0)))
    return bool(np.max(np.abs(a - b), initial=0.0) <= tol * scale)


def qclose(p, q, tol=TOL):
    return close(Quaternion(*p).to_array(), Quaternion(*q).to_array(), tol)


def _points(n, seed=SEED, scale=1.0):
    rng = np.random.default_rng(seed)
    return [Quaternion(*(rng.uniform(-1, 1, size=4) * scale)) for _ in range(n)]


def _sphere(n, seed=SEED):
    rng = np.random.default_rng(seed)
    v = rng.normal(size=(n, 3))
    v /= np.linalg.norm(v, axis=1)[:, None]
    return [Quaternion(0.0, *row) for row in v]


def _fmt(x):
    return np.array2string(np.asarray(x), precision=6, suppress_small=True).replace("\n", "")


# maps


def _example_25():
    L = parse_map("coeffs: 0, 1, 1, 1")
    direct = from_complex_pair_function(lambda z1, z2: (2 * z1 + z1.conjugate(), z2.conjugate()))
    dec = decompose_bar_theta(L)
    sm = structure_matrices(L)
    sol = classify_complex_linearity(L)
    return [
        ("matches 2 z1 + conj(z1) + j conj(z2)", L.allclose(direct), ""),
        ("decomposition (0, 1, 1, 1)", all(qclose(c, e) for c, e in zip(dec.coeffs, (ZERO, ONE, ONE, ONE))), str(dec)),
        ("right-regular", is_right_regular(L), ""),
        ("size 3", sm.size == 3, f"size={sm.size}"),
        ("no complex structure pair", sol.kind == "empty", sol.kind),
        ("max-eigen check negative", not max_eigen_holomorphy_check(L), ""),
    ]


def _example_25_any_basis():
    L = parse_map("coeffs: 0, 1, 1, 1")
    rng = np.random.default_rng(SEED)
    out = []
    for orient in ("positive", "negative"):
        q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        if np.linalg.det(q) < 0:
            q[:, 2] *= -1
        if orient == "negative":
            q[:, 2] *= -1
        basis = OrthonormalBasis(*(Quaternion(0.0, *q[:, n]) for n in range(3)))
        dec = decompose_bar_theta(L, basis)
        ok = all(qclose(c, e) for c, e in zip(dec.coeffs, (ZERO, ONE, ONE, ONE)))
        out.append((f"(0, 1, 1, 1) in a random {orient} basis", ok, str(dec)))
        out.append((f"size 3 in a random {orient} basis", structure_matrices(L, basis).size == 3, ""))
    return out


THM34_COEFFS = "coeffs: (1-2j)/2, (1+2j)/2, (2+j)/2, (2-j)/2"


def _theorem34():
    L = parse_map(THM34_COEFFS)
    direct = from_complex_pair_function(
        lambda z1, z2: (2 * z1 + z1.conjugate() + z2 - 2 * z2.conjugate(), 0j))
    dec = decompose_bar_theta(L)
    sm = structure_matrices(L)
    sol = classify_complex_linearity(L)
    Lk = sm.L_of(K)
    return [
        ("matches 2 z1 + conj(z1) + z2 - 2 conj(z2)", L.allclose(direct), ""),
        ("pairform source agrees", L.allclose(parse_map("pairform: 2, 1, 1, -2")), ""),
        ("all |lam|^2 = 5/4", all(close(c.norm_sq(), 1.25) for c in dec.coeffs), str(dec)),
        ("norm squared 5", close(L.norm_sq(), 5.0), f"{L.norm_sq()}"),
        ("A = [[0,0,5],[0,0,0],[0,0,0]]", close(sm.A, [[0, 0, 5], [0, 0, 0], [0, 0, 0]]), _fmt(sm.A)),
        ("A from its definition agrees", close(direct_A_matrix(L), sm.A), ""),
        ("not right-regular", not is_right_regular(L), ""),
        ("antipodal pair through k", sol.kind == "antipodal_pair" and qclose(sol.unit, K), str(sol.unit)),
        ("partner of k is i", sol.partner is not None and qclose(sol.partner, I), str(sol.partner)),
        ("L(k) = 5 i", qclose(Lk, 5 * I), str(Lk)),
        ("complex linear for (k, i)", is_complex_linear(L, K, I), ""),
        ("max-eigen check positive", max_eigen_holomorphy_check(L), ""),
    ]


def _conjugation():
    L = parse_map("matrix: [1,0,0,0, 0,-1,0,0, 0,0,-1,0, 0,0,0,-1]")
    sm = structure_matrices(L)
    pts = _sphere(100)
    return [
        ("equals cj", L.allclose(conj_map()), ""),
        ("A = -I", close(sm.A, -np.eye(3)), _fmt(sm.A)),
        ("complex linear for (g, -g) on 100 sphere samples", all(is_complex_linear(L, g, -g) for g in pts), ""),
        ("not complex linear for (g, g)", not any(is_complex_linear(L, g, g) for g in pts[:10]), ""),
        ("not right-regular", not is_right_regular(L), ""),
        ("every g has a partner", classify_complex_linearity(L).kind == "graph", ""),
    ]


def _bar_theta_units():
    Li = bar_theta_map(I)
    Lj = bar_theta_map(J)
    ref_i = from_complex_pair_function(lambda z1, z2: (z1.conjugate(), z2.conjugate()))
    ref_j = from_complex_pair_function(lambda z1, z2: (z1, -z2))
    sol = classify_complex_linearity(Li)
    out = [
        ("bar_theta_i(z1 + z2 j) = conj(z1) + j conj(z2)", Li.allclose(ref_i), ""),
        ("bar_theta_j(z1 + z2 j) = z1 - j z2", Lj.allclose(ref_j), ""),
        ("right-regular", is_right_regular(Li), ""),
        ("left-regular", is_left_regular(Li), ""),
        ("size 1", structure_matrices(Li).size == 1, ""),
        ("complex structures form a graph", sol.kind == "graph", sol.kind),
    ]
    for a in np.linspace(0, 2 * np.pi, 7):
        g = Quaternion(0, 0, np.cos(a), np.sin(a))
        out.append((f"fixes cos a j + sin a k, a={a:.3f}", qclose(bar_theta(I, g), g), ""))
    return out


def _real_part():
    L = real_part_map()
    dec = decompose_bar_theta(L)
    return [
        ("coefficients all 1/4", all(qclose(c, 0.25 * ONE) for c in dec.coeffs), str(dec)),
        ("assembles back", dec.assemble().allclose(L), ""),
        ("not right-regular", not is_right_regular(L), ""),
    ]


def _fueter_variable():
    a = parse_map("coeffs: 0, 0, -0.5i, -0.5i")
    b = parse_map("pairform: -1i, 0, 0, 0")
    ref = from_complex_pair_function(lambda z1, z2: (-1j * z1, 0j))
    sm = structure_matrices(a)
    sol = classify_complex_linearity(a)
    return [
        ("coeffs and pairform sources coincide", a.allclose(b), ""),
        ("maps z1 + z2 j to -i z1", a.allclose(ref), ""),
        ("size 2", sm.size == 2, f"size={sm.size}"),
        ("rank 2", rank(a) == 2, ""),
        ("complex linear for (i, i)", is_complex_linear(a, I, I), ""),
        ("not complex linear for (j, j)", not is_complex_linear(a, J, J), ""),
        ("antipodal pair through i", sol.kind == "antipodal_pair" and qclose(sol.unit, I), str(sol.unit)),
        ("adjugate vanishes", adjugate(a).allclose(RealLinearMap.zero()), ""),
    ]


def _lambda_hat():
    g = Quaternion(0, 1, 2, 2) * (1 / 3)
    L = lambda_hat_map(g)
    sol = classify_complex_linearity(L)
    return [
        ("right-regular", is_right_regular(L), ""),
        ("size 2", structure_matrices(L).size == 2, ""),
        ("antipodal pair through g", sol.kind == "antipodal_pair" and qclose(sol.unit, g), str(sol.unit)),
        ("complex linear for (g, g)", is_complex_linear(L, g, g), ""),
    ]


CORNER_JAC = [[1, 0, 1, 0], [0, 0, 0, 1], [1, 0, 1, 0], [0, 1, 0, 0]]
CORNER_ADJ = [[-1, 0, 1, 0], [0, 0, 0, 0], [1, 0, -1, 0], [0, 0, 0, 0]]


def _rank_three_adjugate():
    L = parse_map("pairform: 1, 0, 1, j")
    ref = from_bar_theta([ZERO, ONE, 0.5 * ONE, 0.5 * ONE])
    J4 = jac(L).entries
    adj = adjugate(L)
    adj_ref = from_complex_pair_function(lambda w1, w2: (-w1 + w1.conjugate(), 0j))
    adj_dec = decompose_bar_theta(adj, side="right")
    detM, lam0 = det_M_identity(L)
    sm = structure_matrices(L)
    e1, e2 = abc_criterion(complex_pair_coefficients(L))
    return [
        ("equals bar_theta_i + bar_theta_j/2 + bar_theta_k/2", L.allclose(ref), ""),
        ("lr Jacobian", close(J4, CORNER_JAC), _fmt(J4)),
        ("adjugate of the Jacobian", close(adjugate_matrix(J4), CORNER_ADJ), ""),
        ("adjugate map w1 + j w2 -> -w1 + conj(w1)", adj.allclose(adj_ref), ""),
        ("adjugate right decomposition (1/2, 1/2, -1/2, -1/2)",
         all(qclose(c, e * ONE) for c, e in zip(adj_dec.coeffs, (0.5, 0.5, -0.5, -0.5))), str(adj_dec)),
        ("adjugate not left-regular", not adjugate_is_left_regular(L), ""),
        ("det M = 1/16", close(detM, 1 / 16), f"{detM}"),
        ("|lam0 adj|^2 / 4 = 1/16", close(lam0, 1 / 16), f"{lam0}"),
        ("M = diag(1, 1/4, 1/4)", close(sm.M, np.diag([1, 0.25, 0.25])), _fmt(sm.M)),
        ("size 3", sm.size == 3, ""),
        ("rank 3", rank(L) == 3, ""),
        ("not RL-biregular", not is_rl_biregular(L), ""),
        ("|expr1|^2 + |expr2|^2 = 16 det M", close(abs(e1) ** 2 + abs(e2) ** 2, 16 * detM), ""),
    ]


def _inversion():
    q = Quaternion(0.3, -0.2, 0.5, 0.1)
    D = inversion_differential(ZERO, ONE)
    return [
        ("inversion at 0 is conj(q)^-1", qclose(inversion(ZERO, q), q.conj().inverse()), ""),
        ("differential at 1 is -cj", D.allclose(-conj_map()), ""),
        ("differential is conformal", close(D.matrix.T @ D.matrix, np.eye(4)), ""),
    ]


# functions


def _exp_taylor(n=6):
    z = Polynomial.variable("z1")
    out = Polynomial.constant(0)
    for k in range(n + 1):
        out = out + (1.0 / factorial(k)) * z ** k
    return out


SLICE_SOURCE = f"f1 = {format_polynomial(_exp_taylor())}; f2 = 0"


def _slice_function():
    F = parse_function(SLICE_SOURCE)
    dphi = _exp_taylor().diff("z1")
    out = []
    for p in _points(10):
        z1 = complex(p.x0, p.x1)
        d = complex(dphi(z1, 0j))
        D = differential_at(F, p)
        lam = Quaternion(0.5 * d.real, 0.5 * d.imag)
        ref = from_bar_theta([ZERO, ZERO, lam, lam])
        M = structure_matrices(D).M
        out.append((f"df at {p} = phi'/2 (bar_theta_j + bar_theta_k)", D.allclose(ref), ""))
        out.append((f"M at {p}", close(M, abs(d) ** 2 * np.diag([0, 0.25, 0.25])), _fmt(M)))
        c = classify_at(F, p)
        out.append((f"size 2 rank 2 at {p}", (c.size, c.rank) == (2, 2), f"{c.size} {c.rank}"))
        out.append((f"structure +-i at {p}", c.solutions.kind == "antipodal_pair" and qclose(c.solutions.unit, I), ""))
        out.append((f"left-regular at {p}", crf_left(F, p).norm() <= TOL, ""))
    return out


EX49_SOURCE = "f1 = conj(z1) + z2^2; f2 = conj(z2)"


def ex49_gauss_unit(z2):
    x2, x3 = z2.real, z2.imag
    n = abs(z2) ** 2
    return Quaternion(0, n, x3, x2) * (1 / np.sqrt(n * n + n))


def _example_49():
    F = parse_function(EX49_SOURCE)
    out = [("f at 0 vanishes", qclose(F(ZERO), ZERO), "")]
    for p in _points(20, seed=49):
        z2 = complex(p.x2, p.x3)
        x2, x3 = z2.real, z2.imag
        n = abs(z2) ** 2
        z2q = Quaternion(x2, x3)
        D = differential_at(F, p)
        ref = from_bar_theta([ZERO, ONE, z2q * J, -(z2q * J)])
        sm = structure_matrices(D)
        w = np.sort(np.linalg.eigvalsh(sm.M))
        c = classify_at(F, p)
        g = ex49_gauss_unit(z2)
        alt = bar_theta_map(I - K * z2q).lmul(ONE - J * z2q) + bar_theta_map(J * z2q).lmul(J * z2q)
        tag = f"z2={z2:.3f}"
        out += [
            (f"df = bar_theta_i + z2 j bar_theta_j - z2 j bar_theta_k, {tag}", D.allclose(ref), ""),
            (f"df = (1 - j z2) bar_theta_(i - k z2) + j z2 bar_theta_(j z2), {tag}", D.allclose(alt), ""),
            (f"M entries, {tag}", close(sm.M, [[1, -x3, -x2], [-x3, n, 0], [-x2, 0, n]]), _fmt(sm.M)),
            (f"eigenvalues, {tag}", close(w, [0.0, n, 1 + n]), _fmt(w)),
            (f"size 2 rank 4, {tag}", (c.size, c.rank) == (2, 4), f"{c.size} {c.rank}"),
            (f"structure unit up to sign, {tag}",
             c.solutions.kind == "antipodal_pair" and abs(abs(float(np.dot(c.solutions.unit.to_array(), g.to_array()))) - 1) <= TOL,
             str(c.solutions.unit)),
            (f"complex linear for the unit, {tag}", is_complex_linear(D, g, g), ""),
            (f"RL-biregular, {tag}", is_rl_biregular(D), ""),
        ]
    p0 = Quaternion(0.4, -0.7, 0, 0)
    c0 = classify_at(F, p0)
    out.append(("size 1 where z2 = 0", c0.size == 1, f"{c0.size}"))
    out.append(("df = bar_theta_i where z2 = 0", differential_at(F, p0).allclose(bar_theta_map(I)), ""))
    return out


EX411_SOURCE = "f1 = z1*conj(z1) - z2*conj(z2); f2 = conj(z1)*conj(z2)"


def _example_411():
    F = parse_function(EX411_SOURCE)
    out = []
    for p in _points(20, seed=411):
        z1, z2 = complex(p.x0, p.x1), complex(p.x2, p.x3)
        q1 = Quaternion(z1.real, z1.imag)
        q2 = Quaternion(z2.real, z2.imag)
        D = differential_at(F, p)
        ref = from_bar_theta([ZERO, p, (q1.conj() - q2.conj() * J) * 0.5, (q1.conj() + q2.conj() * J) * 0.5])
        sm = structure_matrices(D)
        c = classify_at(F, p)
        s = abs(z1) ** 2 + abs(z2) ** 2
        out += [
            (f"df decomposition at {p}", D.allclose(ref), ""),
            (f"M at {p}", close(sm.M, s * np.diag([1, 0.25, 0.25])), _fmt(sm.M)),
            (f"size 3 rank 3 at {p}", (c.size, c.rank) == (3, 3), f"{c.size} {c.rank}"),
        ]
    c0 = classify_at(F, ZERO)
    out.append(("size 0 rank 0 at the origin", (c0.size, c0.rank) == (0, 0), f"{c0.size} {c0.rank}"))
    return out


HYPERPLANE_SOURCE = "f1 = z1 + z2^2 + conj(z1); f2 = z1^2 + z2 + conj(z2)"


def _hyperplane():
    F = parse_function(HYPERPLANE_SOURCE)
    out = []
    ok1, ok2 = True, True
    for p in _points(100, seed=3):
        e1, e2 = holomorphy_criterion(F, p)
        ok1 &= abs(e1) <= TOL
        ok2 &= close(e2, 4 * (p.x0 + p.x2))
    out.append(("expr1 vanishes at 100 points", ok1, ""))
    out.append(("expr2 is 4 (x0 + x2) at 100 points", ok2, ""))
    # half of the samples projected onto x0 + x2 = 0
    exact = True
    for n, p in enumerate(_points(100, seed=5)):
        if n % 2:
            p = Quaternion(p.x0, p.x1, -p.x0, p.x3)
        on_plane = p.x0 + p.x2 == 0
        e2 = abs(holomorphy_criterion(F, p)[1])
        exact &= e2 <= TOL if on_plane else e2 > 1e-6
    out.append(("expr2 vanishes exactly on the hyperplane samples", exact, ""))
    on = Quaternion(0.3, 0.1, -0.3, 0.2)
    out.append(("expr2 vanishes on the hyperplane", abs(holomorphy_criterion(F, on)[1]) <= TOL, ""))
    out.append(("size 2 on the hyperplane", classify_at(F, on).size == 2, ""))
    off = Quaternion(0.3, 0.1, 0.2, 0.2)
    out.append(("size 3 off the hyperplane", classify_at(F, off).size == 3, ""))
    p0 = Quaternion(0.5, 0, 0.5, 0)
    D = differential_at(F, p0)
    ref = RealLinearMap.from_function(lambda x: Quaternion(2 * x.x0 + x.x2, x.x3, x.x0 + 2 * x.x2, -x.x1))
    inv = RealLinearMap.from_function(
        lambda y: Quaternion(2 / 3 * y.x0 - 1 / 3 * y.x2, -y.x3, 2 / 3 * y.x2 - 1 / 3 * y.x0, y.x1))
    out += [
        ("differential at (1 + j)/2", D.allclose(ref), _fmt(D.matrix)),
        ("rank 4 at (1 + j)/2", rank(D) == 4, ""),
        ("inverse as displayed", D.inverse().allclose(inv), ""),
        ("inverse not left-regular", not is_left_regular(D.inverse(), 1e-9), ""),
        ("not RL-biregular at (1 + j)/2", not is_rl_biregular(D), ""),
        ("right-regular", all(crf_right(F, p).norm() <= TOL for p in _points(5)), ""),
    ]
    return out


CONFORMAL_SOURCES = {
    # bar_theta_j(z1 + z2 j) = z1 - j z2
    "j": "f1 = z2; f2 = z1 - I",
    "i": "f1 = 1 + I*z1; f2 = I*z2",
}


def _conformal():
    out = []
    for label, lam, mu, bireg in (("j", J, K, False), ("i", I, ONE, True)):
        F = parse_function(CONFORMAL_SOURCES[label])
        ref_ok = all(qclose(F(p), lam * bar_theta(J, p) + mu) for p in _points(10))
        out.append((f"{label} bar_theta_j + mu source matches", ref_ok, ""))
        ca = conformal_affine_recover(F)
        out += [
            (f"{label}: g = j", qclose(ca.g, J), str(ca.g)),
            (f"{label}: lambda", qclose(ca.lam, lam), str(ca.lam)),
            (f"{label}: mu", qclose(ca.mu, mu), str(ca.mu)),
            (f"{label}: absolutely biregular = {bireg}", ca.absolutely_biregular == bireg, ""),
            (f"{label}: inverse round trip", all(qclose(ca.inverse(ca(p)), p) for p in _points(10)), ""),
        ]
        out.append((f"{label}: classified as conformal affine", classify_function(F, grid_n=2).case == "conformal_affine", ""))
    return out


CONSTANT_SOURCE = "f1 = 1 + 2*I; f2 = -3"


def _constant():
    F = parse_function(CONSTANT_SOURCE)
    fc = classify_function(F, grid_n=2)
    return [
        ("classified constant", fc.case == "constant", fc.case),
        ("value 1 + 2i - 3j", qclose(fc.constant, Quaternion(1, 2, -3, 0)), str(fc.constant)),
    ]


def _classify_49():
    fc = classify_function(parse_function(EX49_SOURCE), grid_n=5)
    ex = fc.exceptional_samples
    return [
        ("generic size 2", fc.case == "generic_size2", fc.case),
        ("exceptional samples lie on z2 = 0", bool(ex) and all(abs(p.x2) + abs(p.x3) < TOL for p in ex), f"{len(ex)}"),
        ("every z2 = 0 sample is exceptional", len(ex) == 25, f"{len(ex)}"),
    ]


FIXTURES = (
    Fixture("three-term-map", ("size3", "map"), "2 z1 + conj(z1) + j conj(z2), sum of bar_theta over i, j, k",
            "coeffs: 0, 1, 1, 1", _example_25),
    Fixture("three-term-map-any-basis", ("size3", "map"), "the same map decomposed in rotated bases",
            "coeffs: 0, 1, 1, 1", _example_25_any_basis),
    Fixture("nonregular-pair", ("map", "structure"), "2 z1 + conj(z1) + z2 - 2 conj(z2), complex linear only for (k, i)",
            THM34_COEFFS, _theorem34),
    Fixture("conjugation", ("map", "structure"), "cj is complex linear for every (g, -g)",
            "matrix: [1,0,0,0, 0,-1,0,0, 0,0,-1,0, 0,0,0,-1]", _conjugation),
    Fixture("bar-theta-units", ("map", "size1"), "bar_theta_i and bar_theta_j in complex coordinates",
            "coeffs: 0, 1, 0, 0", _bar_theta_units),
    Fixture("real-part", ("map",), "re decomposes with all coefficients 1/4",
            "matrix: [1,0,0,0, 0,0,0,0, 0,0,0,0, 0,0,0,0]", _real_part),
    Fixture("fueter-variable", ("map", "size2"), "Lambda_i: z1 + z2 j -> -i z1",
            "pairform: -1i, 0, 0, 0", _fueter_variable),
    Fixture("lambda-hat", ("map", "size2"), "x -> <g, x> - g x0 for g = (i + 2j + 2k)/3",
            "", _lambda_hat),
    Fixture("rank-three-adjugate", ("map", "adjugate", "rank3"), "z1 + conj(z1) + j conj(z2)",
            "pairform: 1, 0, 1, j", _rank_three_adjugate),
    Fixture("inversion", ("map",), "differential of q -> conj(q)^-1",
            "", _inversion),
    Fixture("slice-function", ("function", "size2"), "truncated exp(z1), left and right regular",
            SLICE_SOURCE, _slice_function),
    Fixture("biregular-size2", ("function", "size2"), "conj(z1) + z2^2 + j conj(z2)",
            EX49_SOURCE, _example_49),
    Fixture("biregular-size2-grid", ("function", "size2", "grid"), "grid classification of conj(z1) + z2^2 + j conj(z2)",
            EX49_SOURCE, _classify_49),
    Fixture("norm-difference", ("function", "rank3"), "|z1|^2 - |z2|^2 + j conj(z1) conj(z2)",
            EX411_SOURCE, _example_411),
    Fixture("hyperplane-criterion", ("function", "criterion"), "holomorphy criterion vanishing on x0 + x2 = 0",
            HYPERPLANE_SOURCE, _hyperplane),
    Fixture("conformal-affine", ("function", "conformal", "size1"), "j bar_theta_j + k and i bar_theta_j + 1",
            CONFORMAL_SOURCES["j"], _conformal),
    Fixture("constant", ("function", "size0"), "a constant function",
            CONSTANT_SOURCE, _constant),
)


def select(selector=None):
    return [f for f in FIXTURES if f.matches(selector)]


def fixture(name):
    for f in FIXTURES:
        if f.name == name:
            return f
    raise KeyError(name)
