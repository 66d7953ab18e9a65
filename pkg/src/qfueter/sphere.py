"""Brute-force searches over the sphere of imaginary units.

These do not use any eigen-analysis of the structure matrices and serve as
independent checks of it.
"""

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .forms import direct_A_matrix
from .linmap import left_matrix, right_matrix


def icosphere(level):
    """Vertices of a subdivided icosahedron (10 * 4**level + 2 points)."""
    t = (1.0 + 5 ** 0.5) / 2.0
    verts = [(-1, t, 0), (1, t, 0), (-1, -t, 0), (1, -t, 0),
             (0, -1, t), (0, 1, t), (0, -1, -t), (0, 1, -t),
             (t, 0, -1), (t, 0, 1), (-t, 0, -1), (-t, 0, 1)]
    faces = [(0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
             (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
             (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
             (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1)]
    verts = [np.array(v, dtype=float) / np.linalg.norm(v) for v in verts]
    for _ in range(level):
        cache = {}
        new_faces = []

        def midpoint(a, b):
            key = (min(a, b), max(a, b))
            if key not in cache:
                m = verts[a] + verts[b]
                verts.append(m / np.linalg.norm(m))
                cache[key] = len(verts) - 1
            return cache[key]

        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            new_faces += [(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)]
        faces = new_faces
    return np.array(verts)


_GRIDS = {}


def cached_icosphere(level):
    if level not in _GRIDS:
        _GRIDS[level] = icosphere(level)
    return _GRIDS[level]


def _tangent_frame(v):
    a = np.zeros(3)
    a[np.argmin(np.abs(v))] = 1.0
    t1 = a - np.dot(a, v) * v
    t1 /= np.linalg.norm(t1)
    return t1, np.cross(v, t1)


def _on_sphere(v, frame, a, b):
    w = v + a * frame[0] + b * frame[1]
    return w / np.linalg.norm(w)


def brute_force_max_A(L, level=5, refine=True, chunk=2048):
    """max over unit h, g of A(h, g), with A built from its definition.

    Returns (value, h, g) as 3-vectors in (i, j, k) coordinates.
    """
    A = direct_A_matrix(L)
    grid = cached_icosphere(level)
    AG = A @ grid.T
    best, bh, bg = -np.inf, 0, 0
    for start in range(0, len(grid), chunk):
        vals = grid[start:start + chunk] @ AG
        idx = np.unravel_index(np.argmax(vals), vals.shape)
        if vals[idx] > best:
            best, bh, bg = vals[idx], start + idx[0], idx[1]
    h, g = grid[bh], grid[bg]
    if not refine:
        return float(best), h, g
    fh, fg = _tangent_frame(h), _tangent_frame(g)

    def neg(x):
        return -float(_on_sphere(h, fh, x[0], x[1]) @ A @ _on_sphere(g, fg, x[2], x[3]))

    res = minimize(neg, np.zeros(4), method="Nelder-Mead",
                   options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 4000})
    if -res.fun < best:
        return float(best), h, g
    x = res.x
    return float(-res.fun), _on_sphere(h, fh, x[0], x[1]), _on_sphere(g, fg, x[2], x[3])


def _batched_left(G):
    a, b, c, d = 0.0, G[:, 0], G[:, 1], G[:, 2]
    z = np.zeros_like(b)
    return np.stack([
        np.stack([z + a, -b, -c, -d], -1),
        np.stack([b, z + a, -d, c], -1),
        np.stack([c, d, z + a, -b], -1),
        np.stack([d, -c, b, z + a], -1),
    ], 1)


def _batched_right(G):
    a, b, c, d = 0.0, G[:, 0], G[:, 1], G[:, 2]
    z = np.zeros_like(b)
    return np.stack([
        np.stack([z + a, -b, -c, -d], -1),
        np.stack([b, z + a, d, -c], -1),
        np.stack([c, -d, z + a, b], -1),
        np.stack([d, c, -b, z + a], -1),
    ], 1)


def defect_sq_grid(L, G):
    """|| L + R_g L L_g ||^2 for each row g of G."""
    M = L.matrix
    D = M[None] + _batched_right(G) @ M[None] @ _batched_left(G)
    return 0.25 * np.sum(D ** 2, axis=(1, 2))


def defect_sq(L, g):
    gq = (0.0, *g)
    D = L.matrix + right_matrix(gq) @ L.matrix @ left_matrix(gq)
    return 0.25 * float(np.sum(D ** 2))


def _refine_sphere(L, v):
    frame = _tangent_frame(v)
    res = minimize(lambda x: defect_sq(L, _on_sphere(v, frame, x[0], x[1])), np.zeros(2),
                   method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-20, "maxiter": 2000})
    w = _on_sphere(v, frame, *res.x)
    return w, defect_sq(L, w)


def _refine_circle(L, u, w, theta0, step):
    def f(t):
        return defect_sq(L, np.cos(t) * u + np.sin(t) * w)

    res = minimize_scalar(f, bounds=(theta0 - step, theta0 + step), method="bounded",
                          options={"xatol": 1e-13})
    t = res.x
    return np.cos(t) * u + np.sin(t) * w, f(t)


def complex_direction_count(L, level=5, rel_tol=1e-10):
    """Largest number of independent g with L(g x) = L(x) g, found by sampling.

    A grid of about 2 degree spacing locates the best direction, local
    minimization polishes it; the search then repeats on the great circle
    orthogonal to it.  The solution set is a linear subspace intersected with
    the sphere, so a third direction exists exactly when the cross product of
    the first two is a solution.
    """
    scale = max(L.norm_sq(), 1e-300)
    thr = rel_tol * scale
    if L.norm_sq() == 0.0:
        return 3
    grid = cached_icosphere(level)
    vals = defect_sq_grid(L, grid)
    g1, d1 = _refine_sphere(L, grid[int(np.argmin(vals))])
    if d1 > thr:
        return 0
    u, w = _tangent_frame(g1)
    n = 180
    thetas = np.linspace(0.0, np.pi, n, endpoint=False)
    circle = np.cos(thetas)[:, None] * u + np.sin(thetas)[:, None] * w
    k = int(np.argmin(defect_sq_grid(L, circle)))
    g2, d2 = _refine_circle(L, u, w, thetas[k], np.pi / n)
    if d2 > thr:
        return 1
    g3 = np.cross(g1, g2)
    g3 /= np.linalg.norm(g3)
    return 3 if defect_sq(L, g3) <= thr else 2
