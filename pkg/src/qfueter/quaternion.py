"""Quaternion arithmetic, imaginary units, orthonormal bases and inversions."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

EPS_ALG = 1e-10


@dataclass(frozen=True, eq=False)
class Quaternion:
    """x0 + x1 i + x2 j + x3 k."""

    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    @classmethod
    def from_array(cls, v):
        return cls(float(v[0]), float(v[1]), float(v[2]), float(v[3]))

    @classmethod
    def from_complex_pair(cls, z1, z2):
        """z1 + z2 j with z1, z2 in the slice spanned by 1, i."""
        z1, z2 = complex(z1), complex(z2)
        return cls(z1.real, z1.imag, z2.real, z2.imag)

    def to_array(self):
        return np.array([self.x0, self.x1, self.x2, self.x3])

    def to_list(self):
        return [self.x0, self.x1, self.x2, self.x3]

    def __iter__(self):
        return iter((self.x0, self.x1, self.x2, self.x3))

    def __post_init__(self):
        for name in ("x0", "x1", "x2", "x3"):
            object.__setattr__(self, name, float(getattr(self, name)))

    def __add__(self, other):
        other = as_quaternion(other)
        return Quaternion(self.x0 + other.x0, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __sub__(self, other):
        return self + (-as_quaternion(other))

    def __rsub__(self, other):
        return as_quaternion(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.x0 * other, self.x1 * other, self.x2 * other, self.x3 * other)
        return mul(self, as_quaternion(other))

    def __rmul__(self, other):
        return mul(as_quaternion(other), self)

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            if other == 0:
                raise DomainError("division by zero")
            return self * (1.0 / other)
        return self * as_quaternion(other).inverse()

    def __eq__(self, other):
        try:
            other = as_quaternion(other)
        except TypeError:
            return NotImplemented
        return isclose(self, other)

    __hash__ = None

    def conj(self):
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def norm_sq(self):
        return self.x0 ** 2 + self.x1 ** 2 + self.x2 ** 2 + self.x3 ** 2

    def norm(self):
        return math.sqrt(self.norm_sq())

    __abs__ = norm

    def inverse(self):
        n = self.norm_sq()
        if n == 0.0:
            raise DomainError("zero quaternion has no inverse")
        c = self.conj()
        return Quaternion(c.x0 / n, c.x1 / n, c.x2 / n, c.x3 / n)

    def re(self):
        return self.x0

    def im(self):
        return Quaternion(0.0, self.x1, self.x2, self.x3)

    def imag_vector(self):
        return np.array([self.x1, self.x2, self.x3])

    def normalized(self):
        n = self.norm()
        if n == 0.0:
            raise DomainError("cannot normalize the zero quaternion")
        return self * (1.0 / n)

    def __repr__(self):
        return f"Quaternion({self.x0!r}, {self.x1!r}, {self.x2!r}, {self.x3!r})"

    def __str__(self):
        return format_quaternion(self)


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
ZERO = Quaternion()


def as_quaternion(x):
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, (int, float, np.floating, np.integer)):
        return Quaternion(float(x))
    if isinstance(x, complex):
        return Quaternion(x.real, x.imag)
    if isinstance(x, (list, tuple, np.ndarray)) and len(x) == 4:
        return Quaternion.from_array(x)
    raise TypeError(f"cannot interpret {x!r} as a quaternion")


def mul(a, b):
    """Hamilton product; equals the Cayley-Dickson rule on pairs in C + jC."""
    return Quaternion(
        a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
        a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
        a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
        a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0,
    )


def cayley_dickson_mul(a, b):
    """Product computed on complex pairs: (al + j be)(ga + j de)."""
    al, be = complex(a.x0, a.x1), complex(a.x2, -a.x3)
    ga, de = complex(b.x0, b.x1), complex(b.x2, -b.x3)
    # q = alpha + j beta with alpha = x0 + x1 i and j(u + v i) = u j - v k
    first = al * ga - be.conjugate() * de
    second = al.conjugate() * de + be * ga
    return Quaternion(first.real, first.imag, second.real, -second.imag)


def dot(a, b):
    """Euclidean inner product <a, b> = re(a conj(b))."""
    return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3


def isclose(a, b, tol=EPS_ALG):
    scale = max(1.0, a.norm(), b.norm())
    return all(abs(p - q) <= tol * scale for p, q in zip(a, b))


def is_imaginary_unit(q, tol=EPS_ALG):
    return abs(q.x0) <= tol and abs(q.norm_sq() - 1.0) <= tol


class ImaginaryUnit(Quaternion):
    """A quaternion g with g^2 = -1."""

    def __init__(self, *args):
        q = args[0] if len(args) == 1 else Quaternion(*args)
        q = as_quaternion(q)
        if not is_imaginary_unit(q, 1e-8):
            raise DomainError(f"{format_quaternion(q)} is not an imaginary unit")
        n = q.norm()
        object.__setattr__(self, "x0", 0.0)
        object.__setattr__(self, "x1", float(q.x1 / n))
        object.__setattr__(self, "x2", float(q.x2 / n))
        object.__setattr__(self, "x3", float(q.x3 / n))

    @classmethod
    def from_vector(cls, v):
        v = np.asarray(v, dtype=float)
        n = np.linalg.norm(v)
        if n == 0:
            raise DomainError("zero vector has no direction")
        return cls(Quaternion(0.0, *(v / n)))

    @property
    def value(self):
        return Quaternion(self.x0, self.x1, self.x2, self.x3)

    def __repr__(self):
        return f"ImaginaryUnit({self.x1!r}, {self.x2!r}, {self.x3!r})"


@dataclass(frozen=True)
class ComplexSlice:
    """The real subalgebra spanned by 1 and an imaginary unit g."""

    g: ImaginaryUnit

    def contains(self, x, tol=EPS_ALG):
        v = x.imag_vector()
        gv = self.g.imag_vector()
        perp = v - np.dot(v, gv) * gv
        return float(np.linalg.norm(perp)) <= tol * max(1.0, x.norm())

    def element(self, a, b):
        return Quaternion(a) + self.g * b


@dataclass(frozen=True)
class OrthonormalBasis:
    """(1, e1, e2, e3) with e1, e2, e3 orthonormal imaginary units."""

    e1: Quaternion
    e2: Quaternion
    e3: Quaternion

    def __post_init__(self):
        units = (self.e1, self.e2, self.e3)
        for e in units:
            if not is_imaginary_unit(e, 1e-8):
                raise DomainError(f"basis vector {format_quaternion(e)} is not an imaginary unit")
        for a in range(3):
            for b in range(a + 1, 3):
                if abs(dot(units[a], units[b])) > 1e-8:
                    raise DomainError("basis vectors are not orthogonal")

    @property
    def e0(self):
        return ONE

    @property
    def orientation(self):
        # e3 is +-e1 e2 for any orthonormal imaginary triple
        return "positive" if dot(self.e1 * self.e2, self.e3) > 0 else "negative"

    @property
    def positive(self):
        return self.orientation == "positive"

    def vectors(self):
        return (ONE, self.e1, self.e2, self.e3)

    def matrix(self):
        """Columns are the coordinates of e0..e3 in the standard basis."""
        return np.column_stack([e.to_array() for e in self.vectors()])

    def imag_matrix(self):
        """3x3, columns e1, e2, e3 in (i, j, k) coordinates."""
        return np.column_stack([e.imag_vector() for e in (self.e1, self.e2, self.e3)])

    def coords(self, q):
        return np.array([dot(q, e) for e in self.vectors()])

    def imag_coords(self, q):
        return np.array([dot(q, e) for e in (self.e1, self.e2, self.e3)])

    def from_coords(self, c):
        out = ZERO
        for coeff, e in zip(c, self.vectors()):
            out = out + e * float(coeff)
        return out

    def from_imag_coords(self, c):
        return self.e1 * float(c[0]) + self.e2 * float(c[1]) + self.e3 * float(c[2])

    def to_list(self):
        return [e.to_list() for e in self.vectors()]

    # complex-pair coordinates; slice numbers a + b e1 are python complex a + bj

    def slice_number(self, z):
        z = complex(z)
        return ONE * z.real + self.e1 * z.imag

    def split_left(self, q):
        """q = z1 + z2 e2."""
        a, b, c, d = self.coords(q)
        return complex(a, b), complex(c, d)

    def join_left(self, z1, z2):
        return self.slice_number(z1) + self.slice_number(z2) * self.e2

    def split_right(self, q):
        """q = w1 + e2 w2."""
        a, b, c, d = self.coords(q)
        return complex(a, b), complex(c, -d)

    def join_right(self, w1, w2):
        return self.slice_number(w1) + self.e2 * self.slice_number(w2)


STANDARD_BASIS = OrthonormalBasis(I, J, K)


def basis_from_units(e1, e2, e3):
    return OrthonormalBasis(as_quaternion(e1), as_quaternion(e2), as_quaternion(e3))


def theta(p, x):
    """x -> p x p^-1."""
    if p.norm_sq() == 0.0:
        raise DomainError("theta needs a nonzero quaternion")
    return p * x * p.inverse()


def bar_theta(p, x):
    """x -> p conj(x) p^-1."""
    if p.norm_sq() == 0.0:
        raise DomainError("bar_theta needs a nonzero quaternion")
    return p * x.conj() * p.inverse()


def complete_basis(g, slot=3):
    """Deterministic positively oriented basis with g in position 1 or 3."""
    g = ImaginaryUnit(g)
    gv = g.imag_vector()
    axis = int(np.argmin(np.abs(gv)))
    a = np.zeros(3)
    a[axis] = 1.0
    a = a - np.dot(a, gv) * gv
    u = ImaginaryUnit.from_vector(a).value
    gq = g.value
    if slot == 3:
        # e3 e1 = e2 for a positive basis
        return OrthonormalBasis(u, gq * u, gq)
    if slot == 1:
        return OrthonormalBasis(gq, u, gq * u)
    raise ValueError("slot must be 1 or 3")


def inversion(q0, q):
    """tau^{q0}(q) = q0 + (q - q0) / |q - q0|^2."""
    d = q - q0
    n = d.norm_sq()
    if n == 0.0:
        raise DomainError("inversion is undefined at its center")
    return q0 + d * (1.0 / n)


def format_quaternion(q, digits=None):
    def fmt(x):
        return repr(float(x)) if digits is None else f"{x:.{digits}g}"

    parts = []
    for coeff, unit in zip(q, ("", "i", "j", "k")):
        if coeff == 0.0:
            continue
        s = fmt(coeff) + unit
        if parts and not s.startswith("-"):
            s = "+" + s
        parts.append(s)
    return "".join(parts) if parts else fmt(0.0)
