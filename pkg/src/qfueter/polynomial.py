"""Complex polynomials in the commuting formal variables z1, z2, zb1, zb2."""

import numpy as np

VARIABLES = ("z1", "z2", "zb1", "zb2")


class Polynomial:
    """Sparse polynomial: exponent tuple (a, b, c, d) of z1^a z2^b zb1^c zb2^d -> complex coefficient.

    zb1, zb2 are formal; evaluation substitutes their conjugates.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = complex(coeff)
            if coeff != 0:
                clean[tuple(int(e) for e in exps)] = coeff
        self.terms = clean

    @classmethod
    def constant(cls, c):
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def variable(cls, name):
        exps = [0, 0, 0, 0]
        exps[VARIABLES.index(name)] = 1
        return cls({tuple(exps): 1.0})

    def __add__(self, other):
        other = _as_poly(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def is_zero(self, tol=0.0):
        return all(abs(c) <= tol for c in self.terms.values())

    def max_coeff(self):
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        return self.terms.get((0, 0, 0, 0), 0j)

    def conj(self):
        """The polynomial whose values are the conjugates of ours."""
        return Polynomial({(e[2], e[3], e[0], e[1]): c.conjugate() for e, c in self.terms.items()})

    def diff(self, name):
        k = VARIABLES.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[k] == 0:
                continue
            ne = list(e)
            ne[k] -= 1
            out[tuple(ne)] = out.get(tuple(ne), 0) + c * e[k]
        return Polynomial(out)

    def __call__(self, z1, z2):
        """Evaluate at (z1, z2); accepts scalars or numpy arrays."""
        vals = (z1, z2, np.conj(z1), np.conj(z2))
        total = 0j
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    def sorted_terms(self):
        """Canonical order: total degree, then exponents lexicographically."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def __repr__(self):
        return f"Polynomial({dict(self.sorted_terms())!r})"


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    return Polynomial.constant(x)
