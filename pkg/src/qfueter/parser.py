"""Text formats for polynomial functions and linear maps.

Functions::

    f1 = conj(z1) + z2^2; f2 = conj(z2)

Maps, one of::

    matrix: [16 reals, row-major]
    coeffs: l0, l1, l2, l3          # quaternion literals a+bi+cj+dk
    basis: e1, e2, e3               # optional, default i, j, k
    pairform: m1, m2, n1, n2

``#`` starts a comment that runs to the end of the line.
"""

import math
import re
from dataclasses import dataclass

import numpy as np

from .adjugate import complex_pair_coefficients, map_from_pair_coefficients
from .errors import DomainError, ParseError, SemanticError
from .fueter import QPolynomialFunction
from .linmap import RealLinearMap, decompose_bar_theta, from_bar_theta
from .polynomial import Polynomial
from .quaternion import STANDARD_BASIS, OrthonormalBasis, Quaternion, format_quaternion

MAX_DEGREE = 32
MAX_DEPTH = 200

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^();=,:\[\]/])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # number, ident, op, eof
    text: str
    line: int
    col: int


def tokenize(text):
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind in ("number", "ident", "op"):
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


def _describe(tok):
    return "end of input" if tok.kind == "eof" else repr(tok.text)


class _Stream:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def at(self, *texts):
        t = self.tok
        return t.kind in ("op", "ident") and t.text in texts

    def expect(self, text, expected=None):
        if not self.at(text):
            self.fail(f"unexpected {_describe(self.tok)}", expected or (text,))
        return self.advance()

    def fail(self, message, expected=(), tok=None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col, expected)


def _number(tok):
    value = float(tok.text)
    if not math.isfinite(value):
        raise SemanticError(f"number {tok.text} is out of range", tok.line, tok.col)
    return value


# ---------------------------------------------------------------- functions

_OPERAND = ("number", "I", "z1", "z2", "conj", "(", "-")
_VARS = {"z1": "z1", "z2": "z2"}
_CONJ = {"z1": "zb1", "z2": "zb2"}


class _FunctionParser:
    def __init__(self, text):
        self.s = _Stream(text)
        self.depth = 0

    def program(self):
        s = self.s
        parts = {}
        while s.tok.kind != "eof":
            start = s.tok
            if not s.at("f1", "f2"):
                s.fail(f"unexpected {_describe(start)}", ("f1", "f2"))
            name = s.advance().text
            if name in parts:
                raise SemanticError(f"{name} is defined twice", start.line, start.col)
            s.expect("=")
            parts[name] = self.expr()
            if s.at(";"):
                s.advance()
            elif s.tok.kind != "eof" and not s.at("f1", "f2"):
                s.fail(f"unexpected {_describe(s.tok)}", (";", "+", "-", "*", "^"))
        for name in ("f1", "f2"):
            if name not in parts:
                s.fail(f"missing definition of {name}", (name,))
        return QPolynomialFunction(parts["f1"], parts["f2"])

    def expr(self):
        s = self.s
        left = self.term()
        while s.at("+", "-"):
            op = s.advance().text
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self):
        s = self.s
        left = self.unary()
        while s.at("*"):
            tok = s.advance()
            right = self.unary()
            self._check_degree(left.degree() + right.degree(), tok)
            left = left * right
        return left

    def unary(self):
        s = self.s
        if s.at("-"):
            s.advance()
            self._enter()
            try:
                return -self.unary()
            finally:
                self.depth -= 1
        return self.power()

    def power(self):
        s = self.s
        base = self.atom()
        if s.at("^"):
            s.advance()
            etok = s.tok
            self._enter()
            try:
                exp = self.unary()
            finally:
                self.depth -= 1
            n = self._exponent(exp, etok)
            self._check_degree(base.degree() * n, etok)
            return base ** n
        return base

    def _exponent(self, exp, tok):
        if not exp.is_constant():
            raise SemanticError("exponent must be a constant", tok.line, tok.col)
        v = exp.constant_value()
        if v.imag != 0 or v.real != int(v.real):
            raise SemanticError("exponent must be an integer", tok.line, tok.col)
        if v.real < 0:
            raise SemanticError("negative exponent", tok.line, tok.col)
        if v.real > MAX_DEGREE:
            raise SemanticError(f"exponent exceeds {MAX_DEGREE}", tok.line, tok.col)
        return int(v.real)

    def _check_degree(self, d, tok):
        if d > MAX_DEGREE:
            raise SemanticError(f"polynomial degree exceeds {MAX_DEGREE}", tok.line, tok.col)

    def _enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            self.s.fail("expression nested too deeply")

    def atom(self):
        s = self.s
        tok = s.tok
        if tok.kind == "number":
            s.advance()
            return Polynomial.constant(_number(tok))
        if s.at("I"):
            s.advance()
            return Polynomial.constant(1j)
        if tok.kind == "ident" and tok.text in _VARS:
            s.advance()
            return Polynomial.variable(_VARS[tok.text])
        if s.at("conj"):
            s.advance()
            s.expect("(")
            var = s.tok
            if not (var.kind == "ident" and var.text in _CONJ):
                s.fail(f"conj() takes a bare variable, got {_describe(var)}", ("z1", "z2"))
            s.advance()
            s.expect(")")
            return Polynomial.variable(_CONJ[var.text])
        if s.at("("):
            s.advance()
            self._enter()
            try:
                inner = self.expr()
            finally:
                self.depth -= 1
            s.expect(")", (")", "+", "-", "*", "^"))
            return inner
        s.fail(f"expected operand, got {_describe(tok)}", _OPERAND)


def parse_function(text):
    return _FunctionParser(text).program()


def parse_polynomial(text):
    p = _FunctionParser(text)
    out = p.expr()
    if p.s.tok.kind != "eof":
        p.s.fail(f"unexpected {_describe(p.s.tok)}", ("+", "-", "*", "^"))
    return out


def format_number(x):
    return repr(float(x))


def format_coefficient(c):
    c = complex(c)
    if c.imag == 0:
        return format_number(c.real)
    if c.real == 0:
        return f"{format_number(c.imag)}*I"
    return f"({format_number(c.real)} + {format_number(c.imag)}*I)"


def format_monomial(exps):
    names = ("z1", "z2", "conj(z1)", "conj(z2)")
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p):
    terms = []
    for exps, c in p.sorted_terms():
        mono = format_monomial(exps)
        coeff = format_coefficient(c)
        if not mono:
            terms.append(coeff)
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{coeff}*{mono}")
    return " + ".join(terms) if terms else "0"


def print_function(F):
    return f"f1 = {format_polynomial(F.f1)}; f2 = {format_polynomial(F.f2)}"


# --------------------------------------------------------------------- maps

_UNITS = {"i": 1, "j": 2, "k": 3}


def _quaternion_literal(s, depth=0):
    """[+-] term {(+|-) term} [/ number], term = number [*] [unit] | unit | ( literal )."""
    if depth > MAX_DEPTH:
        s.fail("literal nested too deeply")
    coords = [0.0, 0.0, 0.0, 0.0]
    sign = 1.0
    if s.at("+", "-"):
        sign = -1.0 if s.advance().text == "-" else 1.0
    first = True
    while True:
        if not first:
            if not s.at("+", "-"):
                break
            sign = -1.0 if s.advance().text == "-" else 1.0
        first = False
        tok = s.tok
        if s.at("("):
            s.advance()
            inner = _quaternion_literal(s, depth + 1)
            s.expect(")", (")", "+", "-"))
            for n in range(4):
                coords[n] += sign * inner[n]
            continue
        if tok.kind == "number":
            s.advance()
            value = _number(tok)
            if s.at("*"):
                s.advance()
                if not (s.tok.kind == "ident" and s.tok.text in _UNITS):
                    s.fail(f"expected i, j or k, got {_describe(s.tok)}", tuple(_UNITS))
            if s.tok.kind == "ident" and s.tok.text in _UNITS:
                coords[_UNITS[s.advance().text]] += sign * value
            else:
                coords[0] += sign * value
            continue
        if tok.kind == "ident" and tok.text in _UNITS:
            s.advance()
            coords[_UNITS[tok.text]] += sign
            continue
        s.fail(f"expected quaternion literal, got {_describe(tok)}", ("number", "i", "j", "k", "("))
    if s.at("/"):
        s.advance()
        tok = s.tok
        if tok.kind != "number":
            s.fail(f"expected number after '/', got {_describe(tok)}", ("number",))
        s.advance()
        d = _number(tok)
        if d == 0:
            raise SemanticError("division by zero", tok.line, tok.col)
        coords = [c / d for c in coords]
    return coords


def _literal_list(s):
    tok = s.tok
    out = [(_quaternion_literal(s), tok)]
    while s.at(","):
        s.advance()
        tok = s.tok
        out.append((_quaternion_literal(s), tok))
    return out


def parse_quaternion(text):
    s = _Stream(text)
    q = _quaternion_literal(s)
    if s.tok.kind != "eof":
        s.fail(f"unexpected {_describe(s.tok)}", ("+", "-", "/"))
    return Quaternion(*q)


def _arity(items, n, what, tok):
    if len(items) != n:
        raise SemanticError(f"{what} needs {n} entries, got {len(items)}", tok.line, tok.col)


def parse_map(text):
    s = _Stream(text)
    head = s.tok
    if not s.at("matrix", "coeffs", "pairform"):
        s.fail(f"unexpected {_describe(head)}", ("matrix", "coeffs", "pairform"))
    kind = s.advance().text
    s.expect(":")
    if kind == "matrix":
        bracket = s.at("[")
        if bracket:
            s.advance()
        items = _literal_list(s)
        if bracket:
            s.expect("]", ("]", ","))
        for q, tok in items:
            if any(q[1:]):
                raise SemanticError("matrix entries must be real", tok.line, tok.col)
        _arity(items, 16, "matrix", head)
        matrix = np.array([q[0] for q, _ in items]).reshape(4, 4)
    else:
        items = _literal_list(s)
        if not (s.at(";", "basis") or s.tok.kind == "eof"):
            s.fail(f"unexpected {_describe(s.tok)}", (",", ";", "basis"))
        _arity(items, 4, kind, head)
    basis = STANDARD_BASIS
    if s.at(";"):
        s.advance()
    if s.at("basis"):
        btok = s.advance()
        s.expect(":")
        units = _literal_list(s)
        _arity(units, 3, "basis", btok)
        try:
            basis = OrthonormalBasis(*(Quaternion(*q) for q, _ in units))
        except DomainError as exc:
            raise SemanticError(str(exc), btok.line, btok.col) from None
        if kind == "matrix":
            raise SemanticError("a matrix source takes no basis", btok.line, btok.col)
    if s.at(";"):
        s.advance()
    if s.tok.kind != "eof":
        s.fail(f"unexpected {_describe(s.tok)}", ("basis", ",") if kind != "matrix" else (",",))
    if kind == "matrix":
        return RealLinearMap(matrix)
    qs = [Quaternion(*q) for q, _ in items]
    if kind == "coeffs":
        return from_bar_theta(qs, basis, "left")
    if not basis.positive:
        raise SemanticError("pairform needs a positively oriented basis", head.line, head.col)
    return map_from_pair_coefficients(*qs, basis)


def format_map_matrix(L):
    return "matrix: [" + ", ".join(format_number(x) for x in L.matrix.ravel()) + "]"


def format_map_coeffs(L, basis=STANDARD_BASIS):
    coeffs = decompose_bar_theta(L, basis, "left").coeffs
    text = "coeffs: " + ", ".join(format_quaternion(c) for c in coeffs)
    if basis is not STANDARD_BASIS:
        text += "\nbasis: " + ", ".join(format_quaternion(e) for e in (basis.e1, basis.e2, basis.e3))
    return text


def format_map_pairform(L, basis=STANDARD_BASIS):
    pc = complex_pair_coefficients(L, basis)
    text = "pairform: " + ", ".join(format_quaternion(q) for q in (pc.m1, pc.m2, pc.n1, pc.n2))
    if basis is not STANDARD_BASIS:
        text += "\nbasis: " + ", ".join(format_quaternion(e) for e in (basis.e1, basis.e2, basis.e3))
    return text
