"""
Parser for 1-forms, web equations and polynomials over Q(i, sqrt3)
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from models.field import FieldElem, I, SQRT3
from models.foliation import AffineOneForm
from models.polynomial import MPoly, VarSet
from models.web import Chart, ImplicitWeb
from services.errors import FormSyntaxError, NonLinearDifferential

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()−]))")
_CONSTANTS = {"i": I, "sqrt3": SQRT3}
_DIFFERENTIALS = ("dx", "dy")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if not match:
            start = len(text) - len(text[position:].lstrip())
            raise FormSyntaxError(f"unexpected character '{text[start]}'", start)
        number, name, op = match.groups()
        start = match.start(match.lastindex)
        if number is not None:
            tokens.append(Token("number", number, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        else:
            tokens.append(Token("op", "-" if op == "−" else op, start))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


@dataclass(frozen=True)
class _Value:
    """scalar + P*dx + Q*dy"""

    scalar: MPoly
    dx: MPoly
    dy: MPoly

    @property
    def has_differential(self) -> bool:
        return not (self.dx.is_zero() and self.dy.is_zero())


class _Parser:
    def __init__(self, text: str, ring: VarSet, allow_differentials: bool):
        self.tokens = tokenize(text)
        self.index = 0
        self.ring = ring
        self.allow_differentials = allow_differentials
        self.zero = MPoly.zero(ring)

    # Token helpers

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str) -> None:
        if self.current.text != text:
            raise FormSyntaxError(f"expected '{text}'", self.current.position)
        self.advance()

    def scalar(self, poly: MPoly) -> _Value:
        return _Value(poly, self.zero, self.zero)

    # Grammar: expr := term (('+'|'-') term)*

    def parse(self) -> _Value:
        value = self.expr()
        if self.current.kind != "end":
            raise FormSyntaxError(f"unexpected '{self.current.text}'", self.current.position)
        return value

    def expr(self) -> _Value:
        value = self.term()
        while self.current.text in ("+", "-"):
            op = self.advance().text
            right = self.term()
            value = self.add(value, right) if op == "+" else self.add(value, self.negate(right))
        return value

    def term(self) -> _Value:
        value = self.unary()
        while True:
            token = self.current
            if token.text in ("*", "/"):
                self.advance()
                right = self.unary()
                value = self.multiply(value, right, token) if token.text == "*" else self.divide(value, right, token)
            elif token.kind in ("number", "name") or token.text == "(":
                value = self.multiply(value, self.unary(), token)
            else:
                return value

    def unary(self) -> _Value:
        if self.current.text == "-":
            self.advance()
            return self.negate(self.unary())
        if self.current.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> _Value:
        base = self.atom()
        if self.current.text in ("^", "**"):
            token = self.advance()
            if self.current.kind != "number":
                raise FormSyntaxError("exponents must be non-negative integers", self.current.position)
            exponent = int(self.advance().text)
            if base.has_differential:
                if exponent != 1:
                    raise NonLinearDifferential("a differential cannot be raised to a power", token.position)
                return base
            return self.scalar(base.scalar ** exponent)
        return base

    def atom(self) -> _Value:
        token = self.advance()
        if token.kind == "number":
            return self.scalar(MPoly.constant(self.ring, int(token.text)))
        if token.kind == "name":
            if token.text in _CONSTANTS:
                return self.scalar(MPoly.constant(self.ring, _CONSTANTS[token.text]))
            if token.text in _DIFFERENTIALS:
                if not self.allow_differentials:
                    raise FormSyntaxError(f"'{token.text}' is not allowed here", token.position)
                one = MPoly.one(self.ring)
                return _Value(self.zero, one, self.zero) if token.text == "dx" else _Value(self.zero, self.zero, one)
            return self.scalar(MPoly.var(self.ring, token.text))
        if token.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        if token.kind == "end":
            raise FormSyntaxError("unexpected end of input", token.position)
        raise FormSyntaxError(f"unexpected '{token.text}'", token.position)

    # Arithmetic on linear differential expressions

    @staticmethod
    def add(a: _Value, b: _Value) -> _Value:
        return _Value(a.scalar + b.scalar, a.dx + b.dx, a.dy + b.dy)

    @staticmethod
    def negate(a: _Value) -> _Value:
        return _Value(-a.scalar, -a.dx, -a.dy)

    @staticmethod
    def multiply(a: _Value, b: _Value, token: Token) -> _Value:
        if a.has_differential and b.has_differential:
            raise NonLinearDifferential("product of two differentials", token.position)
        return _Value(
            a.scalar * b.scalar,
            a.scalar * b.dx + b.scalar * a.dx,
            a.scalar * b.dy + b.scalar * a.dy,
        )

    @staticmethod
    def divide(a: _Value, b: _Value, token: Token) -> _Value:
        if b.has_differential or not b.scalar.is_constant() or b.scalar.is_zero():
            raise FormSyntaxError("division is only allowed by a nonzero constant", token.position)
        inverse = b.scalar.constant_value().inverse()
        return _Value(a.scalar.scale(inverse), a.dx.scale(inverse), a.dy.scale(inverse))


def _names_in(text: str) -> List[str]:
    seen: List[str] = []
    for token in tokenize(text):
        if token.kind == "name" and token.text not in _CONSTANTS and token.text not in _DIFFERENTIALS:
            if token.text not in seen:
                seen.append(token.text)
    return seen


def _ring_for(text: str, leading: Sequence[str]) -> VarSet:
    return VarSet(tuple(leading)).extend(_names_in(text))


def parse_oneform(text: str) -> AffineOneForm:
    """'A*dx + B*dy' with full distribution; names other than x, y become parameters"""
    value = _Parser(text, _ring_for(text, ("x", "y")), allow_differentials=True).parse()
    if not value.scalar.is_zero():
        raise FormSyntaxError("every term of a 1-form must carry dx or dy", 0)
    if not value.has_differential:
        raise FormSyntaxError("the 1-form is identically zero", 0)
    return AffineOneForm(value.dx, value.dy)


def parse_web(text: str) -> ImplicitWeb:
    """F(x, y, p) = 0 with p = dy/dx the fiber slope"""
    value = _Parser(text, _ring_for(text, ("x", "y", "p")), allow_differentials=False).parse()
    if value.scalar.is_zero():
        raise FormSyntaxError("the web equation is identically zero", 0)
    return ImplicitWeb(value.scalar, ("x", "y"), "p", Chart.AFFINE)


def parse_dual_web(text: str, fiber: str = "w", chart: Chart = Chart.DUAL2) -> ImplicitWeb:
    """F(p, q, w) = 0 in a dual chart, as printed for the Legendre webs"""
    value = _Parser(text, _ring_for(text, ("p", "q", fiber)), allow_differentials=False).parse()
    if value.scalar.is_zero():
        raise FormSyntaxError("the web equation is identically zero", 0)
    return ImplicitWeb(value.scalar, ("p", "q"), fiber, chart)


def parse_polynomial(text: str, ring: Optional[Sequence[str]] = None) -> MPoly:
    """Polynomial in the given ring, or in the names that occur in order of appearance"""
    names = _names_in(text)
    if ring is None:
        target = VarSet(tuple(names) or ("x",))
    else:
        target = VarSet(tuple(ring)).extend(names)
    poly = _Parser(text, target, allow_differentials=False).parse().scalar
    return poly if ring is None else poly.change_ring(VarSet(tuple(ring)))


def parse_scalar(text: str) -> FieldElem:
    poly = parse_polynomial(text, ("x",))
    if not poly.is_constant():
        raise FormSyntaxError(f"'{text}' is not a constant", 0)
    return poly.constant_value()


def parse_rational(text: str) -> Fraction:
    value = parse_scalar(text)
    if not value.is_rational():
        raise FormSyntaxError(f"'{text}' is not rational", 0)
    return value.c0


def format_form(form: AffineOneForm) -> str:
    return f"({form.P})*dx + ({form.Q})*dy"


def parse_matrix(rows: Sequence[Sequence[str]]) -> Tuple[Tuple[FieldElem, ...], ...]:
    return tuple(tuple(parse_scalar(entry) for entry in row) for row in rows)
