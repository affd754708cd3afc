"""Expression parsing, lowering, canonical printing, and JSON forms.

Grammar (explicit '*' only; juxtaposition is rejected so that 'ad' stays
unambiguous):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := primary ('^' UINT)?
    primary := SYMBOL | NUMBER | 'i' | '(' expr ')' | '[' expr ',' expr ']'
             | '-' primary

NUMBER is an unsigned rational 'p' or 'p/q'.  Symbols depend on context:
operator expressions use a, ad; phase expressions use al, als, Q, P.
Commutator brackets exist only in operator context.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ccr
from . import phase
from .ccr import OperatorPoly
from .exactnum import ExactComplex, I, Rational
from .phase import PhasePoly

OPERATOR = "operator"
PHASE = "phase"

MAX_EXPONENT = 64

_OPERATOR_SYMBOLS = {"a", "ad"}
_PHASE_SYMBOLS = {"al", "als", "Q", "P"}
_ALL_SYMBOLS = _OPERATOR_SYMBOLS | _PHASE_SYMBOLS


class ParseError(ValueError):
    """Syntax or context violation, carrying the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Sum:
    children: tuple


@dataclass(frozen=True)
class Product:
    children: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Commutator:
    left: object
    right: object


@dataclass(frozen=True)
class Symbol:
    name: str


@dataclass(frozen=True)
class Constant:
    value: ExactComplex


@dataclass(frozen=True)
class Negate:
    child: object


@dataclass(frozen=True)
class _Token:
    kind: str  # 'name' | 'number' | punctuation
    text: str
    pos: int


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()[],":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == "/":
                if i + 1 >= n or not text[i + 1].isdigit():
                    raise ParseError("expected digits after '/'", i + 1)
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                if int(text[dstart:i]) == 0:
                    raise ParseError("zero denominator", dstart)
            tokens.append(_Token("number", text[start:i], start))
            continue
        if ch.isalpha():
            start = i
            while i < n and text[i].isalnum():
                i += 1
            tokens.append(_Token("name", text[start:i], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    def __init__(self, tokens, context: str, length: int):
        self.tokens = tokens
        self.context = context
        self.pos = 0
        self.length = length

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.length)
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok is None or tok.kind != kind:
            at = tok.pos if tok else self.length
            raise ParseError(f"expected {kind!r}", at)
        return self.advance()

    def parse_expr(self):
        nodes = [self.parse_term()]
        while (tok := self.peek()) is not None and tok.kind in "+-":
            self.advance()
            term = self.parse_term()
            nodes.append(Negate(term) if tok.kind == "-" else term)
        return nodes[0] if len(nodes) == 1 else Sum(tuple(nodes))

    def parse_term(self):
        nodes = [self.parse_factor()]
        while (tok := self.peek()) is not None and tok.kind == "*":
            self.advance()
            nodes.append(self.parse_factor())
        return nodes[0] if len(nodes) == 1 else Product(tuple(nodes))

    def parse_factor(self):
        base = self.parse_primary()
        tok = self.peek()
        if tok is not None and tok.kind == "^":
            self.advance()
            num = self.expect("number")
            if "/" in num.text:
                raise ParseError("exponent must be an integer", num.pos)
            value = int(num.text)
            if value > MAX_EXPONENT:
                raise ParseError(f"exponent overflow (max {MAX_EXPONENT})", num.pos)
            return Power(base, value)
        return base

    def parse_primary(self):
        tok = self.advance()
        if tok.kind == "-":
            return Negate(self.parse_primary())
        if tok.kind == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if tok.kind == "[":
            if self.context != OPERATOR:
                raise ParseError("commutator brackets only in operator context", tok.pos)
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect("]")
            return Commutator(left, right)
        if tok.kind == "number":
            return Constant(ExactComplex(Rational(tok.text)))
        if tok.kind == "name":
            if tok.text == "i":
                return Constant(I)
            if tok.text in _ALL_SYMBOLS:
                allowed = _OPERATOR_SYMBOLS if self.context == OPERATOR else _PHASE_SYMBOLS
                if tok.text not in allowed:
                    raise ParseError(
                        f"{tok.text!r} is not a {self.context} symbol", tok.pos
                    )
                return Symbol(tok.text)
            raise ParseError(f"unknown symbol {tok.text!r}", tok.pos)
        raise ParseError(f"unexpected token {tok.text!r}", tok.pos)


def parse(text: str, context: str):
    """Parse text into an AST; raises ParseError with a byte offset on failure."""
    if context not in (OPERATOR, PHASE):
        raise ValueError(f"unknown context {context!r}")
    if not text or not text.strip():
        raise ParseError("empty input", 0)
    parser = _Parser(_tokenize(text), context, len(text))
    ast = parser.parse_expr()
    tok = parser.peek()
    if tok is not None:
        raise ParseError(f"trailing input {tok.text!r}", tok.pos)
    return ast


_PHASE_LOWER = {
    "al": phase.AL,
    "als": phase.ALS,
    "Q": phase.Q_POLY,
    "P": phase.P_POLY,
}


def lower(ast, context: str):
    """Lower an AST to an OperatorPoly or PhasePoly.

    Operator products fold left to right through CCR multiplication, so any
    input ordering lands in the same normal form ('a*ad' == 'ad*a + 1').
    """
    if context == OPERATOR:
        poly_cls, const = OperatorPoly, OperatorPoly.identity
        mul_ = ccr.multiply
    elif context == PHASE:
        poly_cls, const = PhasePoly, PhasePoly.one
        mul_ = phase.mul
    else:
        raise ValueError(f"unknown context {context!r}")

    def go(node):
        if isinstance(node, Sum):
            out = poly_cls.zero()
            for child in node.children:
                out = out + go(child)
            return out
        if isinstance(node, Product):
            out = const()
            for child in node.children:
                out = mul_(out, go(child))
            return out
        if isinstance(node, Power):
            out = const()
            base = go(node.base)
            for _ in range(node.exponent):
                out = mul_(out, base)
            return out
        if isinstance(node, Commutator):
            return ccr.commutator(go(node.left), go(node.right))
        if isinstance(node, Negate):
            return -go(node.child)
        if isinstance(node, Constant):
            return const().scale(node.value)
        if isinstance(node, Symbol):
            if context == OPERATOR:
                return ccr.A_OP if node.name == "a" else ccr.AD_OP
            return _PHASE_LOWER[node.name]
        raise TypeError(f"not an AST node: {node!r}")

    return go(ast)


def parse_poly(text: str, context: str):
    """Parse and lower in one step."""
    return lower(parse(text, context), context)


def print_canonical(p) -> str:
    """Canonical text: terms by total degree descending, then m descending."""
    if not isinstance(p, (OperatorPoly, PhasePoly)):
        raise TypeError(f"expected a polynomial, got {type(p).__name__}")
    return str(p)


def poly_to_json(p) -> dict:
    """JSON form: {"kind": ..., "terms": [{"m","n","re","im"}, ...]} (canonical order)."""
    if isinstance(p, OperatorPoly):
        kind = "operator"
    elif isinstance(p, PhasePoly):
        kind = "phase"
    else:
        raise TypeError(f"expected a polynomial, got {type(p).__name__}")
    terms = [
        {"m": m, "n": n, "re": str(c.re), "im": str(c.im)}
        for (m, n), c in p.sorted_items()
    ]
    return {"kind": kind, "terms": terms}


def poly_from_json(obj: dict):
    """Inverse of poly_to_json."""
    kind = obj.get("kind")
    if kind == "operator":
        cls = OperatorPoly
    elif kind == "phase":
        cls = PhasePoly
    else:
        raise ValueError(f"unknown polynomial kind {kind!r}")
    terms = {}
    for entry in obj.get("terms", []):
        key = (int(entry["m"]), int(entry["n"]))
        coeff = ExactComplex(Rational(str(entry["re"])), Rational(str(entry["im"])))
        terms[key] = terms.get(key, ExactComplex(0)) + coeff
    return cls(terms)
