"""Reader and writer for ideal files.

An ideal file declares its ring on the first line and gives one ideal
expression after it::

    vars: x_1..x_12, a..c
    ideal(x_1,x_2,x_3,x_4,x_5)*ideal(a^3) + ideal(x_5,x_6,x_7,x_8,x_9)*ideal(b^3)
      + ideal(b,x_10,x_11,x_12)*ideal(c^3)

``+`` is the ideal sum and ``*`` the ordinary product. Besides
``ideal(...)``, a bare generator list ``(m1, ..., mk)`` is a literal too, so
the canonical rendering of an ideal can be read back; ``(0)`` is the zero
ideal. Underscores in identifiers are ignored when names are compared.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .ideals import MonomialIdeal
from .monomials import Monomial, PolynomialContext, lookup_key, parse_field

KEYWORDS = {"ideal", "vars"}

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<range>\.\.)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<int>\d+)|(?P<op>[:,+*^()])"
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at {line}:{col}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            tokens.append(Token("nl", "\n", line, pos - start + 1))
            line += 1
            start = m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - start + 1))
    return tokens


# AST
@dataclass(frozen=True)
class IdealLiteral:
    generators: tuple[tuple[int, ...], ...]  # empty tuple: the zero ideal


@dataclass(frozen=True)
class SumExpr:
    terms: tuple["Node", ...]


@dataclass(frozen=True)
class ProductExpr:
    factors: tuple["Node", ...]


Node = Union[IdealLiteral, SumExpr, ProductExpr]


@dataclass(frozen=True)
class IdealExpression:
    variables: tuple[str, ...]
    root: Node


_SUFFIX_RE = re.compile(r"^(.*?)(\d+)$")


def expand_range(lo: Token, hi: Token) -> list[str]:
    a, b = lo.text, hi.text
    if len(a) == 1 and len(b) == 1 and a.isalpha() and b.isalpha():
        if a.islower() != b.islower() or a > b:
            raise ParseError(f"bad variable range {a}..{b}", lo.line, lo.col)
        return [chr(c) for c in range(ord(a), ord(b) + 1)]
    ma, mb = _SUFFIX_RE.match(a), _SUFFIX_RE.match(b)
    if not ma or not mb or ma.group(1) != mb.group(1) or not ma.group(1):
        raise ParseError(
            f"bad variable range {a}..{b}: endpoints need one prefix and numeric suffixes",
            lo.line,
            lo.col,
        )
    i, j = int(ma.group(2)), int(mb.group(2))
    if i > j:
        raise ParseError(f"empty variable range {a}..{b}", lo.line, lo.col)
    return [f"{ma.group(1)}{t}" for t in range(i, j + 1)]


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.variables: list[str] = []
        self.index: dict[str, int] = {}

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def skip_nl(self) -> None:
        while self.tok.kind == "nl":
            self.pos += 1

    def expect(self, text: str, what: str | None = None) -> Token:
        t = self.tok
        if t.text != text:
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise ParseError(f"expected {what or repr(text)}, found {found}", t.line, t.col)
        return self.advance()

    def error(self, message: str, t: Token | None = None) -> ParseError:
        t = t or self.tok
        return ParseError(message, t.line, t.col)

    # vars: atom ("," atom)*
    def ring_decl(self) -> None:
        self.skip_nl()
        t = self.tok
        if t.text != "vars":
            raise self.error("expected ring declaration 'vars:'")
        self.advance()
        self.expect(":")
        while True:
            a = self.tok
            if a.kind != "ident":
                raise self.error("expected a variable name")
            self.advance()
            names = [a.text]
            if self.tok.kind == "range":
                self.advance()
                b = self.tok
                if b.kind != "ident":
                    raise self.error("expected the end of a variable range")
                self.advance()
                names = expand_range(a, b)
            for name in names:
                if name in KEYWORDS:
                    raise self.error(f"{name!r} is reserved", a)
                key = lookup_key(name)
                if key in self.index:
                    raise self.error(f"duplicate variable {name}", a)
                self.index[key] = len(self.variables)
                self.variables.append(name)
            if self.tok.text != ",":
                break
            self.advance()
        if self.tok.kind != "nl":
            raise self.error("expected a newline after the ring declaration")

    def expr(self) -> Node:
        terms = [self.term()]
        while self.tok.text == "+":
            self.advance()
            self.skip_nl()
            terms.append(self.term())
            self.skip_nl()
        return terms[0] if len(terms) == 1 else SumExpr(tuple(terms))

    def term(self) -> Node:
        self.skip_nl()
        factors = [self.factor()]
        self.skip_nl()
        while self.tok.text == "*":
            self.advance()
            self.skip_nl()
            factors.append(self.factor())
            self.skip_nl()
        return factors[0] if len(factors) == 1 else ProductExpr(tuple(factors))

    def factor(self) -> Node:
        t = self.tok
        if t.kind == "ident" and t.text == "ideal":
            self.advance()
            open_tok = self.expect("(", "'(' after 'ideal'")
            return self.literal(open_tok)
        if t.text == "(":
            self.advance()
            self.skip_nl()
            nxt = self.tok
            if nxt.kind == "int" or (nxt.kind == "ident" and nxt.text not in KEYWORDS):
                return self.literal(t)
            inner = self.expr()
            self.skip_nl()
            if self.tok.text != ")":
                raise self.error(f"unbalanced parentheses: '(' at {t.line}:{t.col} is never closed")
            self.advance()
            return inner
        if t.kind == "eof":
            raise self.error("unexpected end of input; expected an ideal")
        if t.text == ")":
            raise self.error("unbalanced parentheses: unexpected ')'")
        raise self.error(f"expected 'ideal(' or '(', found {t.text!r}")

    def literal(self, open_tok: Token) -> IdealLiteral:
        self.skip_nl()
        if self.tok.text == ")":
            raise self.error("empty ideal literal", open_tok)
        gens: list[tuple[int, ...]] = []
        zero = False
        while True:
            self.skip_nl()
            t = self.tok
            if t.kind == "int":
                if t.text == "0":
                    zero = True
                    self.advance()
                elif t.text == "1":
                    self.advance()
                    gens.append((0,) * len(self.variables))
                else:
                    raise self.error(f"integer {t.text} is not a monomial")
            else:
                gens.append(self.monomial())
            self.skip_nl()
            if self.tok.text == ",":
                self.advance()
                continue
            if self.tok.text == ")":
                self.advance()
                break
            if self.tok.kind == "eof":
                raise self.error(
                    f"unbalanced parentheses: '(' at {open_tok.line}:{open_tok.col} is never closed"
                )
            raise self.error(f"expected ',' or ')', found {self.tok.text!r}")
        if zero and gens:
            raise ParseError("0 cannot be listed with other generators", open_tok.line, open_tok.col)
        return IdealLiteral(tuple(gens))

    def monomial(self) -> tuple[int, ...]:
        e = [0] * len(self.variables)
        while True:
            t = self.tok
            if t.kind != "ident" or t.text in KEYWORDS:
                raise self.error("expected a variable")
            key = lookup_key(t.text)
            if key not in self.index:
                raise self.error(f"unknown variable {t.text}")
            self.advance()
            k = 1
            if self.tok.text == "^":
                caret = self.advance()
                if self.tok.kind != "int":
                    raise self.error("malformed power: expected a nonnegative integer exponent", caret)
                k = int(self.advance().text)
            e[self.index[key]] += k
            if self.tok.text == "*" and self.tokens[self.pos + 1].kind == "ident":
                self.advance()
                continue
            return tuple(e)

    def file(self) -> IdealExpression:
        self.ring_decl()
        self.skip_nl()
        if self.tok.kind == "eof":
            raise self.error("missing ideal expression")
        root = self.expr()
        self.skip_nl()
        if self.tok.kind != "eof":
            if self.tok.text == ")":
                raise self.error("unbalanced parentheses: unexpected ')'")
            raise self.error(f"unexpected {self.tok.text!r} after the expression")
        return IdealExpression(tuple(self.variables), root)


def parse_ideal_file(text: str) -> IdealExpression:
    return _Parser(text).file()


def _eval(node: Node, ctx: PolynomialContext) -> MonomialIdeal:
    if isinstance(node, IdealLiteral):
        return MonomialIdeal(ctx, (Monomial(ctx, e) for e in node.generators))
    if isinstance(node, SumExpr):
        out = _eval(node.terms[0], ctx)
        for t in node.terms[1:]:
            out = out + _eval(t, ctx)
        return out
    out = _eval(node.factors[0], ctx)
    for f in node.factors[1:]:
        out = out * _eval(f, ctx)
    return out


def evaluate(expr: IdealExpression, characteristic: int | str = 0) -> MonomialIdeal:
    ctx = PolynomialContext(expr.variables, parse_field(characteristic))
    return _eval(expr.root, ctx)


def read_ideal(text: str, characteristic: int | str = 0) -> MonomialIdeal:
    return evaluate(parse_ideal_file(text), characteristic)


def render_ideal_file(I: MonomialIdeal) -> str:
    """Canonical text of an ideal file: regenerated ``vars:`` line, then G(I)."""
    return f"vars: {', '.join(I.context.variables)}\n{I}\n"


def parse_ring(text: str, characteristic: int | str = 0) -> PolynomialContext:
    """Context from a variable list such as ``"x1..x4, a..c"``."""
    p = _Parser(f"vars: {text.strip()}\n")
    p.ring_decl()
    if p.tokens[p.pos + 1].kind != "eof":
        raise p.error("unexpected input after the variable list")
    return PolynomialContext(tuple(p.variables), parse_field(characteristic))


def parse_monomial(ctx: PolynomialContext, text: str) -> Monomial:
    """A single monomial such as ``x^2*z`` or ``1`` in the given context."""
    p = _Parser(f"vars: {', '.join(ctx.variables)}\n({text.strip()})")
    p.ring_decl()
    p.skip_nl()
    lit = p.factor()
    if p.tok.kind != "eof" or not isinstance(lit, IdealLiteral) or len(lit.generators) != 1:
        raise ValueError(f"not a single monomial: {text!r}")
    return Monomial(ctx, lit.generators[0])
