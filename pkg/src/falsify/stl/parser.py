"""Recursive-descent parser for the textual specification grammar.

    formula  := until
    until    := disj ('U' interval? disj)*          (lowest precedence, left-binding)
    disj     := conj ('||' conj)*
    conj     := unary ('&&' unary)*
    unary    := '!' unary | '[]' interval? unary | '<>' interval? unary
              | '(' formula ')' | 'true' | 'false' | atom
    interval := '[' number ',' (number | 'inf') ']'
    atom     := expr cmp expr          cmp in {<, <=, >, >=}; == is rejected
    expr     := term (('+'|'-') term)* ; term := factor ('*' factor)*
    factor   := number | name | '(' expr ')' | '-' factor
              | ('abs'|'min'|'max') '(' expr {',' expr} ')'

An omitted interval means [0, inf].
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from ..errors import ParseError
from . import formula as F

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(\.\d*)?([eE][+-]?\d+)?|\.\d+([eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\[\]|<>|&&|\|\||==|<=|>=|[-+*!()\[\],<>=])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"U", "true", "false", "abs", "min", "max", "inf"}


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num' | 'name' | 'op' | 'eof'
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        lexeme = m.group()
        if kind != "ws":
            tokens.append(_Token(kind, lexeme, line, col))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        pos = m.end()
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    # -- token plumbing -----------------------------------------------------

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def match(self, text: str) -> bool:
        if self.peek().kind == "op" and self.peek().text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind == "op" and tok.text == text:
            return self.advance()
        raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}",
                         tok.line, tok.column)

    def error(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column)

    # -- grammar ------------------------------------------------------------

    def parse(self) -> F.Formula:
        phi = self.until()
        tok = self.peek()
        if tok.kind != "eof":
            raise self.error(f"unexpected trailing input {tok.text!r}")
        return phi

    def until(self) -> F.Formula:
        phi = self.disj()
        while self.peek().kind == "name" and self.peek().text == "U":
            self.advance()
            interval = self.optional_interval()
            rhs = self.disj()
            phi = F.Until(interval, phi, rhs)
        return phi

    def disj(self) -> F.Formula:
        phi = self.conj()
        while self.match("||"):
            phi = F.or_(phi, self.conj())
        return phi

    def conj(self) -> F.Formula:
        phi = self.unary()
        while self.match("&&"):
            phi = F.And(phi, self.unary())
        return phi

    def unary(self) -> F.Formula:
        tok = self.peek()
        if tok.kind == "op":
            if self.match("!"):
                return F.Not(self.unary())
            if self.match("[]"):
                return F.always(self.optional_interval(), self.unary())
            if self.match("<>"):
                return F.eventually(self.optional_interval(), self.unary())
            if tok.text == "(":
                # '(' can open either a grouped formula or an atom's
                # parenthesized expression; try the atom reading first.
                saved = self.pos
                try:
                    return self.atom()
                except ParseError:
                    self.pos = saved
                self.expect("(")
                phi = self.until()
                self.expect(")")
                return phi
            raise self.error(f"unexpected {tok.text!r}")
        if tok.kind == "name" and tok.text == "true":
            self.advance()
            return F.TRUE
        if tok.kind == "name" and tok.text == "false":
            self.advance()
            return F.FALSE
        return self.atom()

    def atom(self) -> F.Formula:
        left = self.expr()
        tok = self.peek()
        if tok.kind != "op" or tok.text not in ("<", "<=", ">", ">=", "==", "="):
            raise self.error("expected a comparison operator")
        if tok.text in ("==", "="):
            raise self.error("equality atoms are not supported; use <= and >= bounds")
        self.advance()
        right = self.expr()
        builders = {"<": F.lt, "<=": F.le, ">": F.gt, ">=": F.ge}
        return builders[tok.text](left, right)

    def optional_interval(self) -> F.TimeInterval:
        if not (self.peek().kind == "op" and self.peek().text == "["):
            return F.FULL_INTERVAL
        open_tok = self.expect("[")
        lo = self.number()
        self.expect(",")
        if self.peek().kind == "name" and self.peek().text == "inf":
            self.advance()
            hi = math.inf
        else:
            hi = self.number()
        self.expect("]")
        try:
            return F.TimeInterval(lo, hi)
        except ValueError as exc:
            raise ParseError(str(exc), open_tok.line, open_tok.column) from None

    def number(self) -> float:
        sign = -1.0 if self.match("-") else 1.0
        tok = self.peek()
        if tok.kind != "num":
            raise self.error("expected a number")
        self.advance()
        return sign * float(tok.text)

    # -- atom expressions ---------------------------------------------------

    def expr(self) -> F.Expr:
        e = self.term()
        while True:
            if self.match("+"):
                e = F.Add(e, self.term())
            elif self.match("-"):
                e = F.Sub(e, self.term())
            else:
                return e

    def term(self) -> F.Expr:
        e = self.factor()
        while self.match("*"):
            e = F.Mul(e, self.factor())
        return e

    def factor(self) -> F.Expr:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return F.Const(float(tok.text))
        if tok.kind == "name":
            if tok.text == "abs":
                self.advance()
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return F.Abs(inner)
            if tok.text in ("min", "max"):
                self.advance()
                self.expect("(")
                args = [self.expr()]
                while self.match(","):
                    args.append(self.expr())
                self.expect(")")
                if len(args) < 2:
                    raise self.error(f"{tok.text} needs at least two arguments")
                node = F.Min if tok.text == "min" else F.Max
                out = args[0]
                for arg in args[1:]:
                    out = node(out, arg)
                return out
            if tok.text in _KEYWORDS:
                raise self.error(f"{tok.text!r} is a reserved word")
            self.advance()
            return F.Var(tok.text)
        if self.match("-"):
            return F.Neg(self.factor())
        if self.match("("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise self.error(f"expected an expression, found {tok.text or 'end of input'!r}")


def parse(text: str) -> F.Formula:
    """Parse specification text into a desugared formula tree."""
    return _Parser(text).parse()
