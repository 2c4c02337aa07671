"""Recursive-descent parser for the expression language.

Grammar, loosest binding first::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := primary ("^" ["-"] INTEGER)*
    primary := NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")"

``^`` binds tighter than unary minus, so ``-2^2`` is ``-(2^2)``. A
negative exponent ``e^-k`` is read as ``1/(e^k)``. Literal prefixes are
folded exactly when no ``^`` follows them: ``-3`` and ``2/3`` at the
start of a term become single constants, and decimals such as ``0.5828``
are exact rationals.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ..exceptions import ExpressionSyntaxError
from .nodes import FUNCTIONS, Add, Const, Div, Expr, Mul, Neg, Pi, PowNat, Sub, Var

KEYWORDS = frozenset({"pi", "in", "with"})

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+\.\d*|\.\d+|\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op><=|>=|[-+*/^()\[\],<>=;]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offset = len(text) - len(text[position:].lstrip())
            raise ExpressionSyntaxError(f"Unexpected character '{text[offset]}'", offset)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class Parser:
    """Token cursor over one source text.

    Besides :meth:`expression` the cursor helpers are public so that the
    proposition and script readers can share the tokenizer.
    """

    def __init__(self, text: str, bindings: Mapping[str, Expr] | None = None):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.bindings = dict(bindings or {})

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "end":
            self.index += 1
        return token

    def at(self, *texts: str) -> bool:
        return self.current.kind != "end" and self.current.text in texts

    def accept(self, *texts: str) -> Token | None:
        if self.at(*texts):
            return self.advance()
        return None

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"Expected '{text}'")
        return self.advance()

    def expect_ident(self) -> str:
        if self.current.kind != "ident":
            self.fail("Expected a name")
        return self.advance().text

    def expect_end(self) -> None:
        if self.current.kind != "end":
            self.fail(f"Unexpected '{self.current.text}'")

    def fail(self, message: str):
        found = self.current.text or "end of input"
        raise ExpressionSyntaxError(f"{message}, found '{found}'", self.current.position)

    def expression(self) -> Expr:
        node = self._term()
        while token := self.accept("+", "-"):
            right = self._term()
            node = Add(node, right) if token.text == "+" else Sub(node, right)
        return node

    def _term(self) -> Expr:
        node = self._unary(leading=True)
        while token := self.accept("*", "/"):
            right = self._unary(leading=False)
            node = Mul(node, right) if token.text == "*" else Div(node, right)
        return node

    def _unary(self, leading: bool) -> Expr:
        if self.at("-"):
            if leading and self.peek().kind == "number" and self.peek(2).text != "^":
                self.advance()
                return Const(-self._literal(leading))
            self.advance()
            return Neg(self._unary(leading=False))
        return self._power(leading)

    def _literal(self, leading: bool) -> Fraction:
        value = Fraction(self.advance().text)
        foldable = (
            leading
            and self.at("/")
            and self.peek().kind == "number"
            and self.peek(2).text != "^"
            and Fraction(self.peek().text) != 0
        )
        if foldable:
            self.advance()
            value /= Fraction(self.advance().text)
        return value

    def _power(self, leading: bool) -> Expr:
        if self.current.kind == "number" and self.peek().text != "^":
            return Const(self._literal(leading))
        node = self._primary()
        while self.accept("^"):
            negative = self.accept("-") is not None
            if self.current.kind != "number" or not self.current.text.isdigit():
                self.fail("Exponent must be a natural-number literal")
            node = PowNat(node, int(self.advance().text))
            if negative:
                node = Div(Const(1), node)
        return node

    def _primary(self) -> Expr:
        token = self.current
        if token.kind == "number":
            self.advance()
            return Const(Fraction(token.text))
        if self.accept("("):
            node = self.expression()
            self.expect(")")
            return node
        if token.kind == "ident":
            self.advance()
            if self.at("("):
                return self._call(token)
            if token.text == "pi":
                return Pi()
            if token.text in self.bindings:
                return self.bindings[token.text]
            if token.text in KEYWORDS:
                raise ExpressionSyntaxError(f"'{token.text}' is reserved", token.position)
            return Var(token.text)
        self.fail("Expected an expression")

    def _call(self, token: Token) -> Expr:
        function = FUNCTIONS.get(token.text)
        if function is None:
            raise ExpressionSyntaxError(f"Unknown function '{token.text}'", token.position)
        self.expect("(")
        arg = self.expression()
        self.expect(")")
        return function(arg)


def parse(text: str, bindings: Mapping[str, Expr] | None = None) -> Expr:
    """Parse a whole string as one expression.

    Args:
        text: Source text.
        bindings: Names replaced by the given expressions (script constants).

    Raises:
        ExpressionSyntaxError: On any syntax error, with its position.
    """
    parser = Parser(text, bindings)
    node = parser.expression()
    parser.expect_end()
    return node
