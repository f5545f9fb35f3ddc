"""
Parser for element expressions such as  2*a*b' + v - 1/3*c*c'

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | postfix
    postfix := atom ("'")*          a prime after ')' applies the involution
    atom    := INT ['/' INT] | IDENT | '(' expr ')'

An identifier is a vertex or edge id; e' is the ghost edge of e unless e' is
itself an id. A bare scalar stands for that multiple of 1 = sum of all vertices.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from lpa_toolkit.algebra.element import (
    Element,
    edge_element,
    ghost_element,
    unit_element,
    vertex_element,
)
from lpa_toolkit.algebra.field import Field
from lpa_toolkit.algebra.graph import Graph
from lpa_toolkit.services.exceptions import DivisionByZeroError, ParseError, UnknownIdentifierError


_TOKEN_SPEC = [
    ('SPACE', r'\s+'),
    ('INT', r'\d+'),
    ('IDENT', r"[A-Za-z_][A-Za-z0-9_#~.]*'*"),
    ('PRIME', r"'"),
    ('OP', r'[-+*/()]'),
]
_TOKEN_RE = re.compile('|'.join(f'(?P<{name}>{pattern})' for name, pattern in _TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    index = 0
    while index < len(src):
        match = _TOKEN_RE.match(src, index)
        if not match:
            raise ParseError(f"unexpected character {src[index]!r}", column=index + 1)
        if match.lastgroup != 'SPACE':
            tokens.append(Token(match.lastgroup, match.group(), index + 1))
        index = match.end()
    tokens.append(Token('END', '', len(src) + 1))
    return tokens


class ExpressionParser:
    """Recursive-descent parser producing normalized elements"""

    def __init__(self, graph: Graph, field: Field):
        self.graph = graph
        self.field = field
        self.tokens: list[Token] = []
        self.index = 0

    def parse(self, src: str) -> Element:
        self.tokens = tokenize(src)
        self.index = 0
        if self._peek().kind == 'END':
            raise ParseError("empty expression", column=1)
        value = self._expr()
        token = self._peek()
        if token.kind != 'END':
            raise ParseError(f"unexpected {token.text!r}", column=token.position)
        return value.normalize()

    def _peek(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _at(self, text: str) -> bool:
        token = self._peek()
        return token.kind == 'OP' and token.text == text

    def _expr(self) -> Element:
        value = self._term()
        while self._at('+') or self._at('-'):
            op = self._advance().text
            right = self._term()
            value = value + right if op == '+' else value - right
        return value

    def _term(self) -> Element:
        value = self._unary()
        while self._at('*'):
            self._advance()
            value = value * self._unary()
        return value

    def _unary(self) -> Element:
        if self._at('-'):
            self._advance()
            return -self._unary()
        return self._postfix()

    def _postfix(self) -> Element:
        value = self._atom()
        while self._peek().kind == 'PRIME':
            self._advance()
            value = value.bar()
        return value

    def _atom(self) -> Element:
        token = self._advance()
        if token.kind == 'INT':
            return unit_element(self.graph, self.field).scale(self._scalar(token))
        if token.kind == 'IDENT':
            return self._identifier(token)
        if token.kind == 'OP' and token.text == '(':
            value = self._expr()
            closing = self._advance()
            if not (closing.kind == 'OP' and closing.text == ')'):
                raise ParseError("expected ')'", column=closing.position)
            return value
        if token.kind == 'END':
            raise ParseError("unexpected end of expression", column=token.position)
        raise ParseError(f"unexpected {token.text!r}", column=token.position)

    def _scalar(self, numerator: Token) -> Fraction:
        if not self._at('/'):
            return Fraction(int(numerator.text))
        self._advance()
        denominator = self._advance()
        if denominator.kind != 'INT':
            raise ParseError("expected an integer denominator", column=denominator.position)
        if int(denominator.text) == 0:
            raise DivisionByZeroError(f"position {denominator.position}: zero denominator")
        return Fraction(int(numerator.text), int(denominator.text))

    def _identifier(self, token: Token) -> Element:
        name = token.text
        if name in self.graph.vertex_index:
            return vertex_element(self.graph, self.field, name)
        if name in self.graph.edge_map:
            return edge_element(self.graph, self.field, name)
        if name.endswith("'") and name[:-1] in self.graph.edge_map:
            return ghost_element(self.graph, self.field, name[:-1])
        raise UnknownIdentifierError(f"position {token.position}: unknown identifier {name!r}")


def parse_element(g: Graph, field: Field, src: str) -> Element:
    return ExpressionParser(g, field).parse(src)
