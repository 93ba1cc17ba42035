"""Surface syntax for ordinal expressions.

Grammar (whitespace ignored)::

    expr   := term (('+' | '#') term)*
    term   := factor ('*' factor)*
    factor := base ('^' factor)?
    base   := 'w' | 'w' digits | digits | '(' expr ')'

``+`` is the ordinal sum, ``#`` the natural sum, ``*`` the ordinal
product.  ``w1``, ``w2``, ... are the uncountable atoms.  ``^`` is only
defined for a base of ``w`` or an atom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .core import (
    Ordinal,
    atom,
    nat_add,
    omega_pow,
    ord_add,
    ord_mul,
    ordinal,
)

__all__ = [
    "ParseError",
    "UnsupportedExponentiation",
    "Num",
    "W",
    "Atom",
    "BinOp",
    "parse_expr",
    "evaluate",
    "parse_ordinal",
    "print_ordinal",
    "to_expr",
    "print_expr",
]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnsupportedExponentiation(ParseError):
    pass


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class W:
    pass


@dataclass(frozen=True)
class Atom:
    index: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: int = 0


Expr = Union[Num, W, Atom, BinOp]

_TOKEN = re.compile(r"\s*(?:(w\d+)|(w)|(\d+)|([+#*^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), m.lastindex, start))
        pos = m.end()
    out.append(("", 0, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, s: str):
        tok = self.take()
        if tok[0] != s:
            raise ParseError(f"expected {s!r}, found {tok[0] or 'end of input'!r}", tok[2])

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[0] in ("+", "#"):
            op, _, pos = self.take()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek()[0] == "*":
            _, _, pos = self.take()
            node = BinOp("*", node, self.factor(), pos)
        return node

    def factor(self) -> Expr:
        node = self.base()
        if self.peek()[0] == "^":
            _, _, pos = self.take()
            node = BinOp("^", node, self.factor(), pos)
        return node

    def base(self) -> Expr:
        text, kind, pos = self.take()
        if kind == 1:
            k = int(text[1:])
            if k < 1:
                raise ParseError("atom index must be positive", pos)
            return Atom(k)
        if kind == 2:
            return W()
        if kind == 3:
            return Num(int(text))
        if text == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)


def parse_expr(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    tok = p.peek()
    if tok[1] != 0 or tok[0]:
        raise ParseError(f"unexpected {tok[0]!r}", tok[2])
    return node


def evaluate(node: Expr) -> Ordinal:
    if isinstance(node, Num):
        return ordinal(node.value)
    if isinstance(node, W):
        return omega_pow(1)
    if isinstance(node, Atom):
        return atom(node.index)
    left, right = evaluate(node.left), evaluate(node.right)
    if node.op == "+":
        return ord_add(left, right)
    if node.op == "#":
        return nat_add(left, right)
    if node.op == "*":
        return ord_mul(left, right)
    # w^e, and w_k^e = w^(w_k * e)
    if left == omega_pow(1):
        return omega_pow(right)
    if left.is_atom:
        return omega_pow(ord_mul(left, right)) if right else ordinal(1)
    raise UnsupportedExponentiation(
        "general exponentiation unsupported: base must be w or an atom", node.pos
    )


def parse_ordinal(text: str) -> Ordinal:
    return evaluate(parse_expr(text))


def to_expr(a: Ordinal) -> Expr:
    """Expression tree of the Cantor normal form of ``a``."""
    if not a:
        return Num(0)
    if a.is_atom:
        return Atom(a.atom)
    node = None
    for e, c in a.terms:
        if not e:
            piece: Expr = Num(c)
        else:
            if e.is_atom:
                base: Expr = Atom(e.atom)
            elif e == ordinal(1):
                base = W()
            else:
                base = BinOp("^", W(), to_expr(e))
            piece = base if c == 1 else BinOp("*", base, Num(c))
        node = piece if node is None else BinOp("+", node, piece)
    return node


_PREC = {"+": 1, "#": 1, "*": 2, "^": 3}


def print_expr(node: Expr, parent: int = 0, right_side: bool = False, spaced: bool = True) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, W):
        return "w"
    if isinstance(node, Atom):
        return f"w{node.index}"
    p = _PREC[node.op]
    if node.op == "^":
        s = f"{print_expr(node.left, p, False, False)}^{print_expr(node.right, p, True, False)}"
        # right-associative: a nested ^ on the right needs no parentheses
        wrap = parent > p or (parent == p and not right_side)
    else:
        sep = f" {node.op} " if p == 1 and spaced else node.op
        s = f"{print_expr(node.left, p, False, spaced)}{sep}{print_expr(node.right, p, True, spaced)}"
        wrap = parent > p or (parent == p and right_side)
    return f"({s})" if wrap else s


def print_ordinal(a: Ordinal) -> str:
    return print_expr(to_expr(a))
