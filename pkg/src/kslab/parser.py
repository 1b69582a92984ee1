"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace ignored, implicit multiplication allowed)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (['*' | '/'] factor)*
    factor := base ['^' uint]
    base   := uint | 'i' | 't' | var | '(' expr ')' | '-' factor
    var    := 'z' | 'w' | 'zbar' | 'x' | 'y'

``zbar`` is read as ``w``.  ``i`` needs Q(i) and ``t`` (the generator of
F_{p^k}) needs an ``fq`` field.  Division is only by nonzero constants, which
covers rational literals such as ``3/4`` as well as ``x^2/4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .bipoly import XY, ZW, BiPoly
from .scalar import QQI, ExtField, Field

FACTOR_START = {"INT", "VAR", "IMAG", "GEN", "("}


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        self.bare = message
        super().__init__(f"{message} at position {position}")

    def pretty(self) -> str:
        if not self.text:
            return str(self)
        return f"{self}\n  {self.text}\n  {' ' * self.position}^"


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(Token("INT", text[i:j], i))
            i = j
        elif text.startswith("zbar", i):
            out.append(Token("VAR", "w", i))
            i += 4
        elif ch in "zwxy":
            out.append(Token("VAR", ch, i))
            i += 1
        elif ch == "i":
            out.append(Token("IMAG", ch, i))
            i += 1
        elif ch == "t":
            out.append(Token("GEN", ch, i))
            i += 1
        elif ch in "+-*/^()":
            out.append(Token(ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i, text)
    out.append(Token("EOF", "", len(text)))
    return out


# -- syntax tree ---------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    pos: int


@dataclass(frozen=True)
class Sym:
    name: str  # 'z', 'w', 'x', 'y', 'i' or 't'
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: "Node"
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*', '/'
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int
    pos: int


Node = Union[Num, Sym, Neg, BinOp, Pow]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.k = 0

    @property
    def cur(self) -> Token:
        return self.toks[self.k]

    def eat(self, kind: str) -> Token:
        t = self.cur
        if t.kind != kind:
            found = "end of input" if t.kind == "EOF" else repr(t.value)
            raise ParseError(f"expected {kind!r}, found {found}", t.pos, self.text)
        self.k += 1
        return t

    def parse(self) -> Node:
        if self.cur.kind == "EOF":
            raise ParseError("empty expression", 0, self.text)
        node = self.expr()
        if self.cur.kind != "EOF":
            raise ParseError(f"unexpected {self.cur.value!r}", self.cur.pos, self.text)
        return node

    def expr(self) -> Node:
        t = self.cur
        if t.kind in ("+", "-"):
            self.k += 1
            node = self.term()
            if t.kind == "-":
                node = Neg(node, t.pos)
        else:
            node = self.term()
        while self.cur.kind in ("+", "-"):
            op = self.cur
            self.k += 1
            node = BinOp(op.kind, node, self.term(), op.pos)
        return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            t = self.cur
            if t.kind in ("*", "/"):
                self.k += 1
                node = BinOp(t.kind, node, self.factor(), t.pos)
            elif t.kind in FACTOR_START:
                node = BinOp("*", node, self.factor(), t.pos)
            else:
                return node

    def factor(self) -> Node:
        base = self.base()
        if self.cur.kind == "^":
            caret = self.eat("^")
            if self.cur.kind != "INT":
                raise ParseError("exponent must be a nonnegative integer", self.cur.pos, self.text)
            e = self.eat("INT")
            return Pow(base, int(e.value), caret.pos)
        return base

    def base(self) -> Node:
        t = self.cur
        if t.kind == "INT":
            self.k += 1
            return Num(int(t.value), t.pos)
        if t.kind in ("VAR", "IMAG", "GEN"):
            self.k += 1
            return Sym(t.value, t.pos)
        if t.kind == "(":
            self.k += 1
            node = self.expr()
            self.eat(")")
            return node
        if t.kind == "-":
            self.k += 1
            return Neg(self.factor(), t.pos)
        found = "end of input" if t.kind == "EOF" else repr(t.value)
        raise ParseError(f"expected a number, variable or '(', found {found}", t.pos, self.text)


def _variables(node: Node, acc: dict[str, int]) -> dict[str, int]:
    if isinstance(node, Sym) and node.name in "zwxy":
        acc.setdefault(node.name, node.pos)
    elif isinstance(node, Neg):
        _variables(node.arg, acc)
    elif isinstance(node, BinOp):
        _variables(node.left, acc)
        _variables(node.right, acc)
    elif isinstance(node, Pow):
        _variables(node.base, acc)
    return acc


@dataclass(frozen=True)
class ParsedExpression:
    text: str
    ast: Node
    field: Field
    variables: frozenset[str]

    @property
    def family(self) -> tuple[str, str] | None:
        if self.variables & {"x", "y"}:
            return XY
        if self.variables & {"z", "w"}:
            return ZW
        return None

    def to_poly(self, vars=None) -> BiPoly:
        fam = self.family
        if vars is not None and fam is not None and tuple(vars) != fam:
            pos = min(_variables(self.ast, {}).values())
            raise ParseError(f"expected a polynomial in {', '.join(vars)}", pos, self.text)
        return _Evaluator(self.text, self.field, fam or tuple(vars or ZW)).eval(self.ast)


class _Evaluator:
    def __init__(self, text: str, field: Field, vars):
        self.text, self.field, self.vars = text, field, vars

    def eval(self, node: Node) -> BiPoly:
        f, V = self.field, self.vars
        if isinstance(node, Num):
            return BiPoly.const(node.value, f, V)
        if isinstance(node, Sym):
            if node.name == "i":
                if f != QQI:
                    raise ParseError(f"'i' is not an element of {f.name}", node.pos, self.text)
                return BiPoly.const(QQI.i, f, V)
            if node.name == "t":
                if not isinstance(f, ExtField):
                    raise ParseError(f"'t' (extension generator) is not an element of {f.name}", node.pos, self.text)
                return BiPoly.const(f.generator, f, V)
            idx = V.index(node.name)
            return BiPoly.monomial(1 - idx, idx, 1, f, V)
        if isinstance(node, Neg):
            return -self.eval(node.arg)
        if isinstance(node, Pow):
            return self.eval(node.base) ** node.exp
        left, right = self.eval(node.left), self.eval(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if not right.is_constant() or not right:
            what = "zero" if not right else "a non-constant polynomial"
            raise ParseError(f"division by {what}", node.pos, self.text)
        try:
            return left / right.constant_term()
        except ZeroDivisionError:
            raise ParseError(f"{right} is not invertible in {f.name}", node.pos, self.text) from None


def parse_expression(text: str, field: Field) -> ParsedExpression:
    ast = _Parser(text).parse()
    used = _variables(ast, {})
    xy = [p for v, p in used.items() if v in "xy"]
    zw = [p for v, p in used.items() if v in "zw"]
    if xy and zw:
        raise ParseError("x, y and z, w cannot be mixed in one expression", max(min(xy), min(zw)), text)
    return ParsedExpression(text, ast, field, frozenset(used))


def parse_poly(text: str, field: Field, vars=None) -> BiPoly:
    """Parse ``text`` into a polynomial over ``field``.

    ``vars`` (``("z", "w")`` or ``("x", "y")``) fixes the variable family; it
    is required to agree with the variables used and supplies the family for
    constant expressions.
    """
    return parse_expression(text, field).to_poly(vars)
