"""Small closed-form expression language for bundle transition entries.

Grammar (EBNF):

    expr     := term (("+" | "-") term)*
    term     := factor (("*" | "/") factor)*
    factor   := "-" factor | base ("^" integer)?
    base     := rational | identifier | func "(" expr ")" | "(" expr ")"
    func     := "sin" | "cos" | "exp"
    rational := integer ("/" positive-integer)?

Precedence is ^  >  unary-  >  * /  >  + -, with + - * / left-associative.
Note two consequences of the grammar: a rational literal binds tighter than
division, so "6/2^2" reads ((6/2))^2 = 9 while "6/x^2" divides by x^2; and
unary minus binds looser than ^, so "-2^2" is -(2^2).

Exact evaluation uses Fractions and rejects sin/cos/exp away from argument 0
(where they take the exact values 0, 1, 1); float evaluation uses the math
module.  Identifiers resolve at evaluation time against a chart environment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EvalError, ExprSyntaxError, UnknownIdentifier

FUNCTIONS = ("sin", "cos", "exp")


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: object


Expr = object

_TOKEN_OPS = set("+-*/^()")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_OPS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(("int", src[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(("ident", src[i:j], i))
            i = j
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val, off = self.peek()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}", off)
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        kind, val, off = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected trailing input {val!r}", off)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                node = BinOp(val, node, self.term())
            else:
                return node

    def term(self) -> Expr:
        node = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.advance()
                node = BinOp(val, node, self.factor())
            else:
                return node

    def factor(self) -> Expr:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.advance()
            return Neg(self.factor())
        node = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            node = Pow(node, self.integer())
        return node

    def integer(self) -> int:
        sign = 1
        kind, val, off = self.peek()
        if kind == "op" and val == "-":
            self.advance()
            sign = -1
            kind, val, off = self.peek()
        if kind != "int":
            raise ExprSyntaxError("expected an integer exponent", off)
        self.advance()
        return sign * int(val)

    def base(self) -> Expr:
        kind, val, off = self.advance()
        if kind == "int":
            # greedy rational literal: integer "/" positive-integer
            k, v, _ = self.peek()
            if k == "op" and v == "/":
                k2, v2, _ = self.tokens[self.pos + 1]
                if k2 == "int" and int(v2) > 0:
                    self.advance()
                    self.advance()
                    return Lit(Fraction(int(val), int(v2)))
            return Lit(Fraction(int(val)))
        if kind == "ident":
            if val in FUNCTIONS:
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Call(val, arg)
            return Var(val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExprSyntaxError(f"unexpected token {val!r}", off)


def parse_expr(src: str) -> Expr:
    return _Parser(src).parse()


def variables(node: Expr) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, BinOp):
        return variables(node.left) | variables(node.right)
    if isinstance(node, Neg):
        return variables(node.arg)
    if isinstance(node, Pow):
        return variables(node.base)
    if isinstance(node, Call):
        return variables(node.arg)
    return set()


def eval_exact(node: Expr, env: dict[str, Fraction]) -> Fraction:
    if isinstance(node, Lit):
        return node.value
    if isinstance(node, Var):
        if node.name not in env:
            raise UnknownIdentifier(f"identifier {node.name!r} is not a chart coordinate")
        return Fraction(env[node.name])
    if isinstance(node, Neg):
        return -eval_exact(node.arg, env)
    if isinstance(node, BinOp):
        a = eval_exact(node.left, env)
        b = eval_exact(node.right, env)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b == 0:
            raise EvalError("division by zero")
        return a / b
    if isinstance(node, Pow):
        b = eval_exact(node.base, env)
        if node.exponent < 0 and b == 0:
            raise EvalError("zero raised to a negative power")
        return b**node.exponent
    if isinstance(node, Call):
        a = eval_exact(node.arg, env)
        if a != 0:
            raise EvalError(f"{node.func} is only exact at argument 0 (got {a})")
        return Fraction(0) if node.func == "sin" else Fraction(1)
    raise EvalError(f"cannot evaluate node {node!r}")


def eval_float(node: Expr, env: dict[str, float]) -> float:
    if isinstance(node, Lit):
        return float(node.value)
    if isinstance(node, Var):
        if node.name not in env:
            raise UnknownIdentifier(f"identifier {node.name!r} is not a chart coordinate")
        return float(env[node.name])
    if isinstance(node, Neg):
        return -eval_float(node.arg, env)
    if isinstance(node, BinOp):
        a = eval_float(node.left, env)
        b = eval_float(node.right, env)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b == 0.0:
            raise EvalError("division by zero")
        return a / b
    if isinstance(node, Pow):
        b = eval_float(node.base, env)
        if node.exponent < 0 and b == 0.0:
            raise EvalError("zero raised to a negative power")
        return b**node.exponent
    if isinstance(node, Call):
        a = eval_float(node.arg, env)
        return {"sin": math.sin, "cos": math.cos, "exp": math.exp}[node.func](a)
    raise EvalError(f"cannot evaluate node {node!r}")
