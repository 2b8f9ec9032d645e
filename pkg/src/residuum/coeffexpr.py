"""Recursive-descent parser and evaluator for coefficient expressions.

Grammar (whitespace insignificant):

    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := base ("^" factor)?
    base   := NUMBER | VAR | FUNC "(" expr ")" | "(" expr ")" | "-" base
    FUNC   := "sin" | "cos" | "tan" | "exp" | "ln"
    VAR    := "t" | "x" | "y"
    NUMBER := digits, optional fraction, optional exponent

Note that unary minus lives at the ``base`` level, so ``-t^2`` parses as
``(-t)^2``. Trees print back through ``to_source`` in a canonical form that
re-parses to the identical tree.

Evaluation accepts floats or numpy arrays for the variables and signals
domain faults (division by zero, log of a non-positive value, a tangent
argument whose cosine is exactly zero, invalid powers) as DomainError
instead of letting NaNs propagate.
"""

import re
from dataclasses import dataclass

import numpy as np

FUNCS = ("sin", "cos", "tan", "exp", "ln")
VARS = ("t", "x", "y")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class DomainError(ArithmeticError):
    pass


@dataclass(frozen=True, slots=True)
class Num:
    value: float


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Neg:
    operand: object


@dataclass(frozen=True, slots=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True, slots=True)
class Call:
    func: str
    arg: object


CoefficientExpr = Num | Var | Neg | BinOp | Call

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()]))"
)


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            stripped = src[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", len(src) - len(stripped))
        kind = m.lastgroup
        start = m.end() - len(m.group(kind))
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("eof", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)
        return self.advance()

    def parse(self) -> CoefficientExpr:
        node = self.expr()
        kind, value, pos = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected trailing input {value!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                node = BinOp(value, node, self.term())
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "*/":
                self.advance()
                node = BinOp(value, node, self.factor())
            else:
                return node

    def factor(self):
        node = self.base()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            node = BinOp("^", node, self.factor())
        return node

    def base(self):
        kind, value, pos = self.advance()
        if kind == "num":
            return Num(float(value))
        if kind == "ident":
            if value in VARS:
                return Var(value)
            if value in FUNCS:
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Call(value, arg)
            raise ParseError(f"unknown identifier {value!r}", pos)
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "op" and value == "-":
            return Neg(self.base())
        raise ParseError("expected expression", pos)


def parse_coefficient(src: str) -> CoefficientExpr:
    """Parse ``src`` into an expression tree; errors carry the offset."""
    return _Parser(src).parse()


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 3}


def to_source(node: CoefficientExpr) -> str:
    """Canonical printer; parse(to_source(tree)) reproduces the tree."""
    return _render(node, 0)


def _render(node, ctx: int) -> str:
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({_render(node.arg, 0)})"
    if isinstance(node, Neg):
        inner = node.operand
        if isinstance(inner, BinOp):
            return f"-({_render(inner, 0)})"
        return "-" + _render(inner, 4)
    prec = _PREC[node.op]
    if node.op == "^":
        # right-associative; the left side must be a plain base
        text = f"{_render(node.left, 4)}^{_render(node.right, prec)}"
    else:
        text = f"{_render(node.left, prec)}{node.op}{_render(node.right, prec + 1)}"
    return f"({text})" if prec < ctx else text


def evaluate(node: CoefficientExpr, **env):
    """Evaluate with variable bindings (floats or numpy arrays)."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        if node.name not in env or env[node.name] is None:
            raise DomainError(f"unbound variable {node.name!r}")
        return env[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.operand, **env)
    if isinstance(node, Call):
        arg = evaluate(node.arg, **env)
        if node.func == "ln":
            if np.any(np.asarray(arg) <= 0):
                raise DomainError("ln of a non-positive value")
            return np.log(arg)
        if node.func == "tan":
            if np.any(np.cos(arg) == 0.0):
                raise DomainError("tan at a zero of cos")
            return np.tan(arg)
        if node.func == "exp":
            out = np.exp(arg)
            if not np.all(np.isfinite(out)):
                raise DomainError("exp overflow")
            return out
        return {"sin": np.sin, "cos": np.cos}[node.func](arg)
    left = evaluate(node.left, **env)
    right = evaluate(node.right, **env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if node.op == "/":
        if np.any(np.asarray(right) == 0):
            raise DomainError("division by zero")
        return left / right
    with np.errstate(invalid="ignore"):
        out = np.power(left, right)
    if np.any(np.isnan(out)):
        raise DomainError("invalid power (negative base with fractional exponent)")
    return out


def is_constant(node: CoefficientExpr) -> bool:
    """True when the tree contains no variables."""
    if isinstance(node, Num):
        return True
    if isinstance(node, Var):
        return False
    if isinstance(node, Neg):
        return is_constant(node.operand)
    if isinstance(node, Call):
        return is_constant(node.arg)
    return is_constant(node.left) and is_constant(node.right)
