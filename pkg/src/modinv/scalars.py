"""Scalar expressions for modular data entries.

Entries of S and T are written in a small grammar::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-"? atom
    atom   := INT | INT "/" INT | "i" | "sqrt" "(" INT ")"
            | "e" "(" INT "," INT ")" | "(" expr ")"

``e(p,q)`` is the root of unity exp(2*pi*i*p/q).  Expressions are evaluated
numerically in an mpmath context of the requested precision; exactness is
recovered afterwards by snapping to integers.
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Union

import mpmath

from .errors import ParseError, SingularExpressionError

__all__ = [
    "Int", "Rational", "ImagUnit", "Sqrt", "Root", "Neg", "BinOp", "ScalarExpr",
    "ToleranceConfig", "context", "parse_expr", "format_expr", "eval_expr",
    "snap_to_integer", "DEFAULT_PRECISION",
]

DEFAULT_PRECISION = 192
MIN_PRECISION = 64


@dataclass(frozen=True)
class Int:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("integer literals are non-negative; use Neg")


@dataclass(frozen=True)
class Rational:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 1:
            raise ValueError(f"bad rational literal {self.p}/{self.q}")


@dataclass(frozen=True)
class ImagUnit:
    pass


@dataclass(frozen=True)
class Sqrt:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("sqrt argument must be a natural number")


@dataclass(frozen=True)
class Root:
    """exp(2 pi i p / q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("root of unity needs q >= 1")


@dataclass(frozen=True)
class Neg:
    operand: "ScalarExpr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "ScalarExpr"
    right: "ScalarExpr"

    def __post_init__(self):
        if self.op not in "+-*/" or len(self.op) != 1:
            raise ValueError(f"unknown operator {self.op!r}")


ScalarExpr = Union[Int, Rational, ImagUnit, Sqrt, Root, Neg, BinOp]

_ATOMS = (Int, Rational, ImagUnit, Sqrt, Root)


@dataclass(frozen=True)
class ToleranceConfig:
    snap_eps: float = 1e-24
    val_eps: float = 1e-20
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if not 0 < self.snap_eps < self.val_eps < 1:
            raise ValueError("need 0 < snap_eps < val_eps < 1")
        if self.precision < MIN_PRECISION:
            raise ValueError(f"precision must be at least {MIN_PRECISION} bits")

    def with_precision(self, bits: int) -> "ToleranceConfig":
        return ToleranceConfig(self.snap_eps, self.val_eps, bits)


@functools.lru_cache(maxsize=None)
def context(prec: int) -> mpmath.ctx_mp.MPContext:
    """A private mpmath context with ``prec`` bits, shared per precision."""
    if prec < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION} bits")
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))", re.S)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def offset(self) -> int:
        if self.i < len(self.tokens):
            char_pos = self.tokens[self.i][2]
        else:
            char_pos = len(self.text)
        return len(self.text[:char_pos].encode("utf-8"))

    def peek(self, k: int = 0):
        j = self.i + k
        return self.tokens[j] if j < len(self.tokens) else (None, None, len(self.text))

    def fail(self, msg: str):
        raise ParseError(msg, self.offset())

    def expect(self, value: str):
        kind, tok, _ = self.peek()
        if kind != "op" or tok != value:
            self.fail(f"expected {value!r}")
        self.i += 1

    def expect_int(self) -> int:
        kind, tok, _ = self.peek()
        if kind != "int":
            self.fail("expected integer")
        self.i += 1
        return int(tok)

    def parse(self) -> ScalarExpr:
        if not self.tokens:
            self.fail("empty expression")
        node = self.expr()
        if self.i != len(self.tokens):
            self.fail("unexpected trailing input")
        return node

    def expr(self) -> ScalarExpr:
        node = self.term()
        while True:
            kind, tok, _ = self.peek()
            if kind == "op" and tok in "+-":
                self.i += 1
                node = BinOp(tok, node, self.term())
            else:
                return node

    def term(self) -> ScalarExpr:
        node = self.factor()
        while True:
            kind, tok, _ = self.peek()
            if kind == "op" and tok in "*/":
                self.i += 1
                node = BinOp(tok, node, self.factor())
            else:
                return node

    def factor(self) -> ScalarExpr:
        kind, tok, _ = self.peek()
        if kind == "op" and tok == "-":
            self.i += 1
            return Neg(self.atom())
        return self.atom()

    def atom(self) -> ScalarExpr:
        kind, tok, _ = self.peek()
        if kind == "int":
            self.i += 1
            # INT "/" INT binds as a rational literal
            k1, t1, _ = self.peek()
            k2, _, _ = self.peek(1)
            if k1 == "op" and t1 == "/" and k2 == "int":
                self.i += 1
                q = self.expect_int()
                if q == 0:
                    self.i -= 1
                    self.fail("zero denominator in rational literal")
                return Rational(int(tok), q)
            return Int(int(tok))
        if kind == "name":
            if tok == "i":
                self.i += 1
                return ImagUnit()
            if tok == "sqrt":
                self.i += 1
                self.expect("(")
                n = self.expect_int()
                self.expect(")")
                return Sqrt(n)
            if tok == "e":
                self.i += 1
                self.expect("(")
                neg = False
                k, t, _ = self.peek()
                if k == "op" and t == "-":
                    neg = True
                    self.i += 1
                p = self.expect_int()
                self.expect(",")
                q = self.expect_int()
                if q < 1:
                    self.i -= 1
                    self.fail("root of unity needs q >= 1")
                self.expect(")")
                return Root(-p if neg else p, q)
            self.fail(f"unknown atom {tok!r}")
        if kind == "op" and tok == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        if kind is None:
            self.fail("unexpected end of input")
        self.fail(f"unexpected token {tok!r}")


def parse_expr(text: str) -> ScalarExpr:
    """Parse ``text``; raises :class:`ParseError` carrying a byte offset."""
    return _Parser(text).parse()


# ---------------------------------------------------------------- printing

def _is_atom(x: ScalarExpr) -> bool:
    return isinstance(x, _ATOMS)


def format_expr(x: ScalarExpr) -> str:
    """Canonical text form; ``parse_expr(format_expr(x)) == x``."""
    if isinstance(x, Int):
        return str(x.value)
    if isinstance(x, Rational):
        return f"{x.p}/{x.q}"
    if isinstance(x, ImagUnit):
        return "i"
    if isinstance(x, Sqrt):
        return f"sqrt({x.n})"
    if isinstance(x, Root):
        return f"e({x.p},{x.q})"
    if isinstance(x, Neg):
        inner = format_expr(x.operand)
        return f"-{inner}" if _is_atom(x.operand) else f"-({inner})"
    if isinstance(x, BinOp):
        left = format_expr(x.left)
        right = format_expr(x.right)
        if x.op in "+-":
            # left-associative: only a right operand of the same level needs parens
            if isinstance(x.right, BinOp) and x.right.op in "+-":
                right = f"({right})"
            return f"{left}{x.op}{right}"
        if isinstance(x.left, BinOp) and x.left.op in "+-":
            left = f"({left})"
        if x.op == "*":
            if isinstance(x.right, BinOp):
                right = f"({right})"
        else:
            # a bare integer after "/" would fuse into a rational literal
            if not isinstance(x.right, (ImagUnit, Sqrt, Root)):
                right = f"({right})"
        return f"{left}{x.op}{right}"
    raise TypeError(f"not a scalar expression: {x!r}")


# ---------------------------------------------------------------- evaluation

def eval_expr(x: ScalarExpr, prec: int = DEFAULT_PRECISION, eps: float = 1e-24):
    """Evaluate to an ``mpc`` of the ``prec``-bit context.

    Division by a value of modulus below ``eps`` raises
    :class:`SingularExpressionError`.
    """
    ctx = context(prec)
    with ctx.extraprec(16):
        value = _eval(ctx, x, ctx.mpf(eps))
    return +ctx.mpc(value)


def _eval(ctx, x, eps):
    if isinstance(x, Int):
        return ctx.mpc(x.value)
    if isinstance(x, Rational):
        return ctx.mpc(ctx.mpf(x.p) / x.q)
    if isinstance(x, ImagUnit):
        return ctx.mpc(0, 1)
    if isinstance(x, Sqrt):
        return ctx.mpc(ctx.sqrt(x.n))
    if isinstance(x, Root):
        p = x.p % x.q
        return ctx.mpc(ctx.cospi(ctx.mpf(2 * p) / x.q), ctx.sinpi(ctx.mpf(2 * p) / x.q))
    if isinstance(x, Neg):
        return -_eval(ctx, x.operand, eps)
    if isinstance(x, BinOp):
        a = _eval(ctx, x.left, eps)
        b = _eval(ctx, x.right, eps)
        if x.op == "+":
            return a + b
        if x.op == "-":
            return a - b
        if x.op == "*":
            return a * b
        if abs(b) < eps:
            raise SingularExpressionError(f"division by near-zero value in {format_expr(x)}")
        return a / b
    raise TypeError(f"not a scalar expression: {x!r}")


def snap_to_integer(z, eps: float = 1e-24) -> int | None:
    """The integer within ``eps`` of ``z``, or ``None``."""
    re_part = z.real
    im_part = z.imag
    base = int(re_part)
    for n in (base - 1, base, base + 1):
        dr = re_part - n
        if dr * dr + im_part * im_part <= eps * eps:
            return n
    return None
