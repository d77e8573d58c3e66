"""A small expression language for engine elements.

Grammar (whitespace-insensitive, precedence ^ over * over + and -):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' ['-'] int)?
    atom   := 'T'int | 'L'int | 'X'int | 'x' '(' int (',' int)* ')'
            | 'sigma' '(' int ')' | 'q' | 'u'int | int | '(' expr ')'

Parsing is independent of any algebra; index bounds and the cyclotomic /
affine distinction (L versus X) are enforced at evaluation time.  The
pretty-printer emits a canonical form that reparses to the same tree.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Union

from .hecke import HeckeAlgebra, HeckeElement, sigma_elementary
from .affine import AffineAlgebra, AffineElement
from .ring import RingElem


class ExprError(ValueError):
    """Problem with an expression (syntax or evaluation context)."""


class ExprSyntaxError(ExprError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


# -- abstract syntax -------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Gen:
    kind: str  # 'T', 'L', 'X', 'u'
    index: int


@dataclass(frozen=True)
class QVar:
    pass


@dataclass(frozen=True)
class XComp:
    parts: tuple[int, ...]


@dataclass(frozen=True)
class Sigma:
    k: int


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Gen, QVar, XComp, Sigma, Pow, Neg, BinOp]


# -- tokenizer -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<gen>[TLXu](?=\d))"
    r"|(?P<sigma>sigma)"
    r"|(?P<xcomp>x(?=\())"
    r"|(?P<q>q)"
    r"|(?P<int>\d+)"
    r"|(?P<op>[()+\-*^,])"
    r"|(?P<ws>\s+)"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int


def _tokenize(src: str) -> list[_Token]:
    out: list[_Token] = []
    pos = 0
    while pos < len(src):
        mo = _TOKEN_RE.match(src, pos)
        if mo is None:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", pos)
        kind = mo.lastgroup or ""
        if kind != "ws":
            out.append(_Token(kind, mo.group(), pos))
        pos = mo.end()
    return out


# -- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ExprSyntaxError("unexpected end of input", len(self.src))
        self.i += 1
        return tok

    def expect_op(self, text: str) -> _Token:
        tok = self.next()
        if tok.kind != "op" or tok.text != text:
            raise ExprSyntaxError(f"expected {text!r}, found {tok.text!r}", tok.offset)
        return tok

    def expect_int(self) -> int:
        tok = self.next()
        if tok.kind != "int":
            raise ExprSyntaxError(f"expected integer, found {tok.text!r}", tok.offset)
        return int(tok.text)

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ExprSyntaxError(f"trailing input {tok.text!r}", tok.offset)
        return e

    def expr(self) -> Expr:
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text == "-":
            self.next()
            left: Expr = Neg(self.term())
        else:
            left = self.term()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "op" or tok.text not in "+-":
                return left
            self.next()
            left = BinOp(tok.text, left, self.term())

    def term(self) -> Expr:
        left = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "op" or tok.text != "*":
                return left
            self.next()
            left = BinOp("*", left, self.factor())

    def factor(self) -> Expr:
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text == "^":
            self.next()
            sign = 1
            nxt = self.peek()
            if nxt is not None and nxt.kind == "op" and nxt.text == "-":
                self.next()
                sign = -1
            return Pow(base, sign * self.expect_int())
        return base

    def atom(self) -> Expr:
        tok = self.next()
        if tok.kind == "gen":
            return Gen(tok.text, self.expect_int())
        if tok.kind == "q":
            return QVar()
        if tok.kind == "int":
            return Num(int(tok.text))
        if tok.kind == "sigma":
            self.expect_op("(")
            k = self.expect_int()
            self.expect_op(")")
            return Sigma(k)
        if tok.kind == "xcomp":
            self.expect_op("(")
            parts = [self.expect_int()]
            while True:
                nxt = self.peek()
                if nxt is not None and nxt.kind == "op" and nxt.text == ",":
                    self.next()
                    parts.append(self.expect_int())
                else:
                    break
            self.expect_op(")")
            return XComp(tuple(parts))
        if tok.kind == "op" and tok.text == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        raise ExprSyntaxError(f"unexpected token {tok.text!r}", tok.offset)


def parse(src: str) -> Expr:
    return _Parser(src).parse()


# -- pretty printer --------------------------------------------------------


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return 1 if e.op in "+-" else 2
    if isinstance(e, Neg):
        return 1
    if isinstance(e, Pow):
        return 3
    return 4


def pretty(e: Expr) -> str:
    def wrap(sub: Expr, minimum: int) -> str:
        s = pretty(sub)
        return f"({s})" if _prec(sub) < minimum else s

    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, QVar):
        return "q"
    if isinstance(e, Gen):
        return f"{e.kind}{e.index}"
    if isinstance(e, XComp):
        return "x(" + ",".join(str(p) for p in e.parts) + ")"
    if isinstance(e, Sigma):
        return f"sigma({e.k})"
    if isinstance(e, Pow):
        exp = str(e.exponent)
        return f"{wrap(e.base, 4)}^{exp}"
    if isinstance(e, Neg):
        return "-" + wrap(e.operand, 2)
    if isinstance(e, BinOp):
        # parsing is left-associative, so right operands of the same
        # precedence need parentheses to keep the tree shape
        left = wrap(e.left, _prec(e))
        right = wrap(e.right, _prec(e) + 1)
        return f"{left}{e.op}{right}"
    raise TypeError(f"not an expression node: {e!r}")


# -- evaluator -------------------------------------------------------------

Element = Union[HeckeElement, AffineElement]


def _affine_sigma_k(alg: AffineAlgebra, k: int) -> AffineElement:
    if not 0 <= k <= alg.r:
        raise ExprError(f"sigma({k}) out of range for rank {alg.r}")
    total = alg.zero()
    for subset in itertools.combinations(range(alg.r), k):
        exps = tuple(1 if i in subset else 0 for i in range(alg.r))
        total = total + alg.x_monomial(exps)
    return total


def evaluate(e: Expr, alg: HeckeAlgebra | AffineAlgebra) -> Element:
    """Evaluate a tree in a cyclotomic or affine engine.

    L is cyclotomic-only and X affine-only; q and u live in the engine's
    coefficient ring.  Negative powers are allowed for q always and for X
    in the affine engine; everything else needs nonnegative exponents.
    """
    affine = isinstance(alg, AffineAlgebra)
    nvars = alg.nvars

    def ev(node: Expr) -> Element:
        if isinstance(node, Num):
            return alg.scalar(RingElem.const(node.value, nvars))
        if isinstance(node, QVar):
            return alg.scalar(RingElem.q_power(1, nvars))
        if isinstance(node, Gen):
            if node.kind == "T":
                return alg.gen_T(node.index)
            if node.kind == "u":
                if not 1 <= node.index <= nvars:
                    raise ExprError(
                        f"u{node.index} not available ({nvars} parameter(s))"
                    )
                return alg.scalar(RingElem.u_var(node.index, nvars))
            if node.kind == "L":
                if affine:
                    raise ExprError("L is not defined in the affine engine; use X")
                return alg.gen_L(node.index)
            if node.kind == "X":
                if not affine:
                    raise ExprError("X is not defined in the cyclotomic engine; use L")
                if not 1 <= node.index <= alg.r:
                    raise ExprError(f"X{node.index} out of range for rank {alg.r}")
                exps = tuple(1 if i == node.index - 1 else 0 for i in range(alg.r))
                return alg.x_monomial(exps)
            raise ExprError(f"unknown generator kind {node.kind!r}")
        if isinstance(node, XComp):
            return alg.x_lambda(node.parts)
        if isinstance(node, Sigma):
            if affine:
                return _affine_sigma_k(alg, node.k)
            return sigma_elementary(alg, node.k)
        if isinstance(node, Neg):
            return -ev(node.operand)
        if isinstance(node, BinOp):
            left, right = ev(node.left), ev(node.right)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            return left * right
        if isinstance(node, Pow):
            n = node.exponent
            if isinstance(node.base, QVar):
                return alg.scalar(RingElem.q_power(n, nvars))
            if isinstance(node.base, Gen) and node.base.kind == "X" and affine:
                if not 1 <= node.base.index <= alg.r:
                    raise ExprError(
                        f"X{node.base.index} out of range for rank {alg.r}"
                    )
                exps = tuple(
                    n if i == node.base.index - 1 else 0 for i in range(alg.r)
                )
                return alg.x_monomial(exps)
            if n < 0:
                raise ExprError("negative powers are only supported for q and X")
            out = alg.one()
            base = ev(node.base)
            for _ in range(n):
                out = out * base
            return out
        raise TypeError(f"not an expression node: {node!r}")

    return ev(e)


def evaluate_text(src: str, alg: HeckeAlgebra | AffineAlgebra) -> Element:
    return evaluate(parse(src), alg)
