"""Surface syntax for isobaric expressions.

Grammar (ASCII form; the unicode operators are accepted as aliases):

    expr     := prod ("+" prod)*
    prod     := unary ("*" unary)*
    unary    := "sym^" INT "(" expr ")" | "ext^" INT "(" expr ")"
              | "dual" "(" expr ")" | "(" expr ")" postfix* | base postfix*
    postfix  := "@" charmono | "^" "dual-mark"
    base     := "pi" | "pi'" | "std" | "1" | IDENT
    charmono := GEN ("^" SINT)? ("." charmono)*

Aliases: (+) -> +, (x) -> *, (t) -> @ in their unicode forms, the wedge
dual mark, and the Greek letters for w, w', mu, nu, pi, pi'.
"""
from __future__ import annotations

import difflib
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from .expressions import (
    Atom,
    CharMono,
    Factor,
    IsobaricExpr,
    KNOWN_BASES,
    PI,
    PI_PRIME,
    TRIVIAL_MONO,
)


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: Tuple[str, ...] = ()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        tail = f"; expected one of {list(self.expected)}" if self.expected else ""
        super().__init__(f"parse error at byte {offset}: {message}{tail}")


# --------------------------------------------------------------------------
# AST
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BaseNode:
    name: str


@dataclass(frozen=True)
class SymPower:
    m: int
    arg: "Node"


@dataclass(frozen=True)
class ExtPower:
    m: int
    arg: "Node"


@dataclass(frozen=True)
class Dual:
    arg: "Node"


@dataclass(frozen=True)
class Twist:
    arg: "Node"
    mono: CharMono


@dataclass(frozen=True)
class FunctorialProduct:
    factors: Tuple["Node", ...]


@dataclass(frozen=True)
class IsobaricSum:
    terms: Tuple["Node", ...]


Node = Union[BaseNode, SymPower, ExtPower, Dual, Twist, FunctorialProduct, IsobaricSum]


# --------------------------------------------------------------------------
# lexer
# --------------------------------------------------------------------------

_ALIASES = {
    "⊞": "+",   # boxed plus
    "⊠": "*",   # boxed times
    "⊗": "@",   # circled times (twist)
    "∨": "~",   # wedge: dual mark
    "∨︎": "~",
    "ω": "w",   # omega
    "μ": "mu",
    "ν": "nu",
    "π": "pi",
    "χ": "chi",
}

_IDENT_START = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_"
_IDENT_CONT = _IDENT_START + "0123456789"


@dataclass(frozen=True)
class _Tok:
    kind: str  # op | int | ident | end
    text: str
    offset: int  # byte offset in the utf-8 encoding of the input


def _tokenize(text: str) -> List[_Tok]:
    toks: List[_Tok] = []
    i, boff = 0, 0
    n = len(text)
    while i < n:
        ch = text[i]
        blen = len(ch.encode("utf-8"))
        if ch.isspace():
            i += 1
            boff += blen
            continue
        if ch in _ALIASES:
            rep = _ALIASES[ch]
            kind = "op" if rep in "+*@~" else "ident"
            start = boff
            i += 1
            boff += blen
            if kind == "ident" and i < n and text[i] == "'":
                rep += "'"
                i += 1
                boff += 1
            toks.append(_Tok(kind, rep, start))
            continue
        if ch in "+*@^().~":
            toks.append(_Tok("op", ch, boff))
            i += 1
            boff += blen
            continue
        if ch == "-" or ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if text[i:j] == "-":
                raise ParseError("stray '-'", boff, ("integer",))
            toks.append(_Tok("int", text[i:j], boff))
            boff += len(text[i:j].encode("utf-8"))
            i = j
            continue
        if ch in _IDENT_START:
            j = i + 1
            while j < n and text[j] in _IDENT_CONT:
                j += 1
            if j < n and text[j] == "'":
                j += 1
            toks.append(_Tok("ident", text[i:j], boff))
            boff += len(text[i:j].encode("utf-8"))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", boff)
    toks.append(_Tok("end", "", len(text.encode("utf-8"))))
    return toks


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

_CHAR_GENS = ("w", "w'", "mu", "nu", "chi", "chi0")


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def take(self) -> _Tok:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.text != text:
            raise ParseError(f"got {t.text or 'end of input'!r}", t.offset, (text,))
        return self.take()

    def parse(self) -> Node:
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(
                f"trailing input {t.text!r}", t.offset, ("+", "*", "end of input")
            )
        return node

    def expr(self) -> Node:
        terms = [self.prod()]
        while self.peek().text == "+":
            self.take()
            terms.append(self.prod())
        return terms[0] if len(terms) == 1 else IsobaricSum(tuple(terms))

    def prod(self) -> Node:
        factors = [self.unary()]
        while self.peek().text == "*":
            self.take()
            factors.append(self.unary())
        return factors[0] if len(factors) == 1 else FunctorialProduct(tuple(factors))

    def unary(self) -> Node:
        t = self.peek()
        if t.kind == "ident" and t.text in ("sym", "ext"):
            self.take()
            self.expect("^")
            m_tok = self.peek()
            if m_tok.kind != "int":
                raise ParseError("power requires an integer", m_tok.offset, ("integer",))
            m = int(self.take().text)
            if m < 0:
                raise ParseError("power must be nonnegative", m_tok.offset)
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            node: Node = SymPower(m, arg) if t.text == "sym" else ExtPower(m, arg)
            return self.postfix(node)
        if t.kind == "ident" and t.text == "dual":
            self.take()
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return self.postfix(Dual(arg))
        if t.text == "(":
            self.take()
            arg = self.expr()
            self.expect(")")
            return self.postfix(arg)
        if t.kind == "ident" or (t.kind == "int" and t.text == "1"):
            self.take()
            return self.postfix(BaseNode(t.text))
        raise ParseError(
            f"got {t.text or 'end of input'!r}",
            t.offset,
            ("sym^", "ext^", "dual", "(", "pi", "pi'", "1", "identifier"),
        )

    def postfix(self, node: Node) -> Node:
        while True:
            t = self.peek()
            if t.text == "@":
                self.take()
                node = Twist(node, self.charmono())
            elif t.text == "~":
                self.take()
                node = Dual(node)
            elif t.text == "^" and self.toks[self.pos + 1].text == "~":
                self.take()
                self.take()
                node = Dual(node)
            else:
                return node

    def charmono(self) -> CharMono:
        mono = TRIVIAL_MONO
        while True:
            t = self.peek()
            if t.kind != "ident":
                raise ParseError(
                    f"got {t.text or 'end of input'!r}", t.offset, _CHAR_GENS
                )
            gen = self.take().text
            e = 1
            if self.peek().text == "^" and self.toks[self.pos + 1].kind == "int":
                self.take()
                e = int(self.take().text)
            elif (
                self.peek().text == "^"
                and self.toks[self.pos + 1].text == "-"
            ):
                raise ParseError("exponent expected", self.toks[self.pos + 1].offset)
            mono = mono * CharMono.gen(gen, e)
            if self.peek().text == ".":
                self.take()
                continue
            return mono


def parse(text: str) -> Node:
    """Parse surface syntax into an AST; raises ParseError with a byte offset."""
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# printing
# --------------------------------------------------------------------------


def print_ast(node: Node) -> str:
    if isinstance(node, BaseNode):
        return node.name
    if isinstance(node, SymPower):
        return f"sym^{node.m}({print_ast(node.arg)})"
    if isinstance(node, ExtPower):
        return f"ext^{node.m}({print_ast(node.arg)})"
    if isinstance(node, Dual):
        return f"dual({print_ast(node.arg)})"
    if isinstance(node, Twist):
        inner = print_ast(node.arg)
        if isinstance(node.arg, (IsobaricSum, FunctorialProduct)):
            inner = f"({inner})"
        return f"{inner}@{node.mono}"
    if isinstance(node, FunctorialProduct):
        parts = []
        for f in node.factors:
            s = print_ast(f)
            if isinstance(f, IsobaricSum):
                s = f"({s})"
            parts.append(s)
        return "*".join(parts)
    if isinstance(node, IsobaricSum):
        parts = []
        for t in node.terms:
            s = print_ast(t)
            if isinstance(t, IsobaricSum):
                s = f"({s})"
            parts.append(s)
        return " + ".join(parts)
    raise TypeError(f"not an AST node: {node!r}")


# --------------------------------------------------------------------------
# conversion to calculus objects
# --------------------------------------------------------------------------

_NAMED_BASES = (PI, PI_PRIME, "std", "1")


def _check_base(name: str, opaque: Dict[str, int]) -> None:
    if name in _NAMED_BASES or name in opaque:
        return
    pool = list(_NAMED_BASES) + sorted(opaque)
    hints = difflib.get_close_matches(name, pool, n=3, cutoff=0.4)
    hint = f"; did you mean {hints}?" if hints else ""
    raise ParseError(f"unknown base {name!r}{hint}", 0, tuple(pool))


def _base_factor(name: str, m: int, opaque: Dict[str, int]) -> Factor:
    if name == "std":
        name = PI
    if name not in KNOWN_BASES and m != 1:
        raise ParseError(f"cannot take powers of opaque base {name!r}", 0)
    return Factor(name, m)


def ast_to_atom(node: Node, opaque: Dict[str, int]) -> Atom:
    """Structural conversion of a twisted product of sym-powers to an Atom."""
    if isinstance(node, Twist):
        return ast_to_atom(node.arg, opaque).twisted(node.mono)
    if isinstance(node, FunctorialProduct):
        factors: Tuple[Factor, ...] = ()
        twist = TRIVIAL_MONO
        for f in node.factors:
            a = ast_to_atom(f, opaque)
            factors = factors + a.factors
            twist = twist * a.twist
        return Atom.make(factors, twist)
    if isinstance(node, SymPower):
        if isinstance(node.arg, BaseNode):
            _check_base(node.arg.name, opaque)
            if node.arg.name == "1":
                return Atom.trivial()
            return Atom.make((_base_factor(node.arg.name, node.m, opaque),))
        raise ParseError("sym power of a non-base is not atomic", 0)
    if isinstance(node, BaseNode):
        _check_base(node.name, opaque)
        if node.name == "1":
            return Atom.trivial()
        return Atom.make((_base_factor(node.name, 1, opaque),))
    raise ParseError("not an atomic expression", 0)


def parse_atom(text: str, opaque_dims=()) -> Atom:
    """Parse a single twisted product of sym-powers (no sums, ext, dual)."""
    return ast_to_atom(parse(text), dict(opaque_dims))


def ast_to_expr(node: Node, reg) -> IsobaricExpr:
    """Evaluate an AST to an isobaric expression (sym/ext expanded exactly)."""
    from .calculus import dual_expr, power_atom

    opaque = dict(reg.opaque_dims)
    if isinstance(node, IsobaricSum):
        out = ast_to_expr(node.terms[0], reg)
        for t in node.terms[1:]:
            out = out + ast_to_expr(t, reg)
        return out
    if isinstance(node, FunctorialProduct):
        out = ast_to_expr(node.factors[0], reg)
        for f in node.factors[1:]:
            out = out.product(ast_to_expr(f, reg))
        return out
    if isinstance(node, Twist):
        return ast_to_expr(node.arg, reg).twisted(node.mono)
    if isinstance(node, Dual):
        return dual_expr(ast_to_expr(node.arg, reg), reg)
    if isinstance(node, (SymPower, ExtPower)):
        kind = "sym" if isinstance(node, SymPower) else "ext"
        inner = ast_to_expr(node.arg, reg)
        atom = inner.single_atom()
        return power_atom(kind, node.m, atom, reg)
    if isinstance(node, BaseNode):
        return IsobaricExpr.of(ast_to_atom(node, opaque))
    raise TypeError(f"not an AST node: {node!r}")
