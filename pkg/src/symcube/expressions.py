"""Formal isobaric expressions: atoms, twists, flattening and printing.

An atom is a product of "simple factors" sym^m(base) over the two cusp-form
symbols pi, pi' (or a named opaque symbol of declared dimension), times a
monomial in abelian character generators (w, w', mu, nu, ...). An expression
is a multiset of atoms with positive multiplicities; its total dimension is
the invariant every rewrite must preserve.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

PI = "pi"
PI_PRIME = "pi'"
KNOWN_BASES = (PI, PI_PRIME)

# central character generator attached to each GL(2) base symbol
CENTRAL_CHAR = {PI: "w", PI_PRIME: "w'"}


class ExpressionError(ValueError):
    pass


@dataclass(frozen=True)
class CharMono:
    """Element of the free abelian group on character generator names."""

    items: Tuple[Tuple[str, int], ...] = ()

    @staticmethod
    def of(**exps: int) -> "CharMono":
        return CharMono.from_dict(exps)

    @staticmethod
    def from_dict(d: Dict[str, int]) -> "CharMono":
        return CharMono(tuple(sorted((g, e) for g, e in d.items() if e != 0)))

    @staticmethod
    def gen(name: str, e: int = 1) -> "CharMono":
        return CharMono.from_dict({name: e})

    def as_dict(self) -> Dict[str, int]:
        return dict(self.items)

    def is_trivial(self) -> bool:
        return not self.items

    def __mul__(self, other: "CharMono") -> "CharMono":
        d = self.as_dict()
        for g, e in other.items:
            d[g] = d.get(g, 0) + e
        return CharMono.from_dict(d)

    def inv(self) -> "CharMono":
        return CharMono(tuple((g, -e) for g, e in self.items))

    def __pow__(self, n: int) -> "CharMono":
        return CharMono(tuple((g, e * n) for g, e in self.items)) if n else CharMono()

    def substitute(self, rewrites: Dict[str, "CharMono"]) -> "CharMono":
        out = CharMono()
        for g, e in self.items:
            out = out * (rewrites[g] ** e if g in rewrites else CharMono.gen(g, e))
        return out

    def __str__(self) -> str:
        if not self.items:
            return "1"
        parts = []
        for g, e in self.items:
            parts.append(g if e == 1 else f"{g}^{e}")
        return ".".join(parts)


TRIVIAL_MONO = CharMono()


@dataclass(frozen=True)
class Factor:
    """sym^m(base); for an opaque base m is 1 and `dualized` may be set."""

    base: str
    m: int = 1
    dualized: bool = False

    def is_known_base(self) -> bool:
        return self.base in KNOWN_BASES

    def sort_key(self):
        return (self.base, self.m, self.dualized)

    def __str__(self) -> str:
        s = self.base if self.m == 1 else f"sym^{self.m}({self.base})"
        return f"dual({s})" if self.dualized else s


@dataclass(frozen=True)
class Atom:
    """Product of simple factors with an abelian twist.

    No factors at all means the 1-dimensional atom: the character `twist`
    itself (the trivial automorphic symbol when the twist is empty).
    """

    factors: Tuple[Factor, ...]
    twist: CharMono = TRIVIAL_MONO

    @staticmethod
    def make(factors: Iterable[Factor], twist: CharMono = TRIVIAL_MONO) -> "Atom":
        fs = tuple(sorted((f for f in factors if f.m != 0), key=Factor.sort_key))
        return Atom(fs, twist)

    @staticmethod
    def simple(base: str, m: int = 1, twist: CharMono = TRIVIAL_MONO) -> "Atom":
        if m == 0:
            return Atom((), twist)
        return Atom((Factor(base, m),), twist)

    @staticmethod
    def trivial(twist: CharMono = TRIVIAL_MONO) -> "Atom":
        return Atom((), twist)

    def is_trivial_symbol(self) -> bool:
        return not self.factors and self.twist.is_trivial()

    def is_character(self) -> bool:
        return not self.factors

    def is_simple(self) -> bool:
        return len(self.factors) == 1

    def is_product(self) -> bool:
        return len(self.factors) >= 2

    def twisted(self, chi: CharMono) -> "Atom":
        return Atom(self.factors, self.twist * chi)

    def strip_twist(self) -> "Atom":
        return Atom(self.factors, TRIVIAL_MONO)

    def sort_key(self):
        return (len(self.factors), tuple(f.sort_key() for f in self.factors),
                self.twist.items)

    def __str__(self) -> str:
        if not self.factors:
            body = "1"
        else:
            body = "*".join(str(f) for f in self.factors)
        if self.twist.is_trivial():
            return body
        return f"{body}@{self.twist}"


@dataclass(frozen=True)
class IsobaricExpr:
    """Multiset of atoms with positive integer multiplicities."""

    constituents: Tuple[Tuple[Atom, int], ...]

    @staticmethod
    def of(*atoms: Atom) -> "IsobaricExpr":
        return IsobaricExpr.from_pairs((a, 1) for a in atoms)

    @staticmethod
    def from_pairs(pairs: Iterable[Tuple[Atom, int]]) -> "IsobaricExpr":
        acc: Dict[Atom, int] = {}
        for a, mult in pairs:
            if mult < 0:
                raise ExpressionError("negative multiplicity in isobaric sum")
            if mult:
                acc[a] = acc.get(a, 0) + mult
        items = tuple(sorted(acc.items(), key=lambda am: am[0].sort_key()))
        return IsobaricExpr(items)

    def __add__(self, other: "IsobaricExpr") -> "IsobaricExpr":
        return IsobaricExpr.from_pairs(self.constituents + other.constituents)

    def atoms(self) -> Iterable[Tuple[Atom, int]]:
        return self.constituents

    def single_atom(self) -> Atom:
        if len(self.constituents) != 1 or self.constituents[0][1] != 1:
            raise ExpressionError(f"expected a single atom, got {self}")
        return self.constituents[0][0]

    def product(self, other: "IsobaricExpr") -> "IsobaricExpr":
        """Functorial product, distributed over the isobaric sums."""
        pairs = []
        for a, ma in self.constituents:
            for b, mb in other.constituents:
                merged = Atom.make(a.factors + b.factors, a.twist * b.twist)
                pairs.append((merged, ma * mb))
        return IsobaricExpr.from_pairs(pairs)

    def twisted(self, chi: CharMono) -> "IsobaricExpr":
        return IsobaricExpr.from_pairs(
            (a.twisted(chi), m) for a, m in self.constituents
        )

    def __str__(self) -> str:
        if not self.constituents:
            return "0"
        parts = []
        for a, m in self.constituents:
            parts.extend([str(a)] * m)
        return " + ".join(parts)
