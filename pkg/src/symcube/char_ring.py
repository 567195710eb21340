"""Virtual character ring of GL(2): exact weight-multiset algebra.

A character is a symmetric Laurent polynomial in the two eigenvalue symbols
of a semisimple class diag(alpha, beta). Weights are stored by their S2-orbit
representatives (i, j) with i >= j; an off-diagonal orbit counts both
monomials alpha^i beta^j and alpha^j beta^i, a diagonal one counts a single
monomial. Tensor, direct sum, duals, sym/ext powers and the decomposition
into the basis {sym^m(std) . det^k} are all exact integer computations.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Tuple

Weight = Tuple[int, int]  # canonical representative: i >= j


class NonEffectiveError(ValueError):
    """sym/ext power applied to a character with a negative coefficient."""


def _orbit(i: int, j: int) -> Weight:
    return (i, j) if i >= j else (j, i)


@dataclass(frozen=True)
class VirtualChar:
    """Finite-support map from S2-orbits of weights to integer coefficients."""

    coeffs: Tuple[Tuple[Weight, int], ...]  # sorted, no zero coefficients

    @staticmethod
    def from_orbit_dict(d: dict) -> "VirtualChar":
        items = tuple(sorted((w, c) for w, c in d.items() if c != 0))
        return VirtualChar(items)

    @staticmethod
    def from_monomials(mons: Iterable[Tuple[Weight, int]]) -> "VirtualChar":
        """Build from full monomial data; symmetry is checked."""
        full = Counter()
        for (i, j), c in mons:
            full[(i, j)] += c
        orb: dict = {}
        for (i, j), c in full.items():
            if c == 0:
                continue
            if full[(j, i)] != c:
                raise ValueError(f"monomial data not S2-symmetric at {(i, j)}")
            if i >= j:
                orb[(i, j)] = c
        return VirtualChar.from_orbit_dict(orb)

    def orbit_dict(self) -> dict:
        return dict(self.coeffs)

    def monomials(self) -> Counter:
        """Full (non-orbit) monomial counter."""
        out = Counter()
        for (i, j), c in self.coeffs:
            out[(i, j)] += c
            if i != j:
                out[(j, i)] += c
        return out

    def weight_multiset(self) -> list:
        """Expanded list of monomial weights; requires effectiveness."""
        out = []
        for (i, j), c in sorted(self.monomials().items()):
            if c < 0:
                raise NonEffectiveError(
                    f"power of non-effective character (coefficient {c} at {(i, j)})"
                )
            out.extend([(i, j)] * c)
        return out

    def is_effective(self) -> bool:
        return all(c >= 0 for _, c in self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def dimension(self) -> int:
        return sum(c * (1 if i == j else 2) for (i, j), c in self.coeffs)

    def __add__(self, other: "VirtualChar") -> "VirtualChar":
        d = Counter(dict(self.coeffs))
        for w, c in other.coeffs:
            d[w] += c
        return VirtualChar.from_orbit_dict(d)

    def __neg__(self) -> "VirtualChar":
        return VirtualChar(tuple((w, -c) for w, c in self.coeffs))

    def __sub__(self, other: "VirtualChar") -> "VirtualChar":
        return self + (-other)

    def __mul__(self, other: "VirtualChar") -> "VirtualChar":
        prod = Counter()
        for (i1, j1), c1 in self.monomials().items():
            for (i2, j2), c2 in other.monomials().items():
                prod[(i1 + i2, j1 + j2)] += c1 * c2
        return VirtualChar.from_monomials(prod.items())


def zero() -> VirtualChar:
    return VirtualChar(())


def one() -> VirtualChar:
    return VirtualChar((((0, 0), 1),))


def std() -> VirtualChar:
    return VirtualChar((((1, 0), 1),))


def det_power(k: int) -> VirtualChar:
    return VirtualChar((((k, k), 1),))


def tensor(x: VirtualChar, y: VirtualChar) -> VirtualChar:
    return x * y


def direct_sum(x: VirtualChar, y: VirtualChar) -> VirtualChar:
    return x + y


def dual(x: VirtualChar) -> VirtualChar:
    return VirtualChar.from_monomials(
        ((-i, -j), c) for (i, j), c in x.monomials().items()
    )


def power(kind: str, m: int, x: VirtualChar) -> VirtualChar:
    """Symmetric or exterior m-th power of an effective character.

    The character is expanded into its multiset W of eigenvalue weights;
    sym^m sums over size-m multisets of positions, ext^m over size-m subsets.
    """
    if kind not in ("sym", "ext"):
        raise ValueError(f"unknown power kind {kind!r}")
    if m < 0:
        raise ValueError("negative power degree")
    if m == 0:
        return one()
    weights = x.weight_multiset()
    d = len(weights)
    if kind == "ext" and m > d:
        return zero()
    chooser = (
        itertools.combinations_with_replacement
        if kind == "sym"
        else itertools.combinations
    )
    mons = Counter()
    for picks in chooser(range(d), m):
        i = sum(weights[p][0] for p in picks)
        j = sum(weights[p][1] for p in picks)
        mons[(i, j)] += 1
    return VirtualChar.from_monomials(mons.items())


def sym_std(m: int) -> VirtualChar:
    """sym^m of the standard character: weights alpha^(m-t) beta^t."""
    return VirtualChar.from_monomials(((m - t, t), 1) for t in range(m + 1))


def sym_det(m: int, k: int) -> VirtualChar:
    return sym_std(m) * det_power(k)


@dataclass(frozen=True)
class SymDetDecomp:
    """Expansion in the Z-basis {sym^m(std) . det^k}."""

    terms: Tuple[Tuple[int, int, int], ...]  # (m, k, multiplicity), sorted

    def __iter__(self) -> Iterator[Tuple[int, int, int]]:
        return iter(self.terms)

    def dimension(self) -> int:
        return sum(mult * (m + 1) for m, k, mult in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, k, mult in self.terms:
            s = f"sym^{m}" if m else "1"
            if k:
                s += f".det^{k}"
            if mult != 1:
                s = f"{mult}*{s}"
            parts.append(s)
        return " + ".join(parts)


def reconstruct(d: SymDetDecomp) -> VirtualChar:
    out = zero()
    for m, k, mult in d.terms:
        term = sym_det(m, k)
        out = out + VirtualChar(tuple((w, c * mult) for w, c in term.coeffs))
    return out


def decompose(x: VirtualChar) -> SymDetDecomp:
    """Unique expansion in {sym^m . det^k}.

    Repeatedly take the surviving orbit (i, j) maximizing (i - j, j), emit
    (m, k) = (i - j, j) with its coefficient, and subtract. Each step strictly
    decreases the support in that order, so this terminates.
    """
    rest = x
    terms = []
    while not rest.is_zero():
        (i, j), c = max(rest.coeffs, key=lambda wc: (wc[0][0] - wc[0][1], wc[0][1]))
        m, k = i - j, j
        terms.append((m, k, c))
        sub = sym_det(m, k)
        rest = rest - VirtualChar(tuple((w, cc * c) for w, cc in sub.coeffs))
    return SymDetDecomp(tuple(sorted(terms)))


def clebsch_gordan(a: int, b: int) -> SymDetDecomp:
    """sym^a(std) (x) sym^b(std) = (+)_{k<=min(a,b)} sym^(a+b-2k).det^k."""
    if a < 0 or b < 0:
        raise ValueError("negative symmetric-power degrees")
    terms = tuple(sorted((a + b - 2 * k, k, 1) for k in range(min(a, b) + 1)))
    return SymDetDecomp(terms)


def sym_trace_dim(m: int, d: int) -> int:
    return comb(d + m - 1, m)


def ext_trace_dim(m: int, d: int) -> int:
    return comb(d, m)
