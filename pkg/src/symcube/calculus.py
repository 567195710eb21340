"""Isobaric calculus: normalization, duals, and the pole-order model.

Normalization expands same-base factor pairs through the Clebsch-Gordan rule,
aligns cross-base pairs through registered isomorphism facts, and rewrites
standalone atoms to their canonical side; it is deterministic, idempotent and
dimension-preserving.

The pole-order model assigns to each (pair of) normalized expression(s) an
affine expression in named unknowns: a cuspidal constituent paired against an
isomorphic one contributes its multiplicity product, provably non-isomorphic
pairs contribute zero, and pairs the registry cannot decide contribute a
fresh named unknown (unless an analytic axiom pins them down).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from . import char_ring
from .expressions import (
    Atom,
    CharMono,
    ExpressionError,
    Factor,
    IsobaricExpr,
    PI,
    PI_PRIME,
)
from .registry import HypothesisRegistry


class DimensionAuditError(RuntimeError):
    """A rewrite changed the total dimension of an expression."""


class DecomposeFirstError(ValueError):
    """Pairing was asked about an atom that still has reducible structure."""


# ---------------------------------------------------------------------------
# normalization
# ---------------------------------------------------------------------------


def _apply_base_rewrite(a: Atom, reg: HypothesisRegistry) -> Atom:
    """In twist-equivalent profiles, eliminate pi' via pi' = pi (x) witness."""
    if reg.twist_equiv_witness is None:
        return a
    chi = CharMono.gen(reg.twist_equiv_witness)
    factors = []
    twist = a.twist
    for f in a.factors:
        if f.base == PI_PRIME:
            factors.append(Factor(PI, f.m, f.dualized))
            twist = twist * (chi ** f.m)
        else:
            factors.append(f)
    return Atom.make(factors, twist)


def _cg_pair(
    a: Atom, i: int, j: int, reg: HypothesisRegistry
) -> Tuple[Tuple[Atom, int], ...]:
    """Replace factors i, j (same base) via the Clebsch-Gordan rule."""
    f, g = a.factors[i], a.factors[j]
    rest = tuple(x for k, x in enumerate(a.factors) if k not in (i, j))
    omega = reg.central_char(f.base)
    out = []
    for m, k, mult in char_ring.clebsch_gordan(f.m, g.m):
        twist = a.twist * (omega ** k)
        fs = rest + ((Factor(f.base, m),) if m else ())
        out.append((Atom.make(fs, twist), mult))
    return tuple(out)


def _normalize_atom(a: Atom, reg: HypothesisRegistry) -> Tuple[Tuple[Atom, int], ...]:
    a = Atom.make(a.factors, reg.rewrite_mono(a.twist))
    a = _apply_base_rewrite(a, reg)

    # same-base Clebsch-Gordan expansion, first pair in canonical order
    for i in range(len(a.factors)):
        for j in range(i + 1, len(a.factors)):
            f, g = a.factors[i], a.factors[j]
            if f.base == g.base and f.is_known_base() and not f.dualized and not g.dualized:
                out = []
                for sub, mult in _cg_pair(a, i, j, reg):
                    for sub2, mult2 in _normalize_atom(sub, reg):
                        out.append((sub2, mult * mult2))
                return tuple(out)

    # cross-base alignment through isomorphism facts
    for i in range(len(a.factors)):
        for j in range(len(a.factors)):
            if i == j:
                continue
            f, g = a.factors[i], a.factors[j]
            if not (f.is_known_base() and g.is_known_base()) or f.base == g.base:
                continue
            tau = reg.simple_cross_map(f, g.base)
            if tau is not None:
                fs = list(a.factors)
                fs[i] = Factor(g.base, f.m, f.dualized)
                moved = Atom.make(fs, a.twist * tau)
                return _normalize_atom(moved, reg)

    # standalone canonicalization of simple atoms (orient pi' -> pi)
    if a.is_simple():
        f = a.factors[0]
        if f.base == PI_PRIME and not f.dualized:
            tau = reg.simple_cross_map(f, PI)
            if tau is not None:
                return _normalize_atom(
                    Atom.simple(PI, f.m, a.twist * tau), reg
                )
    return ((a, 1),)


def normalize(e: IsobaricExpr, reg: HypothesisRegistry) -> IsobaricExpr:
    pairs = []
    dim_before = reg.expr_dim(e)
    for a, mult in e.constituents:
        for sub, m2 in _normalize_atom(a, reg):
            pairs.append((sub, mult * m2))
    out = IsobaricExpr.from_pairs(pairs)
    dim_after = reg.expr_dim(out)
    if dim_before != dim_after:
        raise DimensionAuditError(
            f"normalize changed dimension {dim_before} -> {dim_after} on {e}"
        )
    return out


def expand_product(a: Atom, b: Atom, reg: HypothesisRegistry) -> IsobaricExpr:
    """Functorial product of two atoms, expanded as far as the registry allows."""
    merged = Atom.make(a.factors + b.factors, a.twist * b.twist)
    return normalize(IsobaricExpr.of(merged), reg)


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------


def dual_atom(a: Atom, reg: HypothesisRegistry) -> Atom:
    twist = a.twist.inv()
    factors = []
    for f in a.factors:
        if f.is_known_base():
            factors.append(f)
            twist = twist * (reg.central_char(f.base) ** (-f.m))
        else:
            factors.append(Factor(f.base, f.m, not f.dualized))
    return Atom.make(factors, twist)


def dual_expr(e: IsobaricExpr, reg: HypothesisRegistry) -> IsobaricExpr:
    return IsobaricExpr.from_pairs((dual_atom(a, reg), m) for a, m in e.constituents)


# ---------------------------------------------------------------------------
# sym / ext powers of single-base atoms (lifted from the character ring)
# ---------------------------------------------------------------------------


def power_atom(kind: str, n: int, a: Atom, reg: HypothesisRegistry) -> IsobaricExpr:
    """sym^n or ext^n of a simple atom over pi or pi', via weight plethysm."""
    if a.is_character():
        chi = a.twist ** n if kind == "sym" else (a.twist if n == 1 else None)
        if kind == "ext" and n > 1:
            return IsobaricExpr.from_pairs(())
        if n == 0:
            return IsobaricExpr.of(Atom.trivial())
        return IsobaricExpr.of(Atom.trivial(chi))
    if not (a.is_simple() and a.factors[0].is_known_base() and not a.factors[0].dualized):
        raise ExpressionError(f"sym/ext powers are only supported on simple atoms: {a}")
    f = a.factors[0]
    ch = char_ring.power(kind, n, char_ring.sym_std(f.m))
    omega = reg.central_char(f.base)
    pairs = []
    for m, k, mult in char_ring.decompose(ch):
        twist = (a.twist ** n) * (omega ** k)
        pairs.append((Atom.simple(f.base, m, twist), mult))
    return IsobaricExpr.from_pairs(pairs)


# ---------------------------------------------------------------------------
# pole orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PoleOrder:
    """-ord_{s=1} of a formal partial L-function, affine in named unknowns."""

    constant: int = 0
    unknowns: Tuple[Tuple[str, int], ...] = ()

    @staticmethod
    def known(n: int) -> "PoleOrder":
        return PoleOrder(n, ())

    @staticmethod
    def unknown(name: str, coeff: int = 1) -> "PoleOrder":
        return PoleOrder(0, ((name, coeff),))

    def __add__(self, other: "PoleOrder") -> "PoleOrder":
        d = dict(self.unknowns)
        for n, c in other.unknowns:
            d[n] = d.get(n, 0) + c
        return PoleOrder(
            self.constant + other.constant,
            tuple(sorted((n, c) for n, c in d.items() if c != 0)),
        )

    def scaled(self, k: int) -> "PoleOrder":
        return PoleOrder(self.constant * k, tuple((n, c * k) for n, c in self.unknowns))

    def is_known(self) -> bool:
        return not self.unknowns

    def __str__(self) -> str:
        parts = []
        if self.constant or not self.unknowns:
            parts.append(str(self.constant))
        for n, c in self.unknowns:
            parts.append(n if c == 1 else f"{c}*{n}")
        return " + ".join(parts)


ZERO_ORDER = PoleOrder.known(0)
ONE_ORDER = PoleOrder.known(1)


def _unknown_name(a: Atom, b: Atom) -> str:
    x, y = sorted((str(a), str(b)))
    return f"p({x} | {y})"


def _canonical_iso_side(a: Atom, reg: HypothesisRegistry) -> Atom:
    """Map an atom to the smallest registry-isomorphic representative, so that
    unknowns attached to isomorphic objects coincide."""
    best = a
    stripped, twist = a.strip_twist(), a.twist
    for x, y in reg._closure():
        if x == stripped:
            cand = y.twisted(twist)
            if cand.sort_key() < best.sort_key():
                best = cand
    return best


def _all_factors_cuspidal(a: Atom, reg: HypothesisRegistry) -> bool:
    return all(
        f.is_known_base() and not f.dualized and reg.is_cuspidal(Atom.make((f,)))
        for f in a.factors
    )


def iso_pole(x: Atom, y: Atom, reg: HypothesisRegistry) -> PoleOrder:
    """-ord_{s=1} L(s, X x Y^dual): 1 for provably isomorphic cuspidal atoms,
    0 for provably non-isomorphic ones, a named unknown otherwise."""
    if reg.atom_dim(x) != reg.atom_dim(y):
        return ZERO_ORDER
    # products of cuspidal GL(2)-side factors: expand X x Y^dual and count
    if x.is_product() and y.is_product():
        if _all_factors_cuspidal(x, reg) and _all_factors_cuspidal(y, reg):
            yd = dual_atom(y, reg)
            merged = Atom.make(x.factors + yd.factors, x.twist * yd.twist)
            order = pole_count(normalize(IsobaricExpr.of(merged), reg), reg)
            if order.is_known():
                return order
    if reg.iso_related(x, y):
        if reg.is_cuspidal(x) or reg.is_cuspidal(y):
            return ONE_ORDER
        return PoleOrder.unknown(_unknown_name(x, x))
    # both 1-dimensional characters: distinct means no pole
    if x.is_character() and y.is_character():
        return ZERO_ORDER
    if x.is_simple() and y.is_simple():
        f, g = x.factors[0], y.factors[0]
        if f.is_known_base() and g.is_known_base() and f.m == g.m:
            if f.base == g.base:
                # cuspidal without self-twists: distinct twists never match
                if 1 <= f.m <= 4:
                    return ZERO_ORDER
            else:
                if reg.simple_cross_map(f, g.base) is not None:
                    # an iso fact exists at some twist, and it is not this one
                    return ZERO_ORDER
                if f.m <= 2 and reg.not_twist_equivalent:
                    return ZERO_ORDER
    cx = _canonical_iso_side(x, reg)
    cy = _canonical_iso_side(y, reg)
    return PoleOrder.unknown(_unknown_name(cx, cy))


def atom_pole(z: Atom, reg: HypothesisRegistry) -> PoleOrder:
    """-ord_{s=1} of the standard L-function of a single normalized atom."""
    if z.is_character():
        return ONE_ORDER if z.twist.is_trivial() else ZERO_ORDER
    ax = reg.axiom_order(z)
    if ax is not None:
        return PoleOrder.known(ax)
    if z.is_simple():
        f = z.factors[0]
        if f.is_known_base() and 1 <= f.m <= 4 and not f.dualized:
            return ZERO_ORDER  # cuspidal, non-trivial: entire and nonzero at s=1
        return PoleOrder.unknown(f"ord({z})")
    if len(z.factors) == 2:
        f, g = z.factors
        if (reg.is_cuspidal(Atom.make((f,))) and reg.is_cuspidal(Atom.make((g,)))
                and f.is_known_base() and g.is_known_base()):
            # Rankin-Selberg criterion on the two cuspidal slots
            left = Atom.make((f,))
            right = dual_atom(Atom.make((g,), z.twist), reg)
            return iso_pole(left, right, reg)
    return PoleOrder.unknown(f"ord({z})")


def pole_count(e: IsobaricExpr, reg: HypothesisRegistry) -> PoleOrder:
    total = ZERO_ORDER
    for a, mult in e.constituents:
        total = total + atom_pole(a, reg).scaled(mult)
    return total


def _check_decomposed(e: IsobaricExpr, reg: HypothesisRegistry) -> None:
    for a, _ in e.constituents:
        bases = [f.base for f in a.factors if f.is_known_base() and not f.dualized]
        if len(bases) != len(set(bases)):
            raise DecomposeFirstError(f"decompose first: {a}")


def pairing(a: IsobaricExpr, b: IsobaricExpr, reg: HypothesisRegistry) -> PoleOrder:
    """Rankin-Selberg pairing of two normalized isobaric expressions."""
    _check_decomposed(a, reg)
    _check_decomposed(b, reg)
    total = ZERO_ORDER
    for x, mx in a.constituents:
        for y, my in b.constituents:
            total = total + iso_pole(x, y, reg).scaled(mx * my)
    return total


def pole_order_RS(a: IsobaricExpr, b: IsobaricExpr, reg: HypothesisRegistry) -> PoleOrder:
    """-ord_{s=1} of the formal partial L-function L(s, A x B^dual)."""
    return pairing(normalize(a, reg), normalize(b, reg), reg)


# ---------------------------------------------------------------------------
# scripted derivation steps (single rewrites, no fixpoint)
# ---------------------------------------------------------------------------


def cg_once(e: IsobaricExpr, reg: HypothesisRegistry, base: str) -> IsobaricExpr:
    """One Clebsch-Gordan layer: expand the first same-base pair over `base`
    in each constituent that has one; leave the other constituents alone."""
    pairs = []
    for a, mult in e.constituents:
        hit = None
        for i in range(len(a.factors)):
            for j in range(i + 1, len(a.factors)):
                f, g = a.factors[i], a.factors[j]
                if f.base == base == g.base and not f.dualized and not g.dualized:
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            pairs.append((a, mult))
        else:
            for sub, m2 in _cg_pair(a, hit[0], hit[1], reg):
                pairs.append((sub, mult * m2))
    out = IsobaricExpr.from_pairs(pairs)
    if reg.expr_dim(out) != reg.expr_dim(e):
        raise DimensionAuditError(f"cg_once changed dimension on {e}")
    return out


def swap_sym(
    e: IsobaricExpr, m: int, src_base: str, dst_base: str, reg: HypothesisRegistry
) -> IsobaricExpr:
    """Replace every sym^m(src_base) factor by sym^m(dst_base), at the twist
    cost dictated by a registered isomorphism fact."""
    tau = reg.simple_cross_map(Factor(src_base, m), dst_base)
    reg.require(tau is not None, f"sym^{m}({src_base}) = sym^{m}({dst_base})")
    pairs = []
    for a, mult in e.constituents:
        factors, twist = [], a.twist
        for f in a.factors:
            if f.base == src_base and f.m == m and not f.dualized:
                factors.append(Factor(dst_base, m))
                twist = twist * tau
            else:
                factors.append(f)
        pairs.append((Atom.make(factors, twist), mult))
    return IsobaricExpr.from_pairs(pairs)


def replace_factor(
    e: IsobaricExpr, factor: Factor, replacement: Atom, reg: HypothesisRegistry
) -> IsobaricExpr:
    """Substitute a registered isomorphism sym^m(X) = replacement inside every
    atom containing the factor (one occurrence per atom)."""
    reg.require(
        reg.iso_related(Atom.make((factor,)), replacement),
        f"{Atom.make((factor,))} = {replacement}",
    )
    pairs = []
    for a, mult in e.constituents:
        if factor in a.factors:
            rest = list(a.factors)
            rest.remove(factor)
            pairs.append(
                (Atom.make(tuple(rest) + replacement.factors, a.twist * replacement.twist), mult)
            )
        else:
            pairs.append((a, mult))
    out = IsobaricExpr.from_pairs(pairs)
    if reg.expr_dim(out) != reg.expr_dim(e):
        raise DimensionAuditError(f"replace_factor changed dimension on {e}")
    return out


def rs_order_expanded(
    x: Atom, y: Atom, reg: HypothesisRegistry
) -> Tuple[IsobaricExpr, PoleOrder]:
    """Expand L(s, X x Y^dual) into its isobaric constituents and count poles."""
    yd = dual_atom(y, reg)
    merged = Atom.make(x.factors + yd.factors, x.twist * yd.twist)
    expansion = normalize(IsobaricExpr.of(merged), reg)
    return expansion, pole_count(expansion, reg)


def cancel_common(
    e1: IsobaricExpr, e2: IsobaricExpr, reg: HypothesisRegistry
) -> Tuple[IsobaricExpr, IsobaricExpr, Tuple[Tuple[Atom, Atom], ...]]:
    """Strike registry-isomorphic constituent pairs off both sides."""
    left = []
    for a, m in e1.constituents:
        left.extend([a] * m)
    right = []
    for b, m in e2.constituents:
        right.extend([b] * m)
    cancelled = []
    for a in list(left):
        for b in right:
            if reg.iso_related(a, b):
                left.remove(a)
                right.remove(b)
                cancelled.append((a, b))
                break
    rem1 = IsobaricExpr.from_pairs((a, 1) for a in left)
    rem2 = IsobaricExpr.from_pairs((b, 1) for b in right)
    return rem1, rem2, tuple(cancelled)
