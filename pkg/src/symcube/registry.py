"""Standing hypotheses as checkable facts: cuspidality, isomorphisms,
twist-inequivalence, character rewrites, and imported analytic axioms.

A registry is immutable; derivations extend it through the ``with_*``
constructors. Isomorphism facts are stored twist-normalized (the left atom
carries no twist) and closed under symmetry, transitivity and compatible
twisting, so lookups reduce to set membership after a twist shift.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional, Tuple

from .expressions import (
    CENTRAL_CHAR,
    Atom,
    CharMono,
    ExpressionError,
    Factor,
    KNOWN_BASES,
    PI,
    PI_PRIME,
)


class HypothesisMissingError(RuntimeError):
    def __init__(self, fact: str):
        super().__init__(f"hypothesis required: {fact}")
        self.fact = fact


def _norm_pair(a: Atom, b: Atom) -> Tuple[Atom, Atom]:
    """Shift twists so the left atom carries none."""
    tau = a.twist
    return a.strip_twist(), b.twisted(tau.inv())


@lru_cache(maxsize=None)
def _closure_of(iso_pairs) -> frozenset:
    entries = set()
    frontier = set()
    for a, b in iso_pairs:
        frontier.add(_norm_pair(a, b))
        frontier.add(_norm_pair(b, a))
    while frontier:
        entries |= frontier
        new = set()
        for a, b in entries:
            for c, d in entries:
                # b = c (x) tau  =>  a ~ d (x) tau
                if b.factors == c.factors:
                    tau = b.twist * c.twist.inv()
                    cand = _norm_pair(a, d.twisted(tau))
                    if cand not in entries:
                        new.add(cand)
        frontier = new
    return frozenset(entries)


@dataclass(frozen=True)
class AnalyticAxiom:
    pattern: str  # canonical twist-stripped atom string
    order: int  # asserted -ord_{s=1}, for any abelian twist of the pattern
    source: str  # where the axiom came from, e.g. a profile name


@dataclass(frozen=True)
class HypothesisRegistry:
    cuspidal_patterns: frozenset = frozenset()  # twist-stripped atom strings
    iso_pairs: Tuple[Tuple[Atom, Atom], ...] = ()
    not_twist_equivalent: bool = False
    # declared twist-equivalence: pi' ~ pi (x) witness character
    twist_equiv_witness: Optional[str] = None
    character_rewrites: Tuple[Tuple[str, CharMono], ...] = ()
    analytic_axioms: Tuple[AnalyticAxiom, ...] = ()
    opaque_dims: Tuple[Tuple[str, int], ...] = ()
    sym5_automorphic: bool = False
    name: str = "custom"

    # -- dimensions ----------------------------------------------------------

    def factor_dim(self, f: Factor) -> int:
        if f.is_known_base():
            return f.m + 1
        for nm, d in self.opaque_dims:
            if nm == f.base:
                return d
        raise ExpressionError(f"unknown base {f.base!r}: declare it in the profile")

    def atom_dim(self, a: Atom) -> int:
        d = 1
        for f in a.factors:
            d *= self.factor_dim(f)
        return d

    def expr_dim(self, e) -> int:
        return sum(m * self.atom_dim(a) for a, m in e.constituents)

    # -- character rewrites ---------------------------------------------------

    def rewrite_mono(self, mono: CharMono) -> CharMono:
        rw = dict(self.character_rewrites)
        return mono.substitute(rw) if rw else mono

    def central_char(self, base: str) -> CharMono:
        return self.rewrite_mono(CharMono.gen(CENTRAL_CHAR[base]))

    # -- cuspidality -----------------------------------------------------------

    def is_cuspidal(self, a: Atom) -> bool:
        """Cuspidal (after stripping the abelian twist) per the registry."""
        a = a.strip_twist()
        if a.is_character():
            return True  # GL(1) characters count as cuspidal atoms
        if str(a) in self.cuspidal_patterns:
            return True
        if a.is_simple():
            f = a.factors[0]
            return f.is_known_base() and 1 <= f.m <= 4 and not f.dualized
        return False

    # -- isomorphism facts -------------------------------------------------------

    def _closure(self) -> frozenset:
        return _closure_of(self.iso_pairs)

    def iso_related(self, a: Atom, b: Atom) -> bool:
        if a == b:
            return True
        return _norm_pair(a, b) in self._closure()

    def simple_cross_map(self, f: Factor, target_base: str):
        """Twist cost of moving sym^m(base) to sym^m(target_base), if an
        isomorphism fact permits it; None otherwise."""
        if not f.is_known_base() or f.dualized:
            return None
        src = Atom.simple(f.base, f.m)
        for a, b in self._closure():
            if a == src and b.is_simple() and not b.factors[0].dualized:
                bf = b.factors[0]
                if bf.base == target_base and bf.m == f.m:
                    return b.twist
        return None

    # -- analytic axioms ------------------------------------------------------

    def axiom_order(self, a: Atom):
        key = str(a.strip_twist())
        for ax in self.analytic_axioms:
            if ax.pattern == key:
                return ax.order
        return None

    # -- extension ---------------------------------------------------------------

    def with_cuspidal(self, a: Atom) -> "HypothesisRegistry":
        return replace(
            self, cuspidal_patterns=self.cuspidal_patterns | {str(a.strip_twist())}
        )

    def with_iso(self, a: Atom, b: Atom) -> "HypothesisRegistry":
        return replace(self, iso_pairs=self.iso_pairs + ((a, b),))

    def with_char_rewrite(self, gen: str, to: CharMono) -> "HypothesisRegistry":
        return replace(self, character_rewrites=self.character_rewrites + ((gen, to),))

    def require(self, cond: bool, fact: str) -> None:
        if not cond:
            raise HypothesisMissingError(fact)


def _sym3_iso() -> Tuple[Atom, Atom]:
    return (Atom.simple(PI, 3), Atom.simple(PI_PRIME, 3))


def _base_cuspidal() -> frozenset:
    pats = set()
    for base in KNOWN_BASES:
        for m in range(1, 5):
            pats.add(str(Atom.simple(base, m)))
    return frozenset(pats)


_INVERTIBILITY_SOURCE = (
    "imported analytic fact: the high symmetric-power L-factors appearing in "
    "the degree-36 factorization are invertible at s=1"
)

_THEOREM_A_AXIOMS = (
    AnalyticAxiom("sym^6(pi)", 0, _INVERTIBILITY_SOURCE),
    AnalyticAxiom("sym^6(pi')", 0, _INVERTIBILITY_SOURCE),
    AnalyticAxiom("sym^8(pi)", 0, _INVERTIBILITY_SOURCE),
    AnalyticAxiom("sym^8(pi')", 0, _INVERTIBILITY_SOURCE),
    AnalyticAxiom(
        str(Atom.make((Factor(PI, 1), Factor(PI_PRIME, 5)))),
        0,
        "imported analytic fact: the mixed sym^5 x standard factor is "
        "invertible at s=1 (part of the same degree-36 invertibility import)",
    ),
)


def profile_theorem_a() -> HypothesisRegistry:
    """Main hypotheses: cuspidal non-polyhedral pair, equal symmetric cubes,
    not twist-equivalent.  Ships with the standing cubic-twist normalization
    w' = w (re-derived, not assumed, by the lemma22 replay)."""
    return HypothesisRegistry(
        cuspidal_patterns=_base_cuspidal(),
        iso_pairs=(_sym3_iso(),),
        not_twist_equivalent=True,
        character_rewrites=(("w'", CharMono.gen("w")),),
        analytic_axioms=_THEOREM_A_AXIOMS,
        name="theoremA",
    )


def profile_theorem_a_branch_a() -> HypothesisRegistry:
    """Same but with pi' declared a twist of pi (witness character chi)."""
    return HypothesisRegistry(
        cuspidal_patterns=_base_cuspidal(),
        iso_pairs=(_sym3_iso(),),
        not_twist_equivalent=False,
        twist_equiv_witness="chi",
        character_rewrites=(("w'", CharMono.of(w=1, chi=2)),),
        analytic_axioms=_THEOREM_A_AXIOMS,
        name="theoremA-branch-a",
    )


def profile_corollary_b() -> HypothesisRegistry:
    return replace(profile_theorem_a(), sym5_automorphic=True, name="corollaryB")


BUILTIN_PROFILES = {
    "theoremA": profile_theorem_a,
    "theoremA-branch-a": profile_theorem_a_branch_a,
    "corollaryB": profile_corollary_b,
}


def load_profile(name_or_path: str) -> HypothesisRegistry:
    """Builtin profile name, or a path to a JSON profile document."""
    if name_or_path in BUILTIN_PROFILES:
        return BUILTIN_PROFILES[name_or_path]()
    with open(name_or_path) as fh:
        doc = json.load(fh)
    return profile_from_dict(doc, name=name_or_path)


def profile_from_dict(doc: dict, name: str = "custom") -> HypothesisRegistry:
    from .parser import parse_atom  # late import: parser depends on expressions

    opaque = tuple(sorted((doc.get("opaque") or {}).items()))
    cusp = set(_base_cuspidal()) if doc.get("standard_cuspidality", True) else set()
    for s in doc.get("cuspidal", ()):
        cusp.add(str(parse_atom(s, opaque).strip_twist()))
    isos = tuple(
        (parse_atom(a, opaque), parse_atom(b, opaque))
        for a, b in doc.get("isomorphic", ())
    )
    rewrites = tuple(
        (g, _parse_mono(v)) for g, v in (doc.get("character_rewrites") or {}).items()
    )
    axioms = tuple(
        AnalyticAxiom(
            str(parse_atom(ax["expr"], opaque).strip_twist()),
            int(ax["order"]),
            ax.get("source", "profile axiom"),
        )
        for ax in doc.get("analytic_axioms", ())
    )
    te = doc.get("twist_equivalent")
    witness = te.get("witness", "chi") if te else None
    return HypothesisRegistry(
        cuspidal_patterns=frozenset(cusp),
        iso_pairs=isos,
        not_twist_equivalent=bool(doc.get("not_twist_equivalent")),
        twist_equiv_witness=witness,
        character_rewrites=rewrites,
        analytic_axioms=axioms,
        opaque_dims=opaque,
        sym5_automorphic=bool(doc.get("sym5_automorphic")),
        name=name,
    )


def _parse_mono(text: str) -> CharMono:
    out = CharMono()
    if text in ("1", ""):
        return out
    for part in text.split("."):
        if "^" in part:
            g, e = part.split("^")
            out = out * CharMono.gen(g, int(e))
        else:
            out = out * CharMono.gen(part)
    return out
