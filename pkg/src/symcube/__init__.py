"""Exact isobaric calculus for symmetric-power functoriality arguments.

Modules:
    arith       -- Q(sqrt5) field arithmetic
    char_ring   -- virtual characters of GL(2) weights, plethysm
    expressions -- isobaric sums of twisted products of sym-powers
    registry    -- hypothesis profiles (cuspidality, isomorphisms, axioms)
    calculus    -- normalization, duals, pole-order bookkeeping
    replay      -- the scripted derivations
    identities  -- the numbered identity checks and their local models
    euler_local -- exact local Euler-factor oracle
    icosa       -- the binary icosahedral group over Q(sqrt5)
    parser      -- surface syntax
    cli         -- command-line entry point
"""
from .arith import PHI, QSqrt5, Rational, galois_conj
from .calculus import (
    DimensionAuditError,
    PoleOrder,
    dual_expr,
    normalize,
    pairing,
    pole_order_RS,
    power_atom,
)
from .expressions import Atom, CharMono, Factor, IsobaricExpr, PI, PI_PRIME
from .identities import IDENTITY_IDS, verify_all, verify_identity
from .parser import parse, parse_atom, print_ast
from .registry import BUILTIN_PROFILES, HypothesisRegistry, load_profile
from .replay import DerivationLog, Step, replay

__all__ = [
    "Atom",
    "BUILTIN_PROFILES",
    "CharMono",
    "DerivationLog",
    "DimensionAuditError",
    "Factor",
    "HypothesisRegistry",
    "IDENTITY_IDS",
    "IsobaricExpr",
    "PHI",
    "PI",
    "PI_PRIME",
    "PoleOrder",
    "QSqrt5",
    "Rational",
    "Step",
    "dual_expr",
    "galois_conj",
    "load_profile",
    "normalize",
    "pairing",
    "parse",
    "parse_atom",
    "pole_order_RS",
    "power_atom",
    "print_ast",
    "replay",
    "verify_all",
    "verify_identity",
]

__version__ = "0.1.0"
