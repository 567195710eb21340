"""Exact unramified local factors.

A local L-factor is represented by its reciprocal Euler polynomial in
T = q^{-s}, with coefficients in Q(sqrt5).  Identities between (products of)
formal L-functions become exact polynomial equalities once Satake parameters
are assigned, which gives an independent pointwise oracle for everything the
symbolic layer proves.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union

from .arith import ONE, QSqrt5, Rational, ZERO
from .char_ring import VirtualChar
from .expressions import Atom, CharMono, Factor, IsobaricExpr, PI, PI_PRIME


class MissingSatakeError(KeyError):
    def __init__(self, symbol: str):
        super().__init__(f"missing Satake assignment: {symbol}")


class OpaqueAtomError(ValueError):
    def __init__(self, what):
        super().__init__(f"expand before evaluation: {what}")


@dataclass(frozen=True)
class SatakeAssignment:
    """Exact Satake parameters at one unramified place.

    w and w' are forced to alpha*beta and alpha2*beta2; free character
    generators (mu, nu, ...) are assigned explicitly.
    """

    alpha: QSqrt5
    beta: QSqrt5
    alpha2: QSqrt5
    beta2: QSqrt5
    chars: Tuple[Tuple[str, QSqrt5], ...] = ()

    def __post_init__(self):
        for name, v in (
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("alpha2", self.alpha2),
            ("beta2", self.beta2),
        ):
            if v == ZERO:
                raise ValueError(f"Satake value {name} must be nonzero")
        table = dict(self.chars)
        for gen, forced in (("w", self.alpha * self.beta), ("w'", self.alpha2 * self.beta2)):
            if gen in table and table[gen] != forced:
                raise ValueError(f"inconsistent assignment: {gen} must equal {forced}")
            table[gen] = forced
        object.__setattr__(self, "chars", tuple(sorted(table.items())))

    @staticmethod
    def make(alpha, beta, alpha2=None, beta2=None, **chars) -> "SatakeAssignment":
        alpha2 = alpha if alpha2 is None else alpha2
        beta2 = beta if beta2 is None else beta2
        return SatakeAssignment(
            alpha, beta, alpha2, beta2, tuple(sorted(chars.items()))
        )

    def base_params(self, base: str) -> Tuple[QSqrt5, QSqrt5]:
        if base == PI:
            return self.alpha, self.beta
        if base == PI_PRIME:
            return self.alpha2, self.beta2
        raise MissingSatakeError(base)

    def char_value(self, mono: CharMono) -> QSqrt5:
        table = dict(self.chars)
        v = ONE
        for gen, e in mono.items:
            if gen not in table:
                raise MissingSatakeError(gen)
            v = v * table[gen] ** e
        return v


@dataclass(frozen=True)
class EulerPoly:
    """prod_i (1 - lambda_i T), stored as exact coefficients, constant first."""

    coefficients: Tuple[QSqrt5, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != ONE:
            raise ValueError("Euler polynomial must have constant term 1")

    @staticmethod
    def one() -> "EulerPoly":
        return EulerPoly((ONE,))

    @staticmethod
    def from_roots(roots: Iterable[QSqrt5]) -> "EulerPoly":
        coeffs = [ONE]
        for lam in roots:
            nxt = coeffs + [ZERO]
            for i in range(len(coeffs)):
                nxt[i + 1] = nxt[i + 1] - lam * coeffs[i]
            coeffs = nxt
        return EulerPoly(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __mul__(self, other: "EulerPoly") -> "EulerPoly":
        out = [ZERO] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return EulerPoly(tuple(out))


def _factor_roots(f: Factor, sat: SatakeAssignment) -> List[QSqrt5]:
    if not f.is_known_base():
        raise OpaqueAtomError(f)
    a, b = sat.base_params(f.base)
    roots = [a ** (f.m - k) * b ** k for k in range(f.m + 1)]
    if f.dualized:
        roots = [r.inverse() for r in roots]
    return roots


def atom_roots(a: Atom, sat: SatakeAssignment) -> List[QSqrt5]:
    tw = sat.char_value(a.twist)
    lists = [_factor_roots(f, sat) for f in a.factors]
    out = []
    for combo in itertools.product(*lists) if lists else [()]:
        v = tw
        for r in combo:
            v = v * r
        out.append(v)
    return out


def char_roots(x: VirtualChar, sat: SatakeAssignment, base: str = PI) -> List[QSqrt5]:
    a, b = sat.base_params(base)
    return [a ** i * b ** j for (i, j) in x.weight_multiset()]


def local_factor(
    expr: Union[IsobaricExpr, VirtualChar], sat: SatakeAssignment
) -> EulerPoly:
    """Reciprocal local L-factor prod (1 - lambda T) of an effective input."""
    if isinstance(expr, VirtualChar):
        return EulerPoly.from_roots(char_roots(expr, sat))
    roots: List[QSqrt5] = []
    for a, mult in expr.constituents:
        r = atom_roots(a, sat)
        roots.extend(r * mult)
    return EulerPoly.from_roots(roots)


# ---------------------------------------------------------------------------
# samplers
# ---------------------------------------------------------------------------

_HEIGHTS = [QSqrt5.of(n) for n in (-3, -2, -1, 1, 2, 3)] + [
    QSqrt5.of(Rational(1, 2), Rational(1, 2)),   # phi
    QSqrt5.of(Rational(1, 2), Rational(-1, 2)),  # galois_conj(phi)
    QSqrt5.of(Rational(-1, 2), Rational(1, 2)),
    QSqrt5.of(0, 1),
    QSqrt5.of(0, -1),
    QSqrt5.of(1, 1),
    QSqrt5.of(2, -1),
    QSqrt5.of(Rational(1, 2)),
    QSqrt5.of(Rational(-3, 2)),
]


def sample_value(rng: random.Random) -> QSqrt5:
    return rng.choice(_HEIGHTS)


def sample_assignment(rng: random.Random, family: str) -> SatakeAssignment:
    """Draw exact Satake parameters compatible with an identity's hypotheses.

    free:     all four GL(2) parameters independent
    central:  alpha2 free, beta2 forced so that alpha*beta = alpha2*beta2
    sym4:     (alpha2, beta2) = +-(alpha, beta) — matches sym^4 parameters
    diagonal: (alpha2, beta2) = (alpha, beta) — matches all sym powers
    icosa:    diagonal and beta = +-alpha — the degenerate locus where
              sym^5 parameters coincide with those of pi x sym^2(pi') x w
    """
    a, b = sample_value(rng), sample_value(rng)
    if family == "free":
        a2, b2 = sample_value(rng), sample_value(rng)
    elif family == "central":
        a2 = sample_value(rng)
        b2 = a * b * a2.inverse()
    elif family == "sym4":
        s = rng.choice((ONE, -ONE))
        a2, b2 = s * a, s * b
    elif family == "diagonal":
        a2, b2 = a, b
    elif family == "icosa":
        b = rng.choice((ONE, -ONE)) * a
        a2, b2 = a, b
    else:
        raise ValueError(f"unknown sampler family {family!r}")
    chars = {g: sample_value(rng) for g in ("mu", "nu", "chi")}
    return SatakeAssignment.make(a, b, a2, b2, **chars)


def verify_local_identity(
    identity_id: str,
    sat: SatakeAssignment = None,
    seed: int = 0,
    samples: int = 25,
) -> bool:
    """Check one numbered identity as an exact Euler-polynomial equality.

    With an explicit assignment, checks that single point; otherwise draws
    `samples` seeded assignments from the identity's documented family.
    """
    from .identities import local_identity  # late import: table lives there

    family, lhs, rhs = local_identity(identity_id)

    def sides_equal(s: SatakeAssignment) -> bool:
        left = EulerPoly.one()
        for item in lhs:
            left = left * _eval_side(item, s)
        right = EulerPoly.one()
        for item in rhs:
            right = right * _eval_side(item, s)
        return left == right

    if sat is not None:
        return sides_equal(sat)
    rng = random.Random(seed)
    return all(sides_equal(sample_assignment(rng, family)) for _ in range(samples))


def _eval_side(item, sat: SatakeAssignment) -> EulerPoly:
    if isinstance(item, tuple) and item and item[0] == "char":
        _, vc, base = item
        return EulerPoly.from_roots(char_roots(vc, sat, base))
    return local_factor(item, sat)
