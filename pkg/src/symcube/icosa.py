"""The binary icosahedral group, exactly, over Q(sqrt5).

The 120 icosians are unit quaternions with coordinates in Z[phi]/2; the
two-dimensional representation rho is the identity embedding into SU(2), so
its character is twice the real part.  All character arithmetic is exact,
and the Galois conjugate representation rho* is obtained by applying
sqrt5 -> -sqrt5 to character values.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .arith import ONE, PHI, QSqrt5, Rational, ZERO, as_rational, galois_conj

HALF = QSqrt5.of(Rational(1, 2))
PHI_INV = PHI - ONE  # 1/phi = phi - 1


class IcosaError(ValueError):
    pass


@dataclass(frozen=True)
class Quaternion:
    a: QSqrt5
    b: QSqrt5
    c: QSqrt5
    d: QSqrt5

    def __mul__(self, o: "Quaternion") -> "Quaternion":
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = o.a, o.b, o.c, o.d
        return Quaternion(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> QSqrt5:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == ZERO:
            raise ZeroDivisionError("zero quaternion")
        ni = n.inverse()
        c = self.conjugate()
        return Quaternion(c.a * ni, c.b * ni, c.c * ni, c.d * ni)

    def galois(self) -> "Quaternion":
        return Quaternion(
            galois_conj(self.a), galois_conj(self.b),
            galois_conj(self.c), galois_conj(self.d),
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a, -self.b, -self.c, -self.d)


IDENTITY = Quaternion(ONE, ZERO, ZERO, ZERO)


def _sign_options(v: QSqrt5):
    return (v,) if v == ZERO else (v, -v)


def _even_permutations():
    for p in itertools.permutations(range(4)):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
        if inv % 2 == 0:
            yield p


def _icosian_elements() -> Tuple[Quaternion, ...]:
    out = set()
    for i in range(4):
        for s in (ONE, -ONE):
            coords = [ZERO] * 4
            coords[i] = s
            out.add(Quaternion(*coords))
    for signs in itertools.product((HALF, -HALF), repeat=4):
        out.add(Quaternion(*signs))
    base = (ZERO, ONE * HALF, PHI_INV * HALF, PHI * HALF)
    for p in _even_permutations():
        permuted = tuple(base[p.index(i)] for i in range(4))
        for coords in itertools.product(*(_sign_options(v) for v in permuted)):
            out.add(Quaternion(*coords))
    return tuple(sorted(out, key=lambda q: (q.a.key(), q.b.key(), q.c.key(), q.d.key())))


@dataclass(frozen=True)
class IcosianGroup:
    elements: Tuple[Quaternion, ...]
    mul: Tuple[Tuple[int, ...], ...]  # index multiplication table
    inv: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]  # canonical order, element indices
    class_of: Tuple[int, ...]
    orders: Tuple[int, ...]  # element order per class
    sizes: Tuple[int, ...]
    identity_class: int
    inverse_class: Tuple[int, ...]
    square_class: Tuple[int, ...]


def _orders_from_table(G_mul, identity: int) -> Dict[int, int]:
    out = {}
    for i in range(len(G_mul)):
        x, n = i, 1
        while x != identity:
            x = G_mul[x][i]
            n += 1
            if n > 240:
                raise IcosaError("element order overflow")
        out[i] = n
    return out


@lru_cache(maxsize=1)
def group() -> IcosianGroup:
    elems = _icosian_elements()
    if len(elems) != 120:
        raise IcosaError(f"expected 120 icosians, built {len(elems)}")
    index = {g: i for i, g in enumerate(elems)}
    ident = index[IDENTITY]
    # the full table doubles as the closure check; units invert by conjugation
    mul: List[Tuple[int, ...]] = []
    for g in elems:
        if g.norm() != ONE:
            raise IcosaError(f"non-unit icosian {g}")
        row = []
        for h in elems:
            k = index.get(g * h)
            if k is None:
                raise IcosaError("not closed under multiplication")
            row.append(k)
        mul.append(tuple(row))
    inv = []
    for i, g in enumerate(elems):
        j = index.get(g.conjugate())
        if j is None or mul[i][j] != ident:
            raise IcosaError("not closed under inversion")
        inv.append(j)

    seen = set()
    raw: List[Tuple[int, ...]] = []
    for i in range(len(elems)):
        if i in seen:
            continue
        orbit = {mul[mul[h][i]][inv[h]] for h in range(len(elems))}
        seen |= orbit
        raw.append(tuple(sorted(orbit)))
    orders = _orders_from_table(mul, ident)

    # canonical order: by element order, then size, then 2*Re of the
    # representative (largest first, so the phi-class precedes its conjugate)
    def class_key(cl):
        rep = elems[cl[0]]
        tr = rep.a + rep.a
        return (orders[cl[0]], len(cl), tuple(-x for x in tr.key()))

    classes = tuple(sorted(raw, key=class_key))
    class_of = [0] * len(elems)
    for ci, cl in enumerate(classes):
        for i in cl:
            class_of[i] = ci
    return IcosianGroup(
        elements=elems,
        mul=tuple(mul),
        inv=tuple(inv),
        classes=classes,
        class_of=tuple(class_of),
        orders=tuple(orders[cl[0]] for cl in classes),
        sizes=tuple(len(cl) for cl in classes),
        identity_class=class_of[ident],
        inverse_class=tuple(class_of[inv[cl[0]]] for cl in classes),
        square_class=tuple(class_of[mul[cl[0]][cl[0]]] for cl in classes),
    )


@dataclass(frozen=True)
class ClassFunction:
    values: Tuple[QSqrt5, ...]

    def __post_init__(self):
        if len(self.values) != len(group().classes):
            raise IcosaError("value list does not match the class count")

    def __getitem__(self, i: int) -> QSqrt5:
        return self.values[i]

    def __mul__(self, o: "ClassFunction") -> "ClassFunction":
        return ClassFunction(tuple(x * y for x, y in zip(self.values, o.values)))

    def __add__(self, o: "ClassFunction") -> "ClassFunction":
        return ClassFunction(tuple(x + y for x, y in zip(self.values, o.values)))

    def __sub__(self, o: "ClassFunction") -> "ClassFunction":
        return ClassFunction(tuple(x - y for x, y in zip(self.values, o.values)))

    def dim(self) -> QSqrt5:
        return self.values[group().identity_class]


def trivial_char() -> ClassFunction:
    return ClassFunction(tuple(ONE for _ in group().classes))


def char_rho() -> ClassFunction:
    """Character of the identity embedding into SU(2): twice the real part."""
    G = group()
    return ClassFunction(
        tuple(G.elements[cl[0]].a + G.elements[cl[0]].a for cl in G.classes)
    )


def inner(f: ClassFunction, g: ClassFunction) -> Rational:
    """(1/|G|) sum |C| f(C) g(C^{-1}); must land in Q."""
    G = group()
    total = ZERO
    for i, size in enumerate(G.sizes):
        total = total + QSqrt5.of(size) * f[i] * g[G.inverse_class[i]]
    total = total * QSqrt5.of(Rational(1, 120))
    try:
        return as_rational(total)
    except Exception:
        raise IcosaError(f"irrational pairing {total}")


def _check_two_dim_det_one(f: ClassFunction) -> None:
    G = group()
    if f.dim() != ONE + ONE:
        raise IcosaError("not a 2-dim det-1 character")
    for i in range(len(G.classes)):
        if f[i] * f[i] - f[G.square_class[i]] != ONE + ONE:
            raise IcosaError("not a 2-dim det-1 character")


def sym_char(f: ClassFunction, m: int) -> ClassFunction:
    """Character of sym^m of a 2-dim det-1 character, by the two-term recursion."""
    _check_two_dim_det_one(f)
    if m < 0:
        raise ValueError("m must be nonnegative")
    prev, cur = trivial_char(), f
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, f * cur - prev
    return cur


def galois_twin(f: ClassFunction) -> ClassFunction:
    """Componentwise sqrt5 -> -sqrt5 conjugate of a character.

    The coordinatized icosian set is not stable under the coefficient
    Galois map (it lands on the odd-permutation companion copy), so the
    twin is validated character-theoretically instead: same dimension,
    unit self-pairing, and the 2-dim det-1 identity when applicable.
    """
    twin = ClassFunction(tuple(galois_conj(v) for v in f.values))
    sigma_set = {g.galois() for g in group().elements}
    if sigma_set != set(group().elements):
        if inner(twin, twin) != inner(f, f) or twin.dim() != f.dim():
            raise IcosaError("galois twin is not a character")
    return twin


def char_rho_star() -> ClassFunction:
    return galois_twin(char_rho())


def fiber_sym3() -> Tuple[ClassFunction, ...]:
    """The 2-dim det-1 irreducible characters with the same sym^3 as rho.

    The group is perfect (its commutator closure is everything), so its only
    1-dim character is trivial and no twisting is available: the fiber is
    exactly {rho, rho*}, swapped by the Galois map.
    """
    G = group()
    n = len(G.elements)
    mul, inv = G.mul, G.inv
    comm = {mul[mul[mul[g][h]][inv[g]]][inv[h]] for g in range(n) for h in range(n)}
    while True:
        nxt = {mul[x][y] for x in comm for y in comm}
        if nxt <= comm:
            break
        comm |= nxt
    if comm != set(range(n)):
        raise IcosaError("group is not perfect")

    rho, star = char_rho(), char_rho_star()
    target = sym_char(rho, 3)
    fiber = []
    for cand in (rho, star):
        if inner(cand, cand) != 1:
            raise IcosaError("candidate is not irreducible")
        if sym_char(cand, 3) == target:
            fiber.append(cand)
    if len(fiber) != 2 or galois_twin(fiber[0]) != fiber[1]:
        raise IcosaError("sym^3 fiber is not the Galois pair")
    return tuple(fiber)


# ---------------------------------------------------------------------------
# verification suite and table
# ---------------------------------------------------------------------------


def verify_suite() -> List[Tuple[str, bool, str]]:
    """Named exact checks on the group and its symmetric-power characters."""
    G = group()
    rho, star = char_rho(), char_rho_star()
    out: List[Tuple[str, bool, str]] = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        out.append((name, ok, detail))

    check("order 120", len(G.elements) == 120, f"built {len(G.elements)} icosians")
    check(
        "class sizes",
        sorted(G.sizes) == [1, 1, 12, 12, 12, 12, 20, 20, 30],
        f"sizes {list(G.sizes)} for orders {list(G.orders)}",
    )
    for m in range(6):
        check(
            f"sym^{m}(rho) irreducible",
            inner(sym_char(rho, m), sym_char(rho, m)) == 1,
            f"dimension {m + 1}",
        )
    check(
        "sym^3(rho) = sym^3(rho*)",
        sym_char(rho, 3) == sym_char(star, 3),
        "the cube does not separate the Galois pair",
    )
    check(
        "sym^5(rho) = rho x sym^2(rho*)",
        sym_char(rho, 5) == rho * sym_char(star, 2),
        "degree 6",
    )
    check(
        "sym^5(rho) = rho* x sym^2(rho)",
        sym_char(rho, 5) == star * sym_char(rho, 2),
        "degree 6, the mirror form",
    )
    check(
        "sym^6(rho) = rho x rho* + sym^2(rho*)",
        sym_char(rho, 6) == rho * star + sym_char(star, 2),
        "degree 7",
    )
    check(
        "sym^7(rho) = sym^2(rho) x rho* + rho*",
        sym_char(rho, 7) == sym_char(rho, 2) * star + star,
        "degree 8",
    )
    check(
        "negative control: sym^6(rho) != rho x rho + sym^2(rho)",
        sym_char(rho, 6) != rho * rho + sym_char(rho, 2),
        "the non-conjugate pairing must fail",
    )

    ten = [i for i, o in enumerate(G.orders) if o == 10]
    i10 = next(i for i in ten if rho[i] == PHI)
    expected = {2: PHI, 3: ONE, 4: ZERO, 5: -ONE, 6: -PHI}
    ok = all(sym_char(rho, m)[i10] == v for m, v in expected.items())
    check(
        "order-10 class ladder",
        ok,
        "sym^m values phi, 1, 0, -1, -phi for m = 2..6",
    )
    return out


def table() -> List[dict]:
    """One row per conjugacy class: order, size, and character values."""
    G = group()
    rho, star = char_rho(), char_rho_star()
    rows = []
    for i in range(len(G.classes)):
        row = {
            "order": G.orders[i],
            "size": G.sizes[i],
            "rho": str(rho[i]),
            "rho*": str(star[i]),
        }
        for m in range(2, 8):
            row[f"sym^{m}"] = str(sym_char(rho, m)[i])
        rows.append(row)
    return rows
