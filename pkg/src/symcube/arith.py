"""Exact arithmetic kernel: rationals and the real quadratic field Q(sqrt5).

Every value in the system is built from these; no floating point exists
anywhere. Rationals are plain ``fractions.Fraction`` (always reduced, positive
denominator). Q(sqrt5) values are stored on the {1, sqrt5} basis so that the
Galois involution is a sign flip on the second coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class NotRationalError(ArithmeticError):
    """A Q(sqrt5) value with nonzero sqrt5 part was coerced to Q."""

    def __init__(self, value: "QSqrt5"):
        super().__init__(f"not a rational value: {value}")
        self.value = value


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


@dataclass(frozen=True)
class QSqrt5:
    """The field element a + b*sqrt5 with exact rational coordinates."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(a, b=0) -> "QSqrt5":
        return QSqrt5(_frac(a), _frac(b))

    def __post_init__(self):
        if not isinstance(self.a, Fraction) or not isinstance(self.b, Fraction):
            object.__setattr__(self, "a", _frac(self.a))
            object.__setattr__(self, "b", _frac(self.b))

    # -- ring structure -----------------------------------------------------

    def __add__(self, other) -> "QSqrt5":
        other = _coerce(other)
        return QSqrt5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "QSqrt5":
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other) -> "QSqrt5":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "QSqrt5":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "QSqrt5":
        other = _coerce(other)
        return QSqrt5(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QSqrt5":
        n = self.a * self.a - 5 * self.b * self.b  # field norm a^2 - 5 b^2
        if n == 0:
            raise ZeroDivisionError(f"inverse of zero in Q(sqrt5): {self}")
        return QSqrt5(self.a / n, -self.b / n)

    def __truediv__(self, other) -> "QSqrt5":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other) -> "QSqrt5":
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "QSqrt5":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates and views -----------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def conj(self) -> "QSqrt5":
        """Galois conjugate: sqrt5 -> -sqrt5."""
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def key(self):
        """Total-order key, used for canonical orderings elsewhere."""
        return (self.a, self.b)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt5"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*sqrt5"

    def __repr__(self) -> str:
        return f"QSqrt5({self.a!r}, {self.b!r})"


def _coerce(x) -> QSqrt5:
    if isinstance(x, QSqrt5):
        return x
    return QSqrt5(_frac(x), Fraction(0))


ZERO = QSqrt5(Fraction(0), Fraction(0))
ONE = QSqrt5(Fraction(1), Fraction(0))
SQRT5 = QSqrt5(Fraction(0), Fraction(1))
PHI = QSqrt5(Fraction(1, 2), Fraction(1, 2))  # the golden ratio (1+sqrt5)/2


def galois_conj(x: QSqrt5) -> QSqrt5:
    return x.conj()


def as_rational(x: QSqrt5) -> Fraction:
    """Coerce to Q; raises NotRationalError when the sqrt5 part is nonzero."""
    if x.b != 0:
        raise NotRationalError(x)
    return x.a


def qsqrt5_from_string(text: str) -> QSqrt5:
    """Parse 'a/b', 'a/b+c/d*sqrt5', 'c/d*sqrt5' (spaces allowed)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty Q(sqrt5) literal")
    a = Fraction(0)
    b = Fraction(0)
    # split into signed terms
    terms = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-/*":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    for term in terms:
        if "sqrt5" in term:
            coef = term.replace("*sqrt5", "").replace("sqrt5", "")
            if coef in ("", "+"):
                coef = "1"
            elif coef == "-":
                coef = "-1"
            b += Fraction(coef)
        else:
            a += Fraction(term)
    return QSqrt5(a, b)
