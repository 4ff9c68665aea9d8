"""Exact coefficient fields: the rationals and prime fields GF(p).

Field elements support ``+ - * /``, equality, and hashing, so the rest of
the library is field-agnostic.  Rational arithmetic is delegated to
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class GFElement:
    """An element of GF(p), reduced mod p."""

    __slots__ = ("field", "val")

    def __init__(self, field: "PrimeField", val: int):
        self.field = field
        self.val = val % field.p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.field.p != self.field.p:
                raise FieldError("mixed prime fields")
            return other
        if isinstance(other, int):
            return GFElement(self.field, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.field, self.val + o.val)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.field, self.val - o.val)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.field, o.val - self.val)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.field, self.val * o.val)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.val == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GFElement(self.field, -self.val)

    def inverse(self) -> "GFElement":
        if self.val == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return GFElement(self.field, pow(self.val, -1, self.field.p))

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.field.p == other.field.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.val))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """GF(p) for a prime p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    @property
    def zero(self):
        return GFElement(self, 0)

    @property
    def one(self):
        return GFElement(self, 1)

    @property
    def characteristic(self) -> int:
        return self.p

    def of(self, x) -> GFElement:
        if isinstance(x, GFElement):
            if x.field.p != self.p:
                raise FieldError("mixed prime fields")
            return x
        if isinstance(x, int):
            return GFElement(self, x)
        if isinstance(x, Fraction):
            return GFElement(self, x.numerator) / GFElement(self, x.denominator)
        if isinstance(x, str):
            return self.of(Fraction(x))
        raise FieldError(f"cannot coerce {x!r} into GF({self.p})")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class Rationals:
    """The field of rational numbers (arbitrary-precision)."""

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    @property
    def characteristic(self) -> int:
        return 0

    def of(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise FieldError(f"cannot coerce {x!r} into Q")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "Q"


QQ = Rationals()


def parse_field(text: str):
    """Parse a field spec: ``"q"`` for the rationals, ``"gf:p"`` for GF(p)."""
    text = text.strip().lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    if text.startswith("gf:"):
        return PrimeField(int(text[3:]))
    raise FieldError(f"unknown field spec {text!r} (expected 'q' or 'gf:p')")
