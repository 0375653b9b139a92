"""Exact scalar arithmetic: rationals and prime fields.

Every value in this package is a scalar from one of two field types:

* ``RationalField`` -- arbitrary-precision rationals backed by
  ``fractions.Fraction`` (always reduced, positive denominator);
* ``PrimeField(p)`` -- integers mod a prime ``p``, stored as residues
  in ``[0, p)``.

No floating point is accepted anywhere: equality of scalars must be
decidable and exact, because axiom checking is equation testing.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FieldError, FieldMismatchError, ScalarParseError

_RATIONAL_LITERAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field of exact rationals. Scalars are ``Fraction`` values."""

    name = "rational"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        """Turn an int, Fraction or exact literal string into a scalar."""
        if isinstance(value, bool):
            raise ScalarParseError(f"not a rational scalar: {value!r}")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            text = value.strip()
            if not _RATIONAL_LITERAL.match(text):
                raise ScalarParseError(f"bad rational literal {value!r}; "
                                       "use an integer or p/q")
            try:
                return Fraction(text)
            except ZeroDivisionError as exc:
                raise ScalarParseError(f"bad rational literal {value!r}") from exc
        if isinstance(value, float):
            raise ScalarParseError("floating point scalars are not allowed")
        raise ScalarParseError(f"not a rational scalar: {value!r}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return a * self.inv(b)

    def format(self, a) -> str:
        return str(a)


class PrimeField:
    """The field of integers modulo a prime. Scalars are ints in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"modulus must be prime, got {p!r}")
        self.p = p
        self.name = f"gf:{p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def coerce(self, value):
        if isinstance(value, bool):
            raise ScalarParseError(f"not a residue: {value!r}")
        if isinstance(value, str):
            try:
                value = int(value.strip())
            except ValueError as exc:
                raise ScalarParseError(f"bad residue literal {value!r}") from exc
        if isinstance(value, Fraction):
            if value.denominator != 1:
                return self.div(value.numerator % self.p,
                                value.denominator % self.p)
            value = value.numerator
        if isinstance(value, float):
            raise ScalarParseError("floating point scalars are not allowed")
        if not isinstance(value, int):
            raise ScalarParseError(f"not a residue: {value!r}")
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def format(self, a) -> str:
        return str(a % self.p)


QQ = RationalField()


def parse_field(descriptor: str):
    """Map a field descriptor (``"rational"`` or ``"gf:p"``) to a field."""
    if descriptor == "rational":
        return QQ
    if descriptor.startswith("gf:"):
        try:
            p = int(descriptor[3:])
        except ValueError as exc:
            raise FieldError(f"bad field descriptor {descriptor!r}") from exc
        return PrimeField(p)
    raise FieldError(f"bad field descriptor {descriptor!r}")


def require_same_field(*fields):
    """Raise FieldMismatchError unless all arguments are one field."""
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatchError(f"mixed field modes: {first.name} vs {f.name}")
    return first
