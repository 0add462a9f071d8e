"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Rational arithmetic is delegated to :class:`fractions.Fraction`, which keeps
values in lowest terms with positive denominator.  Prime-field residues are
plain ints in ``[0, p)``.  Field objects are immutable and hashable; all
operations are pure functions.
"""

from __future__ import annotations

from fractions import Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field of rational numbers; elements are Fraction values."""

    kind = "Q"
    modulus = None

    zero = Fraction(0)
    one = Fraction(1)

    def element(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

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
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return Fraction(a) / b

    def pow(self, a, e: int):
        return Fraction(a) ** e

    def parse(self, text: str) -> Fraction:
        text = text.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {text!r}") from exc

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field of integers modulo a prime p; elements are ints in [0, p)."""

    kind = "GF"

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"prime field modulus must be prime, got {p!r}")
        self.modulus = p
        self.zero = 0
        self.one = 1 % p

    def element(self, value) -> int:
        if isinstance(value, int):
            return value % self.modulus
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return value.numerator % self.modulus
            return self.div(value.numerator % self.modulus,
                            value.denominator % self.modulus)
        raise TypeError(f"cannot coerce {value!r} into GF({self.modulus})")

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def inv(self, a):
        if a % self.modulus == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.modulus})")
        return pow(a, -1, self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        return pow(a, e, self.modulus)

    def parse(self, text: str) -> int:
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            return self.div(self.parse(num), self.parse(den))
        try:
            return int(text) % self.modulus
        except ValueError as exc:
            raise ValueError(f"bad residue literal {text!r}") from exc

    def format(self, a) -> str:
        return str(a % self.modulus)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))

    def __repr__(self):
        return f"GF({self.modulus})"


Field = Rationals | PrimeField

QQ = Rationals()


def parse_field(text: str) -> Field:
    """Parse a field name: 'Q' or 'GF(p)'."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("GF(") and text.endswith(")"):
        body = text[3:-1].strip()
        if not body.isdigit():
            raise ValueError(f"bad field modulus in {text!r}")
        return PrimeField(int(body))
    raise ValueError(f"unknown field {text!r} (expected Q or GF(p))")


def format_field(field: Field) -> str:
    return repr(field)
