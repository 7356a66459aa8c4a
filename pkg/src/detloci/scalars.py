"""Exact scalar domains: the rationals and odd prime fields.

Every algebraic object in this library carries a reference to one of these
domain objects and routes all coefficient arithmetic through it.  Rational
values are `fractions.Fraction` (always lowest terms, positive denominator);
prime-field elements are plain ints reduced to the canonical representative
in [0, p).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

DEFAULT_PRIME = 101

Element = Union[Fraction, int]


def is_prime(n: int) -> bool:
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


def fraction_str(x: Fraction) -> str:
    """Canonical "num/den" form used in JSON output."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


class RationalField:
    """The field of rational numbers, elements are `Fraction`."""

    char = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, value) -> Fraction:
        return Fraction(value)

    def parse(self, text: str) -> Fraction:
        return parse_fraction(text)

    def show(self, x: Fraction) -> str:
        return fraction_str(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by 0")
        return Fraction(a) / Fraction(b)

    def pow(self, a, e: int):
        return Fraction(a) ** e

    def is_zero(self, a) -> bool:
        return a == 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field F_p for an odd prime p; elements are ints in [0, p)."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if not is_prime(p) or p == 2:
            raise ValueError(f"prime field modulus must be an odd prime, got {p}")
        self.p = p
        self.char = p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def of(self, value) -> int:
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def parse(self, text: str) -> int:
        return self.of(Fraction(text.strip()))

    def show(self, x: int) -> str:
        return str(x % self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, e: int):
        return pow(a, e, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


Domain = Union[RationalField, PrimeField]

QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)
