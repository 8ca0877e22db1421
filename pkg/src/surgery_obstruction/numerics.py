"""Exact rationals and residues mod 3.

``Rational`` is :class:`fractions.Fraction`; it is already stored in lowest
terms with a positive denominator, so equality is field equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DenominatorNotInvertible, ZeroDenominator

Rational = Fraction


def make_rational(n: int, d: int = 1) -> Rational:
    if d == 0:
        raise ZeroDenominator(f"zero denominator in {n}/{d}")
    return Fraction(int(n), int(d))


def as_rational(x) -> Rational:
    """Coerce an int, Fraction or "n/d" string to a Rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot treat {x!r} as an exact rational")


def format_rational(r: Rational | int) -> str:
    """Serialize as "n/d" in lowest terms, sign on the numerator ("28/1")."""
    r = as_rational(r)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Rational:
    num, sep, den = text.strip().partition("/")
    try:
        return make_rational(int(num), int(den) if sep else 1)
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None


def is_integer(r: Rational | int) -> bool:
    return as_rational(r).denominator == 1


@dataclass(frozen=True, slots=True)
class Mod3Residue:
    value: int

    def __post_init__(self):
        if self.value not in (0, 1, 2):
            raise ValueError(f"residue out of range: {self.value}")

    @classmethod
    def of(cls, n: int) -> Mod3Residue:
        return cls(n % 3)

    def __add__(self, other: Mod3Residue) -> Mod3Residue:
        return Mod3Residue.of(self.value + other.value)

    def __sub__(self, other: Mod3Residue) -> Mod3Residue:
        return Mod3Residue.of(self.value - other.value)

    def __mul__(self, other: Mod3Residue) -> Mod3Residue:
        return Mod3Residue.of(self.value * other.value)

    def __neg__(self) -> Mod3Residue:
        return Mod3Residue.of(-self.value)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def mod3_residue(r: Rational | int) -> Mod3Residue:
    r = as_rational(r)
    if r.denominator % 3 == 0:
        raise DenominatorNotInvertible(
            f"{format_rational(r)} has a denominator divisible by 3")
    # d^-1 = d mod 3 for d in {1, 2}
    return Mod3Residue.of(r.numerator * r.denominator)
