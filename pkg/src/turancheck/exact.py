"""Exact scalar arithmetic: arbitrary-precision rationals and quadratic surds.

Every verdict in this package reduces to comparisons performed here.  The
universal scalar is ``fractions.Fraction`` (re-exported as ``Rational``);
values of the form ``alpha + beta*sqrt(d)`` are held exactly by `SurdValue`
and ordered against rationals with no rounding anywhere.  Floating point and
``Decimal`` appear only in diagnostic output, never on a verdict path.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Union

__all__ = [
    "DomainError",
    "Ordering",
    "PreconditionError",
    "Rational",
    "RationalLike",
    "SurdValue",
    "as_rational",
    "compare_rational_to_surd",
    "format_rational",
    "parse_rational",
    "rational_sqrt",
    "surd_bound_pair",
]

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class DomainError(ValueError):
    """Input lies outside an operation's mathematical domain."""


class PreconditionError(ValueError):
    """A structural precondition was violated (window shape, degree, depth)."""


class Ordering(enum.Enum):
    """Exact three-way comparison result.  There is no 'approximately equal'."""

    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of_sign(cls, value: Fraction) -> "Ordering":
        """Ordering of `value` against zero."""
        if value > 0:
            return cls.GREATER
        if value < 0:
            return cls.LESS
        return cls.EQUAL

    def flipped(self) -> "Ordering":
        return Ordering(-self.value)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions, and exact literal strings to `Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``'p/q'``, an integer, or a finite decimal, exactly.

    Decimals are converted digit-for-digit (``'0.1'`` becomes 1/10); there is
    no intermediate binary float.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational literal: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Canonical text form: ``'p/q'``, or just ``'p'`` for integers."""
    return str(q)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of `q` if one exists in the rationals, else None."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True, eq=False)
class SurdValue:
    """The exact value ``alpha + beta*sqrt(radicand)`` with rational parts.

    The radicand is kept as an arbitrary nonnegative rational; comparisons
    never require reduction to a squarefree integer, so no factoring happens.
    Equality is equality of the represented value, not of the representation:
    ``1 + (3/2)*sqrt(5)`` equals ``1 + (9/2)*sqrt(5/9)``.
    """

    alpha: Fraction
    beta: Fraction
    radicand: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        object.__setattr__(self, "radicand", as_rational(self.radicand))
        if self.radicand < 0:
            raise DomainError(f"negative radicand: {self.radicand}")

    def _value_key(self) -> tuple[Fraction, Fraction, int]:
        # (rational part, beta^2 * d, sign of surd part) determines the value.
        root = rational_sqrt(self.radicand)
        if root is not None:
            return (self.alpha + self.beta * root, Fraction(0), 0)
        if self.beta == 0:
            return (self.alpha, Fraction(0), 0)
        sign = 1 if self.beta > 0 else -1
        return (self.alpha, self.beta * self.beta * self.radicand, sign)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SurdValue):
            return NotImplemented
        return self._value_key() == other._value_key()

    def __hash__(self) -> int:
        return hash(self._value_key())

    def is_rational(self) -> bool:
        return self._value_key()[2] == 0

    def as_rational(self) -> Fraction:
        key = self._value_key()
        if key[2] != 0:
            raise DomainError(f"{self} is irrational")
        return key[0]

    def scaled(self, factor: RationalLike) -> "SurdValue":
        f = as_rational(factor)
        return SurdValue(self.alpha * f, self.beta * f, self.radicand)

    def __str__(self) -> str:
        if self.beta < 0:
            return f"{self.alpha}-{-self.beta}*sqrt({self.radicand})"
        return f"{self.alpha}+{self.beta}*sqrt({self.radicand})"

    def to_decimal(self, digits: int = 50) -> Decimal:
        """Decimal approximation for diagnostics; never used in verdicts."""
        with localcontext() as ctx:
            ctx.prec = digits + 10
            alpha = Decimal(self.alpha.numerator) / Decimal(self.alpha.denominator)
            beta = Decimal(self.beta.numerator) / Decimal(self.beta.denominator)
            rad = Decimal(self.radicand.numerator) / Decimal(self.radicand.denominator)
            value = alpha + beta * rad.sqrt()
            ctx.prec = digits
            return +value


def compare_rational_to_surd(q: RationalLike, s: SurdValue) -> Ordering:
    """Exact ordering of the rational `q` against ``alpha + beta*sqrt(d)``.

    Isolates ``t = q - alpha`` against ``beta*sqrt(d)``; decides by sign when
    the signs differ, otherwise by comparing ``t**2`` with ``beta**2 * d``
    (orientation flipped when both sides are negative).
    """
    t = as_rational(q) - s.alpha
    if s.beta == 0 or s.radicand == 0:
        return Ordering.of_sign(t)
    surd_sign = 1 if s.beta > 0 else -1
    t_sign = 1 if t > 0 else (-1 if t < 0 else 0)
    if t_sign != surd_sign:
        return Ordering.LESS if t_sign < surd_sign else Ordering.GREATER
    left_sq = t * t
    right_sq = s.beta * s.beta * s.radicand
    if left_sq == right_sq:
        return Ordering.EQUAL
    if (left_sq > right_sq) == (t_sign > 0):
        return Ordering.GREATER
    return Ordering.LESS


def compare_surds_shared_radicand(a: SurdValue, b: SurdValue) -> Ordering:
    """Exact ordering of two surds over the same radicand."""
    if a.radicand != b.radicand:
        raise DomainError("surds do not share a radicand")
    # a ? b  <=>  (a.alpha - b.alpha) ? (b.beta - a.beta) * sqrt(d)
    return compare_rational_to_surd(
        a.alpha - b.alpha, SurdValue(Fraction(0), b.beta - a.beta, a.radicand)
    )


def surd_bound_pair(
    ratio_sq: RationalLike, c: RationalLike
) -> tuple[SurdValue, SurdValue]:
    """Exact pair ``ratio_sq * (1 -+ sqrt(1-c))**2`` as (lower, upper) surds.

    Uses the identity ``(1 -+ sqrt(1-c))**2 = (2-c) -+ 2*sqrt(1-c)``, so both
    bounds share the radicand ``1-c``.  Requires ``c <= 1`` (real bounds) and
    ``ratio_sq > 0``; lower <= upper always, with equality exactly at c = 1.
    """
    ratio_sq = as_rational(ratio_sq)
    c = as_rational(c)
    if c > 1:
        raise DomainError(f"bound is imaginary for c = {c} > 1")
    if ratio_sq <= 0:
        raise DomainError(f"ratio_sq must be positive, got {ratio_sq}")
    alpha = ratio_sq * (2 - c)
    spread = 2 * ratio_sq
    radicand = 1 - c
    return (
        SurdValue(alpha, -spread, radicand),
        SurdValue(alpha, spread, radicand),
    )
