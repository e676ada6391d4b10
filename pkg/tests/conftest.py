"""Shared generators and oracles for the test suite."""

from __future__ import annotations

import random
from decimal import Decimal, localcontext
from fractions import Fraction

from turancheck.exact import SurdValue
from turancheck.sequences import SequenceWindow


def rational_to_decimal(q: Fraction, digits: int = 60) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(q.numerator) / Decimal(q.denominator)


def surd_to_decimal(s: SurdValue, digits: int = 60) -> Decimal:
    """Independent decimal evaluation used as the comparison oracle."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        alpha = Decimal(s.alpha.numerator) / Decimal(s.alpha.denominator)
        beta = Decimal(s.beta.numerator) / Decimal(s.beta.denominator)
        rad = Decimal(s.radicand.numerator) / Decimal(s.radicand.denominator)
        return alpha + beta * rad.sqrt()


def random_rational(
    rng: random.Random, max_num: int = 1000, max_den: int = 50, signed: bool = False
) -> Fraction:
    value = Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
    if signed and rng.random() < 0.5:
        value = -value
    return value


def strict_logconcave_quadruple(
    rng: random.Random,
) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Positive (a0, a1, a2, a3) with a1**2 > a0 a2 and a2**2 > a1 a3."""
    a0 = random_rational(rng)
    a1 = random_rational(rng)
    a2 = a1 * a1 / a0 * Fraction(rng.randint(1, 99), 100)
    a3 = a2 * a2 / a1 * Fraction(rng.randint(1, 99), 100)
    return (a0, a1, a2, a3)


def logconcave_window(
    rng: random.Random, length: int, *, strong: bool = False, name: str = "random"
) -> SequenceWindow:
    """Positive log-concave window built from a nonincreasing ratio sequence.

    With `strong` every consecutive ratio drops by a factor of at least 2,
    which forces the neighbor-ratio bounds to hold at every interior index.
    """
    ratio = Fraction(rng.randint(50, 400), rng.randint(1, 50))
    ratios = []
    for _ in range(length - 1):
        ratios.append(ratio)
        if strong:
            shrink = Fraction(rng.randint(200, 300), 100)
        else:
            shrink = Fraction(rng.randint(100, 130), 100)
        ratio = ratio / shrink
    terms = [random_rational(rng, 50, 5)]
    for r in ratios:
        terms.append(terms[-1] * r)
    return SequenceWindow(name, 0, tuple(terms))


def mixed_sign_window(rng: random.Random, length: int) -> SequenceWindow:
    terms = tuple(random_rational(rng, 60, 12, signed=True) for _ in range(length))
    return SequenceWindow("mixed", 0, terms)


def poly_from_roots(roots: list[Fraction], lead: Fraction = Fraction(1)) -> list[Fraction]:
    """Ascending coefficients of lead * prod (x - r)."""
    coeffs = [lead]
    for r in roots:
        coeffs = [Fraction(0)] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= r * coeffs[i + 1]
    return coeffs
