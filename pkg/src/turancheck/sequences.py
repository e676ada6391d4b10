"""Exact sequence and polynomial sources.

Generators for the sequences the checks operate on (partition numbers,
binomial rows, geometric log-concave families, Hermite/Laguerre coefficient
arrays), the two coefficient normalizations used by the real-rootedness
checks, and exact CSV ingestion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .exact import (
    DomainError,
    PreconditionError,
    RationalLike,
    as_rational,
    parse_rational,
)

__all__ = [
    "ParseError",
    "PolynomialCoeffs",
    "SequenceWindow",
    "gen_binomial_row",
    "gen_geometric_logconcave",
    "gen_hermite",
    "gen_laguerre",
    "gen_partition",
    "load_csv",
    "normalize_binomial",
    "normalize_factorial",
    "partition_values",
]


class ParseError(ValueError):
    """A sequence file could not be parsed; the message names the line."""


@dataclass(frozen=True)
class SequenceWindow:
    """A named finite window of exact terms with an absolute start index.

    The term stored at position ``i`` represents ``a_{start_index + i}``.
    All index arguments on this class and throughout the checks are absolute.
    """

    name: str
    start_index: int
    terms: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(as_rational(t) for t in self.terms))
        if not self.terms:
            raise PreconditionError("sequence window must be nonempty")
        if self.start_index < 0:
            raise PreconditionError("start index must be nonnegative")

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def end_index(self) -> int:
        """Absolute index of the last term (inclusive)."""
        return self.start_index + len(self.terms) - 1

    def has_index(self, k: int) -> bool:
        return self.start_index <= k <= self.end_index

    def term(self, k: int) -> Fraction:
        """Term at absolute index `k`."""
        if not self.has_index(k):
            raise IndexError(f"index {k} outside window [{self.start_index}, {self.end_index}]")
        return self.terms[k - self.start_index]

    def scaled(self, factor: RationalLike) -> "SequenceWindow":
        f = as_rational(factor)
        return SequenceWindow(self.name, self.start_index, tuple(t * f for t in self.terms))


@dataclass(frozen=True)
class PolynomialCoeffs:
    """Dense polynomial coefficients in ascending degree order.

    The leading coefficient must be nonzero except for the constant zero
    polynomial ``[0]``, which is constructible so that certification can
    reject it explicitly.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in self.coeffs))
        if not self.coeffs:
            raise PreconditionError("polynomial must have at least one coefficient")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise PreconditionError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def evaluate(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


# Process-wide partition memo; append-only, shared by every scan.
_PARTITION_MEMO: list[int] = [1]


def partition_values(n_max: int) -> list[int]:
    """p(0..n_max) as plain ints via the pentagonal-number recurrence."""
    if n_max < 0:
        raise PreconditionError("n_max must be nonnegative")
    memo = _PARTITION_MEMO
    for n in range(len(memo), n_max + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 == 1 else -1
            total += sign * memo[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                total += sign * memo[n - g2]
            j += 1
        memo.append(total)
    return memo[: n_max + 1]


def gen_partition(n_max: int) -> SequenceWindow:
    """Window p(0), ..., p(n_max) of partition numbers."""
    values = partition_values(n_max)
    return SequenceWindow("partition", 0, tuple(Fraction(v) for v in values))


def gen_binomial_row(n: int) -> SequenceWindow:
    """Row C(n,0), ..., C(n,n) of binomial coefficients."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    return SequenceWindow(
        f"binomial[{n}]", 0, tuple(Fraction(math.comb(n, k)) for k in range(n + 1))
    )


def gen_geometric_logconcave(r: RationalLike, length: int) -> SequenceWindow:
    """Terms ``a_k = r**(-k*(k-1)/2)``: a_k**2 = r * a_{k-1} * a_{k+1} exactly."""
    r = as_rational(r)
    if r <= 0:
        raise DomainError("r must be positive")
    if length < 1:
        raise PreconditionError("length must be at least 1")
    terms = tuple(r ** (-(k * (k - 1) // 2)) for k in range(length))
    return SequenceWindow(f"geometric[r={r}]", 0, terms)


def gen_hermite(n: int) -> PolynomialCoeffs:
    """Hermite polynomial coefficients via H_{n+1} = 2x*H_n - 2n*H_{n-1}."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    prev = [Fraction(1)]
    if n == 0:
        return PolynomialCoeffs(tuple(prev))
    curr = [Fraction(0), Fraction(2)]
    for m in range(1, n):
        nxt = [Fraction(0)] + [2 * c for c in curr]
        for i, c in enumerate(prev):
            nxt[i] -= 2 * m * c
        prev, curr = curr, nxt
    return PolynomialCoeffs(tuple(curr))


def gen_laguerre(n: int) -> PolynomialCoeffs:
    """Laguerre coefficients via (n+1)L_{n+1} = (2n+1-x)L_n - n*L_{n-1}."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    prev = [Fraction(1)]
    if n == 0:
        return PolynomialCoeffs(tuple(prev))
    curr = [Fraction(1), Fraction(-1)]
    for m in range(1, n):
        nxt = [(2 * m + 1) * c for c in curr] + [Fraction(0)]
        for i, c in enumerate(curr):
            nxt[i + 1] -= c
        for i, c in enumerate(prev):
            nxt[i] -= m * c
        prev, curr = curr, [c / (m + 1) for c in nxt]
    return PolynomialCoeffs(tuple(curr))


def normalize_binomial(p: PolynomialCoeffs) -> SequenceWindow:
    """Sequence a_k = c_k / C(n,k) from coefficients c_k of a degree-n polynomial."""
    n = p.degree
    terms = tuple(c / math.comb(n, k) for k, c in enumerate(p.coeffs))
    return SequenceWindow("binomial-normalized", 0, terms)


def normalize_factorial(p: PolynomialCoeffs) -> SequenceWindow:
    """Sequence a_k = c_k * k! * (n-k)!; equals n! times `normalize_binomial`.

    Every scale-invariant check therefore agrees between the two
    normalizations.
    """
    n = p.degree
    terms = tuple(
        c * math.factorial(k) * math.factorial(n - k) for k, c in enumerate(p.coeffs)
    )
    return SequenceWindow("factorial-normalized", 0, terms)


def load_csv(path: str | Path) -> SequenceWindow:
    """Read a sequence window from a CSV file of exact values.

    Accepted layout: an optional header line, then one term per row, either
    ``index,value`` (indices must be consecutive) or a bare ``value`` column
    (indices implicitly 0, 1, ...).  Values may be integers, ``p/q``
    fractions, or finite decimals; all are converted exactly.
    """
    path = Path(path)
    lines = path.read_text().splitlines()
    rows: list[tuple[int, list[str]]] = [
        (lineno, [cell.strip() for cell in line.split(",")])
        for lineno, line in enumerate(lines, start=1)
        if line.strip()
    ]
    if not rows:
        raise ParseError(f"{path}: file contains no data")

    def parse_cell(text: str, lineno: int) -> Fraction:
        try:
            return parse_rational(text)
        except DomainError as exc:
            raise ParseError(f"{path}: line {lineno}: {exc}") from exc

    # A first row that does not parse is a header.
    first_lineno, first_cells = rows[0]
    try:
        for cell in first_cells:
            parse_rational(cell)
    except DomainError:
        rows = rows[1:]
        if not rows:
            raise ParseError(f"{path}: header but no data rows")

    width = len(rows[0][1])
    if width not in (1, 2):
        raise ParseError(f"{path}: line {rows[0][0]}: expected 1 or 2 columns, got {width}")

    terms: list[Fraction] = []
    start_index = 0
    for position, (lineno, cells) in enumerate(rows):
        if len(cells) != width:
            raise ParseError(f"{path}: line {lineno}: inconsistent column count")
        if width == 2:
            index_value = parse_cell(cells[0], lineno)
            if index_value.denominator != 1:
                raise ParseError(f"{path}: line {lineno}: index must be an integer")
            index = int(index_value)
            if position == 0:
                start_index = index
            elif index != start_index + position:
                raise ParseError(
                    f"{path}: line {lineno}: index {index} breaks the consecutive run"
                )
        terms.append(parse_cell(cells[-1], lineno))
    return SequenceWindow(path.stem, start_index, tuple(terms))
