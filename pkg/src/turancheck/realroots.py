"""Real-rootedness certificates via exact Sturm chains.

Certification counts distinct real roots of the squarefree part by sign
variations at -infinity and +infinity (read off leading coefficients, no
finite bounds chosen), with an extra variation count at 0 to decide whether
every root is nonpositive.  Chains are built over integers using primitive
pseudo-remainder sequences: each element is a positive rational multiple of
the classical Sturm chain element, which leaves every sign variation intact
while keeping coefficient growth under control.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .checks import (
    CheckRecord,
    CheckReport,
    CheckStatus,
    higher_turan_check,
    l_operator,
)
from .exact import DomainError, PreconditionError
from .sequences import PolynomialCoeffs, SequenceWindow, normalize_factorial

__all__ = [
    "HypothesisError",
    "RootCertificate",
    "SturmChain",
    "branden_check",
    "certify",
    "marik_check",
    "sturm_chain",
]

DEFAULT_DEGREE_CAP = 64


class HypothesisError(PreconditionError):
    """A check's root-structure hypothesis failed; carries the certificate."""

    def __init__(self, message: str, certificate: "RootCertificate") -> None:
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class RootCertificate:
    distinct_real_roots: int
    degree_of_squarefree_part: int
    is_real_rooted: bool
    all_roots_nonpositive: bool


@dataclass(frozen=True)
class SturmChain:
    """Chain for the squarefree part: it, its derivative, then the negated
    remainders of each consecutive pair (up to positive scaling)."""

    polys: tuple[PolynomialCoeffs, ...]

    def variations_at_neg_inf(self) -> int:
        return _variations([_sign_neg_inf(_ints(p)) for p in self.polys])

    def variations_at_pos_inf(self) -> int:
        return _variations([_sign_pos_inf(_ints(p)) for p in self.polys])

    def variations_at_zero(self) -> int:
        return _variations([_sign(int(p.coeffs[0])) for p in self.polys])


# ---------------------------------------------------------------------------
# Integer polynomial helpers (dense ascending lists, no leading zeros)


def _ints(p: PolynomialCoeffs) -> list[int]:
    return [int(c) for c in p.coeffs]


def _strip(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _degree(p: list[int]) -> int:
    return len(p) - 1


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign_pos_inf(p: list[int]) -> int:
    return _sign(p[-1])


def _sign_neg_inf(p: list[int]) -> int:
    return _sign(p[-1]) * (-1 if _degree(p) % 2 else 1)


def _variations(signs: list[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def _content(p: list[int]) -> int:
    c = 0
    for coeff in p:
        c = gcd(c, abs(coeff))
    return c or 1


def _primitive(p: list[int]) -> list[int]:
    c = _content(p)
    return [coeff // c for coeff in p]


def _derivative(p: list[int]) -> list[int]:
    return _strip([i * c for i, c in enumerate(p)][1:])


def _clear_denominators(p: PolynomialCoeffs) -> list[int]:
    """Positive integer multiple of `p` with coprime coefficients."""
    scale = 1
    for c in p.coeffs:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    ints = [int(c * scale) for c in p.coeffs]
    return _primitive(_strip(ints))


def _pseudo_remainder(f: list[int], g: list[int]) -> tuple[list[int], int]:
    """Integer remainder sequence step: returns (r, sign) where r equals
    lc(g)**m * rem(f, g) for the true polynomial remainder and some m >= 0,
    and `sign` is the sign of that multiplier."""
    dg = _degree(g)
    lg = g[-1]
    r = f[:]
    applied = 0
    while r and _degree(r) >= dg:
        shift = _degree(r) - dg
        lead = r[-1]
        r = [lg * c for c in r]
        for i, c in enumerate(g):
            r[i + shift] -= lead * c
        _strip(r)
        applied += 1
    sign = -1 if (lg < 0 and applied % 2 == 1) else 1
    return r, sign


def _next_chain_element(prev: list[int], curr: list[int]) -> list[int]:
    """Primitive positive multiple of -(prev mod curr)."""
    r, multiplier_sign = _pseudo_remainder(prev, curr)
    if not r:
        return []
    if multiplier_sign > 0:
        r = [-c for c in r]
    return _primitive(r)


def _poly_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient."""
    a, b = f[:], g[:]
    if _degree(a) < _degree(b):
        a, b = b, a
    while b:
        r, _ = _pseudo_remainder(a, b)
        a, b = b, _primitive(r) if r else []
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    """Quotient of an exact integer polynomial division."""
    out = [0] * (_degree(num) - _degree(den) + 1)
    r = num[:]
    while r and _degree(r) >= _degree(den):
        shift = _degree(r) - _degree(den)
        q, rem = divmod(r[-1], den[-1])
        if rem != 0:
            raise ArithmeticError("division expected to be exact")
        out[shift] = q
        for i, c in enumerate(den):
            r[i + shift] -= q * c
        _strip(r)
    if r:
        raise ArithmeticError("division expected to be exact")
    return out


def _build_chain(squarefree: list[int]) -> list[list[int]]:
    chain = [squarefree, _primitive(_derivative(squarefree))]
    while _degree(chain[-1]) > 0:
        nxt = _next_chain_element(chain[-2], chain[-1])
        if not nxt:
            break
        chain.append(nxt)
    return chain


def _squarefree_part(p: list[int]) -> list[int]:
    g = _poly_gcd(p, _primitive(_derivative(p)))
    if _degree(g) == 0:
        return p
    return _primitive(_exact_divide(p, g))


def sturm_chain(p: PolynomialCoeffs) -> SturmChain:
    """Sturm chain of the squarefree part of `p` (positive rescaling allowed)."""
    ints = _clear_denominators(p)
    if not ints:
        raise DomainError("zero polynomial has no Sturm chain")
    if _degree(ints) < 1:
        raise DomainError("constant polynomial has no Sturm chain")
    chain = _build_chain(_squarefree_part(ints))
    return SturmChain(
        tuple(PolynomialCoeffs(tuple(Fraction(c) for c in poly)) for poly in chain)
    )


def certify(
    p: PolynomialCoeffs, *, degree_cap: int = DEFAULT_DEGREE_CAP
) -> RootCertificate:
    """Count distinct real roots of `p` exactly and certify root structure.

    `is_real_rooted` holds when the distinct-root count equals the degree of
    the squarefree part p/gcd(p, p'); `all_roots_nonpositive` additionally
    requires that no root lies in (0, +inf).
    """
    if p.is_zero():
        raise DomainError("cannot certify the zero polynomial")
    if p.degree < 1:
        raise DomainError("certification needs degree at least 1")
    if p.degree > degree_cap:
        raise DomainError(f"degree {p.degree} exceeds cap {degree_cap}")
    ints = _clear_denominators(p)
    squarefree = _squarefree_part(ints)
    chain = _build_chain(squarefree)
    at_neg = _variations([_sign_neg_inf(q) for q in chain])
    at_pos = _variations([_sign_pos_inf(q) for q in chain])
    distinct = at_neg - at_pos
    squarefree_degree = _degree(squarefree)
    real_rooted = distinct == squarefree_degree

    if squarefree[0] != 0:
        positive_roots = _variations([_sign(q[0]) for q in chain]) - at_pos
    else:
        # 0 is a (simple) root of the squarefree part; strip the x factor.
        shifted = squarefree[1:]
        if _degree(shifted) >= 1:
            subchain = _build_chain(shifted)
            positive_roots = _variations([_sign(q[0]) for q in subchain]) - _variations(
                [_sign_pos_inf(q) for q in subchain]
            )
        else:
            positive_roots = 0
    return RootCertificate(
        distinct_real_roots=distinct,
        degree_of_squarefree_part=squarefree_degree,
        is_real_rooted=real_rooted,
        all_roots_nonpositive=real_rooted and positive_roots == 0,
    )


# ---------------------------------------------------------------------------
# Coefficient checks licensed by a certificate


def marik_check(
    p: PolynomialCoeffs,
    *,
    include_boundary: bool = False,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> CheckReport:
    """Higher-order Turán check for the factorial-normalized coefficients of a
    certified real-rooted polynomial of degree n >= 3, over 1 <= k <= n-2.

    With `include_boundary` an extra record at k = n-1 reads a_{n+1} as zero.
    That boundary inequality reduces to a_n**2 * (3 a_{n-1}**2 - 4 a_{n-2} a_n)
    >= 0, which real-rootedness does not imply (degree-5 Laguerre already
    violates it), so it is an audit record, not part of the default verdict.
    """
    n = p.degree
    if n < 3:
        raise PreconditionError("check needs degree at least 3")
    certificate = certify(p, degree_cap=degree_cap)
    if not certificate.is_real_rooted:
        raise HypothesisError("polynomial is not real-rooted", certificate)
    window = normalize_factorial(p)
    top = n if include_boundary else n - 1
    records = tuple(
        higher_turan_check(window, k, zero_extend=True) for k in range(1, top)
    )
    return CheckReport(window.name, "marik", records)


def _coefficient_l_image(p: PolynomialCoeffs) -> PolynomialCoeffs:
    """Polynomial with coefficients b_k = a_k**2 - a_{k-1} a_{k+1}."""
    window = SequenceWindow("coeffs", 0, p.coeffs)
    return PolynomialCoeffs(l_operator(window).terms)


def branden_check(
    p: PolynomialCoeffs, depth: int, *, degree_cap: int = DEFAULT_DEGREE_CAP
) -> CheckReport:
    """Iterate the coefficient-level log-concavity operator `depth` times,
    certifying after each step that the image stays real-rooted with all
    roots nonpositive.

    Requires the input itself to be so certified and to have nonnegative
    coefficients.  A FAILS record would contradict the underlying theorem, so
    in practice it signals an implementation bug; iteration stops there.
    """
    if depth < 1:
        raise PreconditionError("depth must be at least 1")
    if any(c < 0 for c in p.coeffs):
        raise PreconditionError("coefficients must be nonnegative")
    certificate = certify(p, degree_cap=degree_cap)
    if not (certificate.is_real_rooted and certificate.all_roots_nonpositive):
        raise HypothesisError(
            "polynomial is not real-rooted with nonpositive roots", certificate
        )
    records = []
    current = p
    for level in range(1, depth + 1):
        current = _coefficient_l_image(current)
        certificate = certify(current, degree_cap=degree_cap)
        good = certificate.is_real_rooted and certificate.all_roots_nonpositive
        records.append(
            CheckRecord(
                level,
                CheckStatus.HOLDS if good else CheckStatus.FAILS,
                reason=None if good else "certification-failed",
                witnesses={
                    "distinct_real_roots": Fraction(certificate.distinct_real_roots),
                    "squarefree_degree": Fraction(
                        certificate.degree_of_squarefree_part
                    ),
                },
            )
        )
        if not good:
            break
    return CheckReport(f"L-iterates(degree {p.degree})", "branden", tuple(records))
