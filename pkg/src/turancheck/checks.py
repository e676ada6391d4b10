"""Inequality verdicts on sequence windows.

Each per-index check returns a `CheckRecord` whose witnesses are enough to
recompute the verdict independently; window-level helpers assemble sorted
`CheckReport`s.  All rational inequalities are decided in cross-multiplied
integer form and all surd comparisons go through the exact comparator, so a
verdict is never the result of rounding.

Status semantics: HOLDS_STRICT is a strict inequality, HOLDS an equality
boundary, FAILS a violation, NOT_APPLICABLE a precondition gap (which is
information, not falsification).

The quantity called the "L-ratio" below is
``(a_{k+1}^2 - a_k a_{k+2}) / (a_k^2 - a_{k-1} a_{k+1})``, the ratio of two
consecutive terms of the image under the log-concavity operator L.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .exact import (
    Ordering,
    PreconditionError,
    RationalLike,
    SurdValue,
    as_rational,
    compare_rational_to_surd,
    format_rational,
    surd_bound_pair,
)
from .sequences import SequenceWindow

__all__ = [
    "CheckRecord",
    "CheckReport",
    "CheckStatus",
    "Witness",
    "chain_bounds_check",
    "chain_bounds_report",
    "convexity_check",
    "criterion_r_check",
    "first_all_holds_start",
    "higher_turan_check",
    "higher_turan_report",
    "is_k_log_concave",
    "is_log_concave",
    "l_increasing_check",
    "l_operator",
    "neighbor_bounds_check",
    "neighbor_bounds_report",
    "ratio_down_convexity_check",
    "ratio_up_convexity_check",
    "reciprocal_bound_scan",
    "surd_bounds_check",
    "surd_bounds_report",
]

Witness = Union[Fraction, SurdValue]


class CheckStatus(enum.Enum):
    HOLDS = "holds"
    HOLDS_STRICT = "holds_strict"
    FAILS = "fails"
    NOT_APPLICABLE = "not_applicable"


def _status_of_sign(value: Fraction) -> CheckStatus:
    """HOLDS_STRICT / HOLDS / FAILS for value > 0 / == 0 / < 0."""
    if value > 0:
        return CheckStatus.HOLDS_STRICT
    if value == 0:
        return CheckStatus.HOLDS
    return CheckStatus.FAILS


@dataclass(frozen=True)
class CheckRecord:
    """Verdict at one index, with the values that entered the decision."""

    index: int
    status: CheckStatus
    reason: str | None = None
    witnesses: Mapping[str, Witness] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status is CheckStatus.NOT_APPLICABLE and not self.reason:
            raise ValueError("NOT_APPLICABLE records must carry a reason")

    @property
    def ok(self) -> bool:
        return self.status in (CheckStatus.HOLDS, CheckStatus.HOLDS_STRICT)


def _not_applicable(index: int, reason: str, **witnesses: Witness) -> CheckRecord:
    return CheckRecord(index, CheckStatus.NOT_APPLICABLE, reason, dict(witnesses))


@dataclass(frozen=True)
class CheckReport:
    """All records of one check over one sequence, sorted by index."""

    sequence: str
    check: str
    records: tuple[CheckRecord, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "records", tuple(sorted(self.records, key=lambda r: r.index))
        )

    @property
    def summary(self) -> dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for record in self.records:
            counts[record.status.value] += 1
        return counts

    @property
    def first_fail_index(self) -> int | None:
        for record in self.records:
            if record.status is CheckStatus.FAILS:
                return record.index
        return None

    @property
    def ok(self) -> bool:
        """True when nothing failed; NOT_APPLICABLE does not count against."""
        return self.first_fail_index is None

    @property
    def index_range(self) -> tuple[int, int] | None:
        if not self.records:
            return None
        return (self.records[0].index, self.records[-1].index)

    def to_json_dict(self) -> dict:
        lo, hi = self.index_range or (None, None)
        records = []
        for record in self.records:
            entry: dict = {"k": record.index, "status": record.status.value}
            if record.reason is not None:
                entry["reason"] = record.reason
            entry["witnesses"] = {
                name: _witness_json(value) for name, value in record.witnesses.items()
            }
            records.append(entry)
        return {
            "sequence": self.sequence,
            "check": self.check,
            "range": [lo, hi],
            "records": records,
            "summary": self.summary,
            "first_fail_index": self.first_fail_index,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["sequence", "check", "k", "status", "reason", "witnesses"])
        for record in self.records:
            witnesses = ";".join(
                f"{name}={_witness_text(value)}"
                for name, value in record.witnesses.items()
            )
            writer.writerow(
                [
                    self.sequence,
                    self.check,
                    record.index,
                    record.status.value,
                    record.reason or "",
                    witnesses,
                ]
            )
        return out.getvalue()


def _witness_json(value: Witness) -> object:
    if isinstance(value, SurdValue):
        return {
            "alpha": format_rational(value.alpha),
            "beta": format_rational(value.beta),
            "d": format_rational(value.radicand),
        }
    return format_rational(value)


def _witness_text(value: Witness) -> str:
    if isinstance(value, SurdValue):
        return str(value)
    return format_rational(value)


def first_all_holds_start(report: CheckReport) -> int | None:
    """Smallest index from which every later record holds through the end.

    NOT_APPLICABLE records break a holding run just like failures do, since
    nothing was established there.  Returns None when the last record does
    not hold.
    """
    start: int | None = None
    for record in report.records:
        if record.ok:
            if start is None:
                start = record.index
        else:
            start = None
    return start


# ---------------------------------------------------------------------------
# The log-concavity operator and its iterates


def l_operator(window: SequenceWindow) -> SequenceWindow:
    """b_0 = a_0**2 and b_k = a_k**2 - a_{k-1} a_{k+1}, trailing zeros assumed.

    The window must start at index 0 (the b_0 rule anchors there); the finite
    window is treated as an infinite sequence whose terms beyond the end are
    zero, so the last output term is a_{end}**2.
    """
    if window.start_index != 0:
        raise PreconditionError("l_operator requires a window starting at index 0")
    a = window.terms
    n = len(a)
    out = [a[0] * a[0]]
    for k in range(1, n):
        upper = a[k + 1] if k + 1 < n else Fraction(0)
        out.append(a[k] * a[k] - a[k - 1] * upper)
    return SequenceWindow(f"L({window.name})", 0, tuple(out))


def _clip(window: SequenceWindow, lo: int | None, hi: int | None,
          first: int, last: int) -> range:
    """Absolute index range [first, last] clipped to the requested [lo, hi]."""
    lo = first if lo is None else max(lo, first)
    hi = last if hi is None else min(hi, last)
    return range(lo, hi + 1)


def is_log_concave(
    window: SequenceWindow, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    """Check a_k**2 - a_{k-1} a_{k+1} >= 0 at every interior index.

    Operates on the window as given (no zero extension), so it is meaningful
    for windows cut from the middle of a longer sequence.
    """
    records = []
    for k in _clip(window, lo, hi, window.start_index + 1, window.end_index - 1):
        value = window.term(k) ** 2 - window.term(k - 1) * window.term(k + 1)
        records.append(CheckRecord(k, _status_of_sign(value), witnesses={"gap": value}))
    return CheckReport(window.name, "log-concave", tuple(records))


def is_k_log_concave(
    window: SequenceWindow, j: int, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    """Check that every iterate L^0, ..., L^j of the window is nonnegative.

    One record per index; witnesses carry the term of each level at that
    index, and the record fails if any level is negative there.  Levels use
    the trailing-zero extension of `l_operator`, so values at the last `j`
    indices reflect the truncated window, not a longer parent sequence.
    """
    if j < 0:
        raise PreconditionError("iteration depth must be nonnegative")
    levels = [window]
    for _ in range(j):
        levels.append(l_operator(levels[-1]))
    records = []
    for k in _clip(window, lo, hi, window.start_index, window.end_index):
        witnesses = {f"L{level}": seq.term(k) for level, seq in enumerate(levels)}
        worst = min(witnesses.values())
        records.append(CheckRecord(k, _status_of_sign(worst), witnesses=witnesses))
    return CheckReport(window.name, "k-log-concave", tuple(records))


# ---------------------------------------------------------------------------
# Per-index checks on quadruples a_{k-1}, ..., a_{k+2}


def _quadruple(
    window: SequenceWindow, k: int, zero_extend: bool
) -> tuple[Fraction, Fraction, Fraction, Fraction] | None:
    """Terms at k-1..k+2, taking terms beyond the end as 0 when allowed."""
    if k - 1 < window.start_index:
        return None
    if k + 2 > window.end_index and not zero_extend:
        return None
    if k > window.end_index:
        return None

    def get(i: int) -> Fraction:
        return window.term(i) if i <= window.end_index else Fraction(0)

    return (get(k - 1), get(k), get(k + 1), get(k + 2))


def higher_turan_check(
    window: SequenceWindow, k: int, *, zero_extend: bool = False
) -> CheckRecord:
    """Higher-order Turán inequality at index k:

    ``4 (a_k^2 - a_{k-1} a_{k+1}) (a_{k+1}^2 - a_k a_{k+2})
    >= (a_k a_{k+1} - a_{k-1} a_{k+2})^2``.
    """
    quad = _quadruple(window, k, zero_extend)
    if quad is None:
        return _not_applicable(k, "out-of-window")
    am1, a0, a1, a2 = quad
    left_gap = a0 * a0 - am1 * a1
    right_gap = a1 * a1 - a0 * a2
    cross = a0 * a1 - am1 * a2
    value = 4 * left_gap * right_gap - cross * cross
    return CheckRecord(
        k,
        _status_of_sign(value),
        witnesses={
            "left_gap": left_gap,
            "right_gap": right_gap,
            "cross": cross,
            "value": value,
        },
    )


def surd_bounds_check(window: SequenceWindow, k: int) -> CheckRecord:
    """Two-sided surd bound on the L-ratio at index k:

    ``(a_{k+1}^2/a_k^2) (1 - sqrt(1-c_k))^2  <=  L-ratio  <=
    (a_{k+1}^2/a_k^2) (1 + sqrt(1-c_k))^2`` with ``c_k = a_k a_{k+2} / a_{k+1}^2``.

    Applicable when a_k a_{k+1} != 0, the L-ratio denominator is strictly
    positive, and c_k <= 1 (real bounds); decided by exact surd comparison.
    """
    quad = _quadruple(window, k, False)
    if quad is None:
        return _not_applicable(k, "out-of-window")
    am1, a0, a1, a2 = quad
    if a0 * a1 == 0:
        return _not_applicable(k, "zero-product")
    denominator = a0 * a0 - am1 * a1
    if denominator <= 0:
        return _not_applicable(k, "nonpositive-denominator", denominator=denominator)
    c = a0 * a2 / (a1 * a1)
    if c > 1:
        return _not_applicable(k, "imaginary-bound", c=c)
    ratio = (a1 * a1 - a0 * a2) / denominator
    lower, upper = surd_bound_pair(a1 * a1 / (a0 * a0), c)
    against_lower = compare_rational_to_surd(ratio, lower)
    against_upper = compare_rational_to_surd(ratio, upper)
    if against_lower is Ordering.LESS or against_upper is Ordering.GREATER:
        status = CheckStatus.FAILS
    elif against_lower is Ordering.GREATER and against_upper is Ordering.LESS:
        status = CheckStatus.HOLDS_STRICT
    else:
        status = CheckStatus.HOLDS
    return CheckRecord(
        k,
        status,
        witnesses={"c": c, "ratio": ratio, "lower": lower, "upper": upper},
    )


def neighbor_bounds_check(window: SequenceWindow, k: int) -> CheckRecord:
    """Neighbor-ratio bound on the L-ratio at index k:

    ``a_{k+2}/a_k <= L-ratio <= a_{k+1}/a_{k-1}``.

    Requires positive terms and a strictly positive L-ratio denominator;
    decided in cross-multiplied form, no division performed.
    """
    quad = _quadruple(window, k, False)
    if quad is None:
        return _not_applicable(k, "out-of-window")
    am1, a0, a1, a2 = quad
    if min(quad) <= 0:
        return _not_applicable(k, "nonpositive-term")
    denominator = a0 * a0 - am1 * a1
    if denominator <= 0:
        return _not_applicable(k, "nonpositive-denominator", denominator=denominator)
    numerator = a1 * a1 - a0 * a2
    left_margin = numerator * a0 - a2 * denominator
    right_margin = a1 * denominator - numerator * am1
    if left_margin < 0 or right_margin < 0:
        status = CheckStatus.FAILS
    elif left_margin > 0 and right_margin > 0:
        status = CheckStatus.HOLDS_STRICT
    else:
        status = CheckStatus.HOLDS
    return CheckRecord(
        k,
        status,
        witnesses={
            "lower": a2 / a0,
            "ratio": numerator / denominator,
            "upper": a1 / am1,
        },
    )


def chain_bounds_check(window: SequenceWindow, k: int) -> CheckRecord:
    """Four-term chain at index k:

    ``lower surd <= a_{k+2}/a_k <= L-ratio <= upper surd``

    with the same surd pair as `surd_bounds_check`.  Requires positive terms
    in addition to that check's preconditions.
    """
    quad = _quadruple(window, k, False)
    if quad is None:
        return _not_applicable(k, "out-of-window")
    am1, a0, a1, a2 = quad
    if min(quad) <= 0:
        return _not_applicable(k, "nonpositive-term")
    denominator = a0 * a0 - am1 * a1
    if denominator <= 0:
        return _not_applicable(k, "nonpositive-denominator", denominator=denominator)
    c = a0 * a2 / (a1 * a1)
    if c > 1:
        return _not_applicable(k, "imaginary-bound", c=c)
    step_ratio = a2 / a0
    ratio = (a1 * a1 - a0 * a2) / denominator
    lower, upper = surd_bound_pair(a1 * a1 / (a0 * a0), c)
    first = compare_rational_to_surd(step_ratio, lower)  # want >=
    second = Ordering.of_sign(ratio - step_ratio)        # want >=
    third = compare_rational_to_surd(ratio, upper)       # want <=
    if first is Ordering.LESS or second is Ordering.LESS or third is Ordering.GREATER:
        status = CheckStatus.FAILS
    elif (
        first is Ordering.GREATER
        and second is Ordering.GREATER
        and third is Ordering.LESS
    ):
        status = CheckStatus.HOLDS_STRICT
    else:
        status = CheckStatus.HOLDS
    return CheckRecord(
        k,
        status,
        witnesses={
            "lower": lower,
            "step_ratio": step_ratio,
            "ratio": ratio,
            "upper": upper,
        },
    )


def _quadruple_report(
    window: SequenceWindow,
    check_name: str,
    record_fn,
    lo: int | None,
    hi: int | None,
) -> CheckReport:
    ks = _clip(window, lo, hi, window.start_index + 1, window.end_index - 2)
    return CheckReport(window.name, check_name, tuple(record_fn(window, k) for k in ks))


def higher_turan_report(
    window: SequenceWindow, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    return _quadruple_report(window, "higher-turan", higher_turan_check, lo, hi)


def surd_bounds_report(
    window: SequenceWindow, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    return _quadruple_report(window, "surd-bounds", surd_bounds_check, lo, hi)


def neighbor_bounds_report(
    window: SequenceWindow, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    return _quadruple_report(window, "neighbor-bounds", neighbor_bounds_check, lo, hi)


def chain_bounds_report(
    window: SequenceWindow, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    return _quadruple_report(window, "chain-bounds", chain_bounds_check, lo, hi)


# ---------------------------------------------------------------------------
# Window-level checks


def criterion_r_check(
    window: SequenceWindow,
    r: RationalLike,
    lo: int | None = None,
    hi: int | None = None,
) -> CheckReport:
    """Check a_k**2 >= r * a_{k-1} a_{k+1} at every interior index."""
    r = as_rational(r)
    if r <= 0:
        raise PreconditionError("r must be positive")
    records = []
    for k in _clip(window, lo, hi, window.start_index + 1, window.end_index - 1):
        margin = window.term(k) ** 2 - r * window.term(k - 1) * window.term(k + 1)
        records.append(
            CheckRecord(k, _status_of_sign(margin), witnesses={"margin": margin})
        )
    return CheckReport(window.name, f"criterion[r={format_rational(r)}]", tuple(records))


def convexity_check(
    window: SequenceWindow, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    """Check a_{k+1} - a_k >= a_k - a_{k-1} at every interior index."""
    if len(window) < 3:
        raise PreconditionError("convexity needs a window of length at least 3")
    records = []
    for k in _clip(window, lo, hi, window.start_index + 1, window.end_index - 1):
        value = window.term(k + 1) + window.term(k - 1) - 2 * window.term(k)
        records.append(
            CheckRecord(k, _status_of_sign(value), witnesses={"second_difference": value})
        )
    return CheckReport(window.name, "convexity", tuple(records))


def _ratio_convexity(
    window: SequenceWindow,
    check_name: str,
    forward: bool,
    lo: int | None,
    hi: int | None,
) -> CheckReport:
    records = []
    for k in _clip(window, lo, hi, window.start_index + 1, window.end_index - 2):
        terms = [window.term(i) for i in range(k - 1, k + 3)]
        if any(t == 0 for t in terms):
            records.append(_not_applicable(k, "zero-term"))
            continue
        if any(t < 0 for t in terms):
            records.append(_not_applicable(k, "negative-term"))
            continue
        if forward:
            ratios = [terms[i + 1] / terms[i] for i in range(3)]
        else:
            ratios = [terms[i] / terms[i + 1] for i in range(3)]
        value = ratios[2] + ratios[0] - 2 * ratios[1]
        records.append(
            CheckRecord(k, _status_of_sign(value), witnesses={"second_difference": value})
        )
    return CheckReport(window.name, check_name, tuple(records))


def ratio_up_convexity_check(
    window: SequenceWindow, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    """Convexity of the forward-ratio sequence a_{k+1}/a_k.

    The record at index k states that the ratio sequence is convex at ratio
    index k, i.e. uses terms a_{k-1}, ..., a_{k+2}.
    """
    return _ratio_convexity(window, "ratio-up-convexity", True, lo, hi)


def ratio_down_convexity_check(
    window: SequenceWindow, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    """Convexity of the backward-ratio sequence a_k/a_{k+1}."""
    return _ratio_convexity(window, "ratio-down-convexity", False, lo, hi)


def l_increasing_check(
    window: SequenceWindow, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    """Check that d_k = a_{k+1}**2 - a_k a_{k+2} is nondecreasing in k.

    The record at index k compares d_k with d_{k-1}; HOLDS_STRICT marks a
    strict increase, so strict and weak monotonicity are both recoverable
    from one report.
    """
    if len(window) < 4:
        raise PreconditionError("l-increasing needs a window of length at least 4")

    def d(k: int) -> Fraction:
        return window.term(k + 1) ** 2 - window.term(k) * window.term(k + 2)

    records = []
    for k in _clip(window, lo, hi, window.start_index + 1, window.end_index - 2):
        value = d(k) - d(k - 1)
        records.append(
            CheckRecord(k, _status_of_sign(value), witnesses={"increase": value})
        )
    return CheckReport(window.name, "l-increasing", tuple(records))


# Golden-ratio threshold (sqrt(5)-1)/2 as an exact surd.
_REGIME_SPLIT = SurdValue(Fraction(-1, 2), Fraction(1, 2), Fraction(5))


def reciprocal_bound_scan(
    window: SequenceWindow, lo: int | None = None, hi: int | None = None
) -> CheckReport:
    """Empirical scan: is ``1/c_{k-1} <= (1 + sqrt(1-c_k))**2`` when
    ``0 <= c_k <= (sqrt(5)-1)/2``?

    This question is open; the scan records verdicts (a FAILS record would be
    a counterexample) and asserts nothing.  Indices outside the regime, or
    with nonpositive terms, are NOT_APPLICABLE.
    """
    records = []
    for k in _clip(window, lo, hi, window.start_index + 1, window.end_index - 2):
        terms = [window.term(i) for i in range(k - 1, k + 3)]
        if min(terms) <= 0:
            records.append(_not_applicable(k, "nonpositive-term"))
            continue
        c_prev = terms[0] * terms[2] / (terms[1] * terms[1])
        c = terms[1] * terms[3] / (terms[2] * terms[2])
        if c < 0 or compare_rational_to_surd(c, _REGIME_SPLIT) is Ordering.GREATER:
            records.append(_not_applicable(k, "outside-regime", c=c))
            continue
        if c_prev <= 0:
            records.append(_not_applicable(k, "nonpositive-c-prev", c_prev=c_prev))
            continue
        bound = SurdValue(2 - c, Fraction(2), 1 - c)  # (1 + sqrt(1-c))**2
        comparison = compare_rational_to_surd(1 / c_prev, bound)
        if comparison is Ordering.GREATER:
            status = CheckStatus.FAILS
        elif comparison is Ordering.LESS:
            status = CheckStatus.HOLDS_STRICT
        else:
            status = CheckStatus.HOLDS
        records.append(
            CheckRecord(
                k, status, witnesses={"c_prev": c_prev, "c": c, "bound": bound}
            )
        )
    return CheckReport(window.name, "reciprocal-upper-bound", tuple(records))
