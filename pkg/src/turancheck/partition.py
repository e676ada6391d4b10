"""Partition-function scans.

Everything here runs on the shared exact memo of p(n) values and reports
through the same record/report types as the window checks: the strict
increase of the Turán gap p(n)**2 - p(n-1)p(n+1), the log-concavity
hierarchy thresholds, the tabulated bracketing ranges for the L-ratio
f(n) between two-step ratios g_k, and the exact surd-bound comparisons of
those two-step ratios.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .checks import CheckRecord, CheckReport, CheckStatus, _status_of_sign
from .exact import (
    Ordering,
    PreconditionError,
    SurdValue,
    compare_rational_to_surd,
    format_rational,
    surd_bound_pair,
)
from .sequences import partition_values

__all__ = [
    "HIERARCHY_THRESHOLDS",
    "ScanRow",
    "TABULATED_RANGES",
    "admissible_scan",
    "delta_increasing_scan",
    "find_admissible_k",
    "hierarchy_scan",
    "hierarchy_verdicts",
    "l_ratio",
    "scan_rows_to_csv",
    "scan_rows_to_json",
    "terminal_bounds_scan",
    "two_step_ratio",
    "verify_tabulated_ranges",
]

# (first n, last n, k): in each range, g_k(n) <= f(n) <= g_k(n-1).
TABULATED_RANGES: tuple[tuple[int, int, int], ...] = (
    (224, 225, 20),
    (244, 261, 21),
    (268, 291, 22),
    (296, 323, 23),
    (326, 355, 24),
    (356, 389, 25),
    (390, 425, 26),
)

# First index from which each hierarchy scan holds through any tested ceiling
# (all empirically sharp: the record just below each threshold fails).
HIERARCHY_THRESHOLDS: dict[str, int] = {
    "higher_turan": 95,
    "two_log_concave": 222,  # the tail {p(n)}_{n>=221} is 2-log-concave; its
    # first in-tail inequality is the n=222 record, and the n=221 record
    # (which reaches back to n=220) is negative.
    "ratio_log_convex": 116,
    "convex": 1,
}


def l_ratio(n: int) -> Fraction | None:
    """f(n) = (p(n+1)**2 - p(n)p(n+2)) / (p(n)**2 - p(n-1)p(n+1)), or None
    when the denominator is not strictly positive."""
    if n < 1:
        raise PreconditionError("l_ratio needs n >= 1")
    p = partition_values(n + 2)
    denominator = p[n] * p[n] - p[n - 1] * p[n + 1]
    if denominator <= 0:
        return None
    return Fraction(p[n + 1] * p[n + 1] - p[n] * p[n + 2], denominator)


def two_step_ratio(n: int, k: int) -> Fraction:
    """g_k(n) = p(n+k+2) / p(n+k)."""
    if n + k < 0:
        raise PreconditionError("two_step_ratio needs n + k >= 0")
    p = partition_values(n + k + 2)
    return Fraction(p[n + k + 2], p[n + k])


def find_admissible_k(n: int, k_max: int = 40) -> list[int] | None:
    """All k in [1, k_max] with g_k(n) <= f(n) <= g_k(n-1); None when f(n)
    is not applicable.  Membership is reported, not uniqueness."""
    if k_max < 1:
        raise PreconditionError("k_max must be at least 1")
    f = l_ratio(n)
    if f is None:
        return None
    return [
        k
        for k in range(1, k_max + 1)
        if two_step_ratio(n, k) <= f <= two_step_ratio(n - 1, k)
    ]


def verify_tabulated_ranges(
    table: tuple[tuple[int, int, int], ...] = TABULATED_RANGES,
) -> CheckReport:
    """Check g_k(n) <= f(n) <= g_k(n-1) for every n of every tabulated range."""
    records = []
    for first, last, k in table:
        for n in range(first, last + 1):
            f = l_ratio(n)
            if f is None:
                records.append(
                    CheckRecord(
                        n, CheckStatus.NOT_APPLICABLE, "nonpositive-denominator"
                    )
                )
                continue
            g_lo = two_step_ratio(n, k)
            g_hi = two_step_ratio(n - 1, k)
            if g_lo <= f <= g_hi:
                status = (
                    CheckStatus.HOLDS_STRICT
                    if g_lo < f < g_hi
                    else CheckStatus.HOLDS
                )
            else:
                status = CheckStatus.FAILS
            records.append(
                CheckRecord(
                    n,
                    status,
                    witnesses={"k": Fraction(k), "g_k_n": g_lo, "f_n": f, "g_k_prev": g_hi},
                )
            )
    return CheckReport("partition", "tabulated-ranges", tuple(records))


def delta_increasing_scan(lo: int, hi: int) -> CheckReport:
    """Strict increase of d(n) = p(n)**2 - p(n-1)p(n+1) across [lo, hi].

    The record at index n compares d(n) against d(n-1), so the scan asserts
    monotonicity of the tail {d(n)}_{n >= lo} and never reaches below lo.
    """
    if not 1 <= lo < hi:
        raise PreconditionError("need 1 <= lo < hi")
    p = partition_values(hi + 1)

    def d(n: int) -> int:
        return p[n] * p[n] - p[n - 1] * p[n + 1]

    records = []
    previous = d(lo)
    for n in range(lo + 1, hi + 1):
        current = d(n)
        records.append(
            CheckRecord(
                n,
                _status_of_sign(Fraction(current - previous)),
                witnesses={"increase": Fraction(current - previous)},
            )
        )
        previous = current
    return CheckReport("partition", "delta-increasing", tuple(records))


def hierarchy_scan(max_n: int = 1000) -> dict[str, CheckReport]:
    """Scan the four log-concavity-hierarchy inequalities over 1 <= n <= max_n.

    Returns one report per claim:

    - ``higher_turan``: the higher-order Turán expression at n;
    - ``two_log_concave``: u(n)**2 - u(n-1)u(n+1) for u(n) = p(n)**2 -
      p(n-1)p(n+1) (values honest through max_n, no window truncation);
    - ``ratio_log_convex``: r(n)**2 <= r(n-1)r(n+1) for r(n) = p(n+1)/p(n),
      cross-multiplied;
    - ``convex``: 2p(n) <= p(n+1) + p(n-1).

    Records below the thresholds in `HIERARCHY_THRESHOLDS` are expected to
    contain failures; they are information, not falsification.
    """
    if max_n < 3:
        raise PreconditionError("max_n must be at least 3")
    p = partition_values(max_n + 2)
    u = [p[0] * p[0]] + [
        p[n] * p[n] - p[n - 1] * p[n + 1] for n in range(1, max_n + 2)
    ]

    hot_records = []
    two_records = []
    convex_records = []
    ratio_records = []
    for n in range(1, max_n + 1):
        hot_value = 4 * u[n] * u[n + 1] - (p[n] * p[n + 1] - p[n - 1] * p[n + 2]) ** 2
        hot_records.append(
            CheckRecord(n, _status_of_sign(Fraction(hot_value)),
                        witnesses={"value": Fraction(hot_value)})
        )
        two_value = u[n] * u[n] - u[n - 1] * u[n + 1]
        two_records.append(
            CheckRecord(n, _status_of_sign(Fraction(two_value)),
                        witnesses={"value": Fraction(two_value)})
        )
        ratio_value = p[n] ** 3 * p[n + 2] - p[n + 1] ** 3 * p[n - 1]
        ratio_records.append(
            CheckRecord(n, _status_of_sign(Fraction(ratio_value)),
                        witnesses={"margin": Fraction(ratio_value)})
        )
        convex_value = p[n + 1] + p[n - 1] - 2 * p[n]
        convex_records.append(
            CheckRecord(n, _status_of_sign(Fraction(convex_value)),
                        witnesses={"second_difference": Fraction(convex_value)})
        )
    return {
        "higher_turan": CheckReport("partition", "higher-turan", tuple(hot_records)),
        "two_log_concave": CheckReport(
            "partition", "two-log-concave", tuple(two_records)
        ),
        "ratio_log_convex": CheckReport(
            "partition", "ratio-log-convex", tuple(ratio_records)
        ),
        "convex": CheckReport("partition", "convexity", tuple(convex_records)),
    }


def hierarchy_verdicts(
    reports: dict[str, CheckReport],
    thresholds: dict[str, int] = HIERARCHY_THRESHOLDS,
) -> dict[str, bool]:
    """True per claim when no record at or above its threshold fails."""
    verdicts = {}
    for name, report in reports.items():
        threshold = thresholds[name]
        verdicts[name] = all(
            record.ok for record in report.records if record.index >= threshold
        )
    return verdicts


@dataclass(frozen=True)
class ScanRow:
    """Per-n result of an admissible-k or surd-bound scan.

    `f_n` is present only when its denominator is strictly positive.  The
    `g_lo`/`g_hi` columns and the surd verdicts are evaluated at `k_used`
    (the smallest admissible k, or the requested floor when none exists).
    """

    n: int
    f_n: Fraction | None
    admissible_k: tuple[int, ...]
    k_used: int | None = None
    g_lo: Fraction | None = None
    g_hi: Fraction | None = None
    lower_surd_ok: bool | None = None
    upper_surd_ok: bool | None = None
    status: str = "ok"


def admissible_scan(lo: int, hi: int, k_max: int = 40) -> list[ScanRow]:
    """Rows of f(n) and its admissible k set for lo <= n <= hi."""
    if not 1 <= lo <= hi:
        raise PreconditionError("need 1 <= lo <= hi")
    rows = []
    for n in range(lo, hi + 1):
        f = l_ratio(n)
        if f is None:
            rows.append(ScanRow(n, None, (), status="not_applicable"))
            continue
        admissible = tuple(find_admissible_k(n, k_max) or ())
        if not admissible:
            rows.append(ScanRow(n, f, (), status="none"))
            continue
        k = admissible[0]
        rows.append(
            ScanRow(
                n,
                f,
                admissible,
                k_used=k,
                g_lo=two_step_ratio(n, k),
                g_hi=two_step_ratio(n - 1, k),
                status="ok",
            )
        )
    return rows


def terminal_bounds_scan(
    lo: int,
    hi: int,
    k_min: int = 3,
    k_max: int = 40,
    *,
    literal_radicand: bool = False,
) -> list[ScanRow]:
    """Compare the two-step ratios around k_used against the exact surd pair.

    For each n the row records whether

    - ``p(n+k+1)/p(n+k-1) <= (p(n+1)**2/p(n)**2) * (1 + sqrt(1-c))**2``
      (``upper_surd_ok``), and
    - ``p(n+k+2)/p(n+k) >= (p(n+1)**2/p(n)**2) * (1 - sqrt(1-c))**2``
      (``lower_surd_ok``),

    with ``c = p(n)p(n+2)/p(n+1)**2`` and k = k_used.  Neither direction is
    asserted anywhere; the rows are observations.  With `literal_radicand`
    the upper comparison instead uses ``(1 - sqrt(1+c))**2``, an audit
    variant that flips the radicand sign.
    """
    if k_min < 3:
        raise PreconditionError("k_min must be at least 3")
    if not 1 <= lo <= hi:
        raise PreconditionError("need 1 <= lo <= hi")
    rows = []
    p = partition_values(hi + k_max + 3)
    for n in range(lo, hi + 1):
        f = l_ratio(n)
        if f is None:
            rows.append(ScanRow(n, None, (), status="not_applicable"))
            continue
        admissible = tuple(find_admissible_k(n, k_max) or ())
        k = next((kk for kk in admissible if kk >= k_min), k_min)
        ratio_sq = Fraction(p[n + 1] * p[n + 1], p[n] * p[n])
        c = Fraction(p[n] * p[n + 2], p[n + 1] * p[n + 1])
        if c > 1:
            rows.append(ScanRow(n, f, admissible, status="not_applicable"))
            continue
        lower, upper = surd_bound_pair(ratio_sq, c)
        if literal_radicand:
            upper = SurdValue(ratio_sq * (2 + c), -2 * ratio_sq, 1 + c)
        upper_lhs = Fraction(p[n + k + 1], p[n + k - 1])
        lower_lhs = Fraction(p[n + k + 2], p[n + k])
        upper_ok = compare_rational_to_surd(upper_lhs, upper) is not Ordering.GREATER
        lower_ok = compare_rational_to_surd(lower_lhs, lower) is not Ordering.LESS
        rows.append(
            ScanRow(
                n,
                f,
                admissible,
                k_used=k,
                g_lo=lower_lhs,
                g_hi=upper_lhs,
                lower_surd_ok=lower_ok,
                upper_surd_ok=upper_ok,
                status="ok" if admissible else "none",
            )
        )
    return rows


def _optional_rational(value: Fraction | None) -> str:
    return "" if value is None else format_rational(value)


def scan_rows_to_csv(rows: list[ScanRow], *, surd_columns: bool = False) -> str:
    """CSV table: ``n,f_n,admissible_k,g_k_lo,g_k_hi,status`` (the admissible
    list is ';'-joined), plus k_used and the surd verdicts when requested."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    header = ["n", "f_n", "admissible_k", "g_k_lo", "g_k_hi", "status"]
    if surd_columns:
        header = header[:5] + ["k_used", "lower_surd_ok", "upper_surd_ok"] + header[5:]
    writer.writerow(header)
    for row in rows:
        cells = [
            row.n,
            _optional_rational(row.f_n),
            ";".join(str(k) for k in row.admissible_k),
            _optional_rational(row.g_lo),
            _optional_rational(row.g_hi),
        ]
        if surd_columns:
            cells += [
                "" if row.k_used is None else row.k_used,
                "" if row.lower_surd_ok is None else str(row.lower_surd_ok).lower(),
                "" if row.upper_surd_ok is None else str(row.upper_surd_ok).lower(),
            ]
        cells.append(row.status)
        writer.writerow(cells)
    return out.getvalue()


def scan_rows_to_json(rows: list[ScanRow]) -> str:
    payload = []
    for row in rows:
        payload.append(
            {
                "n": row.n,
                "f_n": None if row.f_n is None else format_rational(row.f_n),
                "admissible_k": list(row.admissible_k),
                "k_used": row.k_used,
                "g_k_lo": None if row.g_lo is None else format_rational(row.g_lo),
                "g_k_hi": None if row.g_hi is None else format_rational(row.g_hi),
                "lower_surd_ok": row.lower_surd_ok,
                "upper_surd_ok": row.upper_surd_ok,
                "status": row.status,
            }
        )
    return json.dumps(payload, indent=2)
