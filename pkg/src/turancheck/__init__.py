"""Exact-arithmetic verification of log-concavity hierarchies.

The package decides Turán-type inequalities, higher-order Turán
inequalities, k-log-concavity, two-sided quadratic-surd ratio bounds, and
polynomial real-rootedness over arbitrary-precision rationals, and ships
scans that exercise all of it on the integer partition function.  Every
verdict is exact; nothing is ever rounded on a decision path.
"""

from .checks import (
    CheckRecord,
    CheckReport,
    CheckStatus,
    chain_bounds_check,
    chain_bounds_report,
    convexity_check,
    criterion_r_check,
    first_all_holds_start,
    higher_turan_check,
    higher_turan_report,
    is_k_log_concave,
    is_log_concave,
    l_increasing_check,
    l_operator,
    neighbor_bounds_check,
    neighbor_bounds_report,
    ratio_down_convexity_check,
    ratio_up_convexity_check,
    reciprocal_bound_scan,
    surd_bounds_check,
    surd_bounds_report,
)
from .exact import (
    DomainError,
    Ordering,
    PreconditionError,
    Rational,
    SurdValue,
    as_rational,
    compare_rational_to_surd,
    format_rational,
    parse_rational,
    rational_sqrt,
    surd_bound_pair,
)
from .partition import (
    HIERARCHY_THRESHOLDS,
    TABULATED_RANGES,
    ScanRow,
    admissible_scan,
    delta_increasing_scan,
    find_admissible_k,
    hierarchy_scan,
    hierarchy_verdicts,
    l_ratio,
    terminal_bounds_scan,
    two_step_ratio,
    verify_tabulated_ranges,
)
from .realroots import (
    HypothesisError,
    RootCertificate,
    SturmChain,
    branden_check,
    certify,
    marik_check,
    sturm_chain,
)
from .sequences import (
    ParseError,
    PolynomialCoeffs,
    SequenceWindow,
    gen_binomial_row,
    gen_geometric_logconcave,
    gen_hermite,
    gen_laguerre,
    gen_partition,
    load_csv,
    normalize_binomial,
    normalize_factorial,
    partition_values,
)

__version__ = "0.1.0"
