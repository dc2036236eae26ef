"""Exact distributions of the time a fair coin-tossing walk spends positive.

Four independent computation routes (closed formulas, a lattice recursion,
formal power-series expansion, exhaustive enumeration) plus a seeded Monte
Carlo check, all over exact rationals, with a harness that cross-verifies
them coefficient by coefficient.
"""

from .distributions import (
    Distribution,
    cdf,
    conditional_positive,
    even_distribution,
    odd_distribution,
    pgf,
)
from .errors import (
    CapExceeded,
    CoinwalkError,
    DomainError,
    InexactDivision,
    SqrtDomainError,
    ValuationError,
)
from .lattice import LatticeSlice, dp_pgf, dp_pgf_table, dp_step, initial_slice
from .legendre import (
    even_pgf,
    even_pgf_via_legendre,
    lagrange_series,
    legendre,
    odd_masses_via_partial_sums,
    odd_pgf_via_derivative,
    odd_pgf_via_parity_split,
    odd_pgf_via_ratio,
    odd_pgf_via_three_term,
)
from .montecarlo import (
    SimConfig,
    arcsine_cdf,
    arcsine_sup_distance,
    simulate,
    splitmix64,
    tv_distance,
    walk_steps,
)
from .oracle import (
    DEFAULT_CAP,
    PositivityRule,
    WalkStats,
    count_positive,
    enumerate_walks,
    oracle_conditional,
    oracle_distribution,
)
from .qpoly import QPoly, binomial, format_poly, return_prob
from .series import (
    BivariateSeries,
    extract_pgf,
    nonneg_series,
    pgf_series,
    pgf_series_even,
    pgf_series_odd,
    pgf_series_odd_ratio,
    pgf_series_ratio,
)
from .verify import ReportRow, VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "BivariateSeries",
    "CapExceeded",
    "CoinwalkError",
    "DEFAULT_CAP",
    "Distribution",
    "DomainError",
    "InexactDivision",
    "LatticeSlice",
    "PositivityRule",
    "QPoly",
    "ReportRow",
    "SimConfig",
    "SqrtDomainError",
    "ValuationError",
    "VerifyReport",
    "WalkStats",
    "arcsine_cdf",
    "arcsine_sup_distance",
    "binomial",
    "cdf",
    "conditional_positive",
    "count_positive",
    "dp_pgf",
    "dp_pgf_table",
    "dp_step",
    "enumerate_walks",
    "even_distribution",
    "even_pgf",
    "even_pgf_via_legendre",
    "extract_pgf",
    "format_poly",
    "initial_slice",
    "lagrange_series",
    "legendre",
    "nonneg_series",
    "odd_distribution",
    "odd_masses_via_partial_sums",
    "odd_pgf_via_derivative",
    "odd_pgf_via_parity_split",
    "odd_pgf_via_ratio",
    "odd_pgf_via_three_term",
    "oracle_conditional",
    "oracle_distribution",
    "pgf",
    "pgf_series",
    "pgf_series_even",
    "pgf_series_odd",
    "pgf_series_odd_ratio",
    "pgf_series_ratio",
    "return_prob",
    "run_verify",
    "simulate",
    "splitmix64",
    "tv_distance",
    "walk_steps",
]
