"""Workbench for switching games on lattice boards: boards, switch
families, exact and heuristic discrepancy solvers, adversarial instance
builders, closed-form expectations, a CLI, and an HTTP session service."""

from .adversary import (
    HardConfigCertificate,
    HardConfigSearchError,
    MinimaxResult,
    ZeroSwitchNote,
    build_remove_ii,
    build_remove_ii_delta,
    build_remove_iii,
    minimax,
    sample_hard_config,
    zero_switch_note,
)
from .analysis import (
    TrialStats,
    chernoff_bound,
    constant_names,
    expected_abs_sum,
    expected_abs_sum_asymptotic,
    gamma,
    run_trials,
    sample_sums,
    theorem_constant,
)
from .core import (
    Assignment,
    Board,
    BudgetExceededError,
    Cell,
    Configuration,
    CoverageReport,
    InvalidSplitError,
    PlayState,
    SwitchFamily,
    UnsupportedDimensionError,
    ValidationError,
    coverage_check,
    evaluate,
    flip,
    is_dense,
    projections,
)
from .gallery import demo_position, make_board, make_switches, x_cycles
from .solvers import (
    SolveResult,
    exact_max,
    exact_max_split,
    greedy_complete,
    hyperbola_solve,
    local_search,
    scramble_greedy,
    x_cycle_solve,
)

__all__ = [
    "Assignment",
    "Board",
    "BudgetExceededError",
    "Cell",
    "Configuration",
    "CoverageReport",
    "HardConfigCertificate",
    "HardConfigSearchError",
    "InvalidSplitError",
    "MinimaxResult",
    "PlayState",
    "SolveResult",
    "SwitchFamily",
    "TrialStats",
    "UnsupportedDimensionError",
    "ValidationError",
    "ZeroSwitchNote",
    "build_remove_ii",
    "build_remove_ii_delta",
    "build_remove_iii",
    "chernoff_bound",
    "constant_names",
    "coverage_check",
    "demo_position",
    "evaluate",
    "exact_max",
    "exact_max_split",
    "expected_abs_sum",
    "expected_abs_sum_asymptotic",
    "flip",
    "gamma",
    "greedy_complete",
    "hyperbola_solve",
    "is_dense",
    "local_search",
    "make_board",
    "make_switches",
    "minimax",
    "projections",
    "run_trials",
    "sample_hard_config",
    "sample_sums",
    "scramble_greedy",
    "theorem_constant",
    "x_cycle_solve",
    "x_cycles",
    "zero_switch_note",
]

__version__ = "0.1.0"
