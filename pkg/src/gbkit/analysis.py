"""Closed-form expectations, tail bounds, named constants, and repeated
randomized-strategy statistics.

S_n denotes a sum of n independent uniform +-1 variables.  Its exact mean
absolute value n * 2^(1-n) * C(n-1, floor((n-1)/2)) is kept as a rational
(binomials overflow 64 bits long before n hits the board sizes used here);
the Stirling form sqrt(2/pi) * sqrt(n) and the tail bound exp(-l^2/2n) are
plain floats.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from . import rng
from .core import Assignment, Board, Configuration, SwitchFamily, ValidationError
from .gallery import x_board_n
from .solvers import (
    GroupSpec,
    hyperbola_solve,
    local_search,
    scramble_greedy,
    x_cycle_solve,
)


def expected_abs_sum(n: int) -> Fraction:
    """E|S_n| exactly: n * 2^(1-n) * C(n-1, floor((n-1)/2))."""
    if n < 1:
        raise ValidationError("n must be at least 1")
    return Fraction(n * math.comb(n - 1, (n - 1) // 2), 2 ** (n - 1))


def expected_abs_sum_asymptotic(n: int) -> float:
    """Stirling form of E|S_n|: sqrt(2/pi) * sqrt(n)."""
    if n < 1:
        raise ValidationError("n must be at least 1")
    return math.sqrt(2.0 / math.pi) * math.sqrt(n)


def chernoff_bound(n: int, lam: float) -> float:
    """Upper bound on Pr[S_n > lam]: exp(-lam^2 / 2n)."""
    if n < 1:
        raise ValidationError("n must be at least 1")
    if lam <= 0:
        raise ValidationError("lambda must be positive")
    return math.exp(-lam * lam / (2.0 * n))


def gamma(s: float) -> float:
    """Gamma function (stdlib implementation, 1e-15 relative accuracy)."""
    if s <= 0 and float(s).is_integer():
        raise ValidationError(f"gamma has a pole at {s}")
    try:
        return math.gamma(s)
    except ValueError:
        raise ValidationError(f"gamma undefined at {s}") from None


_CONSTANTS: Dict[str, Callable[[], float]] = {
    "square_lower": lambda: math.sqrt(2.0 / math.pi),
    "square_upper": lambda: 2.0 * math.sqrt(math.log(2.0)),
    "rotated_square_lower": lambda: (2.0 / 3.0) * math.sqrt(2.0 / math.pi),
    "rotated_square_upper": lambda: math.sqrt(2.0 * math.log(2.0)),
    "disk_lower": lambda: math.pi / (abs(gamma(-0.25)) * gamma(1.75)),
    "disk_upper": lambda: math.pi ** 0.25 * math.sqrt(math.log(2.0)),
    "diag_factor": lambda: 4.0 / 3.0,
    "cube_lower": lambda: math.sqrt(2.0 / math.pi),
    "cube_upper": lambda: math.sqrt(6.0 * math.log(2.0)),
}


def constant_names() -> Tuple[str, ...]:
    return tuple(_CONSTANTS)


def theorem_constant(name: str) -> float:
    """Named constants of the bound theorems (value scales with n^(3/2),
    A^(3/4), or n^2 depending on the board family; see README table)."""
    try:
        return _CONSTANTS[name]()
    except KeyError:
        raise ValidationError(
            f"unknown constant {name!r}; valid names: {', '.join(_CONSTANTS)}") from None


def sample_sums(n: int, count: int, seed: int) -> np.ndarray:
    """count independent samples of S_n, as an int32 array."""
    if n < 1 or count < 1:
        raise ValidationError("n and count must be at least 1")
    signs = rng.sign_array(seed, n * count).astype(np.int32)
    return signs.reshape(count, n).sum(axis=1)


@dataclass(frozen=True)
class TrialStats:
    trials: int
    mean: float
    sample_std: float
    std_err: float
    ci95: Tuple[float, float]
    single_sample: bool = False

    def to_doc(self) -> dict:
        return {
            "trials": self.trials,
            "mean": self.mean,
            "std": self.sample_std,
            "stderr": self.std_err,
            "ci95": [self.ci95[0], self.ci95[1]],
        }


StrategyFn = Callable[[Board, SwitchFamily, Configuration, int], int]


def _make_strategy(name: str, scramble: GroupSpec, greedy: GroupSpec) -> StrategyFn:
    if name == "scramble-greedy":
        if scramble is None or greedy is None:
            raise ValidationError("scramble-greedy needs scramble and greedy groups")

        def run(board, family, config, seed):
            return scramble_greedy(board, family, config, scramble, greedy, seed).value
    elif name == "local-search":
        def run(board, family, config, seed):
            return local_search(board, family, config, Assignment.identity(family)).value
    elif name == "hyperbola":
        def run(board, family, config, seed):
            return hyperbola_solve(max(c[0] for c in board.cells), config).value
    elif name == "x-cycle":
        def run(board, family, config, seed):
            x_board_n(board)
            return x_cycle_solve(board, config).value
    else:
        raise ValidationError(
            f"unknown strategy {name!r}; valid: scramble-greedy, local-search, "
            "hyperbola, x-cycle")
    return run


def run_trials(board: Board, family: SwitchFamily, strategy: str, trials: int,
               seed: int, config: Optional[Configuration] = None,
               scramble: GroupSpec = None, greedy: GroupSpec = None,
               jobs: int = 1) -> TrialStats:
    """Run a named strategy `trials` times and aggregate the values.

    Trial t plays on Configuration.random(board, derive(seed, t, 1)) (or the
    fixed config when one is supplied) with strategy seed derive(seed, t, 0),
    so statistics are identical for any execution order or thread count.
    """
    if trials < 1:
        raise ValidationError("trials must be at least 1")
    fn = _make_strategy(strategy, scramble, greedy)

    def one(t: int) -> float:
        cfg = config if config is not None else Configuration.random(
            board, rng.derive(seed, t, 1))
        return float(fn(board, family, cfg, rng.derive(seed, t, 0)))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = np.fromiter(pool.map(one, range(trials)), dtype=np.float64,
                                 count=trials)
    else:
        values = np.fromiter((one(t) for t in range(trials)), dtype=np.float64,
                             count=trials)
    mean = float(values.mean())
    if trials == 1:
        return TrialStats(trials=1, mean=mean, sample_std=0.0, std_err=0.0,
                          ci95=(mean, mean), single_sample=True)
    std = float(values.std(ddof=1))
    err = std / math.sqrt(trials)
    return TrialStats(trials=trials, mean=mean, sample_std=std, std_err=err,
                      ci95=(mean - 1.96 * err, mean + 1.96 * err))
