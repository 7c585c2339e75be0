"""The configuration side of the game: exact min-max over all deals,
random search for certified-hard deals, and explicit hostile constructions
for boards with missing switches.

minimax answers "what is the worst deal?" by scanning configurations and
solving each one exactly.  Configurations related by pre-applying a switch
assignment have the same maximum, so on a full rectangle with all row and
column switches the scan only needs deals whose first row and column are
all +1 (flip columns to fix row 1, then rows to fix column 1); that cuts
square(n) from 2^(n^2) to 2^((n-1)^2) deals.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from . import rng
from .core import (
    Board,
    BudgetExceededError,
    Configuration,
    SwitchFamily,
    ValidationError,
    coverage_check,
)
from .gallery import make_board, make_switches
from .solvers import SolveResult, _SplitEvaluator, exact_max, exact_max_split


@dataclass(frozen=True)
class MinimaxResult:
    value: int
    witness_config: Configuration
    configs_scanned: int


@dataclass(frozen=True)
class HardConfigCertificate:
    config: Configuration
    certified_max: int
    lam: float
    tries: int


class HardConfigSearchError(RuntimeError):
    """No sampled configuration met the threshold; .best holds the record."""

    def __init__(self, message: str, best: Optional[HardConfigCertificate]):
        super().__init__(message)
        self.best = best


def _is_full_rows_cols(board: Board, family: SwitchFamily) -> bool:
    """True when the board is a full rectangle carrying exactly the
    one-switch-per-row-and-column family (any order)."""
    if board.dim != 2:
        return False
    u = max(c[0] for c in board.cells)
    v = max(c[1] for c in board.cells)
    if board.area != u * v:
        return False
    expected = {}
    for i in range(1, u + 1):
        expected[f"row:{i}"] = tuple((i, j) for j in range(1, v + 1))
    for j in range(1, v + 1):
        expected[f"col:{j}"] = tuple((i, j) for i in range(1, u + 1))
    actual = dict(zip(family.ids, family.members))
    return actual == expected


def _pick_split(board: Board, family: SwitchFamily) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    """Choose (enumerated, greedy) groups: the smaller side of a
    cell-disjoint 2-partition when one exists, else enumerate everything."""
    report = coverage_check(board, family)
    if report.disjoint_groups is None:
        return tuple(family.ids), ()
    g0, g1 = report.disjoint_groups
    enum, greedy = (g0, g1) if len(g0) <= len(g1) else (g1, g0)
    order = family.id_position
    return (tuple(sorted(enum, key=order.__getitem__)),
            tuple(sorted(greedy, key=order.__getitem__)))


_CFG_TARGET = 1 << 22


def _scan_chunk(ev: _SplitEvaluator, free_pos: np.ndarray, area: int,
                lo: int, hi: int) -> Tuple[int, int]:
    """(min over configs of max over assignments, packed index of the first
    config attaining it) for config indices [lo, hi)."""
    f = np.arange(lo, hi, dtype=np.uint64)
    cfg = np.ones((hi - lo, area), dtype=np.float64)
    if len(free_pos):
        bits = (f[:, None] >> np.arange(len(free_pos), dtype=np.uint64)[None, :]) & np.uint64(1)
        cfg[:, free_pos] = 1.0 - 2.0 * bits.astype(np.float64)
    maxvals = None
    for e_lo in range(0, ev.n_assignments, 1 << 14):
        e_hi = min(e_lo + (1 << 14), ev.n_assignments)
        vals = ev.values(cfg, ev.sign_block(e_lo, e_hi)).max(axis=1)
        maxvals = vals if maxvals is None else np.maximum(maxvals, vals)
    k = int(maxvals.argmin())
    return int(round(maxvals[k])), lo + k


def minimax(board: Board, family: SwitchFamily, canonicalize: bool = True,
            config_cap: int = 1 << 25, jobs: int = 1) -> MinimaxResult:
    """Exact min over configurations of the max over assignments.

    The witness is the first minimizing configuration in ascending packed
    order, independent of chunking or thread count.
    """
    ids = list(board.cells)
    if canonicalize and _is_full_rows_cols(board, family):
        free_cells = [c for c in board.cells if c[0] != 1 and c[1] != 1]
    else:
        free_cells = ids
    F = len(free_cells)
    total = 1 << F
    if total > config_cap:
        raise BudgetExceededError(
            f"scan needs {total} configurations, cap is {config_cap}", required=total)
    enum_ids, greedy_ids = _pick_split(board, family)
    if len(enum_ids) > 25:
        raise BudgetExceededError(
            f"each configuration needs {1 << len(enum_ids)} assignments",
            required=1 << len(enum_ids))
    ev = _SplitEvaluator(board, family, enum_ids, greedy_ids)
    free_pos = np.fromiter((board.position[c] for c in free_cells), dtype=np.int64, count=F)

    chunk = max(64, min(1 << 12, _CFG_TARGET // max(1, ev.n_assignments * board.area)))
    spans = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    if jobs > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(
                lambda s: _scan_chunk(ev, free_pos, board.area, s[0], s[1]), spans))
    else:
        results = [_scan_chunk(ev, free_pos, board.area, lo, hi) for lo, hi in spans]
    best_val, best_f = None, 0
    for val, f in results:
        if best_val is None or val < best_val:
            best_val, best_f = val, f

    packed = 0
    for k in range(F):
        if (best_f >> k) & 1:
            packed |= 1 << int(free_pos[k])
    witness = Configuration.from_packed(board, packed)
    return MinimaxResult(value=best_val, witness_config=witness, configs_scanned=total)


def _solve_for_certificate(board: Board, family: SwitchFamily,
                           config: Configuration) -> SolveResult:
    enum_ids, greedy_ids = _pick_split(board, family)
    if greedy_ids and len(enum_ids) <= 30:
        return exact_max_split(board, family, config, enum_ids, greedy_ids)
    return exact_max(board, family, config)


def sample_hard_config(board: Board, family: SwitchFamily, lam: float,
                       max_tries: int, rng_seed: int) -> HardConfigCertificate:
    """Sample uniform configurations until one's exact maximum is <= lam.

    Each certificate is verified by the exact solver, never by the tail
    bound that motivates it.  Try t uses the derived seed (rng_seed, t).
    """
    if max_tries < 1:
        raise ValidationError("max_tries must be at least 1")
    best: Optional[HardConfigCertificate] = None
    for t in range(1, max_tries + 1):
        config = Configuration.random(board, rng.derive(rng_seed, t))
        result = _solve_for_certificate(board, family, config)
        if best is None or result.value < best.certified_max:
            best = HardConfigCertificate(config=config, certified_max=result.value,
                                         lam=lam, tries=t)
        if result.value <= lam:
            return HardConfigCertificate(config=config, certified_max=result.value,
                                         lam=lam, tries=t)
    raise HardConfigSearchError(
        f"no configuration with max <= {lam} in {max_tries} tries "
        f"(best seen: {best.certified_max})", best=best)


def build_remove_ii(n: int, a: int, b: int, rng_seed: int) -> Configuration:
    """Hostile deal for restricted(a, b) switches: the switch-free block
    (rows > b, columns > a) is all -1, everything else uniform random."""
    if not (0 <= a <= n and 0 <= b <= n):
        raise ValidationError(f"need 0 <= a,b <= n, got a={a}, b={b}, n={n}")
    board = make_board("square", n=n)
    signs = rng.sign_array(rng_seed, board.area).astype(np.int64)
    values = {}
    for cell, s in zip(board.cells, signs):
        values[cell] = -1 if (cell[0] > b and cell[1] > a) else int(s)
    return Configuration.from_map(board, values)


def build_remove_ii_delta(n: int, delta: float, rng_seed: int) -> Configuration:
    """Convenience wrapper: a = b = round((1-delta)*n)."""
    if not 0 <= delta <= 1:
        raise ValidationError(f"delta must be in [0, 1], got {delta}")
    a = round((1 - delta) * n)
    return build_remove_ii(n, a, a, rng_seed)


def build_remove_iii(n: int, a: int, b: int) -> Configuration:
    """Hostile deal for restricted(a, b) with a+b = n: two -1 blocks on the
    controlled corners, chessboard on the other two.

    The chessboard blocks are a x a and b x b; when both are odd, one block
    gets the opposite phase so their +-1 sums cancel and the total stays
    exactly -2b(n-b).
    """
    if a + b != n or not a >= b >= 1:
        raise ValidationError(f"need a+b=n and a >= b >= 1, got a={a}, b={b}, n={n}")
    board = make_board("square", n=n)
    flip_phase = 1 if (a % 2 == 1 and b % 2 == 1) else 0
    values = {}
    for (i, j) in board.cells:
        if (i <= b and j <= a) or (i > b and j > a):
            values[(i, j)] = -1
        elif i > b and j <= a:
            values[(i, j)] = (-1) ** (i + j)
        else:
            values[(i, j)] = (-1) ** (i + j + flip_phase)
    return Configuration.from_map(board, values)


@dataclass(frozen=True)
class ZeroSwitchNote:
    n: int
    witness_config: Configuration
    witness_max: int
    explanation: str


def zero_switch_note(n: int) -> ZeroSwitchNote:
    """The columns-only game is worth exactly zero for even n.

    With only column switches the best value is the sum of |column sum|
    over columns, which is never negative; a deal whose every column is
    half +1, half -1 pins it at zero.  The returned witness is that deal,
    with its maximum re-verified by the solver.
    """
    if n < 2 or n % 2:
        raise ValidationError("the zero-value witness needs an even n >= 2")
    board = make_board("square", n=n)
    family = make_switches(board, "restricted", a=n, b=0)
    values = {(i, j): 1 if i <= n // 2 else -1 for (i, j) in board.cells}
    config = Configuration.from_map(board, values)
    verified = exact_max_split(board, family, config, (), "col")
    return ZeroSwitchNote(
        n=n, witness_config=config, witness_max=verified.value,
        explanation="columns-only play maximizes sum of |column sums|, so the "
                    "value is never negative and balanced columns make it zero")
