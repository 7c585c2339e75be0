"""Maximize signed discrepancy over switch assignments.

Exact routes:

  exact_max        full enumeration of all 2^S assignments, Gray-code order,
                   so each step updates only one switch's cells.
  exact_max_split  enumerate one switch group, optimize the other greedily.
                   Valid whenever the greedy group is pairwise cell-disjoint:
                   with the enumerated signs fixed, each greedy switch's
                   contribution |sum over its cells| is maximized
                   independently, and cells under neither group are constant.

Heuristic / constructive routes:

  scramble_greedy  randomize one group, set each greedy switch non-negative.
  greedy_complete  same second phase with the first group's signs supplied.
  local_search     steepest-ascent single flips from a given start.
  x_cycle_solve    optimal play on X boards via their concentric 4-cycles.
  hyperbola_solve  deterministic play on hyperbola boards worth at least n.

Every result satisfies evaluate(board, family, config, assignment) == value.
All tie-breaks are deterministic: lexicographic over switch signs in family
order with +1 before -1, and greedy switches take +1 on a zero sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import rng
from .core import (
    Assignment,
    Board,
    BudgetExceededError,
    Configuration,
    InvalidSplitError,
    PlayState,
    SwitchFamily,
    ValidationError,
    _check_config,
    effective_vector,
    evaluate,
)
from .gallery import make_board, make_switches, x_board_n, x_cycles

GroupSpec = Union[str, Iterable[str]]


@dataclass(frozen=True)
class SolveResult:
    value: int
    assignment: Assignment
    nodes_explored: int


def _group(family: SwitchFamily, which: GroupSpec) -> Tuple[str, ...]:
    if which is None:
        return ()
    if isinstance(which, str):
        return family.select(which)
    ids = list(which)
    return family.select(ids) if ids else ()


def _check_disjoint_groups(a: Sequence[str], b: Sequence[str]) -> None:
    overlap = set(a) & set(b)
    if overlap:
        raise InvalidSplitError(f"switch {sorted(overlap)[0]!r} appears in both groups")


def _greedy_cover(family: SwitchFamily, greedy_ids: Sequence[str]) -> np.ndarray:
    """Count of greedy switches covering each cell; rejects overlaps."""
    count = np.zeros(family.board.area, dtype=np.int32)
    for sid in greedy_ids:
        count[family.member_index[family.id_position[sid]]] += 1
    if count.max(initial=0) > 1:
        cell = family.board.cells[int(count.argmax())]
        raise InvalidSplitError(f"greedy switches overlap at cell {cell}")
    return count


class _SplitEvaluator:
    """Vectorized evaluation of a (enumerated, greedy) switch split.

    For an enumerated-assignment integer e, switch p of enum_ids is pulled
    iff bit (E-1-p) of e is set, so ascending e is lexicographic order over
    the enumerated signs with +1 before -1 and the first maximum found by
    argmax is the lexicographically smallest maximizer.
    """

    def __init__(self, board: Board, family: SwitchFamily,
                 enum_ids: Sequence[str], greedy_ids: Sequence[str]):
        if len(enum_ids) > 63:
            raise BudgetExceededError(
                f"cannot enumerate {len(enum_ids)} switches", required=2 ** len(enum_ids))
        self.board = board
        self.family = family
        self.enum_ids = tuple(enum_ids)
        self.greedy_ids = tuple(greedy_ids)
        E = len(enum_ids)
        self.E = E
        self.n_assignments = 1 << E
        mask = np.zeros(board.area, dtype=np.uint64)
        for p, sid in enumerate(enum_ids):
            idx = family.member_index[family.id_position[sid]]
            mask[idx] ^= np.uint64(1 << (E - 1 - p))
        self.enum_mask = mask
        cover = _greedy_cover(family, greedy_ids)
        self.member = np.zeros((board.area, len(greedy_ids)), dtype=np.float64)
        for d, sid in enumerate(greedy_ids):
            self.member[family.member_index[family.id_position[sid]], d] = 1.0
        self.loose = (cover == 0).astype(np.float64)

    def sign_block(self, e_lo: int, e_hi: int) -> np.ndarray:
        """(-1)^(pulled switches covering cell), shape (e_hi-e_lo, area)."""
        e = np.arange(e_lo, e_hi, dtype=np.uint64)
        parity = np.bitwise_count(e[:, None] & self.enum_mask[None, :]) & np.uint64(1)
        return 1.0 - 2.0 * parity.astype(np.float64)

    def values(self, cfg_signs: np.ndarray, block: np.ndarray) -> np.ndarray:
        """Best value per (config, enumerated assignment).

        cfg_signs: (C, area) float; block: (K, area) from sign_block.
        Returns (C, K): sum of |greedy sums| plus the fixed cells.
        """
        eff = cfg_signs[:, None, :] * block[None, :, :]
        flat = eff.reshape(-1, eff.shape[2])
        vals = np.abs(flat @ self.member).sum(axis=1) + flat @ self.loose
        return vals.reshape(eff.shape[0], eff.shape[1])

    def greedy_signs(self, cfg_signs: np.ndarray, e: int) -> List[int]:
        """Greedy switch signs for one config row and one enum assignment."""
        eff = (cfg_signs * self.sign_block(e, e + 1)[0])
        sums = eff @ self.member
        return [-1 if s < 0 else 1 for s in sums]

    def enum_signs(self, e: int) -> List[int]:
        return [-1 if (e >> (self.E - 1 - p)) & 1 else 1 for p in range(self.E)]


def exact_max(board: Board, family: SwitchFamily, config: Configuration,
              cap: int = 30) -> SolveResult:
    """Global maximum by enumerating every assignment.

    Gray-code order: consecutive assignments differ in one switch, so each
    step re-sums only that switch's cells.  Among maximizers, returns the
    lexicographically smallest in family order (+1 before -1).
    """
    _check_config(board, config)
    S = len(family)
    if S > cap:
        raise BudgetExceededError(
            f"{S} switches exceed the enumeration cap of {cap}", required=1 << S)
    eff = config.vector.astype(np.int32)
    idx = family.member_index
    value = int(eff.sum())
    best_val, best_key, best_mask = value, 0, 0
    cur_key = cur_mask = 0
    for k in range(1, 1 << S):
        p = (k & -k).bit_length() - 1
        ii = idx[p]
        seg = eff[ii]
        value -= 2 * int(seg.sum())
        eff[ii] = -seg
        bit_key = 1 << (S - 1 - p)
        cur_key ^= bit_key
        cur_mask ^= 1 << p
        if value > best_val or (value == best_val and cur_key < best_key):
            best_val, best_key, best_mask = value, cur_key, cur_mask
    signs = {sid: -1 if (best_mask >> p) & 1 else 1 for p, sid in enumerate(family.ids)}
    return SolveResult(value=best_val, assignment=Assignment(signs), nodes_explored=1 << S)


_E_CHUNK = 1 << 14


def exact_max_split(board: Board, family: SwitchFamily, config: Configuration,
                    enum_group: GroupSpec, greedy_group: GroupSpec,
                    cap: int = 30) -> SolveResult:
    """Global maximum via enumerate-one-group / greedy-other-group.

    Requires the two groups to partition the family and the greedy group to
    be pairwise cell-disjoint; then for each enumerated sign vector every
    greedy switch is optimized independently, so the best over enumerated
    vectors is the true global maximum.
    """
    _check_config(board, config)
    enum_ids = _group(family, enum_group)
    greedy_ids = _group(family, greedy_group)
    _check_disjoint_groups(enum_ids, greedy_ids)
    if set(enum_ids) | set(greedy_ids) != set(family.ids):
        missing = sorted(set(family.ids) - set(enum_ids) - set(greedy_ids))
        raise InvalidSplitError(f"switch {missing[0]!r} is in neither group")
    if len(enum_ids) > cap:
        raise BudgetExceededError(
            f"{len(enum_ids)} enumerated switches exceed the cap of {cap}",
            required=1 << len(enum_ids))
    ev = _SplitEvaluator(board, family, enum_ids, greedy_ids)
    cfg = config.vector.astype(np.float64)[None, :]
    best_val, best_e = None, 0
    for lo in range(0, ev.n_assignments, _E_CHUNK):
        hi = min(lo + _E_CHUNK, ev.n_assignments)
        vals = ev.values(cfg, ev.sign_block(lo, hi))[0]
        k = int(vals.argmax())
        v = int(round(vals[k]))
        if best_val is None or v > best_val:
            best_val, best_e = v, lo + k
    signs = dict(zip(enum_ids, ev.enum_signs(best_e)))
    signs.update(zip(greedy_ids, ev.greedy_signs(cfg[0], best_e)))
    return SolveResult(value=best_val, assignment=Assignment(signs),
                       nodes_explored=ev.n_assignments)


def _greedy_phase(board: Board, family: SwitchFamily, config: Configuration,
                  fixed_signs: dict, greedy_ids: Sequence[str], nodes: int) -> SolveResult:
    """Complete an assignment by making each greedy switch's sum non-negative."""
    _greedy_cover(family, greedy_ids)
    signs = {sid: 1 for sid in family.ids}
    signs.update(fixed_signs)
    eff = effective_vector(family, config, signs)
    for sid in greedy_ids:
        s = int(eff[family.member_index[family.id_position[sid]]].sum())
        signs[sid] = -1 if s < 0 else 1
    assignment = Assignment(signs)
    return SolveResult(value=evaluate(board, family, config, assignment),
                       assignment=assignment, nodes_explored=nodes)


def scramble_greedy(board: Board, family: SwitchFamily, config: Configuration,
                    scramble_group: GroupSpec, greedy_group: GroupSpec,
                    rng_seed: int) -> SolveResult:
    """Random signs on one group, then greedy signs on a cell-disjoint group.

    Switches in neither group stay at +1.  Scramble signs are drawn in
    family order from the counter stream of rng_seed.
    """
    _check_config(board, config)
    scramble_ids = _group(family, scramble_group)
    greedy_ids = _group(family, greedy_group)
    _check_disjoint_groups(scramble_ids, greedy_ids)
    draws = rng.sign_array(rng_seed, len(scramble_ids))
    fixed = {sid: int(s) for sid, s in zip(scramble_ids, draws)}
    return _greedy_phase(board, family, config, fixed, greedy_ids, nodes=1)


def greedy_complete(board: Board, family: SwitchFamily, config: Configuration,
                    fixed: Assignment, greedy_group: GroupSpec) -> SolveResult:
    """Deterministic second phase: given signs, optimize the greedy group."""
    _check_config(board, config)
    greedy_ids = _group(family, greedy_group)
    for sid in fixed:
        if sid not in family.id_position:
            raise ValidationError(f"unknown switch id {sid!r} in fixed signs")
    _check_disjoint_groups(tuple(fixed), greedy_ids)
    return _greedy_phase(board, family, config, dict(fixed), greedy_ids, nodes=1)


def local_search(board: Board, family: SwitchFamily, config: Configuration,
                 start: Optional[Assignment] = None) -> SolveResult:
    """Steepest ascent: flip the best positive-gain switch until none helps.

    Ties on gain go to the lexicographically smallest switch id.  Each flip
    strictly increases the score, so termination is immediate from the
    value bound.  nodes_explored counts flips taken.
    """
    if start is None:
        start = Assignment.identity(family)
    state = PlayState(board, family, config, start)
    flips = 0
    while True:
        sid, gain = state.best_flip()
        if sid is None or gain <= 0:
            break
        state.flip(sid)
        flips += 1
    return SolveResult(value=state.score, assignment=state.assignment(),
                       nodes_explored=flips)


def x_cycle_solve(board: Board, config: Configuration) -> SolveResult:
    """Optimal rows+columns play on an X board.

    The board splits into concentric 4-cycles (plus a center for odd n);
    each cycle is touched by exactly the four switches row g, row n+1-g,
    col g, col n+1-g, so cycles are optimized independently by brute force
    over those switches.  A 4-cycle reaches +4 when it holds an even number
    of -1s and +2 otherwise; the center always reaches +1.
    """
    n = x_board_n(board)
    _check_config(board, config)
    family = make_switches(board, "rows_cols")
    signs = {sid: 1 for sid in family.ids}
    total = 0
    nodes = 0
    for cells in x_cycles(board):
        g = cells[0][0]
        h = n + 1 - g
        if len(cells) == 1:
            sw = (f"row:{g}", f"col:{g}")
        else:
            sw = (f"row:{g}", f"row:{h}", f"col:{g}", f"col:{h}")
        L = len(sw)
        best_s, best_combo = None, 0
        for combo in range(1 << L):
            local = {s: -1 if (combo >> (L - 1 - p)) & 1 else 1 for p, s in enumerate(sw)}
            s = sum(config.value(c) * local[f"row:{c[0]}"] * local[f"col:{c[1]}"]
                    for c in cells)
            nodes += 1
            if best_s is None or s > best_s:
                best_s, best_combo = s, combo
        for p, s in enumerate(sw):
            signs[s] = -1 if (best_combo >> (L - 1 - p)) & 1 else 1
        total += best_s
    return SolveResult(value=total, assignment=Assignment(signs), nodes_explored=nodes)


def hyperbola_solve(n: int, config: Configuration) -> SolveResult:
    """Deterministic rows+columns play on hyperbola(n) worth at least n.

    Column j is set to the sign of cell (1, j), turning the n-cell first
    row all +1; every other row switch then makes its row non-negative.
    """
    board = make_board("hyperbola", n=n)
    _check_config(board, config)
    family = make_switches(board, "rows_cols")
    signs = {f"col:{j}": config.value((1, j)) for j in range(1, n + 1)}
    signs["row:1"] = 1
    value = n
    for i in range(2, n + 1):
        row_sum = sum(config.value((i, y)) * signs[f"col:{y}"] for y in range(1, n // i + 1))
        signs[f"row:{i}"] = -1 if row_sum < 0 else 1
        value += abs(row_sum)
    return SolveResult(value=value, assignment=Assignment(signs), nodes_explored=1)
