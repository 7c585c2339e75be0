"""Boards, switch families, ±1 configurations, and the signed discrepancy.

A board is a finite set of 1-based lattice cells in dimension 2 or 3.
Switches are named subsets of board cells; toggling a switch negates every
light it covers.  The signed discrepancy of a position is the number of
lights on minus the number off:

    f = sum over cells c of  a_c * prod of the signs of switches covering c

A cell may sit under zero, one, two, or three switches; cells no switch
covers simply keep their initial value, which is what makes downgraded
boards (missing row/column switches) and the cubic board fit one evaluator.

Conventions: the first coordinate is the row index, the second the column
index, the optional third the layer index.  Cells are kept sorted by
coordinates; that order is the canonical cell order used for packing a
configuration into an integer (bit k set = cell k is -1) so that
enumeration and hashing are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from . import rng

Cell = Tuple[int, ...]


class ValidationError(ValueError):
    """Malformed or inconsistent input (bad cells, missing signs, bad specs)."""


class UnsupportedDimensionError(ValidationError):
    """Operation defined only for planar boards was asked of a 3-D board."""


class InvalidSplitError(ValidationError):
    """enum/greedy switch groups violate the split solver's preconditions."""


class BudgetExceededError(RuntimeError):
    """Enumeration would exceed the configured cap.

    `required` carries the number of states the request would have scanned,
    so a caller can raise the cap deliberately.
    """

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


def _check_cell(cell) -> Cell:
    if not isinstance(cell, tuple) or len(cell) not in (2, 3):
        raise ValidationError(f"cell {cell!r} must be a coordinate tuple of length 2 or 3")
    for c in cell:
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise ValidationError(f"cell {cell!r} has non-positive or non-integer coordinate")
    return cell


@dataclass(frozen=True)
class Board:
    """A finite set of lattice cells, all of one dimension."""

    cells: Tuple[Cell, ...]
    dim: int

    @classmethod
    def from_cells(cls, cells: Iterable[Sequence[int]]) -> "Board":
        seen = set()
        for raw in cells:
            cell = _check_cell(tuple(raw))
            if cell in seen:
                raise ValidationError(f"duplicate cell {cell}")
            seen.add(cell)
        if not seen:
            raise ValidationError("a board needs at least one cell")
        dims = {len(c) for c in seen}
        if len(dims) != 1:
            raise ValidationError("all cells on a board must have the same dimension")
        return cls(cells=tuple(sorted(seen)), dim=dims.pop())

    @property
    def area(self) -> int:
        return len(self.cells)

    @cached_property
    def position(self) -> Dict[Cell, int]:
        """Cell -> index in canonical (sorted) order."""
        return {cell: k for k, cell in enumerate(self.cells)}

    def __contains__(self, cell) -> bool:
        return cell in self.position

    def __repr__(self) -> str:
        return f"Board(dim={self.dim}, area={self.area})"


@dataclass(frozen=True)
class SwitchFamily:
    """Named switches over one board; order of `ids` is the family order."""

    board: Board
    ids: Tuple[str, ...]
    members: Tuple[Tuple[Cell, ...], ...]

    @classmethod
    def from_pairs(cls, board: Board, pairs: Iterable[Tuple[str, Iterable[Cell]]]) -> "SwitchFamily":
        ids: List[str] = []
        members: List[Tuple[Cell, ...]] = []
        seen = set()
        for sid, cells in pairs:
            if not isinstance(sid, str) or not sid:
                raise ValidationError(f"switch id {sid!r} must be a non-empty string")
            if sid in seen:
                raise ValidationError(f"duplicate switch id {sid!r}")
            seen.add(sid)
            member = tuple(sorted({tuple(c) for c in cells}))
            for cell in member:
                if cell not in board:
                    raise ValidationError(f"switch {sid!r} references cell {cell} not on the board")
            ids.append(sid)
            members.append(member)
        return cls(board=board, ids=tuple(ids), members=tuple(members))

    def __len__(self) -> int:
        return len(self.ids)

    @cached_property
    def id_position(self) -> Dict[str, int]:
        return {sid: k for k, sid in enumerate(self.ids)}

    @cached_property
    def member_index(self) -> Tuple[np.ndarray, ...]:
        """Per switch: board positions of its cells (int32 arrays)."""
        pos = self.board.position
        return tuple(
            np.fromiter((pos[c] for c in member), dtype=np.int32, count=len(member))
            for member in self.members
        )

    def member(self, switch_id: str) -> Tuple[Cell, ...]:
        try:
            return self.members[self.id_position[switch_id]]
        except KeyError:
            raise ValidationError(f"unknown switch id {switch_id!r}") from None

    def select(self, which) -> Tuple[str, ...]:
        """Resolve a group spec to switch ids in family order.

        A string selects by id prefix ("col" matches "col:3" and a switch
        literally named "col"); an iterable passes explicit ids through.
        """
        if isinstance(which, str):
            picked = tuple(s for s in self.ids if s == which or s.startswith(which + ":"))
            if not picked:
                raise ValidationError(f"no switches match prefix {which!r}")
            return picked
        wanted = list(which)
        for sid in wanted:
            if sid not in self.id_position:
                raise ValidationError(f"unknown switch id {sid!r}")
        order = self.id_position
        return tuple(sorted(dict.fromkeys(wanted), key=order.__getitem__))

    def __repr__(self) -> str:
        return f"SwitchFamily({len(self.ids)} switches)"


@dataclass(frozen=True)
class Configuration:
    """±1 light value per board cell, stored in canonical cell order."""

    board: Board
    signs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.board.area:
            raise ValidationError(
                f"configuration has {len(self.signs)} signs for {self.board.area} cells"
            )
        if any(s not in (1, -1) for s in self.signs):
            raise ValidationError("configuration values must be +1 or -1")

    @classmethod
    def from_map(cls, board: Board, values: Mapping[Cell, int]) -> "Configuration":
        for cell in board.cells:
            if cell not in values:
                raise ValidationError(f"configuration missing cell {cell}")
        for cell in values:
            if tuple(cell) not in board:
                raise ValidationError(f"configuration has extra cell {tuple(cell)}")
        return cls(board, tuple(int(values[c]) for c in board.cells))

    @classmethod
    def all_plus(cls, board: Board) -> "Configuration":
        return cls(board, (1,) * board.area)

    @classmethod
    def random(cls, board: Board, seed: int) -> "Configuration":
        return cls(board, tuple(int(s) for s in rng.sign_array(seed, board.area)))

    @classmethod
    def from_packed(cls, board: Board, packed: int) -> "Configuration":
        if packed < 0 or packed >> board.area:
            raise ValidationError("packed value out of range for this board")
        return cls(board, tuple(-1 if (packed >> k) & 1 else 1 for k in range(board.area)))

    @property
    def packed(self) -> int:
        """Integer encoding: bit k set iff cell k (canonical order) is -1."""
        out = 0
        for k, s in enumerate(self.signs):
            if s < 0:
                out |= 1 << k
        return out

    def value(self, cell: Cell) -> int:
        try:
            return self.signs[self.board.position[tuple(cell)]]
        except KeyError:
            raise ValidationError(f"cell {tuple(cell)} is not on the board") from None

    @cached_property
    def vector(self) -> np.ndarray:
        arr = np.array(self.signs, dtype=np.int8)
        arr.setflags(write=False)
        return arr


class Assignment(Mapping[str, int]):
    """Immutable ±1 sign per switch id (-1 = switch pulled)."""

    __slots__ = ("_signs",)

    def __init__(self, signs: Mapping[str, int]):
        for sid, s in signs.items():
            if s not in (1, -1):
                raise ValidationError(f"assignment sign for {sid!r} must be +1 or -1")
        self._signs = dict(signs)

    @classmethod
    def identity(cls, family: SwitchFamily) -> "Assignment":
        return cls({sid: 1 for sid in family.ids})

    def __getitem__(self, switch_id: str) -> int:
        return self._signs[switch_id]

    def __iter__(self) -> Iterator[str]:
        return iter(self._signs)

    def __len__(self) -> int:
        return len(self._signs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Assignment):
            return self._signs == other._signs
        if isinstance(other, Mapping):
            return self._signs == dict(other)
        return NotImplemented

    def __repr__(self) -> str:
        pulled = [sid for sid, s in self._signs.items() if s < 0]
        return f"Assignment({len(self._signs)} switches, {len(pulled)} pulled)"

    def flipped(self, switch_id: str) -> "Assignment":
        if switch_id not in self._signs:
            raise ValidationError(f"unknown switch id {switch_id!r}")
        signs = dict(self._signs)
        signs[switch_id] = -signs[switch_id]
        return Assignment(signs)

    def aligned(self, family: SwitchFamily) -> np.ndarray:
        """Signs as int8 in family order; validates completeness."""
        _check_assignment(family, self)
        return np.fromiter((self._signs[s] for s in family.ids), dtype=np.int8, count=len(family.ids))


def flip(assignment: Assignment, switch_id: str) -> Assignment:
    """Return the assignment with one switch's sign negated (an involution)."""
    return assignment.flipped(switch_id)


def _check_config(board: Board, config: Configuration) -> None:
    if config.board is board or config.board.cells == board.cells:
        return
    have = set(config.board.cells)
    for cell in board.cells:
        if cell not in have:
            raise ValidationError(f"configuration missing cell {cell}")
    extra = have.difference(board.cells)
    raise ValidationError(f"configuration has extra cell {sorted(extra)[0]}")


def _check_assignment(family: SwitchFamily, assignment: Mapping[str, int]) -> None:
    for sid in family.ids:
        if sid not in assignment:
            raise ValidationError(f"assignment missing switch {sid!r}")
    if len(assignment) != len(family.ids):
        for sid in assignment:
            if sid not in family.id_position:
                raise ValidationError(f"assignment has extra switch {sid!r}")


def effective_vector(family: SwitchFamily, config: Configuration, assignment: Mapping[str, int]) -> np.ndarray:
    """Cell values after applying the assignment: a_c * prod of covering signs."""
    eff = config.vector.copy()
    for k, sid in enumerate(family.ids):
        if assignment[sid] < 0:
            idx = family.member_index[k]
            eff[idx] = -eff[idx]
    return eff


def evaluate(board: Board, family: SwitchFamily, config: Configuration, assignment: Assignment) -> int:
    """Signed discrepancy of the position.

    Always lies in [-area, area] and has the parity of the area.
    """
    _check_config(board, config)
    _check_assignment(family, assignment)
    return int(effective_vector(family, config, assignment).sum())


def projections(board: Board) -> Tuple[int, int, int]:
    """(u, v, area): number of distinct rows, distinct columns, cells."""
    if board.dim != 2:
        raise UnsupportedDimensionError("projections are defined for 2-D boards only")
    u = len({c[0] for c in board.cells})
    v = len({c[1] for c in board.cells})
    return u, v, board.area


def is_dense(board: Board, c: float) -> bool:
    """Whether area >= c*(u+v)^2."""
    if c <= 0:
        raise ValidationError("density constant c must be positive")
    u, v, area = projections(board)
    return area >= c * (u + v) ** 2


@dataclass(frozen=True)
class CoverageReport:
    max_cover: int
    disjoint_groups: Optional[Tuple[FrozenSet[str], FrozenSet[str]]]


def coverage_check(board: Board, family: SwitchFamily) -> CoverageReport:
    """How thickly switches cover cells, and whether they split in two.

    disjoint_groups is present iff the switches can be 2-partitioned so that
    each group covers every cell at most once (the row/column structure of
    the classic game).  Found by 2-coloring the graph whose edges join
    switches sharing a cell, then verifying both color classes.
    """
    n = len(family.ids)
    covering: List[List[int]] = [[] for _ in range(board.area)]
    for k in range(n):
        for p in family.member_index[k]:
            covering[p].append(k)
    max_cover = max((len(c) for c in covering), default=0)

    adj: List[set] = [set() for _ in range(n)]
    for cover in covering:
        for i in range(len(cover)):
            for j in range(i + 1, len(cover)):
                adj[cover[i]].add(cover[j])
                adj[cover[j]].add(cover[i])

    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            k = queue.pop(0)
            for m in sorted(adj[k]):
                if color[m] == -1:
                    color[m] = 1 - color[k]
                    queue.append(m)
                elif color[m] == color[k]:
                    return CoverageReport(max_cover=max_cover, disjoint_groups=None)

    # Proper 2-coloring implies disjointness within each class; verify anyway.
    for want in (0, 1):
        counts = np.zeros(board.area, dtype=np.int32)
        for k in range(n):
            if color[k] == want:
                counts[family.member_index[k]] += 1
        if counts.max(initial=0) > 1:
            return CoverageReport(max_cover=max_cover, disjoint_groups=None)

    group0 = frozenset(family.ids[k] for k in range(n) if color[k] == 0)
    group1 = frozenset(family.ids[k] for k in range(n) if color[k] == 1)
    return CoverageReport(max_cover=max_cover, disjoint_groups=(group0, group1))


class PlayState:
    """Mutable play position with incrementally maintained effective values.

    Flipping a switch touches only its member cells, so interactive play and
    local search get O(|switch|) updates instead of re-evaluating the board.
    """

    def __init__(self, board: Board, family: SwitchFamily, config: Configuration,
                 assignment: Optional[Assignment] = None):
        _check_config(board, config)
        self.board = board
        self.family = family
        self.config = config
        if assignment is None:
            assignment = Assignment.identity(family)
        _check_assignment(family, assignment)
        self.signs = dict(assignment)
        self.eff = effective_vector(family, config, assignment)
        self.score = int(self.eff.sum())

    def gain(self, switch_id: str) -> int:
        """Score delta if switch_id were flipped now."""
        if switch_id not in self.signs:
            raise ValidationError(f"unknown switch id {switch_id!r}")
        k = self.family.id_position[switch_id]
        return -2 * int(self.eff[self.family.member_index[k]].sum())

    def flip(self, switch_id: str) -> int:
        """Flip one switch in place; returns the new score."""
        if switch_id not in self.signs:
            raise ValidationError(f"unknown switch id {switch_id!r}")
        k = self.family.id_position[switch_id]
        idx = self.family.member_index[k]
        delta = -2 * int(self.eff[idx].sum())
        self.eff[idx] = -self.eff[idx]
        self.signs[switch_id] = -self.signs[switch_id]
        self.score += delta
        return self.score

    def best_flip(self) -> Tuple[Optional[str], int]:
        """(switch_id, gain) of the best single flip; ties break to the
        lexicographically smallest id.  Returns (None, 0) for an empty family."""
        best_id: Optional[str] = None
        best_gain = 0
        for k, sid in enumerate(self.family.ids):
            g = -2 * int(self.eff[self.family.member_index[k]].sum())
            if best_id is None or g > best_gain or (g == best_gain and sid < best_id):
                best_id, best_gain = sid, g
        return best_id, best_gain

    def assignment(self) -> Assignment:
        return Assignment(self.signs)
