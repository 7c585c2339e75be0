"""Board generators and switch-family generators.

Every board here lives on the 1-based grid {1..n}² (or {1..n}³): the full
square, the X of the two main diagonals, the inscribed diamond and disk,
the staircase under the hyperbola xy = n, and the cube.  Switch families
are the classic rows+columns set and its variants: unit-slope diagonals
replacing rows, slope-t lines replacing columns, a restricted subset of
rows and columns, and the three pencils of axis lines of the cube.

Centering uses half-integers: the center of {1..n} is (n+1)/2, so the
diamond and disk tests compare |2x-n-1| against n rather than dividing.
Boundary ties are included (<=); the families are not sensitive to that
choice.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .core import Board, Cell, Configuration, SwitchFamily, ValidationError

BOARD_KINDS = ("square", "x_board", "rotated_square", "disk", "hyperbola", "cube")
SWITCH_KINDS = ("rows_cols", "diag_plus_cols", "slanted_plus_rows", "restricted", "cube_lines")


def _check_n(params: Dict, name: str = "n") -> int:
    if name not in params:
        raise ValidationError(f"missing board parameter {name!r}")
    n = params[name]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError(f"parameter {name!r} must be an integer >= 1, got {n!r}")
    return n


def make_board(kind: str, **params) -> Board:
    """Build a board by kind name; see module docstring for the catalog."""
    if kind == "square":
        n = _check_n(params)
        cells = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    elif kind == "x_board":
        n = _check_n(params)
        cells = list({(i, i) for i in range(1, n + 1)} | {(i, n + 1 - i) for i in range(1, n + 1)})
    elif kind == "rotated_square":
        n = _check_n(params)
        cells = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)
                 if abs(2 * x - n - 1) + abs(2 * y - n - 1) <= n]
    elif kind == "disk":
        n = _check_n(params)
        cells = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)
                 if (2 * x - n - 1) ** 2 + (2 * y - n - 1) ** 2 <= n * n]
    elif kind == "hyperbola":
        n = _check_n(params)
        cells = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1) if x * y <= n]
    elif kind == "cube":
        n = _check_n(params)
        cells = [(x, y, z) for x in range(1, n + 1) for y in range(1, n + 1)
                 for z in range(1, n + 1)]
    else:
        raise ValidationError(f"unknown board kind {kind!r}; expected one of {BOARD_KINDS}")
    return Board.from_cells(cells)


def _square_n(board: Board, kind: str) -> int:
    n = max(c[0] for c in board.cells)
    if board.dim != 2 or board.area != n * n or max(c[1] for c in board.cells) != n:
        raise ValidationError(f"switch kind {kind!r} requires a full square board")
    return n


def _rows_cols_pairs(board: Board):
    rows: Dict[int, List[Cell]] = {}
    cols: Dict[int, List[Cell]] = {}
    for cell in board.cells:
        rows.setdefault(cell[0], []).append(cell)
        cols.setdefault(cell[1], []).append(cell)
    pairs = [(f"row:{i}", rows[i]) for i in sorted(rows)]
    pairs += [(f"col:{j}", cols[j]) for j in sorted(cols)]
    return pairs


def make_switches(board: Board, kind: str, **params) -> SwitchFamily:
    """Build a switch family of the given kind over the board.

    rows_cols works on any 2-D board (one switch per nonempty row and
    column); the diagonal, slanted, and restricted kinds require a full
    square; cube_lines requires a cube.
    """
    if kind == "rows_cols":
        if board.dim != 2:
            raise ValidationError("rows_cols switches require a 2-D board")
        pairs = _rows_cols_pairs(board)
    elif kind == "diag_plus_cols":
        n = _square_n(board, kind)
        pairs = [(f"col:{j}", [(x, j) for x in range(1, n + 1)]) for j in range(1, n + 1)]
        for c in range(1 - n, n):
            pairs.append((f"diag:{c}", [(x, x + c) for x in range(1, n + 1) if 1 <= x + c <= n]))
    elif kind == "slanted_plus_rows":
        n = _square_n(board, kind)
        t = _check_n(params, "t")
        if not t < n:
            raise ValidationError(f"slant parameter t={t} must satisfy 1 <= t < n={n}")
        pairs = [(f"row:{i}", [(i, y) for y in range(1, n + 1)]) for i in range(1, n + 1)]
        for c in range(1 - t * n, n - t + 1):
            pairs.append((f"slant:{c}",
                          [(x, t * x + c) for x in range(1, n + 1) if 1 <= t * x + c <= n]))
    elif kind == "restricted":
        n = _square_n(board, kind)
        a, b = params.get("a"), params.get("b")
        for name, value in (("a", a), ("b", b)):
            if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value <= n:
                raise ValidationError(f"restricted parameter {name!r} must be in 0..{n}, got {value!r}")
        pairs = [(f"col:{j}", [(x, j) for x in range(1, n + 1)]) for j in range(1, a + 1)]
        pairs += [(f"row:{i}", [(i, y) for y in range(1, n + 1)]) for i in range(1, b + 1)]
    elif kind == "cube_lines":
        if board.dim != 3:
            raise ValidationError("cube_lines switches require a 3-D board")
        n = max(c[0] for c in board.cells)
        if board.area != n ** 3:
            raise ValidationError("cube_lines switches require a full cube board")
        rng_n = range(1, n + 1)
        pairs = [(f"xy:{i},{j}", [(i, j, z) for z in rng_n]) for i in rng_n for j in rng_n]
        pairs += [(f"xz:{i},{k}", [(i, y, k) for y in rng_n]) for i in rng_n for k in rng_n]
        pairs += [(f"yz:{j},{k}", [(x, j, k) for x in rng_n]) for j in rng_n for k in rng_n]
    else:
        raise ValidationError(f"unknown switch kind {kind!r}; expected one of {SWITCH_KINDS}")
    return SwitchFamily.from_pairs(board, pairs)


def x_board_n(board: Board) -> int:
    """Side length n of an X board; raises if the board is not one."""
    if board.dim != 2:
        raise ValidationError("not an X board")
    n = max(c[0] for c in board.cells)
    expected = {(i, i) for i in range(1, n + 1)} | {(i, n + 1 - i) for i in range(1, n + 1)}
    if set(board.cells) != expected:
        raise ValidationError("not an X board")
    return n


def x_cycles(board: Board) -> List[Tuple[Cell, ...]]:
    """Partition an X board into concentric 4-cycles, outside in.

    Group g is {(g,g), (g,n+1-g), (n+1-g,g), (n+1-g,n+1-g)}; odd n adds the
    center as a final singleton.
    """
    n = x_board_n(board)
    groups: List[Tuple[Cell, ...]] = []
    for g in range(1, n // 2 + 1):
        h = n + 1 - g
        groups.append(tuple(sorted({(g, g), (g, h), (h, g), (h, h)})))
    if n % 2 == 1:
        c = (n + 1) // 2
        groups.append(((c, c),))
    return groups


# Bundled demonstration positions (the package's worked examples).
_DEMO_SQUARE5_ROWS = {
    1: (1, 1, 1, 1, 1),
    2: (-1, -1, -1, -1, -1),
    3: (-1, 1, 1, -1, 1),
    4: (1, 1, -1, 1, 1),
    5: (-1, 1, 1, -1, 1),
}
_DEMO_X5 = {
    (1, 1): 1, (2, 2): 1, (3, 3): -1, (4, 4): 1, (5, 5): -1,
    (1, 5): -1, (2, 4): 1, (4, 2): -1, (5, 1): -1,
}


def demo_position(name: str) -> Tuple[Board, SwitchFamily, Configuration]:
    """Named demonstration positions with rows+columns switches.

    "square5": a 5x5 position whose signed discrepancy is 5 as dealt.
    "x5": an X(5) position with signed discrepancy -1 and maximum 5.
    """
    if name == "square5":
        board = make_board("square", n=5)
        values = {(i, j): _DEMO_SQUARE5_ROWS[i][j - 1] for i in range(1, 6) for j in range(1, 6)}
    elif name == "x5":
        board = make_board("x_board", n=5)
        values = dict(_DEMO_X5)
    else:
        raise ValidationError(f"unknown demo position {name!r}; expected 'square5' or 'x5'")
    family = make_switches(board, "rows_cols")
    return board, family, Configuration.from_map(board, values)
