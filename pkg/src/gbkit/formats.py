"""JSON and text serialization for boards, switch families, configurations,
and assignments.

Documents come in two flavors.  Generator form names a catalog entry:

    {"kind": "square", "params": {"n": 5, "switches": "rows_cols", "t": 3}}

where "switches" (optional) picks the switch kind and any t/a/b parameters
ride along.  Explicit form lists everything:

    {"cells": [[i, j], ...], "switches": [{"id": "...", "cells": [...]}, ...]}

Configurations are {"cells": [[i, j, s], ...]} with s = +1/-1, or, for full
rectangles, a '+'/'-' text grid whose bottom line is row 1.  Assignments
are {"switch-id": +1/-1, ...}.
"""

from __future__ import annotations

import json
from typing import Dict, List, Tuple

from .core import Assignment, Board, Configuration, SwitchFamily, ValidationError
from .gallery import make_board, make_switches

_SWITCH_PARAM_KEYS = ("t", "a", "b")


def dump_json(doc) -> str:
    """Canonical JSON rendering: stable key order, two-space indent."""
    return json.dumps(doc, indent=2) + "\n"


def _require_dict(doc, what: str) -> dict:
    if not isinstance(doc, dict):
        raise ValidationError(f"{what} must be a JSON object, got {type(doc).__name__}")
    return doc


def load_board(doc) -> Board:
    doc = _require_dict(doc, "board spec")
    if "cells" in doc:
        return Board.from_cells([tuple(c) for c in doc["cells"]])
    if "kind" not in doc:
        raise ValidationError("board spec needs either 'cells' or 'kind'")
    params = dict(doc.get("params", {}))
    for key in ("switches", *_SWITCH_PARAM_KEYS):
        params.pop(key, None)
    return make_board(doc["kind"], **params)


def load_switches(board: Board, doc) -> SwitchFamily:
    if isinstance(doc, list):
        doc = {"switches": doc}
    doc = _require_dict(doc, "switch spec")
    if "switches" in doc:
        pairs = []
        for entry in doc["switches"]:
            entry = _require_dict(entry, "switch entry")
            if "id" not in entry or "cells" not in entry:
                raise ValidationError("each switch entry needs 'id' and 'cells'")
            pairs.append((entry["id"], [tuple(c) for c in entry["cells"]]))
        return SwitchFamily.from_pairs(board, pairs)
    if "kind" not in doc:
        raise ValidationError("switch spec needs either 'switches' or 'kind'")
    params = {k: v for k, v in dict(doc.get("params", {})).items() if k in _SWITCH_PARAM_KEYS}
    return make_switches(board, doc["kind"], **params)


def load_board_family(doc) -> Tuple[Board, SwitchFamily]:
    """Parse a combined board+family document (either flavor)."""
    doc = _require_dict(doc, "board+family document")
    if "kind" in doc:
        params = dict(doc.get("params", {}))
        switch_spec = params.pop("switches", "cube_lines" if doc["kind"] == "cube" else "rows_cols")
        switch_params = {k: params.pop(k) for k in _SWITCH_PARAM_KEYS if k in params}
        board = make_board(doc["kind"], **params)
        if isinstance(switch_spec, str):
            family = make_switches(board, switch_spec, **switch_params)
        else:
            family = load_switches(board, switch_spec)
        return board, family
    if "cells" not in doc or "switches" not in doc:
        raise ValidationError("explicit board+family document needs 'cells' and 'switches'")
    board = load_board({"cells": doc["cells"]})
    return board, load_switches(board, {"switches": doc["switches"]})


def board_family_to_doc(board: Board, family: SwitchFamily) -> dict:
    """Explicit-form document; loading it back reproduces both objects."""
    return {
        "cells": [list(c) for c in board.cells],
        "switches": [
            {"id": sid, "cells": [list(c) for c in member]}
            for sid, member in zip(family.ids, family.members)
        ],
    }


def config_to_doc(config: Configuration) -> dict:
    return {"cells": [[*cell, sign] for cell, sign in zip(config.board.cells, config.signs)]}


def config_from_doc(board: Board, doc) -> Configuration:
    doc = _require_dict(doc, "configuration")
    if "cells" not in doc:
        raise ValidationError("configuration document needs 'cells'")
    values: Dict[tuple, int] = {}
    for entry in doc["cells"]:
        entry = list(entry)
        if len(entry) != board.dim + 1:
            raise ValidationError(
                f"configuration entry {entry} should be {board.dim} coordinates plus a sign")
        values[tuple(entry[:-1])] = entry[-1]
    return Configuration.from_map(board, values)


def _rectangle_dims(board: Board) -> Tuple[int, int]:
    u = max(c[0] for c in board.cells)
    v = max(c[1] for c in board.cells) if board.dim == 2 else 0
    if board.dim != 2 or board.area != u * v:
        raise ValidationError("grid text works only for full rectangular boards")
    return u, v


def config_to_grid(config: Configuration) -> str:
    """Render as '+'/'-' lines, row 1 at the bottom."""
    u, v = _rectangle_dims(config.board)
    lines = []
    for i in range(u, 0, -1):
        lines.append("".join("+" if config.value((i, j)) > 0 else "-" for j in range(1, v + 1)))
    return "\n".join(lines) + "\n"


def config_from_grid(board: Board, text: str) -> Configuration:
    u, v = _rectangle_dims(board)
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != u or any(len(line) != v for line in lines):
        raise ValidationError(f"grid must be {u} lines of {v} characters")
    values: Dict[tuple, int] = {}
    for k, line in enumerate(lines):
        i = u - k
        for j, ch in enumerate(line, start=1):
            if ch not in "+-":
                raise ValidationError(f"grid character {ch!r} is not '+' or '-'")
            values[(i, j)] = 1 if ch == "+" else -1
    return Configuration.from_map(board, values)


def parse_config(board: Board, text: str) -> Configuration:
    """Parse either JSON or grid text, sniffing the format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return config_from_doc(board, json.loads(text))
    return config_from_grid(board, text)


def assignment_to_doc(family: SwitchFamily, assignment: Assignment) -> dict:
    return {sid: assignment[sid] for sid in family.ids}


def assignment_from_doc(family: SwitchFamily, doc) -> Assignment:
    doc = _require_dict(doc, "assignment")
    signs: Dict[str, int] = {}
    for sid in family.ids:
        if sid not in doc:
            raise ValidationError(f"assignment missing switch {sid!r}")
        signs[sid] = doc[sid]
    for sid in doc:
        if sid not in signs:
            raise ValidationError(f"assignment has extra switch {sid!r}")
    return Assignment(signs)
