"""In-memory game sessions.

One lock per session serializes mutations (flip/undo) and snapshots, so a
snapshot never interleaves with a half-applied move; different sessions never
contend.  Solving only reads the immutable deal, so it runs outside the play
lock under its own lock that also guards the result cache.

Optional persistence appends one JSON line per state-changing event, enough
to replay a session offline.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .. import rng
from ..adversary import _pick_split
from ..core import (
    Assignment,
    Board,
    BudgetExceededError,
    Configuration,
    PlayState,
    SwitchFamily,
    ValidationError,
)
from ..formats import config_to_doc
from ..solvers import SolveResult, exact_max, exact_max_split, local_search, scramble_greedy

# exact answers stay interactive up to 2^20 enumerated assignments
_ENUM_CAP = 20
_HEURISTIC_RESTARTS = 256
_RESTART_SALT = 0x707C4


class UnknownSessionError(KeyError):
    pass


@dataclass
class Session:
    id: str
    board: Board
    family: SwitchFamily
    config: Configuration
    play: PlayState
    seed: Optional[int]
    history: List[str] = field(default_factory=list)
    lock: threading.RLock = field(default_factory=threading.RLock)
    solve_lock: threading.Lock = field(default_factory=threading.Lock)
    exact_result: Optional[SolveResult] = None
    exact_error: Optional[BudgetExceededError] = None
    heuristic_result: Optional[SolveResult] = None


def state_doc(session: Session) -> Dict[str, Any]:
    """Consistent snapshot; board/config fragments match gbkit.formats."""
    with session.lock:
        play = session.play
        return {
            "session_id": session.id,
            "area": session.board.area,
            "score": play.score,
            "board": {"cells": [list(c) for c in session.board.cells]},
            "switches": [
                {"id": sid, "cells": [list(c) for c in member], "sign": play.signs[sid]}
                for sid, member in zip(session.family.ids, session.family.members)
            ],
            "config": config_to_doc(session.config),
            "effective": {"cells": [[*cell, int(s)] for cell, s in
                                    zip(session.board.cells, play.eff)]},
            "history": list(session.history),
            "seed": session.seed,
        }


class SessionStore:
    def __init__(self, persist_path: Optional[str] = None):
        self._table: Dict[str, Session] = {}
        self._lock = threading.Lock()
        self._persist_path = persist_path
        self._persist_lock = threading.Lock()

    def _log(self, event: str, session_id: str, **payload: Any) -> None:
        if self._persist_path is None:
            return
        line = json.dumps({"ts": time.time(), "event": event, "session": session_id,
                           **payload}, sort_keys=True)
        with self._persist_lock:
            with open(self._persist_path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def create(self, board: Board, family: SwitchFamily, config: Configuration,
               seed: Optional[int]) -> Session:
        play = PlayState(board, family, config)
        with self._lock:
            sid = uuid.uuid4().hex[:12]
            while sid in self._table:
                sid = uuid.uuid4().hex[:12]
            session = Session(id=sid, board=board, family=family, config=config,
                              play=play, seed=seed)
            self._table[sid] = session
        self._log("create", sid, seed=seed,
                  board={"cells": [list(c) for c in board.cells]},
                  config=config_to_doc(config))
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            try:
                return self._table[session_id]
            except KeyError:
                raise UnknownSessionError(session_id) from None

    def delete(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._table:
                raise UnknownSessionError(session_id)
            del self._table[session_id]
        self._log("delete", session_id)

    def flip(self, session: Session, switch_id: str) -> Dict[str, Any]:
        with session.lock:
            score = session.play.flip(switch_id)
            session.history.append(switch_id)
            doc = state_doc(session)
        self._log("flip", session.id, switch=switch_id, score=score)
        return doc

    def undo(self, session: Session) -> Dict[str, Any]:
        with session.lock:
            if not session.history:
                raise ValidationError("nothing to undo")
            last = session.history.pop()
            score = session.play.flip(last)
            doc = state_doc(session)
        self._log("undo", session.id, switch=last, score=score)
        return doc


def hint(session: Session) -> Tuple[Optional[str], int]:
    with session.lock:
        return session.play.best_flip()


def _try_exact(session: Session) -> SolveResult:
    board, family, config = session.board, session.family, session.config
    enum_ids, greedy_ids = _pick_split(board, family)
    if greedy_ids:
        return exact_max_split(board, family, config, enum_ids, greedy_ids, cap=_ENUM_CAP)
    return exact_max(board, family, config, cap=_ENUM_CAP)


def _heuristic(session: Session) -> SolveResult:
    board, family, config = session.board, session.family, session.config
    best = local_search(board, family, config)
    nodes = best.nodes_explored
    enum_ids, greedy_ids = _pick_split(board, family)
    if greedy_ids:
        for s in range(_HEURISTIC_RESTARTS):
            r = scramble_greedy(board, family, config, enum_ids, greedy_ids, s)
            nodes += r.nodes_explored
            if r.value > best.value:
                best = r
    else:
        for s in range(_HEURISTIC_RESTARTS):
            signs = rng.sign_array(rng.derive(_RESTART_SALT, s), len(family.ids))
            start = Assignment({sid: int(v) for sid, v in zip(family.ids, signs)})
            r = local_search(board, family, config, start)
            nodes += r.nodes_explored
            if r.value > best.value:
                best = r
    return SolveResult(value=best.value, assignment=best.assignment,
                       nodes_explored=nodes)


def solve(session: Session, exact: Optional[bool]) -> Tuple[SolveResult, bool]:
    """Best assignment for the session's deal, with an exactness label.

    exact=True insists on the exact answer (raises BudgetExceededError when
    out of budget), False skips straight to the heuristic, None tries exact
    first and falls back.  Results are cached; the deal never changes.
    """
    with session.solve_lock:
        if exact is not False:
            if session.exact_result is None and session.exact_error is None:
                try:
                    session.exact_result = _try_exact(session)
                except BudgetExceededError as err:
                    session.exact_error = err
            if session.exact_result is not None:
                return session.exact_result, True
            if exact:
                raise session.exact_error
        if session.heuristic_result is None:
            session.heuristic_result = _heuristic(session)
        return session.heuristic_result, False
