"""HTTP session API: deal a board, flip switches, ask for hints or the optimum."""

from __future__ import annotations

from typing import Optional, Tuple

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from ..core import Board, BudgetExceededError, Configuration, SwitchFamily, ValidationError
from ..formats import assignment_to_doc, config_from_doc, load_board, load_switches
from . import sessions
from .models import (
    CreateSessionRequest,
    CreateSessionResponse,
    FlipRequest,
    HintResponse,
    SessionState,
    SolveResponse,
)


def _build_position(req: CreateSessionRequest) -> Tuple[Board, SwitchFamily,
                                                        Configuration, Optional[int]]:
    board = load_board(req.board_spec)
    spec = req.switch_spec
    if spec is None:
        spec = {"kind": "cube_lines" if board.dim == 3 else "rows_cols"}
    elif isinstance(spec, str):
        spec = {"kind": spec}
    family = load_switches(board, spec)
    seed: Optional[int] = None
    if req.config is None:
        config = Configuration.all_plus(board)
    elif "random" in req.config:
        seed = req.config["random"]
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise ValidationError("config.random must be an integer seed")
        config = Configuration.random(board, seed)
    else:
        config = config_from_doc(board, req.config)
    return board, family, config, seed


def create_app(persist_path: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="switching game service", version="0.1.0")
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                       allow_headers=["*"])
    store = sessions.SessionStore(persist_path)
    app.state.store = store

    def _get(session_id: str) -> sessions.Session:
        try:
            return store.get(session_id)
        except sessions.UnknownSessionError:
            raise HTTPException(404, f"no session {session_id!r}") from None

    @app.post("/api/session", response_model=CreateSessionResponse)
    def create_session(req: CreateSessionRequest):
        try:
            board, family, config, seed = _build_position(req)
        except ValidationError as err:
            raise HTTPException(400, str(err)) from None
        session = store.create(board, family, config, seed)
        return {"session_id": session.id, "state": sessions.state_doc(session)}

    @app.get("/api/session/{session_id}", response_model=SessionState)
    def get_session(session_id: str):
        return sessions.state_doc(_get(session_id))

    @app.post("/api/session/{session_id}/flip", response_model=SessionState)
    def flip_switch(session_id: str, req: FlipRequest):
        session = _get(session_id)
        try:
            return store.flip(session, req.switch_id)
        except ValidationError as err:
            raise HTTPException(400, str(err)) from None

    @app.post("/api/session/{session_id}/undo", response_model=SessionState)
    def undo_move(session_id: str):
        session = _get(session_id)
        try:
            return store.undo(session)
        except ValidationError as err:
            raise HTTPException(400, str(err)) from None

    @app.get("/api/session/{session_id}/hint", response_model=HintResponse)
    def hint(session_id: str):
        switch_id, gain = sessions.hint(_get(session_id))
        return {"switch_id": switch_id, "gain": gain}

    @app.get("/api/session/{session_id}/solve", response_model=SolveResponse)
    def solve(session_id: str, exact: Optional[bool] = None):
        session = _get(session_id)
        try:
            result, is_exact = sessions.solve(session, exact)
        except BudgetExceededError as err:
            raise HTTPException(
                409, f"{err}; request exact=false for a heuristic answer") from None
        return {
            "value": result.value,
            "assignment": assignment_to_doc(session.family, result.assignment),
            "exact": is_exact,
            "nodes_explored": result.nodes_explored,
        }

    @app.delete("/api/session/{session_id}", status_code=204)
    def delete_session(session_id: str):
        try:
            store.delete(session_id)
        except sessions.UnknownSessionError:
            raise HTTPException(404, f"no session {session_id!r}") from None

    return app
