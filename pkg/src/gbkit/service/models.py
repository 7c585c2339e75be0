"""Wire models for the session API.

Board, switch, and configuration payloads reuse the JSON shapes from
`gbkit.formats` unchanged; the models here only add session bookkeeping.
"""

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel


class CreateSessionRequest(BaseModel):
    board_spec: Dict[str, Any]
    # switch kind name, generator/explicit document, or bare switch list;
    # omitted = one switch per row and column (per-plane lines on dim 3)
    switch_spec: Optional[Union[str, Dict[str, Any], List[Dict[str, Any]]]] = None
    # explicit {"cells": [[i, j, s], ...]}, {"random": seed}, or omitted (all +1)
    config: Optional[Dict[str, Any]] = None


class SwitchState(BaseModel):
    id: str
    cells: List[List[int]]
    sign: int


class SessionState(BaseModel):
    session_id: str
    area: int
    score: int
    board: Dict[str, Any]
    switches: List[SwitchState]
    config: Dict[str, Any]
    effective: Dict[str, Any]
    history: List[str]
    seed: Optional[int] = None


class CreateSessionResponse(BaseModel):
    session_id: str
    state: SessionState


class FlipRequest(BaseModel):
    switch_id: str


class HintResponse(BaseModel):
    switch_id: Optional[str]
    gain: int


class SolveResponse(BaseModel):
    value: int
    assignment: Dict[str, int]
    exact: bool
    nodes_explored: int
