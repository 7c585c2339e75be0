"""File format round-trips: board+family, configuration, assignment."""

import json

import pytest

from gbkit.core import Assignment, Configuration, ValidationError
from gbkit.formats import (
    assignment_from_doc,
    assignment_to_doc,
    board_family_to_doc,
    config_from_doc,
    config_from_grid,
    config_to_doc,
    config_to_grid,
    dump_json,
    load_board,
    load_board_family,
    load_switches,
    parse_config,
)
from gbkit.gallery import make_board, make_switches


def test_generator_form_roundtrip():
    doc = {"kind": "square", "params": {"n": 3}}
    board, family = load_board_family(doc)
    assert board.area == 9
    assert family.ids == ("row:1", "row:2", "row:3", "col:1", "col:2", "col:3")
    explicit = board_family_to_doc(board, family)
    board2, family2 = load_board_family(explicit)
    assert board2 == board
    assert family2.ids == family.ids and family2.members == family.members
    # dumping the reloaded objects is byte-identical
    assert dump_json(board_family_to_doc(board2, family2)) == dump_json(explicit)


def test_generator_form_with_switch_params():
    board, family = load_board_family(
        {"kind": "square", "params": {"n": 5, "switches": "slanted_plus_rows", "t": 3}})
    assert len(family) == 22
    board, family = load_board_family(
        {"kind": "square", "params": {"n": 4, "switches": "restricted", "a": 2, "b": 1}})
    assert family.ids == ("col:1", "col:2", "row:1")
    board, family = load_board_family({"kind": "cube", "params": {"n": 2}})
    assert len(family) == 12


def test_switch_spec_forms():
    board = make_board("square", n=2)
    fam = load_switches(board, {"kind": "rows_cols"})
    assert len(fam) == 4
    fam = load_switches(board, [{"id": "a", "cells": [[1, 1], [2, 2]]}])
    assert fam.member("a") == ((1, 1), (2, 2))
    with pytest.raises(ValidationError):
        load_switches(board, {"switches": [{"id": "a"}]})
    with pytest.raises(ValidationError):
        load_switches(board, {})


def test_board_spec_errors():
    with pytest.raises(ValidationError):
        load_board({})
    with pytest.raises(ValidationError):
        load_board([1, 2])
    with pytest.raises(ValidationError):
        load_board_family({"cells": [[1, 1]]})


def test_config_doc_roundtrip():
    board = make_board("hyperbola", n=4)
    config = Configuration.random(board, 11)
    doc = config_to_doc(config)
    assert config_from_doc(board, doc) == config
    assert json.loads(dump_json(doc)) == doc
    with pytest.raises(ValidationError):
        config_from_doc(board, {"cells": [[1, 1]]})
    with pytest.raises(ValidationError):
        config_from_doc(board, {})


def test_config_grid_roundtrip():
    board = make_board("square", n=3)
    config = Configuration.random(board, 4)
    text = config_to_grid(config)
    assert config_from_grid(board, text) == config
    assert parse_config(board, text) == config
    assert parse_config(board, dump_json(config_to_doc(config))) == config


def test_grid_orientation_row1_bottom():
    board = make_board("square", n=2)
    config = Configuration.from_map(board, {(1, 1): 1, (1, 2): 1, (2, 1): -1, (2, 2): -1})
    assert config_to_grid(config) == "--\n++\n"
    parsed = config_from_grid(board, "--\n++\n")
    assert parsed.value((1, 1)) == 1 and parsed.value((2, 2)) == -1


def test_grid_errors():
    board = make_board("square", n=2)
    with pytest.raises(ValidationError):
        config_from_grid(board, "++\n+\n")
    with pytest.raises(ValidationError):
        config_from_grid(board, "++\n+x\n")
    with pytest.raises(ValidationError):
        config_to_grid(Configuration.all_plus(make_board("x_board", n=3)))


def test_assignment_roundtrip():
    board = make_board("square", n=2)
    family = make_switches(board, "rows_cols")
    assignment = Assignment({"row:1": 1, "row:2": -1, "col:1": 1, "col:2": -1})
    doc = assignment_to_doc(family, assignment)
    assert list(doc) == list(family.ids)
    assert assignment_from_doc(family, doc) == assignment
    with pytest.raises(ValidationError, match="row:2"):
        assignment_from_doc(family, {"row:1": 1})
    with pytest.raises(ValidationError, match="extra"):
        assignment_from_doc(family, {**doc, "zap": 1})
