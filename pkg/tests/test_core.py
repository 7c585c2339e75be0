"""Data model and evaluator: validation, parity, switch-equivalence."""

import pytest

from gbkit import rng
from gbkit.core import (
    Assignment,
    Board,
    Configuration,
    PlayState,
    SwitchFamily,
    UnsupportedDimensionError,
    ValidationError,
    coverage_check,
    effective_vector,
    evaluate,
    flip,
    is_dense,
    projections,
)
from gbkit.gallery import demo_position, make_board, make_switches


def test_board_validation():
    with pytest.raises(ValidationError):
        Board.from_cells([])
    with pytest.raises(ValidationError):
        Board.from_cells([(1, 1), (1, 1)])
    with pytest.raises(ValidationError):
        Board.from_cells([(0, 1)])
    with pytest.raises(ValidationError):
        Board.from_cells([(1, 1), (1, 1, 1)])
    with pytest.raises(ValidationError):
        Board.from_cells([(1,)])
    board = Board.from_cells([(2, 1), (1, 2), (1, 1)])
    assert board.cells == ((1, 1), (1, 2), (2, 1))
    assert board.area == 3 and board.dim == 2


def test_switch_family_validation():
    board = make_board("square", n=2)
    with pytest.raises(ValidationError):
        SwitchFamily.from_pairs(board, [("s", [(3, 3)])])
    with pytest.raises(ValidationError):
        SwitchFamily.from_pairs(board, [("s", [(1, 1)]), ("s", [(2, 2)])])
    fam = SwitchFamily.from_pairs(board, [("empty", []), ("all", board.cells)])
    assert fam.member("empty") == ()
    assert len(fam) == 2
    with pytest.raises(ValidationError):
        fam.member("nope")


def test_select_by_prefix_and_list():
    board = make_board("square", n=3)
    fam = make_switches(board, "rows_cols")
    assert fam.select("row") == ("row:1", "row:2", "row:3")
    assert fam.select(["col:2", "row:1", "col:2"]) == ("row:1", "col:2")
    with pytest.raises(ValidationError):
        fam.select("diag")
    with pytest.raises(ValidationError):
        fam.select(["row:9"])


def test_configuration_validation_names_offender():
    board = make_board("square", n=2)
    with pytest.raises(ValidationError, match=r"missing cell \(2, 2\)"):
        Configuration.from_map(board, {(1, 1): 1, (1, 2): 1, (2, 1): 1})
    full = {(i, j): 1 for i in (1, 2) for j in (1, 2)}
    with pytest.raises(ValidationError, match="extra cell"):
        Configuration.from_map(board, {**full, (3, 3): 1})
    with pytest.raises(ValidationError):
        Configuration.from_map(board, {**full, (2, 2): 0})


def test_configuration_packed_roundtrip():
    board = make_board("square", n=3)
    for seed in range(20):
        config = Configuration.random(board, seed)
        again = Configuration.from_packed(board, config.packed)
        assert again == config
    assert Configuration.all_plus(board).packed == 0
    with pytest.raises(ValidationError):
        Configuration.from_packed(board, 1 << 9)


def test_evaluate_demo_square5():
    board, family, config = demo_position("square5")
    assert evaluate(board, family, config, Assignment.identity(family)) == 5


def test_evaluate_all_plus_square2():
    board = make_board("square", n=2)
    family = make_switches(board, "rows_cols")
    config = Configuration.all_plus(board)
    ident = Assignment.identity(family)
    assert evaluate(board, family, config, ident) == 4
    assert evaluate(board, family, config, flip(ident, "row:1")) == 0


def test_flip_involution_and_unknown_id():
    board = make_board("square", n=2)
    family = make_switches(board, "rows_cols")
    ident = Assignment.identity(family)
    assert flip(flip(ident, "col:2"), "col:2") == ident
    assert flip(ident, "col:2")["col:2"] == -1
    with pytest.raises(ValidationError):
        flip(ident, "col:9")


def test_evaluate_incomplete_assignment_names_switch():
    board = make_board("square", n=2)
    family = make_switches(board, "rows_cols")
    config = Configuration.all_plus(board)
    partial = Assignment({sid: 1 for sid in family.ids if sid != "col:1"})
    with pytest.raises(ValidationError, match="col:1"):
        evaluate(board, family, config, partial)
    extra = Assignment({**{sid: 1 for sid in family.ids}, "bogus": 1})
    with pytest.raises(ValidationError, match="bogus"):
        evaluate(board, family, config, extra)


def test_parity_and_bounds_random():
    board = make_board("square", n=3)
    family = make_switches(board, "rows_cols")
    for seed in range(50):
        config = Configuration.random(board, seed)
        signs = {sid: int(s) for sid, s in
                 zip(family.ids, rng.sign_array(rng.derive(seed, 7), len(family.ids)))}
        val = evaluate(board, family, config, Assignment(signs))
        assert -9 <= val <= 9
        assert val % 2 == 9 % 2


def test_switch_equivalence():
    board = make_board("square", n=3)
    family = make_switches(board, "rows_cols")
    for seed in range(100):
        config = Configuration.random(board, seed)
        signs = {sid: int(s) for sid, s in
                 zip(family.ids, rng.sign_array(rng.derive(seed, 3), len(family.ids)))}
        assignment = Assignment(signs)
        pre = effective_vector(family, config, assignment)
        pre_config = Configuration(board, tuple(int(v) for v in pre))
        assert evaluate(board, family, config, assignment) == \
            evaluate(board, family, pre_config, Assignment.identity(family))


def test_projections_and_density():
    assert projections(make_board("square", n=4)) == (4, 4, 16)
    assert projections(make_board("hyperbola", n=4)) == (4, 4, 8)
    assert projections(make_board("x_board", n=5)) == (5, 5, 9)
    for kind, n in (("square", 5), ("hyperbola", 7), ("disk", 6), ("x_board", 4)):
        u, v, area = projections(make_board(kind, n=n))
        assert u <= area and v <= area and area <= u * v
    assert is_dense(make_board("square", n=7), 0.25)
    assert not is_dense(make_board("hyperbola", n=4), 0.25)
    assert is_dense(make_board("disk", n=4), 0.125)
    with pytest.raises(UnsupportedDimensionError):
        projections(make_board("cube", n=2))
    with pytest.raises(ValidationError):
        is_dense(make_board("square", n=2), 0)


def test_coverage_check_square_and_cube():
    board = make_board("square", n=3)
    family = make_switches(board, "rows_cols")
    report = coverage_check(board, family)
    assert report.max_cover == 2
    assert report.disjoint_groups is not None
    rows = frozenset({"row:1", "row:2", "row:3"})
    cols = frozenset({"col:1", "col:2", "col:3"})
    assert set(report.disjoint_groups) == {rows, cols}

    cube = make_board("cube", n=2)
    lines = make_switches(cube, "cube_lines")
    report = coverage_check(cube, lines)
    assert report.max_cover == 3
    assert report.disjoint_groups is None


def test_coverage_check_columns_only():
    board = make_board("square", n=4)
    family = make_switches(board, "restricted", a=2, b=0)
    report = coverage_check(board, family)
    assert report.max_cover == 1
    assert report.disjoint_groups == (frozenset({"col:1", "col:2"}), frozenset())


def test_playstate_matches_evaluate():
    board, family, config = demo_position("square5")
    state = PlayState(board, family, config)
    assert state.score == 5
    for sid in ("row:2", "col:3", "row:2", "col:1"):
        expected_gain = state.gain(sid)
        before = state.score
        after = state.flip(sid)
        assert after - before == expected_gain
        assert after == evaluate(board, family, config, state.assignment())


def test_playstate_best_flip_tiebreak():
    board = make_board("square", n=2)
    family = make_switches(board, "rows_cols")
    config = Configuration.from_map(board, {(1, 1): -1, (1, 2): -1, (2, 1): -1, (2, 2): -1})
    state = PlayState(board, family, config)
    # every flip gains +4; smallest id wins
    sid, gain = state.best_flip()
    assert (sid, gain) == ("col:1", 4)
