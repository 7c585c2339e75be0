"""Command-line front door.

Subcommands: gen, eval, solve, minimax, construct, estimate, constants,
serve.  Exit codes: 0 success, 2 validation problem (including bad flags),
3 budget exceeded.

Every run prints a one-line effective-parameters header to stderr; stdout
carries only the result, so JSON output stays parseable and byte-identical
across identical invocations.  Human-format boards print as '+'/'-' grids
with row 1 on the bottom line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, Tuple

from .adversary import (
    HardConfigSearchError,
    _pick_split,
    build_remove_ii,
    build_remove_ii_delta,
    build_remove_iii,
    minimax,
    sample_hard_config,
)
from .analysis import constant_names, run_trials, theorem_constant
from .core import (
    Assignment,
    Board,
    BudgetExceededError,
    Configuration,
    SwitchFamily,
    ValidationError,
    evaluate,
)
from .formats import (
    assignment_from_doc,
    assignment_to_doc,
    board_family_to_doc,
    config_to_doc,
    config_to_grid,
    dump_json,
    load_board_family,
    parse_config,
)
from .gallery import BOARD_KINDS
from .solvers import exact_max, exact_max_split, local_search, scramble_greedy


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        raise ValidationError(f"cannot read {path!r}: {err.strerror}") from None


def _parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ValidationError(f"bad JSON in {what}: {err}") from None


def _resolve_board_family(args) -> Tuple[Board, SwitchFamily]:
    """--board accepts a catalog kind, inline JSON, or a JSON file path."""
    text = args.board
    if text.lstrip().startswith("{"):
        return load_board_family(_parse_json(text, "--board"))
    if text in BOARD_KINDS:
        if args.n is None:
            raise ValidationError(f"--board {text} needs --n")
        params = {"n": args.n}
        for key in ("t", "a", "b"):
            value = getattr(args, key, None)
            if value is not None:
                params[key] = value
        switches = getattr(args, "switches", None)
        if switches is not None:
            params["switches"] = switches
        try:
            return load_board_family({"kind": text, "params": params})
        except TypeError as err:
            raise ValidationError(str(err)) from None
    if os.path.exists(text):
        return load_board_family(_parse_json(_read_text(text), text))
    raise ValidationError(
        f"--board {text!r} is not a kind ({', '.join(BOARD_KINDS)}), inline JSON, "
        "or a readable file")


def _resolve_config(board: Board, value: Optional[str]) -> Configuration:
    if value is None or value == "all-plus":
        return Configuration.all_plus(board)
    if value.startswith("random:"):
        try:
            seed = int(value.split(":", 1)[1])
        except ValueError:
            raise ValidationError(f"bad seed in {value!r}") from None
        return Configuration.random(board, seed)
    if value.lstrip().startswith("{"):
        return parse_config(board, value)
    if os.path.exists(value):
        return parse_config(board, _read_text(value))
    raise ValidationError(
        f"--config {value!r} is not 'all-plus', 'random:SEED', inline JSON, or a file")


def _resolve_assignment(family: SwitchFamily, value: Optional[str]) -> Assignment:
    if value is None or value == "identity":
        return Assignment.identity(family)
    if value.lstrip().startswith("{"):
        return assignment_from_doc(family, _parse_json(value, "--assignment"))
    if os.path.exists(value):
        return assignment_from_doc(family, _parse_json(_read_text(value), value))
    raise ValidationError(
        f"--assignment {value!r} is not 'identity', inline JSON, or a file")


def _print_header(args) -> None:
    skip = {"command", "func"}
    pairs = []
    for key in sorted(vars(args)):
        if key in skip:
            continue
        value = getattr(args, key)
        if value is None:
            continue
        if isinstance(value, bool):
            value = str(value).lower()
        pairs.append(f"{key.replace('_', '-')}={value}")
    print(f"# gbk {args.command} " + " ".join(pairs), file=sys.stderr)


def _emit(args, doc, human_lines) -> None:
    if getattr(args, "format", "json") == "json":
        sys.stdout.write(dump_json(doc))
    else:
        for line in human_lines:
            print(line)


def _grid_or_doc(config: Configuration) -> str:
    try:
        return config_to_grid(config).rstrip("\n")
    except ValidationError:
        return dump_json(config_to_doc(config)).rstrip("\n")


def _pulled(family: SwitchFamily, assignment: Assignment) -> str:
    pulled = [sid for sid in family.ids if assignment[sid] < 0]
    return " ".join(pulled) if pulled else "(none)"


def cmd_gen(args) -> int:
    board, family = _resolve_board_family(args)
    text = dump_json(board_family_to_doc(board, family))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_eval(args) -> int:
    board, family = _resolve_board_family(args)
    config = _resolve_config(board, args.config)
    assignment = _resolve_assignment(family, args.assignment)
    value = evaluate(board, family, config, assignment)
    _emit(args, {"value": value}, [str(value)])
    return 0


def _default_groups(family: SwitchFamily) -> Tuple[str, str]:
    """(scramble, greedy) prefix pair for the catalog switch layouts."""
    prefixes = {sid.split(":", 1)[0] for sid in family.ids}
    for scramble, greedy in (("col", "row"), ("row", "slant"), ("yz", "xz"),
                             ("col", "diag")):
        if {scramble, greedy} <= prefixes:
            return scramble, greedy
    raise ValidationError(
        "no default switch groups for this family; pass --scramble and --greedy")


def cmd_solve(args) -> int:
    board, family = _resolve_board_family(args)
    config = _resolve_config(board, args.config)
    if args.method == "exact":
        result = exact_max(board, family, config, cap=args.cap)
    elif args.method == "split":
        enum_ids, greedy_ids = args.enum, args.greedy
        if (enum_ids is None) != (greedy_ids is None):
            raise ValidationError("--enum and --greedy go together")
        if enum_ids is None:
            enum_ids, greedy_ids = _pick_split(board, family)
            if not greedy_ids:
                raise ValidationError(
                    "family has no disjoint split; pass --enum and --greedy")
        result = exact_max_split(board, family, config, enum_ids, greedy_ids,
                                 cap=args.cap)
    elif args.method == "greedy":
        scramble, greedy = args.scramble, args.greedy
        if (scramble is None) != (greedy is None):
            raise ValidationError("--scramble and --greedy go together")
        if scramble is None:
            scramble, greedy = _default_groups(family)
        result = scramble_greedy(board, family, config, scramble, greedy, args.seed)
    else:
        result = local_search(board, family, config,
                              _resolve_assignment(family, args.assignment))
    doc = {
        "method": args.method,
        "value": result.value,
        "assignment": assignment_to_doc(family, result.assignment),
        "nodes_explored": result.nodes_explored,
    }
    _emit(args, doc, [str(result.value), "pulled: " + _pulled(family, result.assignment)])
    return 0


def cmd_minimax(args) -> int:
    board, family = _resolve_board_family(args)
    result = minimax(board, family, canonicalize=not args.no_canonical,
                     config_cap=args.config_cap, jobs=args.jobs)
    doc = {
        "value": result.value,
        "witness_config": config_to_doc(result.witness_config),
        "configs_scanned": result.configs_scanned,
    }
    _emit(args, doc, [str(result.value), "witness:", _grid_or_doc(result.witness_config)])
    return 0


def cmd_construct(args) -> int:
    if args.what == "remove-ii":
        if args.delta is not None:
            config = build_remove_ii_delta(args.n, args.delta, rng_seed=args.seed)
        else:
            if args.a is None or args.b is None:
                raise ValidationError("remove-ii needs --a and --b (or --delta)")
            config = build_remove_ii(args.n, args.a, args.b, rng_seed=args.seed)
        doc = {"config": config_to_doc(config)}
        _emit(args, doc, [_grid_or_doc(config)])
        return 0
    if args.what == "remove-iii":
        if args.a is None or args.b is None:
            raise ValidationError("remove-iii needs --a and --b")
        config = build_remove_iii(args.n, args.a, args.b)
        _emit(args, {"config": config_to_doc(config)}, [_grid_or_doc(config)])
        return 0
    # hard-config
    board, family = _resolve_board_family(args)
    if args.lam is None:
        raise ValidationError("hard-config needs --lam")
    cert = sample_hard_config(board, family, lam=args.lam,
                              max_tries=args.max_tries, rng_seed=args.seed)
    doc = {
        "config": config_to_doc(cert.config),
        "certified_max": cert.certified_max,
        "lam": cert.lam,
        "tries": cert.tries,
    }
    _emit(args, doc, [_grid_or_doc(cert.config),
                      f"certified max {cert.certified_max} after {cert.tries} tries"])
    return 0


def cmd_estimate(args) -> int:
    board, family = _resolve_board_family(args)
    config = _resolve_config(board, args.config) if args.config else None
    scramble, greedy = args.scramble, args.greedy
    if args.strategy == "scramble-greedy":
        if (scramble is None) != (greedy is None):
            raise ValidationError("--scramble and --greedy go together")
        if scramble is None:
            scramble, greedy = _default_groups(family)
    stats = run_trials(board, family, args.strategy, args.trials, args.seed,
                       config=config, scramble=scramble, greedy=greedy,
                       jobs=args.jobs)
    sys.stdout.write(dump_json(stats.to_doc()))
    return 0


def cmd_constants(args) -> int:
    names = constant_names()
    if args.format == "json":
        sys.stdout.write(dump_json({name: theorem_constant(name) for name in names}))
    else:
        width = max(len(name) for name in names)
        for name in names:
            print(f"{name:<{width}}  {theorem_constant(name):.6f}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(persist_path=args.persist), host=args.host,
                port=args.port, log_level="info")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    jobs_default = int(os.environ.get("GBK_JOBS", "1"))
    parser = argparse.ArgumentParser(
        prog="gbk", description="Switching-game workbench: boards, solvers, "
        "min-max scans, adversarial deals, and trial campaigns.")
    sub = parser.add_subparsers(dest="command", required=True)

    board_flags = argparse.ArgumentParser(add_help=False)
    board_flags.add_argument("--board", required=True,
                             help="board kind, inline JSON, or JSON file")
    board_flags.add_argument("--n", type=int, help="board size")
    board_flags.add_argument("--t", type=int, help="slant slope")
    board_flags.add_argument("--a", type=int, help="restricted column count")
    board_flags.add_argument("--b", type=int, help="restricted row count")
    board_flags.add_argument("--switches", help="switch kind for catalog boards")

    fmt_flags = argparse.ArgumentParser(add_help=False)
    fmt_flags.add_argument("--format", choices=("human", "json"), default="human")

    p = sub.add_parser("gen", parents=[board_flags],
                       help="emit a board+family JSON document")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("eval", parents=[board_flags, fmt_flags],
                       help="evaluate a deal under an assignment")
    p.add_argument("--config", help="all-plus | random:SEED | JSON | file")
    p.add_argument("--assignment", help="identity | JSON | file")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("solve", parents=[board_flags, fmt_flags],
                       help="maximize the value over assignments")
    p.add_argument("--config", help="all-plus | random:SEED | JSON | file")
    p.add_argument("--method", choices=("exact", "split", "greedy", "local"),
                   default="exact")
    p.add_argument("--cap", type=int, default=30,
                   help="max log2 enumerated assignments for exact/split")
    p.add_argument("--enum", help="enumerated switch prefix or id list (split)")
    p.add_argument("--greedy", help="greedy switch prefix (split/greedy)")
    p.add_argument("--scramble", help="scrambled switch prefix (greedy)")
    p.add_argument("--seed", type=int, default=0, help="scramble seed (greedy)")
    p.add_argument("--assignment", help="start point for --method local")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("minimax", parents=[board_flags, fmt_flags],
                       help="exact min over deals of the max over assignments")
    p.add_argument("--no-canonical", action="store_true",
                   help="scan every deal instead of canonical representatives")
    p.add_argument("--config-cap", type=int, default=1 << 25,
                   help="max deals to scan")
    p.add_argument("--jobs", type=int, default=jobs_default,
                   help="worker threads (default from GBK_JOBS)")
    p.set_defaults(func=cmd_minimax)

    p = sub.add_parser("construct", parents=[fmt_flags],
                       help="build adversarial deals")
    p.add_argument("what", choices=("remove-ii", "remove-iii", "hard-config"))
    p.add_argument("--n", type=int, help="board size")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--delta", type=float, help="remove-ii: a = b = round((1-delta)n)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--board", help="hard-config: board kind, JSON, or file")
    p.add_argument("--t", type=int)
    p.add_argument("--switches")
    p.add_argument("--lam", type=float, help="hard-config: target max")
    p.add_argument("--max-tries", type=int, default=50)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("estimate", parents=[board_flags],
                       help="run a strategy over random deals and aggregate")
    p.add_argument("--strategy", required=True,
                   help="scramble-greedy | local-search | hyperbola | x-cycle")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--config", help="fixed deal instead of fresh random ones")
    p.add_argument("--scramble", help="scrambled switch prefix")
    p.add_argument("--greedy", help="greedily aligned switch prefix")
    p.add_argument("--jobs", type=int, default=jobs_default,
                   help="worker threads (default from GBK_JOBS)")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("constants", parents=[fmt_flags],
                       help="print the bound-theorem constants")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("serve", help="start the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--persist", help="append session events to this JSONL file")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _print_header(args)
    try:
        return args.func(args)
    except ValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except BudgetExceededError as err:
        print(f"budget exceeded: {err} (required={err.required})", file=sys.stderr)
        return 3
    except HardConfigSearchError as err:
        print(f"search failed: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
