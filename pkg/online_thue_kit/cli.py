# -*- coding: utf-8 -*-

"""
Command line surface: ``online-thue <subcommand> ...``.

Primary output is JSON lines on standard out; a human summary and logs go
to standard error. Exit status is 0 on success, 1 when the run refutes
something (a repetition, an unsatisfiable palette, an illegal event, a
mismatching trace) with a JSON report, and 2 on misuse.
"""

import typing as T
import sys
import json
import time
import argparse
import logging
from pathlib import Path

from rich.table import Table

from ._version import __version__
from .exc import (
    HorizonExceeded,
    IllegalEvent,
    InvalidEvent,
    OnlineThueError,
    PaletteExhausted,
    SelfCheckFailed,
)
from .config import Config
from .logger import setup_logging, stderr_console
from .paths import path_results_sqlite
from .utils import dumps_line, iter_records, resolve_seed
from .sequences import thue_ternary
from .graph.model import GameEvent, GameScript
from .graph.io import read_coloring, read_graph, read_script, write_script
from .repetition.checkers import (
    check_directed,
    check_graph,
    check_path,
    check_tree,
    check_vertical,
)
from .repetition.witness import RepetitionWitness
from .repetition.structures import orient_by_heights
from .repetition.colorer import CheckMode, min_colors
from .universal.horizon import Target
from .universal.embedding import path_order
from .universal.dump import dump
from .palette.frozen import save
from .palette.precompute import precompute
from .engine.session import FrozenOracle, Session, Trace, replay
from .adversary.games import random_game
from .adversary.path_game import (
    AdversaryWins,
    outcome_to_record,
    play_against_engine,
    solve_path_game,
)
from .listgame.solver import solve_list_game
from .listgame.play import PainterStrategy, RandomListSource, play_list_game
from .store.results import ResultStore

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


def emit(record: T.Mapping[str, T.Any]):
    sys.stdout.write(dumps_line(record) + "\n")


def emit_text(text: str):
    sys.stdout.write(text)


def summary(title: str, rows: T.Mapping[str, T.Any]):
    table = Table(title=title, show_header=False)
    table.add_column("key", style="bold")
    table.add_column("value")
    for key, value in rows.items():
        table.add_row(key, str(value))
    stderr_console.print(table)


def error_report(e: Exception) -> T.Dict[str, T.Any]:
    report: T.Dict[str, T.Any] = {"error": type(e).__name__, "message": str(e)}
    if isinstance(e, IllegalEvent):
        report["violation"] = e.violation.reason
    if isinstance(e, PaletteExhausted):
        report["t"] = e.t
        report["vertex"] = e.vertex
    if isinstance(e, HorizonExceeded):
        report["stage"] = e.stage
        report["horizon"] = e.horizon
    if isinstance(e, SelfCheckFailed):
        report["witness"] = e.witness.to_record()
    return report


# ------------------------------------------------------------------------------
# Subcommands
# ------------------------------------------------------------------------------
def cmd_thue(ns: argparse.Namespace, config: Config) -> int:
    word = thue_ternary(ns.n)
    emit_text("".join(f"{s}\n" for s in word))
    summary("thue", {"n": ns.n, "alphabet": word.alphabet_size})
    return EXIT_OK


def cmd_verify(ns: argparse.Namespace, config: Config) -> int:
    if ns.sequence is not None:
        colors = [int(s) for s in ns.sequence.replace(",", " ").split()]
        w = check_path(colors)
    else:
        if ns.graph is None or ns.coloring is None:
            raise UsageError("verify needs --sequence, or --graph and --colors")
        doc = read_graph(ns.graph)
        c = read_coloring(ns.coloring)
        mode = ns.mode
        if mode == "path":
            order = path_order(doc.graph())
            w = check_path([c[v] for v in order])
            if w is not None:
                w = RepetitionWitness.new(order[i] for i in w.path)
        elif mode == "tree":
            w = check_tree(doc.graph(), c)
        elif mode == "vertical" and doc.root is None and doc.heights is not None:
            d = orient_by_heights(doc.graph(), doc.heights)
            w = check_directed(d, c, ns.max_half)
        elif mode == "vertical":
            w = check_vertical(doc.rooted_tree(), c)
        elif mode == "directed":
            w = check_directed(doc.digraph(), c, ns.max_half)
        else:
            w = check_graph(doc.graph(), c, ns.max_half)
    emit({"ok": w is None, "witness": None if w is None else w.to_record()})
    summary("verify", {"result": "nonrepetitive" if w is None else f"repetition {w}"})
    return EXIT_OK if w is None else EXIT_REFUTED


def cmd_precompute(ns: argparse.Namespace, config: Config) -> int:
    if config.palette_size is None or config.horizon is None or config.out is None:
        raise UsageError("precompute needs --palette, --horizon and --out")
    target = Target.parse(ns.target)
    start = time.perf_counter()
    p = precompute(
        target,
        config.palette_size,
        config.horizon,
        config.verification_level,
        node_cap=config.node_cap,
    )
    save(p, config.out)
    elapsed = time.perf_counter() - start
    emit(
        {
            "target": target.label,
            "palette_size": p.palette_size,
            "horizon": p.horizon,
            "vertices": len(p),
            "verification": p.verification.label,
            "out": str(config.out),
        }
    )
    summary(
        "precompute",
        {"target": target.label, "vertices": len(p), "seconds": f"{elapsed:.2f}"},
    )
    return EXIT_OK


def _script_for(ns: argparse.Namespace, config: Config, oracle) -> GameScript:
    if ns.script is not None:
        script = read_script(ns.script)
        if config.graph_class is not None and config.rule != script.rule:
            raise UsageError(
                f"script is a {script.rule.label} game, --class says {config.rule.label}"
            )
        return script
    if config.graph_class is None or ns.n is None:
        raise UsageError("give --script, or --class and --n for a random game")
    seed = resolve_seed(config.seed)
    horizon = config.horizon
    target = None
    if isinstance(oracle, FrozenOracle):
        target = oracle.palette.target
        if horizon is None:
            horizon = oracle.palette.horizon
    script = random_game(config.rule, ns.n, seed, horizon=horizon, target=target)
    logger.info("random %s game, seed %d, %d events", config.rule.label, seed, len(script))
    return script


def _play_interactive(ns: argparse.Namespace, config: Config) -> int:
    """
    Read one event record per line from standard in and answer each with its
    trace record as soon as the vertex is colored.

    A line that does not parse or breaks the class rule gets an error record
    and is skipped; the game goes on. Exhaustion ends the game.
    """
    if config.graph_class is None:
        raise UsageError("--interactive needs --class")
    oracle = config.build_oracle()
    session = Session.start(config.rule, oracle, config.session_config)
    emit_text(session.trace.dumps())
    sys.stdout.flush()
    refused = 0
    try:
        for line in sys.stdin:
            if not line.strip():
                continue
            try:
                e = GameEvent.from_record(session.t + 1, json.loads(line))
            except (KeyError, TypeError, ValueError) as err:
                bad = InvalidEvent(f"bad event line {line.strip()!r}: {err}")
                refused += 1
                emit(error_report(bad))
                sys.stdout.flush()
                continue
            try:
                session.step(e)
            except (InvalidEvent, IllegalEvent, HorizonExceeded) as err:
                refused += 1
                emit(error_report(err))
            else:
                emit(session.trace.records[-1])
            sys.stdout.flush()
    finally:
        if config.out is not None:
            Path(config.out).write_text(session.trace.dumps())
    summary(
        "play",
        {
            "class": session.rule.label,
            "oracle": oracle.label,
            "events": session.t,
            "refused": refused,
        },
    )
    return EXIT_REFUTED if refused else EXIT_OK


def cmd_play(ns: argparse.Namespace, config: Config) -> int:
    if ns.interactive:
        return _play_interactive(ns, config)
    oracle = config.build_oracle()
    script = _script_for(ns, config, oracle)
    if ns.save_script is not None:
        write_script(ns.save_script, script)
    session = Session.start(script.rule, oracle, config.session_config)
    try:
        for e in script.events:
            session.step(e)
    finally:
        text = session.trace.dumps()
        if config.out is not None:
            Path(config.out).write_text(text)
        else:
            emit_text(text)
    summary(
        "play",
        {"class": script.rule.label, "oracle": oracle.label, "events": len(script)},
    )
    return EXIT_OK


def _load_trace(path: Path) -> Trace:
    records = list(iter_records(Path(path).read_text()))
    if not records:
        raise UsageError(f"empty trace file {path}")
    return Trace(header=records[0], records=records[1:])


def cmd_replay(ns: argparse.Namespace, config: Config) -> int:
    oracle = config.build_oracle()
    script = read_script(ns.script)
    trace = replay(script, oracle, config.session_config)
    if ns.trace is None:
        emit_text(trace.dumps())
        return EXIT_OK
    expected = _load_trace(ns.trace)
    mismatch = None
    for got, want in zip(trace.records, expected.records):
        if got["v"] != want.get("v") or got["color"] != want.get("color"):
            mismatch = got["t"]
            break
    if mismatch is None and len(trace.records) != len(expected.records):
        mismatch = min(len(trace.records), len(expected.records))
    emit({"ok": mismatch is None, "mismatch_at": mismatch, "records": len(trace.records)})
    return EXIT_OK if mismatch is None else EXIT_REFUTED


def cmd_game_search(ns: argparse.Namespace, config: Config) -> int:
    if config.palette_size is None:
        raise UsageError("game-search needs --palette")
    kwargs = {}
    if config.node_cap is not None:
        kwargs["node_cap"] = config.node_cap
    start = time.perf_counter()
    outcome = solve_path_game(
        config.palette_size, ns.max_plies, left_to_right=ns.left_to_right, **kwargs
    )
    record = outcome_to_record(outcome)
    record["palette_size"] = config.palette_size
    record["left_to_right"] = ns.left_to_right
    if isinstance(outcome, AdversaryWins):
        if ns.strategy_out is not None:
            Path(ns.strategy_out).write_text(outcome.strategy.dumps())
            record["strategy"] = str(ns.strategy_out)
        if ns.check_engine:
            record["engine_exhausted_at"] = play_against_engine(
                outcome.strategy, config=config.session_config
            )
    emit(record)
    summary(
        "game-search",
        {
            "palette": config.palette_size,
            "outcome": outcome.label,
            "depth": outcome.depth,
            "positions": outcome.nodes,
            "seconds": f"{time.perf_counter() - start:.2f}",
        },
    )
    return EXIT_OK


def cmd_list_game(ns: argparse.Namespace, config: Config) -> int:
    kwargs = {}
    if config.node_cap is not None:
        kwargs["node_cap"] = config.node_cap
    outcome = solve_list_game(ns.size, ns.max_plies, **kwargs)
    record = outcome_to_record(outcome)
    record["list_size"] = ns.size
    emit(record)
    summary(
        "list-game",
        {"size": ns.size, "outcome": outcome.label, "depth": outcome.depth},
    )
    return EXIT_OK


def cmd_list_play(ns: argparse.Namespace, config: Config) -> int:
    strategy = PainterStrategy.parse(ns.strategy)
    if ns.source == "solver":
        outcome = solve_list_game(ns.size, ns.solver_depth)
        if not isinstance(outcome, AdversaryWins):
            emit({"error": "NoAdversary", "outcome": outcome_to_record(outcome)})
            return EXIT_REFUTED
        source = outcome.strategy
    else:
        seed = resolve_seed(config.seed)
        source = RandomListSource(ns.size, ns.universe, seed)
    trace = play_list_game(strategy, source, ns.n)
    emit_text(trace.dumps())
    summary(
        "list-play",
        {"strategy": strategy.label, "steps": len(trace.colors), "survived": trace.survived},
    )
    return EXIT_OK


def _graph_for_mode(ns: argparse.Namespace, mode: CheckMode):
    doc = read_graph(ns.graph)
    if mode == CheckMode.directed:
        return doc.digraph(), None
    if mode == CheckMode.vertical and doc.heights is None:
        return doc.rooted_tree(), None
    return doc.graph(), doc.heights


def cmd_min_colors(ns: argparse.Namespace, config: Config) -> int:
    mode = CheckMode(ns.mode)
    g, heights = _graph_for_mode(ns, mode)
    value = min_colors(g, mode, heights, vertex_budget=config.vertex_budget)
    emit({"graph": str(ns.graph), "mode": mode.value, "min_colors": value})
    summary("min-colors", {"mode": mode.value, "value": value})
    return EXIT_OK


def run_corpus_game(
    script: GameScript,
    oracle,
    config: Config,
    seed: int,
) -> T.Dict[str, T.Any]:
    """
    Play one scripted game and describe its outcome as a store row.
    """
    start = time.perf_counter()
    outcome, exhausted, witness = "ok", 0, None
    session = Session.start(script.rule, oracle, config.session_config)
    try:
        for e in script.events:
            session.step(e)
    except PaletteExhausted:
        outcome, exhausted = "exhausted", 1
    except HorizonExceeded:
        outcome = "horizon"
    except SelfCheckFailed as e:
        outcome, witness = "witness", json.dumps(e.witness.to_record())
    return {
        "scenario_id": f"{script.rule.label}-{oracle.label}-{seed}-{len(script)}",
        "cls": script.rule.cls.value,
        "k": script.rule.k,
        "oracle": oracle.label,
        "palette_size": oracle.palette_size,
        "seed": seed,
        "events": len(script),
        "outcome": outcome,
        "exhausted": exhausted,
        "witness": witness,
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
    }


def cmd_corpus(ns: argparse.Namespace, config: Config) -> int:
    if config.graph_class is None:
        raise UsageError("corpus needs --class")
    oracle = config.build_oracle()
    seed = resolve_seed(config.seed)
    horizon, target = config.horizon, None
    if isinstance(oracle, FrozenOracle):
        target = oracle.palette.target
        horizon = horizon or oracle.palette.horizon
    rows = []
    for i in range(ns.games):
        game_seed = seed + i
        script = random_game(config.rule, ns.n, game_seed, horizon=horizon, target=target)
        rows.append(run_corpus_game(script, oracle, config, game_seed))
    text = "".join(dumps_line(r) + "\n" for r in rows)
    if config.out is not None:
        Path(config.out).write_text(text)
    else:
        emit_text(text)
    if not ns.no_db:
        ResultStore.new(ns.db).record(rows)
    counts: T.Dict[str, int] = {}
    for r in rows:
        counts[r["outcome"]] = counts.get(r["outcome"], 0) + 1
    summary("corpus", {"class": config.rule.label, "seed": seed, **counts})
    return EXIT_REFUTED if counts.get("witness") else EXIT_OK


def cmd_dump(ns: argparse.Namespace, config: Config) -> int:
    if config.horizon is None or config.out is None:
        raise UsageError("dump needs --horizon and --out")
    graph_path, ids_path = dump(Target.parse(ns.target), config.horizon, config.out)
    emit({"graph": str(graph_path), "ids": str(ids_path)})
    return EXIT_OK


# ------------------------------------------------------------------------------
# Parser
# ------------------------------------------------------------------------------
def _add_class(p: argparse.ArgumentParser, required: bool = False):
    p.add_argument("--class", dest="graph_class", required=required,
                   help="left_to_right_path, path, tree, cycle, series_parallel, "
                        "partial_k_tree or k_tree")
    p.add_argument("--k", type=int, default=None, help="width of k-tree classes")


def _add_session(p: argparse.ArgumentParser):
    p.add_argument("--oracle", required=True, help="frozen:FILE, lazy:N or lazy:N:TARGET")
    p.add_argument("--max-half", type=int, default=8,
                   help="half length bound for the bounded checks")
    p.add_argument("--no-self-check", dest="self_check", action="store_false")
    p.add_argument("--no-universal-check", dest="universal_check", action="store_false",
                   help="lazy mode: do not police the universal subgraph")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="online-thue",
        description="Online nonrepetitive coloring: engine, verifiers and game solvers.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for INFO, -vv for DEBUG logs on standard error")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("thue", help="square-free ternary word")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_thue)

    p = sub.add_parser("verify", help="check a coloring for repetitions")
    p.add_argument("--sequence", help="colors of a path, comma or space separated")
    p.add_argument("--graph", type=Path)
    p.add_argument("--colors", "--coloring", dest="coloring", type=Path,
                   help="coloring file, one {\"v\",\"color\"} record per vertex")
    p.add_argument("--mode", default="full",
                   choices=["full", "vertical", "directed", "path", "tree", "graph"],
                   help="full (alias graph) checks every path; path and tree use "
                        "the faster checkers of those classes")
    p.add_argument("--max-half", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("precompute", help="freeze a coloring of a universal horizon")
    p.add_argument("--target", required=True, help="O or U(k)")
    p.add_argument("--palette", dest="palette_size", type=int, required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--verify", dest="verification", default="full",
                   help="full, vertical-full, bounded:L or sampled:L:N:LEN:SEED")
    p.add_argument("--node-cap", type=int, default=None)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=cmd_precompute)

    p = sub.add_parser("play", help="run a game through the online colorer")
    _add_class(p)
    _add_session(p)
    source = p.add_mutually_exclusive_group()
    source.add_argument("--script", type=Path)
    source.add_argument(
        "--interactive",
        action="store_true",
        help="read event records from standard in, one per line",
    )
    p.add_argument("--n", type=int, help="random game length when no script is given")
    p.add_argument("--seed", type=int)
    p.add_argument("--horizon", type=int, help="confine random games to this stage")
    p.add_argument("--save-script", type=Path)
    p.add_argument("--out", type=Path, help="trace file (default: standard out)")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("replay", help="replay a script, optionally against a trace")
    _add_session(p)
    p.add_argument("--script", type=Path, required=True)
    p.add_argument("--trace", type=Path)
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("game-search", help="solve the online path game")
    p.add_argument("--palette", dest="palette_size", type=int, required=True)
    p.add_argument("--max-plies", type=int, required=True)
    p.add_argument("--left-to-right", action="store_true")
    p.add_argument("--node-cap", type=int, default=None)
    p.add_argument("--strategy-out", type=Path)
    p.add_argument("--check-engine", action="store_true",
                   help="replay a winning strategy against the lazy engine")
    p.set_defaults(func=cmd_game_search)

    p = sub.add_parser("list-game", help="solve the online list game")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--max-plies", type=int, required=True)
    p.add_argument("--node-cap", type=int, default=None)
    p.set_defaults(func=cmd_list_game)

    p = sub.add_parser("list-play", help="play the list game")
    p.add_argument("--strategy", default="greedy", help="greedy or lookahead:D")
    p.add_argument("--size", type=int, default=4)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--universe", type=int, default=12, help="colors random lists draw from")
    p.add_argument("--source", choices=["random", "solver"], default="random")
    p.add_argument("--solver-depth", type=int, default=12)
    p.set_defaults(func=cmd_list_play)

    p = sub.add_parser("min-colors", help="exact least palette of a small graph")
    p.add_argument("--graph", type=Path, required=True)
    p.add_argument("--mode", default="full", choices=[m.value for m in CheckMode])
    p.add_argument("--vertex-budget", type=int, default=None)
    p.set_defaults(func=cmd_min_colors)

    p = sub.add_parser("corpus", help="random games through the colorer, into the store")
    _add_class(p, required=True)
    _add_session(p)
    p.add_argument("--games", type=int, default=10)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--horizon", type=int)
    p.add_argument("--out", type=Path)
    p.add_argument("--db", type=Path, default=path_results_sqlite)
    p.add_argument("--no-db", action="store_true")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("dump", help="write a universal horizon as a graph file")
    p.add_argument("--target", required=True, help="O or U(k)")
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=cmd_dump)
    return parser


def main(argv: T.Optional[T.Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    level = {0: logging.WARNING, 1: logging.INFO}.get(ns.verbose, logging.DEBUG)
    setup_logging(level)
    try:
        config = Config.from_namespace(ns)
        return ns.func(ns, config)
    except OnlineThueError as e:
        emit(error_report(e))
        return EXIT_REFUTED
    except (UsageError, ValueError, FileNotFoundError) as e:
        stderr_console.print(f"[red]error:[/red] {e}")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
