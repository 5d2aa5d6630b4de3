"""Command line front end: solve, simulate, axioms, serve.

Each command parses a game file, delegates to the library, and renders
the resulting document as text or JSON.  All failures exit nonzero with
a one-line diagnostic on stderr.
"""

from __future__ import annotations

import json
import logging
import os
import sys
from pathlib import Path

import click

from .documents import DocumentError, parse_game
from .games import GameBuildError, PlayerCapError, savings_transform
from .network import simulate_formation
from .reports import render_axioms, render_solution, render_trace
from .solve import axiom_document, build_solution, solve_allocation, trace_document

_FAILURE = 1


def _read_game(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror or exc}")
    try:
        return parse_game(text)
    except DocumentError as exc:
        where = f" (at {exc.field!r})" if exc.field else ""
        _fail(f"{path}: {exc}{where}")


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(_FAILURE)


def _emit(doc: dict, output_format: str, renderer) -> None:
    if output_format == "json":
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(renderer(doc), nl=False)


@click.group()
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    help="Output rendering.",
)
@click.option("-v", "--verbose", count=True, help="Increase log verbosity.")
@click.pass_context
def main(ctx: click.Context, output_format: str, verbose: int) -> None:
    """Fair cost sharing for joint projects: solve games, simulate coalition building."""
    logging.basicConfig(
        level=logging.WARNING - 10 * min(verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.ensure_object(dict)
    ctx.obj["format"] = output_format


@main.command()
@click.argument("game_path", type=click.Path())
@click.option(
    "--method",
    type=click.Choice(["subset", "permutation"]),
    default="subset",
    help="Exact computation route.",
)
@click.option("--table", is_flag=True, help="Include the per-permutation marginal table.")
@click.option("--axioms", is_flag=True, help="Include the full axiom checker output.")
@click.option("--core", is_flag=True, help="Include the core membership check.")
@click.option("--budgets", is_flag=True, help="Compare shares against the file's budgets.")
@click.pass_context
def solve(ctx, game_path, method, table, axioms, core, budgets) -> None:
    """Compute the exact allocation and cost shares for a game file."""
    game, file_budgets = _read_game(game_path)
    try:
        doc = build_solution(
            game,
            budgets=file_budgets,
            method=method,
            include_table=table,
            include_axioms=axioms,
            include_core=core,
            include_budgets=budgets,
        )
    except (PlayerCapError, GameBuildError, ValueError) as exc:
        _fail(str(exc))
    _emit(doc, ctx.obj["format"], render_solution)


@main.command()
@click.argument("game_path", type=click.Path())
@click.option(
    "--policy",
    type=click.Choice(["greedy-merge", "random"]),
    default="greedy-merge",
    help="How each round picks the merge to propose.",
)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-rounds", type=int, default=100, show_default=True)
@click.pass_context
def simulate(ctx, game_path, policy, seed, max_rounds) -> None:
    """Run coalition formation on a game file and print the trace."""
    game, _ = _read_game(game_path)
    try:
        result = simulate_formation(
            game, policy=policy, max_rounds=max_rounds, seed=seed
        )
    except (PlayerCapError, ValueError) as exc:
        _fail(str(exc))
    doc = trace_document(result, policy, seed, max_rounds)
    _emit(doc, ctx.obj["format"], render_trace)


@main.command()
@click.argument("game_path", type=click.Path())
@click.pass_context
def axioms(ctx, game_path) -> None:
    """Run the four-axiom checker suite on a game file."""
    game, _ = _read_game(game_path)
    try:
        savings = savings_transform(game)
        allocation = solve_allocation(savings, "subset")
        doc = axiom_document(savings, allocation)
    except (PlayerCapError, ValueError) as exc:
        _fail(str(exc))
    _emit(doc, ctx.obj["format"], lambda d: render_axioms(d) + "\n")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--port",
    type=int,
    default=None,
    help="Listen port [default: $FAIRSHARE_PORT or 8000].",
)
@click.option(
    "--snapshot",
    type=click.Path(),
    default=None,
    help="Game store snapshot file [default: $FAIRSHARE_SNAPSHOT].",
)
@click.option(
    "--static",
    "static_dir",
    type=click.Path(),
    default=None,
    help="Web UI asset directory [default: $FAIRSHARE_STATIC or ./frontend/dist].",
)
def serve(host, port, snapshot, static_dir) -> None:
    """Start the HTTP service (and the web UI, when its assets are built)."""
    import uvicorn

    from .service import create_app

    if port is None:
        port = int(os.environ.get("FAIRSHARE_PORT", "8000"))
    app = create_app(static_dir=static_dir, snapshot_path=snapshot)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
