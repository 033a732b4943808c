# resilmax/cli.py
"""
cli.py

Rich console CLI:
- Default:   show ASCII banner
- gen:       write a seeded random instance file
- solve:     run a solver (myopic | myopic_blockwise | greedy | exact) on an instance
- curvature: print the objective's curvature
- adversary: worst-case removal from a given set
- verify:    certify the (1 - nu) bound and every step of its proof chain
- bench:     random benchmark sweep written as CSV
- version:   show the package version.

Exit codes: 0 success, 1 a verification/benchmark check failed, 2 bad input or error.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Dict, Optional

from loguru import logger
from rich.console import Console
from rich.panel import Panel

from resilmax import __version__
from resilmax.analysis.adversary import worst_case_removal_exact, worst_case_removal_greedy
from resilmax.analysis.bench import BenchConfig, run_bench
from resilmax.analysis.solvers import ALGORITHMS, solve, solve_exact_resilient, solve_myopic
from resilmax.analysis.verify import certify
from resilmax.ascii import AsciiArtDisplayer
from resilmax.config import Settings, load_settings
from resilmax.errors import ResilMaxError
from resilmax.formats.instance_json import emit_instance, load_instance, save_instance
from resilmax.logging import configure_logging
from resilmax.model.generate import FAMILIES, GenParams, generate
from resilmax.model.ground import parse_id_list
from resilmax.model.objective import curvature
from resilmax.reporting.console import (
    render_bench_summary,
    render_certificate,
    render_curvature,
    render_instance,
    render_removal,
    render_solution,
)
from resilmax.reporting.csv_reporter import bench_csv, write_bench_csv
from resilmax.reporting.json_reporter import write_json

console = Console()

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="resilmax",
        description="Resilient monotone submodular maximization workbench.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    sub = p.add_subparsers(dest="cmd", title="Available Commands", metavar="<command>")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--debug", action="store_true", help="Enable debug logging")

    with_file = argparse.ArgumentParser(add_help=False, parents=[common])
    with_file.add_argument("path", help="Path to an instance file (.json)")
    with_file.add_argument(
        "--json-out", type=str, default=None, help="Write JSON report to this path"
    )

    sp_gen = sub.add_parser("gen", parents=[common], help="Generate a seeded random instance")
    sp_gen.add_argument("family", choices=FAMILIES, help="Objective family")
    sp_gen.add_argument("--n", type=int, required=True, help="Ground set size")
    sp_gen.add_argument("--seed", type=int, default=0, help="64-bit PRNG seed")
    sp_gen.add_argument("--items", type=int, default=None, help="Coverage item count")
    sp_gen.add_argument("--clients", type=int, default=None, help="Facility client count")
    sp_gen.add_argument("--matroid", choices=("uniform", "partition"), default="uniform")
    sp_gen.add_argument("--rank", type=int, default=None, help="Uniform matroid rank")
    sp_gen.add_argument("--blocks", type=int, default=None, help="Partition block count")
    sp_gen.add_argument("--capacity", type=int, default=1, help="Per-block capacity")
    sp_gen.add_argument("--alpha", type=int, default=1, help="Removal budget")
    sp_gen.add_argument("--out", type=str, default=None, help="Output path (default stdout)")

    sp_solve = sub.add_parser("solve", parents=[with_file], help="Solve an instance")
    sp_solve.add_argument("--algorithm", choices=ALGORITHMS, default="myopic")

    sub.add_parser("curvature", parents=[with_file], help="Curvature of the objective")

    sp_adv = sub.add_parser("adversary", parents=[with_file], help="Worst-case removal")
    sp_adv.add_argument("--set", dest="elements", required=True, help='Elements, e.g. "0,1,2"')
    sp_adv.add_argument("--greedy", action="store_true", help="Use the greedy heuristic")

    sub.add_parser("verify", parents=[with_file], help="Certify the (1 - nu) bound")

    sp_bench = sub.add_parser("bench", parents=[common], help="Run the benchmark sweep")
    sp_bench.add_argument(
        "--families", type=str, default=",".join(FAMILIES), help="Comma-separated families"
    )
    sp_bench.add_argument("--trials", type=int, default=300)
    sp_bench.add_argument("--seed", type=int, default=42)
    sp_bench.add_argument("--n-max", type=int, default=10)
    sp_bench.add_argument("--rank-max", type=int, default=5)
    sp_bench.add_argument("--alpha-max", type=int, default=2)
    sp_bench.add_argument("--out", type=str, default=None, help="CSV path (default stdout)")
    sp_bench.add_argument(
        "--exact-cap", type=int, default=None, help="Base enumeration limit per trial"
    )
    sp_bench.add_argument(
        "--record-timing", action="store_true", help="Fill the wall_time_ms column"
    )

    sub.add_parser("version", help="Show the version of resilmax")

    return p


def _cmd_gen(args: argparse.Namespace, _settings: Settings) -> int:
    params = GenParams(
        items=args.items,
        clients=args.clients,
        matroid=args.matroid,
        rank=args.rank,
        blocks=args.blocks,
        capacity=args.capacity,
        alpha=args.alpha,
    )
    inst = generate(args.family, args.n, args.seed, params)
    if args.out:
        save_instance(args.out, inst)
        console.print(f"[dim]Wrote instance → {args.out}[/dim]")
    else:
        sys.stdout.write(emit_instance(inst))
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace, settings: Settings) -> int:
    inst = load_instance(args.path)
    render_instance(inst)
    sol = solve(
        inst,
        args.algorithm,
        workers=settings.workers,
        exact_cap=settings.exact_cap,
        adversary_cap=settings.adversary_cap,
    )
    render_solution(sol, ground=inst.ground)
    if args.json_out:
        write_json(sol, args.json_out)
        console.print(f"[dim]Wrote JSON report → {args.json_out}[/dim]")
    return EXIT_OK


def _cmd_curvature(args: argparse.Namespace, _settings: Settings) -> int:
    inst = load_instance(args.path)
    curv = curvature(inst.objective, inst.ground)
    render_curvature(curv)
    if args.json_out:
        write_json(curv, args.json_out)
    return EXIT_OK


def _cmd_adversary(args: argparse.Namespace, settings: Settings) -> int:
    inst = load_instance(args.path)
    chosen = parse_id_list(args.elements, inst.n)
    if args.greedy:
        rem = worst_case_removal_greedy(inst.objective, chosen, inst.alpha)
    else:
        rem = worst_case_removal_exact(inst.objective, chosen, inst.alpha, settings.adversary_cap)
    render_removal(rem, ground=inst.ground)
    if args.json_out:
        write_json(rem, args.json_out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    inst = load_instance(args.path)
    render_instance(inst)
    sol = solve_myopic(inst, adversary_cap=settings.adversary_cap)
    opt = solve_exact_resilient(
        inst, settings.exact_cap, adversary_cap=settings.adversary_cap, workers=settings.workers
    )
    cert = certify(inst, sol, opt, cap=settings.adversary_cap)
    render_certificate(cert)
    if args.json_out:
        write_json(cert, args.json_out)
    ok = cert.theorem_holds and cert.proof_chain.all_hold
    console.print(
        Panel(
            f"[bold]Result:[/bold] {'[green]OK[/green]' if ok else '[red]FAILED[/red]'}",
            style="bold cyan",
        )
    )
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_bench(args: argparse.Namespace, settings: Settings) -> int:
    families = tuple(f.strip() for f in args.families.split(",") if f.strip())
    unknown = [f for f in families if f not in FAMILIES]
    if not families or unknown:
        console.print(f"[red]Unknown families:[/red] {unknown or args.families}")
        return EXIT_ERROR
    config = BenchConfig(
        families=families,
        trials=args.trials,
        seed=args.seed,
        n_max=args.n_max,
        rank_max=args.rank_max,
        alpha_max=args.alpha_max,
        workers=settings.workers,
        record_timing=args.record_timing,
        exact_cap=settings.exact_cap if args.exact_cap is None else args.exact_cap,
        adversary_cap=settings.adversary_cap,
    )
    result = run_bench(config)
    if args.out:
        write_bench_csv(result.rows, args.out)
        render_bench_summary(result, out=args.out)
    else:
        sys.stdout.write(bench_csv(result.rows))
        render_bench_summary(result, target=Console(stderr=True))
    return EXIT_OK if result.violations == 0 else EXIT_CHECK_FAILED


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], int]] = {
    "gen": _cmd_gen,
    "solve": _cmd_solve,
    "curvature": _cmd_curvature,
    "adversary": _cmd_adversary,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    # No subcommand → banner
    if not args.cmd:
        AsciiArtDisplayer().display()
        return EXIT_OK

    if args.cmd == "version":
        console.print(f"resilmax version {__version__}")
        return EXIT_OK

    handler = COMMANDS.get(args.cmd)
    if handler is None:
        parser.print_help()
        return EXIT_ERROR

    configure_logging(debug=args.debug)
    path = getattr(args, "path", None)
    if path is not None and not os.path.exists(path):
        console.print(f"[red]File not found:[/red] {path}")
        return EXIT_ERROR
    try:
        return handler(args, load_settings())
    except ResilMaxError as e:
        logger.debug("command {cmd} failed: {err!r}", cmd=args.cmd, err=e)
        console.print(f"[red]Error:[/red] {e}")
        return EXIT_ERROR
