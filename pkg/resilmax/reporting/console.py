# resilmax/reporting/console.py
"""
Console reporting functions for solver, adversary and verification results.
"""
from __future__ import annotations

import math
from typing import Optional, Sequence

from rich import box
from rich.console import Console
from rich.table import Table
from rich.tree import Tree

from ..analysis.adversary import RemovalResult
from ..analysis.bench import BenchResult
from ..analysis.solvers import Solution
from ..analysis.verify import Certificate
from ..model.ground import GroundSet
from ..model.instance import Instance
from ..model.objective import Curvature

console = Console()


def fmt(value: float) -> str:
    """Decimal rendering with 12 significant digits; NaN shows as ``-``."""
    return "-" if math.isnan(value) else format(value, ".12g")


def fmt_set(s: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in s) + "]"


def fmt_labels(s: Sequence[int], ground: Optional[GroundSet]) -> Optional[str]:
    """Element labels for ``s``, or ``None`` when the ground set carries none."""
    if ground is None or ground.labels is None:
        return None
    return ", ".join(ground.label(x) for x in s)


def render_instance(inst: Instance, *, title: str = "Instance") -> None:
    t = Table(title=title, box=box.SIMPLE_HEAVY)
    t.add_column("Field", style="bold")
    t.add_column("Value")
    t.add_row("n", str(inst.n))
    t.add_row("objective", inst.objective.family)
    t.add_row("matroid", repr(inst.matroid))
    t.add_row("rank", str(inst.rank))
    t.add_row("alpha", str(inst.alpha))
    console.print(t)


def _label_rows(t: Table, ground: Optional[GroundSet], **sets: Sequence[int]) -> None:
    for name, s in sets.items():
        text = fmt_labels(s, ground)
        if text is not None:
            t.add_row(f"{name} (labels)", text)


def render_removal(
    rem: RemovalResult,
    *,
    title: str = "Worst-case removal",
    ground: Optional[GroundSet] = None,
) -> None:
    t = Table(title=title, box=box.SIMPLE_HEAVY)
    t.add_column("Field", style="bold")
    t.add_column("Value")
    t.add_row("removed", fmt_set(rem.removed))
    t.add_row("remaining", fmt_set(rem.remaining))
    _label_rows(t, ground, removed=rem.removed, remaining=rem.remaining)
    t.add_row("value", fmt(rem.value))
    t.add_row("exact", "yes" if rem.exact else "no (greedy heuristic)")
    console.print(t)


def render_solution(sol: Solution, *, ground: Optional[GroundSet] = None) -> None:
    t = Table(title=f"Solution ({sol.algorithm})", box=box.SIMPLE_HEAVY)
    t.add_column("Field", style="bold")
    t.add_column("Value")
    t.add_row("chosen", fmt_set(sol.chosen))
    t.add_row("selection order", fmt_set(sol.selection_order))
    t.add_row("removed", fmt_set(sol.removal.removed))
    t.add_row("remaining", fmt_set(sol.removal.remaining))
    _label_rows(t, ground, chosen=sol.chosen, remaining=sol.removal.remaining)
    t.add_row("resilient value", fmt(sol.value))
    if not sol.removal.exact:
        t.add_row("note", "[yellow]removal from greedy heuristic[/yellow]")
    if sol.truncated:
        t.add_row("note", "[yellow]ground set exhausted before full rank[/yellow]")
    console.print(t)


def render_curvature(curv: Curvature) -> None:
    t = Table(title="Curvature", box=box.SIMPLE_HEAVY)
    t.add_column("Field", style="bold")
    t.add_column("Value")
    t.add_row("nu", fmt(curv.nu))
    t.add_row("argmin element", "-" if curv.argmin_element is None else str(curv.argmin_element))
    t.add_row("skipped null elements", fmt_set(curv.skipped_null_elements))
    console.print(t)


def render_certificate(cert: Certificate) -> None:
    """Certificate summary plus the proof chain as a PASS/FAIL tree."""
    t = Table(title="Certificate", box=box.SIMPLE_HEAVY)
    t.add_column("Field", style="bold")
    t.add_column("Value")
    t.add_row("nu", fmt(cert.nu.nu))
    t.add_row("f(R(A_sol))", fmt(cert.value_sol))
    t.add_row("f(R(A_opt))", fmt(cert.value_opt))
    t.add_row("bound (1-nu)*f(R(A_opt))", fmt(cert.bound))
    t.add_row("ratio", fmt(cert.ratio))
    t.add_row(
        "theorem holds", "[green]yes[/green]" if cert.theorem_holds else "[red]NO[/red]"
    )
    console.print(t)

    tree = Tree("Proof chain", guide_style="bright_black")
    for f in cert.proof_chain.findings():
        status = "[green]PASS[/green]" if f.ok else "[red]FAIL[/red]"
        node = tree.add(f"{status} — {f.name} — {f.details}")
        for ck, cv in f.context.items():
            node.add(f"[dim]{ck}[/dim]: {cv}")
    console.print(tree)


def render_bench_summary(
    result: BenchResult, *, out: Optional[str] = None, target: Optional[Console] = None
) -> None:
    """Per-family ratio table; ``target`` defaults to the stdout console."""
    con = target or console
    t = Table(title="Benchmark summary", box=box.SIMPLE_HEAVY)
    t.add_column("family", style="bold")
    t.add_column("trials", justify="right")
    t.add_column("min ratio (myopic)", justify="right")
    t.add_column("mean ratio (myopic)", justify="right")
    t.add_column("min ratio (greedy)", justify="right")
    t.add_column("mean ratio (greedy)", justify="right")
    t.add_column("violations", justify="right")
    for s in result.summaries:
        t.add_row(
            s.family,
            str(s.trials),
            fmt(s.min_ratio_myopic),
            fmt(s.mean_ratio_myopic),
            fmt(s.min_ratio_greedy),
            fmt(s.mean_ratio_greedy),
            str(s.violations),
        )
    con.print(t)
    style = "green" if result.violations == 0 else "red"
    con.print(f"[{style}]violations: {result.violations}[/{style}]")
    for row in result.rows:
        if row.error is not None:
            con.print(f"[red]{row.instance_id}[/red] errored: {row.error}")
    if out:
        con.print(f"[dim]Wrote {len(result.rows)} rows → {out}[/dim]")
