"""
命令行界面
typer 命令定义与 rich 终端渲染
"""
import json
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import typer
from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from src.cli.commands import (
    EXIT_ERROR,
    EXIT_OK,
    EXIT_THEOREM_VIOLATION,
    cmd_aut,
    cmd_check,
    cmd_enumerate,
    cmd_gallery,
    cmd_replay,
    cmd_verify,
)
from src.utils.config import CorpusFilter, RunConfig
from src.utils.exceptions import SemigroupLabException
from src.utils.logger import set_global_level
from src.verify.report import TheoremReport

app = typer.Typer(
    name="isemlab",
    help="Finite inverse-semigroup lab: enumerate small semigroups and check statements about their automorphisms.",
    no_args_is_help=True,
    add_completion=False,
)

console = Console()
err_console = Console(stderr=True)


@contextmanager
def _handled() -> Iterator[None]:
    """把实验室异常转换为退出码 2"""
    try:
        yield
    except SemigroupLabException as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_ERROR)


def _print_json(payload: Any) -> None:
    typer.echo(json.dumps(payload, indent=2, ensure_ascii=False))


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level")) -> None:
    if verbose:
        set_global_level("DEBUG")


@app.command()
def check(
    table_file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Multiplication table file"),
    as_json: bool = typer.Option(False, "--json", help="Print the property report as JSON"),
) -> None:
    """Validate a table and print its structural properties."""
    with _handled():
        report = cmd_check(str(table_file))

    if as_json:
        _print_json(report)
        return

    table = Table(title=f"{table_file.name} (order {report['order']})")
    table.add_column("Property", style="cyan")
    table.add_column("Value")
    for key in ("commutative", "band", "regular", "inverse", "completely_regular",
                "clifford", "group", "cancellative", "uniquely_2_divisible"):
        table.add_row(key, "[green]yes[/green]" if report[key] else "no")
    table.add_row("idempotents", " ".join(report["idempotents"]) or "-")
    if report["inverses"] is not None:
        table.add_row("inverses", " ".join(report["inverses"]))
    if "nilpotent" in report:
        table.add_row("nilpotent", "yes" if report["nilpotent"] else "no")
    if "nilpotency_class" in report and report["nilpotency_class"] is not None:
        table.add_row("nilpotency class", str(report["nilpotency_class"]))
    for relation, sizes in report["green_class_sizes"].items():
        table.add_row(f"{relation}-class sizes", " ".join(str(s) for s in sizes))
    if "natural_order" in report:
        table.add_row("natural order (b < a)",
                      ", ".join(f"{b}<{a}" for b, a in report["natural_order"]) or "-")
    console.print(table)

    if "clifford_decomposition" in report:
        console.print(_clifford_table(report["clifford_decomposition"]))


def _clifford_table(decomposition: Dict[str, Any]) -> Table:
    table = Table(title="Clifford decomposition")
    table.add_column("β", style="cyan")
    table.add_column("G_β")
    table.add_column("linking maps φ_{β,γ}")
    links: Dict[str, List[str]] = {}
    for link in decomposition["linking_maps"]:
        if link["from"] == link["to"]:
            continue
        images = " ".join(f"{g}↦{v}" for g, v in link["map"].items())
        links.setdefault(link["from"], []).append(f"→{link['to']}: {images}")
    for beta, elements in decomposition["groups"].items():
        table.add_row(beta, " ".join(elements), "; ".join(links.get(beta, [])) or "-")
    return table


@app.command()
def aut(
    table_file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Multiplication table file"),
    workers: int = typer.Option(1, "--workers", min=1, help="Worker processes"),
    as_json: bool = typer.Option(False, "--json", help="Print automorphisms as JSON"),
) -> None:
    """List the automorphisms of a table."""
    with _handled():
        rows = cmd_aut(str(table_file), workers)

    if as_json:
        _print_json(rows)
        return

    table = Table(title=f"Aut({table_file.name}): {len(rows)} automorphisms")
    table.add_column("α", style="cyan")
    table.add_column("order", justify="right")
    table.add_column("|Fix|", justify="right")
    table.add_column("Fix = E")
    table.add_column("ψ injective")
    for row in rows:
        psi = "-" if row["psi_injective"] is None else ("yes" if row["psi_injective"] else "no")
        table.add_row(" ".join(row["images"]), str(row["order"]), str(row["fixed"]),
                      "yes" if row["idempotent_fixing"] else "no", psi)
    console.print(table)


def _summary_table(reports: List[TheoremReport]) -> Table:
    table = Table(title="Verification summary")
    table.add_column("Statement", style="cyan")
    table.add_column("Kind")
    table.add_column("Semigroups", justify="right")
    table.add_column("Pairs", justify="right")
    table.add_column("Satisfying", justify="right")
    table.add_column("Skipped", justify="right")
    table.add_column("Violations", justify="right")
    table.add_column("Status")
    for report in reports:
        status = "[green]PASS[/green]" if report.passed else "[red]FAIL[/red]"
        table.add_row(report.statement, report.kind, str(report.semigroups), str(report.checked),
                      str(report.satisfied_hypotheses), str(report.skipped),
                      str(len(report.violations)), status)
    return table


@app.command()
def verify(
    statements: List[str] = typer.Argument(..., help="Statement ids or aliases (lemma21, proof12, theorems, conjectures, all)"),
    max_order: int = typer.Option(4, "--max-order", help="Largest order in the corpus"),
    corpus_filter: Optional[CorpusFilter] = typer.Option(None, "--filter", help="Override each statement's corpus filter"),
    workers: int = typer.Option(1, "--workers", help="Worker processes"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output directory for reports"),
    force_large: bool = typer.Option(False, "--force-large", help="Allow orders above the default caps"),
    corpus: Optional[Path] = typer.Option(None, "--corpus", exists=True, dir_okay=False, help="Use a stored corpus file"),
) -> None:
    """Run statements over the enumerated corpus and write JSON reports."""
    with _handled():
        run_config = RunConfig(
            command="verify",
            max_order=max_order,
            corpus_filter=corpus_filter,
            output_path=str(out) if out else None,
            workers=workers,
            force_large=force_large,
        )
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            console=err_console,
            transient=True,
        ) as progress:
            task = progress.add_task("Checking semigroups...", total=None)

            def on_progress(done: int, total: int) -> None:
                progress.update(task, completed=done, total=total,
                                description=f"Checking semigroups {done}/{total}")

            outcome = cmd_verify(statements, run_config, str(corpus) if corpus else None, on_progress)

    console.print(_summary_table(outcome.reports))
    for path in outcome.report_paths:
        console.print(f"[dim]report written to {path}[/dim]")

    if outcome.counterexamples:
        lines = [f"{record.statement}: clause {record.clause}, replay with "
                 f"`isemlab replay {path}`"
                 for record, path in zip(outcome.counterexamples, outcome.replay_paths)]
        console.print(Panel("\n".join(lines), title="COUNTEREXAMPLE", style="bold red"))

    if outcome.exit_code == EXIT_THEOREM_VIOLATION:
        err_console.print("[red]A theorem check failed; this indicates a bug in the lab.[/red]")
    raise typer.Exit(outcome.exit_code)


@app.command()
def gallery(
    out: Optional[Path] = typer.Option(None, "--out", help="Output directory"),
) -> None:
    """Check the gallery examples and write the band B4 table."""
    with _handled():
        outcome = cmd_gallery(str(out) if out else None)

    table = Table(title="Gallery")
    table.add_column("Assertion", style="cyan")
    table.add_column("Status")
    failed = {record.clause for record in outcome.report.violations}
    for clause in outcome.report.notes:
        table.add_row(clause, "[red]FAIL[/red]" if clause in failed else "[green]PASS[/green]")
    console.print(table)
    console.print(f"[dim]B4 table written to {outcome.table_path}[/dim]")
    raise typer.Exit(EXIT_OK if outcome.report.passed else EXIT_THEOREM_VIOLATION)


@app.command("enumerate")
def enumerate_command(
    max_order: int = typer.Option(4, "--max-order", help="Largest order to enumerate"),
    corpus_filter: CorpusFilter = typer.Option(CorpusFilter.ALL, "--filter", help="Corpus filter"),
    workers: int = typer.Option(1, "--workers", help="Worker processes"),
    out: Optional[Path] = typer.Option(None, "--out", help="Corpus file to write"),
    force_large: bool = typer.Option(False, "--force-large", help="Allow orders above the default caps"),
) -> None:
    """Enumerate semigroups up to isomorphism and write a corpus file."""
    with _handled():
        run_config = RunConfig(
            command="enumerate",
            max_order=max_order,
            corpus_filter=corpus_filter,
            output_path=str(out) if out else None,
            workers=workers,
            force_large=force_large,
        )
        with console.status(f"Enumerating {corpus_filter.value} semigroups up to order {max_order}..."):
            corpus = cmd_enumerate(run_config)

    counts: Dict[int, int] = corpus.counts_by_order()
    table = Table(title=f"Corpus '{corpus_filter.value}' up to order {max_order}")
    table.add_column("Order", justify="right")
    table.add_column("Count", justify="right")
    for order in sorted(counts):
        table.add_row(str(order), str(counts[order]))
    table.add_row("[bold]total[/bold]", f"[bold]{len(corpus)}[/bold]")
    console.print(table)
    console.print(f"[dim]corpus written to {corpus.provenance['path']}[/dim]")


@app.command()
def replay(
    record_file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Counterexample record (JSON)"),
) -> None:
    """Re-run the check named in a counterexample record."""
    with _handled():
        try:
            outcome = cmd_replay(str(record_file))
        except ValueError as e:
            err_console.print(f"[red]Invalid record file:[/red] {e}")
            raise typer.Exit(EXIT_ERROR)

    for result in outcome.results:
        witnesses = " ".join(str(w + 1) for w in result.witnesses)
        console.print(f"{result.clause}: {result.status.value} {witnesses}".rstrip())
    if outcome.reproduced:
        console.print("[bold red]Counterexample reproduced[/bold red]")
        raise typer.Exit(EXIT_OK)
    console.print("[yellow]Counterexample not reproduced[/yellow]")
    raise typer.Exit(EXIT_THEOREM_VIOLATION)
