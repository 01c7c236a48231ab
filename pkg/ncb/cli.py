import json
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional

import typer
from rich import print
from rich.console import Console
from rich.table import Table

from .bench import BenchModel, run_bench
from .compare import ALGORITHMS, comparison_frame, compare, run_and_evaluate
from .conductance import degree_distribution, profile
from .config import RunConfig, configure_logging, settings
from .core import TraceEvent
from .errors import EXIT_PARSE, ConfigError, NCBError
from .graph import Graph, load_graph
from .io import read_partition, write_degree_distribution, write_partition, write_profile, write_records, write_trace

logger = logging.getLogger(__name__)

app = typer.Typer(help="NCB community detection: detect, compare, profile and benchmark.")
err_console = Console(stderr=True)


@app.callback()
def main(log_level: str = typer.Option(settings.log_level, "--log-level", help="Logging level")):
    configure_logging(log_level)


# -------- Common helpers --------

@contextmanager
def _guard():
    """Turn library errors into a red message and a distinct exit code."""
    try:
        yield
    except NCBError as e:
        print(f"[red]Error:[/red] {e}")
        raise typer.Exit(e.exit_code)
    except OSError as e:
        print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_PARSE)


def _resolve(path: Path) -> Path:
    """Fall back to the data directory for bare dataset file names."""
    if not path.exists() and (Path(settings.data_dir) / path).exists():
        return Path(settings.data_dir) / path
    return path


def _merge_seeds(flag: Optional[bool], algorithm: str) -> bool:
    if flag is None:
        return settings.ncb_merge_seeds and algorithm == "ncb"
    return flag


def _load(config: RunConfig) -> Graph:
    return load_graph(
        _resolve(config.input),
        fmt=config.resolved_format,
        comment_prefix=settings.comment_prefix,
        delimiter=settings.delimiter,
    )


def _report_table(title: str, rows: List[dict]) -> Table:
    table = Table(title=title)
    if rows:
        for column in rows[0]:
            table.add_column(column)
        for row in rows:
            table.add_row(*("" if v is None else str(v) for v in row.values()))
    return table


# -------- Detect --------

@app.command()
def detect(
    input: Path = typer.Option(..., "--input", help="Edge list or GML file"),
    format: Optional[str] = typer.Option(None, "--format", help="edge-list | gml (default: by extension)"),
    algorithm: str = typer.Option("ncb", "--algorithm", help="ncb | lpa | greedy-modularity"),
    seed: Optional[int] = typer.Option(None, "--seed", help="RNG seed (lpa only)"),
    ground_truth: Optional[Path] = typer.Option(None, "--ground-truth", help="Partition CSV/JSON to score NMI against"),
    output: Optional[Path] = typer.Option(None, "--output", help="Partition file (default: stdout CSV)"),
    output_format: str = typer.Option("csv", "--output-format", help="csv | json"),
    trace: bool = typer.Option(False, "--trace", help="Write NCB decisions to <output>.trace.jsonl"),
    merge_seeds: Optional[bool] = typer.Option(
        None, "--merge-seeds/--no-merge-seeds", help="Let key nodes join a closely connected community (ncb only)"
    ),
    dataset: Optional[str] = typer.Option(None, "--dataset", help="Dataset name in reports (default: file stem)"),
):
    """Detect communities and print a metric summary."""
    with _guard():
        config = RunConfig.create(
            input=input,
            input_format=format,
            algorithm=algorithm,
            seed=seed,
            ground_truth=ground_truth,
            output=output,
            output_format=output_format,
            trace=trace,
            merge_seeds=_merge_seeds(merge_seeds, algorithm),
            dataset=dataset,
        )
        g = _load(config)
        truth = read_partition(g, _resolve(config.ground_truth)) if config.ground_truth else None
        events: Optional[List[TraceEvent]] = [] if config.trace else None
        partition, report = run_and_evaluate(
            config.algorithm,
            g,
            ground_truth=truth,
            dataset=config.dataset_name,
            seed=settings.lpa_seed if config.seed is None else config.seed,
            max_iters=settings.lpa_max_iters,
            trace=events,
            merge_seeds=config.merge_seeds,
        )

        if config.output:
            write_partition(g, partition, config.output, config.output_format)
        elif config.output_format == "json":
            payload = {"communities": [[g.labels[v] for v in members] for members in partition.members()]}
            sys.stdout.write(json.dumps(payload) + "\n")
        else:
            sys.stdout.write("node,community\n")
            for v, cid in enumerate(partition.assignment):
                sys.stdout.write(f"{g.labels[v]},{cid}\n")

        if events is not None:
            trace_path = config.output.with_name(config.output.name + ".trace.jsonl")
            write_trace(events, trace_path)
            logger.info(f"Trace with {len(events)} events written to {trace_path}")

        # keep stdout clean when the partition itself goes there
        (print if config.output else err_console.print)(_report_table("Detection summary", [report.model_dump()]))


# -------- Compare --------

@app.command("compare")
def compare_cmd(
    input: Path = typer.Option(..., "--input", help="Edge list or GML file"),
    format: Optional[str] = typer.Option(None, "--format", help="edge-list | gml"),
    algorithm: Optional[List[str]] = typer.Option(None, "--algorithm", help="Repeatable; default: all"),
    ground_truth: Optional[Path] = typer.Option(None, "--ground-truth"),
    repeats: int = typer.Option(settings.lpa_repeats, "--repeats", help="LPA repetitions"),
    seed: int = typer.Option(settings.lpa_seed, "--seed", help="First LPA seed"),
    output: Optional[Path] = typer.Option(None, "--output", help="Comparison table file"),
    output_format: str = typer.Option("csv", "--output-format", help="csv | json"),
    dataset: Optional[str] = typer.Option(None, "--dataset", help="Key for published values (default: file stem)"),
    published: bool = typer.Option(True, "--published/--no-published", help="Append published rows"),
    merge_seeds: Optional[bool] = typer.Option(None, "--merge-seeds/--no-merge-seeds", help="NCB key-node merge"),
):
    """Run several algorithms on one dataset and tabulate Q, NMI, counts and time."""
    with _guard():
        algorithms = algorithm or list(ALGORITHMS)
        for name in algorithms:
            RunConfig.create(input=input, input_format=format, algorithm=name, output_format=output_format)
        if repeats < 1:
            raise ConfigError("--repeats must be >= 1")
        config = RunConfig.create(input=input, input_format=format, ground_truth=ground_truth, dataset=dataset)
        g = _load(config)
        truth = read_partition(g, _resolve(config.ground_truth)) if config.ground_truth else None
        rows = compare(
            g,
            algorithms=algorithms,
            ground_truth=truth,
            dataset=config.dataset_name,
            repeats=repeats,
            seed=seed,
            max_iters=settings.lpa_max_iters,
            include_published=published,
            merge_seeds=_merge_seeds(merge_seeds, "ncb"),
        )
        frame = comparison_frame(rows)
        if output:
            if output_format == "json":
                write_records(rows, output, "json")
            else:
                frame.to_csv(output, index=False)
        print(_report_table(f"Comparison on {config.dataset_name}", frame.to_dict("records")))


# -------- Profile --------

@app.command("profile")
def profile_cmd(
    input: Path = typer.Option(..., "--input", help="Edge list or GML file"),
    format: Optional[str] = typer.Option(None, "--format", help="edge-list | gml"),
    output: Optional[Path] = typer.Option(None, "--output", help="CSV file (default: stdout)"),
    degrees: bool = typer.Option(False, "--degrees", help="Emit the degree distribution instead"),
):
    """Per-node degree and closed-neighborhood conductance as CSV."""
    with _guard():
        config = RunConfig.create(input=input, input_format=format)
        g = _load(config)
        target = output if output else sys.stdout
        if degrees:
            write_degree_distribution(degree_distribution(g), target)
        else:
            write_profile(profile(g), target)


# -------- Bench --------

@app.command("bench")
def bench_cmd(
    sizes: Optional[List[int]] = typer.Option(None, "--sizes", help="Block counts, repeatable"),
    block_size: int = typer.Option(settings.bench_block_size, "--block-size"),
    p_in: float = typer.Option(settings.bench_p_in, "--p-in"),
    inter_degree: float = typer.Option(settings.bench_inter_degree, "--inter-degree", help="Expected inter-block degree"),
    repeats: int = typer.Option(settings.bench_repeats, "--repeats"),
    seed: int = typer.Option(settings.bench_seed, "--seed"),
    output: Optional[Path] = typer.Option(None, "--output", help="JSON scaling report"),
):
    """Time NCB on planted-partition graphs of growing edge count."""
    with _guard():
        model = BenchModel.create(block_size=block_size, p_in=p_in, inter_degree=inter_degree)
        report = run_bench(sizes or settings.bench_sizes, model, repeats=repeats, seed=seed)
        if output:
            output.write_text(report.model_dump_json(indent=2), encoding="utf-8")
        print(_report_table("NCB scaling", [row.model_dump() for row in report.rows]))
        print(
            f"mean time ratio per edge doubling: [bold]{report.mean_doubling_ratio:.3f}[/bold] "
            f"(log-log exponent {report.exponent:.3f})"
        )


if __name__ == "__main__":
    app()
