"""
`divgraph` command group.

Reports go to stdout (or --out) as JSON, CSV for tables, DOT for export.
Logs go to stderr. Exit codes: 0 success, 1 failed verification or
observation, 2 usage or invalid input, 3 size guard refusal.
"""

import csv
import functools
import io
import json
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence

import click
import structlog
from pydantic import BaseModel

from divgraph import __version__
from divgraph.arith import factorization_type, instantiate
from divgraph.config import DivGraphConfig, get_config, set_global_config
from divgraph.domain import CharpolyReport, FactorizationType, InfoReport, TableReport
from divgraph.exactla import charpoly
from divgraph.exceptions import InvalidInputError, SizeGuardError, VerificationError, check_guard
from divgraph.graph import (
    build,
    build_from_integer,
    clique_number,
    coerce_type,
    connectivity_checks,
    counts,
    degree_distribution,
    independence_number,
    min_degree_analysis,
    omega_coloring,
    planarity_class,
    to_dot,
)
from divgraph.spectra import SPECIAL_EIGENVALUES, multiplicity_table, special_multiplicities, table_mismatches

from .checks import VERIFY_CHECKS, CheckContext
from .logging_setup import LOG_LEVELS, configure_logging
from .selftest import run_selftest

logger = structlog.get_logger("divgraph.cli")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


# ==============================================
# OPTION PARSING
# ==============================================

def parse_type(value: Optional[str]) -> Optional[FactorizationType]:
    """'2,2' -> (2, 2); the empty string is the type of n = 1"""
    if value is None:
        return None
    parts = [p.strip() for p in value.split(",") if p.strip()]
    try:
        return coerce_type(tuple(int(p) for p in parts))
    except ValueError as e:
        raise click.BadParameter(f"invalid factorization type {value!r}: {e}", param_hint="--type")


def parse_lambdas(value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(p) for p in value.split(",") if p.strip()]
    except ValueError:
        raise click.BadParameter(f"expected integers, got {value!r}", param_hint="--lambda")


def resolve_target(n: Optional[int], type_: Optional[str], required: bool = True) -> Optional[FactorizationType]:
    if n is not None and type_ is not None:
        raise click.UsageError("--n and --type are mutually exclusive")
    if n is not None:
        return factorization_type(n)
    ftype = parse_type(type_)
    if ftype is None and required:
        raise click.UsageError("one of --n or --type is required")
    return ftype


def target_options(func: Callable) -> Callable:
    func = click.option("--type", "type_", default=None, help="Factorization type, e.g. 2,2")(func)
    return click.option("--n", "n", type=int, default=None, help="Positive integer n")(func)


def json_format_option(func: Callable) -> Callable:
    return click.option("--format", "fmt", type=click.Choice(["json"]), default="json", show_default=True,
                        help="Report format; CSV is for tables and DOT for export")(func)


def output_options(func: Callable) -> Callable:
    return click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
                        help="Write the report to a file instead of stdout")(func)


# ==============================================
# OUTPUT
# ==============================================

def emit(payload: str, out: Optional[Path]) -> None:
    if out is None:
        click.echo(payload, nl=not payload.endswith("\n"))
        return
    out.write_text(payload if payload.endswith("\n") else payload + "\n", encoding="utf-8")
    logger.info("💾 Report written", path=str(out))


def to_json(report: BaseModel) -> str:
    return report.model_dump_json(indent=2)


def table_csv(eigenvalues: Sequence[int], report: TableReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["omega"] + [f"m_{lam}" for lam in eigenvalues])
    by_cell = {(row.omega, row.eigenvalue): row.multiplicity for row in report.rows}
    for omega in sorted({row.omega for row in report.rows}):
        writer.writerow([omega] + [by_cell[(omega, lam)] for lam in eigenvalues])
    return buffer.getvalue()


def handle_errors(func: Callable) -> Callable:
    """Map divgraph exceptions onto exit codes"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except SizeGuardError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_GUARD)
        except InvalidInputError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except VerificationError as e:
            click.echo(f"Verification failed: {e}", err=True)
            sys.exit(EXIT_FAILED)
    return wrapper


def _config(ctx: click.Context) -> DivGraphConfig:
    return ctx.obj["config"]


def _seed(ctx: click.Context, seed: Optional[int]) -> int:
    return _config(ctx).seed if seed is None else seed


# ==============================================
# COMMANDS
# ==============================================

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help="Log level for stderr output (default from DIVGRAPH_LOG_LEVEL)")
@click.version_option(__version__, prog_name="divgraph")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]):
    """Divisibility graphs D_n: construction, invariants and exact spectral verification."""
    config = get_config()
    configure_logging(log_level or config.log_level)
    set_global_config(config)
    ctx.ensure_object(dict)
    ctx.obj["config"] = config


@cli.command()
@target_options
@json_format_option
@output_options
@click.pass_context
@handle_errors
def info(ctx: click.Context, n: Optional[int], type_: Optional[str], fmt: str, out: Optional[Path]):
    """Vertex and edge counts, clique, independence, planarity and connectivity."""
    config = _config(ctx)
    ftype = resolve_target(n, type_)
    check_guard("graph", ftype.vertex_count, config.max_vertices, "max_vertices")
    v, e = counts(ftype)
    connectivity = connectivity_checks(ftype, config)
    planarity = planarity_class(ftype)
    report = InfoReport(
        type=list(ftype.exponents),
        v=v,
        e=e,
        big_omega=ftype.big_omega,
        mobius=ftype.mobius,
        clique_number=clique_number(ftype, config).size,
        independence_number=independence_number(ftype, config).size,
        chromatic_number=omega_coloring(ftype, config).num_colors,
        min_degree=min_degree_analysis(ftype).min_degree,
        degree_distribution={str(d): len(xs) for d, xs in sorted(degree_distribution(ftype).items())},
        connected=connectivity.connected,
        middle_connected=connectivity.middle_connected,
        bipartite=connectivity.bipartite,
        planar=planarity.planar,
        planarity_reason=planarity.reason,
    )
    emit(to_json(report), out)


@cli.command(name="charpoly")
@target_options
@json_format_option
@output_options
@click.pass_context
@handle_errors
def charpoly_command(ctx: click.Context, n: Optional[int], type_: Optional[str], fmt: str,
                     out: Optional[Path]):
    """Exact characteristic polynomial det(lambda I - M), constant term first."""
    config = _config(ctx)
    ftype = resolve_target(n, type_)
    check_guard("characteristic polynomial", ftype.vertex_count, config.charpoly_max_dim, "charpoly_max_dim")
    f = charpoly(build(ftype, config).adjacency, config=config)
    emit(to_json(CharpolyReport(type=list(ftype.exponents), v=ftype.vertex_count,
                                charpoly=list(f.coeffs), polynomial=str(f))), out)


@cli.command()
@target_options
@json_format_option
@click.option("--lambda", "lambdas", default=None, help="Eigenvalues, e.g. -2,-1,0,1")
@click.option("--seed", type=int, default=None, help="Seed for modular prime selection")
@click.option("--with-charpoly", is_flag=True, help="Attach the characteristic polynomial")
@output_options
@click.pass_context
@handle_errors
def spectrum(ctx: click.Context, n: Optional[int], type_: Optional[str], fmt: str, lambdas: Optional[str],
             seed: Optional[int], with_charpoly: bool, out: Optional[Path]):
    """Certified multiplicities of integer eigenvalues."""
    config = _config(ctx)
    ftype = resolve_target(n, type_)
    check_guard("graph", ftype.vertex_count, config.max_vertices, "max_vertices")
    eigenvalues = parse_lambdas(lambdas) or list(SPECIAL_EIGENVALUES)
    report = special_multiplicities(ftype, eigenvalues, seed=_seed(ctx, seed),
                                    with_charpoly=with_charpoly, config=config)
    emit(to_json(report), out)


@cli.command()
@click.argument("check_id", type=click.Choice(sorted(VERIFY_CHECKS)))
@target_options
@click.option("--lambda", "lambdas", default=None, help="Eigenvalues for tables/oeis")
@click.option("--omega-max", type=int, default=10, show_default=True, help="Largest omega for tables/oeis")
@click.option("--a-max", type=int, default=29, show_default=True, help="Largest a for det-period/mod6")
@click.option("--seed", type=int, default=None, help="Seed for primes and random posets")
@click.option("--jobs", type=int, default=None, help="Worker processes for table cells")
@output_options
@click.pass_context
@handle_errors
def verify(ctx: click.Context, check_id: str, n: Optional[int], type_: Optional[str], lambdas: Optional[str],
           omega_max: int, a_max: int, seed: Optional[int], jobs: Optional[int], out: Optional[Path]):
    """Run one verification check; exit 1 if it fails."""
    config = _config(ctx)
    ftype = resolve_target(n, type_, required=False)
    if check_id == "mobius" and n is None and ftype is not None:
        n = instantiate(ftype)
    check_ctx = CheckContext(
        config=config,
        ftype=ftype,
        n=n,
        eigenvalues=parse_lambdas(lambdas),
        omega_max=omega_max,
        a_max=a_max,
        seed=_seed(ctx, seed),
        jobs=config.jobs if jobs is None else jobs,
    )
    report = VERIFY_CHECKS[check_id](check_ctx)
    emit(to_json(report), out)
    if not report.passed:
        sys.exit(EXIT_FAILED)


@cli.command()
@click.option("--lambda", "lambdas", required=True, help="Eigenvalue(s), e.g. 0 or -2,1")
@click.option("--omega-max", type=int, required=True, help="Largest number of distinct primes")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--jobs", type=int, default=None, help="Worker processes for table cells")
@output_options
@click.pass_context
@handle_errors
def table(ctx: click.Context, lambdas: str, omega_max: int, fmt: str, seed: Optional[int],
          jobs: Optional[int], out: Optional[Path]):
    """Multiplicity tables over squarefree n with 2 <= omega(n) <= omega-max."""
    config = _config(ctx)
    eigenvalues = parse_lambdas(lambdas)
    if not eigenvalues:
        raise click.BadParameter("at least one eigenvalue is required", param_hint="--lambda")
    check_guard("graph", 2 ** omega_max, config.max_vertices, "max_vertices")
    rows = [row for lam in eigenvalues
            for row in multiplicity_table(lam, omega_max, jobs=jobs, seed=_seed(ctx, seed), config=config)]
    report = TableReport(eigenvalues=eigenvalues, rows=rows, mismatches=table_mismatches(rows))
    if report.mismatches:
        logger.warning("⚠️ Table differs from the known values", mismatches=report.mismatches)
    emit(table_csv(eigenvalues, report) if fmt == "csv" else to_json(report), out)


@cli.command()
@target_options
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]), default="dot", show_default=True)
@click.option("--labels", type=click.Choice(["divisor", "exponent", "field"]), default="divisor", show_default=True)
@click.option("--base-prime", type=int, default=2, show_default=True, help="Base prime for field labels")
@output_options
@click.pass_context
@handle_errors
def export(ctx: click.Context, n: Optional[int], type_: Optional[str], fmt: str, labels: str,
           base_prime: int, out: Optional[Path]):
    """Export D_n as DOT (or JSON adjacency)."""
    config = _config(ctx)
    resolve_target(n, type_)
    g = build_from_integer(n, config) if n is not None else build(parse_type(type_), config)
    check_guard("graph", g.v, config.max_vertices, "max_vertices")
    if fmt == "dot":
        emit(to_dot(g, labels=labels, base_prime=base_prime), out)
        return
    payload = {
        "type": list(g.ftype.exponents),
        "vertices": [list(x) for x in g.vertices],
        "adjacency": g.adjacency.astype(int).tolist(),
    }
    emit(json.dumps(payload, indent=2), out)


@cli.command()
@click.option("--seed", type=int, default=None)
@click.option("--jobs", type=int, default=None)
@output_options
@click.pass_context
@handle_errors
def selftest(ctx: click.Context, seed: Optional[int], jobs: Optional[int], out: Optional[Path]):
    """Reduced-scale acceptance suite with per-check timing."""
    config = _config(ctx)
    report = run_selftest(config, _seed(ctx, seed), config.jobs if jobs is None else jobs)
    emit(to_json(report), out)
    if not report.passed:
        sys.exit(EXIT_FAILED)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point"""
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name="divgraph", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except SystemExit as e:
        return int(e.code or 0)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
