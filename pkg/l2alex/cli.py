"""Command-line interface for computing L2-Alexander torsions of link constructions."""

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import click

from l2alex.cache.store import CacheEntry, TorsionCache
from l2alex.checks.runner import SUITES, CheckReport, run_checks
from l2alex.config.settings import CheckConfig, settings
from l2alex.dsl.parser import DslProgram, parse
from l2alex.dsl.printer import cache_key, print_link
from l2alex.errors import DimensionMismatch, L2AlexError
from l2alex.geometry.norm import dual_ball, seminorm_report
from l2alex.links.builder import build_link
from l2alex.models.exponent import ExponentExpr
from l2alex.models.link import LinkObject
from l2alex.models.torsion import CoefficientVector, TorsionClass, TorsionResult
from l2alex.torsion.engine import ZERO_VECTOR, derive, torsion
from l2alex.torsion.replay import verify
from l2alex.utils.formatting import format_trace

logger = logging.getLogger(__name__)


def _setup_logging(debug: bool) -> None:
    logging.basicConfig(level=settings.logging.level, format=settings.logging.format)
    if debug:
        logging.getLogger().setLevel(logging.DEBUG)


def _parse_coeffs(
    ctx: click.Context, param: click.Parameter, value: Optional[str]
) -> Optional[Tuple[int, ...]]:
    if value is None:
        return None
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def common_options(fn: Callable[..., Any]) -> Callable[..., Any]:
    """Options shared by every subcommand."""
    options = [
        click.option("--json", "as_json", is_flag=True, help="Machine-readable JSON output"),
        click.option("--no-cache", is_flag=True, help="Do not read or write the result cache"),
        click.option(
            "--cache-path",
            type=click.Path(dir_okay=False, path_type=Path),
            default=None,
            help="Cache file, overriding L2ALEX_CACHE",
        ),
        click.option("--debug", is_flag=True, help="Enable debug logging"),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def command_boundary(fn: Callable[..., None]) -> Callable[..., None]:
    """Turn engine errors into messages and exit statuses."""

    @functools.wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        ctx = click.get_current_context()
        as_json = kwargs.get("as_json", False)
        _setup_logging(kwargs.get("debug", False))
        try:
            fn(*args, **kwargs)
        except L2AlexError as exc:
            logger.debug("Command %s failed", ctx.info_name, exc_info=True)
            if as_json:
                click.echo(json.dumps({"error": exc.to_dict()}))
            else:
                click.echo(f"Error: {exc.message}", err=True)
            ctx.exit(exc.exit_status)
        except (click.ClickException, click.exceptions.Exit, click.exceptions.Abort):
            raise
        except Exception as exc:
            logger.exception(f"Unexpected error in {ctx.info_name}")
            if as_json:
                click.echo(json.dumps({"error": {"code": "internal", "message": str(exc)}}))
            ctx.exit(1)

    return wrapper


def _open_cache(no_cache: bool, cache_path: Optional[Path]) -> Optional[TorsionCache]:
    if no_cache or not settings.cache.enabled:
        return None
    return TorsionCache(cache_path)


def _load(expr: str) -> Tuple[DslProgram, LinkObject]:
    program = parse(expr)
    return program, build_link(program.spec)


def _link_json(obj: LinkObject) -> Dict[str, Any]:
    return {
        "expr": print_link(obj.spec),
        "components": obj.num_components,
        "linking": [list(row) for row in obj.linking],
        "warnings": list(obj.warnings),
    }


def _from_cache(
    obj: LinkObject, coeffs: Optional[CoefficientVector], entry: CacheEntry
) -> TorsionResult:
    symbolic = entry.torsion
    coeffs = coeffs or CoefficientVector.symbolic(obj.num_components)
    warnings = list(obj.warnings)
    specialized = symbolic
    if coeffs.values is not None and symbolic.exponent is not None:
        specialized = TorsionClass.nonzero(ExponentExpr.const(symbolic.exponent.evaluate(coeffs.values)))
        if coeffs.is_zero:
            logger.warning(ZERO_VECTOR)
            warnings.append(ZERO_VECTOR)
    return TorsionResult(
        torsion=specialized,
        symbolic=symbolic,
        coefficients=coeffs,
        trace=None,
        norm_claim=symbolic.exponent is not None and seminorm_report(symbolic.exponent).is_seminorm,
        warnings=warnings,
    )


def compute(
    obj: LinkObject,
    coeffs: Optional[CoefficientVector] = None,
    cache: Optional[TorsionCache] = None,
) -> TorsionResult:
    """Torsion of a built link, served from the cache when possible.

    Cached results carry no trace.
    """
    if coeffs is not None and coeffs.nvars != obj.num_components:
        raise DimensionMismatch(obj.num_components, coeffs.nvars)
    key = cache_key(obj.spec)
    if cache is not None:
        entry = cache.lookup(key)
        if entry is not None:
            return _from_cache(obj, coeffs, entry)
    result = torsion(obj, coeffs)
    if cache is not None and result.trace is not None:
        symbolic_trace = result.trace.children[0] if coeffs is not None else result.trace
        cache.store(CacheEntry.for_spec(obj.spec, result.symbolic, symbolic_trace.digest()))
    return result


def _torsion_json(result: TorsionResult) -> Dict[str, Any]:
    data = result.symbolic.to_json()
    data["text"] = str(result.symbolic)
    data["norm_claim"] = result.norm_claim
    return data


@click.group()
@click.version_option(package_name="l2alex")
def cli() -> None:
    """Symbolic L2-Alexander torsions of Seifert-fibered and satellite multi-links."""


@cli.command("eval")
@click.argument("expr")
@click.option("--coeffs", callback=_parse_coeffs, help="Concrete coefficients, e.g. 1,-2")
@common_options
@command_boundary
def eval_command(
    expr: str,
    coeffs: Optional[Tuple[int, ...]],
    as_json: bool,
    no_cache: bool,
    cache_path: Optional[Path],
    debug: bool,
) -> None:
    """Print the torsion class of EXPR and its value at the coefficients."""
    program, obj = _load(expr)
    values = coeffs if coeffs is not None else program.coefficients
    vector = CoefficientVector(nvars=len(values), values=values) if values is not None else None
    result = compute(obj, vector, _open_cache(no_cache, cache_path))
    if as_json:
        payload = {
            "link": _link_json(obj),
            "torsion": _torsion_json(result),
            "evaluation": result.evaluation,
            "warnings": result.warnings,
            "trace": None if result.trace is None else result.trace.to_json(),
        }
        click.echo(json.dumps(payload, indent=2))
        return
    click.echo(f"link: {print_link(obj.spec)} ({obj.num_components} components)")
    click.echo(f"torsion: {result.symbolic}")
    exponent = result.symbolic.exponent
    click.echo(f"exponent: {'undefined' if exponent is None else exponent}")
    if result.evaluation is not None:
        click.echo(f"evaluation: {result.evaluation}")
    for warning in result.warnings:
        click.echo(f"warning: {warning}", err=True)


@cli.command("norm")
@click.argument("expr")
@common_options
@command_boundary
def norm_command(
    expr: str, as_json: bool, no_cache: bool, cache_path: Optional[Path], debug: bool
) -> None:
    """Report whether the torsion exponent of EXPR is a seminorm."""
    _, obj = _load(expr)
    result = compute(obj, cache=_open_cache(no_cache, cache_path))
    exponent = result.symbolic.require_exponent("no seminorm for the Zero class")
    report = seminorm_report(exponent)
    if as_json:
        payload = {"link": _link_json(obj), "exponent": exponent.to_json(), "text": str(exponent)}
        payload.update(report.to_json())
        click.echo(json.dumps(payload, indent=2))
        return
    click.echo(f"exponent: {exponent}")
    click.echo(f"seminorm: {'yes' if report.is_seminorm else 'no'}")
    click.echo(f"degenerate subspace dimension: {report.kernel_dimension}")
    for direction in report.degenerate_directions:
        click.echo(f"  {list(direction)}")


@cli.command("ball")
@click.argument("expr")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    help="Output format",
)
@common_options
@command_boundary
def ball_command(
    expr: str,
    output_format: str,
    as_json: bool,
    no_cache: bool,
    cache_path: Optional[Path],
    debug: bool,
) -> None:
    """Print the vertices of the dual unit ball of EXPR."""
    _, obj = _load(expr)
    result = compute(obj, cache=_open_cache(no_cache, cache_path))
    exponent = result.symbolic.require_exponent("no dual ball for the Zero class")
    zonotope = dual_ball(exponent)
    if as_json or output_format == "json":
        click.echo(json.dumps(zonotope.to_json()))
        return
    for vertex in zonotope.vertices:
        click.echo(" ".join(str(x) for x in vertex))


@cli.command("explain")
@click.argument("expr")
@common_options
@command_boundary
def explain_command(
    expr: str, as_json: bool, no_cache: bool, cache_path: Optional[Path], debug: bool
) -> None:
    """Print the derivation trace of the torsion of EXPR."""
    _, obj = _load(expr)
    step = derive(obj.spec)
    replayed = verify(step)
    if as_json:
        payload = {"link": _link_json(obj), "trace": step.to_json(), "replayed": replayed}
        click.echo(json.dumps(payload, indent=2))
        return
    for line in format_trace(step):
        click.echo(line)
    click.echo(f"replay: {'ok' if replayed else 'MISMATCH'}")


def _print_report(report: CheckReport) -> None:
    for suite in report.suites:
        status = "PASS" if suite.passed else "FAIL"
        click.echo(f"{status} {suite.name}: {suite.cases} cases, {len(suite.failures)} failures")
        for failure in suite.failures[:5]:
            click.echo(f"    {failure}")
    click.echo(f"{report.cases} cases, {report.failures} failures")


@cli.command("check")
@click.option("--grid", "grid", type=int, default=None, help="Parameter grid radius")
@click.option("--cases", "cases", type=int, default=None, help="Randomized cases per suite")
@click.option("--workers", "workers", type=int, default=None, help="Worker threads")
@click.option(
    "--suite", "suites", type=click.Choice(list(SUITES)), multiple=True, help="Run only the named suite"
)
@common_options
@command_boundary
def check_command(
    grid: Optional[int],
    cases: Optional[int],
    workers: Optional[int],
    suites: Sequence[str],
    as_json: bool,
    no_cache: bool,
    cache_path: Optional[Path],
    debug: bool,
) -> None:
    """Run the consistency suites."""
    overrides = {"grid_radius": grid, "random_cases": cases, "workers": workers}
    values = settings.checks.model_dump()
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        config = CheckConfig(**values)
    except ValueError as exc:
        raise click.BadParameter(str(exc))
    report = run_checks(config, list(suites) or None)
    if as_json:
        click.echo(json.dumps(report.to_json(), indent=2))
    else:
        _print_report(report)
    if not report.passed:
        click.get_current_context().exit(1)


def run_command(argv: Sequence[str]) -> int:
    """Run the command line with ``argv`` and return the exit status."""
    try:
        status = cli.main(args=list(argv), prog_name="l2alex", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    return status if isinstance(status, int) else 0


def main() -> None:
    """Run the l2alex command line."""
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
