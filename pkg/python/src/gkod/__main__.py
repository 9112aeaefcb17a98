"""
Entry point for the gkod CLI.

Exit status: 0 on success, 1 when a verification finds a mandatory
difference, 2 on usage, domain or configuration errors.
"""

import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import click
from rich.console import Console
from rich.logging import RichHandler

from .config import CliConfig, ConfigError, OutputFormat, load_settings
from .config.settings import LOG_LEVELS, load_factor_cache
from .errors import GkodError
from .factor import FactorCache, factor_mersenne
from .gkgraph import build_gk_Ln2, degree_pattern, to_dot
from .indep import alpha_exact, caro_wei, t2, t_lower_bound
from .odpipe import od_filter, report_to_json, report_to_text, signature_Ln2
from .orders import GroupId, order_aut_Ln2, order_Ln2, order_simple
from .orders import parse_canonical
from .ppd import ppd_set
from .rendering import render, render_structured
from .reproduce import (
    Reproduction,
    reproduce_aut_check,
    reproduce_lemma_m,
    reproduce_mersenne,
    reproduce_table1,
    reproduce_table2,
    reproduce_table3,
)

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_ERROR = 2

logger = logging.getLogger(__name__)


class GkodCliError(click.ClickException):
    """Library or configuration failure reported as a usage-level error."""

    exit_code = EXIT_ERROR


class GkodGroup(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (GkodError, ConfigError) as e:
            raise GkodCliError(str(e)) from e


def _setup_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[
            RichHandler(console=Console(stderr=True), show_time=False)
        ],
        force=True,
    )


def _cache(ctx: click.Context) -> FactorCache:
    if ctx.obj.get("cache") is None:
        try:
            ctx.obj["cache"] = load_factor_cache(
                ctx.obj["cache_flag"], ctx.obj["config"]
            )
        except OSError as e:
            raise GkodCliError(f"cannot read factor cache: {e}") from e
    return ctx.obj["cache"]


def _emit(ctx: click.Context, rep: Reproduction) -> None:
    click.echo(render(rep, ctx.obj["output_format"]), nl=False)
    if rep.failed:
        ctx.exit(EXIT_DIFF)


def _structured(ctx: click.Context) -> bool:
    return ctx.obj["output_format"] == OutputFormat.STRUCTURED


@click.group(cls=GkodGroup)
@click.option(
    "--cache",
    "cache_flag",
    type=click.Path(dir_okay=False),
    default=None,
    help="Factor cache for 2^k - 1 (overrides $GK_FACTOR_CACHE)",
)
@click.option(
    "--output-format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=None,
    help="Output format (default from settings: table)",
)
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Log level for stderr (default from settings: WARNING)",
)
@click.option(
    "--config-dir",
    "config_dirs",
    multiple=True,
    type=click.Path(file_okay=False),
    help="Read settings only from these directories",
)
@click.pass_context
def cli(ctx, cache_flag, output_format, log_level, config_dirs):
    """
    gkod - prime graphs and OD-characterization of L_n(2)
    """
    ctx.ensure_object(dict)
    try:
        config: CliConfig = load_settings(
            [Path(d) for d in config_dirs] if config_dirs else None
        )
    except ConfigError as e:
        raise GkodCliError(str(e)) from e
    _setup_logging((log_level or config.log_level).upper())
    ctx.obj["config"] = config
    ctx.obj["cache_flag"] = cache_flag
    ctx.obj["cache"] = None
    ctx.obj["output_format"] = OutputFormat(
        output_format or config.output_format
    )


@cli.command()
@click.option(
    "--group",
    "group",
    required=True,
    help="Ln2, aut-Ln2 or simple:<id> (e.g. simple:L_2(7^2))",
)
@click.option("--n", "n", type=int, default=None, help="Degree n")
@click.pass_context
def order(ctx, group, n):
    """Print a factored group order."""
    cache = _cache(ctx)
    if group in ("Ln2", "aut-Ln2"):
        if n is None:
            raise click.UsageError(f"--group {group} needs --n")
        gid = GroupId.linear(n, 2)
        if group == "Ln2":
            name, value = gid.name, order_Ln2(n, cache)
        else:
            name, value = f"Aut({gid.name})", order_aut_Ln2(n, cache)
    elif group.startswith("simple:"):
        gid = parse_canonical(group[len("simple:") :])
        name, value = gid.name, order_simple(gid, cache)
    else:
        raise click.UsageError(f"unknown --group {group!r}")
    if _structured(ctx):
        data = {"group": name, "order": str(value)}
        click.echo(render_structured(data), nl=False)
    else:
        click.echo(f"|{name}| = {value}")


@cli.command()
@click.pass_context
def table1(ctx):
    """Orders and s-values of L_n(2), n = 2..11, against the printed table."""
    _emit(ctx, reproduce_table1(_cache(ctx)))


@cli.command()
@click.option(
    "--max-n",
    type=click.IntRange(min=2),
    default=None,
    help="Largest n, at least 2 (default from settings: 20)",
)
@click.pass_context
def table2(ctx, max_n):
    """Degree patterns of GK(L_n(2)) against the printed rows."""
    if max_n is None:
        max_n = ctx.obj["config"].max_n
    _emit(ctx, reproduce_table2(max_n, _cache(ctx)))


@cli.command()
@click.pass_context
def table3(ctx):
    """Simple groups whose order divides |L_11(2)|."""
    _emit(ctx, reproduce_table3(_cache(ctx)))


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--dot", is_flag=True, help="Print DOT instead of an edge list")
@click.pass_context
def graph(ctx, n, dot):
    """Print GK(L_n(2))."""
    g = build_gk_Ln2(n, _cache(ctx))
    if dot or ctx.obj["output_format"] == OutputFormat.DOT:
        click.echo(to_dot(g), nl=False)
        return
    if _structured(ctx):
        data = {
            "vertices": list(g.vertices),
            "labels": {str(p): k for p, k in sorted(g.labels.items())},
            "edges": [list(e) for e in g.edge_list()],
            "pattern": list(degree_pattern(g).degrees),
        }
        click.echo(render_structured(data), nl=False)
        return
    click.echo(
        f"GK(L_{n}(2)): {len(g)} vertices, {len(g.edges)} edges, "
        f"D = {degree_pattern(g)}"
    )
    for v in g.vertices:
        label = f"k={g.labels[v]}" if v in g.labels else "-"
        click.echo(f"{v} {label}")
    for a, b in g.edge_list():
        click.echo(f"{a} -- {b}")


@cli.command()
@click.option("--k", "k", type=int, required=True)
@click.pass_context
def ppd(ctx, k):
    """Primitive prime divisors of 2^k - 1."""
    result = ppd_set(k, _cache(ctx))
    if _structured(ctx):
        click.echo(render_structured({"k": k, "ppd": list(result)}), nl=False)
        return
    click.echo(f"ppd(2^{k}-1) = {result}")
    if not result:
        click.echo(f"2^{k}-1 has no primitive prime divisor")


@cli.command()
@click.option("--mersenne", "k", type=int, required=True, help="Exponent k")
@click.pass_context
def factor(ctx, k):
    """Factor 2^k - 1."""
    result = factor_mersenne(k, _cache(ctx))
    if _structured(ctx):
        click.echo(
            render_structured({"k": k, "factorization": str(result)}), nl=False
        )
        return
    click.echo(f"2^{k}-1 = {result}")


@cli.command()
@click.option("--max-p", type=int, required=True)
@click.pass_context
def mersenne(ctx, max_p):
    """Lucas-Lehmer sweep against the published Mersenne exponents."""
    _emit(ctx, reproduce_mersenne(max_p))


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.pass_context
def alpha(ctx, n):
    """Independence number of GK(L_n(2)) and t(2, L_n(2))."""
    g = build_gk_Ln2(n, _cache(ctx))
    best, with_two = alpha_exact(g), t2(g)
    if _structured(ctx):
        data = {
            "n": n,
            "alpha": best.size,
            "witness": list(best.witness),
            "t2": with_two.size,
            "t2_witness": list(with_two.witness),
        }
        click.echo(render_structured(data), nl=False)
        return
    click.echo(
        f"alpha(GK(L_{n}(2))) = {best.size}, witness {_set(best.witness)}"
    )
    click.echo(
        f"t(2, L_{n}(2)) = {with_two.size}, "
        f"witness {_set(with_two.witness)}"
    )


@cli.command(name="caro-wei")
@click.option("--n", "n", type=int, required=True)
@click.pass_context
def caro_wei_cmd(ctx, n):
    """Caro-Wei lower bound for t(L_n(2))."""
    d = degree_pattern(build_gk_Ln2(n, _cache(ctx)))
    value = caro_wei(d)
    if _structured(ctx):
        data = {
            "n": n,
            "value": str(value),
            "decimal": f"{float(value):.6f}",
            "t_lower_bound": t_lower_bound(d),
        }
        click.echo(render_structured(data), nl=False)
        return
    click.echo(
        f"caro-wei(L_{n}(2)) = {value} ~ {float(value):.6f}, "
        f"t >= {t_lower_bound(d)}"
    )


@cli.command(name="lemma-m")
@click.option("--n", "n", type=int, required=True)
@click.pass_context
def lemma_m(ctx, n):
    """k with (2^k - 1)^2 not dividing |Aut(L_n(2))|."""
    _emit(ctx, reproduce_lemma_m(n, _cache(ctx)))


def _parse_primes(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise click.BadParameter(f"expected p1,p2,... got {text!r}")


@cli.command(name="od-check")
@click.option("--n", "n", type=int, required=True)
@click.option("--required", default=None, help="Required primes p1,p2,...")
@click.pass_context
def od_check(ctx, n, required):
    """
    Candidate filter for the signature (|L_n(2)|, D(L_n(2))).

    Exits 1 when a non-informational check fails. Several remaining
    candidates alone do not change the exit status.
    """
    cache = _cache(ctx)
    report = od_filter(
        signature_Ln2(n, cache),
        _parse_primes(required),
        target=GroupId.linear(n, 2),
        cache=cache,
    )
    if _structured(ctx):
        click.echo(report_to_json(report))
    else:
        click.echo(report_to_text(report), nl=False)
    failed = [c for c in report.checks if not c.informational and not c.passed]
    if failed:
        logger.info(f"failed checks: {[c.name for c in failed]}")
        ctx.exit(EXIT_DIFF)


@cli.command(name="aut-check")
@click.option("--p", "p", type=int, required=True)
@click.pass_context
def aut_check(ctx, p):
    """Order components, |C_L(sigma)| and degree bounds of Aut(L_p(2))."""
    _emit(ctx, reproduce_aut_check(p, _cache(ctx)))


def _set(values: Sequence[int]) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def run(argv: Sequence[str]) -> int:
    """Run the CLI on argv and return the exit status."""
    try:
        rv = cli.main(args=list(argv), standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return EXIT_ERROR if isinstance(e, click.UsageError) else e.exit_code
    except click.exceptions.Abort:
        return EXIT_DIFF
    return rv if isinstance(rv, int) else EXIT_OK


def main():
    """Main entry point that delegates to CLI argument parsing."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
