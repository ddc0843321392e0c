"""
Command line interface for egcdkit.

    egcdkit gcd A B
    egcdkit egcd A B [--json]
    egcdkit inverse A M
    egcdkit trace A B [--json | --csv]
    egcdkit verify (--exhaustive-to K | --random N [--max-bits B] [--seed S])
    egcdkit bench [--variant recursive|iterative|both] [--bits B] [--count N]
                  [--seed S]

Operands are non-negative decimal or 0x-prefixed hexadecimal literals.
Results go to stdout and diagnostics to stderr. Exit status is 0 on success,
1 on a domain failure (not invertible, failed check, exhausted stack) and 2
on a usage or parse error.
"""

import json
import re
from typing import Optional

import click
from loguru import logger

from egcdkit.bench import BenchVariant, compare_variants, run_bench
from egcdkit.core import (
    InvalidInput,
    NonInvertible,
    ResourceExhausted,
    egcd_iterative,
    gcd,
)
from egcdkit.logger import LoggerConfig, configure_logger
from egcdkit.modular import mod_inverse
from egcdkit.verify import check_trace, egcd_traced, run_verify
from egcdkit.version import __version__

__all__ = ["NumberLiteral", "NUMBER", "main"]

# exit status of a domain failure, usage errors exit with click's status 2
DOMAIN_FAILURE = 1

_DECIMAL = re.compile(r"[0-9]+")
_HEXADECIMAL = re.compile(r"0[xX][0-9a-fA-F]+")

# operands such as -3 must reach NumberLiteral instead of failing as options
_OPERAND_SETTINGS = dict(ignore_unknown_options=True)


class NumberLiteral(click.ParamType):
    """
    A non-negative integer written in decimal or as 0x-prefixed hexadecimal
    """

    name = "number"

    def convert(self, value, param, ctx) -> int:
        if isinstance(value, int) and not isinstance(value, bool):
            if value < 0:
                self.fail(
                    f"{value} is negative, operands must be non-negative", param, ctx
                )
            return value

        text = str(value).strip()
        if text.startswith("-"):
            self.fail(
                f"{text!r} is negative, operands must be non-negative", param, ctx
            )
        if _HEXADECIMAL.fullmatch(text):
            return int(text[2:], 16)
        if _DECIMAL.fullmatch(text):
            return int(text, 10)

        self.fail(
            f"{text!r} is not a non-negative decimal or 0x-hexadecimal integer",
            param,
            ctx,
        )


NUMBER = NumberLiteral()


def _fail(ctx: click.Context, message: str):
    logger.debug("Exiting with status {}", DOMAIN_FAILURE)
    click.echo(message, err=True)
    ctx.exit(DOMAIN_FAILURE)


@click.group()
@click.version_option(version=__version__, prog_name="egcdkit")
@click.option(
    "--log-level",
    type=click.Choice(
        ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False
    ),
    default=None,
    help="Console log level, logs are written to stderr.",
)
def main(log_level: Optional[str]):
    """
    Extended Euclid's algorithm toolkit.
    """
    if log_level:
        configure_logger(config=LoggerConfig(console_log_level=log_level))


@main.command("gcd", context_settings=_OPERAND_SETTINGS)
@click.argument("a", type=NUMBER)
@click.argument("b", type=NUMBER)
def gcd_command(a: int, b: int):
    """
    Print gcd(A, B).
    """
    click.echo(gcd(a, b))


@main.command("egcd", context_settings=_OPERAND_SETTINGS)
@click.argument("a", type=NUMBER)
@click.argument("b", type=NUMBER)
@click.option("--json", "as_json", is_flag=True, help="Print a JSON object.")
def egcd_command(a: int, b: int, as_json: bool):
    """
    Print "d x y" with d = gcd(A, B) = A*x + B*y.
    """
    d, x, y = egcd_iterative(a, b)
    if as_json:
        click.echo(json.dumps({"d": str(d), "x": str(x), "y": str(y)}))
    else:
        click.echo(f"{d} {x} {y}")


@main.command("inverse", context_settings=_OPERAND_SETTINGS)
@click.argument("a", type=NUMBER)
@click.argument("m", type=NUMBER)
@click.pass_context
def inverse_command(ctx: click.Context, a: int, m: int):
    """
    Print the inverse of A modulo M in [0, M).
    """
    if m == 0:
        raise click.BadParameter("modulus must be at least 1", param_hint="M")
    try:
        click.echo(mod_inverse(a, m))
    except NonInvertible as err:
        _fail(ctx, str(err))


@main.command("trace", context_settings=_OPERAND_SETTINGS)
@click.argument("a", type=NUMBER)
@click.argument("b", type=NUMBER)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON (default).")
@click.option("--csv", "as_csv", is_flag=True, help="Emit CSV k,q,a,b,c,d,e,f.")
@click.pass_context
def trace_command(ctx: click.Context, a: int, b: int, as_json: bool, as_csv: bool):
    """
    Emit the execution trace of the iterative algorithm on (A, B) after
    checking the loop invariant on every row and the exit condition.
    """
    if as_json and as_csv:
        raise click.UsageError("--json and --csv are mutually exclusive")

    trace = egcd_traced(a, b)
    result = check_trace(trace)
    click.echo(trace.to_csv() if as_csv else trace.to_json(), nl=not as_csv)

    if not result:
        _fail(ctx, f"invariant violated: {result.violated}")


@main.command("verify")
@click.option("--exhaustive-to", type=click.IntRange(min=0), default=None)
@click.option("--random", "random_count", type=click.IntRange(min=1), default=None)
@click.option("--max-bits", type=click.IntRange(min=1), default=256, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--progress", is_flag=True, help="Show a progress bar on stderr.")
@click.pass_context
def verify_command(
    ctx: click.Context,
    exhaustive_to: Optional[int],
    random_count: Optional[int],
    max_bits: int,
    seed: int,
    progress: bool,
):
    """
    Run the invariant and oracle suites, exhaustively over all pairs up to
    --exhaustive-to or over --random seeded pairs of up to --max-bits bits.
    """
    if (exhaustive_to is None) == (random_count is None):
        raise click.UsageError("give exactly one of --exhaustive-to or --random")

    try:
        summary = run_verify(
            progress=progress,
            exhaustive_to=exhaustive_to,
            random_count=random_count,
            max_bits=max_bits,
            seed=seed,
        )
    except InvalidInput as err:
        raise click.UsageError(str(err))

    click.echo(f"suite: {summary.suite}")
    click.echo(f"pairs checked: {summary.pairs}")
    click.echo(f"checks passed: {summary.passed}/{summary.checks}")
    click.echo(f"violations: {summary.violation_count}")

    if not summary.ok:
        _fail(ctx, "\n".join(summary.violations))


@main.command("bench")
@click.option(
    "--variant",
    type=click.Choice([variant.value for variant in BenchVariant] + ["both"]),
    default=BenchVariant.ITERATIVE.value,
    show_default=True,
)
@click.option("--bits", type=click.IntRange(min=2), default=64, show_default=True)
@click.option("--count", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--no-warmup", is_flag=True, help="Time the first call as well.")
@click.pass_context
def bench_command(
    ctx: click.Context, variant: str, bits: int, count: int, seed: int, no_warmup: bool
):
    """
    Time a variant on seeded random pairs and print the report as JSON.
    """
    try:
        if variant == "both":
            reports = compare_variants(bits, count, seed, warmup=not no_warmup)
            click.echo(
                "[" + ", ".join(report.to_json() for report in reports) + "]"
            )
        else:
            report = run_bench(variant, bits, count, seed, warmup=not no_warmup)
            click.echo(report.to_json())
    except ResourceExhausted as err:
        _fail(ctx, str(err))


if __name__ == "__main__":
    main()
