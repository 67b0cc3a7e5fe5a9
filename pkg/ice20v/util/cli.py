import functools
import logging
import sys
import textwrap
import typing as t
from fractions import Fraction
from pathlib import Path

import click

from ice20v.util.environ import init_dotenv
from ice20v.util.logging import setup_logging

logger = logging.getLogger(__name__)


def log_level(verbose: bool = False, debug: bool = False) -> int:
    if debug:
        return logging.DEBUG
    if verbose:
        return logging.INFO
    return logging.WARNING


def boot_click(ctx: click.Context, verbose: bool = False, debug: bool = False):
    """
    Bootstrap the CLI application.

    Without `--verbose` or `--debug` only warnings reach stderr, so stdout stays
    clean for JSON, CSV and SVG output.
    """
    setup_logging(level=log_level(verbose=verbose, debug=debug), verbose=verbose or debug)

    # Pick up settings like `ICE20V_JOBS` from a `.env` file.
    init_dotenv()
    ctx.ensure_object(dict)


def docstring_format_verbatim(text: t.Optional[str]) -> str:
    """
    Format docstring to be displayed verbatim as a help text by Click.

    - https://click.palletsprojects.com/en/8.1.x/documentation/#preventing-rewrapping
    - https://github.com/pallets/click/issues/56
    """
    text = text or ""
    text = textwrap.dedent(text)
    lines = [line if line.strip() else "\b" for line in text.splitlines()]
    return "\n".join(lines)


def make_command(cli: click.Group, name: str, helpfun: t.Callable, aliases: t.Optional[t.List[str]] = None):
    """
    Subcommand with verbatim help text taken from `helpfun`.
    """
    return cli.command(
        name,
        help=docstring_format_verbatim(helpfun.__doc__),
        context_settings={"max_content_width": 100},
        aliases=aliases,
    )


def output_option(required: bool = False, help_text: str = "Output file"):
    return click.option(
        "--out", type=click.Path(dir_okay=False, writable=True), required=required, default=None, help=help_text
    )


class FractionParamType(click.ParamType):
    name = "fraction"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number like 3 or -2/5", param, ctx)


FRACTION = FractionParamType()


def library_errors(fun: t.Callable) -> t.Callable:
    """
    Invalid parameters reaching the library become usage errors, anything else it raises is
    logged and ends the program with exit code 2.
    """

    @functools.wraps(fun)
    def wrapper(*args, **kwargs):
        try:
            return fun(*args, **kwargs)
        except ValueError as ex:
            raise click.UsageError(str(ex)) from ex
        except (ArithmeticError, TypeError) as ex:
            logger.critical(f"{ex.__class__.__name__}: {ex}")
            sys.exit(2)

    return wrapper


def emit(text: str, out: t.Optional[str]) -> None:
    """
    Write to `out` when given, to stdout otherwise.
    """
    if out is None:
        click.echo(text, nl=False)
        return
    Path(out).write_text(text, encoding="utf-8")
    logger.info(f"Wrote {out}")
