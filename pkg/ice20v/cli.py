import csv
import io
import json
import logging
import typing as t
from fractions import Fraction
from pathlib import Path

import click
from click_aliases import ClickAliasedGroup

from ice20v.exactalg.codec import encode_scalar
from ice20v.exactalg.cyclotomic import Cyclotomic2k
from ice20v.exactalg.matrix import ExactMatrix, det_exact
from ice20v.exactalg.poly import PolyUni
from ice20v.genfun.builders import build_ik_matrix, build_ik_refined_matrix, build_refined_t4_matrix, build_t4_matrix
from ice20v.icemodel.model import LatticeConfig
from ice20v.icemodel.symmetry import SYMMETRY_MAX_N, SymmetryType, count_symmetry
from ice20v.icemodel.transfer import count_20v, count_pentagon, count_rect_dwbc4
from ice20v.render import render_config, render_tiling
from ice20v.tilings.domino import Region, iter_tilings
from ice20v.tilings.lgv import extended_triangle_matrix, t4_count, t4_refined, triangle_count
from ice20v.util.cli import (
    FRACTION,
    boot_click,
    docstring_format_verbatim,
    emit,
    library_errors,
    make_command,
    output_option,
)
from ice20v.util.environ import JOBS_ENV_VAR, getenv_jobs
from ice20v.verify.core import SuiteRunner
from ice20v.verify.model import SuiteType

logger = logging.getLogger(__name__)


def show(value: t.Any) -> str:
    """
    Scalars for humans: rationals and polynomials as text, other ring elements in their JSON encoding.
    """
    if isinstance(value, Cyclotomic2k) and value.is_rational():
        value = value.to_fraction()
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, PolyUni):
        return value.format()
    return json.dumps(encode_scalar(value), sort_keys=True, separators=(",", ":"))


def show_matrix(matrix: ExactMatrix) -> str:
    return "[" + ",".join("[" + ",".join(show(value) for value in row) + "]" for row in matrix.rows()) + "]"


def help_cli():
    """
    Exact enumeration of the twenty-vertex model with domain walls.

    ice20v seq --family A --max-n 6
    ice20v verify --suite z20t4 --max-n 5
    ice20v det --builder t4 --n 3 --dump
    ice20v render config.json --out config.svg
    """  # noqa: E501


@click.group(cls=ClickAliasedGroup, help=docstring_format_verbatim(help_cli.__doc__))
@click.version_option(package_name="ice20v")
@click.option("--verbose", is_flag=True, required=False, help="Turn on logging")
@click.option("--debug", is_flag=True, required=False, help="Turn on logging with debug level")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, debug: bool):
    return boot_click(ctx, verbose, debug)


# seq


class Family(t.NamedTuple):
    cap: int
    index: str
    compute: t.Callable[..., t.Any]


FAMILIES: t.Dict[str, Family] = {
    "A": Family(8, "n", lambda n, **_: count_20v("DWBC1", n)),
    "B": Family(6, "n", lambda n, **_: count_20v("DWBC3", n)),
    "p": Family(5, "n", lambda n, k, **_: count_pentagon(n, k)),
    "N": Family(7, "a", lambda a, b, c, **_: count_rect_dwbc4(a, b, c)),
    "sapm1": Family(SYMMETRY_MAX_N, "n", lambda n, **_: count_symmetry("DWBC1", n, SymmetryType.SAPM)),
    "tcapm": Family(SYMMETRY_MAX_N, "n", lambda n, **_: count_symmetry("DWBC1", n, SymmetryType.TCAPM)),
    "sapm3": Family(SYMMETRY_MAX_N, "n", lambda n, **_: count_symmetry("DWBC3", n, SymmetryType.SAPM)),
    "sapm4": Family(5, "n", lambda n, **_: count_symmetry("DWBC4", n, SymmetryType.SAPM)),
    "htapm": Family(5, "n", lambda n, **_: count_symmetry("DWBC4", n, SymmetryType.HTAPM)),
    "b_n": Family(20, "n", lambda n, **_: triangle_count(n)),
    "T4": Family(20, "n", lambda n, theta, **_: t4_count(n, theta)),
    "refined1": Family(12, "n", lambda n, **_: t4_refined(n, 1)),
    "refined2": Family(12, "n", lambda n, **_: t4_refined(n, 2)),
}


def _sequence_value(value: t.Any) -> t.Any:
    if isinstance(value, PolyUni):
        return [encode_scalar(coeff) for coeff in value.coeffs]
    return encode_scalar(value)


def help_seq():
    """
    Emit an integer sequence, values as decimal strings.

    Families: A (DWBC1), B (DWBC3), p (pentagon, needs --k), N (DWBC4 rectangle,
    needs --b and --c, indexed by a = 0..max-n-1), sapm1, tcapm, sapm3, sapm4,
    htapm (symmetry classes), b_n (triangle tilings), T4 (quarter-turn tilings,
    weighted by --theta), refined1, refined2 (coefficient lists).

    ice20v seq --family A --max-n 6
    ice20v seq --family N --b 1 --c 1 --max-n 5 --format csv
    """  # noqa: E501


@make_command(cli, "seq", help_seq, aliases=["sequence"])
@click.option("--family", type=click.Choice(list(FAMILIES)), required=True, help="Sequence to emit")
@click.option("--max-n", type=click.IntRange(min=0), default=6, show_default=True, help="Number of terms")
@click.option("--k", type=click.IntRange(min=0), default=None, help="Pentagon height")
@click.option("--b", type=click.IntRange(min=0), default=None, help="Rectangle parameter b")
@click.option("--c", type=click.IntRange(min=0), default=None, help="Rectangle parameter c")
@click.option("--theta", type=FRACTION, default=Fraction(1), show_default=True, help="Weight per path for T4")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@output_option()
@click.pass_context
@library_errors
def cmd_seq(
    ctx: click.Context,
    family: str,
    max_n: int,
    k: t.Optional[int],
    b: t.Optional[int],
    c: t.Optional[int],
    theta: Fraction,
    fmt: str,
    out: t.Optional[str],
):
    spec = FAMILIES[family]
    if max_n > spec.cap:
        raise click.BadParameter(f"family {family} supports --max-n up to {spec.cap}", param_hint="--max-n")
    params: t.Dict[str, t.Any] = {}
    if family == "p":
        if k is None:
            raise click.UsageError("family p needs --k")
        params["k"] = k
    if family == "N":
        if b is None or c is None:
            raise click.UsageError("family N needs --b and --c")
        if b + c > 5:
            raise click.BadParameter("family N supports b + c <= 5", param_hint="--b/--c")
        params.update(b=b, c=c)
    if family == "T4":
        params["theta"] = theta.numerator if theta.denominator == 1 else theta

    if spec.index == "a":
        indices = list(range(max_n))
        values = [_sequence_value(spec.compute(a=a, **params)) for a in indices]
    else:
        indices = list(range(1, max_n + 1))
        values = [_sequence_value(spec.compute(n=n, **params)) for n in indices]
    logger.info(f"Computed {len(values)} terms of family {family}")

    if fmt == "json":
        document = {
            "family": family,
            "index": spec.index,
            "params": {key: encode_scalar(value) for key, value in params.items()},
            "values": values,
        }
        emit(json.dumps(document, sort_keys=True) + "\n", out)
        return
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([spec.index, "value"])
    for index, value in zip(indices, values):
        writer.writerow([index] + (value if isinstance(value, list) else [value]))
    emit(buffer.getvalue(), out)


# verify


def help_verify():
    """
    Run verification suites and print their JSON report.

    Exit code 0 when every check passes, 1 otherwise. Independent checks run on
    --jobs worker threads; ICE20V_JOBS overrides the flag.

    ice20v verify --suite z20t4 --max-n 5
    ice20v verify --suite all --max-n 4 --jobs 4
    """  # noqa: E501


@make_command(cli, "verify", help_verify, aliases=["check"])
@click.option("--suite", type=click.Choice(SuiteType.names()), default="all", show_default=True)
@click.option("--max-n", type=click.IntRange(min=1), default=4, show_default=True, help="Size bound")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker threads")
@output_option(help_text="Report file")
@click.pass_context
@library_errors
def cmd_verify(ctx: click.Context, suite: str, max_n: int, jobs: int, out: t.Optional[str]):
    try:
        jobs = getenv_jobs(default=jobs)
    except ValueError as ex:
        raise click.BadParameter(str(ex), param_hint=JOBS_ENV_VAR) from ex
    runner = SuiteRunner([suite], max_n=max_n, jobs=jobs)
    reports = runner.run()
    passed = runner.passed(reports)
    document = {"passed": passed, "suites": [report.to_dict() for report in reports]}
    emit(json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n", out)
    if not passed:
        logger.error("Verification failed")
        ctx.exit(1)


# det


BUILDERS = ["t4", "t4-refined", "ik", "ik-refined", "lgv-triangle"]


def help_det():
    """
    Build a matrix and print its exact determinant.

    t4            I + θM, the quarter-turn tiling matrix (--theta)
    t4-refined    the refined matrix of --type 1 or 2, a polynomial in τ
    ik            the homogeneous Izergin-Korepin matrix, times its prefactor
    ik-refined    the same with the last column deformed (--v)
    lgv-triangle  strip Schröder matrix of the triangle raised by --k

    ice20v det --builder t4 --n 3 --dump
    ice20v det --builder t4-refined --type 2 --n 4
    """  # noqa: E501


@make_command(cli, "det", help_det, aliases=["determinant"])
@click.option("--builder", type=click.Choice(BUILDERS), required=True, help="Matrix builder")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Matrix size")
@click.option("--type", "kind", type=click.IntRange(min=1, max=2), default=1, show_default=True)
@click.option("--theta", type=FRACTION, default=Fraction(1), show_default=True)
@click.option("--v", "v", type=FRACTION, default=Fraction(2), show_default=True, help="Deformation, u = v²")
@click.option("--k", type=click.IntRange(min=0), default=0, show_default=True, help="Raised border")
@click.option("--dump", is_flag=True, help="Print the matrix too")
@click.pass_context
@library_errors
def cmd_det(ctx: click.Context, builder: str, n: int, kind: int, theta: Fraction, v: Fraction, k: int, dump: bool):
    prefactor = None
    if builder == "t4":
        matrix = build_t4_matrix(n, theta.numerator if theta.denominator == 1 else theta)
    elif builder == "t4-refined":
        matrix = build_refined_t4_matrix(n, kind)
    elif builder in ("ik", "ik-refined"):
        system = build_ik_matrix(n) if builder == "ik" else build_ik_refined_matrix(n, v)
        matrix, prefactor = system.matrix, system.prefactor
    else:
        matrix = extended_triangle_matrix(n, k)

    if dump:
        click.echo(show_matrix(matrix))
        if prefactor is not None:
            click.echo(f"prefactor: {show(prefactor)}")
    value = det_exact(matrix)
    if prefactor is not None:
        if not isinstance(value, Cyclotomic2k):
            value = Cyclotomic2k.from_rational(prefactor.k, value)
        value = prefactor * value.embed(prefactor.k)
    click.echo(show(value))


# render


def help_render():
    """
    Draw a configuration or a domino tiling as SVG.

    The input is the JSON of a configuration ({"rows", "cols", "h_bits", ...})
    or of a region ({"region": [...bitmap rows...]} or {"cells": [[row, col], ...]}).
    A region is drawn with its first tiling; --all writes every tiling to
    <stem>-<k>.svg next to --out.

    ice20v render config.json --out config.svg
    ice20v render triangle.json --out triangle.svg --all
    """  # noqa: E501


def _load(source: t.IO[str]) -> t.Union[LatticeConfig, Region]:
    try:
        data = json.load(source)
    except json.JSONDecodeError as ex:
        raise click.BadParameter(f"not valid JSON: {ex}", param_hint="INPUT") from ex
    if not isinstance(data, dict):
        raise click.BadParameter("expected a JSON object", param_hint="INPUT")
    try:
        if "h_bits" in data:
            return LatticeConfig.from_dict(data)
        return Region.from_dict(data)
    except ValueError as ex:
        raise click.BadParameter(str(ex), param_hint="INPUT") from ex


@make_command(cli, "render", help_render, aliases=["draw"])
@click.argument("source", metavar="INPUT", type=click.File("r"))
@output_option(required=True, help_text="SVG file")
@click.option("--all", "all_tilings", is_flag=True, help="Write every tiling of a region")
@click.pass_context
@library_errors
def cmd_render(ctx: click.Context, source: t.IO[str], out: str, all_tilings: bool):
    item = _load(source)
    if isinstance(item, LatticeConfig):
        if all_tilings:
            raise click.UsageError("--all applies to regions only")
        emit(render_config(item), out)
        return
    if not all_tilings:
        first = next(iter_tilings(item), None)
        emit(render_tiling(item, first), out)
        return
    target = Path(out)
    count = 0
    for count, tiling in enumerate(iter_tilings(item), start=1):
        emit(render_tiling(item, tiling), str(target.with_name(f"{target.stem}-{count}.svg")))
    logger.info(f"Wrote {count} tilings")
    click.echo(f"{count} tilings")
