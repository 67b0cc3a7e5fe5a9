"""
Check definitions per verification suite.

A suite builder takes the requested size bound and returns its checks in report order. Every
suite clamps the bound to its own cap.
"""

import logging
import typing as t
from fractions import Fraction
from functools import partial

from ice20v.apm.model import ApmMatrix, config_from_apm, iter_asms, lift_asm, to_apm
from ice20v.apm.rules import ApmType, check_sum_rules, validate
from ice20v.apm.symmetry import q_bell, rotate_half_turn, symmetry_class
from ice20v.apm.turning import eta, turning_profile
from ice20v.exactalg.cyclotomic import Cyclotomic2k
from ice20v.exactalg.eisenstein import EisensteinElt
from ice20v.exactalg.matrix import det_exact
from ice20v.genfun.builders import (
    build_ik_absorbed_matrix,
    build_ik_matrix,
    build_ik_refined_matrix,
    build_refined_t4_matrix_second_form,
    check_remarkable_identity,
    restricted_schroder_gf,
)
from ice20v.genfun.series import gf_coeff_table
from ice20v.icemodel.kagome import kagome_negative_control, verify_kagome
from ice20v.icemodel.model import BoundaryKind, BoundarySpec
from ice20v.icemodel.refinement import bijection_check, verify_refinement_theorem
from ice20v.icemodel.sixvertex import StaggeredVariant, count_6v, count_staggered_6v, six_vertex_census, sqrt2_weights
from ice20v.icemodel.symmetry import SymmetryType, count_symmetry
from ice20v.icemodel.transfer import (
    count_20v,
    count_20v_refined,
    count_pentagon,
    count_rect_dwbc4,
    enumerate_configs,
    naive_count,
)
from ice20v.tilings.domino import domino_matchings, square_region, triangle_region
from ice20v.tilings.kasteleyn import kasteleyn_half_product, kasteleyn_square
from ice20v.tilings.lgv import (
    extended_triangle_count,
    free_energy_trend,
    t4_by_minor_sum,
    t4_count,
    t4_refined,
    triangle_count,
    triangle_count_forms,
)
from ice20v.tilings.schroder import conjectured_nabc, restricted_schroder
from ice20v.verify import tables
from ice20v.verify.model import Check, Outcome, SuiteType

logger = logging.getLogger(__name__)

SUITE_CAPS: t.Dict[SuiteType, int] = {
    SuiteType.AN6V: 6,
    SuiteType.Z20T4: 8,
    SuiteType.REFINED: 7,
    SuiteType.DWBC3: 6,
    SuiteType.PENTA: 5,
    SuiteType.NABC: 6,
    SuiteType.APM_RULES: 4,
    SuiteType.SYMMETRY: 6,
    SuiteType.YANG_BAXTER: 2,
    SuiteType.STAGGERED: 3,
    SuiteType.KASTELEYN: 8,
}

DWBC_KINDS = (BoundaryKind.DWBC1, BoundaryKind.DWBC2, BoundaryKind.DWBC3, BoundaryKind.DWBC4)


def plain(value: t.Any) -> t.Any:
    """
    Rational ring elements as Python numbers, everything else unchanged.
    """
    if isinstance(value, Cyclotomic2k) and value.is_rational():
        value = value.to_fraction()
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _compare(expected: t.Any, compute: t.Callable[..., t.Any], *args: t.Any) -> Outcome:
    return Outcome(expected=expected, actual=plain(compute(*args)))


def _agree(left: t.Callable[[], t.Any], right: t.Callable[[], t.Any]) -> Outcome:
    return Outcome(expected=plain(left()), actual=plain(right()))


def _coefficients(poly: t.Any) -> t.List[t.Any]:
    return [plain(coeff) for coeff in poly.coeffs]


# an6v


def _six_vertex(n: int) -> Outcome:
    value = count_6v(n, sqrt2_weights())
    detail = "" if value.is_rational() else f"irrational part in {value!r}"
    return Outcome(expected=tables.A_SEQUENCE[n - 1], actual=plain(value), detail=detail)


def _census() -> Outcome:
    return Outcome(
        expected=tables.SIX_VERTEX_CENSUS_3,
        actual=sorted(plain(weight) for weight in six_vertex_census(3, sqrt2_weights())),
    )


def an6v_checks(max_n: int) -> t.List[Check]:
    checks = [Check(f"z6v:n={n}", tables.A_SOURCE, partial(_six_vertex, n)) for n in range(1, max_n + 1)]
    if max_n >= 3:
        checks.append(Check("census:n=3", "6V weights (1,√2,1) of the seven 3x3 ASMs", _census))
    return checks


# z20t4


def _gf_oracle(size: int = 10) -> Outcome:
    table = gf_coeff_table(restricted_schroder_gf(), size, size - 1)
    expected = [[restricted_schroder(i, j + 1) for j in range(size)] for i in range(size + 1)]
    actual = [[plain(table[i, j]) for j in range(size)] for i in range(size + 1)]
    return Outcome(expected=True, actual=expected == actual, detail="restricted path counts vs kernel coefficients")


def _trend(size: int = 8) -> Outcome:
    report = free_energy_trend([t4_count(n) for n in range(1, size + 1)])
    detail = ", ".join(f"{density:.5f}" for density in report.densities)
    landmarks = all(
        abs(report.densities[n - 1] - density) < 5e-6 for n, density in tables.TREND_DENSITIES.items() if n <= size
    )
    return Outcome(
        expected=True, actual=report.passed and landmarks and report.last >= tables.TREND_FLOOR, detail=detail
    )


def z20t4_checks(max_n: int) -> t.List[Check]:
    checks = []
    for n in range(1, max_n + 1):
        expected = tables.A_SEQUENCE[n - 1]
        checks.append(Check(f"dwbc1:n={n}", tables.A_SOURCE, partial(_compare, expected, count_20v, "DWBC1", n)))
        checks.append(Check(f"dwbc2:n={n}", tables.A_SOURCE, partial(_compare, expected, count_20v, "DWBC2", n)))
        checks.append(Check(f"t4:n={n}", tables.A_SOURCE, partial(_compare, expected, t4_count, n)))
        if n <= 6:
            checks.append(
                Check(
                    f"ik:n={n}",
                    tables.A_SOURCE,
                    partial(_compare, expected, lambda size: build_ik_matrix(size).integer_value(), n),
                )
            )
            checks.append(
                Check(
                    f"ik-absorbed:n={n}",
                    tables.A_SOURCE,
                    partial(_compare, expected, lambda size: det_exact(build_ik_absorbed_matrix(size)), n),
                )
            )
        if n <= 5:
            checks.append(
                Check(
                    f"minor-sum:n={n}",
                    "det(I+M) as a sum of principal minors",
                    partial(_agree, partial(t4_count, n), partial(t4_by_minor_sum, n)),
                )
            )
        if n <= 4:
            for kind in DWBC_KINDS:
                checks.append(
                    Check(
                        f"naive:{kind.value}:n={n}",
                        "frontier sweep vs backtracking",
                        partial(_agree, partial(naive_count, kind, n), partial(count_20v, kind, n)),
                    )
                )
    checks.append(Check("gf-oracle", "restricted Schröder paths, i,j <= 10", _gf_oracle))
    checks.append(
        Check("gf-identity", "Gaussian-rational kernel identity", partial(_compare, True, check_remarkable_identity))
    )
    checks.append(Check("trend", "(log A_n)/n² increasing, below (3/2)log(4/3)", _trend))
    return checks


# refined


def _ik_refined(n: int, v: Fraction) -> Outcome:
    u = v * v
    i = Cyclotomic2k.imaginary_unit(3)
    one = Cyclotomic2k.one(3)
    root = Cyclotomic2k.sqrt2(3)
    weights = (one, root, one)
    deformed = ((u + i) * (1 - i) * Fraction(1, 2), root * (1 + u) * Fraction(1, 2), one * v)
    return Outcome(
        expected=count_6v(n, weights, last_column=deformed),
        actual=build_ik_refined_matrix(n, v).value(),
    )


def _second_form(n: int, kind: int) -> t.Any:
    return det_exact(build_refined_t4_matrix_second_form(n, kind))


def refined_checks(max_n: int) -> t.List[Check]:
    checks = []
    for n in range(1, max_n + 1):
        for kind, table in ((1, tables.REFINED_TYPE1), (2, tables.REFINED_TYPE2)):
            refined = partial(t4_refined, n, kind)
            checks.append(
                Check(
                    f"t4-refined{kind}:n={n}",
                    tables.REFINED_SOURCE,
                    partial(_compare, table[n - 1], lambda poly=refined: _coefficients(poly())),
                )
            )
            checks.append(
                Check(
                    f"second-form{kind}:n={n}",
                    "last-column correction of the refined matrix",
                    partial(_agree, refined, partial(_second_form, n, kind)),
                )
            )
            checks.append(
                Check(
                    f"tau-one{kind}:n={n}",
                    tables.A_SOURCE,
                    partial(_agree, partial(t4_count, n), lambda poly=refined: poly()(1)),
                )
            )
            if n <= 6:
                kind_name = f"DWBC{kind}"
                checks.append(
                    Check(
                        f"sweep{kind}:n={n}",
                        tables.REFINED_SOURCE,
                        partial(
                            _agree,
                            lambda poly=refined: _coefficients(poly()),
                            lambda name=kind_name, size=n: _coefficients(count_20v_refined(name, size)),
                        ),
                    )
                )
        if n <= 6:
            checks.append(
                Check(
                    f"refinement:n={n}",
                    "refined 20V counts vs refined 6V with weights (1,√2,1)",
                    lambda size=n: Outcome.from_report(verify_refinement_theorem(size)),
                )
            )
        if n <= 5:
            checks.append(
                Check(
                    f"bijection:n={n}",
                    "DWBC1 <-> DWBC2 by half-turn and edge flip",
                    lambda size=n: Outcome.from_report(bijection_check(size)),
                )
            )
        if n <= 4:
            for v in (Fraction(2), Fraction(1, 3)):
                checks.append(
                    Check(f"ik-refined:n={n}:v={v}", "deformed last column of the 6V model", partial(_ik_refined, n, v))
                )
    return checks


# dwbc3


def _forms(n: int) -> Outcome:
    even, odd = triangle_count_forms(n)
    return Outcome(expected=even, actual=odd)


def dwbc3_checks(max_n: int) -> t.List[Check]:
    checks = []
    for n in range(1, max_n + 1):
        expected = tables.B_SEQUENCE[n - 1]
        checks.append(Check(f"dwbc3:n={n}", tables.B_SOURCE, partial(_compare, expected, count_20v, "DWBC3", n)))
        checks.append(Check(f"triangle:n={n}", tables.B_SOURCE, partial(_compare, expected, triangle_count, n)))
        if n <= 5:
            checks.append(
                Check(
                    f"matchings:n={n}",
                    tables.B_SOURCE,
                    partial(_compare, expected, lambda size: domino_matchings(triangle_region(size)), n),
                )
            )
    for n in range(1, 9):
        checks.append(Check(f"forms:n={n}", "both triangle determinants agree", partial(_forms, n)))
    return checks


# penta


def _saturation(n: int) -> Outcome:
    values = [extended_triangle_count(n, k) for k in range(n + 2)]
    monotone = all(a <= b for a, b in zip(values, values[1:]))
    saturated = len(set(values[max(n - 1, 0) :])) == 1
    return Outcome(expected=True, actual=monotone and saturated, detail=", ".join(map(str, values)))


def penta_checks(max_n: int) -> t.List[Check]:
    checks = []
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            expected = tables.B_SEQUENCE[n - 1] if k == 0 else tables.PENTAGON_TABLE[k][n - 1]
            checks.append(
                Check(
                    f"pentagon:n={n}:k={k}", tables.PENTAGON_SOURCE, partial(_compare, expected, count_pentagon, n, k)
                )
            )
            checks.append(
                Check(
                    f"extended:n={n}:k={k}",
                    tables.PENTAGON_SOURCE,
                    partial(_compare, expected, extended_triangle_count, n, k),
                )
            )
    for n in range(1, 7):
        checks.append(Check(f"saturation:n={n}", "nondecreasing in k, constant for k >= n-1", partial(_saturation, n)))
    return checks


# nabc


def nabc_checks(max_n: int) -> t.List[Check]:
    checks = []
    for n in range(1, min(max_n, 5) + 1):
        expected = tables.DWBC4_SEQUENCE[n - 1]
        checks.append(Check(f"dwbc4:n={n}", tables.DWBC4_SOURCE, partial(_compare, expected, count_20v, "DWBC4", n)))
        checks.append(
            Check(
                f"rect4:n={n}",
                tables.DWBC4_SOURCE,
                partial(_compare, expected, count_rect_dwbc4, n - 1, 0, n - 1),
            )
        )
    for (b, c), row in tables.NABC_TABLE.items():
        for a, expected in enumerate(row):
            if a <= max_n:
                checks.append(
                    Check(
                        f"rect4:a={a}:b={b}:c={c}",
                        tables.NABC_SOURCE,
                        partial(_compare, expected, count_rect_dwbc4, a, b, c),
                    )
                )
            if c == 1 or a == 0:
                checks.append(
                    Check(
                        f"single-path:a={a}:b={b}:c={c}",
                        tables.NABC_SOURCE,
                        partial(_compare, expected, conjectured_nabc, a, b, c),
                    )
                )
    return checks


# apm-rules


def _turning_consistent(config, apm: ApmMatrix, kind: ApmType) -> bool:
    profile = turning_profile(config)
    n = apm.n
    if any(profile.vertex_sums[j, n + 1 - i] != apm.value(i, j) for i in range(1, n + 1) for j in range(1, n + 1)):
        return False
    if sum(profile.totals(), EisensteinElt()) != apm.total():
        return False
    if any(path.total != eta(path.edges[-1]) - eta(path.edges[0]) for path in profile.paths):
        return False
    if kind is ApmType.TYPE4:
        return True
    return sum(1 for path in profile.paths if path.is_hv) == n


def _image_census(kind: BoundaryKind, n: int) -> Outcome:
    apm_type = ApmType(int(kind.value[-1]))
    spec = BoundarySpec.dwbc(kind, n)
    configs = enumerate_configs(spec).configs
    images = [to_apm(config) for config in configs]
    valid = sum(1 for apm in images if validate(apm, apm_type))
    sums = sum(1 for apm in images if check_sum_rules(apm, apm_type).passed)
    distinct = len({apm.triples for apm in images})
    turning = sum(1 for config, apm in zip(configs, images) if _turning_consistent(config, apm, apm_type))
    inverse = sum(1 for config, apm in zip(configs, images) if config_from_apm(apm, spec) == config)
    size = len(configs)
    return Outcome(
        expected=[size] * 5,
        actual=[valid, sums, distinct, turning, inverse],
        detail="valid, sum rules, distinct, turning weights, inverse",
    )


def _example(kind: int) -> Outcome:
    apm = ApmMatrix.from_values(tables.EXAMPLE_APMS[kind])
    spec = BoundarySpec.dwbc(f"DWBC{kind}", apm.n)
    config = config_from_apm(apm, spec)
    return Outcome(
        expected=[tables.EXAMPLE_APMS[kind], True, True],
        actual=[to_apm(config).to_codes(), validate(apm, kind), check_sum_rules(apm, kind).passed],
    )


def _example_line_sums() -> Outcome:
    apm = ApmMatrix.from_values(tables.EXAMPLE_APMS[4])
    n = apm.n
    rows = [-sum(apm.row(i), EisensteinElt()).a for i in range(1, n + 1)]
    columns = [sum(apm.column(j), EisensteinElt()).b for j in range(1, n + 1)]
    diagonals = [
        sum((apm.value(i, j) for i, j in apm.diagonal_cells(offset)), EisensteinElt()).a for offset in range(1 - n, n)
    ]
    return Outcome(
        expected=[tables.EXAMPLE_TYPE4_ROW_SUMS, tables.EXAMPLE_TYPE4_COLUMN_SUMS, tables.EXAMPLE_TYPE4_DIAGONAL_SUMS],
        actual=[rows, columns, diagonals],
    )


def _rotation(n: int) -> Outcome:
    first = sorted(rotate_half_turn(to_apm(config)).to_codes() for config in enumerate_configs("DWBC1", n))
    second = sorted(to_apm(config).to_codes() for config in enumerate_configs("DWBC2", n))
    return Outcome(expected=True, actual=first == second, detail=f"{len(first)} matrices")


def _lifted_asms(n: int) -> Outcome:
    asms = list(iter_asms(n))
    lifted = [lift_asm(asm) for asm in asms]
    realized = 0
    for apm in lifted:
        try:
            for kind in (1, 2, 3):
                config_from_apm(apm, BoundarySpec.dwbc(f"DWBC{kind}", n))
        except ValueError:
            continue
        realized += 1
    valid = sum(1 for apm in lifted if all(validate(apm, kind) for kind in (1, 2, 3)))
    return Outcome(expected=[len(asms)] * 2, actual=[valid, realized], detail="valid for types 1-3, realized")


def _zero_matrix(n: int) -> Outcome:
    zero = ApmMatrix.zero(n)
    return Outcome(expected=[False, False, False, True], actual=[validate(zero, kind) for kind in (1, 2, 3, 4)])


def apm_rules_checks(max_n: int) -> t.List[Check]:
    checks = []
    for n in range(1, max_n + 1):
        for kind in DWBC_KINDS:
            checks.append(
                Check(f"images:{kind.value}:n={n}", "phase matrices of a boundary", partial(_image_census, kind, n))
            )
        checks.append(Check(f"asm-lift:n={n}", "ASMs are phase matrices of types 1-3", partial(_lifted_asms, n)))
        checks.append(Check(f"zero:n={n}", "the zero matrix is of type 4 only", partial(_zero_matrix, n)))
        if n <= 3:
            checks.append(Check(f"rotation:n={n}", "type 1 <-> type 2 by half-turn", partial(_rotation, n)))
    for kind in (1, 2, 3, 4):
        checks.append(Check(f"example:type{kind}", tables.EXAMPLE_SOURCE.format(kind=kind), partial(_example, kind)))
    checks.append(Check("example:type4:line-sums", tables.EXAMPLE_SOURCE.format(kind=4), _example_line_sums))
    checks.append(
        Check(
            "example:rotation",
            tables.EXAMPLE_SOURCE.format(kind="1 and 2"),
            lambda: Outcome(
                expected=tables.EXAMPLE_APMS[2],
                actual=rotate_half_turn(ApmMatrix.from_values(tables.EXAMPLE_APMS[1])).to_codes(),
            ),
        )
    )
    return checks


# symmetry


def _symmetric_images(n: int) -> Outcome:
    classes = [symmetry_class(to_apm(config)) for config in enumerate_configs("DWBC1", n)]
    return Outcome(
        expected=[count_symmetry("DWBC1", n, SymmetryType.SAPM), count_symmetry("DWBC1", n, SymmetryType.TCAPM)],
        actual=[
            sum(1 for found in classes if SymmetryType.SAPM in found),
            sum(1 for found in classes if SymmetryType.TCAPM in found),
        ],
    )


def symmetry_checks(max_n: int) -> t.List[Check]:
    checks = []
    for (kind, sym), row in tables.SYMMETRY_COUNTS.items():
        for n, expected in enumerate(row, start=1):
            if n <= max_n:
                checks.append(
                    Check(
                        f"{sym}:{kind}:n={n}",
                        tables.SYMMETRY_SOURCE,
                        partial(_compare, expected, count_symmetry, kind, n, sym),
                    )
                )
    for n, expected in enumerate(tables.SYMMETRY_COUNTS[("DWBC1", "TCAPM")], start=1):
        checks.append(Check(f"q-bell:n={n}", "TCAPM vs q-Bell at q=2", partial(_compare, expected, q_bell, n, 2)))
    for n in range(1, min(max_n, 3) + 1):
        checks.append(Check(f"classes:n={n}", "symmetry predicates vs pruned counts", partial(_symmetric_images, n)))
    if max_n >= 6:
        checks.append(
            Check(
                "TCAPM:DWBC1:n=6",
                "reported next to q-Bell(6, 2), no expectation",
                lambda: Outcome(expected=q_bell(6, 2), actual=count_symmetry("DWBC1", 6, SymmetryType.TCAPM)),
                informational=True,
            )
        )
    return checks


# yang-baxter


def yang_baxter_checks(max_n: int) -> t.List[Check]:
    return [
        Check(
            "kagome",
            "triangle relations and Yang-Baxter equations of the kagome weights",
            lambda: Outcome.from_report(verify_kagome(n_max=max_n)),
        ),
        Check(
            "negative-control",
            "perturbed weights must break the relations",
            lambda: Outcome.from_report(kagome_negative_control()),
            expect_failure=True,
        ),
    ]


# staggered


def _staggered(n: int, variant: StaggeredVariant) -> Outcome:
    check = count_staggered_6v(n, variant)
    return Outcome(expected=check.expected, actual=plain(check.staggered))


def staggered_checks(max_n: int) -> t.List[Check]:
    return [
        Check(
            f"staggered:{variant.value}:n={n}",
            f"2^(n²) times {variant.reference_kind.value} configurations",
            partial(_staggered, n, variant),
        )
        for n in range(1, max_n + 1)
        for variant in StaggeredVariant
    ]


# kasteleyn


def kasteleyn_checks(max_n: int) -> t.List[Check]:
    checks = []
    for n in range(1, max_n + 1):
        checks.append(
            Check(
                f"square:n={n}",
                "T(S_n) = 2^n b_n²",
                partial(_agree, lambda size=n: 2**size * triangle_count(size) ** 2, partial(kasteleyn_square, n)),
            )
        )
        checks.append(
            Check(f"half:n={n}", "b_n", partial(_agree, partial(triangle_count, n), partial(kasteleyn_half_product, n)))
        )
        if n <= 4:
            checks.append(
                Check(
                    f"matchings:n={n}",
                    "T(S_n) by profile transfer",
                    partial(_agree, partial(kasteleyn_square, n), lambda size=n: domino_matchings(square_region(size))),
                )
            )
    return checks


SUITES: t.Dict[SuiteType, t.Callable[[int], t.List[Check]]] = {
    SuiteType.AN6V: an6v_checks,
    SuiteType.Z20T4: z20t4_checks,
    SuiteType.REFINED: refined_checks,
    SuiteType.DWBC3: dwbc3_checks,
    SuiteType.PENTA: penta_checks,
    SuiteType.NABC: nabc_checks,
    SuiteType.APM_RULES: apm_rules_checks,
    SuiteType.SYMMETRY: symmetry_checks,
    SuiteType.YANG_BAXTER: yang_baxter_checks,
    SuiteType.STAGGERED: staggered_checks,
    SuiteType.KASTELEYN: kasteleyn_checks,
}


def build_checks(suite: SuiteType, max_n: int) -> t.Tuple[int, t.List[Check]]:
    bound = min(max_n, SUITE_CAPS[suite])
    checks = SUITES[suite](bound)
    logger.debug(f"Suite {suite.value}: {len(checks)} checks up to n={bound}")
    return bound, checks
