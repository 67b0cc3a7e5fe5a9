import pytest

from ice20v.apm import (
    ApmMatrix,
    ApmType,
    check_sum_rules,
    config_from_apm,
    iter_asms,
    lift_asm,
    q_bell,
    q_binomial,
    rotate_half_turn,
    symmetry_class,
    to_apm,
    turning_profile,
    validate,
    violations,
)
from ice20v.exactalg import EisensteinElt
from ice20v.icemodel import BoundarySpec, SymmetryType, enumerate_configs
from ice20v.verify.tables import (
    EXAMPLE_APMS,
    EXAMPLE_TYPE4_COLUMN_SUMS,
    EXAMPLE_TYPE4_DIAGONAL_SUMS,
    EXAMPLE_TYPE4_ROW_SUMS,
)

OMEGA = EisensteinElt.omega()
OMEGA2 = EisensteinElt.omega2()


def example(kind: int) -> ApmMatrix:
    return ApmMatrix.from_values(EXAMPLE_APMS[kind])


def test_entry_codes():
    apm = example(4)
    assert apm.n == 6
    assert apm.to_codes() == EXAMPLE_APMS[4]
    assert apm.value(1, 1) == -OMEGA
    assert apm.value(1, 2) == OMEGA2
    assert apm.value(6, 1) == 1
    assert ApmMatrix.from_dict(apm.to_dict()) == apm


def test_entry_errors():
    with pytest.raises(ValueError):
        ApmMatrix.from_values([["x"]])
    with pytest.raises(ValueError):
        ApmMatrix.from_values([[2]])
    with pytest.raises(ValueError):
        ApmMatrix.from_triples([[(1, 1, 0)]])
    with pytest.raises(ValueError):
        ApmMatrix.from_dict({"n": 3, "entries": [["0", "0"], ["0", "0"]]})
    with pytest.raises(ValueError):
        ApmMatrix.from_dict({"rows": []})


@pytest.mark.parametrize("kind", [1, 2, 3, 4])
def test_examples_are_valid(kind):
    apm = example(kind)
    assert violations(apm, kind) == []
    assert validate(apm, ApmType(kind))
    assert check_sum_rules(apm, kind).passed


@pytest.mark.parametrize("kind", [1, 2, 3])
def test_sum_is_size(kind):
    assert example(kind).total() == 5


def test_type4_line_sums():
    apm = example(4)
    assert apm.total() == 0
    for i, multiple in enumerate(EXAMPLE_TYPE4_ROW_SUMS, start=1):
        assert sum(apm.row(i), EisensteinElt()) == multiple * OMEGA2
    for j, multiple in enumerate(EXAMPLE_TYPE4_COLUMN_SUMS, start=1):
        assert sum(apm.column(j), EisensteinElt()) == multiple * OMEGA
    for offset, value in zip(range(-5, 6), EXAMPLE_TYPE4_DIAGONAL_SUMS):
        assert sum((apm.value(i, j) for i, j in apm.diagonal_cells(offset)), EisensteinElt()) == value


def test_sum_rules_report_failures():
    broken = ApmMatrix.from_values([["1", "0"], ["0", "0"]])
    report = check_sum_rules(broken, 1)
    assert not report.passed
    assert [finding.name for finding in report.failures()] == ["total"]


def test_violations_name_lines():
    apm = ApmMatrix.from_values([["1", "0"], ["0", "0"]])
    found = violations(apm, 1)
    assert "row 2" in found
    assert "column 2" in found
    assert "row 1" not in found


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_zero_matrix_is_type4_only(n):
    zero = ApmMatrix.zero(n)
    assert [validate(zero, kind) for kind in (1, 2, 3, 4)] == [False, False, False, True]


def test_half_turn_carries_type1_to_type2():
    rotated = rotate_half_turn(example(1))
    assert rotated.to_codes() == EXAMPLE_APMS[2]
    assert validate(rotated, 2)
    assert rotate_half_turn(rotated) == example(1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_half_turn_on_all_configurations(n):
    first = sorted(rotate_half_turn(to_apm(config)).to_codes() for config in enumerate_configs("DWBC1", n))
    second = sorted(to_apm(config).to_codes() for config in enumerate_configs("DWBC2", n))
    assert first == second


@pytest.mark.parametrize("kind", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_configurations_give_valid_matrices(kind, n):
    spec = BoundarySpec.dwbc(f"DWBC{kind}", n)
    images = []
    for config in enumerate_configs(spec):
        apm = to_apm(config)
        assert validate(apm, kind)
        assert check_sum_rules(apm, kind).passed
        assert config_from_apm(apm, spec) == config
        images.append(str(apm))
    assert len(set(images)) == len(images)


@pytest.mark.parametrize("kind", [1, 2, 3, 4])
def test_example_round_trip_through_configuration(kind):
    apm = example(kind)
    config = config_from_apm(apm, BoundarySpec.dwbc(f"DWBC{kind}", apm.n))
    assert config.is_valid()
    assert to_apm(config) == apm


def test_matrix_must_fit_boundary():
    with pytest.raises(ValueError):
        config_from_apm(example(1), BoundarySpec.dwbc("DWBC1", 4))
    with pytest.raises(ValueError):
        config_from_apm(example(4), BoundarySpec.dwbc("DWBC3", 6))


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 7), (4, 42)])
def test_iter_asms(n, expected):
    asms = list(iter_asms(n))
    assert len(asms) == expected
    for asm in asms:
        assert all(sum(row) == 1 for row in asm)
        assert all(sum(column) == 1 for column in zip(*asm))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lifted_asms_are_phase_matrices(n):
    """
    Every ASM, lifted to phase triples, is realized under the first three boundaries.
    """
    for asm in iter_asms(n):
        apm = lift_asm(asm)
        for kind in (1, 2, 3):
            assert validate(apm, kind)
            config = config_from_apm(apm, BoundarySpec.dwbc(f"DWBC{kind}", n))
            assert to_apm(config) == apm


def test_lift_rejects_other_entries():
    with pytest.raises(ValueError):
        lift_asm([[2]])


def test_turning_weights_match_entries():
    apm = example(1)
    n = apm.n
    config = config_from_apm(apm, BoundarySpec.dwbc("DWBC1", n))
    profile = turning_profile(config)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert profile.vertex_sums[j, n + 1 - i] == apm.value(i, j)
    assert sum(profile.totals(), EisensteinElt()) == apm.total()
    for path in profile.paths:
        assert path.total == sum(path.steps, EisensteinElt())


def test_hv_paths_turn_by_one():
    identity = [[int(i == j) for j in range(3)] for i in range(3)]
    config = config_from_apm(lift_asm(identity), BoundarySpec.dwbc("DWBC3", 3))
    profile = turning_profile(config)
    assert len(profile.paths) == 3
    assert all(path.is_hv for path in profile.paths)
    assert profile.totals() == [1, 1, 1]


def test_symmetry_class():
    identity = lift_asm([[int(i == j) for j in range(3)] for i in range(3)])
    assert symmetry_class(identity) == {SymmetryType.SAPM, SymmetryType.TCAPM}
    assert SymmetryType.HTAPM in symmetry_class(ApmMatrix.zero(2))


def test_q_binomial():
    assert [q_binomial(4, k, 1) for k in range(5)] == [1, 4, 6, 4, 1]
    assert q_binomial(4, 2, 2) == 35
    assert q_binomial(3, 5, 2) == 0


def test_q_bell():
    assert [q_bell(n, 1) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert [q_bell(n, 2) for n in range(1, 6)] == [1, 2, 6, 28, 204]
    with pytest.raises(ValueError):
        q_bell(-1, 2)
