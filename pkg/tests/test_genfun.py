from fractions import Fraction

import pytest

from ice20v.exactalg import Cyclotomic2k, det_exact
from ice20v.genfun import (
    BivariateRationalGF,
    build_ik_absorbed_matrix,
    build_ik_matrix,
    build_ik_refined_matrix,
    build_refined_t4_matrix,
    build_refined_t4_matrix_second_form,
    build_t4_matrix,
    check_remarkable_identity,
    gf_coeff_table,
    restricted_schroder_gf,
    schroder_kernel,
)
from ice20v.genfun.series import ONE, R, S
from ice20v.icemodel import count_6v
from ice20v.tilings import restricted_schroder


def test_schroder_kernel_gives_delannoy_numbers():
    table = gf_coeff_table(schroder_kernel(), 3, 3)
    assert table[0, 0] == 1
    assert table[1, 1] == 3
    assert table[2, 1] == 5
    assert table[2, 2] == 13
    assert table[3, 3] == 63


def test_restricted_kernel_matches_path_counts():
    table = gf_coeff_table(restricted_schroder_gf(), 6, 5)
    for i in range(7):
        for j in range(6):
            assert table[i, j] == restricted_schroder(i, j + 1)
    assert table.column(0) == [2 * i for i in range(7)]


def test_coefficient_window():
    table = gf_coeff_table(schroder_kernel(), 2, 2)
    with pytest.raises(IndexError):
        table[3, 0]
    with pytest.raises(ValueError):
        gf_coeff_table(schroder_kernel(), -1, 2)


def test_denominator_must_be_invertible():
    with pytest.raises(ValueError):
        BivariateRationalGF(ONE, R + S)


def test_t4_matrix():
    matrix = build_t4_matrix(3)
    assert matrix.rows() == [[1, 0, 0], [2, 3, 2], [4, 8, 13]]
    assert det_exact(matrix) == 23


def test_t4_matrix_with_path_weight():
    """
    θ = 0 leaves the identity.
    """
    assert det_exact(build_t4_matrix(4, 0)) == 1
    assert build_t4_matrix(2, 2).rows() == [[1, 0], [4, 5]]
    assert det_exact(build_t4_matrix(2, 2)) == 5


@pytest.mark.parametrize("kind,expected", [(1, [1, 2]), (2, [2, 1])])
def test_refined_matrix_n2(kind, expected):
    assert list(det_exact(build_refined_t4_matrix(2, kind)).coeffs) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("kind", [1, 2])
def test_refined_second_form_agrees(n, kind):
    assert det_exact(build_refined_t4_matrix_second_form(n, kind)) == det_exact(build_refined_t4_matrix(n, kind))


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 23), (4, 433)])
def test_ik_determinant(n, expected):
    assert build_ik_matrix(n).integer_value() == expected
    assert det_exact(build_ik_absorbed_matrix(n)) == expected


def test_ik_invalid_size():
    with pytest.raises(ValueError):
        build_ik_matrix(0)
    with pytest.raises(ValueError):
        build_ik_absorbed_matrix(0)


@pytest.mark.parametrize("v", [Fraction(2), Fraction(1, 3)])
def test_ik_refined_matches_deformed_six_vertex(v):
    u = v * v
    i = Cyclotomic2k.imaginary_unit(3)
    one = Cyclotomic2k.one(3)
    root = Cyclotomic2k.sqrt2(3)
    deformed = ((u + i) * (1 - i) * Fraction(1, 2), root * (1 + u) * Fraction(1, 2), one * v)
    assert build_ik_refined_matrix(3, v).value() == count_6v(3, (one, root, one), last_column=deformed)


def test_ik_refined_rejects_degenerate_points():
    with pytest.raises(ValueError):
        build_ik_refined_matrix(2, 0)
    with pytest.raises(ValueError):
        build_ik_refined_matrix(2, 1)
    with pytest.raises(ValueError):
        build_ik_refined_matrix(2, -1)


def test_remarkable_identity():
    assert check_remarkable_identity(order=6) is True
