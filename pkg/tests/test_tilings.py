import mpmath
import pytest

from ice20v.icemodel import count_pentagon, count_rect_dwbc4
from ice20v.tilings import (
    Region,
    StripSchroderTable,
    conjectured_nabc,
    domino_matchings,
    extended_triangle_count,
    extended_triangle_matrix,
    free_energy_trend,
    iter_tilings,
    kasteleyn,
    kasteleyn_half_product,
    kasteleyn_square,
    restricted_schroder,
    square_region,
    strip_schroder,
    t4_by_minor_sum,
    t4_count,
    t4_refined,
    triangle_count,
    triangle_count_forms,
    triangle_region,
)
from ice20v.tilings.schroder import schroder

A_SEQUENCE = [1, 3, 23, 433, 19705, 2151843, 561696335, 349667866305]
B_SEQUENCE = [1, 3, 29, 901, 89893, 28793575]


def test_schroder_paths():
    assert schroder(1, 1) == 3
    assert restricted_schroder(1, 1) == 2
    assert restricted_schroder(0, 0) == 1
    assert restricted_schroder(0, 3) == 0
    assert [restricted_schroder(i, 1) for i in range(1, 6)] == [2, 4, 6, 8, 10]
    assert [restricted_schroder(1, j) for j in range(1, 6)] == [2, 2, 2, 2, 2]
    with pytest.raises(ValueError):
        restricted_schroder(-1, 2)


def test_strip_paths():
    assert strip_schroder(0, 0, 0, 2) == 1
    assert strip_schroder(0, 0, 1, 2) == 2
    assert strip_schroder(1, 0, 1, 3) == 3
    assert strip_schroder(0, 0, 1, 1) == 0
    assert strip_schroder(3, 0, 2, 4) == 0
    assert strip_schroder(2, 2, 3, 0) == 1
    assert strip_schroder(2, 3, 3, 3) == 4
    assert strip_schroder(0, 1, 1, 7) == 21
    with pytest.raises(ValueError):
        strip_schroder(0, 0, -1, 2)


@pytest.mark.parametrize("height", [1, 2, 3])
def test_strip_paths_reflect(height):
    for a in range(height + 1):
        for b in range(height + 1):
            for length in range(7):
                assert strip_schroder(a, b, height, length) == strip_schroder(height - a, height - b, height, length)


def test_strip_table_recursion():
    table = StripSchroderTable(3)
    for length in range(2, 9):
        for a in range(4):
            expected = table(a, 1, length - 2) + table(a - 1, 1, length - 1) + table(a + 1, 1, length - 1)
            assert table(a, 1, length) == expected


@pytest.mark.parametrize("a,b,c", [(0, 0, 1), (1, 0, 1), (2, 1, 1), (3, 2, 1), (0, 2, 2), (0, 3, 2), (0, 1, 3)])
def test_single_path_rectangle_values(a, b, c):
    assert conjectured_nabc(a, b, c) == count_rect_dwbc4(a, b, c)


def test_single_path_rectangle_values_undefined():
    assert conjectured_nabc(1, 1, 2) is None
    with pytest.raises(ValueError):
        conjectured_nabc(0, -1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_t4_count(n):
    assert t4_count(n) == A_SEQUENCE[n - 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_t4_by_minor_sum(n):
    assert t4_by_minor_sum(n) == A_SEQUENCE[n - 1]


@pytest.mark.slow
def test_t4_count_larger():
    assert [t4_count(n) for n in range(6, 9)] == A_SEQUENCE[5:8]


def test_t4_refined():
    assert list(t4_refined(3, 1).coeffs) == [3, 14, 6]
    assert list(t4_refined(4, 2).coeffs) == [122, 182, 106, 23]
    assert t4_refined(4, 1)(1) == 433


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_triangle_count(n):
    even, odd = triangle_count_forms(n)
    assert even == odd == B_SEQUENCE[n - 1]
    assert triangle_count(n) == B_SEQUENCE[n - 1]


def test_triangle_count_invalid():
    with pytest.raises(ValueError):
        triangle_count(0)


@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)])
def test_extended_triangle_count(n, k):
    assert extended_triangle_count(n, k) == count_pentagon(n, k)


def test_extended_triangle_without_raise():
    assert extended_triangle_count(3, 0) == 29
    assert extended_triangle_matrix(3, 2).n_rows == 3
    with pytest.raises(ValueError):
        extended_triangle_matrix(0, 1)
    with pytest.raises(ValueError):
        extended_triangle_matrix(2, -1)


def test_free_energy_trend():
    report = free_energy_trend(A_SEQUENCE)
    assert report.passed
    assert report.increasing
    assert 0.41 < report.last < report.densities[-1] + 1e-12
    assert not free_energy_trend(A_SEQUENCE[:4], bound=0.1).bounded
    assert not free_energy_trend([1, 100, 101]).increasing


@pytest.mark.parametrize("n,expected", [(1, 2), (2, 36), (3, 6728), (4, 12988816)])
def test_kasteleyn_square(n, expected):
    assert kasteleyn_square(n) == expected
    assert domino_matchings(square_region(n)) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_kasteleyn_half_product(n):
    assert kasteleyn_half_product(n) == B_SEQUENCE[n - 1]
    assert kasteleyn_square(n) == 2**n * B_SEQUENCE[n - 1] ** 2


def test_kasteleyn_size_limit():
    with pytest.raises(ValueError):
        kasteleyn_square(0)
    with pytest.raises(ValueError):
        kasteleyn_half_product(13)


def test_kasteleyn_rejects_inexact_product(mocker):
    mocker.patch.object(kasteleyn, "_factor", return_value=mpmath.mpf("1.25"))
    with pytest.raises(ArithmeticError, match="rounding residue") as excinfo:
        kasteleyn_square(2)
    assert str(excinfo.value).endswith(f"exceeds {mpmath.nstr(kasteleyn.RESIDUE_TOLERANCE, 3)}")
    with pytest.raises(ArithmeticError):
        kasteleyn_half_product(3)


def test_kasteleyn_accepts_small_residue(mocker):
    mocker.patch.object(kasteleyn, "_factor", return_value=mpmath.mpf(2) + mpmath.mpf("1e-9"))
    assert kasteleyn_square(1) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_triangle_region_tilings(n):
    assert domino_matchings(triangle_region(n)) == B_SEQUENCE[n - 1]


def test_triangle_region_shape():
    region = triangle_region(2)
    assert region.to_bitmap() == "###\n###\n#..\n#.."
    assert len(region) == 8
    assert region.color_balance() == 0


def test_iter_tilings():
    tilings = list(iter_tilings(triangle_region(2)))
    assert len(tilings) == 3
    for tiling in tilings:
        assert len(tiling) == 4
        covered = {cell for domino in tiling for cell in domino}
        assert covered == triangle_region(2).cells
    assert len(list(iter_tilings(square_region(2)))) == 36


def test_matchings_of_unbalanced_regions():
    assert domino_matchings(Region.from_bitmap("###")) == 0
    assert domino_matchings(Region.from_bitmap("#.\n.#")) == 0
    assert domino_matchings(Region.from_cells([])) == 1
    assert list(iter_tilings(Region.from_bitmap("###"))) == []


def test_matchings_width_limit():
    with pytest.raises(ValueError):
        domino_matchings(Region.from_cells((0, col) for col in range(34)))


def test_region_dict():
    region = Region.from_bitmap("##\n##")
    assert region.to_dict() == {"region": ["##", "##"]}
    assert Region.from_dict(region.to_dict()) == region
    assert Region.from_dict({"region": "##\n##"}) == region
    assert Region.from_dict({"cells": [[0, 0], [0, 1], [1, 0], [1, 1]]}) == region
    with pytest.raises(ValueError):
        Region.from_dict({"tiles": []})
    with pytest.raises(ValueError):
        Region.from_dict({"cells": [[0]]})
    with pytest.raises(ValueError):
        Region.from_bitmap("#x")
