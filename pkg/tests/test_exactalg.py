from fractions import Fraction

import pytest

from ice20v.exactalg import (
    Cyclotomic2k,
    EisensteinElt,
    ExactMatrix,
    LaurentMulti,
    PolyUni,
    cyclotomic_inverse,
    decode_matrix,
    decode_scalar,
    det_cofactor,
    det_exact,
    encode_matrix,
    encode_scalar,
    exact_div,
    is_unit,
    laurent_is_zero,
    ring_arith,
    ring_of,
    sum_principal_minors,
)


@pytest.mark.parametrize(
    "rows,expected",
    [
        ([[2, 1, 3], [0, 4, 1], [5, 2, 0]], -59),
        ([[0, 1], [1, 0]], -1),
        ([[1, 2], [2, 4]], 0),
        ([[Fraction(1, 2), 1], [1, 1]], Fraction(-1, 2)),
        ([[7]], 7),
    ],
)
def test_det_exact_matches_cofactor(rows, expected):
    matrix = ExactMatrix.from_rows(rows)
    assert det_exact(matrix) == expected
    assert det_cofactor(matrix) == expected


def test_det_empty_matrix():
    assert det_exact(ExactMatrix(0, 0, [])) == 1


def test_det_non_square():
    with pytest.raises(ValueError):
        det_exact(ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_det_over_polynomials():
    tau = PolyUni([0, 1])
    matrix = ExactMatrix.from_rows([[1 + tau, tau], [1, 2]])
    assert det_exact(matrix) == PolyUni([2, 1])


def test_det_over_gaussian_rationals():
    i = Cyclotomic2k.imaginary_unit(1)
    matrix = ExactMatrix.from_rows([[i, 1], [1, i]])
    assert det_exact(matrix) == -2


def test_sum_principal_minors_is_det_of_shift():
    matrix = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert sum_principal_minors(matrix) == 4
    assert det_exact(matrix + ExactMatrix.identity(2)) == 4


def test_sum_principal_minors_size_limit():
    with pytest.raises(ValueError):
        sum_principal_minors(ExactMatrix.identity(13))


def test_matrix_helpers():
    matrix = ExactMatrix.from_function(3, 3, lambda i, j: 3 * i + j)
    assert matrix.rows() == [[0, 1, 2], [3, 4, 5], [6, 7, 8]]
    assert matrix.column(1) == [1, 4, 7]
    assert matrix.submatrix([0, 2], [1, 2]) == [[1, 2], [7, 8]]
    assert matrix.with_column(0, [9, 9, 9]).column(0) == [9, 9, 9]
    assert matrix.map(lambda value: 2 * value)[2, 2] == 16
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([[1, 2], [3]])


def test_cyclotomic_constants():
    i = Cyclotomic2k.imaginary_unit(1)
    assert i * i == -1
    assert Cyclotomic2k.sqrt2(2) ** 2 == 2
    assert Cyclotomic2k.sqrt2(3) ** 2 == 2
    assert Cyclotomic2k.zeta_power(2, 4) == -1
    assert Cyclotomic2k.zeta_power(2, 8) == 1
    assert Cyclotomic2k.zeta_power(3, -1) * Cyclotomic2k.zeta_power(3, 1) == 1
    assert abs(Cyclotomic2k.sqrt2(2).to_complex() - 2**0.5) < 1e-12


def test_cyclotomic_sqrt2_needs_eighth_roots():
    with pytest.raises(ValueError):
        Cyclotomic2k.sqrt2(1)


def test_cyclotomic_inverse():
    x = Cyclotomic2k.gaussian(1, 1)
    assert x * x.inverse() == 1
    assert x ** -2 == Cyclotomic2k.gaussian(0, Fraction(-1, 2))
    y = Cyclotomic2k.sqrt2(3) + Cyclotomic2k.zeta_power(3, 1)
    assert y * y.inverse() == 1
    assert cyclotomic_inverse(y) == y.inverse()


def test_cyclotomic_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic2k.zero(2).inverse()
    with pytest.raises(ZeroDivisionError):
        Cyclotomic2k.one(2) / 0


def test_cyclotomic_embedding():
    assert Cyclotomic2k.imaginary_unit(1).embed(3) == Cyclotomic2k.imaginary_unit(3)
    assert Cyclotomic2k.sqrt2(2).embed(3) == Cyclotomic2k.sqrt2(3)
    with pytest.raises(ValueError):
        Cyclotomic2k.one(3).embed(2)


def test_cyclotomic_ring_mismatch():
    with pytest.raises(TypeError):
        Cyclotomic2k.one(1) + Cyclotomic2k.one(2)
    assert Cyclotomic2k.one(1) != Cyclotomic2k.one(2)


def test_cyclotomic_rational_conversion():
    assert Cyclotomic2k.from_rational(2, 5).to_integer() == 5
    assert Cyclotomic2k.from_rational(2, Fraction(1, 2)).to_fraction() == Fraction(1, 2)
    with pytest.raises(ValueError):
        Cyclotomic2k.from_rational(2, Fraction(1, 2)).to_integer()
    with pytest.raises(ValueError):
        Cyclotomic2k.sqrt2(2).to_fraction()
    with pytest.raises(AttributeError):
        Cyclotomic2k.one(1).k = 2


def test_eisenstein_arithmetic():
    omega, omega2 = EisensteinElt.omega(), EisensteinElt.omega2()
    assert omega * omega == omega2
    assert 1 + omega + omega2 == 0
    assert omega.conjugate() == omega2
    assert EisensteinElt(3).in_integers()
    assert (3 * omega).in_omega_integers()
    assert (-2 * omega2).in_omega2_integers()
    assert not omega.in_omega2_integers()
    assert str(EisensteinElt(2, -1)) == "2-1ω"
    assert str(EisensteinElt(0, 4)) == "4ω"


def test_polynomial_arithmetic():
    tau = PolyUni([0, 1])
    square = (1 + tau) ** 2
    assert square.coeffs == (1, 2, 1)
    assert square(2) == 9
    assert square.evaluate(tau - 1) == tau**2
    assert square / (1 + tau) == 1 + tau
    assert PolyUni([0, 0]).is_zero()
    with pytest.raises(ArithmeticError):
        square.exact_div(PolyUni([1, 0, 0, 1]))
    with pytest.raises(TypeError):
        PolyUni([1, 1], var="tau") + PolyUni([1, 1], var="sigma")


def test_polynomial_format():
    assert str(PolyUni([122, 182, 106, 23])) == "122+182τ+106τ²+23τ³"
    assert str(PolyUni([0, -1, 1])) == "-τ+τ²"
    assert str(PolyUni([])) == "0"


def test_laurent_polynomials():
    names = ("q", "z")
    q = LaurentMulti.generator(names, "q")
    z = LaurentMulti.generator(names, "z")
    expression = (q + z) * (q - z) - q**2 + z**2
    assert laurent_is_zero(expression)
    assert q * q**-1 == 1
    assert (q**2 * z**-1).evaluate({"q": 2, "z": 4}) == 1
    with pytest.raises(ArithmeticError):
        (q + 1) ** -1
    with pytest.raises(ValueError):
        q.evaluate({"z": 1})


def test_laurent_exponent_range():
    with pytest.raises(OverflowError):
        LaurentMulti.generator(("q",), "q", power=2**31)
    big = LaurentMulti.generator(("q",), "q", power=2**30)
    with pytest.raises(OverflowError):
        big * big


def test_laurent_ring_mismatch():
    with pytest.raises(TypeError):
        LaurentMulti.generator(("q",), "q") + LaurentMulti.generator(("t",), "t")


def test_ring_helpers():
    assert ring_of(3) == "QQ"
    assert ring_of(Cyclotomic2k.one(2)) == "QQ(zeta_8)"
    assert ring_of(EisensteinElt(1)) == "ZZ[omega]"
    assert ring_arith(2, Fraction(1, 2), "mul") == 1
    with pytest.raises(TypeError):
        ring_arith(2, Cyclotomic2k.one(1), "add")
    with pytest.raises(TypeError):
        ring_of(True)
    assert exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        exact_div(7, 2)
    assert is_unit(-1)
    assert is_unit(EisensteinElt.omega())
    assert not is_unit(2)


def test_codec():
    assert encode_scalar(5) == "5"
    assert encode_scalar(Fraction(-3, 7)) == "-3/7"
    assert decode_scalar("-3/7") == Fraction(-3, 7)
    root = Cyclotomic2k.sqrt2(2)
    assert decode_scalar(encode_scalar(root)) == root
    poly = PolyUni([1, Fraction(1, 2)])
    assert decode_scalar(encode_scalar(poly)) == poly
    assert decode_scalar(encode_scalar(EisensteinElt(2, -1))) == EisensteinElt(2, -1)
    matrix = ExactMatrix.from_rows([[1, 2], [3, Fraction(1, 4)]])
    assert decode_matrix(encode_matrix(matrix)) == matrix
    with pytest.raises(TypeError):
        encode_scalar(True)
    with pytest.raises(ValueError):
        decode_scalar({"x": 1})
