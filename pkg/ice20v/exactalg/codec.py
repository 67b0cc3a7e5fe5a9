"""
JSON encoding of exact scalars.

- integers and rationals: decimal strings, `"5"` or `"-3/7"`
- cyclotomic elements: `{"k": k, "coeffs": [...]}`
- polynomials: arrays of encoded coefficients, constant term first
- Eisenstein integers: `{"a": "..", "b": ".."}`
"""

import typing as t
from fractions import Fraction

from ice20v.exactalg.cyclotomic import Cyclotomic2k
from ice20v.exactalg.eisenstein import EisensteinElt
from ice20v.exactalg.matrix import ExactMatrix
from ice20v.exactalg.poly import PolyUni


def _encode_rational(value: t.Union[int, Fraction]) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _decode_rational(text: str) -> t.Union[int, Fraction]:
    value = Fraction(text)
    return value.numerator if value.denominator == 1 else value


def encode_scalar(value: t.Any) -> t.Any:
    if isinstance(value, bool):
        raise TypeError("Booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return _encode_rational(value)
    if isinstance(value, Cyclotomic2k):
        return {"k": value.k, "coeffs": [_encode_rational(c) for c in value.coeffs]}
    if isinstance(value, EisensteinElt):
        return {"a": str(value.a), "b": str(value.b)}
    if isinstance(value, PolyUni):
        return [encode_scalar(c) for c in value.coeffs]
    raise TypeError(f"No JSON encoding for {type(value).__name__}")


def decode_scalar(data: t.Any, var: str = "tau") -> t.Any:
    if isinstance(data, str):
        return _decode_rational(data)
    if isinstance(data, list):
        return PolyUni([decode_scalar(item, var=var) for item in data], var=var)
    if isinstance(data, dict) and "k" in data:
        return Cyclotomic2k(int(data["k"]), [Fraction(c) for c in data["coeffs"]])
    if isinstance(data, dict) and "a" in data:
        return EisensteinElt(int(data["a"]), int(data["b"]))
    raise ValueError(f"Malformed scalar encoding: {data!r}")


def encode_matrix(matrix: ExactMatrix) -> t.List[t.List[t.Any]]:
    return [[encode_scalar(value) for value in row] for row in matrix.rows()]


def decode_matrix(rows: t.Sequence[t.Sequence[t.Any]], var: str = "tau") -> ExactMatrix:
    return ExactMatrix.from_rows([[decode_scalar(value, var=var) for value in row] for row in rows])
