"""
Ring-generic helpers shared by the linear algebra and the series machinery.
"""

import operator
import typing as t
from fractions import Fraction

from ice20v.exactalg.cyclotomic import Cyclotomic2k, cyclotomic_inverse
from ice20v.exactalg.eisenstein import EisensteinElt
from ice20v.exactalg.laurent import LaurentMulti
from ice20v.exactalg.poly import PolyUni

BigRational = Fraction

OPERATIONS: t.Dict[str, t.Callable[..., t.Any]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "eq": operator.eq,
}


def ring_of(x: t.Any) -> str:
    """
    Name of the ring a scalar lives in; integers count as rationals.
    """
    if isinstance(x, bool):
        raise TypeError("Booleans are not ring elements")
    if isinstance(x, (int, Fraction)):
        return "QQ"
    if isinstance(x, Cyclotomic2k):
        return f"QQ(zeta_{1 << (x.k + 1)})"
    if isinstance(x, EisensteinElt):
        return "ZZ[omega]"
    if isinstance(x, PolyUni):
        base = {ring_of(c) for c in x.coeffs} or {"QQ"}
        return f"{'|'.join(sorted(base))}[{x.var}]"
    if isinstance(x, LaurentMulti):
        return f"laurent[{','.join(x.variables)}]"
    raise TypeError(f"Unsupported scalar type: {type(x).__name__}")


def ring_arith(a: t.Any, b: t.Any, op: str) -> t.Any:
    """
    Exact arithmetic on two scalars of the same ring. `neg` ignores its second operand.
    """
    if op == "neg":
        return -a
    if op not in OPERATIONS:
        raise ValueError(f"Unknown ring operation: {op}")
    ring_a, ring_b = ring_of(a), ring_of(b)
    if ring_a != ring_b:
        raise TypeError(f"Ring mismatch: {ring_a} vs {ring_b}")
    return OPERATIONS[op](a, b)


def is_unit(x: t.Any) -> bool:
    if isinstance(x, int):
        return x in (1, -1)
    if isinstance(x, Fraction):
        return x != 0
    if isinstance(x, Cyclotomic2k):
        return not x.is_zero()
    if isinstance(x, EisensteinElt):
        return x in {EisensteinElt(1, 0), EisensteinElt(-1, 0), EisensteinElt(0, 1), EisensteinElt(0, -1),
                     EisensteinElt(1, 1), EisensteinElt(-1, -1)}
    if isinstance(x, PolyUni):
        return x.degree == 0 and is_unit(x.coeffs[0])
    return False


def exact_div(a: t.Any, b: t.Any) -> t.Any:
    """
    Quotient a / b, which must exist in the ring of the operands.
    """
    if isinstance(a, int) and isinstance(b, int):
        quotient, remainder = divmod(a, b)
        if remainder:
            raise ArithmeticError(f"Inexact integer division {a} / {b}")
        return quotient
    if isinstance(a, PolyUni):
        return a.exact_div(b)
    if isinstance(b, PolyUni):
        return PolyUni.constant(a, var=b.var).exact_div(b)
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        value = Fraction(a) / Fraction(b)
        return value.numerator if value.denominator == 1 else value
    return a / b


def make_divider(divisor: t.Any) -> t.Callable[[t.Any], t.Any]:
    """
    Division by a fixed element; field elements get inverted once.
    """
    if isinstance(divisor, Cyclotomic2k):
        inverse = cyclotomic_inverse(divisor)
        return lambda value: value * inverse
    return lambda value: exact_div(value, divisor)
