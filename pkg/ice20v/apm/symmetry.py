import typing as t
from functools import lru_cache

from ice20v.apm.model import ApmMatrix
from ice20v.icemodel.symmetry import SymmetryType


def _conjugate_at(apm: ApmMatrix, i: int, j: int):
    return apm.value(i, j).conjugate()


def is_sapm(apm: ApmMatrix) -> bool:
    """
    A*_{n+1-j,n+1-i} = A_{i,j}.
    """
    n = apm.n
    return all(
        _conjugate_at(apm, n + 1 - j, n + 1 - i) == apm.value(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
    )


def is_tcapm(apm: ApmMatrix) -> bool:
    """
    A*_{j,i} = A_{i,j}.
    """
    n = apm.n
    return all(_conjugate_at(apm, j, i) == apm.value(i, j) for i in range(1, n + 1) for j in range(1, n + 1))


def is_htapm(apm: ApmMatrix) -> bool:
    """
    A_{n+1-i,n+1-j} = -A_{i,j}.
    """
    n = apm.n
    return all(apm.value(n + 1 - i, n + 1 - j) == -apm.value(i, j) for i in range(1, n + 1) for j in range(1, n + 1))


PREDICATES: t.Dict[SymmetryType, t.Callable[[ApmMatrix], bool]] = {
    SymmetryType.SAPM: is_sapm,
    SymmetryType.TCAPM: is_tcapm,
    SymmetryType.HTAPM: is_htapm,
}


def symmetry_class(apm: ApmMatrix) -> t.Set[SymmetryType]:
    return {kind for kind, predicate in PREDICATES.items() if predicate(apm)}


def rotate_half_turn(apm: ApmMatrix) -> ApmMatrix:
    """
    A'_{n+1-i,n+1-j} = A_{i,j}, carrying type 1 matrices onto type 2 matrices and back.
    """
    return ApmMatrix(n=apm.n, triples=tuple(tuple(reversed(row)) for row in reversed(apm.triples)))


def q_binomial(n: int, k: int, q: int) -> int:
    """
    Gaussian binomial coefficient, built from Pascal's rule C(n,k) = C(n-1,k-1) + q^k·C(n-1,k).
    """
    if k < 0 or k > n:
        return 0
    row = [1]
    for m in range(1, n + 1):
        row = [1] + [row[j - 1] + q**j * row[j] for j in range(1, m)] + [1]
    return row[k]


@lru_cache(maxsize=None)
def q_bell(n: int, q: int) -> int:
    """
    B_0 = 1 and B_{m+1} = Σ_k C(m,k)_q B_k.
    """
    if n < 0:
        raise ValueError(f"q-Bell numbers need n >= 0, got n={n}")
    if n == 0:
        return 1
    m = n - 1
    return sum(q_binomial(m, k, q) * q_bell(k, q) for k in range(m + 1))
