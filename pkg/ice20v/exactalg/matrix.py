import itertools
import logging
import typing as t

from ice20v.exactalg.ops import make_divider

logger = logging.getLogger(__name__)


class ExactMatrix:
    """
    Dense matrix over one exact scalar ring, stored row-major and never mutated.
    """

    __slots__ = ("n_rows", "n_cols", "entries")

    def __init__(self, n_rows: int, n_cols: int, entries: t.Sequence[t.Any]):
        if len(entries) != n_rows * n_cols:
            raise ValueError(f"Expected {n_rows * n_cols} entries for a {n_rows}x{n_cols} matrix, got {len(entries)}")
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows: t.Sequence[t.Sequence[t.Any]]) -> "ExactMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(row) != n_cols for row in rows):
            raise ValueError("Ragged rows")
        return cls(n_rows, n_cols, [value for row in rows for value in row])

    @classmethod
    def identity(cls, n: int, one: t.Any = 1, zero: t.Any = 0) -> "ExactMatrix":
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def from_function(cls, n_rows: int, n_cols: int, fn: t.Callable[[int, int], t.Any]) -> "ExactMatrix":
        return cls(n_rows, n_cols, [fn(i, j) for i in range(n_rows) for j in range(n_cols)])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, index: t.Tuple[int, int]) -> t.Any:
        i, j = index
        return self.entries[i * self.n_cols + j]

    def rows(self) -> t.List[t.List[t.Any]]:
        return [list(self.entries[i * self.n_cols : (i + 1) * self.n_cols]) for i in range(self.n_rows)]

    def column(self, j: int) -> t.List[t.Any]:
        return [self[i, j] for i in range(self.n_rows)]

    def map(self, fn: t.Callable[[t.Any], t.Any]) -> "ExactMatrix":
        return ExactMatrix(self.n_rows, self.n_cols, [fn(value) for value in self.entries])

    def submatrix(self, rows: t.Sequence[int], cols: t.Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def with_column(self, j: int, values: t.Sequence[t.Any]) -> "ExactMatrix":
        rows = self.rows()
        for i, value in enumerate(values):
            rows[i][j] = value
        return ExactMatrix.from_rows(rows)

    def scaled(self, factor: t.Any) -> "ExactMatrix":
        return self.map(lambda value: factor * value)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ValueError("Shape mismatch")
        return ExactMatrix(self.n_rows, self.n_cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            return (self.n_rows, self.n_cols) == (other.n_rows, other.n_cols) and all(
                a == b for a, b in zip(self.entries, other.entries)
            )
        if isinstance(other, (list, tuple)):
            return self == ExactMatrix.from_rows(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"ExactMatrix({self.rows()!r})"


def _require_square(matrix: ExactMatrix):
    if not matrix.is_square:
        raise ValueError(f"Determinant needs a square matrix, got {matrix.n_rows}x{matrix.n_cols}")


def det_exact(matrix: ExactMatrix) -> t.Any:
    """
    Determinant by Bareiss' fraction-free elimination.

    Every division is exact in an integral domain; for field elements the divisor is inverted once per step.
    """
    _require_square(matrix)
    n = matrix.n_rows
    if n == 0:
        return 1
    a = matrix.rows()
    sign = 1
    divide = make_divider(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return a[k][k] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            row, factor = a[i], a[i][k]
            for j in range(k + 1, n):
                row[j] = divide(row[j] * pivot - factor * a[k][j])
        divide = make_divider(pivot)
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def det_cofactor(matrix: ExactMatrix) -> t.Any:
    """
    Laplace expansion along the first row; the oracle for small matrices.
    """
    _require_square(matrix)
    n = matrix.n_rows
    if n == 0:
        return 1
    if n == 1:
        return matrix[0, 0]
    total: t.Any = 0
    for j in range(n):
        entry = matrix[0, j]
        if entry == 0:
            continue
        minor = matrix.submatrix(range(1, n), [c for c in range(n) if c != j])
        term = entry * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def sum_principal_minors(matrix: ExactMatrix) -> t.Any:
    """
    Σ_S det(M[S,S]) over all index subsets S, the empty one contributing 1.

    Equals det(I + M), which makes it the explicit Cauchy-Binet side of that identity.
    """
    _require_square(matrix)
    n = matrix.n_rows
    if n > 12:
        raise ValueError(f"Explicit subset enumeration is limited to n <= 12, got n={n}")
    total: t.Any = 1
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            total = total + det_exact(matrix.submatrix(subset, subset))
    return total
