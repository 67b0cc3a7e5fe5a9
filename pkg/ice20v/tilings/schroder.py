"""
Single Schröder path counts.

Restricted paths go from (i, 0) to (0, j) with left (-1, 0), up (0, 1) and diagonal (-1, 1)
steps, the last step not being up. Strip paths go from (0, a) to (M, b) with steps (1, 1),
(1, -1) and (2, 0) and stay inside 0 <= y <= L.
"""

import threading
import typing as t
from functools import lru_cache


@lru_cache(maxsize=None)
def _schroder_table(i: int, j: int) -> t.Tuple[t.Tuple[t.Tuple[int, int], ...], ...]:
    """
    For every left distance a <= i and height b <= j: (paths ending with an up step, other paths).
    """
    table: t.List[t.List[t.Tuple[int, int]]] = [[(0, 0)] * (j + 1) for _ in range(i + 1)]
    for a in range(i + 1):
        for b in range(j + 1):
            if a == 0 and b == 0:
                table[a][b] = (0, 1)
                continue
            last_up = sum(table[a][b - 1]) if b > 0 else 0
            not_up = 0
            if a > 0:
                not_up += sum(table[a - 1][b])
                if b > 0:
                    not_up += sum(table[a - 1][b - 1])
            table[a][b] = (last_up, not_up)
    return tuple(tuple(row) for row in table)


def restricted_schroder(i: int, j: int) -> int:
    """
    S̃_{i,j}. The empty path counts once for (0, 0).
    """
    if i < 0 or j < 0:
        raise ValueError(f"Endpoints must be nonnegative, got ({i}, {j})")
    return _schroder_table(i, j)[i][j][1]


def schroder(i: int, j: int) -> int:
    """
    S_{i,j}, all Schröder paths from (i, 0) to (0, j).
    """
    if i < 0 or j < 0:
        raise ValueError(f"Endpoints must be nonnegative, got ({i}, {j})")
    return sum(_schroder_table(i, j)[i][j])


class StripSchroderTable:
    """
    S^{(L)}_{a,b}(M) for a fixed strip height, grown on demand per target height b.

    Values satisfy S(M) = S_{a,b}(M-2) + S_{a-1,b}(M-1) + S_{a+1,b}(M-1) with S(-1) = 0 and
    S_{a,b}(0) = δ_{a,b}, and vanish whenever a or b leaves [0, L].
    """

    def __init__(self, height: int):
        if height < 0:
            raise ValueError(f"Strip height must be nonnegative, got L={height}")
        self.height = height
        self._rows: t.Dict[int, t.List[t.List[int]]] = {}
        self._lock = threading.Lock()

    def _grow(self, b: int, length: int) -> t.List[t.List[int]]:
        with self._lock:
            rows = self._rows.setdefault(b, [[int(a == b) for a in range(self.height + 1)]])
            while len(rows) <= length:
                previous = rows[-1]
                before = rows[-2] if len(rows) >= 2 else [0] * (self.height + 1)
                row = []
                for a in range(self.height + 1):
                    value = before[a]
                    if a > 0:
                        value += previous[a - 1]
                    if a < self.height:
                        value += previous[a + 1]
                    row.append(value)
                rows.append(row)
            return rows

    def value(self, a: int, b: int, length: int) -> int:
        if length < 0 or not (0 <= a <= self.height and 0 <= b <= self.height):
            return 0
        return self._grow(b, length)[length][a]

    __call__ = value


@lru_cache(maxsize=None)
def strip_table(height: int) -> StripSchroderTable:
    return StripSchroderTable(height)


def strip_schroder(a: int, b: int, height: int, length: int) -> int:
    if height < 0 or length < 0:
        raise ValueError(f"Strip height and length must be nonnegative, got L={height}, M={length}")
    return strip_table(height).value(a, b, length)


def conjectured_nabc(a: int, b: int, c: int) -> t.Optional[int]:
    """
    Single-path values for the rectangle counts with c = 1 or a = 0; None elsewhere.
    """
    if min(a, b, c) < 0:
        raise ValueError(f"Rectangle parameters must be nonnegative, got a={a}, b={b}, c={c}")
    if c == 1:
        return strip_schroder(1, b, b + 1, 2 * a + b + 1)
    if a == 0:
        return strip_schroder(0, b, b, 2 * c + b)
    return None
