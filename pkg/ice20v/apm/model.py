"""
Alternating phase matrices.

Entry (i, j), 1-based with i counted from the top, describes the vertex x = j, y = n+1-i.
The triple (h, v, d) records per direction whether the vertex transmits (0) or reflects,
+1 when the arrows of that direction point inwards and -1 otherwise.
"""

import itertools
import typing as t
from dataclasses import dataclass

from ice20v.exactalg.eisenstein import EisensteinElt
from ice20v.icemodel.model import BoundarySpec, LatticeConfig, VertexEnvironment

Triple = t.Tuple[int, int, int]

ZERO_TRIPLE: Triple = (0, 0, 0)

# Non-zero triples of a valid vertex and their phases -ω·h + ω²·v.
TRIPLES: t.Tuple[Triple, ...] = ((1, -1, 0), (-1, 1, 0), (1, 0, -1), (-1, 0, 1), (0, -1, 1), (0, 1, -1))

VALUE_CODES: t.Dict[EisensteinElt, str] = {
    EisensteinElt(0, 0): "0",
    EisensteinElt(1, 0): "1",
    EisensteinElt(-1, 0): "-1",
    EisensteinElt(0, 1): "w",
    EisensteinElt(0, -1): "-w",
    EisensteinElt(-1, -1): "w2",
    EisensteinElt(1, 1): "-w2",
}
CODE_VALUES: t.Dict[str, EisensteinElt] = {code: value for value, code in VALUE_CODES.items()}


def triple_value(triple: Triple) -> EisensteinElt:
    h, v, d = triple
    if h + v + d != 0 or not all(entry in (-1, 0, 1) for entry in triple):
        raise ValueError(f"Not a vertex triple: {triple}")
    return EisensteinElt(-v, d)


def value_triple(value: EisensteinElt) -> Triple:
    """
    Inverse of `triple_value`: v = -a, d = b and h = -v-d for the value a + bω.
    """
    if value not in VALUE_CODES:
        raise ValueError(f"Not an entry of an alternating phase matrix: {value}")
    v, d = -value.a, value.b
    return -v - d, v, d


@dataclass(frozen=True)
class ApmMatrix:
    n: int
    triples: t.Tuple[t.Tuple[Triple, ...], ...]

    def __post_init__(self):
        if len(self.triples) != self.n or any(len(row) != self.n for row in self.triples):
            raise ValueError(f"Expected {self.n}x{self.n} triples")
        for row in self.triples:
            for triple in row:
                triple_value(triple)

    @classmethod
    def from_triples(cls, rows: t.Sequence[t.Sequence[t.Sequence[int]]]) -> "ApmMatrix":
        triples = tuple(tuple(tuple(triple) for triple in row) for row in rows)
        return cls(n=len(rows), triples=triples)  # type: ignore[arg-type]

    @classmethod
    def from_values(cls, rows: t.Sequence[t.Sequence[t.Union[EisensteinElt, int, str]]]) -> "ApmMatrix":
        def decode(entry: t.Union[EisensteinElt, int, str]) -> Triple:
            if isinstance(entry, str):
                if entry not in CODE_VALUES:
                    raise ValueError(f"Unknown entry code {entry!r}")
                entry = CODE_VALUES[entry]
            if isinstance(entry, int):
                entry = EisensteinElt(entry, 0)
            return value_triple(entry)

        return cls(n=len(rows), triples=tuple(tuple(decode(entry) for entry in row) for row in rows))

    @classmethod
    def zero(cls, n: int) -> "ApmMatrix":
        return cls(n=n, triples=tuple((ZERO_TRIPLE,) * n for _ in range(n)))

    def triple(self, i: int, j: int) -> Triple:
        return self.triples[i - 1][j - 1]

    def value(self, i: int, j: int) -> EisensteinElt:
        return triple_value(self.triple(i, j))

    @property
    def values(self) -> t.List[t.List[EisensteinElt]]:
        return [[triple_value(triple) for triple in row] for row in self.triples]

    def row(self, i: int) -> t.List[EisensteinElt]:
        return [self.value(i, j) for j in range(1, self.n + 1)]

    def column(self, j: int) -> t.List[EisensteinElt]:
        return [self.value(i, j) for i in range(1, self.n + 1)]

    def diagonal_cells(self, offset: int) -> t.List[t.Tuple[int, int]]:
        """
        Cells (i, i+offset) from top to bottom, offset in [1-n, n-1].
        """
        return [(i, i + offset) for i in range(max(1, 1 - offset), min(self.n, self.n - offset) + 1)]

    def total(self) -> EisensteinElt:
        return sum((value for row in self.values for value in row), EisensteinElt())

    def to_codes(self) -> t.List[t.List[str]]:
        return [[VALUE_CODES[value] for value in row] for row in self.values]

    def to_dict(self) -> t.Dict[str, t.Any]:
        return {"n": self.n, "entries": self.to_codes()}

    @classmethod
    def from_dict(cls, data: t.Mapping[str, t.Any]) -> "ApmMatrix":
        try:
            entries = data["entries"]
        except (KeyError, TypeError) as ex:
            raise ValueError(f"Malformed matrix: {ex}") from ex
        matrix = cls.from_values(entries)
        if "n" in data and int(data["n"]) != matrix.n:
            raise ValueError(f"Declared size {data['n']} does not match {matrix.n} rows")
        return matrix

    def __str__(self):
        width = max((len(code) for row in self.to_codes() for code in row), default=1)
        return "\n".join(" ".join(code.rjust(width) for code in row) for row in self.to_codes())


def to_apm(config: LatticeConfig) -> ApmMatrix:
    if config.rows != config.cols:
        raise ValueError(f"Phase matrices need a square grid, got {config.rows}x{config.cols}")
    if not config.is_valid():
        raise ValueError("Configuration violates the ice rule")
    n = config.rows
    return ApmMatrix(
        n=n,
        triples=tuple(
            tuple(config.environment(j, n + 1 - i).triple for j in range(1, n + 1)) for i in range(1, n + 1)
        ),
    )


def config_from_apm(apm: ApmMatrix, spec: BoundarySpec) -> LatticeConfig:
    """
    Rebuild the edge occupancies from the boundary: every outgoing edge is the incoming edge of
    the same direction minus the reflector entry, e = w - h, s = n - v and se = nw - d.
    """
    edges = spec.edges()
    n = apm.n
    if (edges.rows, edges.cols) != (n, n):
        raise ValueError(f"{spec.label} does not fit a {n}x{n} matrix")
    envs: t.Dict[t.Tuple[int, int], VertexEnvironment] = {}
    for x in range(1, n + 1):
        for y in range(n, 0, -1):
            h, v, d = apm.triple(n + 1 - y, x)
            w = envs[x - 1, y].e if x > 1 else edges.west_h[y]
            north = envs[x, y + 1].s if y < n else edges.north_v[x]
            nw = envs[x - 1, y + 1].se if x > 1 and y < n else edges.north_entry(x) if y == n else edges.west_d[y]
            env = VertexEnvironment(w=w, n=north, nw=nw, e=w - h, s=north - v, se=nw - d)
            if not all(bit in (0, 1) for bit in env):
                raise ValueError(f"Matrix entry at row {n + 1 - y}, column {x} is incompatible with {spec.label}")
            envs[x, y] = env
    config = LatticeConfig.from_environments(edges, envs, boundary=spec.label)
    if not config.is_valid() or not config.matches(edges):
        raise ValueError(f"Matrix does not describe a configuration of {spec.label}")
    return config


def lift_asm(asm: t.Sequence[t.Sequence[int]]) -> ApmMatrix:
    """
    Alternating sign matrix entries ±1 become the triples (±1, ∓1, 0).
    """
    rows = []
    for row in asm:
        lifted = []
        for entry in row:
            if entry not in (-1, 0, 1):
                raise ValueError(f"Not an alternating sign matrix entry: {entry}")
            lifted.append((entry, -entry, 0))
        rows.append(lifted)
    return ApmMatrix.from_triples(rows)


def iter_asms(n: int) -> t.Iterator[t.List[t.List[int]]]:
    """
    All n × n alternating sign matrices, built row by row while every partial column sum stays 0 or 1.
    """
    def alternating(row: t.Tuple[int, ...]) -> bool:
        nonzero = [entry for entry in row if entry]
        return bool(nonzero) and nonzero[0] == 1 and all(a == -b for a, b in zip(nonzero, nonzero[1:]))

    candidates = [row for row in itertools.product((-1, 0, 1), repeat=n) if alternating(row) and sum(row) == 1]
    rows: t.List[t.List[int]] = []

    def extend(partial: t.Tuple[int, ...]) -> t.Iterator[t.List[t.List[int]]]:
        if len(rows) == n:
            if all(value == 1 for value in partial):
                yield [list(row) for row in rows]
            return
        for row in candidates:
            sums = tuple(a + b for a, b in zip(partial, row))
            if all(value in (0, 1) for value in sums):
                rows.append(list(row))
                yield from extend(sums)
                rows.pop()

    yield from extend((0,) * n)
