"""
Lattice, boundary and configuration model of the twenty-vertex ice model.

Vertices sit at (x, y) with x = 1..cols counted from the West and y = 1..rows counted from the
bottom. Every vertex has six edges: W, N, NW incoming and E, S, SE outgoing. An edge is
occupied by a path iff its arrow follows the natural direction W→E, N→S or NW→SE, which
turns the ice rule into flow conservation: #occupied in = #occupied out.
"""

import itertools
import typing as t
from dataclasses import dataclass, field
from enum import Enum

Bits = t.Tuple[int, ...]


class BoundaryKind(Enum):
    DWBC1 = "DWBC1"
    DWBC2 = "DWBC2"
    DWBC3 = "DWBC3"
    DWBC4 = "DWBC4"
    PENTAGON = "PENTAGON"
    RECT4 = "RECT4"
    SQUARE6V = "SQUARE6V"


class VertexEnvironment(t.NamedTuple):
    w: int
    n: int
    nw: int
    e: int
    s: int
    se: int

    @property
    def in_count(self) -> int:
        return self.w + self.n + self.nw

    @property
    def out_count(self) -> int:
        return self.e + self.s + self.se

    @property
    def is_valid(self) -> bool:
        return self.in_count == self.out_count

    @property
    def triple(self) -> t.Tuple[int, int, int]:
        """
        Reflector/transmitter triple (h, v, d): +1 or -1 where the path turns away from a direction, 0 where it passes.
        """
        return self.w - self.e, self.n - self.s, self.nw - self.se


def _canonical_environments() -> t.List[VertexEnvironment]:
    candidates = [VertexEnvironment(*bits) for bits in itertools.product((0, 1), repeat=6)]
    valid = [env for env in candidates if env.is_valid]
    return sorted(valid, key=lambda env: (env.in_count, tuple(env)))


ENVIRONMENTS: t.List[VertexEnvironment] = _canonical_environments()
ENVIRONMENT_IDS: t.Dict[VertexEnvironment, int] = {env: index + 1 for index, env in enumerate(ENVIRONMENTS)}

# Valid outputs (e, s, se) per input pattern (w, nw, n), in canonical order.
TRANSITIONS: t.Dict[t.Tuple[int, int, int], t.List[t.Tuple[int, int, int]]] = {}
for _env in ENVIRONMENTS:
    TRANSITIONS.setdefault((_env.w, _env.nw, _env.n), []).append((_env.e, _env.s, _env.se))


@dataclass(frozen=True)
class VertexClass:
    valid: bool
    vertex_id: t.Optional[int]


def classify_vertex(env: t.Union[VertexEnvironment, t.Sequence[int]]) -> VertexClass:
    env = VertexEnvironment(*env)
    vertex_id = ENVIRONMENT_IDS.get(env)
    return VertexClass(valid=vertex_id is not None, vertex_id=vertex_id)


@dataclass(frozen=True)
class BoundaryEdges:
    """
    Occupancy of every external edge. Tuples are indexed by the coordinate they describe;
    unused slots hold 0.

    - west_h[y], y=1..rows: (0,y)→(1,y)
    - west_d[y], y=1..rows: (0,y+1)→(1,y); y=rows is the north-west corner
    - north_v[x], x=1..cols: (x,rows+1)→(x,rows)
    - north_d[x], x=2..cols: (x-1,rows+1)→(x,rows)
    - east_h[y], y=1..rows: (cols,y)→(cols+1,y)
    - east_d[y], y=0..rows-1: (cols,y+1)→(cols+1,y); y=0 is the south-east corner
    - south_v[x], x=1..cols: (x,1)→(x,0)
    - south_d[x], x=1..cols-1: (x,1)→(x+1,0)
    """

    rows: int
    cols: int
    west_h: Bits
    west_d: Bits
    north_v: Bits
    north_d: Bits
    east_h: Bits
    east_d: Bits
    south_v: Bits
    south_d: Bits

    @classmethod
    def empty(cls, rows: int, cols: int) -> "BoundaryEdges":
        return cls(
            rows=rows,
            cols=cols,
            west_h=(0,) * (rows + 1),
            west_d=(0,) * (rows + 1),
            north_v=(0,) * (cols + 1),
            north_d=(0,) * (cols + 1),
            east_h=(0,) * (rows + 1),
            east_d=(0,) * rows,
            south_v=(0,) * (cols + 1),
            south_d=(0,) * (cols + 1),
        )

    def south_exit(self, x: int) -> int:
        """
        Diagonal leaving (x, 1) downwards; the last column uses the south-east corner.
        """
        return self.south_d[x] if x < self.cols else self.east_d[0]

    def north_entry(self, x: int) -> int:
        """
        Diagonal entering (x, rows) from above; the first column uses the north-west corner.
        """
        return self.north_d[x] if x > 1 else self.west_d[self.rows]

    def reflected(self) -> "BoundaryEdges":
        """
        The boundary seen through the reflection (x, y) ↦ (y, x).

        Horizontal and vertical edges swap, diagonals stay diagonals, and occupancy is preserved,
        so configurations of both boundaries correspond one to one.
        """
        rows, cols = self.rows, self.cols
        return BoundaryEdges(
            rows=cols,
            cols=rows,
            west_h=self.south_v,
            south_v=self.west_h,
            east_h=self.north_v,
            north_v=self.east_h,
            west_d=(0,) + self.south_d[1:cols] + (self.east_d[0],),
            south_d=(0,) + self.west_d[1:rows] + (0,),
            east_d=(self.west_d[rows],) + self.north_d[2 : cols + 1],
            north_d=(0, 0) + self.east_d[1:rows],
        )

    def flow_balance(self) -> int:
        """
        Occupied entering minus occupied leaving edges; zero for any boundary that admits configurations.
        """
        entering = sum(self.west_h) + sum(self.west_d) + sum(self.north_v) + sum(self.north_d)
        leaving = sum(self.east_h) + sum(self.east_d) + sum(self.south_v) + sum(self.south_d)
        return entering - leaving


def _bits(size: int, ones: t.Iterable[int]) -> Bits:
    values = [0] * size
    for index in ones:
        values[index] = 1
    return tuple(values)


@dataclass(frozen=True)
class BoundarySpec:
    kind: BoundaryKind
    n: int = 0
    k: int = 0
    a: int = 0
    b: int = 0
    c: int = 0

    @classmethod
    def dwbc(cls, kind: t.Union[BoundaryKind, str], n: int) -> "BoundarySpec":
        kind = BoundaryKind(kind)
        if kind in (BoundaryKind.PENTAGON, BoundaryKind.RECT4):
            raise ValueError(f"{kind.value} needs its own parameters")
        if n < 1:
            raise ValueError(f"Grid size must be positive, got n={n}")
        return cls(kind=kind, n=n)

    @classmethod
    def pentagon(cls, n: int, k: int) -> "BoundarySpec":
        if n < 1 or k < 0:
            raise ValueError(f"Pentagon needs n >= 1 and k >= 0, got n={n}, k={k}")
        return cls(kind=BoundaryKind.PENTAGON, n=n, k=k)

    @classmethod
    def rect4(cls, a: int, b: int, c: int) -> "BoundarySpec":
        if min(a, b, c) < 0:
            raise ValueError(f"Rectangle parameters must be nonnegative, got a={a}, b={b}, c={c}")
        return cls(kind=BoundaryKind.RECT4, a=a, b=b, c=c)

    @property
    def rows(self) -> int:
        if self.kind is BoundaryKind.PENTAGON:
            return self.n + self.k
        if self.kind is BoundaryKind.RECT4:
            return self.a + self.b + 1
        return self.n

    @property
    def cols(self) -> int:
        if self.kind is BoundaryKind.RECT4:
            return self.b + self.c + 1
        return self.n

    @property
    def label(self) -> str:
        if self.kind is BoundaryKind.PENTAGON:
            return f"PENTAGON({self.n},{self.k})"
        if self.kind is BoundaryKind.RECT4:
            return f"RECT4({self.a},{self.b},{self.c})"
        return f"{self.kind.value}({self.n})"

    def edges(self) -> BoundaryEdges:
        rows, cols = self.rows, self.cols
        all_rows = range(1, rows + 1)
        all_cols = range(1, cols + 1)
        base = BoundaryEdges.empty(rows, cols)
        kind = self.kind
        if kind in (BoundaryKind.DWBC1, BoundaryKind.DWBC2):
            corner = int(kind is BoundaryKind.DWBC1)
            west_d = list(_bits(rows + 1, all_rows))
            west_d[rows] = corner
            return BoundaryEdges(
                rows=rows,
                cols=cols,
                west_h=_bits(rows + 1, all_rows),
                west_d=tuple(west_d),
                north_v=base.north_v,
                north_d=base.north_d,
                east_h=base.east_h,
                east_d=(corner,) + base.east_d[1:],
                south_v=_bits(cols + 1, all_cols),
                south_d=_bits(cols + 1, range(1, cols)),
            )
        if kind in (BoundaryKind.DWBC3, BoundaryKind.SQUARE6V):
            return BoundaryEdges(
                **{
                    **base.__dict__,
                    "west_h": _bits(rows + 1, all_rows),
                    "south_v": _bits(cols + 1, all_cols),
                }
            )
        if kind is BoundaryKind.DWBC4:
            return BoundaryEdges(
                **{
                    **base.__dict__,
                    "west_h": _bits(rows + 1, all_rows),
                    "east_h": _bits(rows + 1, all_rows),
                    "north_v": _bits(cols + 1, all_cols),
                    "south_v": _bits(cols + 1, all_cols),
                }
            )
        if kind is BoundaryKind.PENTAGON:
            return BoundaryEdges(
                **{
                    **base.__dict__,
                    "west_h": _bits(rows + 1, range(self.k + 1, rows + 1)),
                    "south_v": _bits(cols + 1, all_cols),
                }
            )
        if kind is BoundaryKind.RECT4:
            return BoundaryEdges(
                **{
                    **base.__dict__,
                    "west_h": _bits(rows + 1, range(rows - self.a, rows + 1)),
                    "east_h": _bits(rows + 1, range(1, self.a + 2)),
                    "north_v": _bits(cols + 1, all_cols),
                    "south_v": _bits(cols + 1, all_cols),
                }
            )
        raise NotImplementedError(f"Unknown boundary kind: {kind}")  # pragma: no cover


def _pack(bits: Bits) -> str:
    value = 0
    for index, bit in enumerate(bits):
        if bit:
            value |= 1 << index
    return format(value, "x")


def _unpack(text: str, size: int) -> Bits:
    value = int(text, 16)
    if value >> size:
        raise ValueError(f"Bit string {text!r} exceeds {size} bits")
    return tuple((value >> index) & 1 for index in range(size))


@dataclass(frozen=True)
class LatticeConfig:
    """
    Edge occupancies of a configuration on a rows × cols grid, external edges included.

    - h[y][x], x=0..cols: (x,y)→(x+1,y)
    - v[x][y], y=0..rows: (x,y+1)→(x,y)
    - d[x][y], x=0..cols, y=0..rows: (x,y+1)→(x+1,y); slots touching no grid vertex stay 0
    """

    rows: int
    cols: int
    boundary: str
    h: Bits = field(repr=False)
    v: Bits = field(repr=False)
    d: Bits = field(repr=False)

    def h_bit(self, x: int, y: int) -> int:
        return self.h[(y - 1) * (self.cols + 1) + x]

    def v_bit(self, x: int, y: int) -> int:
        return self.v[(x - 1) * (self.rows + 1) + y]

    def d_bit(self, x: int, y: int) -> int:
        return self.d[x * (self.rows + 1) + y]

    def environment(self, x: int, y: int) -> VertexEnvironment:
        return VertexEnvironment(
            w=self.h_bit(x - 1, y),
            n=self.v_bit(x, y),
            nw=self.d_bit(x - 1, y),
            e=self.h_bit(x, y),
            s=self.v_bit(x, y - 1),
            se=self.d_bit(x, y - 1),
        )

    def vertices(self) -> t.Iterator[t.Tuple[int, int]]:
        for x in range(1, self.cols + 1):
            for y in range(self.rows, 0, -1):
                yield x, y

    def is_valid(self) -> bool:
        return all(self.environment(x, y).is_valid for x, y in self.vertices())

    def boundary_edges(self) -> BoundaryEdges:
        rows, cols = self.rows, self.cols
        return BoundaryEdges(
            rows=rows,
            cols=cols,
            west_h=(0,) + tuple(self.h_bit(0, y) for y in range(1, rows + 1)),
            west_d=(0,) + tuple(self.d_bit(0, y) for y in range(1, rows + 1)),
            north_v=(0,) + tuple(self.v_bit(x, rows) for x in range(1, cols + 1)),
            north_d=(0, 0) + tuple(self.d_bit(x - 1, rows) for x in range(2, cols + 1)),
            east_h=(0,) + tuple(self.h_bit(cols, y) for y in range(1, rows + 1)),
            east_d=tuple(self.d_bit(cols, y) for y in range(rows)),
            south_v=(0,) + tuple(self.v_bit(x, 0) for x in range(1, cols + 1)),
            south_d=(0,) + tuple(self.d_bit(x, 0) for x in range(1, cols)) + (0,),
        )

    def matches(self, edges: BoundaryEdges) -> bool:
        return (self.rows, self.cols) == (edges.rows, edges.cols) and self.boundary_edges() == edges

    @classmethod
    def from_environments(
        cls,
        edges: BoundaryEdges,
        environments: t.Mapping[t.Tuple[int, int], VertexEnvironment],
        boundary: str,
    ) -> "LatticeConfig":
        rows, cols = edges.rows, edges.cols
        h = []
        for y in range(1, rows + 1):
            h.append(edges.west_h[y])
            h.extend(environments[x, y].e for x in range(1, cols + 1))
        v = []
        for x in range(1, cols + 1):
            v.extend(environments[x, y + 1].s for y in range(rows))
            v.append(edges.north_v[x])
        d = []
        for x in range(cols + 1):
            for y in range(rows + 1):
                if 1 <= x <= cols and 1 <= y + 1 <= rows:
                    d.append(environments[x, y + 1].se)
                elif x == 0 and 1 <= y <= rows:
                    d.append(edges.west_d[y])
                elif y == rows and 1 <= x < cols:
                    d.append(edges.north_d[x + 1])
                else:
                    d.append(0)
        return cls(rows=rows, cols=cols, boundary=boundary, h=tuple(h), v=tuple(v), d=tuple(d))

    def diagonal_exists(self, x: int, y: int) -> bool:
        upper = 1 <= x <= self.cols and 1 <= y + 1 <= self.rows
        lower = 1 <= x + 1 <= self.cols and 1 <= y <= self.rows
        return upper or lower

    def rotated_complement(self, boundary: str) -> "LatticeConfig":
        """
        Rotate by 180 degrees and flip every edge, the map taking DWBC1 onto DWBC2 configurations.
        """
        if self.rows != self.cols:
            raise ValueError("Rotation needs a square grid")
        n = self.rows
        h = [0] * len(self.h)
        for y in range(1, n + 1):
            for x in range(n + 1):
                h[(n - y) * (n + 1) + (n - x)] = 1 - self.h_bit(x, y)
        v = [0] * len(self.v)
        for x in range(1, n + 1):
            for y in range(n + 1):
                v[(n - x) * (n + 1) + (n - y)] = 1 - self.v_bit(x, y)
        d = [0] * len(self.d)
        for x in range(n + 1):
            for y in range(n + 1):
                if self.diagonal_exists(x, y):
                    d[(n - x) * (n + 1) + (n - y)] = 1 - self.d_bit(x, y)
        return LatticeConfig(rows=n, cols=n, boundary=boundary, h=tuple(h), v=tuple(v), d=tuple(d))

    def to_dict(self) -> t.Dict[str, t.Any]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "boundary": self.boundary,
            "h_bits": _pack(self.h),
            "v_bits": _pack(self.v),
            "d_bits": _pack(self.d),
        }

    @classmethod
    def from_dict(cls, data: t.Mapping[str, t.Any]) -> "LatticeConfig":
        try:
            rows, cols = int(data["rows"]), int(data["cols"])
            return cls(
                rows=rows,
                cols=cols,
                boundary=str(data.get("boundary", "")),
                h=_unpack(data["h_bits"], rows * (cols + 1)),
                v=_unpack(data["v_bits"], cols * (rows + 1)),
                d=_unpack(data["d_bits"], (cols + 1) * (rows + 1)),
            )
        except (KeyError, TypeError) as ex:
            raise ValueError(f"Malformed configuration: {ex}") from ex
