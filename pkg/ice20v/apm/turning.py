"""
Osculating path decomposition and turning weights.

Every edge carries a phase η: ω for horizontal, -ω² for vertical and 0 for diagonal edges.
A path turning from edge p to edge p' at a vertex collects η(p') - η(p), so the weights
along a path telescope to η(last) - η(first).
"""

import logging
import typing as t
from dataclasses import dataclass, field

from ice20v.exactalg.eisenstein import EisensteinElt
from ice20v.icemodel.model import LatticeConfig

logger = logging.getLogger(__name__)

# ("h", x, y): (x, y) → (x+1, y); ("v", x, y): (x, y+1) → (x, y); ("d", x, y): (x, y+1) → (x+1, y)
Edge = t.Tuple[str, int, int]
Vertex = t.Tuple[int, int]

ETA: t.Dict[str, EisensteinElt] = {
    "h": EisensteinElt(0, 1),
    "v": EisensteinElt(1, 1),
    "d": EisensteinElt(0, 0),
}

# Incoming directions clockwise from West, outgoing directions clockwise from East.
INCOMING = ("w", "nw", "n")
OUTGOING = ("e", "se", "s")


def eta(edge: Edge) -> EisensteinElt:
    return ETA[edge[0]]


def _head(edge: Edge) -> Vertex:
    kind, x, y = edge
    return (x, y) if kind == "v" else (x + 1, y)


def _outgoing_edge(direction: str, x: int, y: int) -> Edge:
    if direction == "e":
        return "h", x, y
    if direction == "s":
        return "v", x, y - 1
    return "d", x, y - 1


def _incoming_direction(edge: Edge) -> str:
    return {"h": "w", "v": "n", "d": "nw"}[edge[0]]


def pairing(config: LatticeConfig, x: int, y: int) -> t.Dict[str, str]:
    """
    The non-crossing matching of occupied incoming to occupied outgoing directions: the
    incoming edge closest to East continues through the outgoing edge closest to East, and so on
    inwards.
    """
    env = config.environment(x, y)._asdict()
    ins = [direction for direction in INCOMING if env[direction]]
    outs = [direction for direction in OUTGOING if env[direction]]
    return dict(zip(reversed(ins), outs))


@dataclass
class PathTurning:
    edges: t.List[Edge]
    steps: t.List[EisensteinElt]

    @property
    def total(self) -> EisensteinElt:
        return sum(self.steps, EisensteinElt())

    @property
    def is_hv(self) -> bool:
        return self.edges[0][0] == "h" and self.edges[-1][0] == "v"


@dataclass
class TurningProfile:
    paths: t.List[PathTurning] = field(default_factory=list)
    vertex_sums: t.Dict[Vertex, EisensteinElt] = field(default_factory=dict)

    def totals(self) -> t.List[EisensteinElt]:
        return [path.total for path in self.paths]


def _entry_edges(config: LatticeConfig) -> t.List[Edge]:
    rows, cols = config.rows, config.cols
    entries: t.List[Edge] = []
    for y in range(rows, 0, -1):
        if config.h_bit(0, y):
            entries.append(("h", 0, y))
        if config.d_bit(0, y):
            entries.append(("d", 0, y))
    for x in range(1, cols + 1):
        if config.v_bit(x, rows):
            entries.append(("v", x, rows))
        if x < cols and config.d_bit(x, rows):
            entries.append(("d", x, rows))
    return entries


def turning_profile(config: LatticeConfig) -> TurningProfile:
    if not config.is_valid():
        raise ValueError("Configuration violates the ice rule")
    rows, cols = config.rows, config.cols
    profile = TurningProfile(vertex_sums={vertex: EisensteinElt() for vertex in config.vertices()})
    for start in _entry_edges(config):
        edges, steps = [start], []
        x, y = _head(start)
        while 1 <= x <= cols and 1 <= y <= rows:
            following = _outgoing_edge(pairing(config, x, y)[_incoming_direction(edges[-1])], x, y)
            weight = eta(following) - eta(edges[-1])
            steps.append(weight)
            profile.vertex_sums[x, y] += weight
            edges.append(following)
            x, y = _head(following)
        profile.paths.append(PathTurning(edges=edges, steps=steps))
    logger.debug(f"Decomposed configuration into {len(profile.paths)} paths")
    return profile
