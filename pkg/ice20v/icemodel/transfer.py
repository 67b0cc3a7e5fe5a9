"""
Column-sweep transfer for the twenty-vertex model.

The sweep visits columns West to East and, inside a column, vertices from the top row down.
Between two vertices the frontier holds:

- h[y]: horizontal edge entering row y of the current column from the West
- d[y]: diagonal edge entering (x, y) from the North-West
- CARRY: vertical edge entering the next vertex of the column from above
- PEND: diagonal produced by the previous vertex, destined for (x+1, y)

Profiles are packed into integers. h[y] sits at bit y-1, d[y] at bit rows+y-1, CARRY at
2·rows and PEND at 2·rows+1. The refined sweep keeps its τ-exponent above those bits.
"""

import logging
import typing as t
from collections import defaultdict
from dataclasses import dataclass, replace

from ice20v.exactalg.poly import PolyUni
from ice20v.icemodel.model import (
    TRANSITIONS,
    BoundaryEdges,
    BoundaryKind,
    BoundarySpec,
    LatticeConfig,
    VertexEnvironment,
)

logger = logging.getLogger(__name__)

Position = t.Tuple[int, int]
Environments = t.Dict[Position, VertexEnvironment]
VertexFilter = t.Callable[[int, int, Environments], bool]

SpecLike = t.Union[BoundarySpec, BoundaryKind, str]


def resolve_spec(spec: SpecLike, n: t.Optional[int] = None) -> BoundarySpec:
    """
    Accept a full BoundarySpec or a DWBC kind name plus a size.
    """
    if isinstance(spec, BoundarySpec):
        if n is not None and spec.kind not in (BoundaryKind.PENTAGON, BoundaryKind.RECT4) and n != spec.n:
            return replace(spec, n=n)
        return spec
    if n is None:
        raise ValueError(f"Boundary {spec} needs a grid size")
    return BoundarySpec.dwbc(spec, n)


class FrontierSweep:
    """
    Transfer over frontier profiles of a rows × cols grid with fixed boundary edges.
    """

    def __init__(self, edges: BoundaryEdges, refined: bool = False):
        self.edges = edges
        self.rows = edges.rows
        self.cols = edges.cols
        self.refined = refined
        self.carry_bit = 1 << (2 * self.rows)
        self.pend_bit = 1 << (2 * self.rows + 1)
        self.exponent_shift = 2 * self.rows + 2
        self.order: t.List[Position] = [(x, y) for x in range(1, self.cols + 1) for y in range(self.rows, 0, -1)]

    def initial_state(self) -> int:
        state = 0
        for y in range(1, self.rows + 1):
            if self.edges.west_h[y]:
                state |= 1 << (y - 1)
            if self.edges.west_d[y]:
                state |= 1 << (self.rows + y - 1)
        return state

    def _start_column(self, state: int, x: int) -> int:
        state &= ~(self.carry_bit | self.pend_bit)
        if self.edges.north_v[x]:
            state |= self.carry_bit
        if x < self.cols and self.edges.north_d[x + 1]:
            state |= self.pend_bit
        return state

    def moves(self, state: int, x: int, y: int) -> t.Iterator[t.Tuple[VertexEnvironment, int]]:
        """
        All admissible vertex environments at (x, y) and the profile each one leaves behind.
        """
        rows, edges = self.rows, self.edges
        if y == rows:
            state = self._start_column(state, x)
        h_bit = 1 << (y - 1)
        d_bit = 1 << (rows + y - 1)
        w = 1 if state & h_bit else 0
        nw = 1 if state & d_bit else 0
        n = 1 if state & self.carry_bit else 0
        pend = 1 if state & self.pend_bit else 0
        base = state & ~(h_bit | d_bit | self.carry_bit | self.pend_bit)
        if pend:
            base |= d_bit
        for e, s, se in TRANSITIONS[(w, nw, n)]:
            if y == 1 and (s != edges.south_v[x] or se != edges.south_exit(x)):
                continue
            if x == self.cols and (e != edges.east_h[y] or (y >= 2 and se != edges.east_d[y - 1])):
                continue
            new = base
            if e:
                new |= h_bit
            if s:
                new |= self.carry_bit
            if se:
                new |= self.pend_bit
            if self.refined and s and x == self.cols and y >= 2:
                new += 1 << self.exponent_shift
            yield VertexEnvironment(w=w, n=n, nw=nw, e=e, s=s, se=se), new

    def run(self) -> t.Dict[int, int]:
        """
        Number of partial configurations per frontier profile after the last vertex.
        """
        if self.edges.flow_balance() != 0:
            return {}
        states: t.Dict[int, int] = {self.initial_state(): 1}
        for x, y in self.order:
            following: t.DefaultDict[int, int] = defaultdict(int)
            for state, weight in states.items():
                for _, new in self.moves(state, x, y):
                    following[new] += weight
            states = following
            if y == 1:
                logger.debug(f"Column {x}/{self.cols}: {len(states)} frontier profiles")
        return dict(states)

    def count(self) -> int:
        return sum(self.run().values())

    def refined_counts(self) -> PolyUni:
        if not self.refined:
            raise ValueError("Sweep was not set up to track the last-column statistic")
        exponents: t.DefaultDict[int, int] = defaultdict(int)
        for state, weight in self.run().items():
            exponents[state >> self.exponent_shift] += weight
        return PolyUni.from_exponents(exponents)

    def layers(self) -> t.List[t.Set[int]]:
        """
        Profiles from which the sweep can still be completed, one set per step.
        """
        forward: t.List[t.Set[int]] = [{self.initial_state()}]
        for x, y in self.order:
            forward.append({new for state in forward[-1] for _, new in self.moves(state, x, y)})
        alive: t.List[t.Set[int]] = [set() for _ in forward]
        alive[-1] = forward[-1]
        for step in range(len(self.order) - 1, -1, -1):
            x, y = self.order[step]
            alive[step] = {
                state for state in forward[step] if any(new in alive[step + 1] for _, new in self.moves(state, x, y))
            }
        return alive

    def walk(
        self,
        visit: t.Callable[[Environments], bool],
        accept: t.Optional[VertexFilter] = None,
    ) -> None:
        """
        Depth-first traversal of all configurations in sweep order, choosing vertex environments in
        canonical order. `accept` may veto a vertex once its environment is placed; `visit` receives
        each complete assignment and returns False to stop the traversal.
        """
        if self.edges.flow_balance() != 0:
            return
        alive = self.layers()
        envs: Environments = {}

        def descend(step: int, state: int) -> bool:
            if step == len(self.order):
                return visit(envs)
            x, y = self.order[step]
            for env, new in self.moves(state, x, y):
                if new not in alive[step + 1]:
                    continue
                envs[x, y] = env
                if accept is None or accept(x, y, envs):
                    if not descend(step + 1, new):
                        return False
                del envs[x, y]
            return True

        if self.initial_state() in alive[0]:
            descend(0, self.initial_state())


def count_20v(spec: SpecLike, n: t.Optional[int] = None) -> int:
    spec = resolve_spec(spec, n)
    edges = spec.edges()
    if edges.rows > edges.cols:
        edges = edges.reflected()
    result = FrontierSweep(edges).count()
    logger.info(f"Configurations of {spec.label}: {result}")
    return result


def count_20v_refined(spec: SpecLike, n: t.Optional[int] = None) -> PolyUni:
    """
    Σ_ℓ Z_ℓ τ^(ℓ-1), with ℓ-1 the number of occupied inner vertical edges of the last column.
    """
    spec = resolve_spec(spec, n)
    if spec.kind not in (BoundaryKind.DWBC1, BoundaryKind.DWBC2):
        raise ValueError(f"Refined counts are defined for DWBC1 and DWBC2, not {spec.kind.value}")
    return FrontierSweep(spec.edges(), refined=True).refined_counts()


def count_pentagon(n: int, k: int) -> int:
    return count_20v(BoundarySpec.pentagon(n, k))


def count_rect_dwbc4(a: int, b: int, c: int) -> int:
    return count_20v(BoundarySpec.rect4(a, b, c))


@dataclass(frozen=True)
class Enumeration:
    configs: t.List[LatticeConfig]
    truncated: bool

    def __len__(self) -> int:
        return len(self.configs)

    def __iter__(self) -> t.Iterator[LatticeConfig]:
        return iter(self.configs)


ENUMERATION_MAX_N = 5


def enumerate_configs(spec: SpecLike, n: t.Optional[int] = None, limit: t.Optional[int] = None) -> Enumeration:
    """
    All configurations in sweep order, columns West to East and rows top to bottom, each vertex
    taking its environments in canonical order. Stops after `limit` configurations and flags
    the truncation when more exist.
    """
    spec = resolve_spec(spec, n)
    edges = spec.edges()
    if limit is None and max(edges.rows, edges.cols) > ENUMERATION_MAX_N:
        raise ValueError(f"Enumerating {spec.label} needs a limit")
    configs: t.List[LatticeConfig] = []
    truncated = False

    def collect(envs: Environments) -> bool:
        nonlocal truncated
        if limit is not None and len(configs) >= limit:
            truncated = True
            return False
        configs.append(LatticeConfig.from_environments(edges, envs, spec.label))
        return True

    FrontierSweep(edges).walk(collect)
    logger.debug(f"Enumerated {len(configs)} configurations of {spec.label}, truncated={truncated}")
    return Enumeration(configs=configs, truncated=truncated)


def naive_count(spec: SpecLike, n: t.Optional[int] = None) -> int:
    """
    Backtracking over vertices in reading order, top row first, without any profile merging.
    """
    spec = resolve_spec(spec, n)
    edges = spec.edges()
    rows, cols = edges.rows, edges.cols
    order = [(x, y) for y in range(rows, 0, -1) for x in range(1, cols + 1)]
    envs: Environments = {}

    def inputs(x: int, y: int) -> t.Tuple[int, int, int]:
        w = edges.west_h[y] if x == 1 else envs[x - 1, y].e
        n_in = edges.north_v[x] if y == rows else envs[x, y + 1].s
        if x == 1:
            nw = edges.west_d[y]
        elif y == rows:
            nw = edges.north_d[x]
        else:
            nw = envs[x - 1, y + 1].se
        return w, nw, n_in

    def fits(x: int, y: int, e: int, s: int, se: int) -> bool:
        if x == cols and e != edges.east_h[y]:
            return False
        if y == 1 and (s != edges.south_v[x] or se != edges.south_exit(x)):
            return False
        if x == cols and y >= 2 and se != edges.east_d[y - 1]:
            return False
        return True

    def backtrack(step: int) -> int:
        if step == len(order):
            return 1
        x, y = order[step]
        w, nw, n_in = inputs(x, y)
        total = 0
        for e, s, se in TRANSITIONS[(w, nw, n_in)]:
            if not fits(x, y, e, s, se):
                continue
            envs[x, y] = VertexEnvironment(w=w, n=n_in, nw=nw, e=e, s=s, se=se)
            total += backtrack(step + 1)
            del envs[x, y]
        return total

    return backtrack(0)
