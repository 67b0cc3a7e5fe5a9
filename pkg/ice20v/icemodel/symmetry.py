"""
Counting configurations whose phase matrix carries a symmetry.

Matrix entry (i, j) sits at vertex x = j, y = n+1-i. The three symmetries then pair vertices as

- SAPM: (x, y) with (y, x), values conjugate
- TCAPM: (x, y) with (n+1-y, n+1-x), values conjugate
- HTAPM: (x, y) with (n+1-x, n+1-y), values opposite
"""

import logging
import typing as t
from enum import Enum

from ice20v.exactalg.eisenstein import EisensteinElt
from ice20v.icemodel.model import ENVIRONMENTS, BoundaryKind, VertexEnvironment
from ice20v.icemodel.transfer import Environments, FrontierSweep, SpecLike, resolve_spec

logger = logging.getLogger(__name__)


class SymmetryType(Enum):
    SAPM = "SAPM"
    TCAPM = "TCAPM"
    HTAPM = "HTAPM"


ALLOWED_BOUNDARIES = {
    SymmetryType.SAPM: {BoundaryKind.DWBC1, BoundaryKind.DWBC2, BoundaryKind.DWBC3, BoundaryKind.DWBC4},
    SymmetryType.TCAPM: {BoundaryKind.DWBC1, BoundaryKind.DWBC2},
    SymmetryType.HTAPM: {BoundaryKind.DWBC4},
}

SYMMETRY_MAX_N = 6


def phase_value(env: VertexEnvironment) -> EisensteinElt:
    """
    -ω·h + ω²·v for the triple (h, v, d); with h + v + d = 0 this is -v + d·ω.
    """
    _, v, d = env.triple
    return EisensteinElt(-v, d)


PHASES: t.Dict[VertexEnvironment, EisensteinElt] = {env: phase_value(env) for env in ENVIRONMENTS}


def partner(sym: SymmetryType, n: int, x: int, y: int) -> t.Tuple[int, int]:
    if sym is SymmetryType.SAPM:
        return y, x
    if sym is SymmetryType.TCAPM:
        return n + 1 - y, n + 1 - x
    return n + 1 - x, n + 1 - y


def related(sym: SymmetryType, value: EisensteinElt) -> EisensteinElt:
    """
    The value the partner entry must carry.
    """
    if sym is SymmetryType.HTAPM:
        return -value
    return value.conjugate()


def count_symmetry(spec: SpecLike, n: t.Optional[int], sym: t.Union[SymmetryType, str]) -> int:
    """
    Depth-first enumeration that discards a partial configuration as soon as a vertex and its
    already placed partner violate the symmetry.
    """
    spec = resolve_spec(spec, n)
    sym = SymmetryType(sym)
    if spec.kind not in ALLOWED_BOUNDARIES[sym]:
        raise ValueError(f"{sym.value} is not defined for {spec.kind.value}")
    size = spec.n
    if size > SYMMETRY_MAX_N:
        raise ValueError(f"Symmetry counts support n <= {SYMMETRY_MAX_N}, got n={size}")

    def accept(x: int, y: int, envs: Environments) -> bool:
        other = envs.get(partner(sym, size, x, y))
        if other is None:
            return True
        return PHASES[envs[x, y]] == related(sym, PHASES[other])

    found = 0

    def visit(envs: Environments) -> bool:
        nonlocal found
        found += 1
        return True

    FrontierSweep(spec.edges()).walk(visit, accept=accept)
    logger.info(f"{sym.value} configurations of {spec.label}: {found}")
    return found
