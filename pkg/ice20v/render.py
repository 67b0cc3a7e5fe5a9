"""
SVG figures of configurations and tilings, drawn with matplotlib.

Every artist carries a `gid`, which becomes the id of its SVG group. Clip path ids are salted
with a fixed value and the date stamp is dropped, so equal inputs give byte-identical files.
"""

import io
import logging
import typing as t

import matplotlib
from matplotlib.collections import LineCollection
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from ice20v.apm.turning import Edge, turning_profile
from ice20v.icemodel.model import LatticeConfig
from ice20v.tilings.domino import Domino, Region

logger = logging.getLogger(__name__)

# Inches per lattice unit or region cell.
SCALE = 0.5
MARGIN = 0.5

SVG_SETTINGS = {"svg.hashsalt": "ice20v", "svg.fonttype": "none"}

GRID_COLOR = "#c8c8c8"
PATH_COLOR = "#1f5fa8"
DOMINO_FILL = {"h": "#f2c14e", "v": "#5b9bd5"}

Point = t.Tuple[int, int]


def _figure(width: float, height: float) -> t.Tuple[Figure, t.Any]:
    """
    A figure whose single axes spans the whole canvas, sized to `width` × `height` data units.
    """
    width = max(width, 1.0)
    height = max(height, 1.0)
    fig = Figure(figsize=(SCALE * (width + 2 * MARGIN), SCALE * (height + 2 * MARGIN)))
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_xlim(-MARGIN, width + MARGIN)
    ax.set_ylim(-MARGIN, height + MARGIN)
    ax.set_aspect("equal")
    ax.set_axis_off()
    return fig, ax


def _to_svg(fig: Figure) -> str:
    buffer = io.StringIO()
    with matplotlib.rc_context(SVG_SETTINGS):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def edge_segment(edge: Edge) -> t.Tuple[Point, Point]:
    """
    Endpoints of a lattice edge in the direction of the path running along it.

    External edges reach one unit beyond the outermost vertices.
    """
    kind, x, y = edge
    if kind == "h":
        return (x, y), (x + 1, y)
    if kind == "v":
        return (x, y + 1), (x, y)
    return (x, y + 1), (x + 1, y)


def lattice_segments(config: LatticeConfig) -> t.List[t.Tuple[Point, Point]]:
    segments = []
    for y in range(1, config.rows + 1):
        for x in range(config.cols + 1):
            segments.append(edge_segment(("h", x, y)))
    for x in range(1, config.cols + 1):
        for y in range(config.rows + 1):
            segments.append(edge_segment(("v", x, y)))
    for x in range(config.cols + 1):
        for y in range(config.rows + 1):
            if config.diagonal_exists(x, y):
                segments.append(edge_segment(("d", x, y)))
    return segments


def path_points(edges: t.Sequence[Edge]) -> t.List[Point]:
    return [edge_segment(edges[0])[0]] + [edge_segment(edge)[1] for edge in edges]


def render_config(config: LatticeConfig) -> str:
    """
    The lattice in grey and every osculating path as a rounded polyline, in path order.
    """
    profile = turning_profile(config)
    fig, ax = _figure(config.cols + 1, config.rows + 1)
    ax.add_collection(LineCollection(lattice_segments(config), colors=GRID_COLOR, linewidths=1, gid="lattice"))
    for number, path in enumerate(profile.paths, start=1):
        xs, ys = zip(*path_points(path.edges))
        ax.plot(
            xs,
            ys,
            color=PATH_COLOR,
            linewidth=3,
            solid_joinstyle="round",
            solid_capstyle="round",
            gid=f"path-{number}",
        )
    logger.debug(f"Rendered {config.boundary or 'configuration'} with {len(profile.paths)} paths")
    return _to_svg(fig)


def render_tiling(region: Region, tiling: t.Optional[t.Sequence[Domino]] = None) -> str:
    """
    The region's cells as outlined squares, then every domino as a filled rectangle.

    Row 0 is drawn on top.
    """
    fig, ax = _figure(region.width, region.height)
    ax.invert_yaxis()
    for number, (row, col) in enumerate(sorted(region.cells), start=1):
        ax.add_patch(
            Rectangle((col, row), 1, 1, fill=False, edgecolor=GRID_COLOR, linewidth=1, gid=f"cell-{number}")
        )
    if tiling is not None:
        for number, (first, second) in enumerate(sorted(tuple(sorted(domino)) for domino in tiling), start=1):
            row, col = first
            horizontal = first[0] == second[0]
            width, height = (2, 1) if horizontal else (1, 2)
            ax.add_patch(
                Rectangle(
                    (col + 0.05, row + 0.05),
                    width - 0.1,
                    height - 0.1,
                    facecolor=DOMINO_FILL["h" if horizontal else "v"],
                    edgecolor="#333333",
                    linewidth=1,
                    gid=f"domino-{number}",
                )
            )
    return _to_svg(fig)
