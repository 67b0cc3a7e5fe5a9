"""
Regions of the square lattice and their domino tilings.

Cells are (row, col) with row 0 on top. The color of a cell is (row + col) mod 2.
"""

import logging
import typing as t
from collections import defaultdict
from dataclasses import dataclass

logger = logging.getLogger(__name__)

Cell = t.Tuple[int, int]
Domino = t.Tuple[Cell, Cell]

MAX_WIDTH = 32


@dataclass(frozen=True)
class Region:
    cells: t.FrozenSet[Cell]

    @classmethod
    def from_cells(cls, cells: t.Iterable[Cell]) -> "Region":
        return cls(frozenset(cells))

    @classmethod
    def from_bitmap(cls, text: str) -> "Region":
        """
        '#' marks a cell, '.' an empty square, one row per line.
        """
        cells = set()
        lines = [line.rstrip() for line in text.strip("\n").splitlines()]
        for row, line in enumerate(lines):
            for col, char in enumerate(line):
                if char == "#":
                    cells.add((row, col))
                elif char not in ". ":
                    raise ValueError(f"Unexpected character {char!r} in region bitmap at row {row}")
        return cls(frozenset(cells))

    def to_bitmap(self) -> str:
        if not self.cells:
            return ""
        return "\n".join(
            "".join("#" if (row, col) in self.cells else "." for col in range(self.width)) for row in range(self.height)
        )

    def to_dict(self) -> t.Dict[str, t.Any]:
        return {"region": self.to_bitmap().splitlines()}

    @classmethod
    def from_dict(cls, data: t.Mapping[str, t.Any]) -> "Region":
        """
        Accept {"region": [bitmap rows]}, {"region": "bitmap"} or {"cells": [[row, col], ...]}.
        """
        if "cells" in data:
            try:
                return cls.from_cells((int(row), int(col)) for row, col in data["cells"])
            except (TypeError, ValueError) as ex:
                raise ValueError(f"Malformed cell list: {ex}") from ex
        bitmap = data.get("region")
        if isinstance(bitmap, list):
            bitmap = "\n".join(map(str, bitmap))
        if not isinstance(bitmap, str):
            raise ValueError("Region needs a 'region' bitmap or a 'cells' list")
        return cls.from_bitmap(bitmap)

    @property
    def height(self) -> int:
        return max(row for row, _ in self.cells) + 1 if self.cells else 0

    @property
    def width(self) -> int:
        return max(col for _, col in self.cells) + 1 if self.cells else 0

    def color(self, cell: Cell) -> int:
        row, col = cell
        return (row + col) % 2

    def color_balance(self) -> int:
        return sum(1 if self.color(cell) == 0 else -1 for cell in self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)


def square_region(n: int) -> Region:
    """
    The 2n × 2n square.
    """
    return Region.from_cells((row, col) for row in range(2 * n) for col in range(2 * n))


def triangle_region(n: int) -> Region:
    """
    Inverted staircase with row lengths 2n-1, 2n-1, 2n-3, 2n-3, ..., 1, 1 from the top.
    """
    cells = []
    for pair in range(n):
        length = 2 * (n - pair) - 1
        for row in (2 * pair, 2 * pair + 1):
            cells.extend((row, col) for col in range(length))
    return Region.from_cells(cells)


def domino_matchings(region: Region) -> int:
    """
    Broken-profile transfer over the cells in reading order. Bit c of the profile is set when
    the cell in column c of the current frontier is already covered by a vertical domino.
    """
    if len(region) % 2 or region.color_balance():
        return 0
    if not region.cells:
        return 1
    width = region.width
    if width > MAX_WIDTH:
        raise ValueError(f"Region is {width} columns wide, the limit is {MAX_WIDTH}")
    profiles: t.Dict[int, int] = {0: 1}
    for row in range(region.height):
        for col in range(width):
            bit = 1 << col
            following: t.DefaultDict[int, int] = defaultdict(int)
            inside = (row, col) in region
            for profile, count in profiles.items():
                if profile & bit:
                    if inside:
                        following[profile & ~bit] += count
                    continue
                if not inside:
                    following[profile] += count
                    continue
                if (row + 1, col) in region:
                    following[profile | bit] += count
                if col + 1 < width and (row, col + 1) in region and not profile & (bit << 1):
                    following[profile | (bit << 1)] += count
            profiles = following
    return profiles.get(0, 0)


def iter_tilings(region: Region) -> t.Iterator[t.List[Domino]]:
    """
    Every tiling, found by covering the first free cell in reading order either to the right or downwards.
    """
    order = sorted(region.cells)
    covered: t.Set[Cell] = set()
    placed: t.List[Domino] = []

    def descend(start: int) -> t.Iterator[t.List[Domino]]:
        index = start
        while index < len(order) and order[index] in covered:
            index += 1
        if index == len(order):
            yield list(placed)
            return
        row, col = order[index]
        for other in ((row, col + 1), (row + 1, col)):
            if other in region and other not in covered:
                covered.update(((row, col), other))
                placed.append(((row, col), other))
                yield from descend(index + 1)
                placed.pop()
                covered.difference_update(((row, col), other))

    if len(region) % 2 == 0:
        yield from descend(0)
