"""The m x n rectangular point graph, its coloring and adjacency matrices."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .gf2 import Gf2Matrix

Point = tuple[int, int]

# E, N, W, S
STEPS: tuple[Point, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))


class Color(enum.Enum):
    BLACK = "black"
    WHITE = "white"

    @property
    def other(self) -> Color:
        return Color.WHITE if self is Color.BLACK else Color.BLACK

    @property
    def parity(self) -> int:
        return 0 if self is Color.BLACK else 1

    @classmethod
    def of(cls, x: int, y: int) -> Color:
        return cls.BLACK if (x + y) % 2 == 0 else cls.WHITE


@dataclass(frozen=True)
class GridStructure:
    c: int
    grid_points: frozenset[Point]
    # origin (lower-left point) of each c x c fundamental square, row-major
    squares: tuple[Point, ...]

    def square_points(self, origin: Point) -> list[Point]:
        ox, oy = origin
        return [(ox + i, oy + j) for j in range(self.c) for i in range(self.c)]


@dataclass(frozen=True)
class GridGraph:
    """Points (x, y) with 0 <= x < m, 0 <= y < n; black iff x + y is even.

    The tiled rectangle is [0, m-1] x [0, n-1].
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise ValueError(f"grid graph needs m, n >= 2, got {self.m} x {self.n}")

    @classmethod
    def square(cls, c: int) -> GridGraph:
        """The c x c graph of a fundamental square; c = 1 is allowed here."""
        if c < 1:
            raise ValueError(f"square side must be >= 1, got {c}")
        if c >= 2:
            return cls(c, c)
        g = object.__new__(cls)
        object.__setattr__(g, "m", 1)
        object.__setattr__(g, "n", 1)
        return g

    @classmethod
    def for_rectangle(cls, p: int, q: int) -> GridGraph:
        return cls(p + 1, q + 1)

    @property
    def n_b(self) -> int:
        return (self.m * self.n + 1) // 2

    @property
    def n_w(self) -> int:
        return self.m * self.n // 2

    @property
    def c(self) -> int:
        return gcd(self.m + 1, self.n + 1) - 1

    def transposed(self) -> GridGraph:
        return GridGraph(self.n, self.m)

    def contains(self, p: Point) -> bool:
        x, y = p
        return 0 <= x < self.m and 0 <= y < self.n

    def _check(self, p: Point) -> None:
        if not self.contains(p):
            raise ValueError(f"point {p} outside the {self.m} x {self.n} graph")

    def color(self, p: Point) -> Color:
        self._check(p)
        return Color.of(*p)

    def neighbors(self, p: Point) -> list[Point]:
        self._check(p)
        x, y = p
        return [(x + dx, y + dy) for dx, dy in STEPS if self.contains((x + dx, y + dy))]

    def is_corner(self, p: Point) -> bool:
        return p[0] in (0, self.m - 1) and p[1] in (0, self.n - 1)

    def on_boundary(self, p: Point) -> bool:
        return p[0] in (0, self.m - 1) or p[1] in (0, self.n - 1)

    def points(self, color: Color | None = None) -> list[Point]:
        """Points in row-major scan order (y outer, x inner)."""
        pts = [(x, y) for y in range(self.n) for x in range(self.m)]
        if color is None:
            return pts
        return [p for p in pts if (p[0] + p[1]) % 2 == color.parity]

    def class_size(self, color: Color) -> int:
        return self.n_b if color is Color.BLACK else self.n_w

    @cached_property
    def _ordinals(self) -> np.ndarray:
        # ordinal[x, y] within the point's color class
        ords = np.empty((self.m, self.n), dtype=np.int64)
        for color in Color:
            for k, (x, y) in enumerate(self.points(color)):
                ords[x, y] = k
        return ords

    def class_coords(self, color: Color) -> tuple[np.ndarray, np.ndarray]:
        pts = np.array(self.points(color), dtype=np.int64).reshape(-1, 2)
        return pts[:, 0], pts[:, 1]

    def point_index(self, p: Point) -> tuple[Color, int]:
        self._check(p)
        return Color.of(*p), int(self._ordinals[p])

    def point_at(self, color: Color, ordinal: int) -> Point:
        xs, ys = self.class_coords(color)
        if not 0 <= ordinal < len(xs):
            raise ValueError(f"ordinal {ordinal} out of range for {color.value} class of size {len(xs)}")
        return int(xs[ordinal]), int(ys[ordinal])

    def grid_structure(self) -> GridStructure:
        return _grid_structure(self.m, self.n)


def _adjacency(G: GridGraph, source: Color) -> np.ndarray:
    """Dense 0/1 matrix with rows indexed by the other color, columns by ``source``."""
    target = source.other
    ords = G._ordinals
    out = np.zeros((G.class_size(target), G.class_size(source)), dtype=np.uint8)
    for x, y in G.points(target):
        row = ords[x, y]
        for nb in G.neighbors((x, y)):
            out[row, ords[nb]] = 1
    return out


@lru_cache(maxsize=256)
def build_bw(G: GridGraph) -> Gf2Matrix:
    """n_w x n_b black-to-white adjacency matrix."""
    return Gf2Matrix.from_dense(_adjacency(G, Color.BLACK))


@lru_cache(maxsize=256)
def build_wb(G: GridGraph) -> Gf2Matrix:
    """n_b x n_w white-to-black adjacency matrix."""
    return Gf2Matrix.from_dense(_adjacency(G, Color.WHITE))


def adjacency_for(G: GridGraph, polarity: Color) -> Gf2Matrix:
    """The matrix whose kernel holds the harmonic functions supported on ``polarity``."""
    return build_bw(G) if polarity is Color.BLACK else build_wb(G)


def grid_lines(length: int, c: int) -> list[int]:
    """Coordinates k(c+1) - 1 inside [0, length)."""
    return list(range(c, length, c + 1))


@lru_cache(maxsize=1024)
def _grid_structure(m: int, n: int) -> GridStructure:
    c = gcd(m + 1, n + 1) - 1
    xs, ys = set(grid_lines(m, c)), set(grid_lines(n, c))
    pts = frozenset((x, y) for x in range(m) for y in range(n) if x in xs or y in ys)
    if c == 0:
        return GridStructure(0, pts, ())
    squares = tuple(
        (ox, oy)
        for oy in range(0, n, c + 1)
        for ox in range(0, m, c + 1)
    )
    return GridStructure(c, pts, squares)


def grid_structure(G: GridGraph) -> GridStructure:
    return _grid_structure(G.m, G.n)
