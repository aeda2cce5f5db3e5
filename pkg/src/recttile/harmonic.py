"""Polarized Z/2-harmonic functions on the rectangular grid graph.

A polarized harmonic function is a 0/1 function supported on one color class
whose four-neighbor sum vanishes mod 2 at every point.  Three independent
routes to the kernel basis live here: dense elimination on the adjacency
matrix, column-by-column transfer from the first column, and mirroring a
fundamental-square kernel across the grid.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import gf2
from .gf2 import Gf2Matrix, Gf2Vector
from .grid import Color, GridGraph, Point, adjacency_for, grid_lines, grid_structure


@dataclass(frozen=True, eq=False)
class PolarizedVector:
    """Values on every point of an m x n graph, zero off the ``polarity`` class.

    ``values[x, y]`` is the value at point (x, y).
    """

    m: int
    n: int
    polarity: Color
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=bool)
        if vals.shape != (self.m, self.n):
            raise ValueError(f"values have shape {vals.shape}, expected {(self.m, self.n)}")
        if np.any(vals & ~polarity_mask(self.m, self.n, self.polarity)):
            raise ValueError(f"vector has support off the {self.polarity.value} class")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @classmethod
    def zeros(cls, G: GridGraph, polarity: Color) -> PolarizedVector:
        return cls(G.m, G.n, polarity, np.zeros((G.m, G.n), dtype=bool))

    @classmethod
    def from_points(cls, G: GridGraph, polarity: Color, points) -> PolarizedVector:
        vals = np.zeros((G.m, G.n), dtype=bool)
        for x, y in points:
            vals[x, y] = True
        return cls(G.m, G.n, polarity, vals)

    @classmethod
    def from_gf2(cls, G: GridGraph, polarity: Color, vec: Gf2Vector) -> PolarizedVector:
        if vec.len != G.class_size(polarity):
            raise ValueError(f"vector length {vec.len} != {polarity.value} class size {G.class_size(polarity)}")
        xs, ys = G.class_coords(polarity)
        vals = np.zeros((G.m, G.n), dtype=bool)
        vals[xs, ys] = vec.to_array().astype(bool)
        return cls(G.m, G.n, polarity, vals)

    @property
    def graph(self) -> GridGraph:
        return GridGraph(self.m, self.n)

    def to_gf2(self) -> Gf2Vector:
        xs, ys = self.graph.class_coords(self.polarity)
        return Gf2Vector.from_bits(self.values[xs, ys])

    def __getitem__(self, p: Point) -> int:
        x, y = p
        if not (0 <= x < self.m and 0 <= y < self.n):
            return 0
        return int(self.values[x, y])

    def support(self) -> list[Point]:
        """Nonzero points in row-major order."""
        ys, xs = np.nonzero(self.values.T)
        return [(int(x), int(y)) for x, y in zip(xs, ys)]

    def is_zero(self) -> bool:
        return not self.values.any()

    def transposed(self) -> PolarizedVector:
        return PolarizedVector(self.n, self.m, self.polarity, self.values.T)

    def __add__(self, other: PolarizedVector) -> PolarizedVector:
        if (self.m, self.n, self.polarity) != (other.m, other.n, other.polarity):
            raise ValueError("cannot add vectors on different graphs or polarities")
        return PolarizedVector(self.m, self.n, self.polarity, self.values ^ other.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolarizedVector):
            return NotImplemented
        return (self.m, self.n, self.polarity) == (other.m, other.n, other.polarity) and bool(
            np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.polarity, np.packbits(self.values).tobytes()))


@lru_cache(maxsize=512)
def _polarity_mask(m: int, n: int, parity: int) -> np.ndarray:
    x = np.arange(m)[:, None]
    y = np.arange(n)[None, :]
    mask = (x + y) % 2 == parity
    mask.setflags(write=False)
    return mask


def polarity_mask(m: int, n: int, polarity: Color) -> np.ndarray:
    return _polarity_mask(m, n, polarity.parity)


def neighbor_sum(values: np.ndarray) -> np.ndarray:
    """Four-neighbor sum mod 2 at every point, treating points outside as zero."""
    v = np.asarray(values, dtype=bool)
    out = np.zeros_like(v)
    out[1:, :] ^= v[:-1, :]
    out[:-1, :] ^= v[1:, :]
    out[:, 1:] ^= v[:, :-1]
    out[:, :-1] ^= v[:, 1:]
    return out


def laplacian_residual(v: PolarizedVector) -> dict[Point, int]:
    """The neighbor sum at each point of the opposite color."""
    sigma = neighbor_sum(v.values)
    mask = polarity_mask(v.m, v.n, v.polarity.other)
    return {(x, y): int(sigma[x, y]) for x in range(v.m) for y in range(v.n) if mask[x, y]}


def residual_points(v: PolarizedVector) -> list[Point]:
    sigma = neighbor_sum(v.values)
    ys, xs = np.nonzero(sigma.T)
    return [(int(x), int(y)) for x, y in zip(xs, ys)]


def is_kernel(v: PolarizedVector) -> bool:
    return not neighbor_sum(v.values).any()


def kernel_dims_closed_form(m: int, n: int) -> tuple[int, int]:
    """(dim ker BW, dim ker WB) of the m x n graph."""
    if m < 2 or n < 2:
        raise ValueError(f"graph dimensions must be >= 2, got {m} x {n}")
    c = GridGraph(m, n).c
    return (c + c % 2) // 2, (c - c % 2) // 2


def square_kernel_dims(c: int) -> tuple[int, int]:
    return (c + c % 2) // 2, (c - c % 2) // 2


# -- dense elimination -------------------------------------------------------

@lru_cache(maxsize=4096)
def _elimination_basis(G: GridGraph, polarity: Color) -> tuple[PolarizedVector, ...]:
    M = adjacency_for(G, polarity)
    return tuple(PolarizedVector.from_gf2(G, polarity, b) for b in gf2.nullspace_basis(M))


def kernel_basis_elimination(G: GridGraph, polarity: Color) -> list[PolarizedVector]:
    return list(_elimination_basis(G, polarity))


def kernel_dim_elimination(G: GridGraph, polarity: Color) -> int:
    return gf2.nullity(adjacency_for(G, polarity))


# -- first-column transfer ---------------------------------------------------

class InconsistentSeed(ValueError):
    """Propagating a first-column seed left nonzero residuals past the last column."""

    def __init__(self, rows: Sequence[int]):
        self.rows = list(rows)
        super().__init__(f"seed does not extend to a kernel vector; residual on rows {self.rows}")


def _shift_sum(col: np.ndarray) -> np.ndarray:
    out = np.zeros_like(col)
    out[1:] ^= col[:-1]
    out[:-1] ^= col[1:]
    return out


def propagate_first_column(seed: Sequence[int], G: GridGraph, polarity: Color) -> PolarizedVector:
    """Extend column x = 0 to the unique function with zero neighbor sums on columns 0..m-2.

    Raises InconsistentSeed (carrying the offending rows) when the sums on the
    last column do not vanish.
    """
    seed_arr = np.asarray(seed, dtype=np.uint8)
    if seed_arr.shape != (G.n,):
        raise ValueError(f"seed must have length n = {G.n}, got shape {seed_arr.shape}")
    if np.any(seed_arr > 1):
        raise ValueError("seed entries must be 0 or 1")
    off = [j for j in range(G.n) if seed_arr[j] and j % 2 != polarity.parity]
    if off:
        raise ValueError(f"seed has {polarity.other.value} positions set in column 0: rows {off}")
    vals = np.zeros((G.m, G.n), dtype=bool)
    prev = np.zeros(G.n, dtype=bool)
    cur = seed_arr.astype(bool)
    for x in range(G.m):
        vals[x] = cur
        prev, cur = cur, prev ^ _shift_sum(cur)
    if cur.any():
        raise InconsistentSeed(np.flatnonzero(cur).tolist())
    return PolarizedVector(G.m, G.n, polarity, vals)


def _seed_rows(n: int, polarity: Color) -> list[int]:
    return list(range(polarity.parity, n, 2))


def _pack_seed_matrix(seed_bits: np.ndarray) -> np.ndarray:
    """(n, k) 0/1 -> (n, words) uint64 with seed k at bit k."""
    return gf2.pack_rows(seed_bits)


def _propagate_packed(seeds: np.ndarray, m: int, keep: bool):
    """Run the column recurrence on packed seed words.

    Returns (columns or None, residual past the last column).
    """
    prev = np.zeros_like(seeds)
    cur = seeds.copy()
    store = np.empty((m,) + seeds.shape, dtype=np.uint64) if keep else None
    for x in range(m):
        if keep:
            store[x] = cur
        nxt = prev.copy()
        nxt[1:] ^= cur[:-1]
        nxt[:-1] ^= cur[1:]
        prev, cur = cur, nxt
    return store, cur


def _closure_matrix(G: GridGraph, polarity: Color) -> Gf2Matrix:
    rows = _seed_rows(G.n, polarity)
    unit = np.zeros((G.n, len(rows)), dtype=np.uint8)
    unit[rows, np.arange(len(rows))] = 1
    _, residual = _propagate_packed(_pack_seed_matrix(unit), G.m, keep=False)
    return Gf2Matrix(G.n, len(rows), residual)


def _short_side_first(G: GridGraph) -> tuple[GridGraph, bool]:
    # propagate along the longer side so columns stay short; transposing keeps colors
    if G.n > G.m:
        return G.transposed(), True
    return G, False


def kernel_dim_transfer(G: GridGraph, polarity: Color) -> int:
    H, _ = _short_side_first(G)
    closure = _closure_matrix(H, polarity)
    return closure.cols - gf2.rank(closure)


def kernel_basis_transfer(G: GridGraph, polarity: Color) -> list[PolarizedVector]:
    H, flipped = _short_side_first(G)
    closure = _closure_matrix(H, polarity)
    combos = gf2.nullspace_basis(closure)
    if not combos:
        return []
    rows = _seed_rows(H.n, polarity)
    seed_bits = np.zeros((H.n, len(combos)), dtype=np.uint8)
    for t, combo in enumerate(combos):
        seed_bits[rows, t] = combo.to_array()
    store, residual = _propagate_packed(_pack_seed_matrix(seed_bits), H.m, keep=True)
    assert not residual.any()
    basis = []
    for t in range(len(combos)):
        word, bit = divmod(t, gf2.WORD)
        vals = ((store[:, :, word] >> np.uint64(bit)) & np.uint64(1)).astype(bool)
        v = PolarizedVector(H.m, H.n, polarity, vals)
        basis.append(v.transposed() if flipped else v)
    return basis


# -- mirrored fundamental squares ---------------------------------------------

@lru_cache(maxsize=256)
def square_kernel_basis(c: int, polarity: Color) -> tuple[np.ndarray, ...]:
    """Elimination basis of the c x c square graph, as (c, c) bool arrays."""
    S = GridGraph.square(c)
    M = adjacency_for(S, polarity)
    xs, ys = S.class_coords(polarity)
    out = []
    for b in gf2.nullspace_basis(M):
        vals = np.zeros((c, c), dtype=bool)
        vals[xs, ys] = b.to_array().astype(bool)
        vals.setflags(write=False)
        out.append(vals)
    return tuple(out)


def mirror_index(length: int, c: int) -> np.ndarray:
    """Local square coordinate for each global coordinate, -1 on grid lines.

    Squares alternate orientation so neighbors are reflections across the
    grid line between them.
    """
    idx = np.full(length, -1, dtype=np.int64)
    for t in range(length):
        k, r = divmod(t, c + 1)
        if r == c:
            continue
        idx[t] = r if k % 2 == 0 else c - 1 - r
    return idx


def kernel_basis_structured(G: GridGraph, polarity: Color) -> list[PolarizedVector]:
    c = G.c
    if c == 0:
        return []
    ix = mirror_index(G.m, c)
    iy = mirror_index(G.n, c)
    on_grid = (ix[:, None] < 0) | (iy[None, :] < 0)
    basis = []
    for square in square_kernel_basis(c, polarity):
        vals = square[np.clip(ix, 0, None)[:, None], np.clip(iy, 0, None)[None, :]].copy()
        vals[on_grid] = False
        basis.append(PolarizedVector(G.m, G.n, polarity, vals))
    return basis


def spans_equal(a: Sequence[PolarizedVector], b: Sequence[PolarizedVector], G: GridGraph, polarity: Color) -> bool:
    length = G.class_size(polarity)
    return gf2.same_span([v.to_gf2() for v in a], [v.to_gf2() for v in b], length)


# -- symmetry validators -----------------------------------------------------

@dataclass(frozen=True)
class SymmetryReport:
    diagonal_ok: bool
    grid_zero_ok: bool
    mirror_ok: bool
    violations: list[Point]
    diagonal_violations: list[Point] = field(default_factory=list)
    grid_violations: list[Point] = field(default_factory=list)
    mirror_violations: list[Point] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.diagonal_ok and self.grid_zero_ok and self.mirror_ok


def _diagonal_violations(vals: np.ndarray) -> set[Point]:
    """Reflection across the 45-degree diagonal through each corner of the graph."""
    m, n = vals.shape
    bad: set[Point] = set()
    k = min(m, n)
    # the four corner squares, each brought to the lower-left by flips
    for fx in (False, True):
        for fy in (False, True):
            w = vals[::-1] if fx else vals
            w = w[:, ::-1] if fy else w
            sq = w[:k, :k]
            diff = sq != sq.T
            for i, j in zip(*np.nonzero(diff)):
                x = m - 1 - i if fx else i
                y = n - 1 - j if fy else j
                bad.add((int(x), int(y)))
    return bad


def _mirror_violations(vals: np.ndarray, c: int) -> set[Point]:
    m, n = vals.shape
    bad: set[Point] = set()
    for axis, length in ((0, m), (1, n)):
        for x0 in grid_lines(length, c):
            r = min(x0, length - 1 - x0)
            for i in range(1, r + 1):
                a = vals[x0 - i] if axis == 0 else vals[:, x0 - i]
                b = vals[x0 + i] if axis == 0 else vals[:, x0 + i]
                for t in np.flatnonzero(a != b):
                    if axis == 0:
                        bad.add((x0 - i, int(t)))
                    else:
                        bad.add((int(t), x0 - i))
    return bad


def check_symmetries(v: PolarizedVector) -> SymmetryReport:
    """Diagonal symmetry, vanishing on the grid, and mirroring across grid lines.

    Only meaningful for kernel elements; anything else is refused.
    """
    bad = residual_points(v)
    if bad:
        raise ValueError(f"not a kernel element: odd neighbor sums at {bad[:8]}")
    vals = v.values
    structure = grid_structure(v.graph)
    diag = sorted(_diagonal_violations(vals))
    grid = sorted(p for p in structure.grid_points if vals[p])
    mirror = sorted(_mirror_violations(vals, structure.c)) if structure.c else []
    return SymmetryReport(
        diagonal_ok=not diag,
        grid_zero_ok=not grid,
        mirror_ok=not mirror,
        violations=sorted(set(diag) | set(grid) | set(mirror)),
        diagonal_violations=diag,
        grid_violations=grid,
        mirror_violations=mirror,
    )


def kernel_vectors(basis: Sequence[PolarizedVector]):
    """Every nonzero combination of ``basis``, in binary counting order.

    The t-th vector (t = 1, 2, ...) includes basis vector j iff bit j of t is set.
    """
    k = len(basis)
    if k == 0:
        return
    stack = np.stack([b.values for b in basis])
    m, n, pol = basis[0].m, basis[0].n, basis[0].polarity
    for t in range(1, 1 << k):
        chosen = [j for j in range(k) if (t >> j) & 1]
        yield PolarizedVector(m, n, pol, np.bitwise_xor.reduce(stack[chosen], axis=0))
