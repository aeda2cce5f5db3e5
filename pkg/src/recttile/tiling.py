"""Geometry of the splitting induced by a harmonic function.

All coordinates are integers.  Faces of the splitting are found on a refined
raster: every unit cell is cut by both diagonals into four quarter triangles
(south, east, north, west), so every possible segment runs along quarter
triangle edges.  Internally points are doubled so cell centers are integral.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .grid import STEPS, Color, Point
from .harmonic import PolarizedVector, residual_points

# direction index in units of pi/4, counterclockwise from east
DIRECTIONS: dict[Point, int] = {
    (1, 0): 0, (1, 1): 1, (0, 1): 2, (-1, 1): 3,
    (-1, 0): 4, (-1, -1): 5, (0, -1): 6, (1, -1): 7,
}

S, E, N, W = range(4)


class GeometryError(ValueError):
    """A splitting or tile that cannot come from a kernel element."""


class ClassificationError(GeometryError):
    def __init__(self, message: str, polygon: Sequence[Point]):
        self.polygon = tuple(polygon)
        super().__init__(f"{message}: {list(self.polygon)}")


class SegmentKind(enum.Enum):
    AXIS = "axis"
    DIAGONAL = "diagonal"


@dataclass(frozen=True, order=True)
class Segment:
    a: Point
    b: Point
    kind: SegmentKind = field(compare=False)

    @classmethod
    def between(cls, p: Point, q: Point) -> Segment:
        a, b = sorted((p, q))
        dx, dy = b[0] - a[0], b[1] - a[1]
        if (abs(dx), abs(dy)) in ((2, 0), (0, 2)):
            kind = SegmentKind.AXIS
        elif abs(dx) == abs(dy) == 1:
            kind = SegmentKind.DIAGONAL
        else:
            raise GeometryError(f"{p}-{q} is neither an axis segment of length 2 nor a unit diagonal")
        if (a[0] + a[1]) % 2 != (b[0] + b[1]) % 2:
            raise GeometryError(f"segment {p}-{q} joins points of different colors")
        return cls(a, b, kind)

    def unit_steps(self) -> list[tuple[Point, Point]]:
        return list(unit_pieces(self.a, self.b))


def unit_pieces(a: Point, b: Point) -> Iterable[tuple[Point, Point]]:
    """Split a straight axis or diagonal run into unit pieces, each sorted."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    k = max(abs(dx), abs(dy))
    sx, sy = (dx > 0) - (dx < 0), (dy > 0) - (dy < 0)
    for t in range(k):
        p = (a[0] + t * sx, a[1] + t * sy)
        q = (p[0] + sx, p[1] + sy)
        yield (p, q) if p < q else (q, p)


def active_points(u: PolarizedVector) -> set[Point]:
    return set(u.support())


def _require_kernel(u: PolarizedVector) -> None:
    bad = residual_points(u)
    if bad:
        raise ValueError(f"not a kernel element: odd neighbor sums at {bad[:8]}")


def active_adjacency(u: PolarizedVector) -> set[Segment]:
    """Segments between active points sharing an opposite-color neighbor w.

    A pair at a right angle through w gives a diagonal; a collinear pair gives
    an axis segment only when it is all of w's active neighbors.
    """
    _require_kernel(u)
    if u.is_zero():
        raise ValueError("active adjacency needs a nonzero kernel element")
    segs: set[Segment] = set()
    other = u.polarity.other.parity
    for x in range(u.m):
        for y in range(u.n):
            if (x + y) % 2 != other:
                continue
            act = [(x + dx, y + dy) for dx, dy in STEPS if u[x + dx, y + dy]]
            if not act:
                continue
            for i in range(len(act)):
                for j in range(i + 1, len(act)):
                    p, q = act[i], act[j]
                    collinear = p[0] == q[0] or p[1] == q[1]
                    if not collinear:
                        segs.add(Segment.between(p, q))
                    elif len(act) == 2:
                        segs.add(Segment.between(p, q))
    return segs


class SegmentCover:
    """Which unit pieces of the rectangle are covered by segments."""

    def __init__(self, segments: Iterable[Segment]):
        self.pieces: set[tuple[Point, Point]] = set()
        for s in segments:
            for piece in s.unit_steps():
                if piece in self.pieces:
                    raise GeometryError(f"segments overlap along {piece}")
                self.pieces.add(piece)

    def is_active(self, a: Point, b: Point) -> bool:
        """True for fully covered sides, False for uncovered ones; mixed sides raise."""
        pieces = list(unit_pieces(a, b))
        hit = sum(p in self.pieces for p in pieces)
        if 0 < hit < len(pieces):
            raise GeometryError(f"mixed side {a}-{b}: {hit} of {len(pieces)} unit pieces active")
        return hit == len(pieces)


@dataclass(frozen=True)
class Chunk:
    """Convex polygon, counterclockwise, starting at its smallest vertex."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", canonical_cycle(self.vertices))

    @property
    def sides(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def area2(self) -> int:
        return polygon_area2(self.vertices)


def polygon_area2(vertices: Sequence[Point]) -> int:
    """Twice the signed area."""
    total = 0
    k = len(vertices)
    for i in range(k):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % k]
        total += x0 * y1 - x1 * y0
    return total


def canonical_cycle(vertices: Sequence[Point]) -> tuple[Point, ...]:
    vs = [(int(x), int(y)) for x, y in vertices]
    if len(vs) >= 3 and polygon_area2(vs) < 0:
        vs.reverse()
    if not vs:
        return ()
    i = vs.index(min(vs))
    return tuple(vs[i:] + vs[:i])


def _merge_collinear(cycle: list[Point]) -> list[Point]:
    out = list(cycle)
    changed = True
    while changed and len(out) > 3:
        changed = False
        for i in range(len(out)):
            a, b, c = out[i - 1], out[i], out[(i + 1) % len(out)]
            if (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]) == 0:
                del out[i]
                changed = True
                break
    return out


def _triangle_edges(x: int, y: int, k: int) -> list[tuple[Point, Point]]:
    """CCW edges of quarter triangle k of cell (x, y), in doubled coordinates."""
    c = (2 * x + 1, 2 * y + 1)
    corners = [(2 * x, 2 * y), (2 * x + 2, 2 * y), (2 * x + 2, 2 * y + 2), (2 * x, 2 * y + 2)]
    a, b = corners[k], corners[(k + 1) % 4]
    return [(a, b), (b, c), (c, a)]


def split(segments: Iterable[Segment], rect: tuple[int, int]) -> list[Chunk]:
    """Closures of the connected components of int(R) minus the segments."""
    p, q = rect
    if p < 1 or q < 1:
        raise ValueError(f"rectangle sides must be positive, got {rect}")
    segments = list(segments)
    main, anti = set(), set()  # cells cut by (x,y)-(x+1,y+1) / (x+1,y)-(x,y+1)
    hcut, vcut = set(), set()  # unit edges (x,y)-(x+1,y) / (x,y)-(x,y+1), keyed by (x,y)
    for s in segments:
        for a, b in s.unit_steps():
            if not (0 <= a[0] <= p and 0 <= a[1] <= q and 0 <= b[0] <= p and 0 <= b[1] <= q):
                raise GeometryError(f"segment {s.a}-{s.b} leaves the rectangle")
            if a[1] == b[1]:
                hcut.add(a)
            elif a[0] == b[0]:
                vcut.add(a)
            elif b[1] > a[1]:
                main.add(a)
            else:
                anti.add((a[0], b[1]))
    crossed = main & anti
    if crossed:
        raise GeometryError(f"crossing diagonals in cells {sorted(crossed)}")
    axis_mid = {}
    for s in segments:
        if s.kind is SegmentKind.AXIS:
            mid = ((s.a[0] + s.b[0]) // 2, (s.a[1] + s.b[1]) // 2)
            horizontal = s.a[1] == s.b[1]
            if mid in axis_mid and axis_mid[mid] != horizontal:
                raise GeometryError(f"axis segments cross at {mid}")
            axis_mid[mid] = horizontal

    label = np.full((p, q, 4), -1, dtype=np.int64)

    def links(x, y, k):
        # (neighbor triangle, blocked?) across each edge, same order as _triangle_edges
        if k == S:
            outer = ((x, y - 1, N), (x, y) in hcut) if y > 0 else None
            return [outer, ((x, y, E), (x, y) in anti), ((x, y, W), (x, y) in main)]
        if k == E:
            outer = ((x + 1, y, W), (x + 1, y) in vcut) if x < p - 1 else None
            return [outer, ((x, y, N), (x, y) in main), ((x, y, S), (x, y) in anti)]
        if k == N:
            outer = ((x, y + 1, S), (x, y + 1) in hcut) if y < q - 1 else None
            return [outer, ((x, y, W), (x, y) in anti), ((x, y, E), (x, y) in main)]
        outer = ((x - 1, y, E), (x, y) in vcut) if x > 0 else None
        return [outer, ((x, y, S), (x, y) in main), ((x, y, N), (x, y) in anti)]

    faces: list[list[tuple[int, int, int]]] = []
    for start in np.ndindex(p, q, 4):
        if label[start] >= 0:
            continue
        fid = len(faces)
        label[start] = fid
        members = [start]
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for link in links(*t):
                if link is None or link[1]:
                    continue
                nb = link[0]
                if label[nb] < 0:
                    label[nb] = fid
                    members.append(nb)
                    queue.append(nb)
        faces.append(members)

    # a cut with the same face on both sides is a dangling slit
    for t in np.ndindex(p, q, 4):
        for link in links(*t):
            if link is not None and link[1] and label[link[0]] == label[t]:
                raise GeometryError(f"segment piece inside a single face near cell {t[:2]}")

    chunks = []
    for fid, members in enumerate(faces):
        nxt: dict[Point, Point] = {}
        for t in members:
            for (a, b), link in zip(_triangle_edges(*t), links(*t)):
                if link is not None and label[link[0]] == fid:
                    continue
                if a in nxt:
                    raise GeometryError(f"face {fid} is pinched at {(a[0] / 2, a[1] / 2)}")
                nxt[a] = b
        start = min(nxt)
        cycle = [start]
        cur = nxt[start]
        while cur != start:
            cycle.append(cur)
            cur = nxt[cur]
        if len(cycle) != len(nxt):
            raise GeometryError(f"face {fid} has a hole or several boundary cycles")
        merged = _merge_collinear(cycle)
        if any(x % 2 or y % 2 for x, y in merged):
            raise GeometryError(f"face {fid} has a vertex off the integer lattice")
        chunks.append(Chunk(tuple((x // 2, y // 2) for x, y in merged)))
    return chunks


class TileClass(enum.Enum):
    OCTAGON = "octagon"
    HEXAGON = "hexagon"
    AXIS_SQUARE = "axis_square"
    TILTED_SQUARE = "tilted_square"
    TRAPEZOID = "trapezoid"
    TRIANGLE = "triangle"


@dataclass(frozen=True, order=True)
class Tile:
    vertices: tuple[Point, ...]
    cls: TileClass = field(compare=False)
    a: int | None = field(default=None, compare=False)
    b: int | None = field(default=None, compare=False)
    dashed: frozenset[int] = field(default=frozenset(), compare=False)

    @property
    def chunk(self) -> Chunk:
        return Chunk(self.vertices)

    @property
    def sides(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def key(self):
        return (self.vertices, self.cls.value, self.a, self.b, tuple(sorted(self.dashed)))

    def __eq__(self, other):
        if not isinstance(other, Tile):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def _direction(a: Point, b: Point, polygon) -> tuple[int, int, bool]:
    """(direction index, length in units of 1 or sqrt 2, is_axis)."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx == 0 or dy == 0:
        length = abs(dx) + abs(dy)
        if length == 0:
            raise ClassificationError("repeated vertex", polygon)
        return DIRECTIONS[((dx > 0) - (dx < 0), (dy > 0) - (dy < 0))], length, True
    if abs(dx) != abs(dy):
        raise ClassificationError(f"side {a}-{b} is neither axis-parallel nor diagonal", polygon)
    return DIRECTIONS[((dx > 0) - (dx < 0), (dy > 0) - (dy < 0))], abs(dx), False


def on_boundary_line(a: Point, b: Point, rect: tuple[int, int]) -> bool:
    p, q = rect
    return (a[0] == b[0] and a[0] in (0, p)) or (a[1] == b[1] and a[1] in (0, q))


@dataclass
class _Shape:
    vertices: tuple[Point, ...]
    dirs: list[int]
    lengths: list[int]
    axis: list[bool]
    # interior angle at vertex i (between side i-1 and side i), in units of pi/4
    angles: list[int]


def _shape(vertices: Sequence[Point]) -> _Shape:
    k = len(vertices)
    if k < 3:
        raise ClassificationError("fewer than three vertices", vertices)
    if polygon_area2(vertices) <= 0:
        raise ClassificationError("polygon is not counterclockwise", vertices)
    dirs, lengths, axis = [], [], []
    for i in range(k):
        d, length, is_axis = _direction(vertices[i], vertices[(i + 1) % k], vertices)
        dirs.append(d)
        lengths.append(length)
        axis.append(is_axis)
    turns = [(dirs[i] - dirs[i - 1]) % 8 for i in range(k)]
    if any(t not in (1, 2, 3) for t in turns) or sum(turns) != 8:
        raise ClassificationError("polygon is not convex with angles pi/4, pi/2, 3pi/4", vertices)
    return _Shape(tuple(vertices), dirs, lengths, axis, [4 - t for t in turns])


def classify_chunk(ch: Chunk, rect: tuple[int, int], active: Callable[[Point, Point], bool]) -> Tile:
    """Match a chunk against the tile catalog; dashed sides are the inactive ones.

    ``active(a, b)`` reports whether side a-b carries segments.  Raises
    ClassificationError for anything outside the catalog.
    """
    poly = ch.vertices
    sh = _shape(poly)
    k = len(poly)
    sides = ch.sides
    inactive = {i for i, (a, b) in enumerate(sides) if not active(a, b)}
    for i in inactive:
        if not on_boundary_line(*sides[i], rect):
            raise ClassificationError(f"inactive side {i} is not on the boundary", poly)
    angles = sh.angles
    p, q = rect

    def require(cond: bool, msg: str):
        if not cond:
            raise ClassificationError(msg, poly)

    def axis_sides_have_length_2():
        require(all(sh.lengths[i] == 2 for i in range(k) if sh.axis[i]), "active axis side of length != 2")

    if k == 3:
        require(sorted(angles) == [1, 1, 2], "triangle is not right isosceles")
        r = angles.index(2)
        legs = {(r - 1) % 3, r}
        hyp = (r + 1) % 3
        corner = poly[r]
        require(corner[0] in (0, p) and corner[1] in (0, q), "right angle away from a corner of the rectangle")
        require(inactive == legs, "triangle legs must be exactly the dashed sides")
        require(not sh.axis[hyp], "hypotenuse is not diagonal")
        return Tile(poly, TileClass.TRIANGLE, a=sh.lengths[r], dashed=frozenset(inactive))

    if k == 4 and angles == [2, 2, 2, 2]:
        require(not inactive, "square with a dashed side")
        if all(sh.axis) and all(length == 2 for length in sh.lengths):
            return Tile(poly, TileClass.AXIS_SQUARE)
        if not any(sh.axis) and all(length == 1 for length in sh.lengths):
            return Tile(poly, TileClass.TILTED_SQUARE)
        raise ClassificationError("rectangle that is neither the 2x2 square nor the unit tilted square", poly)

    if k == 4 and sorted(angles) == [1, 1, 3, 3]:
        # the two sharp angles must share the long base
        sharp = [i for i in range(4) if angles[i] == 1]
        require(sharp[1] - sharp[0] in (1, 3), "parallelogram, not a trapezoid")
        # side i runs from vertex i to vertex i+1; base joins the two sharp vertices
        base = sharp[0] if (sharp[0] + 1) % 4 == sharp[1] else sharp[1]
        top = (base + 2) % 4
        legs = [(base + 1) % 4, (base + 3) % 4]
        require(sh.axis[base] and sh.axis[top], "trapezoid bases must be axis-parallel")
        require(not sh.axis[legs[0]] and not sh.axis[legs[1]], "trapezoid legs must be diagonal")
        require(inactive == {base}, "trapezoid must have exactly its long base dashed")
        require(sh.lengths[top] == 2, "trapezoid short base must have length 2")
        a = sh.lengths[legs[0]]
        require(sh.lengths[legs[1]] == a and sh.lengths[base] == 2 + 2 * a, "trapezoid is not isosceles")
        return Tile(poly, TileClass.TRAPEZOID, a=a, dashed=frozenset(inactive))

    if k == 5:
        raise ClassificationError("pentagonal chunk", poly)
    if k == 7:
        raise ClassificationError("heptagonal chunk", poly)

    if k == 6:
        require(sorted(angles) == [2, 2, 3, 3, 3, 3], "hexagon angles are not four 3pi/4 and two pi/2")
        right = [i for i in range(6) if angles[i] == 2]
        require((right[1] - right[0]) % 6 not in (1, 5), "adjacent right angles in a hexagon")
        require(not inactive, "hexagon with a dashed side")
        for r in right:
            require(sh.axis[r] and sh.axis[(r - 1) % 6], "right angle between diagonal sides")
        axis_sides_have_length_2()
        diag = [sh.lengths[i] for i in range(6) if not sh.axis[i]]
        require(len(diag) == 2 and diag[0] == diag[1], "hexagon diagonal sides differ")
        return Tile(poly, TileClass.HEXAGON, a=diag[0])

    if k == 8:
        require(all(angle == 3 for angle in angles), "octagon with an angle other than 3pi/4")
        require(not inactive, "octagon with a dashed side")
        axis_sides_have_length_2()
        ne = [sh.lengths[i] for i in range(8) if sh.dirs[i] in (1, 5)]
        nw = [sh.lengths[i] for i in range(8) if sh.dirs[i] in (3, 7)]
        require(ne[0] == ne[1] and nw[0] == nw[1], "octagon opposite diagonal sides differ")
        return Tile(poly, TileClass.OCTAGON, a=ne[0], b=nw[0])

    raise ClassificationError(f"no tile with {k} sides and angles {angles}", poly)


@dataclass(frozen=True)
class Tiling:
    width: int
    height: int
    color: Color
    tiles: tuple[Tile, ...]

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(sorted(self.tiles)))

    @property
    def rect(self) -> tuple[int, int]:
        return self.width, self.height

    def key(self):
        return (self.width, self.height, self.color.value, tuple(t.key() for t in self.tiles))

    def __eq__(self, other):
        if not isinstance(other, Tiling):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for t in self.tiles:
            out[t.cls.value] = out.get(t.cls.value, 0) + 1
        return out


@dataclass
class TilingReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _quarter_centroids(p: int, q: int) -> np.ndarray:
    """Centroids of all quarter triangles, scaled by 6 to stay integral."""
    xs, ys = np.meshgrid(np.arange(p), np.arange(q), indexing="ij")
    xs, ys = xs.ravel() * 6, ys.ravel() * 6
    offsets = [(3, 1), (5, 3), (3, 5), (1, 3)]
    return np.concatenate([np.stack([xs + ox, ys + oy], axis=1) for ox, oy in offsets])


def _inside_convex(pts: np.ndarray, vertices: Sequence[Point], scale: int) -> np.ndarray:
    inside = np.ones(len(pts), dtype=bool)
    k = len(vertices)
    for i in range(k):
        ax, ay = vertices[i][0] * scale, vertices[i][1] * scale
        bx, by = vertices[(i + 1) % k][0] * scale, vertices[(i + 1) % k][1] * scale
        inside &= (bx - ax) * (pts[:, 1] - ay) - (by - ay) * (pts[:, 0] - ax) > 0
    return inside


def validate_tiling(T: Tiling) -> TilingReport:
    """Cover, integrality, vertex colors, dashed placement and tile shapes."""
    rep = TilingReport()
    p, q = T.rect
    if p < 1 or q < 1:
        rep.violations.append(f"rectangle {p} x {q} has a zero side")
        return rep
    corners = {(0, 0), (p, 0), (0, q), (p, q)}
    for ti, tile in enumerate(T.tiles):
        vs = tile.vertices
        if not all(isinstance(c, (int, np.integer)) for v in vs for c in v):
            rep.violations.append(f"tile {ti}: non-integral vertex in {vs}")
            continue
        if any(not (0 <= x <= p and 0 <= y <= q) for x, y in vs):
            rep.violations.append(f"tile {ti}: vertex outside the rectangle in {vs}")
        for v in vs:
            if v not in corners and Color.of(*v) is not T.color:
                rep.violations.append(f"tile {ti}: vertex {v} is not {T.color.value}")
        for i in sorted(tile.dashed):
            if not 0 <= i < len(vs):
                rep.violations.append(f"tile {ti}: dashed index {i} out of range")
            elif not on_boundary_line(*tile.sides[i], T.rect):
                rep.violations.append(f"tile {ti}: dashed side {i} {tile.sides[i]} not on the boundary")
        try:
            again = classify_chunk(Chunk(vs), T.rect, _dashed_predicate(tile))
        except GeometryError as exc:
            rep.violations.append(f"tile {ti}: {exc}")
        else:
            if again != tile:
                rep.violations.append(f"tile {ti}: recorded as {tile.key()} but shape is {again.key()}")
    area2 = sum(abs(polygon_area2(t.vertices)) for t in T.tiles)
    if area2 != 2 * p * q:
        rep.violations.append(f"tile areas sum to {area2 / 2}, rectangle area is {p * q}")
    pts = _quarter_centroids(p, q)
    hits = np.zeros(len(pts), dtype=np.int64)
    for tile in T.tiles:
        hits += _inside_convex(pts, tile.vertices, 6)
    if np.any(hits == 0):
        i = int(np.flatnonzero(hits == 0)[0])
        rep.violations.append(f"uncovered region near {tuple(pts[i] / 6)}")
    if np.any(hits > 1):
        i = int(np.flatnonzero(hits > 1)[0])
        rep.violations.append(f"overlapping tiles near {tuple(pts[i] / 6)}")
    return rep


def _dashed_predicate(tile: Tile) -> Callable[[Point, Point], bool]:
    dashed_sides = {tile.sides[i] for i in tile.dashed if 0 <= i < len(tile.vertices)}
    return lambda a, b: (a, b) not in dashed_sides


def _orient(a: Point, b: Point, c: Point) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a: Point, b: Point, c: Point) -> bool:
    return min(a[0], b[0]) <= c[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])


def segments_meet(s: Segment, t: Segment) -> bool:
    """Closed segments share at least one point."""
    a, b, c, d = s.a, s.b, t.a, t.b
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return (
        (o1 == 0 and _on_segment(a, b, c)) or (o2 == 0 and _on_segment(a, b, d))
        or (o3 == 0 and _on_segment(c, d, a)) or (o4 == 0 and _on_segment(c, d, b))
    )


def bad_crossings(segments: Iterable[Segment]) -> list[tuple[Segment, Segment]]:
    """Pairs meeting anywhere other than at one shared endpoint."""
    buckets: dict[Point, list[Segment]] = {}
    for s in segments:
        for x in range(min(s.a[0], s.b[0]), max(s.a[0], s.b[0]) + 1):
            for y in range(min(s.a[1], s.b[1]), max(s.a[1], s.b[1]) + 1):
                buckets.setdefault((x, y), []).append(s)
    bad = set()
    for group in buckets.values():
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                s, t = sorted((group[i], group[j]))
                if (s, t) in bad or not segments_meet(s, t):
                    continue
                shared = {s.a, s.b} & {t.a, t.b}
                if len(shared) == 1:
                    (e,) = shared
                    fs = s.b if s.a == e else s.a
                    ft = t.b if t.a == e else t.a
                    ds = (fs[0] - e[0], fs[1] - e[1])
                    dt = (ft[0] - e[0], ft[1] - e[1])
                    # one shared endpoint is fine unless the two overlap beyond it
                    if ds[0] * dt[1] - ds[1] * dt[0] != 0 or ds[0] * dt[0] + ds[1] * dt[1] < 0:
                        continue
                bad.add((s, t))
    return sorted(bad)


def check_lemmas(u: PolarizedVector) -> list[str]:
    """Machine-checkable consequences of the splitting lemmas for one kernel element."""
    problems: list[str] = []
    segs = active_adjacency(u)
    rect = (u.m - 1, u.n - 1)
    p, q = rect
    for s, t in bad_crossings(segs):
        problems.append(f"segments {s.a}-{s.b} and {t.a}-{t.b} cross")
    incident: dict[Point, list[int]] = {pt: [] for pt in active_points(u)}
    for s in segs:
        for e, f in ((s.a, s.b), (s.b, s.a)):
            d = ((f[0] > e[0]) - (f[0] < e[0]), (f[1] > e[1]) - (f[1] < e[1]))
            incident[e].append(DIRECTIONS[d])
    for pt, dirs in sorted(incident.items()):
        corner = pt[0] in (0, p) and pt[1] in (0, q)
        if not corner and len(dirs) < 2:
            problems.append(f"active point {pt} has {len(dirs)} incident segments")
        interior = 0 < pt[0] < p and 0 < pt[1] < q
        if interior and dirs:
            ds = sorted(dirs)
            sectors = [(ds[(i + 1) % len(ds)] - ds[i]) % 8 or 8 for i in range(len(ds))]
            if len(ds) not in (2, 3, 4) or any(sct not in (2, 3, 4) for sct in sectors):
                problems.append(f"star at {pt} has directions {ds}")
    if problems:
        return problems
    cover = SegmentCover(segs)
    for ch in split(segs, rect):
        try:
            classify_chunk(ch, rect, cover.is_active)
        except GeometryError as exc:
            problems.append(str(exc))
            continue
        sh = _shape(ch.vertices)
        if sum(a == 1 for a in sh.angles) % 2:
            problems.append(f"odd number of pi/4 angles in {ch.vertices}")
        for (a, b), is_axis, length in zip(ch.sides, sh.axis, sh.lengths):
            if is_axis and not on_boundary_line(a, b, rect) and length != 2:
                problems.append(f"interior axis side {a}-{b} of length {length}")
    return problems
