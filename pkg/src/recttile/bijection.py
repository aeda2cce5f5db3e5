"""Harmonic functions to tilings and back."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .grid import STEPS, Color, GridGraph, Point
from .harmonic import (
    PolarizedVector,
    kernel_basis_elimination,
    kernel_vectors,
    residual_points,
)
from .tiling import (
    SegmentCover,
    Tiling,
    active_adjacency,
    classify_chunk,
    split,
    unit_pieces,
    validate_tiling,
)

DEFAULT_CAP = 20


class CapExceeded(RuntimeError):
    def __init__(self, dims: dict[str, int], cap: int):
        self.dims = dims
        self.cap = cap
        shown = ", ".join(f"{k}={v}" for k, v in dims.items())
        super().__init__(f"kernel dimension exceeds enumeration cap {cap} ({shown})")


def phi(u: PolarizedVector) -> Tiling:
    """The tiling cut out by the active segments of a nonzero kernel element."""
    if u.is_zero():
        raise ValueError("phi is defined on nonzero kernel elements only")
    bad = residual_points(u)
    if bad:
        raise ValueError(f"not a kernel element: odd neighbor sums at {bad[:8]}")
    rect = (u.m - 1, u.n - 1)
    segments = active_adjacency(u)
    cover = SegmentCover(segments)
    tiles = [classify_chunk(ch, rect, cover.is_active) for ch in split(segments, rect)]
    return Tiling(rect[0], rect[1], u.polarity, tuple(tiles))


def psi(T: Tiling) -> PolarizedVector:
    """Mark every point of the tiling's color lying on a non-dashed side.

    The result is checked to be harmonic rather than assumed so.
    """
    report = validate_tiling(T)
    if not report.ok:
        raise ValueError(f"invalid tiling: {report.violations[:4]}")
    G = GridGraph(T.width + 1, T.height + 1)
    active: set[Point] = set()
    for tile in T.tiles:
        for i, (a, b) in enumerate(tile.sides):
            if i in tile.dashed:
                continue
            for s, t in unit_pieces(a, b):
                for pt in (s, t):
                    if Color.of(*pt) is T.color:
                        active.add(pt)
    u = PolarizedVector.from_points(G, T.color, active)
    if u.is_zero():
        raise ValueError("tiling has no active side; the recovered vector is zero")
    bad = residual_points(u)
    if bad:
        raise ValueError(f"recovered vector is not harmonic: odd neighbor sums at {bad}")
    return u


class Neighborhood(enum.Enum):
    """Active neighbors of a point of the opposite color."""

    TRIVIAL = "trivial"
    INTERIOR_RIGHT_ANGLE = "interior_right_angle"  # (1)
    INTERIOR_FOUR = "interior_four"  # (2)
    INTERIOR_COLLINEAR = "interior_collinear"  # (3)
    SIDE_ALONG = "side_along"  # (4) both active points on the boundary line
    SIDE_RIGHT_ANGLE = "side_right_angle"  # (5) one on the boundary, one inward
    CORNER = "corner"  # (6)


def active_neighborhood(u: PolarizedVector, w: Point) -> Neighborhood:
    G = u.graph
    if G.color(w) is u.polarity:
        raise ValueError(f"{w} has the vector's own color {u.polarity.value}")
    nbs = G.neighbors(w)
    act = [p for p in nbs if u[p]]
    if not act:
        return Neighborhood.TRIVIAL
    if len(act) % 2:
        raise ValueError(f"odd number of active neighbors at {w}: not a kernel element")
    if len(nbs) == 2:
        return Neighborhood.CORNER
    if len(nbs) == 3:
        a, b = act
        if a[0] == b[0] or a[1] == b[1]:
            return Neighborhood.SIDE_ALONG
        return Neighborhood.SIDE_RIGHT_ANGLE
    if len(act) == 4:
        return Neighborhood.INTERIOR_FOUR
    a, b = act
    if a[0] == b[0] or a[1] == b[1]:
        return Neighborhood.INTERIOR_COLLINEAR
    return Neighborhood.INTERIOR_RIGHT_ANGLE


def neighborhoods(u: PolarizedVector) -> dict[Point, Neighborhood]:
    G = u.graph
    return {w: active_neighborhood(u, w) for w in G.points(u.polarity.other)}


def _check_cap(G: GridGraph, dims: dict[str, int], cap: int) -> None:
    if max(dims.values(), default=0) > cap:
        raise CapExceeded(dims, cap)


@dataclass
class BijectionReport:
    m: int
    n: int
    polarity: Color
    dimension: int
    tilings: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_bijection(G: GridGraph, polarity: Color, cap: int = DEFAULT_CAP) -> BijectionReport:
    """Round-trip every nonzero kernel vector through phi and psi."""
    basis = kernel_basis_elimination(G, polarity)
    _check_cap(G, {polarity.value: len(basis)}, cap)
    rep = BijectionReport(G.m, G.n, polarity, len(basis))
    seen: dict[Tiling, PolarizedVector] = {}
    for u in kernel_vectors(basis):
        try:
            T = phi(u)
        except ValueError as exc:
            rep.failures.append(f"phi failed on support {u.support()}: {exc}")
            continue
        if T.color is not polarity:
            rep.failures.append(f"phi changed polarity for support {u.support()}")
        valid = validate_tiling(T)
        if not valid.ok:
            rep.failures.append(f"invalid tiling from support {u.support()}: {valid.violations[:3]}")
            continue
        if T in seen:
            rep.failures.append(f"supports {seen[T].support()} and {u.support()} give the same tiling")
        seen[T] = u
        try:
            back = psi(T)
        except ValueError as exc:
            rep.failures.append(f"psi failed for support {u.support()}: {exc}")
            continue
        if back != u:
            rep.failures.append(f"psi(phi(u)) != u for support {u.support()}")
        elif phi(back) != T:
            rep.failures.append(f"phi(psi(T)) != T for support {u.support()}")
    rep.tilings = len(seen)
    return rep
