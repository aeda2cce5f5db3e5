"""JSON, SVG and ASCII forms of tilings and harmonic functions.

JSON tiling::

    {"width": p, "height": q, "color": "black"|"white",
     "tiles": [{"vertices": [[x, y], ...], "class": "...",
                "params": {"a": 1, "b": 2}, "dashed": [i, ...]}, ...]}

Vertices are counterclockwise starting at the smallest (x, y); side i runs
from vertex i to vertex i + 1.  ``params`` only carries the parameters the
class uses.

JSON vector: ``{"width", "height", "polarity", "rows"}`` where ``rows`` lists
the bit strings of the point graph from the top row (y = height) down to
y = 0, each read left to right in x.

SVG: 32 px per unit, 16 px margin, y axis flipped to screen coordinates,
dashed sides drawn with a dash pattern, fill color by tile class.
"""
from __future__ import annotations

import json

import numpy as np

from .grid import Color, GridGraph
from .harmonic import PolarizedVector
from .tiling import Tile, TileClass, Tiling

UNIT = 32
MARGIN = 16

FILL = {
    TileClass.OCTAGON: "#8fb8de",
    TileClass.HEXAGON: "#a7d3a6",
    TileClass.AXIS_SQUARE: "#f2c57c",
    TileClass.TILTED_SQUARE: "#e89f9f",
    TileClass.TRAPEZOID: "#c9b3e6",
    TileClass.TRIANGLE: "#f3e6a0",
}


def tile_to_dict(t: Tile) -> dict:
    params = {k: v for k, v in (("a", t.a), ("b", t.b)) if v is not None}
    return {
        "vertices": [[x, y] for x, y in t.vertices],
        "class": t.cls.value,
        "params": params,
        "dashed": sorted(t.dashed),
    }


def tile_from_dict(d: dict) -> Tile:
    params = d.get("params", {})
    return Tile(
        tuple((int(x), int(y)) for x, y in d["vertices"]),
        TileClass(d["class"]),
        a=params.get("a"),
        b=params.get("b"),
        dashed=frozenset(int(i) for i in d.get("dashed", [])),
    )


def tiling_to_dict(T: Tiling) -> dict:
    return {
        "width": T.width,
        "height": T.height,
        "color": T.color.value,
        "tiles": [tile_to_dict(t) for t in T.tiles],
    }


def tiling_from_dict(d: dict) -> Tiling:
    return Tiling(int(d["width"]), int(d["height"]), Color(d["color"]),
                  tuple(tile_from_dict(t) for t in d["tiles"]))


def tiling_to_json(T: Tiling) -> str:
    return json.dumps(tiling_to_dict(T), indent=2)


def tiling_from_json(text: str) -> Tiling:
    return tiling_from_dict(json.loads(text))


def vector_to_dict(v: PolarizedVector) -> dict:
    rows = ["".join("1" if v.values[x, y] else "0" for x in range(v.m)) for y in reversed(range(v.n))]
    return {"width": v.m - 1, "height": v.n - 1, "polarity": v.polarity.value, "rows": rows}


def vector_from_dict(d: dict) -> PolarizedVector:
    G = GridGraph(int(d["width"]) + 1, int(d["height"]) + 1)
    rows = d["rows"]
    if len(rows) != G.n or any(len(r) != G.m for r in rows):
        raise ValueError(f"bit grid does not match a {G.m} x {G.n} graph")
    vals = np.zeros((G.m, G.n), dtype=bool)
    for i, row in enumerate(rows):
        y = G.n - 1 - i
        for x, ch in enumerate(row):
            if ch not in "01":
                raise ValueError(f"bad bit {ch!r} in row {i}")
            vals[x, y] = ch == "1"
    return PolarizedVector(G.m, G.n, Color(d["polarity"]), vals)


def _screen(T: Tiling, x: int, y: int) -> tuple[int, int]:
    return MARGIN + x * UNIT, MARGIN + (T.height - y) * UNIT


def tiling_to_svg(T: Tiling) -> str:
    w = 2 * MARGIN + T.width * UNIT
    h = 2 * MARGIN + T.height * UNIT
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>',
    ]
    for t in T.tiles:
        pts = " ".join("%d,%d" % _screen(T, x, y) for x, y in t.vertices)
        out.append(f'<polygon class="{t.cls.value}" points="{pts}" fill="{FILL[t.cls]}" stroke="none"/>')
    for t in T.tiles:
        for i, (a, b) in enumerate(t.sides):
            (x1, y1), (x2, y2) = _screen(T, *a), _screen(T, *b)
            if i in t.dashed:
                style = 'stroke="#777777" stroke-width="2" stroke-dasharray="6,4"'
            else:
                style = 'stroke="#000000" stroke-width="2"'
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def tiling_to_ascii(T: Tiling) -> str:
    """Half-unit character grid: '+' lattice points, active sides drawn, dashed sides dotted."""
    W, H = 2 * T.width + 1, 2 * T.height + 1
    canvas = [[" "] * W for _ in range(H)]
    for y in range(T.height + 1):
        for x in range(T.width + 1):
            canvas[2 * y][2 * x] = "+"
    for t in T.tiles:
        for i, (a, b) in enumerate(t.sides):
            dashed = i in t.dashed
            dx, dy = b[0] - a[0], b[1] - a[1]
            k = max(abs(dx), abs(dy))
            sx, sy = (dx > 0) - (dx < 0), (dy > 0) - (dy < 0)
            for s in range(k):
                px, py = a[0] + s * sx, a[1] + s * sy
                cx, cy = 2 * px + sx, 2 * py + sy
                if sy == 0:
                    ch = "." if dashed else "-"
                elif sx == 0:
                    ch = ":" if dashed else "|"
                else:
                    ch = "/" if sx == sy else "\\"
                canvas[cy][cx] = ch
    return "\n".join("".join(row).rstrip() for row in reversed(canvas)) + "\n"


def manifest_dict(width: int, height: int, entries: list[dict]) -> dict:
    return {"width": width, "height": height, "count": len(entries), "tilings": entries}
