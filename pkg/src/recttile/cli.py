"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bijection import DEFAULT_CAP, CapExceeded, phi
from .count import POLARITY_ORDER, c_value, count_tilings, verify_all
from .grid import Color, GridGraph
from .harmonic import (
    kernel_basis_elimination,
    kernel_basis_structured,
    kernel_basis_transfer,
    kernel_dims_closed_form,
    kernel_vectors,
    spans_equal,
)
from .render import manifest_dict, tiling_to_ascii, tiling_to_json, tiling_to_svg, vector_to_dict

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

METHODS = {
    "elim": kernel_basis_elimination,
    "transfer": kernel_basis_transfer,
    "structured": kernel_basis_structured,
}
RENDER = {"svg": tiling_to_svg, "json": tiling_to_json, "ascii": tiling_to_ascii}
EXT = {"svg": "svg", "json": "json", "ascii": "txt"}


class UsageError(Exception):
    pass


def _sides(args) -> tuple[int, int]:
    if args.width < 1 or args.height < 1:
        raise UsageError(f"rectangle sides must be positive integers, got {args.width} x {args.height}")
    return args.width, args.height


def cmd_count(args) -> int:
    p, q = _sides(args)
    G = GridGraph.for_rectangle(p, q)
    beta, omega = kernel_dims_closed_form(G.m, G.n)
    n = count_tilings(p, q)
    c = c_value(p, q)
    if args.json:
        print(json.dumps({"width": p, "height": q, "c": c, "beta": beta, "omega": omega, "count": n}))
    else:
        print(f"tilings({p}×{q}) = {n}  [c={c}, beta={beta}, omega={omega}]")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    p, q = _sides(args)
    G = GridGraph.for_rectangle(p, q)
    beta, omega = kernel_dims_closed_form(G.m, G.n)
    if max(beta, omega) > args.cap:
        print(f"error: {CapExceeded({'beta': beta, 'omega': omega}, args.cap)}", file=sys.stderr)
        return EXIT_CAP
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    render = RENDER[args.format]
    entries = []
    for pol in POLARITY_ORDER:
        for i, u in enumerate(kernel_vectors(kernel_basis_elimination(G, pol))):
            T = phi(u)
            name = f"tiling_{pol.value}_{i}.{EXT[args.format]}"
            (out / name).write_text(render(T))
            entries.append({
                "file": name,
                "color": pol.value,
                "index": i,
                "tiles": T.counts(),
                "vector": vector_to_dict(u),
            })
    (out / "manifest.json").write_text(json.dumps(manifest_dict(p, q, entries), indent=2) + "\n")
    print(f"wrote {len(entries)} tilings of the {p}x{q} rectangle to {out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_side < 1:
        raise UsageError("--max-side must be positive")
    rep = verify_all(args.max_side, dims_only=args.dims_only, square_max=args.square_max,
                     bijection_cap=args.bijection_cap, workers=args.workers)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        n_checks = sum(len(c.checks) for c in rep.cases) + len(rep.squares)
        for line in rep.failures():
            print(f"FAIL {line}")
        status = "ok" if rep.ok else "FAILED"
        print(f"verify max_side={args.max_side} dims_only={args.dims_only}: "
              f"{n_checks} checks, {len(rep.failures())} failures, {rep.seconds:.1f}s -> {status}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_kernel(args) -> int:
    p, q = _sides(args)
    G = GridGraph.for_rectangle(p, q)
    pol = Color(args.polarity)
    basis = METHODS[args.method](G, pol)
    doc = {
        "width": p,
        "height": q,
        "polarity": pol.value,
        "method": args.method,
        "dimension": len(basis),
        "basis": [vector_to_dict(v) for v in basis],
    }
    if args.compare:
        doc["spans_equal"] = all(spans_equal(basis, f(G, pol), G, pol) for f in METHODS.values())
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="recttile", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def sides(sp):
        sp.add_argument("--width", type=int, required=True, help="rectangle side P (graph has P+1 columns)")
        sp.add_argument("--height", type=int, required=True, help="rectangle side Q (graph has Q+1 rows)")

    sp = sub.add_parser("count", help="number of tilings of a P x Q rectangle")
    sides(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="write every tiling to files plus a manifest")
    sides(sp)
    sp.add_argument("--out-dir", default="tilings")
    sp.add_argument("--format", choices=sorted(RENDER), default="svg")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest kernel dimension to enumerate")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="run the verification harness")
    sp.add_argument("--max-side", type=int, required=True)
    sp.add_argument("--dims-only", action="store_true", help="only compare closed-form counts with elimination")
    sp.add_argument("--square-max", type=int, default=64)
    sp.add_argument("--bijection-cap", type=int, default=10)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("kernel", help="print a kernel basis as bit grids")
    sides(sp)
    sp.add_argument("--polarity", choices=[c.value for c in Color], required=True)
    sp.add_argument("--method", choices=sorted(METHODS), default="elim")
    sp.add_argument("--compare", action="store_true", help="also report whether all methods span the same kernel")
    sp.set_defaults(func=cmd_kernel)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
