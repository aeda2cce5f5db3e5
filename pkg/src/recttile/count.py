"""Counting, enumeration and the cross-method verification harness.

The public API speaks in rectangle side lengths (p, q); the underlying point
graph is (p + 1) x (q + 1).
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from . import gf2
from .bijection import DEFAULT_CAP, CapExceeded, phi, verify_bijection
from .grid import Color, GridGraph, adjacency_for
from .harmonic import (
    PolarizedVector,
    check_symmetries,
    is_kernel,
    kernel_basis_elimination,
    kernel_basis_structured,
    kernel_basis_transfer,
    kernel_dims_closed_form,
    kernel_vectors,
    square_kernel_dims,
    spans_equal,
)
from .tiling import Tiling, check_lemmas

# white tilings come first in every enumeration
POLARITY_ORDER = (Color.WHITE, Color.BLACK)


def _graph(p: int, q: int) -> GridGraph:
    if p < 1 or q < 1:
        raise ValueError(f"rectangle sides must be nonzero integers, got {p} x {q}")
    return GridGraph.for_rectangle(p, q)


def c_value(p: int, q: int) -> int:
    _graph(p, q)
    return gcd(p + 2, q + 2) - 1


def count_tilings(p: int, q: int) -> int:
    G = _graph(p, q)
    beta, omega = kernel_dims_closed_form(G.m, G.n)
    return 2**beta + 2**omega - 2


def enumerate_kernel(p: int, q: int, cap: int = DEFAULT_CAP) -> list[PolarizedVector]:
    """Nonzero kernel vectors, white first, each in binary counting order over its basis."""
    G = _graph(p, q)
    beta, omega = kernel_dims_closed_form(G.m, G.n)
    if max(beta, omega) > cap:
        raise CapExceeded({"beta": beta, "omega": omega}, cap)
    out: list[PolarizedVector] = []
    for pol in POLARITY_ORDER:
        out.extend(kernel_vectors(kernel_basis_elimination(G, pol)))
    return out


def enumerate_tilings(p: int, q: int, cap: int = DEFAULT_CAP) -> list[Tiling]:
    return [phi(u) for u in enumerate_kernel(p, q, cap)]


# -- verification harness ----------------------------------------------------

@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "ok": self.ok}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class CaseResult:
    width: int
    height: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {"width": self.width, "height": self.height, "ok": self.ok,
                "checks": [c.to_dict() for c in self.checks]}


@dataclass
class VerifyReport:
    max_side: int
    dims_only: bool
    cases: list[CaseResult]
    squares: list[CheckResult]
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases) and all(s.ok for s in self.squares)

    def failures(self) -> list[str]:
        out = [f"{c.width}x{c.height} {chk.name}: {chk.detail}" for c in self.cases for chk in c.checks if not chk.ok]
        out += [f"square {s.name}: {s.detail}" for s in self.squares if not s.ok]
        return out

    def to_dict(self) -> dict:
        return {
            "max_side": self.max_side,
            "dims_only": self.dims_only,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "failures": self.failures(),
            "cases": [c.to_dict() for c in self.cases],
            "squares": [s.to_dict() for s in self.squares],
        }


def _check_counts(p: int, q: int) -> CheckResult:
    G = _graph(p, q)
    beta = gf2.nullity(adjacency_for(G, Color.BLACK))
    omega = gf2.nullity(adjacency_for(G, Color.WHITE))
    expected = 2**beta + 2**omega - 2
    got = count_tilings(p, q)
    ok = got == expected and kernel_dims_closed_form(G.m, G.n) == (beta, omega)
    detail = "" if ok else f"closed form {got} vs elimination 2^{beta} + 2^{omega} - 2 = {expected}"
    return CheckResult("count", ok, detail)


def _check_symmetries(p: int, q: int) -> CheckResult:
    G = _graph(p, q)
    for pol in Color:
        for v in kernel_basis_elimination(G, pol):
            if not is_kernel(v):
                return CheckResult("symmetry", False, f"{pol.value} basis vector not harmonic")
            rep = check_symmetries(v)
            if not rep.ok:
                return CheckResult("symmetry", False, f"{pol.value} basis vector violates at {rep.violations[:6]}")
    return CheckResult("symmetry", True)


def _check_methods(p: int, q: int) -> CheckResult:
    G = _graph(p, q)
    for pol in Color:
        elim = kernel_basis_elimination(G, pol)
        for name, other in (("transfer", kernel_basis_transfer(G, pol)),
                            ("structured", kernel_basis_structured(G, pol))):
            if not all(is_kernel(v) for v in other):
                return CheckResult("methods", False, f"{name} {pol.value} basis has a non-harmonic vector")
            if not spans_equal(elim, other, G, pol):
                return CheckResult("methods", False, f"{name} {pol.value} span differs from elimination")
    return CheckResult("methods", True)


def _check_bijection(p: int, q: int, cap: int) -> CheckResult:
    G = _graph(p, q)
    total = 0
    for pol in Color:
        if len(kernel_basis_elimination(G, pol)) > cap:
            return CheckResult("bijection", True, f"skipped: {pol.value} kernel above cap {cap}")
    for pol in Color:
        rep = verify_bijection(G, pol, cap)
        if not rep.ok:
            return CheckResult("bijection", False, rep.failures[0])
        total += rep.tilings
        for u in kernel_vectors(kernel_basis_elimination(G, pol)):
            problems = check_lemmas(u)
            if problems:
                return CheckResult("bijection", False, f"support {u.support()}: {problems[0]}")
    if total != count_tilings(p, q):
        return CheckResult("bijection", False, f"enumerated {total} tilings, closed form {count_tilings(p, q)}")
    return CheckResult("bijection", True)


def _verify_case(args: tuple[int, int, bool, int]) -> CaseResult:
    p, q, dims_only, cap = args
    case = CaseResult(p, q, [_check_counts(p, q)])
    if not dims_only:
        case.checks.append(_check_symmetries(p, q))
        case.checks.append(_check_methods(p, q))
        case.checks.append(_check_bijection(p, q, cap))
    return case


def check_square(c: int) -> CheckResult:
    """Elimination nullities of the c x c graph against the square formula."""
    S = GridGraph.square(c)
    got = (gf2.nullity(adjacency_for(S, Color.BLACK)), gf2.nullity(adjacency_for(S, Color.WHITE)))
    want = square_kernel_dims(c)
    ok = got == want
    return CheckResult(str(c), ok, "" if ok else f"elimination {got} vs formula {want}")


def verify_all(
    max_side: int,
    dims_only: bool = False,
    square_max: int = 64,
    bijection_cap: int = 10,
    workers: int = 1,
) -> VerifyReport:
    """Run every check for all 1 <= p, q <= max_side and the square sweep."""
    start = time.perf_counter()
    jobs = [(p, q, dims_only, bijection_cap) for p in range(1, max_side + 1) for q in range(1, max_side + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cases = list(pool.map(_verify_case, jobs, chunksize=8))
    else:
        cases = [_verify_case(j) for j in jobs]
    squares = [check_square(c) for c in range(1, square_max + 1)]
    return VerifyReport(max_side, dims_only, cases, squares, time.perf_counter() - start)
