"""Acceptance criteria, one PASS/FAIL line each (run with ``pytest -s``).

Everything is exact integer or GF(2) arithmetic, so there are no numeric
tolerances.  Time limits are pinned as constants below.
"""
import time

import pytest

from recttile.bijection import psi, verify_bijection
from recttile.count import count_tilings, enumerate_tilings
from recttile.gf2 import nullity
from recttile.grid import Color, GridGraph, build_bw, build_wb
from recttile.harmonic import (
    check_symmetries,
    is_kernel,
    kernel_basis_elimination,
    kernel_basis_structured,
    kernel_basis_transfer,
    kernel_dim_elimination,
    kernel_dim_transfer,
    kernel_dims_closed_form,
    spans_equal,
)
from recttile.tiling import TileClass, validate_tiling

LIMIT_FIG_10x4 = 1.0
LIMIT_COUNT_SWEEP = 60.0
LIMIT_SQUARE_SWEEP = 60.0
LIMIT_BIJECTION = 120.0
LIMIT_999 = 5.0
MAX_SIDE = 30
BIJECTION_SIDE = 12
BIJECTION_DIM = 10


def report(n: int, title: str, ok: bool, detail: str) -> None:
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {title} ({detail})")
    assert ok, detail


def test_1_all_tilings_of_10x4():
    t0 = time.perf_counter()
    tilings = enumerate_tilings(10, 4)
    dt = time.perf_counter() - t0
    white = [T for T in tilings if T.color is Color.WHITE]
    black = [T for T in tilings if T.color is Color.BLACK]
    A, B = kernel_basis_elimination(GridGraph(11, 5), Color.WHITE)
    third_is_sum = len(white) == 3 and psi(white[2]) == psi(white[0]) + psi(white[1]) == A + B
    ok = (len(tilings) == 10 and len(set(tilings)) == 10 and len(white) == 3 and len(black) == 7
          and third_is_sum and all(validate_tiling(T).ok for T in tilings) and dt < LIMIT_FIG_10x4)
    report(1, "10x4 rectangle has 10 tilings", ok,
           f"white={len(white)} black={len(black)} third=A+B:{third_is_sum} {dt:.3f}s < {LIMIT_FIG_10x4}s")


def test_2_count_matches_elimination_oracle():
    t0 = time.perf_counter()
    bad = []
    for p in range(1, MAX_SIDE + 1):
        for q in range(p, MAX_SIDE + 1):
            G = GridGraph.for_rectangle(p, q)
            oracle = 2 ** nullity(build_bw(G)) + 2 ** nullity(build_wb(G)) - 2
            if count_tilings(p, q) != oracle:
                bad.append((p, q))
    dt = time.perf_counter() - t0
    report(2, "count formula equals elimination oracle", not bad and dt < LIMIT_COUNT_SWEEP,
           f"p<=q<={MAX_SIDE}, mismatches={bad[:5]}, {dt:.2f}s < {LIMIT_COUNT_SWEEP}s")


def test_3_square_dimensions():
    t0 = time.perf_counter()
    bad = []
    for c in range(1, 65):
        G = GridGraph.square(c)
        beta, omega = kernel_dim_elimination(G, Color.BLACK), kernel_dim_elimination(G, Color.WHITE)
        if 2 * beta != c + c % 2 or 2 * omega != c - c % 2:
            bad.append(c)
    dt = time.perf_counter() - t0
    report(3, "square kernel dimensions", not bad and dt < LIMIT_SQUARE_SWEEP,
           f"c=1..64, mismatches={bad}, {dt:.2f}s < {LIMIT_SQUARE_SWEEP}s")


def test_4_bijection_suite():
    t0 = time.perf_counter()
    failures, total = [], 0
    for p in range(1, BIJECTION_SIDE + 1):
        for q in range(1, BIJECTION_SIDE + 1):
            G = GridGraph.for_rectangle(p, q)
            if max(kernel_dims_closed_form(G.m, G.n)) > BIJECTION_DIM:
                continue
            for pol in Color:
                rep = verify_bijection(G, pol, cap=BIJECTION_DIM)
                total += rep.tilings
                failures += [f"{p}x{q} {pol.value}: {f}" for f in rep.failures]
    dt = time.perf_counter() - t0
    report(4, "psi(phi(u)) == u, distinct valid tilings", not failures and dt < LIMIT_BIJECTION,
           f"{total} tilings, {len(failures)} failures {failures[:3]}, {dt:.2f}s < {LIMIT_BIJECTION}s")


def test_5_symmetry_suite():
    bad, n = [], 0
    for p in range(1, MAX_SIDE + 1):
        for q in range(1, MAX_SIDE + 1):
            G = GridGraph.for_rectangle(p, q)
            for pol in Color:
                for v in kernel_basis_elimination(G, pol):
                    n += 1
                    if not (is_kernel(v) and check_symmetries(v).ok):
                        bad.append((p, q, pol.value))
    report(5, "basis vectors harmonic and symmetric", not bad, f"{n} vectors, violations={bad[:5]}")


def test_6_method_agreement():
    bad, n = [], 0
    for p in range(1, MAX_SIDE + 1):
        for q in range(1, MAX_SIDE + 1):
            G = GridGraph.for_rectangle(p, q)
            for pol in Color:
                n += 1
                e = kernel_basis_elimination(G, pol)
                if not (spans_equal(e, kernel_basis_transfer(G, pol), G, pol)
                        and spans_equal(e, kernel_basis_structured(G, pol), G, pol)):
                    bad.append((p, q, pol.value))
    report(6, "elimination, transfer and structured spans agree", not bad, f"{n} cases, mismatches={bad[:5]}")


def test_7_transfer_999():
    G = GridGraph(999, 999)
    t0 = time.perf_counter()
    dims = (kernel_dim_transfer(G, Color.BLACK), kernel_dim_transfer(G, Color.WHITE))
    dt = time.perf_counter() - t0
    ok = dims == kernel_dims_closed_form(999, 999) and dt < LIMIT_999
    report(7, "999x999 transfer dimension", ok, f"beta,omega={dims}, {dt:.3f}s < {LIMIT_999}s")


def test_8_desk_cases():
    unit = enumerate_tilings(1, 1)
    cuts = sorted(tuple(sorted(t.vertices)) for T in unit for t in T.tiles)
    unit_ok = (count_tilings(1, 1) == 2 and len(unit) == 2
               and all([t.cls for t in T.tiles] == [TileClass.TRIANGLE] * 2 for T in unit)
               and len(set(cuts)) == 4)
    empty_ok = count_tilings(1, 2) == 0 and enumerate_tilings(1, 2) == []
    (white,) = [T for T in enumerate_tilings(2, 2) if T.color is Color.WHITE]
    classes = sorted(t.cls.value for t in white.tiles)
    square_ok = classes == ["tilted_square"] + ["triangle"] * 4
    report(8, "desk cases 1x1, 1x2, 2x2 white", unit_ok and empty_ok and square_ok,
           f"1x1={unit_ok} 1x2={empty_ok} 2x2 white={classes}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
