import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recttile import gf2
from recttile.gf2 import Gf2Matrix, Gf2Vector, add, matvec, nullspace_basis, rank
from recttile.grid import Color, GridGraph, build_bw, build_wb


def brute_kernel(dense: np.ndarray) -> set[tuple[int, ...]]:
    cols = dense.shape[1]
    out = set()
    for bits in itertools.product((0, 1), repeat=cols):
        if not (dense @ np.array(bits, dtype=np.int64) % 2).any():
            out.add(bits)
    return out


def span(vectors, length):
    out = {tuple([0] * length)}
    for v in vectors:
        arr = tuple(int(b) for b in v)
        out |= {tuple(a ^ b for a, b in zip(s, arr)) for s in out}
    return out


@st.composite
def matrices(draw, max_rows=64, max_cols=64):
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(1, max_cols))
    density = draw(st.sampled_from([0.05, 0.2, 0.5, 0.9]))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    return (rng.random((rows, cols)) < density).astype(np.uint8)


def test_matvec_identity():
    v = Gf2Vector.from_bits([1, 0, 1])
    assert matvec(Gf2Matrix.identity(3), v) == v


def test_matvec_zero_matrix():
    v = Gf2Vector.from_bits([1, 1, 0])
    assert matvec(Gf2Matrix.zeros(2, 3), v) == Gf2Vector.from_bits([0, 0])


def test_matvec_bw_2x2_all_black():
    # whites (1,0), (0,1) each see both black corners: 1 + 1 = 0
    G = GridGraph(2, 2)
    assert matvec(build_bw(G), Gf2Vector.from_bits([1, 1])).is_zero()


def test_matvec_dimension_error_names_both():
    with pytest.raises(ValueError, match="3 columns.*length 2"):
        matvec(Gf2Matrix.identity(3), Gf2Vector.from_bits([1, 0]))


def test_matvec_agrees_with_dense():
    rng = np.random.default_rng(7)
    dense = (rng.random((37, 130)) < 0.3).astype(np.uint8)
    M = Gf2Matrix.from_dense(dense)
    for _ in range(20):
        x = (rng.random(130) < 0.5).astype(np.uint8)
        expected = dense.astype(np.int64) @ x % 2
        assert list(matvec(M, Gf2Vector.from_bits(x))) == expected.tolist()


@pytest.mark.parametrize("n", [1, 5, 64, 65, 130])
def test_rank_identity(n):
    assert rank(Gf2Matrix.identity(n)) == n


def test_rank_zero():
    assert rank(Gf2Matrix.zeros(4, 9)) == 0


def test_rank_bw_5x5():
    M = build_bw(GridGraph(5, 5))
    assert rank(M) == M.cols - 3


def test_nullspace_identity_empty():
    assert nullspace_basis(Gf2Matrix.identity(6)) == []


def test_nullspace_zero_is_standard_basis():
    basis = nullspace_basis(Gf2Matrix.zeros(2, 3))
    assert basis == [Gf2Vector.unit(3, i) for i in range(3)]


def test_nullspace_wb_3x3_all_ones():
    M = build_wb(GridGraph(3, 3))
    basis = nullspace_basis(M)
    assert basis == [Gf2Vector.from_bits([1, 1, 1, 1])]
    assert brute_kernel(M.to_dense()) == {(0, 0, 0, 0), (1, 1, 1, 1)}


def test_nullspace_is_canonical_rref_completion():
    dense = np.array([[1, 1, 0, 1], [0, 0, 1, 1]], dtype=np.uint8)
    basis = nullspace_basis(Gf2Matrix.from_dense(dense))
    # free columns 1 and 3
    assert basis == [Gf2Vector.from_bits([1, 1, 0, 0]), Gf2Vector.from_bits([1, 0, 1, 1])]


def test_add_basics():
    u = Gf2Vector.from_bits([1, 0, 1, 1])
    assert add(u, u).is_zero()
    assert add(u, Gf2Vector.zeros(4)) == u
    with pytest.raises(ValueError, match="mismatch"):
        add(u, Gf2Vector.zeros(3))


def test_add_white_kernel_11x5():
    G = GridGraph(11, 5)
    A, B = nullspace_basis(build_wb(G))
    s = A + B
    assert not s.is_zero() and s != A and s != B
    assert matvec(build_wb(G), s).is_zero()


def test_bits_past_length_ignored():
    assert Gf2Vector(3, 0b1111) == Gf2Vector(3, 0b0111)
    assert hash(Gf2Vector(3, 0b1111)) == hash(Gf2Vector(3, 0b0111))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(dense):
    M = Gf2Matrix.from_dense(dense)
    basis = nullspace_basis(M)
    assert rank(M) + len(basis) == M.cols
    for b in basis:
        assert matvec(M, b).is_zero()
    assert gf2.span_rank(basis, M.cols) == len(basis)


@settings(max_examples=80, deadline=None)
@given(matrices(max_rows=12, max_cols=10))
def test_nullspace_matches_brute_force(dense):
    M = Gf2Matrix.from_dense(dense)
    assert span(nullspace_basis(M), M.cols) == brute_kernel(dense)


@settings(max_examples=80, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_nullspace_row_permutation_invariant(dense, rnd):
    perm = list(range(dense.shape[0]))
    rnd.shuffle(perm)
    a = nullspace_basis(Gf2Matrix.from_dense(dense))
    b = nullspace_basis(Gf2Matrix.from_dense(dense[perm]))
    assert gf2.same_span(a, b, dense.shape[1])
    # the reduced form is unique, so the canonical basis is too
    assert a == b


@given(st.integers(1, 200).flatmap(lambda n: st.tuples(
    st.integers(0, 2**n - 1), st.integers(0, 2**n - 1), st.just(n))))
def test_add_commutative_and_nilpotent(args):
    x, y, n = args
    u, v = Gf2Vector(n, x), Gf2Vector(n, y)
    assert add(u, v) == add(v, u)
    assert add(u, u) == Gf2Vector.zeros(n)


def test_solve():
    M = Gf2Matrix.from_dense([[1, 1, 0], [0, 1, 1]])
    x = gf2.solve(M, Gf2Vector.from_bits([1, 0]))
    assert matvec(M, x) == Gf2Vector.from_bits([1, 0])
    Z = Gf2Matrix.from_dense([[1, 1], [1, 1]])
    assert gf2.solve(Z, Gf2Vector.from_bits([1, 0])) is None
