import numpy as np
import pytest

from recttile.grid import Color, GridGraph, build_bw, build_wb, grid_structure


def test_color():
    G = GridGraph(6, 6)
    assert G.color((0, 0)) is Color.BLACK
    assert G.color((1, 0)) is Color.WHITE
    assert G.color((3, 5)) is Color.BLACK
    with pytest.raises(ValueError):
        G.color((6, 0))


def test_neighbors_order():
    G = GridGraph(3, 3)
    assert len(G.neighbors((1, 1))) == 4
    assert G.neighbors((0, 0)) == [(1, 0), (0, 1)]
    assert G.neighbors((1, 0)) == [(2, 0), (1, 1), (0, 0)]
    with pytest.raises(ValueError):
        G.neighbors((-1, 0))


def test_point_index():
    assert GridGraph(4, 7).point_index((0, 0)) == (Color.BLACK, 0)
    assert GridGraph(2, 5).point_index((1, 0)) == (Color.WHITE, 0)
    assert GridGraph(3, 3).point_index((2, 0)) == (Color.BLACK, 1)


def test_needs_nontrivial_sides():
    with pytest.raises(ValueError):
        GridGraph(1, 4)


@pytest.mark.parametrize("m", range(2, 21))
@pytest.mark.parametrize("n", range(2, 21, 3))
def test_index_round_trip_and_counts(m, n):
    G = GridGraph(m, n)
    assert G.n_b == (m * n + 1) // 2 and G.n_w == m * n // 2
    for color in Color:
        pts = G.points(color)
        assert len(pts) == G.class_size(color)
        for k, p in enumerate(pts):
            assert G.point_index(p) == (color, k)
            assert G.point_at(color, k) == p


def test_bipartite():
    G = GridGraph(7, 4)
    for p in G.points():
        assert all(G.color(q) is not G.color(p) for q in G.neighbors(p))


def test_bw_2x2():
    assert build_bw(GridGraph(2, 2)).to_dense().tolist() == [[1, 1], [1, 1]]


def test_bw_3x3():
    M = build_bw(GridGraph(3, 3)).to_dense()
    assert M.shape == (4, 5)
    assert M.sum(axis=1).tolist() == [3, 3, 3, 3]


@pytest.mark.parametrize("m", range(2, 11))
@pytest.mark.parametrize("n", range(2, 11))
def test_wb_is_transpose_and_degrees(m, n):
    G = GridGraph(m, n)
    bw, wb = build_bw(G), build_wb(G)
    assert wb == bw.transpose()
    dense = bw.to_dense()
    for k, p in enumerate(G.points(Color.WHITE)):
        assert dense[k].sum() == len(G.neighbors(p))
    for k, p in enumerate(G.points(Color.BLACK)):
        assert dense[:, k].sum() == len(G.neighbors(p))


def test_grid_structure_examples():
    s = grid_structure(GridGraph(14, 9))
    assert s.c == 4
    assert len(s.squares) == 3 * 2
    assert all(len(s.square_points(o)) == 16 for o in s.squares)
    assert grid_structure(GridGraph(8, 5)).c == 2
    s = grid_structure(GridGraph(4, 3))
    assert s.c == 0 and s.squares == ()
    assert len(s.grid_points) == 12


def test_grid_structure_partition():
    for m in range(2, 61):
        for n in range(2, 61):
            s = grid_structure(GridGraph(m, n))
            square_pts = [p for o in s.squares for p in s.square_points(o)]
            assert len(s.grid_points) + s.c * s.c * len(s.squares) == m * n
            assert not set(square_pts) & s.grid_points
            assert len(set(square_pts)) == len(square_pts)
            assert all(0 <= x < m and 0 <= y < n for x, y in square_pts)


def test_fundamental_squares_touch_no_grid_line():
    s = grid_structure(GridGraph(14, 9))
    grid = s.grid_points
    for o in s.squares:
        assert not set(s.square_points(o)) & grid
