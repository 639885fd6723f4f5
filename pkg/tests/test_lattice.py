import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexid.lattice import (
    Line,
    Vertex,
    ball,
    ball_row_segment,
    bfs_distance,
    bfs_distances_from,
    distance,
    even_row_targets,
    l1_distance,
    line_distance,
    neighbors,
    odd_row_targets,
)

coord = st.integers(-20, 20)
vertex = st.builds(Vertex, coord, coord)


def test_neighbors_examples():
    assert neighbors((0, 0)) == [(-1, 0), (1, 0), (0, 1)]
    assert neighbors((1, 0)) == [(0, 0), (2, 0), (1, -1)]
    assert neighbors((-3, 5)) == [(-4, 5), (-2, 5), (-3, 6)]


@given(vertex)
def test_adjacency_is_symmetric(v):
    for w in neighbors(v):
        assert v in neighbors(w)


def test_l1_examples():
    assert l1_distance((0, 0), (3, 2)) == 5
    assert l1_distance((0, 0), (0, 0)) == 0
    assert l1_distance((-1, 4), (2, -1)) == 8


def test_bfs_examples():
    assert bfs_distance((0, 0), (1, 0)) == 1
    assert bfs_distance((0, 0), (3, 2)) == 5
    assert bfs_distance((0, 0), (0, 3)) == 5


def test_bfs_path_of_length_five_exists():
    path = [(0, 0), (0, 1), (1, 1), (1, 2), (0, 2), (0, 3)]
    for a, b in zip(path, path[1:]):
        assert b in neighbors(a)


def test_distance_examples():
    assert distance((0, 0), (5, -5)) == 10
    assert distance((0, 0), (0, 3)) == 5
    # the grid is bipartite: an odd taxicab offset forces an odd distance
    assert distance((1, 0), (1, 3)) == bfs_distance((1, 0), (1, 3)) == 7


@pytest.mark.parametrize("base", [(0, 0), (1, 0), (0, 1), (1, 1), (-7, 4), (6, -9)])
def test_distance_matches_single_source_bfs(base):
    dist = bfs_distances_from(base, 24)
    for dy in range(-20, 21):
        for dx in range(-20, 21):
            v = (base[0] + dx, base[1] + dy)
            assert distance(base, v) == dist[v], v


@settings(max_examples=200, deadline=None)
@given(vertex, st.integers(-12, 12), st.integers(-12, 12))
def test_distance_matches_pairwise_bfs(u, dx, dy):
    v = (u.x + dx, u.y + dy)
    assert distance(u, v) == bfs_distance(u, v)


@given(vertex, vertex)
def test_subgraph_and_taxicab_bounds(u, v):
    assert distance(u, v) >= l1_distance(u, v)
    if abs(u.x - v.x) >= abs(u.y - v.y):
        assert distance(u, v) == l1_distance(u, v)


@given(vertex, vertex, vertex)
def test_metric_axioms(u, v, w):
    assert distance(u, v) == distance(v, u)
    assert (distance(u, v) == 0) == (u == v)
    assert distance(u, w) <= distance(u, v) + distance(v, w)
    assert distance(u, v) % 2 == l1_distance(u, v) % 2


def test_line_distance_examples():
    assert line_distance((0, 0), Line(3)) == 5
    assert line_distance((1, 0), Line(3)) == 6
    assert line_distance((0, 4), Line(1)) == 6
    assert line_distance((5, 2), 2) == 0


def test_line_distance_is_min_over_line():
    for k in range(-12, 13):
        for a in range(-12, 13):
            for b in range(-12, 13):
                reach = 2 * abs(a - b) + 1
                best = min(distance((k, a), (x, b)) for x in range(k - reach, k + reach + 1))
                assert line_distance((k, a), b) == best


def test_ball_examples():
    assert ball((0, 0), 1) == {(0, 0), (-1, 0), (1, 0), (0, 1)}
    # cubic graph of girth 6: 1 + 3 + 6
    assert len(ball((0, 0), 2)) == 10
    for r in range(1, 12):
        assert not any(w.y == r + 1 for w in ball((0, 0), r))


@pytest.mark.parametrize("center", [(0, 0), (1, 0), (3, -2)])
@pytest.mark.parametrize("r", [1, 2, 5, 8])
def test_ball_matches_bfs(center, r):
    dist = bfs_distances_from(center, 2 * r + 2)
    assert ball(center, r) == {v for v, d in dist.items() if d <= r}


def test_ball_zero_is_center():
    assert ball((4, 4), 0) == {(4, 4)}


def test_even_row_targets_examples():
    up, down = even_row_targets((0, 0), 1)
    assert set(up) | set(down) == {(-1, 1), (1, 1), (-1, -1), (1, -1)}
    up, _ = even_row_targets((2, 3), 2)
    assert up == [(0, 5), (2, 5), (4, 5)]
    up, down = even_row_targets((0, 0), 3)
    assert all(bfs_distance((0, 0), w) <= 6 for w in up + down)


def test_odd_row_targets_examples():
    short, long = odd_row_targets((0, 0), 1)
    assert short == [(-1, 2), (1, 2)]
    assert long == [(-2, -1), (0, -1), (2, -1)]
    short, long = odd_row_targets((1, 0), 1)
    assert short == [(0, -2), (2, -2)]
    assert long == [(-1, 1), (1, 1), (3, 1)]
    short, long = odd_row_targets((0, 0), 4)
    assert all(bfs_distance((0, 0), w) <= 9 for w in short + long)


def test_targets_reject_nonpositive_k():
    with pytest.raises(ValueError):
        even_row_targets((0, 0), 0)
    with pytest.raises(ValueError):
        odd_row_targets((0, 0), 0)


def test_ball_row_segment_examples():
    seg = ball_row_segment((0, 0), Line(0), 3)
    assert seg == [(x, 0) for x in range(-3, 4)]
    seg = ball_row_segment((0, 0), Line(2), 5)
    assert seg == [(x, 2) for x in range(-3, 4)]
    seg = ball_row_segment((4, 1), Line(0), 4)
    assert all(bfs_distance((4, 1), w) <= 4 for w in seg)


def test_ball_row_segment_precondition():
    with pytest.raises(ValueError):
        ball_row_segment((0, 0), Line(3), 5)


@pytest.mark.parametrize("k", range(1, 11))
def test_target_families_inside_balls(k):
    for v in [(0, 0), (1, 0), (0, 1), (1, 1)]:
        up, down = even_row_targets(v, k)
        assert set(up + down) <= ball(v, 2 * k)
        short, long = odd_row_targets(v, k)
        assert set(short + long) <= ball(v, 2 * k + 1)


def test_segments_inside_balls():
    for x in range(-10, 11):
        for y in range(-10, 11):
            for r in range(1, 11):
                b = ball((x, y), r)
                for k in range(y - r, y + r + 1):
                    if line_distance((x, y), k) < r:
                        assert set(ball_row_segment((x, y), k, r)) <= b
