"""Hex grid geometry in brick-wall coordinates.

Every integer pair ``(x, y)`` is a vertex.  Each vertex has its two
horizontal neighbours and a single vertical neighbour: up when ``x + y``
is even, down when it is odd.  The graph is bipartite on the parity of
``x + y``, so every distance has the parity of ``|dx| + |dy|``.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple


class Vertex(NamedTuple):
    x: int
    y: int


class Line(NamedTuple):
    """The horizontal line ``{(x, k) : x in Z}``."""

    k: int


class Window(NamedTuple):
    """Inclusive integer rectangle ``[x0..x1] x [y0..y1]``."""

    x0: int
    x1: int
    y0: int
    y1: int

    def validate(self) -> "Window":
        if self.x0 > self.x1 or self.y0 > self.y1:
            raise ValueError(f"malformed window {tuple(self)}")
        return self

    @property
    def width(self) -> int:
        return self.x1 - self.x0 + 1

    @property
    def height(self) -> int:
        return self.y1 - self.y0 + 1

    @property
    def area(self) -> int:
        return self.width * self.height

    def __contains__(self, v: object) -> bool:
        x, y = v  # type: ignore[misc]
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1


def neighbors(v: tuple[int, int]) -> list[Vertex]:
    """Return ``[left, right, vertical]`` neighbours of ``v``."""
    x, y = v
    vertical = Vertex(x, y + 1) if (x + y) % 2 == 0 else Vertex(x, y - 1)
    return [Vertex(x - 1, y), Vertex(x + 1, y), vertical]


def l1_distance(u: tuple[int, int], v: tuple[int, int]) -> int:
    return abs(u[0] - v[0]) + abs(u[1] - v[1])


def bfs_distance(u: tuple[int, int], v: tuple[int, int]) -> int:
    """Graph distance by breadth-first search inside a bounding box.

    The box is centred midway between ``u`` and ``v`` with half-width
    ``|dx| + 2|dy| + 2``; shortest paths never leave it.
    """
    u = Vertex(*u)
    v = Vertex(*v)
    if u == v:
        return 0
    half = abs(v.x - u.x) + 2 * abs(v.y - u.y) + 2
    # doubled coordinates keep the midpoint integral
    cx2, cy2 = u.x + v.x, u.y + v.y

    seen = {u: 0}
    queue = deque([u])
    while queue:
        cur = queue.popleft()
        step = seen[cur] + 1
        for nxt in neighbors(cur):
            if nxt in seen:
                continue
            if abs(2 * nxt.x - cx2) > 2 * half or abs(2 * nxt.y - cy2) > 2 * half:
                continue
            if nxt == v:
                return step
            seen[nxt] = step
            queue.append(nxt)
    raise RuntimeError(f"BFS box around {u}->{v} does not contain a path")


def bfs_distances_from(u: tuple[int, int], half_width: int) -> dict[Vertex, int]:
    """Single-source BFS over the L-infinity box of ``half_width`` around ``u``.

    Some shortest path between two vertices stays within one column of
    their bounding rectangle, so distances are exact for targets at
    L-infinity distance at most ``half_width - 1`` from ``u``.
    """
    u = Vertex(*u)
    seen = {u: 0}
    queue = deque([u])
    while queue:
        cur = queue.popleft()
        step = seen[cur] + 1
        for nxt in neighbors(cur):
            if nxt in seen:
                continue
            if abs(nxt.x - u.x) > half_width or abs(nxt.y - u.y) > half_width:
                continue
            seen[nxt] = step
            queue.append(nxt)
    return seen


def offset_distance(parity: int, dx: int, dy: int) -> int:
    """Distance from a vertex with ``(x + y) % 2 == parity`` to ``(x+dx, y+dy)``.

    With ``|dx| >= |dy|`` the taxicab value is exact.  Otherwise the path
    climbs ``|dy|`` rows and needs an odd number of horizontal steps
    between consecutive vertical edges, plus one extra step before the
    first vertical edge when the start vertex points the wrong way.  The
    horizontal step count is the smallest value of that lower bound with
    the parity of ``dx``.
    """
    adx, ady = abs(dx), abs(dy)
    if adx >= ady:
        return adx + ady
    # wrong-way start: odd parity going up, even parity going down
    wrong_way = parity if dy > 0 else 1 - parity
    horizontal = ady - 1 + wrong_way
    horizontal += (horizontal - dx) & 1
    return ady + horizontal


def distance(u: tuple[int, int], v: tuple[int, int]) -> int:
    """Closed-form hex grid distance."""
    return offset_distance((u[0] + u[1]) & 1, v[0] - u[0], v[1] - u[1])


def line_distance(v: tuple[int, int], line: Line | int) -> int:
    """Distance from ``v = (k, a)`` to the horizontal line ``L_b``."""
    b = line.k if isinstance(line, Line) else line
    k, a = v
    if a == b:
        return 0
    even = (a + k) % 2 == 0
    if a < b:
        return 2 * (b - a) - 1 if even else 2 * (b - a)
    return 2 * (a - b) if even else 2 * (a - b) - 1


def row_reach(r: int) -> int:
    """Largest ``|dy|`` with some vertex of row ``y + dy`` within ``r`` of a row-``y`` vertex."""
    return (r + 1) // 2


def ball_offsets(parity: int, r: int) -> list[tuple[int, int]]:
    """Offsets ``(dx, dy)`` within distance ``r`` of a vertex of the given parity, row-major."""
    reach = row_reach(r)
    return [
        (dx, dy)
        for dy in range(-reach, reach + 1)
        for dx in range(-r, r + 1)
        if offset_distance(parity, dx, dy) <= r
    ]


def ball(v: tuple[int, int], r: int) -> set[Vertex]:
    """Closed ball ``{w : d(v, w) <= r}``.

    Rows farther than ``(r + 1) // 2`` are out of reach (a line ``b`` rows
    away is at distance at least ``2b - 1``) and columns farther than ``r``
    are excluded by the taxicab bound, so that box is scanned.
    """
    if r < 0:
        raise ValueError("radius must be nonnegative")
    x, y = v
    return {Vertex(x + dx, y + dy) for dx, dy in ball_offsets((x + y) & 1, r)}


def even_row_targets(v: tuple[int, int], k: int) -> tuple[list[Vertex], list[Vertex]]:
    """Vertices ``(x - k + 2j, y +/- k)`` for ``j = 0..k``, reachable in ``2k`` steps.

    Returns the row above first, then the row below.
    """
    if k < 1:
        raise ValueError("k must be positive")
    x, y = v
    up = [Vertex(x - k + 2 * j, y + k) for j in range(k + 1)]
    down = [Vertex(x - k + 2 * j, y - k) for j in range(k + 1)]
    return up, down


def odd_row_targets(v: tuple[int, int], k: int) -> tuple[list[Vertex], list[Vertex]]:
    """Two target rows reachable in ``2k + 1`` steps.

    For even ``x + y`` the vertical edge points up, so the short row
    (``k + 1`` vertices) lies ``k + 1`` rows above and the long row
    (``k + 2`` vertices) ``k`` rows below.  Odd ``x + y`` mirrors this.
    The short row is returned first.
    """
    if k < 1:
        raise ValueError("k must be positive")
    x, y = v
    if (x + y) % 2 == 0:
        short_y, long_y = y + k + 1, y - k
    else:
        short_y, long_y = y - k - 1, y + k
    short = [Vertex(x - k + 2 * j, short_y) for j in range(k + 1)]
    long = [Vertex(x - k - 1 + 2 * j, long_y) for j in range(k + 2)]
    return short, long


def ball_row_segment(v: tuple[int, int], line: Line | int, r: int) -> list[Vertex]:
    """The ``2(r - |y - k|) + 1`` vertices of ``L_k`` centred under ``v``, all within ``r``."""
    k = line.k if isinstance(line, Line) else line
    if line_distance(v, k) >= r:
        raise ValueError(f"{tuple(v)} is not within distance {r - 1} of row {k}")
    x, y = v
    half = r - abs(y - k)
    return [Vertex(x - half + j, k) for j in range(2 * half + 1)]
