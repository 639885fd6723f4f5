"""Executable versions of the distance and spacing lemmas behind the construction.

Each suite returns a :class:`ClaimResult`.  The distance function is a
parameter so a deliberately broken formula can be fed through the same
suites.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

from . import lattice
from .code import make_params
from .lattice import Vertex
from .verifier import claim9_scan

DistanceFn = Callable[[tuple[int, int], tuple[int, int]], int]

BASES = (Vertex(0, 0), Vertex(1, 0), Vertex(0, 1), Vertex(1, 1))


class ClaimResult(NamedTuple):
    number: int
    passed: bool
    cases: int

    def line(self) -> str:
        return f"claim{self.number} {'pass' if self.passed else 'FAIL'} cases={self.cases}"


def _offsets(extent: int):
    for base in BASES:
        for dy in range(-extent, extent + 1):
            for dx in range(-extent, extent + 1):
                yield base, Vertex(base.x + dx, base.y + dy)


def claim1(extent: int, dist: DistanceFn) -> ClaimResult:
    """Hex distance never beats the taxicab distance."""
    cases = ok = 0
    for u, v in _offsets(extent):
        cases += 1
        ok += dist(u, v) >= lattice.l1_distance(u, v)
    return ClaimResult(1, ok == cases, cases)


def claim2(extent: int, dist: DistanceFn) -> ClaimResult:
    """Hex distance equals taxicab distance when ``|dx| >= |dy|``."""
    cases = ok = 0
    for u, v in _offsets(extent):
        if abs(v.x - u.x) >= abs(v.y - u.y):
            cases += 1
            ok += dist(u, v) == lattice.l1_distance(u, v)
    return ClaimResult(2, ok == cases, cases)


def _line_claim(number: int, extent: int, dist: DistanceFn, above: bool) -> ClaimResult:
    cases = ok = 0
    for k in range(-extent, extent + 1):
        for a in range(-extent, extent + 1):
            for b in range(-extent, extent + 1):
                if (a < b) != above or a == b:
                    continue
                v = Vertex(k, a)
                reach = 2 * abs(a - b) + 1
                best = min(dist(v, (x, b)) for x in range(k - reach, k + reach + 1))
                cases += 1
                ok += best == lattice.line_distance(v, b)
    return ClaimResult(number, ok == cases, cases)


def claim3(extent: int, dist: DistanceFn) -> ClaimResult:
    """Distance from ``(k, a)`` to a line above it."""
    return _line_claim(3, extent, dist, above=True)


def claim4(extent: int, dist: DistanceFn) -> ClaimResult:
    """Distance from ``(k, a)`` to a line below it."""
    return _line_claim(4, extent, dist, above=False)


def claim5(max_k: int, dist: DistanceFn, bases=BASES) -> ClaimResult:
    cases = ok = 0
    for v in bases:
        for k in range(1, max_k + 1):
            up, down = lattice.even_row_targets(v, k)
            for w in up + down:
                cases += 1
                ok += dist(v, w) <= 2 * k
    return ClaimResult(5, ok == cases, cases)


def _odd_claim(number: int, parity: int, max_k: int, dist: DistanceFn, bases) -> ClaimResult:
    cases = ok = 0
    for v in bases:
        if (v.x + v.y) % 2 != parity:
            continue
        for k in range(1, max_k + 1):
            short, long = lattice.odd_row_targets(v, k)
            for w in short + long:
                cases += 1
                ok += dist(v, w) <= 2 * k + 1
    return ClaimResult(number, ok == cases, cases)


def claim6(max_k: int, dist: DistanceFn, bases=BASES) -> ClaimResult:
    return _odd_claim(6, 0, max_k, dist, bases)


def claim7(max_k: int, dist: DistanceFn, bases=BASES) -> ClaimResult:
    return _odd_claim(7, 1, max_k, dist, bases)


def claim8(max_r: int, dist: DistanceFn, bases=BASES) -> ClaimResult:
    """Row segments under a vertex close to the row lie in its ball."""
    cases = ok = 0
    for v in bases:
        for r in range(1, max_r + 1):
            for k in range(v.y - r, v.y + r + 1):
                if lattice.line_distance(v, k) >= r:
                    continue
                for w in lattice.ball_row_segment(v, k, r):
                    cases += 1
                    ok += dist(v, w) <= r
    return ClaimResult(8, ok == cases, cases)


def claim9(max_r: int) -> ClaimResult:
    cases = 0
    passed = True
    for r in range(1, max_r + 1):
        n, bad = claim9_scan(make_params(r))
        cases += n
        passed = passed and not bad
    return ClaimResult(9, passed, cases)


def run_claims(max_k: int, max_r: int, dist: DistanceFn = lattice.distance) -> list[ClaimResult]:
    """All nine suites; vertex-pair suites use offsets up to ``2 * max(max_k, max_r)``."""
    if max_k < 1 or max_r < 1:
        raise ValueError("max_k and max_r must be positive")
    extent = 2 * max(max_k, max_r)
    line_extent = max(max_k, max_r)
    return [
        claim1(extent, dist),
        claim2(extent, dist),
        claim3(line_extent, dist),
        claim4(line_extent, dist),
        claim5(max_k, dist),
        claim6(max_k, dist),
        claim7(max_k, dist),
        claim8(max_r, dist),
        claim9(max_r),
    ]
