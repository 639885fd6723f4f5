"""Finite check of the identifying property over one fundamental domain.

Why one domain suffices: ``px`` and ``py`` are even, so translating by
``(px, 0)`` or ``(0, py)`` keeps the parity of ``x + y`` and is a graph
automorphism; it also maps the code onto itself.  Any uncovered vertex or
confused pair can therefore be translated until its first vertex lies in
``D = [0..px-1] x [0..py-1]``.  Two vertices with equal nonempty
identifying sets share a codeword ``c``, so ``d(u, v) <= d(u, c) + d(c, v)
<= 2r``; coverage is checked separately, which makes the search over
partners within ``2r`` exhaustive.

Identifying sets are compared through a codeword count and an XOR of
per-codeword 64-bit keys.  Different hashes prove different sets; equal
hashes are re-checked exactly before a pair is reported.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .code import CodeParams, Predicate, codewords_in_window, in_c_prime, predicate
from .lattice import Vertex, Window, ball, ball_offsets, line_distance

MAX_REPORTED = 100


@dataclass
class VerificationReport:
    r: int
    valid: bool
    coverage_failures: list[Vertex] = field(default_factory=list)
    confusion_pairs: list[tuple[Vertex, Vertex]] = field(default_factory=list)
    vertices_checked: int = 0
    pairs_checked: int = 0
    n_coverage_failures: int = 0
    n_confusions: int = 0

    def lines(self) -> list[str]:
        """Summary line followed by at most ``MAX_REPORTED`` counterexample lines."""
        out = [
            f"r={self.r} valid={'true' if self.valid else 'false'} "
            f"vertices={self.vertices_checked} pairs={self.pairs_checked}"
        ]
        for x, y in self.coverage_failures:
            out.append(f"uncovered ({x},{y})")
        for (x1, y1), (x2, y2) in self.confusion_pairs:
            out.append(f"confused ({x1},{y1}) ({x2},{y2})")
        return out[: MAX_REPORTED + 1]


def identifying_set(v: tuple[int, int], p: CodeParams, member: Predicate | None = None) -> list[Vertex]:
    """Codewords within distance ``r`` of ``v``, sorted."""
    member = member or predicate(p)
    return sorted(w for w in ball(v, p.r) if member(w))


def _mask(p: CodeParams, win: Window, member: Predicate | None) -> np.ndarray:
    mask = np.zeros((win.height, win.width), dtype=np.uint8)
    if member is None:
        for x, y in codewords_in_window(win, p):
            mask[y - win.y0, x - win.x0] = 1
    else:
        for i in range(win.height):
            for j in range(win.width):
                if member(Vertex(win.x0 + j, win.y0 + i)):
                    mask[i, j] = 1
    return mask


def _offset_tables(radius: int, drop_center: bool) -> tuple[np.ndarray, np.ndarray]:
    tables = []
    for parity in (0, 1):
        offs = [o for o in ball_offsets(parity, radius) if not (drop_center and o == (0, 0))]
        tables.append(np.array(offs, dtype=np.int32).reshape(-1, 2))
    return tables[0], tables[1]


def _scan_chunk(args):
    backend, count, sig, parity0, even2, odd2, dom, rows = args
    return kernels.get_backend(backend).scan_pairs(count, sig, parity0, even2, odd2, dom, rows)


def verify(
    p: CodeParams,
    member: Predicate | None = None,
    workers: int = 1,
    backend: str | None = None,
) -> VerificationReport:
    """Check coverage and distinguishability for every vertex of the domain.

    ``member`` replaces the code's membership test (it must keep the
    ``(px, py)`` periodicity).  ``workers > 1`` splits the pair scan over
    processes; the report does not depend on it.
    """
    r = p.r
    margin = 3 * r
    win = Window(-margin, p.px - 1 + margin, -margin, p.py - 1 + margin)
    mask = _mask(p, win, member)
    parity0 = (win.x0 + win.y0) & 1
    k = kernels.get_backend(backend)

    even_r, odd_r = _offset_tables(r, drop_center=False)
    count, sig = k.signatures(mask, parity0, even_r, odd_r, r)

    dom = (margin, margin + p.py, margin, margin + p.px)
    i0, i1, j0, j1 = dom

    uncovered = sorted(
        Vertex(int(j) + win.x0, int(i) + win.y0) for i, j in np.argwhere(count[i0:i1, j0:j1] == 0) + (i0, j0)
    )

    even_2r, odd_2r = _offset_tables(2 * r, drop_center=True)
    workers = max(1, min(workers, p.py))
    bounds = [i0 + (p.py * n) // workers for n in range(workers + 1)]
    jobs = [
        (backend, count, sig, parity0, even_2r, odd_2r, dom, (bounds[n], bounds[n + 1]))
        for n in range(workers)
    ]
    if workers == 1:
        results = [_scan_chunk(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_chunk, jobs))

    pairs = 0
    confused = []
    member_fn = member or predicate(p)
    for n_pairs, candidates in results:
        pairs += n_pairs
        for i, j, vi, vj in candidates:
            u = Vertex(j + win.x0, i + win.y0)
            v = Vertex(vj + win.x0, vi + win.y0)
            if identifying_set(u, p, member_fn) == identifying_set(v, p, member_fn):
                confused.append((u, v))
    confused.sort()

    return VerificationReport(
        r=r,
        valid=not uncovered and not confused,
        coverage_failures=uncovered[:MAX_REPORTED],
        confusion_pairs=confused[:MAX_REPORTED],
        vertices_checked=p.px * p.py,
        pairs_checked=pairs,
        n_coverage_failures=len(uncovered),
        n_confusions=len(confused),
    )


def verify_brute(p: CodeParams, member: Predicate | None = None, anchor: tuple[int, int] = (0, 0)) -> VerificationReport:
    """Slow reference check over the domain translated to ``anchor``.

    Identifying sets are built as Python sets from closed balls; no
    hashing and no kernels.  Meant for small radii.
    """
    member = member or predicate(p)
    ax, ay = anchor
    domain = [Vertex(ax + x, ay + y) for y in range(p.py) for x in range(p.px)]
    in_domain = set(domain)
    cache: dict[Vertex, frozenset[Vertex]] = {}

    def ident(v: Vertex) -> frozenset[Vertex]:
        if v not in cache:
            cache[v] = frozenset(w for w in ball(v, p.r) if member(w))
        return cache[v]

    uncovered = sorted(u for u in domain if not ident(u))
    confused = []
    pairs = 0
    for u in domain:
        for v in sorted(ball(u, 2 * p.r)):
            if v == u or (v in in_domain and (v.y, v.x) < (u.y, u.x)):
                continue
            pairs += 1
            if ident(u) == ident(v):
                confused.append((u, v))
    confused.sort()
    return VerificationReport(
        r=p.r,
        valid=not uncovered and not confused,
        coverage_failures=uncovered[:MAX_REPORTED],
        confusion_pairs=confused[:MAX_REPORTED],
        vertices_checked=len(domain),
        pairs_checked=pairs,
        n_coverage_failures=len(uncovered),
        n_confusions=len(confused),
    )


def claim9_scan(p: CodeParams) -> tuple[int, list[tuple[int, ...]]]:
    """Cases examined and violations of the three spacing facts on row 0.

    1. of two adjacent vertices on a ``C'`` row at least one is in ``C'``;
    2. the same for two vertices at distance ``r..2r+1`` on that row;
    3. among ``(x + 2k, 0)`` for ``k = 0..ceil((r+1)/2)`` one is a codeword.

    Row 0 represents every ``C'`` row and one ``m_prime`` period of
    columns covers all residues.  Violations are tagged with the part
    number followed by the offending columns.
    """
    r = p.r
    cases = 0
    bad: list[tuple[int, ...]] = []
    steps = -(-(r + 1) // 2)
    for x in range(p.m_prime):
        here = in_c_prime((x, 0), p)
        cases += 1
        if not here and not in_c_prime((x + 1, 0), p):
            bad.append((1, x, x + 1))
        for dx in range(r, 2 * r + 2):
            cases += 1
            if not here and not in_c_prime((x + dx, 0), p):
                bad.append((2, x, x + dx))
        cases += 1
        if not any(in_c_prime((x + 2 * k, 0), p) for k in range(steps + 1)):
            bad.append((3, x))
    return cases, bad


def check_claim9(p: CodeParams) -> bool:
    return not claim9_scan(p)[1]


def nearby_lines(v: tuple[int, int], p: CodeParams, member: Predicate | None = None) -> list[int]:
    """Indices ``n`` such that ``I_r(v)`` meets the ``C'`` row ``n(r+1)``."""
    member = member or predicate(p)
    rows = {w.y // p.row_spacing for w in identifying_set(v, p, member) if in_c_prime(w, p)}
    return sorted(rows)


def check_nearby_uniqueness(p: CodeParams) -> bool:
    """Every domain vertex is near exactly one ``C'`` row."""
    return all(
        len(nearby_lines((x, y), p)) == 1 for y in range(p.py) for x in range(p.px)
    )


def code_row_gap(p: CodeParams, n: int = 0) -> int:
    """``d(L_{n(r+1)}, L_{(n+1)(r+1)})``, taken over a column pair of both parities."""
    lo, hi = n * p.row_spacing, (n + 1) * p.row_spacing
    return min(line_distance((x, lo), hi) for x in (0, 1))
