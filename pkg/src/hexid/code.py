"""The periodic code ``C = C' | C''`` as a membership predicate.

``C'`` occupies every row ``y = 0 (mod r+1)`` except the odd columns
``1, 3, 5, ... < r`` modulo ``3r`` (even r) or ``3r - 1`` (odd r).
``C''`` occupies rows ``y = floor((r+1)/2) (mod 2(r+1))``, taking every
``r``-th column (even r, offset by the row parity) or every ``(r+1)``-th
column (odd r).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable, Iterator

from .lattice import Vertex, Window

Predicate = Callable[[Vertex], bool]


@dataclass(frozen=True)
class CodeParams:
    r: int
    m_prime: int
    excluded: frozenset[int]
    m_dprime: int
    row_spacing: int
    dprime_offset: int
    dprime_row_period: int
    px: int
    py: int

    @property
    def even(self) -> bool:
        return self.r % 2 == 0

    @property
    def domain(self) -> Window:
        """The fundamental domain ``[0..px-1] x [0..py-1]``."""
        return Window(0, self.px - 1, 0, self.py - 1)

    @property
    def illustrated(self) -> bool:
        """False for r = 1, which lies below the construction's intended range."""
        return self.r >= 2


def make_params(r: int) -> CodeParams:
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise ValueError(f"radius must be a positive integer, got {r!r}")
    even = r % 2 == 0
    m_prime = 3 * r if even else 3 * r - 1
    m_dprime = r if even else r + 1
    return CodeParams(
        r=r,
        m_prime=m_prime,
        excluded=frozenset(range(1, r, 2)),
        m_dprime=m_dprime,
        row_spacing=r + 1,
        dprime_offset=(r + 1) // 2,
        dprime_row_period=2 * (r + 1),
        px=lcm(m_prime, m_dprime),
        py=2 * (r + 1),
    )


def in_c_prime(v: tuple[int, int], p: CodeParams) -> bool:
    x, y = v
    return y % p.row_spacing == 0 and x % p.m_prime not in p.excluded


def dprime_residue(y: int, p: CodeParams) -> int:
    """Column residue of ``C''`` codewords on row ``y`` (modulo ``m_dprime``)."""
    return y % 2 if p.even else 0


def in_c_dprime(v: tuple[int, int], p: CodeParams) -> bool:
    x, y = v
    if y % p.dprime_row_period != p.dprime_offset:
        return False
    return x % p.m_dprime == dprime_residue(y, p)


def is_codeword(v: tuple[int, int], p: CodeParams) -> bool:
    return in_c_prime(v, p) or in_c_dprime(v, p)


def predicate(p: CodeParams, drop_cdprime: bool = False) -> Predicate:
    """Membership test bound to ``p``; ``drop_cdprime`` keeps only ``C'``."""
    if drop_cdprime:
        return lambda v: in_c_prime(v, p)
    return lambda v: is_codeword(v, p)


def code_rows(y0: int, y1: int, p: CodeParams) -> Iterator[int]:
    """Rows in ``[y0, y1]`` that can hold codewords, ascending."""
    for y in range(y0, y1 + 1):
        if y % p.row_spacing == 0 or y % p.dprime_row_period == p.dprime_offset:
            yield y


def codewords_in_window(w: Window, p: CodeParams) -> list[Vertex]:
    """All codewords in ``w`` in row-major order (rows ascending, then columns)."""
    w = Window(*w).validate()
    out: list[Vertex] = []
    for y in code_rows(w.y0, w.y1, p):
        if y % p.row_spacing == 0:
            out.extend(Vertex(x, y) for x in range(w.x0, w.x1 + 1) if x % p.m_prime not in p.excluded)
        else:
            # first column >= x0 with the right residue, then stride
            residue = dprime_residue(y, p)
            start = w.x0 + (residue - w.x0) % p.m_dprime
            out.extend(Vertex(x, y) for x in range(start, w.x1 + 1, p.m_dprime))
    return out


def count_codewords(w: Window, p: CodeParams) -> int:
    """``len(codewords_in_window(w, p))`` without materialising the list."""
    w = Window(*w).validate()
    # codewords of C' per full period of m_prime columns
    per_period = p.m_prime - len(p.excluded)
    total = 0
    for y in code_rows(w.y0, w.y1, p):
        if y % p.row_spacing == 0:
            full = w.width // p.m_prime
            total += full * per_period
            total += sum(1 for x in range(w.x0 + full * p.m_prime, w.x1 + 1) if x % p.m_prime not in p.excluded)
        else:
            residue = dprime_residue(y, p)
            start = w.x0 + (residue - w.x0) % p.m_dprime
            if start <= w.x1:
                total += (w.x1 - start) // p.m_dprime + 1
    return total
