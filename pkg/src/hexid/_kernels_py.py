"""Pure-Python kernels; same contract as the compiled ``_kernels`` module.

Grids are indexed ``[i, j]`` with row ``i`` and column ``j``; cell
``(i, j)`` has brick-wall parity ``(parity0 + i + j) & 1``.  Offset arrays
hold ``(dx, dy)`` rows.
"""

import numpy as np

MASK64 = (1 << 64) - 1


def splitmix64(z):
    z = (z + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def signatures(mask, parity0, offsets_even, offsets_odd, lo):
    """Codeword count and XOR-of-keys hash of every cell's identifying set.

    Only cells at least ``lo`` rows and columns from the grid border are
    filled; the rest stay zero.  The key of a codeword cell is
    ``splitmix64(i * W + j)``.
    """
    H, W = mask.shape
    cells = mask.tolist()
    offsets = (
        [tuple(o) for o in np.asarray(offsets_even).tolist()],
        [tuple(o) for o in np.asarray(offsets_odd).tolist()],
    )
    count = np.zeros((H, W), dtype=np.int32)
    sig = np.zeros((H, W), dtype=np.uint64)
    for i in range(lo, H - lo):
        count_row = [0] * W
        sig_row = [0] * W
        for j in range(lo, W - lo):
            n = 0
            h = 0
            for dx, dy in offsets[(parity0 + i + j) & 1]:
                ii = i + dy
                jj = j + dx
                if cells[ii][jj]:
                    n += 1
                    h ^= splitmix64(ii * W + jj)
            count_row[j] = n
            sig_row[j] = h
        count[i] = count_row
        sig[i] = np.array(sig_row, dtype=np.uint64)
    return count, sig


def scan_pairs(count, sig, parity0, offsets_even, offsets_odd, dom, rows):
    """Compare every domain cell with every cell at the given offsets.

    ``dom = (i0, i1, j0, j1)`` is the half-open domain and ``rows = (ra, rb)``
    the slice of domain rows handled by this call.  A partner inside the
    domain that precedes the cell in row-major order is skipped, since
    that pair is met from the other side.  Returns the number of pairs
    compared and a list of ``(i, j, vi, vj)`` whose count and hash agree.
    """
    i0, i1, j0, j1 = dom
    ra, rb = rows
    counts = count.tolist()
    sigs = sig.tolist()
    offsets = (
        [tuple(o) for o in np.asarray(offsets_even).tolist()],
        [tuple(o) for o in np.asarray(offsets_odd).tolist()],
    )
    pairs = 0
    candidates = []
    for i in range(ra, rb):
        for j in range(j0, j1):
            c = counts[i][j]
            s = sigs[i][j]
            for dx, dy in offsets[(parity0 + i + j) & 1]:
                vi = i + dy
                vj = j + dx
                if i0 <= vi < i1 and j0 <= vj < j1 and (vi < i or (vi == i and vj < j)):
                    continue
                pairs += 1
                if counts[vi][vj] == c and sigs[vi][vj] == s:
                    candidates.append((i, j, vi, vj))
    return pairs, candidates
