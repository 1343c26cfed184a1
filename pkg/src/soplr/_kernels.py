"""Backtracking kernels for counting partial Latin rectangles.

One generic kernel counts the completions of a partially filled grid:
free cells are visited in a fixed order, each receiving either no symbol or
an allowed symbol that keeps the grid a partial Latin rectangle (and, in
self-orthogonal mode, orthogonal to its transpose).  Counts are bucketed by
total filled-cell count.

A numba-compiled version is used when numba is importable; the pure-Python
twin has identical semantics and is the reference for small cases.  The
compiled kernel counts in int64: all counts handled here are far below
2**63 (the largest reproduced total is ~3.1e13), and the Python driver
re-checks for negative overflow anyway.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _count_completions_impl(nrows, ncols, n, grid, free_cells, allowed,
                            max_size, required_mask, sor, counts):
    """Iterative backtracking over the free cells of ``grid``.

    grid: int64[nrows*ncols], 0 = empty, prefilled entries fixed.
    free_cells: indices (row-major, i*ncols+j) of cells to fill.
    allowed: per free cell, bitmask of permitted symbols (bit k-1 = symbol k).
    max_size: cap on total filled cells (<= nrows*ncols always valid).
    required_mask: symbols that must all appear in a counted completion.
    sor: nonzero iff the grid is square and must stay self-orthogonal.
    counts: int64[nrows*ncols+2], counts[m] += 1 per completion of size m.
    """
    nfree = len(free_cells)
    row_mask = np.zeros(nrows, dtype=np.int64)
    col_mask = np.zeros(ncols, dtype=np.int64)
    sym_count = np.zeros(n + 1, dtype=np.int64)
    sym_pos = np.zeros((n + 1, nrows * ncols), dtype=np.int64)
    size = 0
    for i in range(nrows):
        for j in range(ncols):
            v = grid[i * ncols + j]
            if v != 0:
                row_mask[i] |= 1 << (v - 1)
                col_mask[j] |= 1 << (v - 1)
                sym_pos[v, sym_count[v]] = i * ncols + j
                sym_count[v] += 1
                size += 1

    present_required = 0
    for k in range(1, n + 1):
        if (required_mask >> (k - 1)) & 1 and sym_count[k] > 0:
            present_required += 1
    n_required = 0
    for k in range(1, n + 1):
        if (required_mask >> (k - 1)) & 1:
            n_required += 1

    val = np.zeros(nfree + 1, dtype=np.int64)  # last tried value per depth
    depth = 0
    val[0] = -1
    while depth >= 0:
        if depth == nfree:
            if present_required == n_required:
                counts[size] += 1
            depth -= 1
            continue
        cell = free_cells[depth]
        ci = cell // ncols
        cj = cell % ncols
        # undo the previous placement at this depth, if any
        prev = val[depth]
        if prev >= 1:
            bit = 1 << (prev - 1)
            row_mask[ci] &= ~bit
            col_mask[cj] &= ~bit
            sym_count[prev] -= 1
            if (required_mask & bit) and sym_count[prev] == 0:
                present_required -= 1
            grid[cell] = 0
            size -= 1
        # pruning: even filling every later free cell with a new required
        # symbol cannot reach the support requirement
        missing = n_required - present_required
        budget = max_size - size
        remaining = nfree - depth
        if missing > budget or missing > remaining:
            val[depth] = -1
            depth -= 1
            continue
        # find the next candidate value (0 = leave empty, then symbols)
        v = prev + 1
        placed = False
        while v <= n:
            if v == 0:
                val[depth] = 0
                depth += 1
                val[depth] = -1
                placed = True
                break
            bit = 1 << (v - 1)
            if size >= max_size or not (allowed[depth] >> (v - 1)) & 1 \
                    or (row_mask[ci] & bit) or (col_mask[cj] & bit):
                v += 1
                continue
            ok = True
            if sor != 0:
                # placing v at (ci,cj): for every other cell holding v, the
                # two transposed entries must not be equal and filled; the
                # transpose of the new cell reads as v when it is the new
                # cell itself (diagonal placement)
                tcell = cj * ncols + ci
                tq = v if tcell == cell else grid[tcell]
                if tq == v and tcell != cell:
                    ok = False  # the transpose cell already holds v
                else:
                    for idx in range(sym_count[v]):
                        p = sym_pos[v, idx]
                        a = p // ncols
                        b = p % ncols
                        q2 = grid[b * ncols + a]
                        if q2 != 0 and tq != 0 and tq == q2:
                            ok = False
                            break
            if not ok:
                v += 1
                continue
            row_mask[ci] |= bit
            col_mask[cj] |= bit
            if (required_mask & bit) and sym_count[v] == 0:
                present_required += 1
            sym_pos[v, sym_count[v]] = cell
            sym_count[v] += 1
            grid[cell] = v
            size += 1
            val[depth] = v
            depth += 1
            val[depth] = -1
            placed = True
            break
        if not placed:
            val[depth] = -1
            depth -= 1


def _count_completions_py(nrows, ncols, n, grid, free_cells, allowed,
                          max_size, required_mask, sor, counts):
    """Pure-Python reference with the same contract, recursive form."""
    grid = list(grid)
    row_mask = [0] * nrows
    col_mask = [0] * ncols
    sym_pos = {k: [] for k in range(1, n + 1)}
    size = 0
    for i in range(nrows):
        for j in range(ncols):
            v = grid[i * ncols + j]
            if v:
                row_mask[i] |= 1 << (v - 1)
                col_mask[j] |= 1 << (v - 1)
                sym_pos[v].append(i * ncols + j)
                size += 1
    n_required = _popcount(required_mask)

    def present_required():
        return sum(1 for k in range(1, n + 1)
                   if (required_mask >> (k - 1)) & 1 and sym_pos[k])

    def rec(depth, size):
        missing = n_required - present_required()
        if missing > max_size - size or missing > len(free_cells) - depth:
            return
        if depth == len(free_cells):
            counts[size] += 1
            return
        cell = free_cells[depth]
        ci, cj = divmod(cell, ncols)
        rec(depth + 1, size)  # leave empty
        if size >= max_size:
            return
        tcell = cj * ncols + ci
        for v in range(1, n + 1):
            bit = 1 << (v - 1)
            if not (allowed[depth] >> (v - 1)) & 1:
                continue
            if (row_mask[ci] & bit) or (col_mask[cj] & bit):
                continue
            if sor:
                tq = v if tcell == cell else grid[tcell]
                bad = tq == v and tcell != cell
                if not bad:
                    for p in sym_pos[v]:
                        a, b = divmod(p, ncols)
                        q2 = grid[b * ncols + a]
                        if q2 and tq and tq == q2:
                            bad = True
                            break
                if bad:
                    continue
            row_mask[ci] |= bit
            col_mask[cj] |= bit
            sym_pos[v].append(cell)
            grid[cell] = v
            rec(depth + 1, size + 1)
            grid[cell] = 0
            sym_pos[v].pop()
            row_mask[ci] &= ~bit
            col_mask[cj] &= ~bit

    rec(0, size)


def count_completions(nrows, ncols, n, grid, free_cells, allowed,
                      max_size=None, required_mask=0, sor=False,
                      use_numba=None):
    """Count PLR (or self-orthogonal PLR) completions of a prefilled grid.

    Returns a list indexed by total size.  ``allowed`` is a per-free-cell
    symbol bitmask; ``required_mask`` demands the marked symbols all appear.
    """
    if max_size is None:
        max_size = nrows * ncols
    if use_numba is None:
        use_numba = _HAVE_NUMBA
    counts = np.zeros(nrows * ncols + 2, dtype=np.int64)
    grid_arr = np.asarray(grid, dtype=np.int64).copy()
    free_arr = np.asarray(free_cells, dtype=np.int64)
    allowed_arr = np.asarray(allowed, dtype=np.int64)
    if use_numba and _HAVE_NUMBA:
        _count_completions_impl(nrows, ncols, n, grid_arr, free_arr,
                                allowed_arr, max_size, required_mask,
                                1 if sor else 0, counts)
    else:
        _count_completions_py(nrows, ncols, n, list(grid), list(free_cells),
                              list(allowed), max_size, required_mask,
                              bool(sor), counts)
    out = [int(c) for c in counts]
    if any(c < 0 for c in out):
        raise OverflowError("int64 counter overflow in enumeration kernel")
    return out


def enumerate_completions(nrows, ncols, n, grid, free_cells, allowed,
                          max_size=None, required_mask=0, sor=False):
    """Yield every completion (as a grid tuple) in cell-order, empty-first,
    symbol-increasing order.  This matches the canonical text order when the
    free cells are visited row-major."""
    if max_size is None:
        max_size = nrows * ncols
    grid = list(grid)
    row_mask = [0] * nrows
    col_mask = [0] * ncols
    sym_pos = {k: [] for k in range(1, n + 1)}
    size = 0
    for i in range(nrows):
        for j in range(ncols):
            v = grid[i * ncols + j]
            if v:
                row_mask[i] |= 1 << (v - 1)
                col_mask[j] |= 1 << (v - 1)
                sym_pos[v].append(i * ncols + j)
                size += 1
    n_required = _popcount(required_mask)

    def rec(depth, size):
        missing = sum(1 for k in range(1, n + 1)
                      if (required_mask >> (k - 1)) & 1 and not sym_pos[k])
        if missing > max_size - size or missing > len(free_cells) - depth:
            return
        if depth == len(free_cells):
            yield tuple(grid)
            return
        cell = free_cells[depth]
        ci, cj = divmod(cell, ncols)
        yield from rec(depth + 1, size)
        if size >= max_size:
            return
        tcell = cj * ncols + ci
        for v in range(1, n + 1):
            bit = 1 << (v - 1)
            if not (allowed[depth] >> (v - 1)) & 1:
                continue
            if (row_mask[ci] & bit) or (col_mask[cj] & bit):
                continue
            if sor:
                tq = v if tcell == cell else grid[tcell]
                bad = tq == v and tcell != cell
                if not bad:
                    for p in sym_pos[v]:
                        a, b = divmod(p, ncols)
                        q2 = grid[b * ncols + a]
                        if q2 and tq and tq == q2:
                            bad = True
                            break
                if bad:
                    continue
            row_mask[ci] |= bit
            col_mask[cj] |= bit
            sym_pos[v].append(cell)
            grid[cell] = v
            yield from rec(depth + 1, size + 1)
            grid[cell] = 0
            sym_pos[v].pop()
            row_mask[ci] &= ~bit
            col_mask[cj] &= ~bit

    yield from rec(0, size)
