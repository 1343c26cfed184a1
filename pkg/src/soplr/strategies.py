"""The two cost-reduction strategies for the self-orthogonal counts.

Strategy 1 (direct sum): split the square into diagonal corner blocks P
and Q; for each admissible pair, walk the upper-right blocks B and sum the
size distributions of the compatible lower-left blocks, weighted by
t^(|P|+|Q|+|B|).

Strategy 2 (symbol stratification): |SOR_{r,n:m}| = sum over s of
C(n,s) * sigma_{r,s:m}, where sigma counts supports of exactly s symbols.
"""

from __future__ import annotations

import concurrent.futures
import math
from dataclasses import dataclass

from . import _kernels, enumeration
from .hamming import SizeDistribution
from .plr import PartialLatinRectangle


@dataclass(frozen=True)
class BlockDecomposition:
    corner_p: PartialLatinRectangle
    corner_q: PartialLatinRectangle
    upper_right: PartialLatinRectangle


def admissible_corner_pairs(r: int, rp: int, n: int):
    """The pairs (P, Q) of self-orthogonal corners whose direct sum stays
    self-orthogonal."""
    left = list(enumeration.enumerate_sor(r, n))
    right = left if rp == r else list(enumeration.enumerate_sor(rp, n))
    for P in left:
        for Q in right:
            if _direct_sum_ok(P, Q):
                yield P, Q


def _direct_sum_ok(P: PartialLatinRectangle, Q: PartialLatinRectangle) -> bool:
    """Cross-block self-orthogonality of P (+) Q: equal symbols split
    between the two diagonal blocks must not have equal transposed
    entries (both operands are already self-orthogonal)."""
    by_symbol = {}
    for i in range(P.r):
        for j in range(P.r):
            v = P.cells[i][j]
            if v is not None:
                by_symbol.setdefault(v, []).append((i, j))
    for a in range(Q.r):
        for b in range(Q.r):
            v = Q.cells[a][b]
            if v is None:
                continue
            q2 = Q.cells[b][a]
            if q2 is None:
                continue
            for (i, j) in by_symbol.get(v, ()):
                p2 = P.cells[j][i]
                if p2 is not None and p2 == q2:
                    return False
    return True


def _upper_right_blocks(P, Q, r, rp, n):
    """All B in the corner-B variety: r x rp rectangles whose cell (i,j)
    avoids the symbols of row i of P and of column j of Q."""
    allowed = []
    full = (1 << n) - 1
    for i in range(1, r + 1):
        for j in range(1, rp + 1):
            mask = full
            for l in range(1, r + 1):
                v = P.cell(i, l)
                if v is not None:
                    mask &= ~(1 << (v - 1))
            for l in range(1, rp + 1):
                v = Q.cell(l, j)
                if v is not None:
                    mask &= ~(1 << (v - 1))
            allowed.append(mask)
    cells = list(range(r * rp))
    for grid in _kernels.enumerate_completions(
            r, rp, n, [0] * (r * rp), cells, allowed, sor=False):
        yield PartialLatinRectangle.from_grid(
            r, rp, n, [[grid[i * rp + j] or None for j in range(rp)]
                       for i in range(r)])


def _lower_left_distribution(P, Q, B, use_numba=None) -> SizeDistribution:
    """Size distribution (of the whole square) over the lower-left blocks
    completing P (+) Q with upper-right block B self-orthogonally."""
    r, rp, n = P.r, Q.r, P.n
    k = r + rp
    grid = [[None] * k for _ in range(k)]
    for i in range(r):
        for j in range(r):
            grid[i][j] = P.cells[i][j]
    for i in range(rp):
        for j in range(rp):
            grid[r + i][r + j] = Q.cells[i][j]
    for i in range(r):
        for j in range(rp):
            grid[i][r + j] = B.cells[i][j]
    flat = [grid[i][j] or 0 for i in range(k) for j in range(k)]
    free = [(r + i) * k + j for i in range(rp) for j in range(r)]
    counts = _kernels.count_completions(
        k, k, n, flat, free, [(1 << n) - 1] * len(free), sor=True,
        use_numba=use_numba)
    return SizeDistribution(tuple(counts))


def _pair_distribution(args) -> SizeDistribution:
    """Contribution of one admissible corner pair: sum over its B blocks."""
    P, Q, use_numba = args
    out = SizeDistribution((0,))
    for B in _upper_right_blocks(P, Q, P.r, Q.r, P.n):
        out = out + _lower_left_distribution(P, Q, B, use_numba=use_numba)
    return out


def sor_distribution_direct_sum(r: int, rp: int, n: int, use_numba=None,
                                workers: int = 1) -> SizeDistribution:
    """Size distribution of the self-orthogonal (r+rp) x (r+rp) squares on
    [n] via the block decomposition.

    The per-pair contributions are merged by entry-wise addition, so the
    result is identical for any worker count.
    """
    jobs = [(P, Q, use_numba)
            for P, Q in admissible_corner_pairs(r, rp, n)]
    out = SizeDistribution((0,))
    if workers > 1 and len(jobs) > 1:
        with concurrent.futures.ProcessPoolExecutor(workers) as pool:
            chunk = max(1, len(jobs) // (4 * workers))
            for d in pool.map(_pair_distribution, jobs, chunksize=chunk):
                out = out + d
    else:
        for job in jobs:
            out = out + _pair_distribution(job)
    return out


def default_split(order: int) -> tuple:
    """Balanced corner split r + rp = order."""
    rp = order // 2
    return order - rp, rp


def sor_distribution_stratified(r: int, n: int, max_size=None,
                                use_numba=None) -> SizeDistribution:
    """Size distribution of SOR_{r,n} from the exact-symbol strata."""
    out = SizeDistribution((0,))
    s_max = min(n, r * r)
    if max_size is not None:
        s_max = min(s_max, max_size)
    for s in range(s_max + 1):
        _, dist = enumeration.count_sor_exact_symbols(
            r, s, max_size=max_size, use_numba=use_numba)
        out = out + dist.scale(math.comb(n, s))
    return out.truncate(max_size)


def extend_by_new_symbol(P: PartialLatinRectangle, s: int):
    """The set SOR^P_{r,s;s}: self-orthogonal extensions of P placing the
    new symbol s in one or more empty cells."""
    widened = PartialLatinRectangle.from_grid(P.r, P.r, max(P.n, s), P.cells)
    return list(enumeration.enumerate_sor_extensions(widened, s))
