"""Combinatorial counting oracles for partial Latin rectangles.

These are the direct (non-algebraic) routes: cell-by-cell backtracking with
row/column symbol masks, plus the closed-form totals.  They cross-check the
Hilbert-function route everywhere both are feasible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import _kernels
from .hamming import SizeDistribution
from .plr import PartialLatinRectangle


def _full_mask(n: int) -> int:
    return (1 << n) - 1


def count_plr_by_size(r: int, s: int, n: int, max_size=None,
                      use_numba=None) -> SizeDistribution:
    """Size distribution of all r x s partial Latin rectangles on [n]."""
    cells = list(range(r * s))
    counts = _kernels.count_completions(
        r, s, n, [0] * (r * s), cells, [_full_mask(n)] * len(cells),
        max_size=max_size, sor=False, use_numba=use_numba)
    return SizeDistribution(tuple(counts))


def count_sor_by_size(r: int, n: int, max_size=None,
                      use_numba=None) -> SizeDistribution:
    """Size distribution of the self-orthogonal r x r rectangles on [n]."""
    cells = list(range(r * r))
    counts = _kernels.count_completions(
        r, r, n, [0] * (r * r), cells, [_full_mask(n)] * len(cells),
        max_size=max_size, sor=True, use_numba=use_numba)
    return SizeDistribution(tuple(counts))


def enumerate_sor(r: int, n: int, max_size=None):
    """Yield every self-orthogonal r x r rectangle on [n] exactly once, in
    canonical text order (row-major cells, empty before symbols)."""
    cells = list(range(r * r))
    for grid in _kernels.enumerate_completions(
            r, r, n, [0] * (r * r), cells, [_full_mask(n)] * len(cells),
            max_size=max_size, sor=True):
        yield PartialLatinRectangle.from_grid(
            r, r, n, [[grid[i * r + j] or None for j in range(r)]
                      for i in range(r)])


def enumerate_sor_extensions(base: PartialLatinRectangle, new_symbol: int):
    """Yield the self-orthogonal rectangles obtained from ``base`` by
    placing ``new_symbol`` in one or more of its empty cells."""
    r = base.r
    if base.r != base.s:
        raise ValueError("extension requires a square rectangle")
    if new_symbol > base.n:
        raise ValueError("new symbol exceeds the rectangle's symbol bound")
    grid = [base.cells[i][j] or 0 for i in range(r) for j in range(r)]
    free = [c for c in range(r * r) if grid[c] == 0]
    bit = 1 << (new_symbol - 1)
    for filled in _kernels.enumerate_completions(
            r, r, base.n, grid, free, [bit] * len(free),
            required_mask=bit, sor=True):
        yield PartialLatinRectangle.from_grid(
            r, r, base.n, [[filled[i * r + j] or None for j in range(r)]
                           for i in range(r)])


def complete_sor(base: PartialLatinRectangle, free_cells, allowed_mask=None,
                 max_size=None, required_mask=0, use_numba=None):
    """Count the self-orthogonal completions of ``base`` over ``free_cells``
    (0-based row-major indices), bucketed by total size."""
    r = base.r
    if base.r != base.s:
        raise ValueError("self-orthogonal completion needs a square grid")
    grid = [base.cells[i][j] or 0 for i in range(r) for j in range(r)]
    if allowed_mask is None:
        allowed_mask = [_full_mask(base.n)] * len(free_cells)
    counts = _kernels.count_completions(
        r, r, base.n, grid, list(free_cells), list(allowed_mask),
        max_size=max_size, required_mask=required_mask, sor=True,
        use_numba=use_numba)
    return SizeDistribution(tuple(counts))


@dataclass
class StratifiedCounts:
    """sigma[s] = number of self-orthogonal r x r rectangles using exactly s
    distinct symbols (symbol set = [s]); sigma_by_size[s] refines by size."""

    r: int
    sigma: dict = field(default_factory=dict)
    sigma_by_size: dict = field(default_factory=dict)


def count_sor_exact_symbols(r: int, s: int, max_size=None, use_numba=None,
                            crosscheck_bound: int = 200_000):
    """(sigma_{r,s}, per-size counts) for self-orthogonal r x r rectangles
    whose symbol support is exactly [s].

    Two independent paths are run whenever the inclusion-exclusion side is
    cheap enough: direct support-tested backtracking, and alternating sums
    of the unrestricted counts over symbol subsets.  They must agree.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    if s > r * r:
        return 0, SizeDistribution((0,))
    if s == 0:
        dist = SizeDistribution((1,))
        return 1, dist
    cells = list(range(r * r))
    counts = _kernels.count_completions(
        r, r, s, [0] * (r * r), cells, [_full_mask(s)] * len(cells),
        max_size=max_size, required_mask=_full_mask(s), sor=True,
        use_numba=use_numba)
    direct = SizeDistribution(tuple(counts))

    # inclusion-exclusion over symbol subsets: rectangles on [j] symbols,
    # any support, alternating-summed; only run while the search-space
    # estimate stays below the configured bound
    est = (s + 1) ** (r * r)
    if est <= crosscheck_bound:
        incexc = SizeDistribution((0,))
        for j in range(s + 1):
            sub = count_sor_by_size(r, j, max_size=max_size,
                                    use_numba=use_numba)
            sign = (-1) ** (s - j)
            incexc = incexc + sub.scale(sign * math.comb(s, j))
        if incexc != direct:
            raise AssertionError(
                f"exact-symbol counts disagree for (r={r}, s={s}): "
                f"direct {direct.counts} vs inclusion-exclusion "
                f"{incexc.counts}")
    return direct.total, direct


def stratified_counts(r: int, s_max: int, max_size=None,
                      use_numba=None) -> StratifiedCounts:
    out = StratifiedCounts(r)
    for s in range(s_max + 1):
        total, dist = count_sor_exact_symbols(r, s, max_size=max_size,
                                              use_numba=use_numba)
        out.sigma[s] = total
        out.sigma_by_size[s] = dist
    return out


def sigma_closed_form(r: int, s: int):
    """Closed forms for sigma_{r,s} in the covered cases, else None.

    The s = r^2 - 1 value is the case-count expression
    (r^2)! + (r^2-1)! * r(r-1)(r-2)(r+1)/2; see the package README for why
    this differs from one published display of the same quantity.
    """
    if s == 0:
        return 1
    if s > r * r:
        return 0
    if s == r * r:
        return math.factorial(r * r)
    if s == r * r - 1:
        return (math.factorial(r * r)
                + math.factorial(r * r - 1)
                * r * (r - 1) * (r - 2) * (r + 1) // 2)
    return None


def sigma_closed_form_displayed(r: int):
    """The published display for sigma_{r, r^2-1}: (r^2+1)!/2 *
    (r^3 - 2r^2 + r + 2)/r.  Kept only so the discrepancy with the
    case-count expression can be reported, never used for counting."""
    num = math.factorial(r * r + 1) * (r ** 3 - 2 * r * r + r + 2)
    return num // (2 * r)


def sor_total_formula(r: int, n: int) -> int:
    """Closed-form |SOR_{r,n}| for r in {1, 2, 3}."""
    if r == 1:
        return n + 1
    if r == 2:
        return n ** 4 - 2 * n ** 3 + 5 * n ** 2 + 1
    if r == 3:
        return (n ** 9 - 15 * n ** 8 + 122 * n ** 7 - 604 * n ** 6
                + 1973 * n ** 5 - 4201 * n ** 4 + 5640 * n ** 3
                - 4240 * n ** 2 + 1347 * n + 1)
    raise ValueError(f"no closed-form total for r = {r}")
