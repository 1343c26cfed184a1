"""Isotopism sets, main-class partitioning and orbit counting for
self-orthogonal squares.

The acting group is S_r x S_s extended by the transpose, of order
2 * r! * s!; row and column permutations coincide.  Orbit sizes come from
the stabilizer identity orbit = 2 r! s! / (|aut(P)| + |iso(P, P^t)|).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field

from . import enumeration, groebner, ideals
from .plr import Isotopism, PartialLatinRectangle


@dataclass
class IsotopismSet:
    """All (alpha, gamma) in S_r x S_s with P^(alpha, alpha, gamma) = Q."""

    source: PartialLatinRectangle
    target: PartialLatinRectangle
    s: int
    members: list  # (alpha, gamma) 1-based permutation tuples

    def __len__(self) -> int:
        return len(self.members)


def _gamma_extensions(partial: dict, s: int):
    """Complete a consistent partial symbol map to all permutations of
    [s]."""
    used = set(partial.values())
    free_src = [k for k in range(1, s + 1) if k not in partial]
    free_tgt = [k for k in range(1, s + 1) if k not in used]
    for images in itertools.permutations(free_tgt):
        g = dict(partial)
        g.update(zip(free_src, images))
        yield tuple(g[k] for k in range(1, s + 1))


def _forced_symbol_map(P, Q, alpha, s):
    """The symbol map forced by alpha (with beta = alpha), or None if alpha
    is inconsistent with transforming P into Q."""
    r = P.r
    gamma = {}
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            pij = P.cell(i, j)
            qij = Q.cell(alpha[i - 1], alpha[j - 1])
            if (pij is None) != (qij is None):
                return None
            if pij is not None:
                if gamma.get(pij, qij) != qij:
                    return None
                gamma[pij] = qij
    if len(set(gamma.values())) != len(gamma):
        return None
    if any(v > s for v in itertools.chain(gamma, gamma.values())):
        return None
    return gamma


def isotopism_set(P: PartialLatinRectangle, Q: PartialLatinRectangle,
                  s: int) -> IsotopismSet:
    """Direct search over alpha with the symbol map propagated from forced
    cell correspondences."""
    if P.r != P.s or Q.r != Q.s or P.r != Q.r:
        raise ValueError("P and Q must be square of the same order")
    r = P.r
    members = []
    for alpha in itertools.permutations(range(1, r + 1)):
        forced = _forced_symbol_map(P, Q, alpha, s)
        if forced is None:
            continue
        members.extend((alpha, gamma)
                       for gamma in _gamma_extensions(forced, s))
    return IsotopismSet(P, Q, s, members)


def count_isotopisms(P: PartialLatinRectangle, Q: PartialLatinRectangle,
                     s: int) -> int:
    """|isotopism_set| without materializing the symbol-map completions."""
    if P.r != P.s or Q.r != Q.s or P.r != Q.r:
        raise ValueError("P and Q must be square of the same order")
    total = 0
    for alpha in itertools.permutations(range(1, P.r + 1)):
        forced = _forced_symbol_map(P, Q, alpha, s)
        if forced is not None:
            total += math.factorial(s - len(forced))
    return total


def same_main_class(P: PartialLatinRectangle, Q: PartialLatinRectangle,
                    s: int) -> bool:
    return count_isotopisms(P, Q, s) > 0 or \
        count_isotopisms(P, Q.transpose(), s) > 0


def burnside_orbit_size(P: PartialLatinRectangle, r: int, s: int) -> int:
    """Main-class size of P under the order-2*r!*s! group."""
    stab = count_isotopisms(P, P, s) + count_isotopisms(P, P.transpose(), s)
    group = 2 * math.factorial(r) * math.factorial(s)
    if group % stab:
        raise ArithmeticError(
            f"stabilizer order {stab} does not divide group order {group}")
    return group // stab


@dataclass
class MainClassCatalog:
    """Representatives and orbit sizes of the main classes at one symbol
    level (exactly s distinct symbols)."""

    r: int
    s: int
    representatives: list = field(default_factory=list)
    class_sizes: list = field(default_factory=list)

    @property
    def num_classes(self) -> int:
        return len(self.representatives)

    @property
    def sigma(self) -> int:
        return sum(self.class_sizes)

    def to_json(self) -> str:
        entries = []
        for P in self.representatives:
            auto = count_isotopisms(P, P, self.s)
            trans = count_isotopisms(P, P.transpose(), self.s)
            entries.append({
                "representative": P.to_text(),
                "class_size": burnside_orbit_size(P, self.r, self.s),
                "autotopism_count": auto,
                "transpose_isotopism_count": trans,
            })
        return json.dumps(entries, indent=2)


def _extensions_of(P: PartialLatinRectangle, s: int):
    """The members of SOR^P_{r,s;s}: all ways of adding the new symbol s to
    one or more empty cells of P, keeping self-orthogonality."""
    r = P.r
    widened = PartialLatinRectangle.from_grid(r, r, s, P.cells)
    out = []
    for Q in enumeration.enumerate_sor_extensions(widened, s):
        out.append(Q)
    return out


def _invariant_key(P: PartialLatinRectangle):
    """Cheap main-class invariant used to pre-bucket candidates before the
    pairwise isotopism tests."""
    row_fill = sorted(sum(1 for v in row if v is not None)
                      for row in P.cells)
    col_fill = sorted(sum(1 for i in range(P.r)
                          if P.cells[i][j] is not None)
                      for j in range(P.s))
    sym_mult = sorted(
        sum(1 for row in P.cells for v in row if v == k)
        for k in P.symbols_used())
    diag = sum(1 for i in range(P.r) if P.cells[i][i] is not None)
    # row/column profiles must be transpose-symmetric to be an invariant
    fills = tuple(sorted([tuple(row_fill), tuple(col_fill)]))
    return (P.size, fills, tuple(sym_mult), diag)


def main_classes(r: int, s: int, _cache: dict = None) -> MainClassCatalog:
    """Main-class catalog of the level-s stratum, built by lifting the
    level-(s-1) representatives (level 0 is the empty square)."""
    if s < 0:
        raise ValueError("s must be non-negative")
    if _cache is None:
        _cache = {}
    if s in _cache:
        return _cache[s]
    if s == 0:
        cat = MainClassCatalog(r, 0)
        empty = PartialLatinRectangle.empty(r, r, 1)
        cat.representatives.append(empty)
        cat.class_sizes.append(1)
        _cache[0] = cat
        return cat
    prev = main_classes(r, s - 1, _cache)
    candidates = []
    for P in prev.representatives:
        candidates.extend(_extensions_of(P, s))
    buckets = {}
    for Q in candidates:
        buckets.setdefault(_invariant_key(Q), []).append(Q)
    cat = MainClassCatalog(r, s)
    reps = []
    for key in sorted(buckets, key=repr):
        classes_here = []  # lists of members seen per class
        for Q in buckets[key]:
            for members in classes_here:
                if same_main_class(Q, members[0], s):
                    members.append(Q)
                    break
            else:
                classes_here.append([Q])
        # deterministic representative: lexicographically least canonical
        # text among the candidates seen in each class
        reps.extend(min(members, key=lambda q: q.to_text())
                    for members in classes_here)
    cat.representatives = sorted(reps, key=lambda q: q.to_text())
    cat.class_sizes = [burnside_orbit_size(P, r, s)
                       for P in cat.representatives]
    _cache[s] = cat
    return cat


def main_class_table(r: int, s_max: int):
    """Per-level class counts and sigma values, as dicts keyed by s."""
    cache = {}
    classes = {}
    sigma = {}
    for s in range(1, s_max + 1):
        cat = main_classes(r, s, cache)
        classes[s] = cat.num_classes
        sigma[s] = cat.sigma
    return classes, sigma
