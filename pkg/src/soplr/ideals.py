"""Constructors for the boolean ideal families used in the enumeration.

Six families: the partial-Latin-rectangle ideal, the self-orthogonality
ideal, the isotopism ideal between two self-orthogonal squares, the two
corner ideals of the direct-sum decomposition, and the new-symbol
extension ideal.  Every constructor also knows how to decode variety
points back into combinatorial objects, which is how the algebraic route
is cross-checked against the direct search oracles.
"""

from __future__ import annotations

import itertools

from .groebner import ONE, BoolIdeal, BoolRing, poly
from .plr import Isotopism, PartialLatinRectangle


def _plr_ring(r: int, s: int, n: int) -> BoolRing:
    names = tuple(f"x[{i},{j},{k}]"
                  for i in range(1, r + 1)
                  for j in range(1, s + 1)
                  for k in range(1, n + 1))
    return BoolRing(names)


def _xvar(s: int, n: int, i: int, j: int, k: int) -> int:
    """Row-major symbol-minor index of x[i,j,k] (all arguments 1-based)."""
    return ((i - 1) * s + (j - 1)) * n + (k - 1)


def ideal_plr(r: int, s: int, n: int) -> BoolIdeal:
    """Quadratic monomial ideal whose zeros are the r x s partial Latin
    rectangles on [n]: one generator per edge of the Hamming graph."""
    ring = _plr_ring(r, s, n)
    gens = []
    for i, j, k in itertools.product(range(1, r + 1), range(1, s + 1),
                                     range(1, n + 1)):
        v = _xvar(s, n, i, j, k)
        for i2 in range(i + 1, r + 1):
            gens.append(poly([{v, _xvar(s, n, i2, j, k)}]))
        for j2 in range(j + 1, s + 1):
            gens.append(poly([{v, _xvar(s, n, i, j2, k)}]))
        for k2 in range(k + 1, n + 1):
            gens.append(poly([{v, _xvar(s, n, i, j, k2)}]))
    return BoolIdeal(ring, gens)


def ideal_sor(r: int, n: int) -> BoolIdeal:
    """The self-orthogonality ideal: the PLR ideal of the square plus the
    quartic monomials forbidding equal transposed conflicts.  The family
    ranges over ordered position pairs and ordered symbol pairs (p = q
    included); duplicates collapsing under idempotence are removed."""
    base = ideal_plr(r, r, n)
    seen = set(next(iter(g)) for g in base.generators)
    gens = list(base.generators)
    positions = [(i, j) for i in range(1, r + 1) for j in range(1, r + 1)]
    for (i, j), (k, l) in itertools.product(positions, positions):
        if (i, j) == (k, l):
            continue
        for p, q in itertools.product(range(1, n + 1), repeat=2):
            m = frozenset({_xvar(r, n, i, j, p), _xvar(r, n, k, l, p),
                           _xvar(r, n, j, i, q), _xvar(r, n, l, k, q)})
            if m not in seen:
                seen.add(m)
                gens.append(poly([m]))
    return BoolIdeal(base.ring, gens)


def decode_plr_point(r: int, s: int, n: int, point) -> PartialLatinRectangle:
    """Variety point of ideal_plr/ideal_sor -> the rectangle it encodes."""
    triples = [(i, j, k)
               for i in range(1, r + 1)
               for j in range(1, s + 1)
               for k in range(1, n + 1)
               if point[_xvar(s, n, i, j, k)]]
    return PartialLatinRectangle.from_triples(r, s, n, triples)


def encode_plr_point(P: PartialLatinRectangle) -> tuple:
    point = [0] * (P.r * P.s * P.n)
    for (i, j, k) in P.orthogonal_array():
        point[_xvar(P.s, P.n, i, j, k)] = 1
    return tuple(point)


# -- isotopism ideal -------------------------------------------------------

def _iso_ring(r: int, s: int) -> BoolRing:
    names = tuple(f"x[{i},{j}]" for i in range(1, r + 1)
                  for j in range(1, r + 1)) + \
            tuple(f"y[{i},{j}]" for i in range(1, s + 1)
                  for j in range(1, s + 1))
    return BoolRing(names)


def ideal_isotopism(P: PartialLatinRectangle, Q: PartialLatinRectangle,
                    r: int, s: int) -> BoolIdeal:
    """Zeros = pairs (alpha, gamma) in S_r x S_s with P^(alpha,alpha,gamma)
    = Q, via the permutation-matrix variables x (rows) and y (symbols).

    Besides the row/column sum-to-one generators, the at-most-one
    quadratics x[i,j]x[i,j'] etc. are included: over F2 the parity sums
    alone admit non-permutation zeros once the order exceeds 2, and the
    identification with isotopisms needs genuine permutation matrices.
    """
    if P.r != P.s or Q.r != Q.s or P.r != Q.r or P.r != r:
        raise ValueError("P and Q must be square of order r")
    if max(P.symbols_used() | Q.symbols_used() | {0}) > s:
        raise ValueError("symbols exceed the declared bound s")
    ring = _iso_ring(r, s)

    def xv(i, j):
        return (i - 1) * r + (j - 1)

    def yv(i, j):
        return r * r + (i - 1) * s + (j - 1)

    gens = []
    for i in range(1, r + 1):
        gens.append(poly([ONE] + [{xv(i, j)} for j in range(1, r + 1)]))
        gens.append(poly([ONE] + [{xv(j, i)} for j in range(1, r + 1)]))
    for i in range(1, s + 1):
        gens.append(poly([ONE] + [{yv(i, j)} for j in range(1, s + 1)]))
        gens.append(poly([ONE] + [{yv(j, i)} for j in range(1, s + 1)]))
    for i in range(1, r + 1):
        for j, j2 in itertools.combinations(range(1, r + 1), 2):
            gens.append(poly([{xv(i, j), xv(i, j2)}]))
            gens.append(poly([{xv(j, i), xv(j2, i)}]))
    for i in range(1, s + 1):
        for j, j2 in itertools.combinations(range(1, s + 1), 2):
            gens.append(poly([{yv(i, j), yv(i, j2)}]))
            gens.append(poly([{yv(j, i), yv(j2, i)}]))
    for i, j, k, l in itertools.product(range(1, r + 1), repeat=4):
        pij = P.cell(i, j)
        qkl = Q.cell(k, l)
        if pij is not None and qkl is not None:
            # x[i,k] x[j,l] (y[pij,qkl] - 1)
            m = {xv(i, k), xv(j, l)}
            gens.append(poly([m | {yv(pij, qkl)}, m]))
        elif (pij is None) != (qkl is None):
            gens.append(poly([{xv(i, k), xv(j, l)}]))
    return BoolIdeal(ring, gens)


def decode_isotopism_point(r: int, s: int, point) -> tuple:
    """Variety point of ideal_isotopism -> (alpha, gamma) as 1-based
    permutation tuples."""
    alpha = [0] * r
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            if point[(i - 1) * r + (j - 1)]:
                alpha[i - 1] = j
    gamma = [0] * s
    for i in range(1, s + 1):
        for j in range(1, s + 1):
            if point[r * r + (i - 1) * s + (j - 1)]:
                gamma[i - 1] = j
    return tuple(alpha), tuple(gamma)


# -- direct-sum corner ideals ----------------------------------------------

def _require_block_pair(P: PartialLatinRectangle, Q: PartialLatinRectangle,
                        r: int, rp: int, n: int) -> None:
    if P.r != P.s or P.r != r or Q.r != Q.s or Q.r != rp:
        raise ValueError("corner blocks have inconsistent dimensions")
    if P.n != n or Q.n != n:
        raise ValueError("symbol-bound mismatch between corner blocks")
    if not P.direct_sum(Q).is_self_orthogonal():
        raise ValueError("(P, Q) is not an admissible corner pair: "
                         "their direct sum is not self-orthogonal")


def ideal_corner_b(P: PartialLatinRectangle, Q: PartialLatinRectangle,
                   r: int, rp: int, n: int) -> BoolIdeal:
    """Upper-right block ideal: r x rp rectangles whose cell (i,j) avoids
    every symbol already in row i of P or in column j of Q."""
    _require_block_pair(P, Q, r, rp, n)
    base = ideal_plr(r, rp, n)
    gens = list(base.generators)
    for i in range(1, r + 1):
        for j in range(1, rp + 1):
            for k in range(1, n + 1):
                if any(P.cell(i, l) == k for l in range(1, r + 1)) or \
                        any(Q.cell(l, j) == k for l in range(1, rp + 1)):
                    gens.append(poly([{_xvar(rp, n, i, j, k)}]))
    return BoolIdeal(base.ring, gens)


def ideal_corner_c(P: PartialLatinRectangle, Q: PartialLatinRectangle,
                   A: PartialLatinRectangle, r: int, rp: int,
                   n: int) -> BoolIdeal:
    """Lower-left block ideal given the upper-right block A: the rp x r
    rectangles completing P + Q + A to a self-orthogonal square."""
    _require_block_pair(P, Q, r, rp, n)
    if A.r != r or A.s != rp or A.n != n:
        raise ValueError("block A must be r x rp on the same symbols")
    base = ideal_plr(rp, r, n)
    gens = list(base.generators)
    positions = [(i, j) for i in range(1, rp + 1) for j in range(1, r + 1)]
    # (a) equal mirrored A-entries forbid equal symbols in C
    for (i, j), (i2, j2) in itertools.combinations(positions, 2):
        a1 = A.cell(j, i)
        a2 = A.cell(j2, i2)
        if a1 is not None and a1 == a2:
            for k in range(1, n + 1):
                gens.append(poly([{_xvar(r, n, i, j, k),
                                   _xvar(r, n, i2, j2, k)}]))
    # (b) C entries matching swapped mirrored A-entries
    for (i, j), (i2, j2) in itertools.product(positions, positions):
        kp = A.cell(j, i)       # forbidden as the (i2,j2) partner's mirror
        k = A.cell(j2, i2)
        if kp is not None and k is not None and kp != k:
            gens.append(poly([{_xvar(r, n, i, j, k),
                               _xvar(r, n, i2, j2, kp)}]))
    # (c) the five linear elimination clauses
    for (i, j) in positions:
        for k in range(1, n + 1):
            forbid = False
            if A.cell(j, i) == k:
                forbid = True
            if not forbid:
                for l, m in itertools.product(range(1, r + 1), repeat=2):
                    if A.cell(j, i) is not None and \
                            A.cell(j, i) == P.cell(l, m) and \
                            P.cell(m, l) == k:
                        forbid = True
                        break
            if not forbid:
                for l, m in itertools.product(range(1, rp + 1), repeat=2):
                    if A.cell(j, i) is not None and \
                            A.cell(j, i) == Q.cell(l, m) and \
                            Q.cell(m, l) == k:
                        forbid = True
                        break
            if not forbid and any(P.cell(l, j) == k
                                  for l in range(1, r + 1)):
                forbid = True
            if not forbid and any(Q.cell(i, l) == k
                                  for l in range(1, rp + 1)):
                forbid = True
            if forbid:
                gens.append(poly([{_xvar(r, n, i, j, k)}]))
    return BoolIdeal(base.ring, gens)


# -- new-symbol extension ideal --------------------------------------------

class SubstitutionConflict(ValueError):
    """A substitution turned a generator into the constant 1 (the base
    rectangle violates the precondition)."""


def ideal_extension(P: PartialLatinRectangle, r: int, s: int):
    """Substitute the cells of P into the self-orthogonality ideal of
    order r on [s]: variables x[i,j,k] with k < s follow P, x[i,j,s] is 0
    on filled cells.  Remaining variables are x[i,j,s] on the empty cells.

    Returns (ideal, cells) where cells lists the (i, j) of each remaining
    variable in ring order.
    """
    if P.r != r or P.s != r:
        raise ValueError("P must be square of order r")
    if P.symbols_used() - set(range(1, s)):
        raise ValueError(f"P must use symbols of [{s - 1}] only")
    full = ideal_sor(r, s)
    cells = [(i, j) for i in range(1, r + 1) for j in range(1, r + 1)
             if P.cell(i, j) is None]
    var_of = {}
    for idx, (i, j) in enumerate(cells):
        var_of[_xvar(r, s, i, j, s)] = idx
    value_of = {}
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            pij = P.cell(i, j)
            for k in range(1, s):
                value_of[_xvar(r, s, i, j, k)] = 1 if pij == k else 0
            if pij is not None:
                value_of[_xvar(r, s, i, j, s)] = 0

    ring = BoolRing(tuple(f"x[{i},{j},{s}]" for (i, j) in cells))
    gens = []
    seen = set()
    for g in full.generators:
        (mono,) = g  # every self-orthogonality generator is one monomial
        out = set()
        dead = False
        for v in mono:
            if v in var_of:
                out.add(var_of[v])
            elif value_of[v] == 0:
                dead = True
                break
        if dead:
            continue
        m = frozenset(out)
        if not m:
            raise SubstitutionConflict(
                "substitution produced the unit ideal: the base rectangle "
                "is not self-orthogonal")
        if m not in seen:
            seen.add(m)
            gens.append(poly([m]))
    # drop monomials subsumed by shorter ones
    gens_m = sorted((next(iter(g)) for g in gens), key=len)
    kept = []
    for m in gens_m:
        if not any(k <= m for k in kept):
            kept.append(m)
    return BoolIdeal(ring, [poly([m]) for m in kept]), cells


def decode_extension_point(P: PartialLatinRectangle, s: int, cells,
                           point) -> PartialLatinRectangle:
    grid = [list(row) for row in P.cells]
    for idx, (i, j) in enumerate(cells):
        if point[idx]:
            grid[i - 1][j - 1] = s
    return PartialLatinRectangle.from_grid(P.r, P.r, max(P.n, s), grid)
