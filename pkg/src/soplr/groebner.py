"""A minimal Groebner-basis engine over F2 for boolean ideals.

Arithmetic lives in the boolean quotient F2[x]/(x^2 - x): monomials are
squarefree (frozensets of variable indices), polynomials are frozensets of
monomials (presence = coefficient 1), addition is symmetric difference and
multiplication is idempotent on variables.  The field polynomials are
implicit; Buchberger's loop therefore processes, besides the ordinary
S-pairs, one extra pair per basis element and leading variable (the image
of the S-polynomial with the corresponding field polynomial).

Standard monomials are the squarefree monomials avoiding every initial
monomial; counting them per degree gives the Hilbert function of the
quotient, and for these radical boolean ideals the total equals the number
of points of the variety.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import FrozenSet, Optional

Monomial = FrozenSet[int]
Polynomial = FrozenSet[Monomial]

ONE: Monomial = frozenset()
ZERO: Polynomial = frozenset()


@dataclass(frozen=True)
class BoolRing:
    """A fixed, ordered universe of 0/1-valued variables.

    Variable 0 has the highest precedence in the lexicographic order.
    """

    names: tuple

    @property
    def nvars(self) -> int:
        return len(self.names)

    def lex_key(self, m: Monomial) -> tuple:
        return tuple(self.nvars - i for i in sorted(m))

    def leading_monomial(self, p: Polynomial) -> Monomial:
        return max(p, key=self.lex_key)

    def mono_str(self, m: Monomial) -> str:
        if not m:
            return "1"
        return "*".join(self.names[i] for i in sorted(m))

    def poly_str(self, p: Polynomial) -> str:
        if not p:
            return "0"
        monos = sorted(p, key=self.lex_key, reverse=True)
        return " + ".join(self.mono_str(m) for m in monos)


def poly(monomials) -> Polynomial:
    """Build a polynomial from an iterable of monomials, mod 2."""
    c = Counter(frozenset(m) for m in monomials)
    return frozenset(m for m, k in c.items() if k % 2)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p ^ q

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return a | b


def mono_times_poly(u: Monomial, p: Polynomial) -> Polynomial:
    return poly(u | m for m in p)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return poly(a | b for a in p for b in q)


def divides(a: Monomial, b: Monomial) -> bool:
    return a <= b


@dataclass
class BoolIdeal:
    """A finite generator list over a ring; the field polynomials
    x*(x-1) are implicit (boolean-closed)."""

    ring: BoolRing
    generators: list
    boolean_closed: bool = True


@dataclass
class GroebnerBasis:
    ring: BoolRing
    basis: list  # reduced, sorted by leading monomial (descending)

    @property
    def initial_monomials(self) -> list:
        return [self.ring.leading_monomial(g) for g in self.basis]

    def dump(self) -> str:
        """One sorted human-readable polynomial per line."""
        return "\n".join(self.ring.poly_str(g) for g in self.basis)


@dataclass
class HilbertData:
    values: tuple  # HF(d) for d = 0..len-1

    @property
    def total(self) -> int:
        return sum(self.values)

    def __getitem__(self, d: int) -> int:
        return self.values[d] if 0 <= d < len(self.values) else 0


def normal_form(f: Polynomial, basis, ring: BoolRing) -> Polynomial:
    """Fully reduce f: the result has no monomial divisible by any leading
    monomial of the basis."""
    leads = [(ring.leading_monomial(g), g) for g in basis if g]
    done = []
    work = f
    while work:
        m = ring.leading_monomial(work)
        for lm, g in leads:
            if lm <= m:
                work = work ^ mono_times_poly(m - lm, g)
                break
        else:
            done.append(m)
            work = work - {m}
    return frozenset(done)


def _spoly(f: Polynomial, g: Polynomial, ring: BoolRing) -> Polynomial:
    lf = ring.leading_monomial(f)
    lg = ring.leading_monomial(g)
    u = lf | lg
    return mono_times_poly(u - lf, f) ^ mono_times_poly(u - lg, g)


def _field_spoly(f: Polynomial, v: int, ring: BoolRing) -> Polynomial:
    """Image of the S-polynomial of f with the field polynomial of variable
    v (required: v divides the leading monomial of f).  In the quotient it
    equals lm(f) + v * tail(f)."""
    lf = ring.leading_monomial(f)
    tail = f - {lf}
    return frozenset({lf}) ^ mono_times_poly(frozenset({v}), tail)


def buchberger(ideal: BoolIdeal, ring: Optional[BoolRing] = None) -> GroebnerBasis:
    """The unique reduced Groebner basis under the ring's lexicographic
    order (field polynomials implicit)."""
    ring = ring or ideal.ring
    basis = []
    for g in ideal.generators:
        g = normal_form(poly(g), basis, ring)
        if g:
            basis.append(g)

    def support(p):
        out = set()
        for m in p:
            out |= m
        return out

    pairs = []  # (degree of lcm, kind, i, j_or_var)
    def push_pairs(i):
        f = basis[i]
        lf = ring.leading_monomial(f)
        for j in range(i):
            g = basis[j]
            lg = ring.leading_monomial(g)
            # safe coprimality criterion: fully disjoint supports commute
            if not (support(f) & support(g)):
                continue
            pairs.append((len(lf | lg), 0, i, j))
        for v in lf:
            pairs.append((len(lf) + 1, 1, i, v))

    for i in range(len(basis)):
        push_pairs(i)

    while pairs:
        pairs.sort(key=lambda t: t[0], reverse=True)
        _, kind, i, j = pairs.pop()
        if kind == 0:
            s = _spoly(basis[i], basis[j], ring)
        else:
            s = _field_spoly(basis[i], j, ring)
        s = normal_form(s, basis, ring)
        if s:
            basis.append(s)
            push_pairs(len(basis) - 1)

    # minimalize: drop elements whose lead is divisible by another lead
    basis.sort(key=lambda g: ring.lex_key(ring.leading_monomial(g)))
    minimal = []
    leads = []
    for g in basis:
        lg = ring.leading_monomial(g)
        if not any(lm <= lg for lm in leads):
            minimal.append(g)
            leads.append(lg)
    # reduce every tail against the others until stable
    changed = True
    while changed:
        changed = False
        for idx in range(len(minimal)):
            others = minimal[:idx] + minimal[idx + 1:]
            red = normal_form(minimal[idx], others, ring)
            if red != minimal[idx]:
                minimal[idx] = red
                changed = True
    minimal = [g for g in minimal if g]
    minimal.sort(key=lambda g: ring.lex_key(ring.leading_monomial(g)),
                 reverse=True)
    return GroebnerBasis(ring, minimal)


def standard_monomials(gb: GroebnerBasis, max_degree: Optional[int] = None):
    """All squarefree monomials not divisible by any initial monomial,
    grouped by degree: a list indexed by degree."""
    ring = gb.ring
    n = ring.nvars
    if max_degree is None:
        max_degree = n
    leads = gb.initial_monomials
    if ONE in leads:
        return [[] for _ in range(max_degree + 1)]
    # group forbidden monomials by their largest variable index, so each is
    # checked exactly when that variable is added
    by_last = [[] for _ in range(n)]
    for lm in leads:
        if lm:
            by_last[max(lm)].append(lm)
    groups = [[] for _ in range(max_degree + 1)]
    chosen = set()

    def rec(start):
        groups[len(chosen)].append(frozenset(chosen))
        if len(chosen) >= max_degree:
            return
        for v in range(start, n):
            chosen.add(v)
            if not any(lm <= chosen for lm in by_last[v]):
                rec(v + 1)
            chosen.remove(v)

    rec(0)
    return groups


def hilbert_function(gb: GroebnerBasis) -> HilbertData:
    groups = standard_monomials(gb)
    values = [len(g) for g in groups]
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return HilbertData(tuple(values))


def variety(ideal: BoolIdeal):
    """All 0/1 assignments annihilating every generator, as tuples of bits
    ordered by variable index.  Constraint-propagating backtracking: units
    (x or x+1) are forced; a constant-1 residue prunes the branch."""
    ring = ideal.ring
    n = ring.nvars
    gens = [poly(g) for g in ideal.generators]
    if any(g == {ONE} for g in gens):
        return []
    gens = [g for g in gens if g]

    def substitute(p: Polynomial, v: int, b: int) -> Polynomial:
        if b == 0:
            return frozenset(m for m in p if v not in m)
        return poly((m - {v}) if v in m else m for m in p)

    solutions = []

    def rec(polys, assignment):
        # unit propagation to a fixed point
        polys = list(polys)
        assignment = dict(assignment)
        while True:
            forced = None
            for p in polys:
                if p == {ONE}:
                    return
                if len(p) == 1 and len(next(iter(p))) == 1:
                    (v,) = next(iter(p))
                    forced = (v, 0)
                    break
                if len(p) == 2 and ONE in p:
                    other = next(m for m in p if m)
                    if len(other) == 1:
                        (v,) = other
                        forced = (v, 1)
                        break
            if forced is None:
                break
            v, b = forced
            assignment[v] = b
            polys = [q for q in (substitute(p, v, b) for p in polys) if q]
        for p in polys:
            if p == {ONE}:
                return
        if not polys:
            # every unassigned variable is free
            free = [v for v in range(n) if v not in assignment]
            for bits in itertools.product((0, 1), repeat=len(free)):
                full = dict(assignment)
                full.update(zip(free, bits))
                solutions.append(tuple(full[v] for v in range(n)))
            return
        # branch on a variable of the smallest monomial of the tightest
        # active polynomial
        target = min(polys, key=lambda p: (min(len(m) for m in p if m), len(p)))
        v = min(min((m for m in target if m), key=len))
        for b in (1, 0):
            rec([q for q in (substitute(p, v, b) for p in polys) if q],
                {**assignment, v: b})

    rec(gens, {})
    solutions.sort()
    return solutions
