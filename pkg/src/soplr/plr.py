"""Partial Latin rectangles, their orthogonal-array form and the group actions on them.

Symbols are 1-based integers in [n]; an empty cell is represented by None.
All values are immutable and hashable, so they can be shared freely between
workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

Cell = Optional[int]


class GridError(ValueError):
    """Raised when a grid violates the partial-Latin-rectangle rules."""


def _check_perm(p: tuple, degree: int, name: str) -> None:
    if len(p) != degree or sorted(p) != list(range(1, degree + 1)):
        raise ValueError(f"{name} is not a permutation of [{degree}]: {p!r}")


@dataclass(frozen=True)
class Isotopism:
    """A triple of permutations (rows, columns, symbols), each 1-based."""

    alpha: tuple
    beta: tuple
    gamma: tuple

    def __post_init__(self):
        _check_perm(self.alpha, len(self.alpha), "alpha")
        _check_perm(self.beta, len(self.beta), "beta")
        _check_perm(self.gamma, len(self.gamma), "gamma")

    @classmethod
    def identity(cls, r: int, s: int, n: int) -> "Isotopism":
        return cls(tuple(range(1, r + 1)), tuple(range(1, s + 1)),
                   tuple(range(1, n + 1)))

    def compose(self, other: "Isotopism") -> "Isotopism":
        """Return self applied after other (self o other)."""
        return Isotopism(
            tuple(self.alpha[a - 1] for a in other.alpha),
            tuple(self.beta[b - 1] for b in other.beta),
            tuple(self.gamma[c - 1] for c in other.gamma),
        )


@dataclass(frozen=True)
class Paratopism:
    """An isotopism composed with a permutation of the triple coordinates.

    For the self-orthogonality group, ``pi`` is restricted to the identity
    and the transposition (1 2).
    """

    isotopism: Isotopism
    pi: tuple

    def __post_init__(self):
        _check_perm(self.pi, 3, "pi")


@dataclass(frozen=True)
class PartialLatinRectangle:
    """An r x s grid over [n] where each symbol occurs at most once per row
    and per column."""

    r: int
    s: int
    n: int
    cells: tuple  # tuple of r row-tuples, entries in [n] or None

    @classmethod
    def from_grid(cls, r: int, s: int, n: int,
                  entries: Iterable[Iterable[Cell]]) -> "PartialLatinRectangle":
        if r < 1 or s < 1 or n < 1:
            raise GridError(f"dimensions must be positive, got ({r},{s},{n})")
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != r or any(len(row) != s for row in rows):
            raise GridError(f"grid is not {r}x{s}")
        for i, row in enumerate(rows, start=1):
            for j, v in enumerate(row, start=1):
                if v is not None and not (isinstance(v, int) and 1 <= v <= n):
                    raise GridError(
                        f"cell ({i},{j}) holds {v!r}, not a symbol of [{n}]")
        # report the first offending pair in row-major scan order
        for i in range(r):
            seen = {}
            for j in range(s):
                v = rows[i][j]
                if v is not None:
                    if v in seen:
                        raise GridError(
                            f"symbol {v} repeated in row {i + 1} at cells "
                            f"({i + 1},{seen[v] + 1}) and ({i + 1},{j + 1})")
                    seen[v] = j
        for j in range(s):
            seen = {}
            for i in range(r):
                v = rows[i][j]
                if v is not None:
                    if v in seen:
                        raise GridError(
                            f"symbol {v} repeated in column {j + 1} at cells "
                            f"({seen[v] + 1},{j + 1}) and ({i + 1},{j + 1})")
                    seen[v] = i
        return cls(r, s, n, rows)

    @classmethod
    def empty(cls, r: int, s: int, n: int) -> "PartialLatinRectangle":
        return cls.from_grid(r, s, n, [[None] * s for _ in range(r)])

    @classmethod
    def from_triples(cls, r: int, s: int, n: int,
                     triples: Iterable[tuple]) -> "PartialLatinRectangle":
        """Rebuild a PLR from (row, column, symbol) triples, validating it."""
        grid = [[None] * s for _ in range(r)]
        for (i, j, k) in triples:
            if not (1 <= i <= r and 1 <= j <= s and 1 <= k <= n):
                raise GridError(f"triple ({i},{j},{k}) outside [{r}]x[{s}]x[{n}]")
            if grid[i - 1][j - 1] is not None:
                raise GridError(f"two triples share cell ({i},{j})")
            grid[i - 1][j - 1] = k
        return cls.from_grid(r, s, n, grid)

    # -- basic accessors ---------------------------------------------------

    def cell(self, i: int, j: int) -> Cell:
        """Entry at 1-based position (i, j)."""
        return self.cells[i - 1][j - 1]

    @property
    def size(self) -> int:
        return sum(1 for row in self.cells for v in row if v is not None)

    def symbols_used(self) -> frozenset:
        return frozenset(v for row in self.cells for v in row if v is not None)

    def orthogonal_array(self) -> frozenset:
        """The set of (row, column, symbol) triples of the filled cells."""
        return frozenset((i + 1, j + 1, v)
                         for i, row in enumerate(self.cells)
                         for j, v in enumerate(row) if v is not None)

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: cells comma-separated, rows semicolon-separated,
        empty printed as '.'."""
        return ";".join(
            ",".join("." if v is None else str(v) for v in row)
            for row in self.cells)

    @classmethod
    def from_text(cls, text: str, n: int) -> "PartialLatinRectangle":
        rows = [[None if tok == "." else int(tok) for tok in line.split(",")]
                for line in text.split(";")]
        return cls.from_grid(len(rows), len(rows[0]), n, rows)

    def to_json_dict(self) -> dict:
        return {"r": self.r, "s": self.s, "n": self.n,
                "cells": [list(row) for row in self.cells]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "PartialLatinRectangle":
        return cls.from_grid(d["r"], d["s"], d["n"], d["cells"])

    # -- structure ---------------------------------------------------------

    def transpose(self) -> "PartialLatinRectangle":
        if self.r != self.s:
            raise ValueError(f"cannot transpose a {self.r}x{self.s} rectangle")
        return PartialLatinRectangle(
            self.r, self.s, self.n,
            tuple(tuple(self.cells[j][i] for j in range(self.r))
                  for i in range(self.r)))

    def is_orthogonal_to(self, other: "PartialLatinRectangle") -> bool:
        """True iff wherever two positions hold equal symbols here, the other
        rectangle does not hold equal symbols at both positions."""
        if (self.r, self.s) != (other.r, other.s):
            raise ValueError("dimension mismatch")
        by_symbol = {}
        for i in range(self.r):
            for j in range(self.s):
                v = self.cells[i][j]
                if v is not None:
                    by_symbol.setdefault(v, []).append((i, j))
        for positions in by_symbol.values():
            for (i, j), (a, b) in itertools.combinations(positions, 2):
                q1 = other.cells[i][j]
                q2 = other.cells[a][b]
                if q1 is not None and q1 == q2:
                    return False
        return True

    def is_self_orthogonal(self) -> bool:
        if self.r != self.s:
            raise ValueError("self-orthogonality requires a square rectangle")
        return self.is_orthogonal_to(self.transpose())

    # -- group actions -----------------------------------------------------

    def apply_isotopism(self, theta: Isotopism) -> "PartialLatinRectangle":
        if (len(theta.alpha), len(theta.beta), len(theta.gamma)) != \
                (self.r, self.s, self.n):
            raise ValueError("isotopism degrees do not match (r, s, n)")
        triples = [(theta.alpha[i - 1], theta.beta[j - 1], theta.gamma[k - 1])
                   for (i, j, k) in self.orthogonal_array()]
        return PartialLatinRectangle.from_triples(self.r, self.s, self.n,
                                                  triples)

    def apply_parastrophism(self, pi: tuple) -> "PartialLatinRectangle":
        """Permute the coordinates of the orthogonal-array triples: coordinate
        c of each triple moves to position pi(c).  The result always exists
        as a rectangle of the permuted dimensions."""
        _check_perm(pi, 3, "pi")
        dims = (self.r, self.s, self.n)
        new_dims = [0, 0, 0]
        for c in range(3):
            new_dims[pi[c] - 1] = dims[c]
        triples = []
        for t in self.orthogonal_array():
            moved = [0, 0, 0]
            for c in range(3):
                moved[pi[c] - 1] = t[c]
            triples.append(tuple(moved))
        return PartialLatinRectangle.from_triples(new_dims[0], new_dims[1],
                                                  new_dims[2], triples)

    def apply_paratopism(self, theta: Paratopism) -> "PartialLatinRectangle":
        return self.apply_isotopism(theta.isotopism).apply_parastrophism(
            theta.pi)

    def direct_sum(self, other: "PartialLatinRectangle") -> "PartialLatinRectangle":
        """Block-diagonal assembly: self in the upper left, other in the
        lower right, the off-diagonal blocks empty."""
        if self.r != self.s or other.r != other.s:
            raise ValueError("direct sum requires square operands")
        if self.n != other.n:
            raise ValueError("direct sum requires a common symbol bound")
        k = self.r + other.r
        grid = [[None] * k for _ in range(k)]
        for i in range(self.r):
            for j in range(self.r):
                grid[i][j] = self.cells[i][j]
        for i in range(other.r):
            for j in range(other.r):
                grid[self.r + i][self.r + j] = other.cells[i][j]
        return PartialLatinRectangle.from_grid(k, k, self.n, grid)

    def __str__(self) -> str:
        return self.to_text()
