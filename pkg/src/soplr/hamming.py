"""The Hamming graph K_r [] K_s [] K_n and its independence polynomial.

The independent sets of this graph are exactly the r x s partial Latin
rectangles on [n], counted by size, so the independence polynomial is the
size distribution of that whole family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class CapacityError(RuntimeError):
    """Raised when a recursion exceeds its configured subproblem budget."""


@dataclass(frozen=True)
class SizeDistribution:
    """Counts indexed by size m, exact integers, trailing zeros stripped."""

    counts: tuple

    def __post_init__(self):
        c = list(self.counts)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "counts", tuple(int(x) for x in c))

    @classmethod
    def from_list(cls, counts) -> "SizeDistribution":
        return cls(tuple(counts))

    def __getitem__(self, m: int) -> int:
        if 0 <= m < len(self.counts):
            return self.counts[m]
        return 0

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def max_size(self) -> int:
        return len(self.counts) - 1

    def shift(self, k: int) -> "SizeDistribution":
        """Multiply by t^k."""
        return SizeDistribution((0,) * k + self.counts)

    def __add__(self, other: "SizeDistribution") -> "SizeDistribution":
        a, b = self.counts, other.counts
        if len(a) < len(b):
            a, b = b, a
        return SizeDistribution(
            tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def truncate(self, max_size) -> "SizeDistribution":
        if max_size is None:
            return self
        return SizeDistribution(self.counts[:max_size + 1])

    def scale(self, c: int) -> "SizeDistribution":
        return SizeDistribution(tuple(c * x for x in self.counts))


def _poly_mul(a: tuple, b: tuple) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _poly_add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def _poly_shift(a: tuple, k: int) -> tuple:
    return (0,) * k + a


class HammingGraph:
    """Cartesian product of complete graphs K_r, K_s, K_n.

    Vertices are labeled by the triples of [r] x [s] x [n]; two vertices are
    adjacent iff their labels differ in exactly one coordinate.  Internally
    vertices are the integers 0..r*s*n-1 in row-major symbol-minor order.
    """

    def __init__(self, r: int, s: int, n: int):
        if r < 1 or s < 1 or n < 1:
            raise ValueError(f"dimensions must be positive, got ({r},{s},{n})")
        self.r, self.s, self.n = r, s, n
        self.order = r * s * n
        adj = []
        for i, j, k in itertools.product(range(r), range(s), range(n)):
            v = (i * s + j) * n + k
            nbrs = set()
            for i2 in range(r):
                if i2 != i:
                    nbrs.add((i2 * s + j) * n + k)
            for j2 in range(s):
                if j2 != j:
                    nbrs.add((i * s + j2) * n + k)
            for k2 in range(n):
                if k2 != k:
                    nbrs.add((i * s + j) * n + k2)
            adj.append(frozenset(nbrs))
        self.adj = adj

    def label(self, v: int) -> tuple:
        k = v % self.n
        j = (v // self.n) % self.s
        i = v // (self.n * self.s)
        return (i + 1, j + 1, k + 1)

    def vertex(self, i: int, j: int, k: int) -> int:
        return ((i - 1) * self.s + (j - 1)) * self.n + (k - 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self):
        return [(u, v) for u in range(self.order) for v in self.adj[u] if u < v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def build(r: int, s: int, n: int) -> HammingGraph:
    return HammingGraph(r, s, n)


def closed_form_count(r: int, s: int, n: int, m: int) -> int:
    """Closed forms for the number of independent sets of size 0, 1 or 2."""
    if m == 0:
        return 1
    if m == 1:
        return r * s * n
    if m == 2:
        return r * s * n * (r * s * n - r - s - n + 2) // 2
    raise ValueError(f"no closed form for m = {m}")


class _IndependencePolyEngine:
    """Vertex-branching recursion I(G) = I(G - v) + t * I(G - N[v]) with
    component factorization and a budgeted memo table on residual vertex
    sets.  Correctness never depends on the cache: on budget overflow new
    keys are simply not stored."""

    def __init__(self, graph: HammingGraph, memo_budget: int = 2_000_000,
                 node_budget=None):
        self.adj = graph.adj
        self.memo = {}
        self.memo_budget = memo_budget
        self.node_budget = node_budget
        self.nodes = 0

    def run(self) -> tuple:
        return self._poly(frozenset(range(len(self.adj))))

    def _components(self, verts: frozenset):
        remaining = set(verts)
        comps = []
        while remaining:
            start = next(iter(remaining))
            comp = {start}
            frontier = [start]
            while frontier:
                u = frontier.pop()
                for w in self.adj[u] & verts:
                    if w not in comp:
                        comp.add(w)
                        frontier.append(w)
            comps.append(frozenset(comp))
            remaining -= comp
        return comps

    def _poly(self, verts: frozenset) -> tuple:
        if not verts:
            return (1,)
        result = (1,)
        for comp in self._components(verts):
            result = _poly_mul(result, self._component_poly(comp))
        return result

    def _component_poly(self, comp: frozenset) -> tuple:
        cached = self.memo.get(comp)
        if cached is not None:
            return cached
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise CapacityError(
                f"independence-polynomial recursion exceeded "
                f"{self.node_budget} subproblems")
        # branch on a maximum-degree vertex (ties broken by label)
        best_v, best_deg = -1, -1
        for u in comp:
            d = len(self.adj[u] & comp)
            if d > best_deg or (d == best_deg and u < best_v):
                best_v, best_deg = u, d
        if best_deg == 0:
            # isolated vertices only
            result = (1,)
            for _ in comp:
                result = _poly_mul(result, (1, 1))
        elif best_deg == 1:
            # a single edge (the component is connected)
            result = (1, 2)
        else:
            v = best_v
            closed = (self.adj[v] & comp) | {v}
            without_v = self._poly(comp - {v})
            without_nbhd = self._poly(comp - closed)
            result = _poly_add(without_v, _poly_shift(without_nbhd, 1))
        if len(self.memo) < self.memo_budget:
            self.memo[comp] = result
        return result


def independence_polynomial(graph: HammingGraph, memo_budget: int = 2_000_000,
                            node_budget=None) -> SizeDistribution:
    """Size distribution of all independent sets of the graph."""
    engine = _IndependencePolyEngine(graph, memo_budget, node_budget)
    return SizeDistribution(engine.run())
