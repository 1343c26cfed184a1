import itertools

import pytest

from soplr import enumeration, hamming


def test_graph_shape():
    g = hamming.build(2, 3, 4)
    assert g.r == 2 and g.s == 3 and g.n == 4
    assert len(g.adj) == 24
    # degree = (r-1) + (s-1) + (n-1)
    assert all(g.degree(v) == 1 + 2 + 3 for v in range(24))


def test_vertex_label_round_trip():
    g = hamming.build(2, 3, 4)
    for i, j, k in itertools.product(range(1, 3), range(1, 4), range(1, 5)):
        assert g.label(g.vertex(i, j, k)) == (i, j, k)


def test_adjacency_rule():
    g = hamming.build(2, 2, 2)
    # same row, same column, different symbol: adjacent
    assert g.adjacent(g.vertex(1, 1, 1), g.vertex(1, 1, 2))
    # differs in two coordinates: not adjacent
    assert not g.adjacent(g.vertex(1, 1, 1), g.vertex(1, 2, 2))


def test_independent_sets_are_rectangles():
    # independence polynomial of H_{2,2,2} = size distribution of the
    # 2x2 rectangles on two symbols
    poly = hamming.independence_polynomial(hamming.build(2, 2, 2))
    assert poly.counts == (1, 8, 16, 8, 2)
    assert poly.total == 35


def test_independence_polynomial_matches_backtracking():
    for r, s, n in [(1, 2, 3), (2, 2, 3), (2, 3, 3), (3, 3, 3)]:
        poly = hamming.independence_polynomial(hamming.build(r, s, n))
        assert poly == enumeration.count_plr_by_size(r, s, n)


def test_closed_forms_small_sizes():
    for r, s, n in itertools.product(range(1, 4), repeat=3):
        d = enumeration.count_plr_by_size(r, s, n)
        for m in range(3):
            assert hamming.closed_form_count(r, s, n, m) == d[m]


def test_size_distribution_algebra():
    a = hamming.SizeDistribution((1, 2))
    b = hamming.SizeDistribution((0, 1, 1))
    assert (a + b).counts == (1, 3, 1)
    assert a.shift(2).counts == (0, 0, 1, 2)
    assert a.scale(3).counts == (3, 6)
    assert hamming.SizeDistribution((1, 0, 0)).counts == (1,)


def test_node_budget_raises():
    g = hamming.build(3, 3, 3)
    with pytest.raises(hamming.CapacityError):
        hamming.independence_polynomial(g, node_budget=5)
