import itertools

from soplr import groebner
from soplr.groebner import (ONE, BoolIdeal, BoolRing, buchberger,
                            hilbert_function, normal_form, poly,
                            standard_monomials, variety)


def _eval(p, point):
    return sum(all(point[v] for v in m) for m in p) % 2


def test_poly_arithmetic_mod2():
    assert poly([{0}, {0}]) == frozenset()
    assert poly([{0}, {1}, {0}]) == poly([{1}])
    p = poly([{0}, ONE])
    q = poly([{0}])
    assert groebner.poly_mul(p, q) == frozenset()  # x(x+1) = 0 here


def test_lex_order_first_variable_dominates():
    ring = BoolRing(("a", "b", "c"))
    p = poly([{0}, {1, 2}])
    assert ring.leading_monomial(p) == frozenset({0})


def test_normal_form_reduces_fully():
    ring = BoolRing(("a", "b"))
    basis = [poly([{0}, ONE])]  # a + 1
    assert normal_form(poly([{0, 1}]), basis, ring) == poly([{1}])


def test_buchberger_field_pair_needed():
    # <ab + c> also contains ac + c and bc + c in the boolean quotient
    ring = BoolRing(("a", "b", "c"))
    gb = buchberger(BoolIdeal(ring, [poly([{0, 1}, {2}])]))
    nf = normal_form(poly([{0, 2}, {2}]), gb.basis, ring)
    assert nf == frozenset()


def test_variety_matches_truth_table():
    ring = BoolRing(("a", "b", "c"))
    gens = [poly([{0, 1}, {2}]), poly([{0}, {1}, ONE])]
    sols = variety(BoolIdeal(ring, gens))
    brute = [pt for pt in itertools.product((0, 1), repeat=3)
             if all(_eval(g, pt) == 0 for g in gens)]
    assert sols == sorted(brute)


def test_hilbert_total_equals_variety_size():
    ring = BoolRing(tuple("abcd"))
    gens = [poly([{0, 1}]), poly([{2, 3}]), poly([{0}, {3}, ONE])]
    ideal = BoolIdeal(ring, gens)
    hf = hilbert_function(buchberger(ideal))
    assert hf.total == len(variety(ideal))


def test_standard_monomials_by_degree():
    ring = BoolRing(("a", "b"))
    gb = buchberger(BoolIdeal(ring, [poly([{0, 1}])]))
    groups = standard_monomials(gb)
    assert [len(g) for g in groups[:2]] == [1, 2]
    assert sum(len(g) for g in groups) == 3  # 1, a, b


def test_reduced_basis_is_canonical():
    ring = BoolRing(("a", "b", "c"))
    g1 = [poly([{0, 1}, {2}]), poly([{1, 2}])]
    g2 = list(reversed(g1))
    assert buchberger(BoolIdeal(ring, g1)).basis == \
        buchberger(BoolIdeal(ring, g2)).basis


def test_unit_ideal_has_empty_variety_and_no_standard_monomials():
    ring = BoolRing(("a",))
    ideal = BoolIdeal(ring, [poly([ONE])])
    assert variety(ideal) == []
    gb = buchberger(ideal)
    assert hilbert_function(gb).total == 0
