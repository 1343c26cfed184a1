from soplr import enumeration, strategies
from soplr.plr import PartialLatinRectangle


def test_direct_sum_matches_oracle_small():
    for r, rp, n in [(1, 1, 1), (1, 1, 2), (2, 1, 2), (2, 1, 3)]:
        got = strategies.sor_distribution_direct_sum(r, rp, n)
        want = enumeration.count_sor_by_size(r + rp, n)
        assert got == want


def test_direct_sum_split_is_symmetric():
    a = strategies.sor_distribution_direct_sum(2, 1, 2)
    b = strategies.sor_distribution_direct_sum(1, 2, 2)
    assert a == b


def test_worker_pool_is_deterministic():
    serial = strategies.sor_distribution_direct_sum(2, 1, 2, workers=1)
    parallel = strategies.sor_distribution_direct_sum(2, 1, 2, workers=2)
    assert serial == parallel


def test_stratified_matches_oracle():
    for r, n in [(1, 3), (2, 3), (2, 5), (3, 3)]:
        got = strategies.sor_distribution_stratified(r, n)
        want = enumeration.count_sor_by_size(r, n)
        assert got == want


def test_stratified_respects_max_size():
    got = strategies.sor_distribution_stratified(3, 4, max_size=3)
    want = enumeration.count_sor_by_size(3, 4, max_size=3)
    assert got == want


def test_default_split():
    assert strategies.default_split(4) == (2, 2)
    assert strategies.default_split(3) == (2, 1)


def test_admissible_pairs_reject_clashes():
    pairs = list(strategies.admissible_corner_pairs(1, 1, 1))
    # the symbol-1 cell in both corners clashes through the transpose
    # exactly when both diagonal cells hold it
    assert all(P.direct_sum(Q).is_self_orthogonal() for P, Q in pairs)
    assert len(pairs) == 3  # (empty,empty), (empty,1), (1,empty)


def test_extend_by_new_symbol():
    base = PartialLatinRectangle.from_grid(2, 2, 1, [[1, None], [None, None]])
    exts = strategies.extend_by_new_symbol(base, 2)
    assert exts
    for Q in exts:
        assert 2 in Q.symbols_used() and Q.is_self_orthogonal()
