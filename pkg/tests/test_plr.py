import itertools

import pytest

from soplr.plr import (GridError, Isotopism, Paratopism,
                       PartialLatinRectangle)


def test_from_grid_accepts_valid():
    P = PartialLatinRectangle.from_grid(
        2, 3, 4, [[1, None, 4], [None, 3, 2]])
    assert P.size == 4
    assert P.cell(1, 1) == 1 and P.cell(1, 2) is None
    assert P.symbols_used() == {1, 2, 3, 4}


def test_from_grid_rejects_row_clash():
    with pytest.raises(GridError):
        PartialLatinRectangle.from_grid(1, 2, 2, [[1, 1]])


def test_from_grid_rejects_column_clash():
    with pytest.raises(GridError):
        PartialLatinRectangle.from_grid(2, 1, 2, [[2], [2]])


def test_from_grid_rejects_out_of_range_symbol():
    with pytest.raises(GridError):
        PartialLatinRectangle.from_grid(1, 1, 2, [[3]])


def test_text_round_trip():
    P = PartialLatinRectangle.from_grid(
        2, 3, 4, [[1, None, 4], [None, 3, 2]])
    assert PartialLatinRectangle.from_text(P.to_text(), 4) == P


def test_json_round_trip():
    P = PartialLatinRectangle.from_grid(2, 2, 3, [[1, 2], [None, 3]])
    assert PartialLatinRectangle.from_json_dict(P.to_json_dict()) == P


def test_orthogonal_array():
    P = PartialLatinRectangle.from_grid(2, 2, 2, [[1, None], [2, None]])
    assert P.orthogonal_array() == {(1, 1, 1), (2, 1, 2)}


def test_transpose():
    P = PartialLatinRectangle.from_grid(2, 2, 3, [[1, 2], [None, 3]])
    assert P.transpose().cells == ((1, None), (2, 3))


def test_self_orthogonality_examples():
    good = PartialLatinRectangle.from_grid(2, 2, 2, [[1, 2], [None, None]])
    assert good.is_self_orthogonal()
    # equal diagonal symbols clash with the transpose
    bad = PartialLatinRectangle.from_grid(2, 2, 2, [[1, None], [None, 1]])
    assert not bad.is_self_orthogonal()


def test_orthogonality_is_symmetric():
    A = PartialLatinRectangle.from_grid(2, 2, 2, [[1, 2], [2, 1]])
    B = PartialLatinRectangle.from_grid(2, 2, 2, [[1, 2], [None, None]])
    assert A.is_orthogonal_to(B) == B.is_orthogonal_to(A)


def test_isotopism_preserves_structure():
    P = PartialLatinRectangle.from_grid(2, 3, 3, [[1, None, 3], [2, 3, None]])
    iso = Isotopism((2, 1), (3, 1, 2), (1, 3, 2))
    Q = P.apply_isotopism(iso)
    assert Q.size == P.size
    # cell (i, j) = k maps to cell (alpha(i), beta(j)) = gamma(k)
    for i in range(1, 3):
        for j in range(1, 4):
            k = P.cell(i, j)
            expected = None if k is None else iso.gamma[k - 1]
            assert Q.cell(iso.alpha[i - 1], iso.beta[j - 1]) == expected


def test_parastrophism_transpose_via_coordinates():
    P = PartialLatinRectangle.from_grid(2, 2, 3, [[1, 2], [None, 3]])
    # swapping the first two coordinates of the triples is transposition
    Q = P.apply_parastrophism((2, 1, 3))
    assert Q == P.transpose()


def test_parastrophism_orbits_have_consistent_triples():
    P = PartialLatinRectangle.from_grid(2, 2, 3, [[1, 2], [None, 3]])
    for pi in itertools.permutations((1, 2, 3)):
        Q = P.apply_parastrophism(pi)
        assert Q.size == P.size


def test_direct_sum():
    P = PartialLatinRectangle.from_grid(1, 1, 2, [[1]])
    Q = PartialLatinRectangle.from_grid(1, 1, 2, [[2]])
    S = P.direct_sum(Q)
    assert S.r == S.s == 2
    assert S.cell(1, 1) == 1 and S.cell(2, 2) == 2
    assert S.cell(1, 2) is None and S.cell(2, 1) is None
