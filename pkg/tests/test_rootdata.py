import pytest

from qflag3 import qpair, rootdata
from qflag3.rootdata import (ALPHA1, ALPHA2, THETA, convex_compare,
                             generator_weight, inner_product, is_root,
                             root_sum_table, word_weight)


def test_inner_products_match_cartan_matrix():
    assert inner_product(ALPHA1, ALPHA1) == 2
    assert inner_product(ALPHA2, ALPHA2) == 2
    assert inner_product(ALPHA1, ALPHA2) == -1
    assert inner_product(ALPHA2, ALPHA1) == -1
    assert inner_product(THETA, THETA) == 2


def test_inner_product_symmetric():
    for beta in rootdata.ALL_ROOTS:
        for gamma in rootdata.ALL_ROOTS:
            assert inner_product(beta, gamma) == inner_product(gamma, beta)


def test_is_root():
    assert is_root(rootdata.add(ALPHA1, ALPHA2))
    assert not is_root(rootdata.add(ALPHA1, ALPHA1))
    assert is_root(rootdata.add(THETA, rootdata.negate(ALPHA2)))
    assert not is_root((0, 0, 0))


def test_convex_order():
    assert convex_compare(ALPHA2, ALPHA1) == -1
    assert convex_compare(THETA, THETA) == 0
    assert convex_compare(ALPHA1, THETA) == 1
    with pytest.raises(ValueError):
        convex_compare(ALPHA1, rootdata.negate(ALPHA1))


def test_generator_weights():
    assert generator_weight("e_a1") == ALPHA1
    assert generator_weight("f_a1") == rootdata.negate(ALPHA1)
    with pytest.raises(ValueError):
        generator_weight("g_a1")
    letters = rootdata.LETTERS
    assert word_weight((letters.index("f_a1"), letters.index("e_a1"))) == (0, 0, 0)
    assert word_weight((letters.index("f_a2"), letters.index("e_a1"))) == \
        rootdata.add(ALPHA1, rootdata.negate(ALPHA2))


# the full 6x6 table of ordered root sums with is-a-root flags, rows and
# columns running over a1, a2, a1+a2, -a1, -a2, -(a1+a2)
TABLE_FLAGS = [
    [False, True, False, False, False, True],
    [True, False, False, False, False, True],
    [False, False, False, True, True, False],
    [False, False, True, False, True, False],
    [False, False, True, True, False, False],
    [True, True, False, False, False, False],
]


def test_root_sum_table_matches_reference():
    table = root_sum_table()
    flags = [[flag for (_, flag) in row] for row in table]
    assert flags == TABLE_FLAGS
    # spot-check two entries
    assert table[0][1] == (THETA, True)
    assert table[2][3] == (ALPHA2, True)


def test_column_weights_sum_to_zero_on_flag_generators():
    for poly in qpair.all_flag_generators().values():
        assert qpair.u_poly_weight(poly) == (0, 0)
    # and on products of flag generators
    z1 = qpair.flag_generator(1, 2, 1)
    z2 = qpair.flag_generator(2, 3, 2)
    assert qpair.u_poly_weight(z1 * z2) == (0, 0)


def test_fundamental_weight_conversion():
    # alpha1 = 2w1 - w2 and alpha2 = -w1 + 2w2 reproduce the Cartan matrix
    assert rootdata.FUNDAMENTAL["alpha1"] == (2, -1)
    assert rootdata.FUNDAMENTAL["alpha2"] == (-1, 2)
