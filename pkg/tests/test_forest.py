import itertools
import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsdd.forest import (
    IndexedForest,
    blossom,
    catalan,
    code_of_forest,
    count_decreasing_labelings,
    divide,
    enumerate_class,
    forest_from_trees,
    forest_of_code,
    forest_of_word,
    graft,
    in_lter,
    in_rter,
    in_supp,
    in_zigzag,
    leq,
    mirror,
    monoid_product,
    normal_word,
    qdes,
    qdes_of_code,
    raney,
    star,
    supp_max_size,
    tau_shift,
    theta_factorization,
    thompson_normal_form,
    trim_forest,
    trim_sequences,
    underline,
)
from qsdd.verify import worked_forest

ms = st.integers(1, 3)
words = st.lists(st.integers(1, 5), max_size=5)


@st.composite
def forests(draw, m=None):
    m = draw(ms) if m is None else m
    return forest_of_word(draw(words), m)


def test_empty_and_single_node():
    assert IndexedForest().size == 0
    assert IndexedForest().trees == ()
    assert underline(2).code == (0, 1)
    assert IndexedForest((1,)).bracket() == "(..)"
    assert IndexedForest((0, 2, 0, 1)).bracket() == ". ((..)(..))"


def test_trailing_zeros_are_canonical():
    assert IndexedForest((1, 0, 0)) == IndexedForest((1,))


def test_negative_code_rejected():
    with pytest.raises(ValueError):
        IndexedForest((1, -1))


def test_worked_forest_layout():
    F = worked_forest()
    assert F.code == (0, 2, 0, 1, 0, 0, 1, 0, 0, 0, 2)
    assert F.size == 6
    assert sorted(v.flag for v in F.nodes) == [2, 2, 4, 7, 11, 11]
    assert F.qdes() == frozenset({2, 4, 7, 11})


@pytest.mark.parametrize("m", [1, 2, 3])
def test_code_tree_round_trip(m):
    for F in enumerate_class("LTer", 6, m, max_size=4):
        assert forest_from_trees(F.trees, m) == F
        assert code_of_forest(forest_of_code(F.code, m)) == F.code


@given(forests())
def test_structural_qdes_matches_code_rule(F):
    assert F.qdes() == qdes_of_code(F.code, F.m) == qdes(F)


def test_qdes_for_m2():
    # nodes at flag i with m+1 = 3 leaf children
    assert qdes_of_code((1, 0, 0, 1), 2) == frozenset({1, 4})
    assert qdes_of_code((1, 1), 2) == frozenset({2})


def test_blossom_trim_examples():
    assert blossom(IndexedForest((1,)), 1).code == (2,)
    assert blossom(IndexedForest((0, 1)), 1).code == (1, 0, 1)
    assert trim_forest(IndexedForest((1, 0, 1)), 3).code == (1,)
    with pytest.raises(ValueError):
        trim_forest(IndexedForest((1, 1)), 1)


@given(forests(), st.integers(1, 6))
def test_trim_undoes_blossom(F, i):
    G = blossom(F, i)
    assert i in G.qdes()
    assert trim_forest(G, i) == F
    assert G.size == F.size + 1


@given(forests(m=2), forests(m=2))
def test_graft_agrees_with_word_product(F, G):
    assert graft(F, G) == monoid_product(F, G) == F * G


@given(ms.flatmap(lambda m: st.tuples(forests(m), forests(m), forests(m))))
def test_product_is_associative(t):
    F, G, H = t
    assert (F * G) * H == F * (G * H)


@given(ms.flatmap(lambda m: st.tuples(forests(m), forests(m))))
def test_right_cancellation(t):
    F, G = t
    assert divide(F * G, G) == F
    assert leq(G, F * G)


def test_divide_examples():
    assert divide(IndexedForest((0, 1, 1)), underline(3)) == IndexedForest((0, 1))
    assert divide(IndexedForest((0, 1, 1)), underline(1)) is None


@given(forests())
def test_normal_word_represents_forest(F):
    assert forest_of_word(normal_word(F), F.m) == F
    assert thompson_normal_form(normal_word(F), F.m) == F.code


@given(words, ms, st.integers(0, 10**6))
def test_rewriting_is_confluent(w, m, seed):
    # apply i.j -> j.(i+m) at random positions; the normal form never changes
    rng = random.Random(seed)
    nf = thompson_normal_form(w, m)
    w = list(w)
    for _ in range(10):
        spots = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if not spots:
            break
        p = rng.choice(spots)
        w[p], w[p + 1] = w[p + 1], w[p] + m
        assert thompson_normal_form(w, m) == nf
    assert forest_of_word(w, m).code == nf


def test_trim_sequences_example():
    F = IndexedForest((1, 0, 1))
    assert trim_sequences(F) == {(1, 3), (2, 1)}
    assert count_decreasing_labelings(F) == 2


@pytest.mark.parametrize("m", [1, 2])
def test_trim_sequences_brute_force(m):
    for F in enumerate_class("LTer", 4, m, max_size=4):
        letters = range(1, max(F.max_flag(), 1) + 1)
        brute = {w for w in itertools.product(letters, repeat=F.size) if thompson_normal_form(w, m) == F.code}
        assert trim_sequences(F) == brute
        assert len(brute) == count_decreasing_labelings(F)


@pytest.mark.parametrize("n,k", [(1, 3), (3, 2), (4, 3), (5, 2)])
def test_lter_counts_are_multisets(n, k):
    # codes of length <= n and sum k
    got = [F for F in enumerate_class("LTer", n, 1, max_size=k) if F.size == k]
    assert len(got) == comb(n + k - 1, k)


def test_class_inclusions():
    n = 5
    lter = enumerate_class("LTer", n, 1, max_size=4)
    assert all(in_lter(F, n) for F in lter)
    for m in (1, 2):
        assert all(in_lter(Z, n) for Z in enumerate_class("Zigzag", n, m, max_size=4))
    supp = set(enumerate_class("Supp", n))
    assert supp <= set(lter)
    assert all(F.size <= supp_max_size(n) for F in supp)


def test_rter_needs_flag_bound():
    with pytest.raises(ValueError):
        enumerate_class("RTer", 3, 1, max_size=2)
    got = enumerate_class("RTer", 2, 1, max_size=1, max_flag=4)
    assert [F.code for F in got] == [(), (0, 1), (0, 0, 1), (0, 0, 0, 1)]
    assert all(in_rter(F, 2) for F in got)
    assert not in_rter(IndexedForest((1,)), 2)


def test_class_errors():
    with pytest.raises(ValueError):
        enumerate_class("Nope", 3)
    with pytest.raises(ValueError):
        enumerate_class("LTer", 3)


def test_counts():
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [raney(n, 2) for n in range(7)] == [1, 1, 1, 2, 3, 7, 12]
    assert all(raney(n, 1) == catalan(n) for n in range(12))


def test_supp_enumeration_order_is_size_then_revlex():
    got = [F.code for F in enumerate_class("Supp", 3)]
    assert got == [(), (1,), (0, 1), (2,), (1, 1)]


def test_tau_shift():
    F = IndexedForest((0, 1))
    assert tau_shift(F, 1).code == (0, 0, 1)
    assert tau_shift(F, -1).code == (1,)
    assert tau_shift(IndexedForest((1,)), -1) is None


@pytest.mark.parametrize("n,m", [(4, 1), (5, 1), (5, 2), (6, 2)])
def test_theta_factorization_is_a_bijection(n, m):
    for F in enumerate_class("LTer", n, m, max_size=4):
        G, H = theta_factorization(F, n)
        assert in_zigzag(G, n) and in_supp(H, n)
        assert star(G, H, n) == F


def test_star_undefined_when_zigzag_sits_too_far_left():
    assert star(IndexedForest((0, 1, 1)), IndexedForest((2,)), 3) is None
    assert theta_factorization(IndexedForest((1, 0, 1)), 3) == (IndexedForest((0, 0, 1)), IndexedForest((1,)))


@pytest.mark.parametrize("n", range(1, 7))
def test_mirror_is_a_size_preserving_involution(n):
    for F in enumerate_class("Supp", n):
        M = mirror(F, n)
        assert in_supp(M, n) and M.size == F.size
        assert mirror(M, n) == F


def test_mirror_example():
    assert mirror(IndexedForest((2,)), 3) == IndexedForest((1, 1))


@pytest.mark.parametrize("m", [1, 2])
def test_theta_round_trip_on_random_large_forests(m):
    rng = random.Random(13)
    for _ in range(50):
        F = forest_of_word([rng.randint(1, 13 - m * k) for k in range(6)], m)
        if F.max_flag() > 13:
            continue
        G, H = theta_factorization(F, 13)
        assert G.size + H.size == 6
        assert star(G, H, 13) == F
