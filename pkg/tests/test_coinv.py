import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsdd.basis import Expansion, forest_coefficient
from qsdd.coinv import (
    IdealSpec,
    RelationResult,
    coinv_dimensions,
    coinv_reduce,
    ideal_graded_rank,
    ideal_membership,
    random_poly,
    rev_mirror_check,
    verify_nilhecke,
)
from qsdd.forest import IndexedForest, catalan, enumerate_class, theta_factorization, underline
from qsdd.operators import trim
from qsdd.poly import XPoly, parse_poly, x


def test_membership_examples():
    spec = IdealSpec(3)
    assert ideal_membership(x(1) + x(2) + x(3), spec)
    assert ideal_membership(x(1) * x(2) * x(3), spec)
    assert ideal_membership(x(1) * (x(1) + x(2) + x(3)), spec)
    assert not ideal_membership(x(1), spec)
    assert not ideal_membership(x(1) + x(2), spec)
    assert ideal_membership(XPoly.zero(), spec)


def test_membership_in_higher_ideal():
    spec = IdealSpec(3, k=2)
    assert not ideal_membership(x(1) + x(2) + x(3), spec)
    assert ideal_membership((x(1) + x(2) + x(3)) ** 2, spec)
    assert ideal_membership(parse_poly("x1*x2 + x1*x3 + x2*x3"), spec)


def test_spec_validation():
    with pytest.raises(ValueError):
        IdealSpec(-1)
    with pytest.raises(ValueError):
        IdealSpec(3, m=0)
    with pytest.raises(ValueError):
        ideal_membership(x(4), IdealSpec(3))


def test_graded_dimensions():
    assert coinv_dimensions(3) == {0: 1, 1: 2, 2: 2}
    for n in range(7):
        assert sum(coinv_dimensions(n).values()) == catalan(n)


@pytest.mark.parametrize("n,m,k", [(3, 1, 1), (4, 1, 1), (3, 1, 2), (4, 2, 1), (4, 2, 2), (4, 1, 2)])
def test_quotient_dimensions_match_linear_algebra(n, m, k):
    for d in range(4):
        monomials = comb(n + d - 1, d)
        want = monomials - ideal_graded_rank(n, m, k, d)
        got = 0
        for F in enumerate_class("LTer", n, m, max_size=d):
            if F.size == d and theta_factorization(F, n)[0].size < k:
                got += 1
        assert got == want, (n, m, k, d)


def test_reduce_examples():
    assert coinv_reduce(x(1) + x(2) + x(3), 3) == Expansion()
    # x3 = P_(0,0,1) - P_(0,1) and P_(0,0,1) = x1 + x2 + x3
    assert coinv_reduce(x(3), 3) == Expansion({(0, 1): -1})
    assert coinv_reduce(x(1), 3, k=2) == Expansion({(1,): 1})


@settings(max_examples=30)
@given(st.integers(0, 10**6), st.integers(2, 4))
def test_reduction_is_a_ring_map_on_the_quotient(seed, n):
    rng = random.Random(seed)
    f, g = random_poly(rng, n, max_deg=2), random_poly(rng, n, max_deg=2)
    rf, rg = coinv_reduce(f, n).reconstruct(), coinv_reduce(g, n).reconstruct()
    assert coinv_reduce(f * g, n) == coinv_reduce(rf * rg, n)
    assert ideal_membership(f - rf, IdealSpec(n))


@settings(max_examples=20)
@given(st.integers(0, 10**6), st.integers(2, 5))
def test_ideal_elements_have_no_supported_coefficients(seed, n):
    rng = random.Random(seed)
    e1 = sum((x(i) for i in range(1, n + 1)), XPoly.zero())
    f = random_poly(rng, n, max_deg=2) * e1
    for H in enumerate_class("Supp", n):
        assert forest_coefficient(f, H) == 0


def test_nil_hecke_hand_example():
    # T_2(x_2 f) = R_1 f + x_1 T_1 f + x_2 T_2 f with f = x1 x2
    f = x(1) * x(2)
    assert trim(x(2) * f, 2) == x(1) * x(2)
    assert trim(f, 1) == XPoly.zero() and trim(f, 2) == x(1)


@pytest.mark.parametrize("n,m", [(3, 1), (4, 1), (4, 2)])
def test_nil_hecke_relations(n, m):
    results = verify_nilhecke(n, m, trials=10, seed=7)
    assert results and all(r.passed for r in results)
    assert results[0].line().endswith(": PASS")


def test_relation_failure_line():
    r = RelationResult("demo", 1, x(1))
    assert r.line() == "RELATION demo: FAIL (counterexample: x1)"


def test_verify_rejects_zero_trials():
    with pytest.raises(ValueError):
        verify_nilhecke(3, trials=0)


def test_rev_mirror_small_case():
    # rev_2 x1 = x2 = P_(0,1) - P_(1), and P_(0,1) = x1 + x2 lies in the ideal
    assert rev_mirror_check(underline(1), 2)
    with pytest.raises(ValueError):
        rev_mirror_check(IndexedForest((0, 0, 1)), 2)
