import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsdd.basis import (
    Expansion,
    forest_coefficient,
    forest_expand,
    forest_expand_direct,
    forest_poly_of_code,
    forest_polynomial,
    fundamental_expand,
    fundamental_reconstruct,
    is_qseq,
    monomial_to_forest,
    path_code,
    path_systems,
    epsilon_sign,
    qseq_zigzag,
    qseqs,
    slide_polynomial,
    slide_sequences,
    trim_composite,
    zigzag_qseq,
)
from qsdd.coinv import random_poly
from qsdd.forest import IndexedForest, enumerate_class, forest_of_word, trim_forest, underline
from qsdd.operators import revlex_leading, trim
from qsdd.poly import XPoly, parse_poly, x
from qsdd.verify import worked_forest

ms = st.integers(1, 3)


@st.composite
def forests(draw, m=None, max_len=4):
    m = draw(ms) if m is None else m
    return forest_of_word(draw(st.lists(st.integers(1, 4), max_size=max_len)), m)


def brute_forest_polynomial(F):
    """Sum over all node labellings kappa with the filling conditions, checked directly."""
    nodes = F.nodes
    out = XPoly.zero()
    for kappa in itertools.product(*[range(1, v.flag + 1) for v in nodes]):
        ok = all((v.flag - kappa[v.index]) % F.m == 0 for v in nodes)
        for v in nodes:
            for j, (kind, ref) in enumerate(v.children):
                if kind == "node" and not kappa[v.index] <= kappa[ref] - j:
                    ok = False
        if ok:
            term = XPoly.one()
            for k in kappa:
                term = term * x(k)
            out = out + term
    return out


def test_small_forest_polynomials():
    assert forest_poly_of_code(()) == XPoly.one()
    assert forest_poly_of_code((0, 1)) == x(1) + x(2)
    assert forest_poly_of_code((2,)) == x(1) ** 2
    assert forest_poly_of_code((0, 2)) == parse_poly("x1^2 + x1*x2 + x2^2")
    assert forest_poly_of_code((1, 1)) == x(1) * x(2)


def test_underline_polynomials():
    assert forest_polynomial(underline(3)) == x(1) + x(2) + x(3)
    assert forest_polynomial(underline(3, 2)) == x(1) + x(3)
    assert forest_polynomial(underline(4, 3)) == x(1) + x(4)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_forest_polynomials_match_brute_force(m):
    for F in enumerate_class("LTer", 5, m, max_size=3):
        assert forest_polynomial(F) == brute_forest_polynomial(F)


@given(forests())
def test_leading_term_is_code(F):
    P = forest_polynomial(F)
    assert revlex_leading(P) == F.code and P.coeff(F.code) == 1
    assert P.is_homogeneous() and P.degree() == F.size
    assert all(a > 0 for _, a in P.items())


@given(forests(max_len=5), st.integers(1, 7))
def test_trim_theorem(F, i):
    got = trim(forest_polynomial(F), i, F.m)
    want = forest_polynomial(trim_forest(F, i)) if i in F.qdes() else XPoly.zero()
    assert got == want


@given(ms.flatmap(lambda m: st.tuples(forests(m), forests(m))))
def test_duality(t):
    F, G = t
    assert forest_coefficient(forest_polynomial(G), F) == (1 if F == G else 0)


@given(forests(), st.data())
def test_trim_composite_is_word_independent(F, data):
    from qsdd.forest import trim_sequences

    words = sorted(trim_sequences(F))
    w = data.draw(st.sampled_from(words))
    f = forest_polynomial(F) * (x(1) + x(3)) ** 2
    assert trim_composite(f, F, w) == trim_composite(f, F)


def test_trim_composite_rejects_wrong_word():
    with pytest.raises(ValueError):
        trim_composite(x(1), underline(1), (2,))


def test_expansion_examples():
    e = forest_expand(parse_poly("x1^2 + 2*x1*x2 + x2^2"))
    assert e == Expansion({(0, 2): 1, (1, 1): 1})
    e = forest_expand(parse_poly("x2^2*x3"))
    assert e == Expansion({(0, 2, 1): 1, (2, 0, 1): -1, (1, 1, 1): -1})
    assert e.format() == "(2,0,1): -1\n(1,1,1): -1\n(0,2,1): 1"
    assert not e.is_nonnegative()


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.integers(1, 2))
def test_expansion_methods_agree_and_reconstruct(seed, m):
    f = random_poly(random.Random(seed), 4, max_deg=3)
    e = forest_expand(f, m)
    assert e.reconstruct() == f
    assert e == forest_expand_direct(f, m)


def test_expansion_json():
    e = forest_expand(x(2))
    # x2 = P_(0,1) - P_(1)
    assert e.to_json() == '{"m": 1, "terms": [{"code": [1], "coeff": "-1"}, {"code": [0, 1], "coeff": "1"}]}'


def test_products_of_underlines_are_positive():
    for i in range(1, 4):
        for F in enumerate_class("LTer", 3, 1, max_size=2):
            assert forest_expand(forest_polynomial(underline(i)) * forest_polynomial(F)).is_nonnegative()


# ---- slides ---------------------------------------------------------------


def test_slide_example():
    assert set(slide_sequences((4, 2, 2))) == {
        (4, 2, 2), (4, 1, 1), (3, 2, 2), (3, 1, 1), (2, 1, 1), (4, 2, 1), (3, 2, 1),
    }


def test_slide_for_m2_respects_residues():
    for seq in slide_sequences((6, 5, 3, 3), 2):
        assert [s % 2 for s in seq] == [0, 1, 1, 1]


def test_qseq_membership():
    assert is_qseq((3, 3, 2), 3) and not is_qseq((3, 1), 3) and not is_qseq((2,), 3)
    assert is_qseq((2,), 3, 2)
    assert list(qseqs(2, 1, 2)) == [(), (2,), (2, 2), (2, 1)]


@pytest.mark.parametrize("n,m", [(3, 1), (4, 1), (4, 2), (5, 2)])
def test_zigzag_slides(n, m):
    for a in qseqs(n, m, 4):
        Z = qseq_zigzag(a, n, m)
        assert zigzag_qseq(Z, n) == a
        assert forest_polynomial(Z) == slide_polynomial(a, m)


def test_fundamental_expansion_of_square():
    f = (x(1) + x(2) + x(3)) ** 2
    assert fundamental_expand(f, 3) == {(3, 3): 1, (3, 2): 1}


@settings(max_examples=30)
@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(1, 2))
def test_fundamental_expansion_recovers_known_coefficients(seed, n, m):
    # oracle: build f from chosen coefficients; slides are independent
    rng = random.Random(seed)
    pool = [a for a in qseqs(n, m, 3) if a]
    want = {a: rng.randint(-3, 3) for a in rng.sample(pool, min(3, len(pool)))}
    want = {a: c for a, c in want.items() if c}
    f = fundamental_reconstruct(want, m)
    assert fundamental_expand(f, n, m) == want


def test_fundamental_expansion_rejects_non_quasisymmetric():
    with pytest.raises(ValueError):
        fundamental_expand(x(1), 2)


# ---- path systems and signs ---------------------------------------------


def test_worked_path_system():
    F = worked_forest()
    d = path_code(F, ["R", "R", "L", "L", "L", "R"])
    assert d == (0, 0, 1, 2, 0, 0, 1, 0, 0, 0, 0, 2)
    assert epsilon_sign(F, d) == -1


@pytest.mark.parametrize("m", [1, 2])
def test_path_systems_are_determined_by_their_code(m):
    for F in enumerate_class("LTer", 4, m, max_size=4):
        seen = {}
        for _, d, sign in path_systems(F):
            assert d not in seen
            seen[d] = sign
            assert epsilon_sign(F, d) == sign


def test_monomial_expansion_example():
    assert monomial_to_forest((0, 2, 1)) == forest_expand(parse_poly("x2^2*x3"))
    assert monomial_to_forest(()) == Expansion({(): 1})
