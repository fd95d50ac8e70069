from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from qsdd.linalg import bareiss_rank, integer_rows, rank_of


def fraction_rank(matrix):
    """Plain Gaussian elimination over the rationals."""
    a = [[Fraction(v) for v in r] for r in matrix]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][col]:
                f = a[r][col] / a[rank][col]
                a[r] = [u - f * v for u, v in zip(a[r], a[rank])]
        rank += 1
    return rank


@st.composite
def matrices(draw):
    rows = draw(st.integers(1, 6))
    cols = draw(st.integers(1, 6))
    base = draw(st.lists(st.lists(st.integers(-4, 4), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    # append combinations of earlier rows so rank deficiency is common
    extra = draw(st.lists(st.tuples(st.integers(0, rows - 1), st.integers(0, rows - 1), st.integers(-3, 3)), max_size=3))
    for i, j, c in extra:
        base.append([u + c * v for u, v in zip(base[i], base[j])])
    return base


@given(matrices())
def test_bareiss_matches_rational_elimination(a):
    assert bareiss_rank(a) == fraction_rank(a)


def test_examples():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[0, 1, 0], [0, 0, 1], [0, 1, 1]]) == 2
    assert rank_of([]) == 0


def test_sparse_rows_with_fractions():
    rows = [{"a": Fraction(1, 2), "b": 1}, {"a": 1, "b": 2}, {"c": Fraction(2, 3)}]
    assert integer_rows(rows)[0] == [1, 2, 0]
    assert rank_of(rows) == 2
