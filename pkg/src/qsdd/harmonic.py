"""The lambda side: D-pairing, adjoint operators, volume polynomials,
harmonics and expansions in the differences lambda_i - lambda_{i+m}."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Dict, List

from .basis import forest_poly_of_code, forest_polynomial, slide_polynomial, qseqs, trim_composite, volume_paths
from .forest import IndexedForest, enumerate_class, normal_word, thompson_normal_form
from .linalg import rank_of
from .poly import Code, LPoly, XPoly, canon, code_factorial


class NotInDifferenceSubring(ValueError):
    def __init__(self, residual: LPoly):
        super().__init__(f"not a polynomial in the differences; residual {residual.format()}")
        self.residual = residual


def d_pairing(f: XPoly, g: LPoly) -> Fraction:
    """<x^c, l^d> = delta_{c,d} c!, extended bilinearly."""
    total = Fraction(0)
    for c, a in f.items():
        b = g.coeff(c)
        if b:
            total += a * b * code_factorial(c)
    return total


def rope_dual(g: LPoly, i: int) -> LPoly:
    """g(l_1, ..., l_{i-1}, l_{i+1}, ...): argument i onward moves up one slot."""
    if i < 1:
        raise ValueError("index must be >= 1")
    return g.map_codes(lambda c: [(c[: i - 1] + (0,) + c[i - 1 :] if len(c) >= i else c, 1)])


def vope(g: LPoly, i: int, m: int = 1) -> LPoly:
    """Integral of g(l_1..l_{i-1}, z, l_{i+m+1}, ...) dz from l_{i+m} to l_i."""
    if i < 1 or m < 1:
        raise ValueError("need i >= 1 and m >= 1")

    def act(c):
        c = c + (0,) * max(0, i - len(c))
        a = c[i - 1]
        pre, post = c[: i - 1], c[i:]
        s = Fraction(1, a + 1)
        return [
            (pre + (a + 1,) + (0,) * m + post, s),
            (pre + (0,) * m + (a + 1,) + post, -s),
        ]

    return g.map_codes(act)


def adjoint_ops(g: LPoly, i: int, m: int = 1, which: str = "T") -> LPoly:
    if which in ("T", "T∨", "vope"):
        return vope(g, i, m)
    if which in ("R", "R∨", "rope"):
        out = g
        for _ in range(m):
            out = rope_dual(out, i)
        return out
    raise ValueError(f"unknown adjoint operator {which!r}")


def volume_recursive(F: IndexedForest, word=None) -> LPoly:
    """Integrate one node at a time along a trim word: the first letter's
    operator is applied first."""
    if word is None:
        word = normal_word(F)
    elif thompson_normal_form(word, F.m) != F.code:
        raise ValueError(f"word {word} does not represent {F}")
    g = LPoly.one()
    for i in word:
        g = vope(g, i, F.m)
    return g


def volume_polynomial(F: IndexedForest, method: str = "recursive") -> LPoly:
    if method == "recursive":
        return volume_recursive(F)
    if method == "paths":
        return volume_paths(F)
    raise ValueError(f"unknown method {method!r}")


def truncate(g: LPoly, n: int) -> LPoly:
    """Set l_j = 0 for j > n."""
    return LPoly._raw({c: a for c, a in g.items() if len(c) <= n})


def differentiate(g: LPoly, c) -> LPoly:
    """Apply d^c = prod (d/dl_i)^{c_i}."""
    c = canon(c)

    def act(d):
        if len(d) < len(c) or any(d[k] < c[k] for k in range(len(c))):
            return []
        s = 1
        for k in range(len(c)):
            for t in range(c[k]):
                s *= d[k] - t
        return [(tuple(d[k] - (c[k] if k < len(c) else 0) for k in range(len(d))), s)]

    return g.map_codes(act)


def apply_differential(f: XPoly, g: LPoly) -> LPoly:
    """f(d/dl_1, d/dl_2, ...) g."""
    out = LPoly.zero()
    for c, a in f.items():
        out = out + differentiate(g, c) * a
    return out


def _require_lvars(g: LPoly, n: int):
    if g.nvars() > n:
        raise ValueError(f"polynomial uses l{g.nvars()} but only l1..l{n} are allowed")


def is_harmonic(g: LPoly, n: int, m: int = 1) -> bool:
    """Annihilated by every fundamental F_a, a in QSeq^m_n, 1 <= |a| <= deg g."""
    _require_lvars(g, n)
    if g.degree() <= 0:
        return True
    for a in qseqs(n, m, g.degree()):
        if a and apply_differential(slide_polynomial(a, m), g):
            return False
    return True


def harmonic_basis(n: int, m: int = 1) -> List[LPoly]:
    return [volume_recursive(F) for F in enumerate_class("Supp", n, m)]


def lambda_difference_coeffs(g: LPoly, m: int = 1) -> Dict[Code, Fraction]:
    """Coefficients of g in the monomials prod (l_i - l_{i+m})^{c_i}.

    With N the largest index in g, write l_j = u_j + u_{j+m} + ... down to
    a leftover l_t with t > N - m and substitute.  Terms that keep a
    leftover variable mean g is not in the difference subring."""
    N = g.nvars()
    top = N - m
    images: Dict[int, LPoly] = {}
    for j in range(N, 0, -1):
        if j > top:
            images[j] = LPoly.variable(j)
        else:
            images[j] = LPoly.variable(j) + images[j + m]
    # here index j <= top stands for u_j and index j > top for a leftover l_j
    out = LPoly.zero()
    for c, a in g.items():
        term = LPoly.const(a)
        for j, e in enumerate(c, start=1):
            if e:
                term = term * images[j] ** e
        out = out + term
    residual = LPoly._raw({c: a for c, a in out.items() if len(c) > max(top, 0)})
    if residual:
        raise NotInDifferenceSubring(residual)
    return dict(out.items())


def from_difference_coeffs(coeffs: Dict[Code, Fraction], m: int = 1) -> LPoly:
    out = LPoly.zero()
    for c, a in coeffs.items():
        term = LPoly.const(a)
        for i, e in enumerate(c, start=1):
            if e:
                term = term * (LPoly.variable(i) - LPoly.variable(i + m)) ** e
        out = out + term
    return out


def difference_coeffs_via_trims(F: IndexedForest) -> Dict[Code, Fraction]:
    """b_c = ct T_F(prod P_{underline(i)}^{c_i}) / c! for |c| = |F|."""
    k, m = F.size, F.m
    # V_F lives in l_1..l_N with N the last leaf, so u_i needs i <= N - m
    L = max((v.last_leaf for v in F.nodes), default=m) - m
    gens = [forest_poly_of_code((0,) * (i - 1) + (1,), m) for i in range(1, L + 1)]
    out = {}
    for c in product(range(k + 1), repeat=L):
        if sum(c) != k:
            continue
        f = XPoly.one()
        for i, e in enumerate(c):
            if e:
                f = f * gens[i] ** e
        val = trim_composite(f, F).constant_term()
        if val:
            out[canon(c)] = Fraction(val, code_factorial(c))
    return out


def derivative_closure(polys: List[LPoly], n: int) -> List[LPoly]:
    """All iterated first-order derivatives d/dl_i (i <= n), deduplicated."""
    seen = {}
    stack = [p for p in polys if p]
    while stack:
        p = stack.pop()
        if p in seen:
            continue
        seen[p] = None
        for i in range(1, n + 1):
            q = differentiate(p, (0,) * (i - 1) + (1,))
            if q and q not in seen:
                stack.append(q)
    return list(seen)


def derivative_spanning(n: int) -> Dict[str, int]:
    """Ranks behind the statement that derivatives of the top-degree harmonic
    basis elements span all harmonics (m = 1)."""
    supp = enumerate_class("Supp", n, 1)
    top = max((F.size for F in supp), default=0)
    seeds = [volume_recursive(F) for F in supp if F.size == top]
    span = derivative_closure(seeds, n)
    rows = [dict(p.items()) for p in span]
    basis = [dict(volume_recursive(F).items()) for F in supp]
    return {
        "span_rank": rank_of(rows),
        "joint_rank": rank_of(rows + basis),
        "basis_rank": rank_of(basis),
        "expected": len(supp),
    }


def pairing_matrix_entry(G: IndexedForest, F: IndexedForest) -> Fraction:
    return d_pairing(forest_polynomial(G), volume_recursive(F))
