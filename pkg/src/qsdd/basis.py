"""Forest polynomials, composite trimming, basis expansions, slide
polynomials and the signed monomial-to-forest expansion."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .forest import (
    IndexedForest,
    enumerate_class,
    forest_of_word,
    in_zigzag,
    normal_word,
    thompson_normal_form,
)
from .operators import is_quasisymmetric, revlex_leading, trim, trim_word
from .poly import Code, LPoly, XPoly, canon, code_factorial, revlex_key


class Expansion:
    """Forest-basis coefficients: code -> nonzero integer, for a fixed m."""

    __slots__ = ("coeffs", "m")

    def __init__(self, coeffs: Dict[Code, int] | None = None, m: int = 1):
        self.m = m
        self.coeffs = {canon(c): a for c, a in (coeffs or {}).items() if a}

    def __eq__(self, other):
        return isinstance(other, Expansion) and self.m == other.m and self.coeffs == other.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, c):
        return self.coeffs.get(canon(c), 0)

    def items(self) -> List[Tuple[Code, int]]:
        return sorted(self.coeffs.items(), key=lambda t: (sum(t[0]), revlex_key(t[0])))

    def forests(self) -> List[IndexedForest]:
        return [IndexedForest(c, self.m) for c, _ in self.items()]

    def reconstruct(self) -> XPoly:
        out = XPoly.zero()
        for c, a in self.coeffs.items():
            out = out + forest_polynomial(IndexedForest(c, self.m)) * a
        return out

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coeffs.values())

    def to_json_obj(self) -> dict:
        return {"m": self.m, "terms": [{"code": list(c), "coeff": str(a)} for c, a in self.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def format(self) -> str:
        rows = [("(" + ",".join(map(str, c)) + ")", str(a)) for c, a in self.items()]
        if not rows:
            return ""
        w = max(len(r[0]) for r in rows)
        return "\n".join(f"{k + ':':<{w + 1}} {v}" for k, v in rows)

    def __repr__(self):
        return f"Expansion({dict(self.items())}, m={self.m})"


# ---- forest polynomials ---------------------------------------------------


def forest_polynomial(F: IndexedForest) -> XPoly:
    """Generating function of compatible fillings: kappa(v) <= flag(v),
    kappa(v) = flag(v) mod m, and kappa(v) <= kappa(v_j) - j for every
    internal child v_j."""
    return _forest_poly(F.code, F.m)


@lru_cache(maxsize=None)
def _forest_poly(code: Code, m: int) -> XPoly:
    F = IndexedForest(code, m)
    nodes = F.nodes
    memo: Dict[Tuple[int, int], XPoly] = {}

    def gen(v: int, lb: int) -> XPoly:
        key = (v, lb)
        if key in memo:
            return memo[key]
        node = nodes[v]
        flag = node.flag
        kids = [(j, ref) for j, (kind, ref) in enumerate(node.children) if kind == "node"]
        out = XPoly.zero()
        # smallest admissible value >= lb with the right residue
        k = lb + ((flag - lb) % m)
        while k <= flag:
            term = XPoly.variable(k)
            for j, ref in kids:
                term = term * gen(ref, k + j)
                if not term:
                    break
            out = out + term
            k += m
        memo[key] = out
        return out

    P = XPoly.one()
    for v in nodes:
        if v.parent is None:
            P = P * gen(v.index, 1)
    return P


def forest_poly_of_code(c, m: int = 1) -> XPoly:
    return forest_polynomial(IndexedForest(c, m))


def trim_composite(f: XPoly, F: IndexedForest, word: Optional[Tuple[int, ...]] = None) -> XPoly:
    """T_F f = T_{i_1} ... T_{i_k} f for a word (i_1..i_k) of F."""
    if word is None:
        word = normal_word(F)
    elif thompson_normal_form(word, F.m) != F.code:
        raise ValueError(f"word {word} does not represent {F}")
    return trim_word(f, word, F.m)


def forest_coefficient(f: XPoly, F: IndexedForest) -> int:
    """ct(T_F f), the coefficient of P_F in f."""
    return trim_composite(f, F).constant_term()


def forest_expand(f: XPoly, m: int = 1) -> Expansion:
    """Expand f in the forest basis by peeling off revlex-leading terms."""
    out: Dict[Code, int] = {}
    while f:
        c = revlex_leading(f)
        a = f.coeff(c)
        out[c] = a
        f = f - _forest_poly(c, m) * a
    return Expansion(out, m)


def forest_expand_direct(f: XPoly, m: int = 1) -> Expansion:
    """Expansion by evaluating ct(T_F f) over every candidate forest."""
    n = f.nvars()
    out = {}
    for d in f.homogeneous_components():
        for F in enumerate_class("LTer", n, m, d):
            if F.size == d:
                a = forest_coefficient(f, F)
                if a:
                    out[F.code] = a
    return Expansion(out, m)


# ---- slide polynomials ----------------------------------------------------


def slide_sequences(a, m: int = 1) -> Iterator[Tuple[int, ...]]:
    """Compatible sequences: i_j = a_j mod m, a_j >= i_j >= i_{j+1} >= 1,
    strict where a_j > a_{j+1}."""
    a = tuple(a)
    if any(v < 1 for v in a):
        raise ValueError("slide entries must be >= 1")
    k = len(a)

    def rec(j, prev, acc):
        if j == k:
            yield tuple(acc)
            return
        hi = a[j]
        if j > 0:
            hi = min(hi, prev - 1 if a[j - 1] > a[j] else prev)
        v = hi - ((hi - a[j]) % m)
        while v >= 1:
            acc.append(v)
            yield from rec(j + 1, v, acc)
            acc.pop()
            v -= m

    yield from rec(0, None, [])


def slide_polynomial(a, m: int = 1) -> XPoly:
    terms: Dict[Code, int] = {}
    for seq in slide_sequences(a, m):
        c = [0] * (max(seq) if seq else 0)
        for v in seq:
            c[v - 1] += 1
        c = canon(c)
        terms[c] = terms.get(c, 0) + 1
    return XPoly(terms)


def is_qseq(a, n: int, m: int = 1) -> bool:
    a = tuple(a)
    if not a:
        return True
    if not (n >= a[0] >= n - m + 1) or a[-1] < 1:
        return False
    return all(0 <= a[i] - a[i + 1] <= m for i in range(len(a) - 1))


def qseqs(n: int, m: int = 1, max_len: int = 0) -> Iterator[Tuple[int, ...]]:
    """All of QSeq^m_n with length <= max_len, shortest first."""
    level = [()]
    yield ()
    for _ in range(max_len):
        nxt = []
        for a in level:
            if not a:
                cands = range(n, max(1, n - m + 1) - 1, -1)
            else:
                cands = range(a[-1], max(1, a[-1] - m) - 1, -1)
            for b in cands:
                nxt.append(a + (b,))
        yield from nxt
        level = nxt


def qseq_zigzag(a, n: int, m: int = 1) -> IndexedForest:
    a = tuple(a)
    if not is_qseq(a, n, m):
        raise ValueError(f"{a} is not in QSeq^{m}_{n}")
    return forest_of_word(reversed(a), m)


def zigzag_qseq(Z: IndexedForest, n: int) -> Tuple[int, ...]:
    if not in_zigzag(Z, n):
        raise ValueError(f"{Z} is not in Zigzag_{n}")
    return tuple(reversed(normal_word(Z)))


def fundamental_expand(f: XPoly, n: int, m: int = 1) -> Dict[Tuple[int, ...], int]:
    """Coefficient of F_a is ct(T_{a_k} ... T_{a_1} f), walked as a tree of
    trimmings so shared prefixes are trimmed once."""
    if not is_quasisymmetric(f, n, m):
        raise ValueError("input is not quasisymmetric")
    out: Dict[Tuple[int, ...], int] = {}

    def rec(g: XPoly, a: Tuple[int, ...]):
        ct = g.constant_term()
        if ct:
            out[a] = ct
        if g.degree() <= 0:
            return
        if a:
            cands = range(a[-1], max(1, a[-1] - m) - 1, -1)
        else:
            cands = range(n, max(1, n - m + 1) - 1, -1)
        for b in cands:
            h = trim(g, b, m)
            if h:
                rec(h, a + (b,))

    rec(f, ())
    return out


def fundamental_reconstruct(exp: Dict[Tuple[int, ...], int], m: int = 1) -> XPoly:
    out = XPoly.zero()
    for a, c in exp.items():
        out = out + slide_polynomial(a, m) * c
    return out


# ---- path systems and epsilon ---------------------------------------------


def _bin_children(F: IndexedForest):
    """(left, right) child references in the binary skeleton: slot 0 and slot m."""
    return [(v.children[0], v.children[F.m]) for v in F.nodes]


def path_systems(F: IndexedForest) -> Iterator[Tuple[Tuple[str, ...], Code, int]]:
    """Every L/R choice on internal nodes with its path-length code d and
    sign (-1)^{#R}."""
    nodes = F.nodes
    kids = _bin_children(F)
    n = len(nodes)
    for mask in range(1 << n):
        choice = ["R" if mask >> k & 1 else "L" for k in range(n)]
        yield tuple(choice), _path_code(kids, choice), (-1) ** bin(mask).count("1")


def _path_code(kids, choice) -> Code:
    end = [0] * len(kids)
    for v in range(len(kids) - 1, -1, -1):
        kind, ref = kids[v][0 if choice[v] == "L" else 1]
        end[v] = ref if kind == "leaf" else end[ref]
    counts: Dict[int, int] = {}
    for e in end:
        counts[e] = counts.get(e, 0) + 1
    if not counts:
        return ()
    return canon(counts.get(i, 0) for i in range(1, max(counts) + 1))


def path_code(F: IndexedForest, choice) -> Code:
    return _path_code(_bin_children(F), tuple(choice))


def epsilon_sign(F: IndexedForest, c) -> int:
    """(-1)^{#R} for the unique L/R system with path-length code c, or 0."""
    c = canon(c)
    if sum(c) != F.size:
        return 0
    kids = _bin_children(F)
    nv = len(kids)
    end = [0] * nv
    counts: Dict[int, int] = {}

    def need(i):
        return c[i - 1] if i <= len(c) else 0

    # children have larger prefix indices, so go backwards
    def rec(v, sign):
        if v < 0:
            return sign
        for side, s in ((0, 1), (1, -1)):
            kind, ref = kids[v][side]
            e = ref if kind == "leaf" else end[ref]
            if counts.get(e, 0) + 1 > need(e):
                continue
            counts[e] = counts.get(e, 0) + 1
            end[v] = e
            r = rec(v - 1, sign * s)
            counts[e] -= 1
            if r:
                return r
        return 0

    return rec(nv - 1, 1)


def monomial_to_forest(c, m: int = 1) -> Expansion:
    """x^c = sum_G eps_G(c) P_G, with G ranging over LTer_N, N = len(c)."""
    c = canon(c)
    out = {}
    for G in enumerate_class("LTer", len(c), m, sum(c)):
        if G.size == sum(c):
            e = epsilon_sign(G, c)
            if e:
                out[G.code] = e
    return Expansion(out, m)


def volume_paths(F: IndexedForest) -> LPoly:
    terms: Dict[Code, Fraction] = {}
    for _, d, sign in path_systems(F):
        terms[d] = terms.get(d, 0) + Fraction(sign, code_factorial(d))
    return LPoly(terms)
