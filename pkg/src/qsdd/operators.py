"""Operators on the x-side: Bergeron-Sottile maps R, trimming operators T,
the quasisymmetrizing action sigma, and (long-range) divided differences."""

from __future__ import annotations

from typing import Dict

from .poly import Code, XPoly, canon, revlex_key


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError("m must be >= 1")


def bergeron_sottile(f: XPoly, i: int, m: int = 1) -> XPoly:
    """R^m_i: x_i..x_{i+m-1} -> 0, x_j -> x_{j-m} for j >= i+m."""
    _check_m(m)
    if i < 1:
        raise ValueError("index must be >= 1")
    lo, hi = i - 1, i - 1 + m
    out: Dict[Code, int] = {}
    for c, a in f.items():
        if any(c[lo:hi]):
            continue
        d = c[:lo] + c[hi:]
        out[d] = out.get(d, 0) + a
    return XPoly._raw({c: a for c, a in out.items() if a})


def rope_power(f: XPoly, k: int) -> XPoly:
    """R_1^k, which equals R^k_1."""
    return f if k == 0 else bergeron_sottile(f, 1, k)


def trim(f: XPoly, i: int, m: int = 1) -> XPoly:
    """T^m_i f = (R^m_{i+1} f - R^m_i f) / x_i."""
    diff = bergeron_sottile(f, i + 1, m) - bergeron_sottile(f, i, m)
    out: Dict[Code, int] = {}
    for c, a in diff.items():
        if len(c) < i or c[i - 1] == 0:
            raise ArithmeticError(f"internal error: T_{i} division by x{i} not exact on term {c}")
        d = list(c)
        d[i - 1] -= 1
        out[canon(d)] = a
    return XPoly._raw(out)


def trim_word(f: XPoly, word, m: int = 1) -> XPoly:
    """T_{i_1} ... T_{i_k} f, i.e. the last letter acts first."""
    for i in reversed(tuple(word)):
        if not f:
            break
        f = trim(f, i, m)
    return f


def hivert_sigma(f: XPoly, i: int) -> XPoly:
    """Quasisymmetrizing action: swap x_i, x_{i+1} in a monomial when one of
    the two exponents is zero, otherwise leave the monomial alone."""
    if i < 1:
        raise ValueError("index must be >= 1")

    def act(c):
        c = c + (0,) * max(0, i + 1 - len(c))
        a, b = c[i - 1], c[i]
        if a and b:
            return [(c, 1)]
        d = list(c)
        d[i - 1], d[i] = b, a
        return [(d, 1)]

    return f.map_codes(act)


def swap_vars(f: XPoly, i: int, j: int) -> XPoly:
    def act(c):
        d = list(c) + [0] * max(0, max(i, j) - len(c))
        d[i - 1], d[j - 1] = d[j - 1], d[i - 1]
        return [(d, 1)]

    return f.map_codes(act)


def divided_difference(f: XPoly, i: int, m: int = 1) -> XPoly:
    """(f - f|_{x_i <-> x_{i+m}}) / (x_i - x_{i+m}), computed termwise.

    For a monomial with exponents a at i and b at j=i+m the quotient is
    sign * x_i^min x_j^min * h_{|a-b|-1}(x_i, x_j) with sign + when a > b."""
    _check_m(m)
    if i < 1:
        raise ValueError("index must be >= 1")
    j = i + m

    def act(c):
        d = list(c) + [0] * max(0, j - len(c))
        a, b = d[i - 1], d[j - 1]
        if a == b:
            return []
        sign = 1 if a > b else -1
        lo, gap = min(a, b), abs(a - b)
        out = []
        for k in range(gap):
            e = list(d)
            e[i - 1] = lo + gap - 1 - k
            e[j - 1] = lo + k
            out.append((e, sign))
        return out

    return f.map_codes(act)


def trim_via_dd(f: XPoly, i: int, m: int = 1, right: bool = False) -> XPoly:
    """The alternative expressions R^m_i d_i f and R^m_{i+1} d_i f."""
    return bergeron_sottile(divided_difference(f, i, m), i + 1 if right else i, m)


def _require_vars(f: XPoly, n: int) -> None:
    if f.nvars() > n:
        raise ValueError(f"polynomial uses x{f.nvars()} but only x1..x{n} are allowed")


def is_quasisymmetric(f: XPoly, n: int, m: int = 1) -> bool:
    _check_m(m)
    _require_vars(f, n)
    return all(not trim(f, i, m) for i in range(1, n - m + 1))


def is_quasisymmetric_sigma(f: XPoly, n: int) -> bool:
    _require_vars(f, n)
    return all(hivert_sigma(f, i) == f for i in range(1, n))


def is_quasisymmetric_rope(f: XPoly, n: int, m: int = 1) -> bool:
    _require_vars(f, n)
    first = bergeron_sottile(f, 1, m)
    return all(bergeron_sottile(f, i, m) == first for i in range(2, n - m + 2))


def revlex_leading(f: XPoly) -> Code:
    if not f:
        raise ValueError("zero polynomial has no leading term")
    return max(f.codes(), key=revlex_key)


def reverse_vars(f: XPoly, n: int) -> XPoly:
    """rev_n: x_i -> x_{n+1-i} on Poly_n."""
    _require_vars(f, n)
    return f.map_codes(lambda c: [(tuple(reversed(c + (0,) * (n - len(c)))), 1)])


def multiply_var(f: XPoly, i: int) -> XPoly:
    def act(c):
        d = list(c) + [0] * max(0, i - len(c))
        d[i - 1] += 1
        return [(d, 1)]

    return f.map_codes(act)
