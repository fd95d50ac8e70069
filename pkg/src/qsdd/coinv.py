"""Quasisymmetric ideals, coinvariant reduction, the rev/mirror involution
and randomized checks of the nil-Hecke style operator relations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from .basis import Expansion, forest_expand, forest_polynomial, qseqs, slide_polynomial, trim_composite
from .forest import IndexedForest, enumerate_class, in_supp, mirror, theta_factorization
from .linalg import rank_of
from .operators import bergeron_sottile, multiply_var, reverse_vars, rope_power, trim
from .poly import XPoly, canon


@dataclass(frozen=True)
class IdealSpec:
    """I_{k,n}: the ideal of Poly_n generated by quasisymmetric polynomials of
    degree >= k (k = 1 gives the usual quasisymmetric ideal)."""

    n: int
    m: int = 1
    k: int = 1

    def __post_init__(self):
        if self.n < 0 or self.m < 1 or self.k < 0:
            raise ValueError("need n >= 0, m >= 1, k >= 0")


def _require_vars(f: XPoly, n: int):
    if f.nvars() > n:
        raise ValueError(f"polynomial uses x{f.nvars()} but only x1..x{n} are allowed")


def ideal_membership(f: XPoly, spec: IdealSpec) -> bool:
    """f is in I_{k,n} iff every forest in its expansion has a zigzag factor
    of size >= k."""
    _require_vars(f, spec.n)
    for F in forest_expand(f, spec.m).forests():
        G, _ = theta_factorization(F, spec.n)
        if G.size < spec.k:
            return False
    return True


def coinv_reduce(f: XPoly, n: int, m: int = 1, k: int = 1) -> Expansion:
    """Normal form modulo I_{k,n}: keep the forests whose zigzag factor has
    fewer than k nodes.  For k = 1 this is the Supp_n part."""
    spec = IdealSpec(n, m, k)
    _require_vars(f, n)
    exp = forest_expand(f, m)
    if k == 1:
        return Expansion({c: a for c, a in exp.coeffs.items() if in_supp(IndexedForest(c, m), n)}, m)
    keep = {}
    for c, a in exp.coeffs.items():
        G, _ = theta_factorization(IndexedForest(c, m), spec.n)
        if G.size < spec.k:
            keep[c] = a
    return Expansion(keep, m)


def coinv_dimensions(n: int, m: int = 1) -> Dict[int, int]:
    """Graded dimension of the coinvariant quotient, from the Supp_n basis."""
    out: Dict[int, int] = {}
    for F in enumerate_class("Supp", n, m):
        out[F.size] = out.get(F.size, 0) + 1
    return out


def rev_mirror_check(F: IndexedForest, n: int) -> bool:
    """rev_n P_F == (-1)^{|F|} P_{mir F} modulo the ideal."""
    if F.m != 1:
        raise ValueError("rev/mirror check is for m = 1")
    if not in_supp(F, n):
        raise ValueError(f"{F} is not in Supp_{n}")
    lhs = coinv_reduce(reverse_vars(forest_polynomial(F), n), n)
    M = mirror(F, n)
    return lhs == Expansion({M.code: (-1) ** F.size}, 1)


# ---- random inputs --------------------------------------------------------


def random_poly(rng: random.Random, n: int, max_deg: int = 4, max_terms: int = 6, coeff: int = 9) -> XPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_deg)
        c = [0] * n
        for _ in range(d):
            c[rng.randrange(n)] += 1
        terms[canon(c)] = rng.randint(-coeff, coeff)
    return XPoly(terms)


def random_qsym(rng: random.Random, n: int, m: int = 1, max_deg: int = 3, max_terms: int = 3, coeff: int = 9) -> XPoly:
    """Integer combination of fundamental slides, quasisymmetric by construction."""
    pool = [a for a in qseqs(n, m, max_deg)]
    out = XPoly.zero()
    for _ in range(rng.randint(1, max_terms)):
        out = out + slide_polynomial(rng.choice(pool), m) * rng.randint(-coeff, coeff)
    return out


# ---- operator relations ---------------------------------------------------


def _relations(n: int, m: int) -> List[Tuple[str, Callable[[XPoly], XPoly], Callable[[XPoly], XPoly]]]:
    """(name, lhs, rhs) pairs; each side maps a test polynomial f to a polynomial."""
    T = lambda f, i: trim(f, i, m)  # noqa: E731
    R1 = lambda f: bergeron_sottile(f, 1, 1)  # noqa: E731
    X = multiply_var
    rels = []
    for i in range(1, n + 1):
        rels.append((f"T{i}R1=R1T{i + 1}", lambda f, i=i: T(R1(f), i), lambda f, i=i: R1(T(f, i + 1))))
    for i in range(2, n + 1):
        rels.append((f"R1x{i}=x{i - 1}R1", lambda f, i=i: R1(X(f, i)), lambda f, i=i: X(R1(f), i - 1)))
    for i in range(1, n + 1):
        for j in range(1, i):
            rels.append((f"T{i}x{j}=x{j}T{i}", lambda f, i=i, j=j: T(X(f, j), i), lambda f, i=i, j=j: X(T(f, i), j)))
        for j in range(i + m + 1, n + m + 2):
            rels.append(
                (f"T{i}x{j}=x{j - m}T{i}", lambda f, i=i, j=j: T(X(f, j), i), lambda f, i=i, j=j: X(T(f, i), j - m))
            )
        for j in range(1, i):
            rels.append(
                (f"T{i}T{j}=T{j}T{i + m}", lambda f, i=i, j=j: T(T(f, j), i), lambda f, i=i, j=j: T(T(f, i + m), j))
            )
    rels.append(("R1x1=0", lambda f: R1(X(f, 1)), lambda f: XPoly.zero()))
    for i in range(1, n + 1):
        for j in range(1, m):
            rels.append((f"T{i}x{i + j}=0", lambda f, i=i, j=j: T(X(f, i + j), i), lambda f: XPoly.zero()))

    def left_rhs(f, i):
        out = rope_power(f, m)
        for j in range(1, i + 1):
            out = out + X(T(f, j), j)
        return out

    def right_rhs(f, i):
        out = rope_power(f, m)
        for j in range(1, i):
            out = out + X(T(f, j), j)
        return -out

    for i in range(1, n + 1):
        rels.append((f"T{i}x{i}=R1^{m}+sum_j<={i} xjTj", lambda f, i=i: T(X(f, i), i), lambda f, i=i: left_rhs(f, i)))
        rels.append(
            (f"T{i}x{i + m}=-(R1^{m}+sum_j<{i} xjTj)", lambda f, i=i: T(X(f, i + m), i), lambda f, i=i: right_rhs(f, i))
        )
    return rels


@dataclass
class RelationResult:
    name: str
    checks: int = 0
    counterexample: Optional[XPoly] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def line(self) -> str:
        if self.passed:
            return f"RELATION {self.name}: PASS"
        return f"RELATION {self.name}: FAIL (counterexample: {self.counterexample.format()})"


def verify_nilhecke(n: int, m: int = 1, trials: int = 100, seed: int = 0) -> List[RelationResult]:
    """Evaluate both sides of each relation on seeded random polynomials in
    x_1..x_n, plus the full-trim identity T_H(g h) = R_1^{m|H|}(g) T_H(h) for
    random quasisymmetric g and H in Supp_n."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rels = _relations(n, m)
    results = {name: RelationResult(name) for name, _, _ in rels}
    supp = [H for H in enumerate_class("Supp", n, m) if H.size > 0]
    fulltrim = RelationResult("T_H(gh)=R1^{m|H|}(g)T_H(h)")
    for t in range(trials):
        rng = random.Random(f"{seed}:{n}:{m}:{t}")
        f = random_poly(rng, n)
        for name, lhs, rhs in rels:
            r = results[name]
            r.checks += 1
            if r.counterexample is None and lhs(f) != rhs(f):
                r.counterexample = f
        if supp:
            g = random_qsym(rng, n, m)
            h = random_poly(rng, n)
            H = rng.choice(supp)
            fulltrim.checks += 1
            lhs = trim_composite(g * h, H)
            rhs = rope_power(g, m * H.size) * trim_composite(h, H)
            if fulltrim.counterexample is None and lhs != rhs:
                fulltrim.counterexample = g * h
    out = list(results.values())
    if supp:
        out.append(fulltrim)
    return out


# ---- independent dimension oracle ----------------------------------------


def ideal_graded_rank(n: int, m: int, k: int, d: int) -> int:
    """Rank of the degree-d part of I_{k,n}, spanned by x^a F_b with
    |b| >= k, |a| + |b| = d.  Plain linear algebra, no forests."""
    rows = []
    for b in qseqs(n, m, d):
        if len(b) < max(k, 1):
            continue
        Fb = slide_polynomial(b, m)
        rest = d - len(b)
        for a in product(range(rest + 1), repeat=n):
            if sum(a) == rest:
                rows.append(dict((XPoly.monomial(a) * Fb).items()))
    return rank_of(rows)
