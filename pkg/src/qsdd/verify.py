"""Property suites run by ``qsdd verify`` and by the acceptance tests.

Each suite returns a list of :class:`Check` records.  Bounds default to the
values used in the acceptance run and can be narrowed from the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional

from .basis import (
    forest_expand,
    forest_polynomial,
    monomial_to_forest,
    qseq_zigzag,
    qseqs,
    slide_polynomial,
    trim_composite,
    volume_paths,
)
from .coinv import IdealSpec, coinv_dimensions, ideal_graded_rank, ideal_membership, rev_mirror_check, verify_nilhecke
from .forest import (
    IndexedForest,
    catalan,
    enumerate_class,
    in_supp,
    normal_word,
    qdes,
    raney,
    star,
    theta_factorization,
    trim_forest,
    trim_sequences,
    underline,
)
from .harmonic import (
    d_pairing,
    derivative_spanning,
    difference_coeffs_via_trims,
    is_harmonic,
    lambda_difference_coeffs,
    vope,
    volume_recursive,
)
from .operators import bergeron_sottile, trim
from .poly import LPoly, XPoly, canon


@dataclass
class Check:
    name: str
    passed: int = 0
    total: int = 0
    unit: str = "cases"
    failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failure is None and self.passed == self.total

    def record(self, good: bool, detail: Callable[[], str] = lambda: "") -> None:
        self.total += 1
        if good:
            self.passed += 1
        elif self.failure is None:
            self.failure = detail()

    def line(self) -> str:
        s = f"CHECK {self.name}: {'PASS' if self.ok else 'FAIL'} {self.passed}/{self.total} {self.unit}"
        if self.failure:
            s += f" (first counterexample: {self.failure})"
        return s

    def to_json_obj(self) -> dict:
        return {"name": self.name, "ok": self.ok, "passed": self.passed, "total": self.total, "unit": self.unit,
                "counterexample": self.failure}


def _forests(n: int, m: int, max_size: int) -> List[IndexedForest]:
    return enumerate_class("LTer", n, m, max_size)


# ---- suites ----------------------------------------------------------------


def suite_duality(m: int = 1, max_size: int = 4, n: int = 8, **_) -> List[Check]:
    """ct(T_F P_G) = delta_{F,G} over all F, G in LTer_n of size <= max_size."""
    chk = Check(f"duality ct(T_F P_G)=delta (m={m}, size<={max_size}, flags<={n})", unit="pairs")
    forests = _forests(n, m, max_size)
    words = [normal_word(F) for F in forests]
    for G in forests:
        memo: Dict[tuple, XPoly] = {(): forest_polynomial(G)}

        def img(w):
            # T applied along the word, last letter first; shares suffixes
            if w not in memo:
                rest = img(w[1:])
                memo[w] = trim(rest, w[0], m) if rest else rest
            return memo[w]

        for F, w in zip(forests, words):
            val = img(w).constant_term()
            want = 1 if F == G else 0
            chk.record(val == want, lambda: f"F={F} G={G} ct={val}")
    return [chk]


def suite_trim_theorem(m: Optional[int] = None, max_size: Optional[int] = None, n: int = 6, **_) -> List[Check]:
    """T_i P_F = P_{F/i} for i in Qdes(F), else 0."""
    out = []
    for mm in ([m] if m else [1, 2, 3]):
        size = max_size if max_size is not None else (5 if mm == 1 else 4)
        chk = Check(f"trim theorem (m={mm}, size<={size}, flags<={n})", unit="(F,i) pairs")
        for F in _forests(n, mm, size):
            P = forest_polynomial(F)
            Q = qdes(F)
            for i in range(1, F.max_flag() + mm + 2):
                got = trim(P, i, mm)
                want = forest_polynomial(trim_forest(F, i)) if i in Q else XPoly.zero()
                chk.record(got == want, lambda: f"F={F} i={i}")
        out.append(chk)
    return out


def suite_positivity(max_size: int = 5, n: int = 5, **_) -> List[Check]:
    prod_chk = Check(f"P_F*P_G forest positive (|F|+|G|<={max_size}, flags<={n})", unit="products")
    forests = _forests(n, 1, max_size)
    for a, F in enumerate(forests):
        PF = forest_polynomial(F)
        for G in forests[a:]:
            if F.size + G.size > max_size:
                continue
            e = forest_expand(PF * forest_polynomial(G))
            prod_chk.record(e.is_nonnegative(), lambda: f"F={F} G={G} -> {e}")
    rope_chk = Check(f"R_i P_F multiplicity-free positive (|F|<={max_size - 1})", unit="cases")
    for F in _forests(n, 1, max_size - 1):
        P = forest_polynomial(F)
        for i in range(1, F.max_flag() + 2):
            e = forest_expand(bergeron_sottile(P, i))
            rope_chk.record(all(v in (0, 1) for _, v in e.items()), lambda: f"F={F} i={i} -> {e}")
    cross = Check("m=1 forest polynomials are 2-forest positive (|F|<=4)", unit="forests")
    for F in _forests(n, 1, 4):
        e = forest_expand(forest_polynomial(F), 2)
        cross.record(e.is_nonnegative(), lambda: f"F={F} -> {e}")
    return [prod_chk, rope_chk, cross]


def suite_monk(max_size: int = 4, n: int = 5, **_) -> List[Check]:
    chk = Check(f"Monk rule P_i*P_F in {{0,1}} (i<={n}, |F|<={max_size})", unit="products")
    for F in _forests(n, 1, max_size):
        PF = forest_polynomial(F)
        for i in range(1, n + 1):
            e = forest_expand(forest_polynomial(underline(i)) * PF)
            chk.record(all(v in (0, 1) for _, v in e.items()), lambda: f"i={i} F={F} -> {e}")
    gen = Check("P^m_(i) = x_i + x_{i-m} + ... (m<=3, i<=8)", unit="generators")
    for m in (1, 2, 3):
        for i in range(1, 9):
            want = XPoly({(0,) * (j - 1) + (1,): 1 for j in range(i, 0, -m)})
            gen.record(forest_polynomial(underline(i, m)) == want, lambda: f"m={m} i={i}")
    mchk = Check("m-Monk rule (m=2, i<=5, |F|<=3)", unit="products")
    for F in _forests(n, 2, 3):
        PF = forest_polynomial(F)
        for i in range(1, 6):
            e = forest_expand(forest_polynomial(underline(i, 2)) * PF, 2)
            mchk.record(all(v in (0, 1) for _, v in e.items()), lambda: f"i={i} F={F} -> {e}")
    return [chk, gen, mchk]


def suite_coinv_dims(n: Optional[int] = None, m: Optional[int] = None, **_) -> List[Check]:
    out = []
    for mm in ([m] if m else [1, 2, 3]):
        top = n if n is not None else (7 if mm == 1 else 8)
        chk = Check(f"dim coinvariants (m={mm}, n<={top})", unit="values of n")
        detail = []
        for k in range(top + 1):
            dim = sum(coinv_dimensions(k, mm).values())
            want = catalan(k) if mm == 1 else raney(k, mm)
            detail.append(str(dim))
            chk.record(dim == want, lambda: f"n={k}: {dim} != {want}")
        chk.unit += " [" + ",".join(detail) + "]"
        out.append(chk)
    lin = Check("ideal rank by linear algebra = forest count (n<=4, m<=2, k<=2, deg<=4)", unit="graded pieces")
    for mm, nn, k, d in product((1, 2), (2, 3, 4), (1, 2), range(5)):
        r = ideal_graded_rank(nn, mm, k, d)
        cnt = sum(1 for F in enumerate_class("LTer", nn, mm, d)
                  if F.size == d and theta_factorization(F, nn)[0].size >= k)
        lin.record(r == cnt, lambda: f"m={mm} n={nn} k={k} d={d}: rank {r} vs {cnt}")
    mem = Check("P_F in ideal iff F not in Supp_n (n<=5, |F|<=5)", unit="forests")
    for nn in range(1, 6):
        for F in enumerate_class("LTer", nn, 1, 5):
            got = ideal_membership(forest_polynomial(F), IdealSpec(nn, 1, 1))
            mem.record(got == (not in_supp(F, nn)), lambda: f"n={nn} F={F}")
    rev = Check("rev_n P_F = (-1)^|F| P_mir(F) mod ideal (n<=5)", unit="forests")
    for nn in range(0, 6):
        for F in enumerate_class("Supp", nn):
            rev.record(rev_mirror_check(F, nn), lambda: f"n={nn} F={F}")
    return out + [lin, mem, rev]


def suite_nilhecke(n: Optional[int] = None, m: Optional[int] = None, trials: int = 100, seed: int = 0, **_) -> List[Check]:
    out = []
    for mm in ([m] if m else [1, 2]):
        for nn in ([n] if n else range(1, 7)):
            chk = Check(f"nil-Hecke relations (m={mm}, n={nn}, {trials} trials, seed={seed})", unit="relations")
            for r in verify_nilhecke(nn, mm, trials, seed):
                chk.record(r.passed, lambda: r.line())
            out.append(chk)
    return out


def worked_forest() -> IndexedForest:
    return IndexedForest((0, 2, 0, 1, 0, 0, 1, 0, 0, 0, 2))


def worked_volume() -> LPoly:
    lam = LPoly.variable
    h = Fraction(1, 2)
    return (
        (h * (lam(2) ** 2 - lam(3) ** 2) * (lam(4) - lam(5)) - h * (lam(2) - lam(3)) * (lam(4) ** 2 - lam(5) ** 2))
        * (lam(7) - lam(8))
        * (h * (lam(11) ** 2 - lam(12) ** 2) - (lam(11) - lam(12)) * lam(13))
    )


def suite_volume(max_size: Optional[int] = None, n: int = 5, m: Optional[int] = None, **_) -> List[Check]:
    out = []
    for mm in ([m] if m else [1, 2]):
        size = max_size if max_size is not None else 4
        forests = _forests(n, mm, size)
        duals = {F: volume_recursive(F) for F in forests}
        chk = Check(f"<P_G, V_F> = delta (m={mm}, size<={size}, flags<={n})", unit="pairs")
        for G in forests:
            PG = forest_polynomial(G)
            for F in forests:
                v = d_pairing(PG, duals[F])
                chk.record(v == (F == G), lambda: f"G={G} F={F} pairing={v}")
        out.append(chk)
        esize = max_size if max_size is not None else (5 if mm == 1 else 4)
        eq = Check(f"V_F recursive = path formula (m={mm}, size<={esize})", unit="forests")
        for F in _forests(n, mm, esize):
            eq.record(volume_recursive(F) == volume_paths(F), lambda: f"F={F}")
        out.append(eq)
        wi = Check(f"V_F independent of trim word (m={mm}, size<={min(size, 4)})", unit="words")
        for F in _forests(n, mm, min(size, 4)):
            base = volume_recursive(F)
            for w in sorted(trim_sequences(F)):
                wi.record(volume_recursive(F, w) == base, lambda: f"F={F} word={w}")
        out.append(wi)
    adj = Check("<x^d, T^v_i l^c> = <T_i x^d, l^c> (|c|,|d|<=4, i<=5)", unit="triples")
    codes = [canon(c) for c in product(range(5), repeat=5) if sum(c) <= 4]
    for i in range(1, 6):
        for c in codes:
            img = vope(LPoly.monomial(c), i)
            for d in img.codes():
                if sum(d) > 4:
                    continue
                lhs = d_pairing(XPoly.monomial(d), img)
                rhs = d_pairing(trim(XPoly.monomial(d), i), LPoly.monomial(c))
                adj.record(lhs == rhs, lambda: f"i={i} c={c} d={d}")
        # pairs where x^d does not meet the image must also vanish on the other side
        for d in codes:
            t = trim(XPoly.monomial(d), i)
            for c in t.codes():
                lhs = d_pairing(XPoly.monomial(d), vope(LPoly.monomial(c), i))
                rhs = d_pairing(t, LPoly.monomial(c))
                adj.record(lhs == rhs, lambda: f"i={i} c={c} d={d}")
    out.append(adj)
    fig = Check("worked volume of the 6-node example forest", unit="examples")
    fig.record(volume_recursive(worked_forest()) == worked_volume(), lambda: "mismatch")
    out.append(fig)
    return out


def suite_harmonic(n: Optional[int] = None, m: Optional[int] = None, **_) -> List[Check]:
    out = []
    for mm in ([m] if m else [1, 2]):
        top = n if n is not None else 5
        chk = Check(f"V_F harmonic for F in Supp_n (m={mm}, n<={top})", unit="forests")
        for nn in range(1, top + 1):
            for F in enumerate_class("Supp", nn, mm):
                chk.record(is_harmonic(volume_recursive(F), nn, mm), lambda: f"n={nn} F={F}")
        out.append(chk)
        diff = Check(f"V_F difference coefficients >= 0 and equal ct T_F/c! (m={mm}, n<={top})", unit="forests")
        for F in enumerate_class("Supp", top, mm):
            b = lambda_difference_coeffs(volume_recursive(F), mm)
            diff.record(all(v > 0 for v in b.values()) and b == difference_coeffs_via_trims(F), lambda: f"F={F} b={b}")
        out.append(diff)
    span = Check("derivatives of top-degree V_F span the harmonics (m=1, n<=4)", unit="values of n")
    for nn in range(1, min(n or 4, 4) + 1):
        r = derivative_spanning(nn)
        good = r["span_rank"] == r["joint_rank"] == r["basis_rank"] == r["expected"]
        span.record(good, lambda: f"n={nn}: {r}")
    out.append(span)
    return out


def suite_epsilon(max_size: int = 5, n: int = 5, m: Optional[int] = None, **_) -> List[Check]:
    out = []
    for mm in ([m] if m else [1, 2]):
        size = max_size if mm == 1 else min(max_size, 4)
        chk = Check(f"x^c = sum eps_G(c) P_G (m={mm}, |c|<={size}, len<={n})", unit="codes")
        for c in product(range(size + 1), repeat=n):
            if sum(c) > size:
                continue
            c = canon(c)
            e = monomial_to_forest(c, mm)
            chk.record(e.reconstruct() == XPoly.monomial(c), lambda: f"c={c} -> {e}")
        out.append(chk)
    three = Check("x2^2*x3 has three signed forest terms", unit="examples")
    e = monomial_to_forest((0, 2, 1))
    signs = sorted(v for _, v in e.items())
    three.record(len(e) == 3 and signs == [-1, -1, 1] and e == forest_expand(XPoly.monomial((0, 2, 1))),
                 lambda: str(e))
    out.append(three)
    return out


def suite_theta(n: Optional[int] = None, max_size: int = 6, **_) -> List[Check]:
    out = []
    top = n if n is not None else 6
    bij = Check(f"Theta'_n bijection onto zigzag x supported pairs (n<={top}, size<={max_size})", unit="forests")
    for nn in range(1, top + 1):
        seen = set()
        for F in enumerate_class("LTer", nn, 1, max_size):
            G, H = theta_factorization(F, nn)
            good = star(G, H, nn) == F and (G, H) not in seen
            seen.add((G, H))
            bij.record(good, lambda: f"n={nn} F={F} -> {G},{H}")
        # surjectivity: every admissible pair in range is hit
        zig = enumerate_class("Zigzag", nn, 1, max_size)
        sup = enumerate_class("Supp", nn, 1)
        for G in zig:
            for H in sup:
                if G.size + H.size <= max_size and star(G, H, nn) is not None:
                    bij.record((G, H) in seen, lambda: f"n={nn} pair {G},{H} not hit")
    out.append(bij)
    gh = Check("P_G P_H - [G*H] P_{G*H} in I_{|G|+1,n} (n<=5, |G|+|H|<=5)", unit="pairs")
    for nn in range(1, 6):
        for G in enumerate_class("Zigzag", nn, 1, 5):
            for H in enumerate_class("Supp", nn, 1):
                if G.size + H.size > 5:
                    continue
                f = forest_polynomial(G) * forest_polynomial(H)
                S = star(G, H, nn)
                if S is not None:
                    f = f - forest_polynomial(S)
                gh.record(ideal_membership(f, IdealSpec(nn, 1, G.size + 1)), lambda: f"n={nn} G={G} H={H}")
    out.append(gh)
    return out


def suite_slides(n: int = 6, max_size: int = 5, **_) -> List[Check]:
    chk = Check(f"P_Z = F_a over QSeq_n (n<={n}, degree<={max_size})", unit="sequences")
    for nn in range(1, n + 1):
        for a in qseqs(nn, 1, max_size):
            chk.record(forest_polynomial(qseq_zigzag(a, nn)) == slide_polynomial(a), lambda: f"n={nn} a={a}")
    chk2 = Check("P^2_Z = F^2_a over QSeq^2_n (n<=6, degree<=4)", unit="sequences")
    for nn in range(1, 7):
        for a in qseqs(nn, 2, 4):
            chk2.record(forest_polynomial(qseq_zigzag(a, nn, 2)) == slide_polynomial(a, 2), lambda: f"n={nn} a={a}")
    return [chk, chk2]


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "duality": suite_duality,
    "trim-theorem": suite_trim_theorem,
    "positivity": suite_positivity,
    "monk": suite_monk,
    "coinv-dims": suite_coinv_dims,
    "nilhecke": suite_nilhecke,
    "volume": suite_volume,
    "harmonic": suite_harmonic,
    "epsilon": suite_epsilon,
    "theta": suite_theta,
    "slides": suite_slides,
}


def run_suite(name: str, **params) -> List[Check]:
    if name == "all":
        out = []
        for fn in SUITES.values():
            out.extend(fn(**params))
        return out
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}") from None
    return fn(**params)
