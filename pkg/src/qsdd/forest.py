"""Indexed forests of (m+1)-ary plane trees.

A forest is identified by its code: ``c_i`` counts the internal nodes whose
flag (the leaf reached by always stepping to the leftmost child) is ``i``.
Tree structure is rebuilt from the code when needed.  Inside this module a
tree is either ``None`` (a leaf) or a tuple of ``m + 1`` subtrees, and a
forest's structure is the tuple of its leading trees; everything after the
listed trees is trivial.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .poly import Code, canon, revlex_key

Tree = Optional[tuple]
Word = Tuple[int, ...]

CLASSES = ("Supp", "LTer", "RTer", "Zigzag")


class IndexedForest:
    """An m-indexed forest, stored as its code."""

    __slots__ = ("code", "m")

    def __init__(self, code: Iterable[int] = (), m: int = 1):
        if m < 1:
            raise ValueError("m must be >= 1")
        object.__setattr__(self, "code", canon(code))
        object.__setattr__(self, "m", int(m))

    def __setattr__(self, name, value):
        raise AttributeError("IndexedForest is immutable")

    def __eq__(self, other):
        return isinstance(other, IndexedForest) and self.code == other.code and self.m == other.m

    def __hash__(self):
        return hash((self.code, self.m))

    def __repr__(self):
        return f"IndexedForest({list(self.code)}, m={self.m})"

    def __str__(self):
        return "[" + ",".join(map(str, self.code)) + "]"

    def __mul__(self, other):
        return monoid_product(self, other)

    def sort_key(self):
        return (self.size, revlex_key(self.code))

    @property
    def size(self) -> int:
        return sum(self.code)

    def __len__(self):
        return self.size

    @property
    def trees(self) -> Tuple[Tree, ...]:
        return _trees(self.code, self.m)

    @property
    def nodes(self) -> Tuple["Node", ...]:
        return _layout(self.trees, self.m)

    def qdes(self) -> FrozenSet[int]:
        return frozenset(v.flag for v in self.nodes if v.terminal)

    def support(self) -> FrozenSet[int]:
        out = set()
        for v in self.nodes:
            if v.parent is None:
                out.update(range(v.first_leaf, v.last_leaf + 1))
        return frozenset(out)

    def min_support(self) -> Optional[int]:
        for i, c in enumerate(self.code, start=1):
            if c:
                return i
        return None

    def max_flag(self) -> int:
        return len(self.code)

    def bracket(self) -> str:
        """Nested-parenthesis rendering of the nontrivial part, e.g. ``.((..).).``."""

        def r(t):
            return "." if t is None else "(" + "".join(r(s) for s in t) + ")"

        return " ".join(r(t) for t in self.trees) if self.trees else "∅"


class Node:
    """An internal node in a laid-out forest."""

    __slots__ = ("index", "flag", "first_leaf", "last_leaf", "children", "parent", "slot", "tree")

    def __init__(self, index, tree):
        self.index = index
        self.tree = tree
        self.children: List[Tuple[str, int]] = []
        self.parent: Optional[int] = None
        self.slot = 0
        self.flag = self.first_leaf = self.last_leaf = 0

    @property
    def terminal(self) -> bool:
        return all(kind == "leaf" for kind, _ in self.children)

    def __repr__(self):
        return f"Node({self.index}, flag={self.flag}, leaves={self.first_leaf}..{self.last_leaf})"


def _layout(trees: Tuple[Tree, ...], m: int) -> Tuple[Node, ...]:
    """Internal nodes in prefix order with flags, leaf ranges and links."""
    nodes: List[Node] = []
    leaf = [1]

    def visit(t, parent, slot, tree_idx):
        if t is None:
            lab = leaf[0]
            leaf[0] += 1
            return ("leaf", lab), lab, lab
        v = Node(len(nodes), tree_idx)
        v.parent, v.slot = parent, slot
        nodes.append(v)
        firsts = []
        for j, s in enumerate(t):
            ref, lo, hi = visit(s, v.index, j, tree_idx)
            v.children.append(ref)
            firsts.append((lo, hi))
        v.flag = v.first_leaf = firsts[0][0]
        v.last_leaf = firsts[-1][1]
        return ("node", v.index), v.first_leaf, v.last_leaf

    for k, t in enumerate(trees):
        visit(t, None, 0, k)
    return tuple(nodes)


def _blossom_trees(trees: Tuple[Tree, ...], i: int, m: int) -> Tuple[Tree, ...]:
    """Replace the i-th leaf by a terminal node."""
    count = [0]
    new_node = (None,) * (m + 1)

    def go(t):
        if t is None:
            count[0] += 1
            return new_node if count[0] == i else None
        if count[0] >= i:
            return t
        return tuple(go(s) for s in t)

    out = []
    for t in trees:
        out.append(go(t) if count[0] < i else t)
    while count[0] < i:
        count[0] += 1
        out.append(new_node if count[0] == i else None)
    return tuple(out)


def _strip(trees) -> Tuple[Tree, ...]:
    trees = list(trees)
    while trees and trees[-1] is None:
        trees.pop()
    return tuple(trees)


@lru_cache(maxsize=None)
def _trees(code: Code, m: int) -> Tuple[Tree, ...]:
    trees: Tuple[Tree, ...] = ()
    for i, c in enumerate(code, start=1):
        for _ in range(c):
            trees = _blossom_trees(trees, i, m)
    return _strip(trees)


def _code_of_trees(trees: Sequence[Tree], m: int) -> Code:
    counts: Dict[int, int] = {}
    for v in _layout(tuple(trees), m):
        counts[v.flag] = counts.get(v.flag, 0) + 1
    if not counts:
        return ()
    return canon(counts.get(i, 0) for i in range(1, max(counts) + 1))


def _check_tree(t, m):
    if t is None:
        return
    if not isinstance(t, tuple) or len(t) != m + 1:
        raise ValueError(f"internal node must have exactly {m + 1} children")
    for s in t:
        _check_tree(s, m)


def forest_from_trees(trees: Sequence[Tree], m: int = 1) -> IndexedForest:
    """Build a forest from explicit trees (``None`` = leaf)."""
    for t in trees:
        _check_tree(t, m)
    return IndexedForest(_code_of_trees(tuple(trees), m), m)


def forest_of_code(c: Iterable[int], m: int = 1) -> IndexedForest:
    return IndexedForest(c, m)


def code_of_forest(F: IndexedForest) -> Code:
    """The code computed from the tree structure (flags of internal nodes)."""
    return _code_of_trees(F.trees, F.m)


def underline(i: int, m: int = 1) -> IndexedForest:
    """The forest with a single internal node, sitting on leaf i."""
    if i < 1:
        raise ValueError("index must be >= 1")
    return IndexedForest((0,) * (i - 1) + (1,), m)


def qdes_of_code(c: Code, m: int = 1) -> FrozenSet[int]:
    out = set()
    for i, v in enumerate(c, start=1):
        if v and not any(c[i : i + m]):
            out.add(i)
    return frozenset(out)


def qdes(F: IndexedForest) -> FrozenSet[int]:
    return qdes_of_code(F.code, F.m)


def _blossom_code(c: Code, i: int, m: int) -> Code:
    c = c + (0,) * max(0, i - len(c))
    return canon(c[: i - 1] + (c[i - 1] + 1,) + (0,) * m + c[i:])


def blossom(F: IndexedForest, i: int) -> IndexedForest:
    """F . i: make leaf i into a terminal node."""
    if i < 1:
        raise ValueError("index must be >= 1")
    return IndexedForest(_blossom_code(F.code, i, F.m), F.m)


def trim_forest(F: IndexedForest, i: int) -> IndexedForest:
    """F / i: remove the terminal node with flag i."""
    c, m = F.code, F.m
    if i not in qdes_of_code(c, m):
        raise ValueError(f"{i} is not in Qdes of {F}")
    return IndexedForest(c[: i - 1] + (c[i - 1] - 1,) + c[i + m :], m)


def _same_m(F, G):
    if F.m != G.m:
        raise ValueError("forests have different m")


def normal_word(F: IndexedForest) -> Word:
    """The word 1^{c_1} 2^{c_2} ... representing F."""
    return tuple(i for i, c in enumerate(F.code, start=1) for _ in range(c))


def forest_of_word(word: Iterable[int], m: int = 1) -> IndexedForest:
    """underline(i_1) ... underline(i_k), built by blossoming left to right."""
    c: Code = ()
    for i in word:
        if i < 1:
            raise ValueError("word letters must be >= 1")
        c = _blossom_code(c, i, m)
    return IndexedForest(c, m)


def monoid_product(F: IndexedForest, G: IndexedForest) -> IndexedForest:
    """F . G: leaf i of F is glued to root i of G."""
    _same_m(F, G)
    c = F.code
    for i in normal_word(G):
        c = _blossom_code(c, i, F.m)
    return IndexedForest(c, F.m)


def graft(F: IndexedForest, G: IndexedForest) -> IndexedForest:
    """Monoid product computed directly on tree structure."""
    _same_m(F, G)
    gt = G.trees
    count = [0]

    def go(t):
        if t is None:
            count[0] += 1
            k = count[0] - 1
            return gt[k] if k < len(gt) else None
        return tuple(go(s) for s in t)

    out = [go(t) for t in F.trees]
    out.extend(gt[count[0] :])
    return forest_from_trees(out, F.m)


def divide(F: IndexedForest, G: IndexedForest) -> Optional[IndexedForest]:
    """F / G when F = H . G for some H, else None."""
    _same_m(F, G)
    c = F.code
    m = F.m
    for i in reversed(normal_word(G)):
        if i not in qdes_of_code(c, m):
            return None
        c = canon(c[: i - 1] + (c[i - 1] - 1,) + c[i + m :])
    return IndexedForest(c, m)


def leq(G: IndexedForest, F: IndexedForest) -> bool:
    return divide(F, G) is not None


def thompson_normal_form(word: Iterable[int], m: int = 1) -> Code:
    """Rewrite with i.j -> j.(i+m) (i > j): repeatedly pull the first
    occurrence of the smallest letter to the front."""
    w = list(word)
    if any(i < 1 for i in w):
        raise ValueError("word letters must be >= 1")
    out = []
    while w:
        j = min(w)
        p = w.index(j)
        out.append(j)
        w = [i + m for i in w[:p]] + w[p + 1 :]
    counts: Dict[int, int] = {}
    for j in out:
        counts[j] = counts.get(j, 0) + 1
    if not counts:
        return ()
    return canon(counts.get(i, 0) for i in range(1, max(counts) + 1))


def trim_sequences(F: IndexedForest) -> FrozenSet[Word]:
    """All words (i_1..i_k) whose product is F."""
    return _trim_sequences(F.code, F.m)


@lru_cache(maxsize=None)
def _trim_sequences(c: Code, m: int) -> FrozenSet[Word]:
    if not c:
        return frozenset({()})
    out = set()
    for i in qdes_of_code(c, m):
        rest = canon(c[: i - 1] + (c[i - 1] - 1,) + c[i + m :])
        for w in _trim_sequences(rest, m):
            out.add(w + (i,))
    return frozenset(out)


def count_decreasing_labelings(F: IndexedForest) -> int:
    """Hook-length count |F|! / prod(subtree sizes)."""
    nodes = F.nodes
    sub = [1] * len(nodes)
    for v in reversed(nodes):
        if v.parent is not None:
            sub[v.parent] += sub[v.index]
    denom = 1
    for s in sub:
        denom *= s
    return factorial(len(nodes)) // denom


# ---- forest classes -------------------------------------------------------


def in_supp(F: IndexedForest, n: int) -> bool:
    return all(v.last_leaf <= n for v in F.nodes)


def in_lter(F: IndexedForest, n: int) -> bool:
    return all(v.flag <= n for v in F.nodes)


def in_rter(F: IndexedForest, n: int) -> bool:
    return all(v.last_leaf > n for v in F.nodes)


def in_zigzag(F: IndexedForest, n: int) -> bool:
    lo = n - F.m + 1
    return all(lo <= v.flag <= n for v in F.nodes if v.terminal)


_PREDICATES = {"Supp": in_supp, "LTer": in_lter, "RTer": in_rter, "Zigzag": in_zigzag}


def in_class(F: IndexedForest, cls: str, n: int) -> bool:
    try:
        return _PREDICATES[cls](F, n)
    except KeyError:
        raise ValueError(f"unknown forest class {cls!r}; expected one of {CLASSES}") from None


@lru_cache(maxsize=None)
def _lter_codes(n: int, m: int, max_size: int) -> Tuple[Code, ...]:
    """LTer_n up to max_size by blossoming from the empty forest."""
    level = {()}
    seen = set(level)
    for _ in range(max_size):
        nxt = set()
        for c in level:
            for i in range(1, n + 1):
                d = _blossom_code(c, i, m)
                if len(d) <= n and d not in seen:
                    nxt.add(d)
        seen |= nxt
        level = nxt
    return tuple(sorted(seen, key=lambda c: (sum(c), revlex_key(c))))


def supp_max_size(n: int, m: int = 1) -> int:
    return max(0, (n - 1) // m) if n > 0 else 0


def enumerate_class(
    cls: str, n: int, m: int = 1, max_size: Optional[int] = None, max_flag: Optional[int] = None
) -> List[IndexedForest]:
    """All forests of the class, ordered by (size, revlex code).

    Only Supp is finite; the other classes need ``max_size``, and RTer also
    needs ``max_flag`` (its forests may sit arbitrarily far to the right)."""
    if cls not in CLASSES:
        raise ValueError(f"unknown forest class {cls!r}; expected one of {CLASSES}")
    if n < 0:
        raise ValueError("n must be >= 0")
    if max_size is None:
        if cls != "Supp":
            raise ValueError(f"{cls} is infinite; give max_size")
        max_size = supp_max_size(n, m)
    bound = n
    if cls == "RTer":
        if max_flag is None:
            raise ValueError("RTer needs max_flag")
        bound = max_flag
    elif cls == "Supp":
        max_size = min(max_size, supp_max_size(n, m))
    pred = _PREDICATES[cls]
    out = []
    for c in _lter_codes(bound, m, max_size):
        F = IndexedForest(c, m)
        if pred(F, n):
            out.append(F)
    return out


def raney(n: int, m: int = 1) -> int:
    q, r = divmod(n, m)
    return (r + 1) * comb(n + q, q) // (n + 1)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# ---- shifts, factorization, mirror ---------------------------------------


def tau_shift(F: IndexedForest, k: int) -> Optional[IndexedForest]:
    """Shift right by k trivial trees (left when k < 0, if possible)."""
    if k >= 0:
        return IndexedForest((0,) * k + F.code, F.m) if F.code else F
    if any(F.code[: -k]):
        return None
    return IndexedForest(F.code[-k:], F.m)


def theta_factorization(F: IndexedForest, n: int) -> Tuple[IndexedForest, IndexedForest]:
    """Split F in LTer_n as (G, H): H holds the nodes supported on [n] and
    G = tau^{m|H|}(F/H)."""
    if not in_lter(F, n):
        raise ValueError(f"{F} is not in LTer_{n}")
    counts: Dict[int, int] = {}
    for v in F.nodes:
        if v.last_leaf <= n:
            counts[v.flag] = counts.get(v.flag, 0) + 1
    hcode = tuple(counts.get(i, 0) for i in range(1, max(counts, default=0) + 1))
    H = IndexedForest(hcode, F.m)
    Q = divide(F, H)
    if Q is None:
        raise AssertionError(f"internal error: supported part {H} does not divide {F}")
    G = tau_shift(Q, F.m * H.size)
    return G, H


def star(G: IndexedForest, H: IndexedForest, n: int) -> Optional[IndexedForest]:
    """Inverse of theta_factorization; None when min supp G <= m|H|."""
    _same_m(G, H)
    if not in_zigzag(G, n):
        raise ValueError(f"{G} is not in Zigzag_{n}")
    if not in_supp(H, n):
        raise ValueError(f"{H} is not in Supp_{n}")
    if not G.code:
        return H
    shift = G.m * H.size
    if G.min_support() <= shift:
        return None
    return monoid_product(tau_shift(G, -shift), H)


def _mirror_tree(t):
    return None if t is None else tuple(_mirror_tree(s) for s in reversed(t))


def mirror(F: IndexedForest, n: int) -> IndexedForest:
    """Reflect the trees covering leaves 1..n left to right."""
    if not in_supp(F, n):
        raise ValueError(f"{F} is not in Supp_{n}")
    ntrees = n - F.m * F.size
    trees = list(F.trees) + [None] * (ntrees - len(F.trees))
    return forest_from_trees([_mirror_tree(t) for t in reversed(trees[:ntrees])], F.m)
