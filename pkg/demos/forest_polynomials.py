"""
Forest polynomials and trimming
===============================

"""

# an indexed forest is stored by its code: c_i nodes carry flag i
from qsdd import IndexedForest, forest_polynomial, parse_poly, trim, trim_forest
F = IndexedForest((0, 2, 0, 1))
print(F.bracket(), "Qdes =", sorted(F.qdes()))

# its forest polynomial has leading revlex monomial x^code
P = forest_polynomial(F)
print("P_F =", P.format())

# trimming at a quasidescent removes a terminal node, elsewhere it gives zero
for i in range(1, 6):
    lhs = trim(P, i)
    rhs = forest_polynomial(trim_forest(F, i)) if i in F.qdes() else 0
    print(f"T_{i} P_F =", lhs.format(), "  matches:", lhs == rhs if rhs != 0 else not lhs)

# every polynomial has a unique forest expansion, found by peeling leading terms
from qsdd import forest_expand
f = parse_poly("x2^2*x3")
print(forest_expand(f).format())

# products of forest polynomials expand positively
e = forest_expand(forest_polynomial(IndexedForest((0, 1))) * P)
print("positive:", e.is_nonnegative(), " terms:", len(e))

# the same machinery for m = 2 uses three-leaf nodes
G = IndexedForest((1, 0, 1), m=2)
print(G.bracket(), "->", forest_polynomial(G).format())
