"""
Quasisymmetric coinvariants
===========================

"""

# the fully supported forests on [n] index a basis of the quotient by the
# ideal generated by quasisymmetric polynomials without constant term
from qsdd import coinv_dimensions, coinv_reduce, enumerate_class, forest_polynomial
for n in range(1, 7):
    dims = coinv_dimensions(n)
    print(n, [dims.get(d, 0) for d in range(n)], "total", sum(dims.values()))

# for m = 2 the totals follow the Raney numbers
print([sum(coinv_dimensions(n, 2).values()) for n in range(9)])

# reduction keeps only the Supp_n part of a forest expansion
from qsdd import parse_poly
f = parse_poly("x3^2 + x1*x2")
print(coinv_reduce(f, 3).format())

# quasisymmetric polynomials expand in fundamental slides
from qsdd import fundamental_expand
g = parse_poly("2*x1^2*x2 + 2*x1^2*x3 + 2*x2^2*x3 + x1*x2^2 + x1*x3^2 + x2*x3^2")
print(fundamental_expand(g, 3))

# reversing the variables acts on the quotient by mirroring forests, up to sign
from qsdd.coinv import rev_mirror_check
print(all(rev_mirror_check(F, 4) for F in enumerate_class("Supp", 4)))

# the trimming operators satisfy nil-Hecke style relations
from qsdd import verify_nilhecke
print(all(r.passed for r in verify_nilhecke(4, 1, trials=20)))
