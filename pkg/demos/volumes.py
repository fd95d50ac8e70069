"""
Volume polynomials and harmonics
================================

"""

# the volume polynomial of a forest is an iterated integral, one node at a time
from qsdd import IndexedForest, volume_polynomial
F = IndexedForest((0, 2, 0, 1))
V = volume_polynomial(F)
print("V_F =", V.format())

# summing signed path systems gives the same polynomial
print("paths agree:", volume_polynomial(F, "paths") == V)

# volumes are dual to forest polynomials under the differential pairing
from qsdd import d_pairing, enumerate_class, forest_polynomial
forests = enumerate_class("LTer", 4, max_size=2)
print(all(d_pairing(forest_polynomial(G), volume_polynomial(H)) == (G == H) for G in forests for H in forests))

# in the differences l_i - l_{i+1} the coefficients are nonnegative
from qsdd import lambda_difference_coeffs
print(lambda_difference_coeffs(V))

# the volumes of Supp_n forests are harmonic
from qsdd import is_harmonic
print(all(is_harmonic(volume_polynomial(G), 4) for G in enumerate_class("Supp", 4)))
