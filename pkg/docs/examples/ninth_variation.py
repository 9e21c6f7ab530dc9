# # The ninth variation

# The ninth variation replaces every factorial complete symmetric polynomial by a
# free generator `h_(r,s)`, where `r` is the degree and `s` a shift.
# The only relations are `h_(0,s) = 1` and `h_(r,s) = 0` for negative `r`.
# In this example we build characters in these generators and check that the
# identities survive the abstraction.

from ninthvar import ninth
from ninthvar.partitions import partitions, partitions_inside
from ninthvar.ring import h
from ninthvar.sequences import CSpec

reports = []

# ## Elementary functions and the shift

# Elementary functions `e_(r,s)` are defined from the `h` generators by the
# usual inversion, and `φ` raises every shift by one.

e2 = ninth.ninth_e(2)
print(e2)

assert ninth.phi(e2) == ninth.ninth_e(2, 1)

# ## Structured matrices

# Six lower unitriangular matrices, built from the generators, are
# pairwise inverse to each other.

reports.append(ninth.check_inverse_pairs(3, 3))

# Their minors are related by Jacobi's complementary minor theorem.

for pair in ("plain", "plus", "circ"):
    reports.append(ninth.check_minor_duality(2, 2, pair))

# ## Nägelsbach-Kostka

# Symplectic and orthogonal characters are defined as minors of those matrices,
# and they can also be written as determinants in the elementary functions.

print(ninth.ninth_sp([1, 1], 2))

for lam in partitions_inside([2, 2]):
    for family in ("a", "c", "o"):
        reports.append(ninth.check_ninth_nk(family, lam, 2, 2))

# Skew Schur functions work the same way.

reports.append(ninth.check_ninth_nk("a", [3, 1], 2, 3, [2]))

# ## Back to factorial characters

# Replacing every `h_(r,s)` by the corresponding factorial complete symmetric
# polynomial recovers the factorial characters of the previous examples.
# The symplectic and orthogonal cases need `c_m = 0` for negative `m`.

reports.append(ninth.check_specialisation("a", [2, 1], 2, CSpec.symbolic()))
reports.append(ninth.check_specialisation("c", [2, 1], 2, CSpec.symbolic(negative_cut=True)))
reports.append(ninth.check_specialisation("b", [1, 1], 2, CSpec.symbolic(negative_cut=True)))

# ## The involution ω

# The involution `ω` swaps `h_(r,s)` and `e_(r,-s)`.
# It sends Schur functions to their conjugates, and symplectic characters
# to orthogonal characters of the conjugate partition.

assert ninth.omega(h(1, 3)) == h(1, -3)

for lam in partitions(3, min_weight=1):
    reports.append(ninth.check_omega(lam))
    reports.append(ninth.check_duality(lam))

# ## Shifting

# Finally, `φ` commutes with the characters: shifting the generators
# shifts the character.

reports.append(ninth.check_phi_equivariance("c", [2, 1], 2))
reports.append(ninth.check_phi_equivariance("o", [2, 1], 2))

for report in reports:
    print(report)
