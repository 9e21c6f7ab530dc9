# # User guide

# This guide walks through the main pieces of `ninthvar`: polynomials,
# partitions, admissible sequences, characters and identity checks.

# ## Polynomials

# Everything `ninthvar` computes is a `Poly`, an exact Laurent polynomial
# with rational coefficients.
# Variables are created with small helpers: `x(i)` and `xbar(i)` for the
# main variables and their inverses, and `c(m)` for the parameters.

from ninthvar.ring import c, x, xbar

p = (x(1) - c(0)) * (x(1) + xbar(1))
print(p)

# ## Partitions and signatures

# Characters are indexed by partitions or, in type A, by signatures,
# which may have negative parts.

from ninthvar import Partition, Signature

lam = Partition([3, 1])
print(lam.conjugate(), lam.frobenius())
print(Signature([1, 0, -2]).split())

# ## Sequences

# The factorial sequence of a symbolic `c` is the default.
# Parameters can also be cut off below zero, as in `CSpec.symbolic(negative_cut=True)`,
# or set to explicit values.

from ninthvar import CSpec, factorial_sequence

F = factorial_sequence(CSpec.symbolic())

# ## Characters

# The four families are `a` (Schur functions), `c` (symplectic), `b`
# (odd orthogonal) and `d` (even orthogonal).

from ninthvar import character

for family in "acbd":
    print(family, character(family, F, [1], 1))

# Signatures with negative parts give quotients with simple linear
# denominators.

print(character("a", F, [0, -1], 2))

# ## Checks

# Identities are checked by name through the catalogue, which is also
# what the command line uses.

from ninthvar import CheckRequest, run_check

reports = [
    run_check(CheckRequest("cauchy", n=2, truncate=2)),
    run_check(CheckRequest("jt", family="c", lam=(2, 1), n=2)),
    run_check(CheckRequest("ninth-nk", family="c", lam=(1, 1, 1), n=3, m=1)),
]

# The Jacobi-Trudi check above switches `c_m = 0` for negative `m` on, and
# the report says so.

for report in reports:
    print(report, report.notes)

# The same checks are available from the command line:
#
# ```bash
# ninthvar check cauchy --n 2 --truncate 2
# ninthvar check jt --family c --lambda 2,1 --n 2
# ninthvar check ninth-nk --family c --lambda 1,1,1 --n 3 --m 1
# ```
