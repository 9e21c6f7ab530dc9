# # Checking the classical identities

# In this example we will verify, instance by instance, the main identities
# satisfied by generalised Schur functions and their symplectic and orthogonal
# relatives.
# Every check returns a `CheckReport`, and a report holds exactly when the
# difference between both sides is the zero polynomial.

# We will collect all reports in a single list as we go.

from ninthvar import identities
from ninthvar.sequences import CSpec, custom_sequence, factorial_sequence, monomial_sequence

reports = []

# ## Choosing a sequence

# Characters are parametrised by an admissible sequence `F`.
# The most important one is the sequence of factorial powers
# `[x|c]^k = (x - c_0)(x - c_1)...(x - c_(k-1))` of a symbolic sequence `c`.

F = factorial_sequence(CSpec.symbolic())

# When every `c_m` is zero we recover the ordinary monomials, and
# so the classical Schur functions.

M = monomial_sequence()

# We can also give any monic sequence by its coefficients, lowest degree first.

G = custom_sequence({1: [1, 1], 2: [0, 2, 1], 3: [1, 0, 0, 1], 4: [0, 0, 0, 0, 1]})

# ## The Cauchy identity

# The sum of `s_λ^F(x) s_λ^*(u)` over all partitions equals a product of
# simple factors.
# The right hand side is an infinite series, so both sides are compared up to
# a total degree in the dual variables `u`.

for sequence in (F, M):
    reports.append(identities.check_cauchy(sequence, n=2, cap=3))

reports.append(identities.check_cauchy(G, n=1, cap=3))

# ## The Littlewood identities

# In types C and B any admissible sequence works.
# Type D needs a sequence without constant terms, so we set `c_0 = 0`.

reports.append(identities.check_littlewood("c", F, n=2, cap=2))
reports.append(identities.check_littlewood("b", F, n=2, cap=2))
reports.append(identities.check_littlewood("d", factorial_sequence(CSpec.symbolic(zero_c0=True)), n=2, cap=2))

# In type A the identity runs over signatures with `p` nonnegative and `q` negative parts.

reports.append(identities.check_littlewood_a(F, n=2, p=1, q=1, cap=2))

# ## The dual Cauchy identity

# This one is a finite identity, so no truncation is involved.

for family in "acbd":
    reports.append(identities.check_dual_cauchy(family, F, n=2, m=2))

# ## Jacobi-Trudi

# The symplectic and orthogonal Jacobi-Trudi identities need `c_m = 0` for
# negative `m`, and type D also needs `c_0 = 0`.

cut = CSpec.symbolic(negative_cut=True)

reports.append(identities.check_jt("c", cut, [2, 1], 2))
reports.append(identities.check_jt("b", cut, [2, 1], 2))
reports.append(identities.check_jt("d", CSpec.symbolic(negative_cut=True, zero_c0=True), [2, 1], 2))

# In type A the identity holds for any signature, using the block form.

reports.append(identities.check_jt_a(CSpec.symbolic(), [1, -1], 2))

# ## Flagged determinants

# The flagged Jacobi-Trudi, Nägelsbach-Kostka and Giambelli identities hold for
# any admissible sequence, in all four types.

for kind in ("jt", "giambelli"):
    reports.append(identities.check_flagged(kind, "c", G, [2, 1], 2))

reports.append(identities.check_flagged("nk", "b", F, [2, 1], 2))

# ## Gelfand-Tsetlin patterns

# Finally, factorial Schur functions are sums over Gelfand-Tsetlin patterns.

reports.append(identities.check_gt([1, 0, -1], 3, CSpec.symbolic()))

# If everything went well, every report holds.

for report in reports:
    print(report)
