"""`ninthvar` computes generalised Schur functions and their symplectic and
orthogonal relatives exactly, and verifies the identities between them.

Characters are parametrised by an admissible sequence of polynomials, most
notably the factorial powers `[x|c]^k` of a symbolic sequence `c`.
Every identity is checked instance by instance, in exact rational arithmetic,
with infinite series truncated where the truncation is provably exact.
"""

# This is the main module of `ninthvar`.
# We'll import the main entry points so they can be used directly.

# The [`Poly`](ref:ninthvar.ring:Poly) class is the exact Laurent polynomial
# every computation produces.
from .ring import Poly

# The [`Partition`](ref:ninthvar.partitions:Partition) and
# [`Signature`](ref:ninthvar.partitions:Signature) classes index characters.
from .partitions import Partition, Signature

# Admissible sequences and their parameter sequences `c`.
from .sequences import CSpec, factorial_sequence, monomial_sequence, custom_sequence

# The characters of types A, C, B and D.
from .characters import character, schur, symplectic, odd_orthogonal, even_orthogonal

# Every identity check returns a [`CheckReport`](ref:ninthvar.identities:CheckReport),
# and the catalogue runs them by id.
from .identities import CheckReport
from .registry import CheckRequest, IDENTITIES, run_check

__version__ = "0.1.0"
