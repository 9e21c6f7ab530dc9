# # The ninth variation

"""This module implements the abstract ninth variation of Schur functions,
where the one-row characters `h_k[x|τ^s c]` are replaced by independent
indeterminates `h_(r,s)`, and the shift `τ` becomes the ring automorphism
`φ(h_(r,s)) = h_(r,s+1)`.

Elements are ordinary `Poly` values in the `H` family of variables. The
conventions `h_(0,s) = 1` and `h_(r,s) = 0` for `r < 0` are applied by `ring.h`
when an entry is built, so only the indeterminates actually touched are ever allocated.

```python
>>> str(ninth_e(2))
'h:1:-1*h:1:0 - h:2:-1'
>>> str(phi(ninth_e(1), 2))
'h:1:2'

```

Symplectic and orthogonal characters come in two forms: straight
determinants, and minors of the folded matrices `A⁺` and `A∘`.
The specialisations `h_(r,s) -> h_r[x, x̄|τ^(s-n) c]` (and their type A and
odd variants) send these to the characters of the `characters` module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from . import ring
from .characters import complete, even_orthogonal, odd_orthogonal, schur, symplectic
from .errors import AlgebraError, LengthExceedsN
from .identities import CheckReport, Timer, require_negative_cut
from .partitions import Partition, partitions
from .ring import ONE, ZERO, Family, Matrix, Poly, Var
from .sequences import CSpec, factorial_sequence, tau_shift

NK_FAMILIES = ("a", "c", "o")

# ## The shift automorphism


def phi(poly: Poly, power: int = 1) -> Poly:
    """Applies `φ^power`, raising the second index of every `h_(r,s)` by `power`."""
    if not power:
        return poly

    def shift(mono):
        return tuple(
            (Var(Family.H, var.index, var.shift + power) if var.family == Family.H else var, exp)
            for var, exp in mono
        )

    return poly.map_monomials(shift)


def is_ninth(poly: Poly) -> bool:
    """Whether `poly` only involves the `h_(r,s)` indeterminates."""
    return all(var.family == Family.H for var in poly.variables())


# ## Elementary functions

# `e_r = s_(1^r) = det[φ^(1-j) h_(1-i+j)]`, an `r x r` determinant.


@lru_cache(maxsize=None)
def _elementary(r: int) -> Poly:
    return ring.determinant([[ring.h(1 - i + j, 1 - j) for j in range(1, r + 1)] for i in range(1, r + 1)])


def ninth_e(r: int, shift: int = 0) -> Poly:
    """`φ^shift e_r`, with `e_0 = 1` and `e_r = 0` for `r < 0`."""
    if r < 0:
        return ZERO

    return phi(_elementary(r), shift)


# ## Straight and skew characters


def _parts(lam: Sequence[int], n: int) -> Partition:
    lam = Partition(lam)

    if len(lam) > n:
        raise LengthExceedsN(f"{lam} has more than {n} parts")

    return lam


def ninth_skew_schur(lam: Sequence[int], mu: Sequence[int] = (), n: Optional[int] = None) -> Poly:
    """
    `s_(λ/μ) = det[φ^(μ_j + 1 - j) h_(λ_i - μ_j - i + j)]`.

    ```python
    >>> str(ninth_skew_schur([2, 1]))
    'h:1:-1*h:2:0 - h:3:-1'

    ```
    """
    if n is None:
        n = max(len(Partition(lam)), len(Partition(mu)))

    lam, mu = _parts(lam, n), _parts(mu, n)
    return ring.determinant(
        [
            [ring.h(lam.part(i) - mu.part(j) - i + j, mu.part(j) + 1 - j) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    )


def _require_integral(poly: Poly, name: str) -> Poly:
    for _, coeff in poly.items():
        if Fraction(coeff).denominator != 1:
            raise AlgebraError(f"{name} has a non-integral coefficient {coeff}")

    return poly


# #### `ninth_sp`

# The straight symplectic character is
# `½ det[φ^(1-j) h_(λ_i-i+j) + φ^(j-1) h_(λ_i-i-j+2)]`. The first column is
# `2 h_(λ_i-i+1)`, so the result has integral coefficients.


def ninth_sp(
    lam: Sequence[int],
    n: int,
    mu: Optional[Sequence[int]] = None,
    *,
    shift: int = 0,
    m: Optional[int] = None,
) -> Poly:
    """The symplectic ninth variation `sp_λ`, or the skew `sp_(λ/μ)` as a minor of `A⁺`.

    **Parameters**:

    - `lam`: A partition with at most `n` parts.
    - `n`: The rank.
    - `mu`: For skew characters, the inner partition.
    - `shift`: Applies `φ^shift` to the result.
    - `m`: For skew characters, the size parameter of the matrices (at least `λ_1`).
    """
    lam = _parts(lam, n)

    if mu is not None:
        matrices = build_nk_matrices(n, max(m or 0, lam.part(1), 1))
        return phi(matrices.skew("plus", lam, mu), shift)

    rows = []

    for i in range(1, n + 1):
        part = lam.part(i)
        row = [
            ring.h(part - i + j, 1 - j + shift) + ring.h(part - i - j + 2, j - 1 + shift)
            for j in range(1, n + 1)
        ]

        if row[0] != ring.h(part - i + 1, shift) * 2:
            raise AlgebraError(f"First column entry {row[0]} is not 2 h_({part - i + 1})")

        rows.append(row)

    return _require_integral(ring.determinant(rows).scaled(Fraction(1, 2)), f"sp_{lam}")


def ninth_o(
    lam: Sequence[int],
    n: int,
    mu: Optional[Sequence[int]] = None,
    *,
    shift: int = 0,
    m: Optional[int] = None,
) -> Poly:
    """The orthogonal ninth variation `o_λ = det[φ^(1-j) h_(λ_i-i+j) - φ^(1+j) h_(λ_i-i-j)]`,
    or the skew `o_(λ/μ)` as a minor of `A∘`.
    """
    lam = _parts(lam, n)

    if mu is not None:
        matrices = build_nk_matrices(n, max(m or 0, lam.part(1), 1))
        return phi(matrices.skew("circ", lam, mu), shift)

    return ring.determinant(
        [
            [
                ring.h(lam.part(i) - i + j, 1 - j + shift) - ring.h(lam.part(i) - i - j, 1 + j + shift)
                for j in range(1, n + 1)
            ]
            for i in range(1, n + 1)
        ]
    )


# ## The structured matrices

# All six matrices are indexed by `0..N` with `N + 1 = n + m`, and entries
# whose indices fall outside that range are zero:
#
# - `A_ij = φ^(1-n+j) h_(i-j)` and `B_ij = (-1)^(i-j) φ^(i-n) e_(i-j)`, inverse to each other.
# - `A⁺_ij = A_ij + A_(i,2(n-1)-j)` for `j < n - 1`, inverse to `B⁻_ij = B_ij - B_(2(n-1)-i,j)` for `i > n - 1`.
# - `A∘_ij = A_ij - A_(i,2n-j)` for `j < n`, inverse to `Bˣ_ij = B_ij + B_(2n-i,j)` for `i > n`.

PAIRS = {"plain": ("A", "B"), "plus": ("A_plus", "B_minus"), "circ": ("A_circ", "B_times")}


@dataclass(frozen=True)
class NKMatrices:
    n: int
    m: int
    A: Matrix
    B: Matrix
    A_plus: Matrix
    B_minus: Matrix
    A_circ: Matrix
    B_times: Matrix

    @property
    def size(self) -> int:
        return self.n + self.m

    def pair(self, name: str) -> Tuple[Matrix, Matrix]:
        if name not in PAIRS:
            raise ValueError(f"Unknown matrix pair {name!r}, expected one of {sorted(PAIRS)}")

        left, right = PAIRS[name]
        return getattr(self, left), getattr(self, right)

    def skew(self, name: str, lam: Sequence[int], mu: Sequence[int] = ()) -> Poly:
        """The minor on rows `λ_i + n - i` and columns `μ_j + n - j` of `A`, `A⁺` or `A∘`."""
        n = self.n
        lam, mu = _parts(lam, n), _parts(mu, n)
        rows = [lam.part(i) + n - i for i in range(1, n + 1)]
        columns = [mu.part(j) + n - j for j in range(1, n + 1)]

        if max(rows + columns) >= self.size:
            raise LengthExceedsN(f"{lam}/{mu} does not fit in matrices of size {self.size}")

        return ring.minor(self.pair(name)[0], rows, columns)


def build_nk_matrices(n: int, m: int) -> NKMatrices:
    """
    ```python
    >>> matrices = build_nk_matrices(1, 1)
    >>> [[str(e) for e in row] for row in matrices.A]
    [['1', '0'], ['h:1:0', '1']]

    ```
    """
    if n < 1 or m < 1:
        raise ValueError(f"Matrices need n, m >= 1, got n={n}, m={m}")

    size = n + m

    def a(i: int, j: int) -> Poly:
        if not (0 <= i < size and 0 <= j < size):
            return ZERO

        return ring.h(i - j, 1 - n + j)

    def b(i: int, j: int) -> Poly:
        if not (0 <= i < size and 0 <= j < size):
            return ZERO

        entry = ninth_e(i - j, i - n)
        return -entry if (i - j) % 2 else entry

    indices = range(size)
    A = [[a(i, j) for j in indices] for i in indices]
    B = [[b(i, j) for j in indices] for i in indices]
    A_plus = [[a(i, j) + a(i, 2 * (n - 1) - j) if j < n - 1 else a(i, j) for j in indices] for i in indices]
    B_minus = [[b(i, j) - b(2 * (n - 1) - i, j) if i > n - 1 else b(i, j) for j in indices] for i in indices]
    A_circ = [[a(i, j) - a(i, 2 * n - j) if j < n else a(i, j) for j in indices] for i in indices]
    B_times = [[b(i, j) + b(2 * n - i, j) if i > n else b(i, j) for j in indices] for i in indices]
    return NKMatrices(n, m, A, B, A_plus, B_minus, A_circ, B_times)


def _first_difference(left: Matrix, right: Matrix) -> Poly:
    for row_a, row_b in zip(left, right):
        for a, b in zip(row_a, row_b):
            if a != b:
                return a - b

    return ZERO


# ## Checks


def check_inverse_pairs(n: int, m: int) -> CheckReport:
    """`A B = A⁺ B⁻ = A∘ Bˣ = I`. A failing report carries the first wrong entry."""
    timer = Timer()
    matrices = build_nk_matrices(n, m)
    identity = ring.identity_matrix(matrices.size)
    notes = []
    difference = ZERO

    for name in PAIRS:
        left, right = matrices.pair(name)
        difference = _first_difference(ring.matmul(left, right), identity)

        if difference:
            notes.append(f"the {name} pair is not inverse")
            break

    return timer.report("ninth-inverse-pairs", {"n": n, "m": m}, difference, ZERO, notes)


# #### `check_minor_duality`

# For unitriangular `X` with inverse `Y`, every minor satisfies Jacobi's
# complementary identity `det X[I, J] = (-1)^(ΣI + ΣJ) det Y[J^c, I^c]`.
# The check runs over every pair of row and column subsets of the given size.


def check_minor_duality(n: int, m: int, pair: str = "plus", size: Optional[int] = None) -> CheckReport:
    timer = Timer()
    matrices = build_nk_matrices(n, m)
    left, right = matrices.pair(pair)
    total = matrices.size
    size = n if size is None else size
    everything = set(range(total))
    difference = ZERO
    notes = []

    for rows in itertools.combinations(range(total), size):
        for columns in itertools.combinations(range(total), size):
            value = ring.minor(left, rows, columns)
            dual = ring.minor(right, sorted(everything - set(columns)), sorted(everything - set(rows)))
            difference = value - dual if (sum(rows) + sum(columns)) % 2 == 0 else value + dual

            if difference:
                notes.append(f"rows {list(rows)}, columns {list(columns)}")
                break

        if difference:
            break

    parameters = {"n": n, "m": m, "pair": pair, "size": size}
    return timer.report("ninth-minor-duality", parameters, difference, ZERO, notes)


# #### `check_ninth_nk`

# The Nägelsbach-Kostka identities express the same characters through the
# elementary functions, in determinants of size `m >= ℓ(λ')`:
#
# - type A: `s_(λ/μ) = det[φ^(-μ'_j - 1 + j) e_(λ'_i - μ'_j - i + j)]`,
# - symplectic: `sp_λ = det[φ^(j-1) e_(λ'_i-i+j) - φ^(-j-1) e_(λ'_i-i-j)]`,
# - orthogonal: `o_λ = ½ det[φ^(j-1) e_(λ'_i-i+j) + φ^(1-j) e_(λ'_i-i-j+2)]`.
#
# These are the complementary minors of `B⁻` and `Bˣ`, transposed. The `literal`
# convention shifts both symplectic terms by `φ^(j-1)` and indexes the orthogonal
# shifts by row. It agrees on small shapes, and first differs at `λ = (1,1,1)`
# for `sp` and at `λ = (2)` for `o`.

NK_CONVENTIONS = ("minor", "literal")


def nk_matrix(
    family: str, lam: Sequence[int], m: int, mu: Sequence[int] = (), convention: str = "minor"
) -> Matrix:
    family = _nk_family(family)

    if convention not in NK_CONVENTIONS:
        raise ValueError(f"Unknown convention {convention!r}, expected one of {NK_CONVENTIONS}")

    conjugate = _parts(Partition(lam).conjugate(), m)
    inner = _parts(Partition(mu).conjugate(), m)
    rows = []

    for i in range(1, m + 1):
        row = []
        part = conjugate.part(i)

        for j in range(1, m + 1):
            if family == "a":
                row.append(ninth_e(part - inner.part(j) - i + j, -inner.part(j) - 1 + j))
            elif family == "c":
                tail = j - 1 if convention == "literal" else -j - 1
                row.append(ninth_e(part - i + j, j - 1) - ninth_e(part - i - j, tail))
            else:
                k = i if convention == "literal" else j
                row.append(ninth_e(part - i + j, k - 1) + ninth_e(part - i - j + 2, 1 - k))

        rows.append(row)

    return rows


def _nk_family(family: str) -> str:
    family = family.lower()

    # The orthogonal ninth variation specialises to both types B and D.
    if family in ("b", "d"):
        return "o"

    if family not in NK_FAMILIES:
        raise ValueError(f"Unknown family {family!r}, expected one of {NK_FAMILIES}")

    return family


def check_ninth_nk(
    family: str,
    lam: Sequence[int],
    n: int,
    m: int,
    mu: Sequence[int] = (),
    convention: str = "minor",
) -> CheckReport:
    timer = Timer()
    family = _nk_family(family)

    if family == "a":
        lhs = ninth_skew_schur(lam, mu, n)
    elif family == "c":
        lhs = ninth_sp(lam, n)
    else:
        lhs = ninth_o(lam, n)

    rhs = ring.determinant(nk_matrix(family, lam, m, mu, convention))

    if family == "o":
        rhs = rhs.scaled(Fraction(1, 2))

    parameters = {"family": family, "lambda": list(Partition(lam)), "n": n, "m": m}

    if Partition(mu):
        parameters["mu"] = list(Partition(mu))

    if convention != "minor":
        parameters["convention"] = convention

    return timer.report("ninth-nk", parameters, lhs, rhs)


# ## Specialisation

# Every `h_(r,s)` is replaced by a factorial complete symmetric polynomial:
#
# - type A: `h_r[x|τ^s c]`,
# - types C and D: `h_r[x, x̄|τ^(s-n) c]`,
# - type B: `h_r[x, x̄, 1|τ^(s-n-1) c]`.


def specialise(poly: Poly, family: str, n: int, c: CSpec) -> Poly:
    """
    ```python
    >>> str(specialise(ring.h(1, 0), "a", 1, CSpec.symbolic()))
    'x1 - c0'

    ```
    """
    family = family.lower()
    xs = [ring.x(i) for i in range(1, n + 1)]

    if family == "a":
        values, offset = xs, 0
    elif family in ("c", "d"):
        values, offset = xs + [ring.xbar(i) for i in range(1, n + 1)], -n
    elif family == "b":
        values, offset = xs + [ring.xbar(i) for i in range(1, n + 1)] + [ONE], -n - 1
    else:
        raise ValueError(f"Unknown family {family!r}, expected a, c, b or d")

    bindings: Dict[Var, Poly] = {}

    for var in poly.variables():
        if var.family == Family.H:
            bindings[var] = complete(var.index, values, tau_shift(c, var.shift + offset))

    return ring.substitute(poly, bindings)


def check_specialisation(family: str, lam: Sequence[int], n: int, c: CSpec) -> CheckReport:
    """Specialises `s_λ`, `sp_λ` or `o_λ` and compares with the factorial character."""
    family = family.lower()
    timer = Timer()
    F = factorial_sequence(c)

    if family == "a":
        lhs = specialise(ninth_skew_schur(lam, (), n), "a", n, c)
        rhs = schur(F, lam, n)
    else:
        require_negative_cut(c, family)

        if family == "c":
            lhs = specialise(ninth_sp(lam, n), "c", n, c)
            rhs = symplectic(F, lam, n)
        elif family == "b":
            lhs = specialise(ninth_o(lam, n), "b", n, c)
            rhs = odd_orthogonal(F, lam, n)
        elif family == "d":
            lhs = specialise(ninth_o(lam, n), "d", n, c)
            rhs = even_orthogonal(F, lam, n)
        else:
            raise ValueError(f"Unknown family {family!r}, expected a, c, b or d")

    parameters = {"family": family, "lambda": list(Partition(lam)), "n": n}
    return timer.report("ninth-specialisation", parameters, lhs, rhs)


# ## The involution `ω`

# `ω(h_(r,s)) = φ^(-s) e_r` extends to a ring map with `ω φ = φ^(-1) ω`,
# and the Nägelsbach-Kostka identity gives `ω(s_λ) = s_(λ')`.


def omega(poly: Poly) -> Poly:
    bindings = {
        var: ninth_e(var.index, -var.shift) for var in poly.variables() if var.family == Family.H
    }
    return ring.substitute(poly, bindings)


def check_omega(lam: Sequence[int]) -> CheckReport:
    """`ω(s_λ) = s_(λ')`."""
    timer = Timer()
    lam = Partition(lam)
    conjugate = lam.conjugate()
    lhs = omega(ninth_skew_schur(lam, (), max(len(lam), 1)))
    rhs = ninth_skew_schur(conjugate, (), max(len(conjugate), 1))
    return timer.report("ninth-omega", {"lambda": list(lam)}, lhs, rhs)


# #### `check_duality`

# Entrywise, `ω` turns the determinant of `sp_λ` into the Nägelsbach-Kostka
# determinant of `o_(λ')` with column-indexed shifts, so `ω(sp_λ) = o_(λ')` holds
# exactly when that identity does. With row-indexed shifts it does not.


def check_duality(lam: Sequence[int]) -> CheckReport:
    timer = Timer()
    lam = Partition(lam)
    conjugate = lam.conjugate()
    lhs = omega(ninth_sp(lam, max(len(lam), 1)))
    rhs = ninth_o(conjugate, max(len(conjugate), 1))
    return timer.report("ninth-duality", {"lambda": list(lam)}, lhs, rhs)


def duality_witness(max_weight: int = 4) -> Optional[CheckReport]:
    """The first partition (by weight) for which `ω(sp_λ) != o_(λ')`, if any."""
    for lam in partitions(max_weight, min_weight=1):
        report = check_duality(lam)

        if not report.holds:
            return report

    return None


def check_phi_equivariance(family: str, lam: Sequence[int], n: int) -> CheckReport:
    """`φ(sp_λ) = sp_λ` with every shift raised by one, and the same for `o_λ`."""
    timer = Timer()
    family = _nk_family(family)

    if family == "a":
        raise ValueError("The shift check applies to the symplectic and orthogonal characters")

    build = ninth_sp if family == "c" else ninth_o
    lhs, rhs = phi(build(lam, n)), build(lam, n, shift=1)

    parameters = {"family": family, "lambda": list(Partition(lam)), "n": n}
    return timer.report("ninth-phi-equivariance", parameters, lhs, rhs)
