# # Characters

"""This module computes the characters themselves: generalised Schur functions
(type A, including signatures with negative parts), the symplectic and orthogonal
characters of types C, B and D, the dual and double dual Schur functions,
the one-row characters `h`, `e`, `g`, and the Gelfand-Tsetlin evaluation
of factorial Schur functions.

Every character is a quotient of two alternants. The Vandermonde denominator is
divided out of the numerator matrix row by row, and the exact determinant is
taken afterwards.

```python
>>> from ninthvar.sequences import factorial_sequence
>>> F = factorial_sequence()
>>> str(schur(F, [1], 2))
'x1 + x2 - c0 - c1'
>>> str(symplectic(F, [1], 1))
'x1 - c0 + x1^-1'

```
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Union

from . import ring
from .errors import (
    CapTooSmall,
    ComputationError,
    LengthExceedsN,
    NegativePartsUnsupported,
    OddHalfExponentResidue,
)
from .partitions import Partition, gt_patterns
from .ring import ONE, ZERO, Family, Poly, Quotient, Series
from .sequences import (
    AdmissibleSequence,
    CSpec,
    DoubleDualSequence,
    DualSequence,
    FactorialSequence,
    factorial_power,
    factorial_power_quotient,
    tau_shift,
)

FAMILIES = ("a", "c", "b", "d")

Character = Union[Poly, Quotient]

# ## Argument handling


def _variables(n: int, variables: Optional[Sequence[int]]) -> List[int]:
    if variables is None:
        return list(range(1, n + 1))

    variables = list(variables)

    if len(variables) != n:
        raise ValueError(f"Expected {n} variable indices, got {len(variables)}")

    return variables


def _composition(lam: Sequence[int], n: Optional[int]) -> tuple:
    parts = tuple(int(p) for p in lam)

    if n is None:
        n = len(parts)

    if len(parts) > n:
        raise LengthExceedsN(f"{parts} has more than {n} parts")

    return parts + (0,) * (n - len(parts))


def _partition(lam: Sequence[int], n: int) -> Partition:
    lam = Partition(lam)

    if len(lam) > n:
        raise LengthExceedsN(f"{lam} has more than {n} parts")

    return lam


def _indices(parts: Sequence[int]) -> List[int]:
    n = len(parts)
    return [parts[j] + n - 1 - j for j in range(n)]


def _alternant(F: AdmissibleSequence, indices: Sequence[int], values: Sequence[Poly]) -> Poly:
    if not values:
        return ONE

    return ring.alternant_quotient([[F.evaluate(m, value) for m in indices] for value in values], values)


# ## Type A

# #### `schur`

# For a partition (or any composition with nonnegative alternant indices) the
# bialternant is a polynomial. A signature with negative parts needs the
# negative part of the sequence: in the factorial case it is computed exactly
# as a `Quotient` through the shift identity
# `s_(α + (k^n))[x|τ^(-k) c] = prod_i [x_i|τ^(-k) c]^k * s_α[x|c]`, and for
# other sequences it is a Laurent series truncated below a caller supplied `floor`.


def schur(
    F: AdmissibleSequence,
    lam: Sequence[int],
    n: Optional[int] = None,
    *,
    variables: Optional[Sequence[int]] = None,
    floor: Optional[int] = None,
) -> Character:
    """Computes the generalised Schur function `s_λ^F(x_1, ..., x_n)`.

    **Parameters**:

    - `F`: The admissible sequence.
    - `lam`: A partition, signature or composition with at most `n` parts.
    - `n`: The number of variables, by default the length of `lam`.
    - `variables`: The indices of the `x` variables to use, by default `1..n`.
    - `floor`: For signatures and non-factorial sequences, the lowest total
      `x`-degree that must be exact in the truncated result.

    ```python
    >>> from ninthvar.sequences import monomial_sequence
    >>> str(schur(monomial_sequence(), [2, 1], 2))
    'x1^2*x2 + x1*x2^2'
    >>> str(schur(monomial_sequence(), [0, -1], 2))
    'x2^-1 + x1^-1'

    ```
    """
    parts = _composition(lam, n)
    n = len(parts)
    indices = _indices(parts)
    variables = _variables(n, variables)

    if not indices or min(indices) >= 0:
        return _alternant(F, indices, [ring.x(i) for i in variables])

    if floor is not None:
        return _truncated_schur(F, indices, variables, floor)

    if isinstance(F, FactorialSequence):
        return _shifted_schur(F.c, indices, variables)

    raise NegativePartsUnsupported(
        f"Signature {parts} needs a factorial sequence, or a floor for a truncated expansion"
    )


def _shifted_schur(c: CSpec, indices: List[int], variables: List[int]) -> Character:
    k = -min(indices)
    shifted = FactorialSequence(tau_shift(c, -k))
    num = _alternant(shifted, [m + k for m in indices], [ring.x(i) for i in variables])
    roots = [c[-l] for l in range(1, k + 1)]
    result = Quotient(num)

    for i in variables:
        result = result * Quotient.reciprocal(i, roots)

    if not any(roots):
        return result.to_poly()

    return result


# The truncated bialternant. Every entry in column `j` has `x`-degree at most
# `m_j`, so a term of degree `d` in column `j` only reaches numerator terms of
# degree at most `d + M - m_j`, where `M` is the sum of all column indices.
# Entries are therefore cut below `G - (M - m_j)`, with `G` the lowest
# numerator degree that must be exact.


def _truncated_schur(F: AdmissibleSequence, indices: List[int], variables: List[int], floor: int) -> Poly:
    n = len(indices)
    total = sum(indices)
    lowest = floor + n * (n - 1) // 2
    rows = []

    for i in variables:
        row = []

        for m in indices:
            if m >= 0:
                row.append(F.evaluate(m, ring.x(i)))
                continue

            order = total - m - lowest
            coeffs = F.negative_coefficients(-m, order) if order >= -m else []
            row.append(sum((a * ring.x(i, -j) for j, a in enumerate(coeffs) if a), ZERO))

        rows.append(row)

    num = ring.alternant_quotient(rows, [ring.x(i) for i in variables])
    return num.floor([Family.X], floor)


# ## Types C, B and D


def _cbd_indices(lam: Partition, n: int) -> List[int]:
    return [lam.part(j) + n - j for j in range(1, n + 1)]


# Every entry of the C, B and D alternants, once divided by its own factor
# `x_i - x̄_i` (or `y_i - ȳ_i`), is a polynomial `G_m(w_i)` in `w_i = x_i + x̄_i`,
# and so is the denominator `V(w_1, ..., w_n)`. The quotient is therefore a
# type A bialternant in the `w_i`, which is computed with the `w_i` as plain
# variables and expanded only at the end.


def _w_coefficients(poly: Poly) -> Poly:
    """Writes a Laurent polynomial invariant under `x_1 ↔ x̄_1` as a polynomial in `w = x_1 + x̄_1`.

    The result uses `x_1` as the name of `w`.

    ```python
    >>> str(_w_coefficients(ring.x(1, 2) + ring.x(1, -2)))
    'x1^2 - 2'

    ```
    """
    w = ring.x(1)
    result = ZERO

    while poly:
        top = poly.degree([Family.X])

        if top < 0:
            raise ComputationError(f"{poly} is not invariant under x1 <-> x1^-1")

        lead = ring.exact_divide(poly.homogeneous([Family.X], top), w**top)
        result = result + lead * w**top
        poly = poly - lead * (w + ring.xbar(1)) ** top

    return result


@lru_cache(maxsize=4096)
def _w_sequence(F: AdmissibleSequence, family: str, m: int) -> Poly:
    if family == "c":
        x, xbar = ring.x(1), ring.xbar(1)
        entry = ring.exact_divide(x * F.evaluate(m, x) - xbar * F.evaluate(m, xbar), x - xbar)
    elif family == "b":
        # Square roots `x_1^(1/2)` are written `y_1`, and the quotient only has even powers.
        y, ybar = ring.y(1), ring.y(1, -1)
        entry = from_half(ring.exact_divide(y * F.evaluate(m, y**2) - ybar * F.evaluate(m, ybar**2), y - ybar))
    else:
        entry = F.evaluate(m, ring.x(1)) + F.evaluate(m, ring.xbar(1))

    return _w_coefficients(entry)


def _w_alternant(F: AdmissibleSequence, family: str, indices: List[int], variables: List[int]) -> Poly:
    values = [ring.x(i) for i in variables]
    rows = []

    for i in variables:
        rename = {ring.Var(Family.X, 1): ring.x(i)}
        rows.append([ring.substitute(_w_sequence(F, family, m), rename) for m in indices])

    return ring.alternant_quotient(rows, values)


def from_w(poly: Poly) -> Poly:
    """Substitutes `x_i + x̄_i` for every `x_i`, turning a polynomial in the `w_i` into a Laurent polynomial."""
    return ring.substitute(
        poly, {var: ring.x(var.index) + ring.xbar(var.index) for var in poly.variables() if var.family == Family.X}
    )


def w_character(family: str, F: AdmissibleSequence, lam: Sequence[int], n: int) -> Poly:
    """The character of type C, B or D as a polynomial in `w_i = x_i + x̄_i`, with `w_i` written `x_i`.

    `from_w` recovers the character. That substitution is injective, so identities
    between these characters can be checked on the much smaller `w` forms.

    ```python
    >>> from ninthvar.sequences import factorial_sequence
    >>> str(w_character("c", factorial_sequence(), [1], 1))
    'x1 - c0'

    ```
    """
    return _w_character(family.lower(), F, tuple(lam), n)


@lru_cache(maxsize=4096)
def _w_character(family: str, F: AdmissibleSequence, lam: tuple, n: int) -> Poly:
    if family not in ("c", "b", "d"):
        raise ValueError(f"Unknown family {family!r}, expected c, b or d")

    lam = _partition(lam, n)

    if n == 0:
        return ONE

    value = _w_alternant(F, family, _cbd_indices(lam, n), list(range(1, n + 1)))

    if family == "d" and lam.part(n) == 0:
        return value.scaled(Fraction(1, 2))

    return value


def symplectic(
    F: AdmissibleSequence,
    lam: Sequence[int],
    n: int,
    *,
    variables: Optional[Sequence[int]] = None,
) -> Poly:
    """The symplectic character `sp_λ^F(x_1, ..., x_n)`."""
    lam = _partition(lam, n)
    variables = _variables(n, variables)
    return from_w(_w_alternant(F, "c", _cbd_indices(lam, n), variables))


# #### `odd_orthogonal`

# The odd orthogonal entries involve square roots `x_i^(1/2)`, so they are
# computed in variables `y_i` with `x_i = y_i^2` and converted back before
# they are rewritten in `w_i`.


def odd_orthogonal(
    F: AdmissibleSequence,
    lam: Sequence[int],
    n: int,
    *,
    variables: Optional[Sequence[int]] = None,
) -> Poly:
    """The odd orthogonal character `so_λ^F(x_1, ..., x_n)`."""
    lam = _partition(lam, n)
    variables = _variables(n, variables)
    return from_w(_w_alternant(F, "b", _cbd_indices(lam, n), variables))


def from_half(poly: Poly) -> Poly:
    """Rewrites a polynomial in even powers of `y_i` as a polynomial in `x_i = y_i^2`."""

    def convert(mono):
        result = []

        for var, exp in mono:
            if var.family != Family.Y:
                result.append((var, exp))
                continue

            if exp % 2:
                raise OddHalfExponentResidue(f"{var.name}^{exp} is not a power of x_{var.index}")

            result.append((ring.Var(Family.X, var.index), exp // 2))

        return tuple(result)

    return poly.map_monomials(convert)


def _even_rows(F: AdmissibleSequence, lam: Partition, n: int, variables: List[int]) -> List[List[Poly]]:
    indices = _cbd_indices(lam, n)
    rows = []

    for i in variables:
        x, xbar = ring.x(i), ring.xbar(i)
        rows.append([F.evaluate(m, x) + F.evaluate(m, xbar) for m in indices])

    return rows


def even_orthogonal_alternant(
    F: AdmissibleSequence,
    lam: Sequence[int],
    n: int,
    *,
    variables: Optional[Sequence[int]] = None,
) -> Poly:
    """The raw numerator `det[f_(λ_j + n - j)(x_i) + f_(λ_j + n - j)(x̄_i)]`, without `η`."""
    lam = _partition(lam, n)
    return ring.determinant(_even_rows(F, lam, n, _variables(n, variables)))


def even_orthogonal(
    F: AdmissibleSequence,
    lam: Sequence[int],
    n: int,
    *,
    variables: Optional[Sequence[int]] = None,
) -> Poly:
    """The even orthogonal character `o_λ^F(x_1, ..., x_n)`.

    The factor `η` is `1/2` when `λ_n = 0` and `1` otherwise, and the denominator
    `1/2 det[f_(n-j)(x_i) + f_(n-j)(x̄_i)]` equals `V(x_1 + x̄_1, ..., x_n + x̄_n)`.

    ```python
    >>> from ninthvar.sequences import factorial_sequence
    >>> str(even_orthogonal(factorial_sequence(), [1], 1))
    'x1 - 2*c0 + x1^-1'

    ```
    """
    lam = _partition(lam, n)

    if n == 0:
        return ONE

    variables = _variables(n, variables)
    eta = Fraction(1, 2) if lam.part(n) == 0 else 1
    return from_w(_w_alternant(F, "d", _cbd_indices(lam, n), variables)).scaled(eta)


def character(
    family: str,
    F: AdmissibleSequence,
    lam: Sequence[int],
    n: int,
    *,
    variables: Optional[Sequence[int]] = None,
    floor: Optional[int] = None,
) -> Character:
    """Dispatches to the character of the given family (`a`, `c`, `b` or `d`)."""
    family = family.lower()

    if family == "a":
        return schur(F, lam, n, variables=variables, floor=floor)

    if family == "c":
        return symplectic(F, lam, n, variables=variables)

    if family == "b":
        return odd_orthogonal(F, lam, n, variables=variables)

    if family == "d":
        return even_orthogonal(F, lam, n, variables=variables)

    raise ValueError(f"Unknown family {family!r}, expected one of {FAMILIES}")


# ## Weyl denominators

# The denominator alternants at `λ = ∅` and their factored forms.


def weyl_denominator(family: str, n: int) -> Poly:
    """The alternant `det[...]` at `λ = ∅` for classical powers, unfactored."""
    family = family.lower()
    rows = []

    for i in range(1, n + 1):
        if family == "a":
            rows.append([ring.x(i, n - j) for j in range(1, n + 1)])
        elif family == "c":
            rows.append([ring.x(i, n - j + 1) - ring.x(i, -(n - j + 1)) for j in range(1, n + 1)])
        elif family == "b":
            rows.append([ring.y(i, 2 * (n - j) + 1) - ring.y(i, -(2 * (n - j) + 1)) for j in range(1, n + 1)])
        elif family == "d":
            rows.append([ring.x(i, n - j) + ring.x(i, -(n - j)) for j in range(1, n + 1)])
        else:
            raise ValueError(f"Unknown family {family!r}")

    det = ring.determinant(rows)
    return det.scaled(Fraction(1, 2)) if family == "d" and n else det


def weyl_denominator_product(family: str, n: int) -> Poly:
    """The factored form of `weyl_denominator`, as a product of linear factors."""
    family = family.lower()

    if family == "a":
        return ring.vandermonde([ring.x(i) for i in range(1, n + 1)])

    if family == "b":
        result = ring.vandermonde([ring.y(i, 2) + ring.y(i, -2) for i in range(1, n + 1)])

        for i in range(1, n + 1):
            result = result * (ring.y(i) - ring.y(i, -1))

        return result

    result = ring.vandermonde([ring.x(i) + ring.xbar(i) for i in range(1, n + 1)])

    if family == "c":
        for i in range(1, n + 1):
            result = result * (ring.x(i) - ring.xbar(i))

    return result


# #### `weyl_character`

# The classical characters through the Weyl character formula, dividing by the
# whole denominator alternant at once. This is independent from the factor by
# factor division above, and serves as an oracle for the classical limit.


def weyl_character(family: str, lam: Sequence[int], n: int) -> Poly:
    family = family.lower()

    if family == "a":
        parts = _composition(lam, n)
        num = ring.determinant([[ring.x(i, m) for m in _indices(parts)] for i in range(1, n + 1)])
        return ring.exact_divide(num, weyl_denominator("a", n))

    lam = _partition(lam, n)
    indices = _cbd_indices(lam, n)
    rows = []

    for i in range(1, n + 1):
        if family == "c":
            rows.append([ring.x(i, m + 1) - ring.x(i, -m - 1) for m in indices])
        elif family == "b":
            rows.append([ring.y(i, 2 * m + 1) - ring.y(i, -2 * m - 1) for m in indices])
        elif family == "d":
            rows.append([ring.x(i, m) + ring.x(i, -m) for m in indices])
        else:
            raise ValueError(f"Unknown family {family!r}")

    num = ring.exact_divide(ring.determinant(rows), weyl_denominator(family, n))

    if family == "b":
        return from_half(num)

    if family == "d" and n and lam.part(n) == 0:
        return num.scaled(Fraction(1, 2))

    return num


# ## Dual Schur functions


def dual_schur(
    dual: DualSequence,
    lam: Sequence[int],
    n: int,
    cap: int,
    *,
    variables: Optional[Sequence[int]] = None,
) -> Series:
    """The dual Schur function `ŝ_λ(u_1, ..., u_n)` up to total `u`-degree `cap`.

    The numerator is computed to degree `cap + n(n-1)/2`, which is what
    survives the division by the Vandermonde.
    """
    lam = _partition(lam, n)
    variables = _variables(n, variables)
    extended = cap + n * (n - 1) // 2
    indices = _cbd_indices(lam, n)

    if n and (dual.cap < extended or max(indices) > dual.cap):
        raise CapTooSmall(f"Dual sequence cap {dual.cap} is too small for {lam}, n={n}, cap={cap}")

    us = [ring.u(i) for i in variables]
    rows = [
        [Series(dual.polynomial(m, u), [Family.U], extended) for m in indices]
        for u in us
    ]
    num = ring.determinant(rows, one=Series(ONE, [Family.U], extended))
    return Series(ring.divide_vandermonde(num.body, us), [Family.U], cap)


def double_dual_schur(
    double_dual: DoubleDualSequence,
    nu: Sequence[int],
    q: int,
    *,
    variables: Optional[Sequence[int]] = None,
) -> Poly:
    """The double dual Schur function `š_ν(v_1, ..., v_q) = det[f̌_(ν_j + q - j + 1)(v_i) / v_i] / V(v)`."""
    nu = _partition(nu, q)
    variables = _variables(q, variables)
    indices = [nu.part(j) + q - j + 1 for j in range(1, q + 1)]

    if indices and max(indices) > double_dual.cap:
        raise CapTooSmall(f"Double dual cap {double_dual.cap} is too small for {nu}, q={q}")

    vs = [ring.v(i) for i in variables]

    if not vs:
        return ONE

    return ring.alternant_quotient([[double_dual.reduced(m, v) for m in indices] for v in vs], vs)


# ## One-row characters

# The flagged determinants ask for the same one-row characters over and over,
# so they are memoised per sequence object.


def one_row(
    kind: str,
    k: int,
    F: AdmissibleSequence,
    n: int,
    *,
    family: str = "a",
    variables: Optional[Sequence[int]] = None,
) -> Character:
    """The one-row characters `h_k = g_(k)`, `e_k = g_(1^k)` and, in type A,
    `g_k = s_((-1, ..., -1, -k-1))`, all zero for `k < 0`.
    """
    return _one_row(kind, k, F, n, family.lower(), None if variables is None else tuple(variables))


@lru_cache(maxsize=4096)
def _one_row(kind: str, k: int, F: AdmissibleSequence, n: int, family: str, variables) -> Character:
    if k < 0:
        return ZERO

    if kind == "h":
        return character(family, F, (k,) if k else (), n, variables=variables)

    if kind == "e":
        if k > n:
            return ZERO

        return character(family, F, (1,) * k, n, variables=variables)

    if kind == "g":
        if family != "a":
            raise ValueError("g_k is only defined in type A")

        if not isinstance(F, FactorialSequence):
            raise NegativePartsUnsupported("g_k needs a factorial sequence")

        if n == 0:
            return ZERO

        return schur(F, (-1,) * (n - 1) + (-k - 1,), n, variables=variables)

    raise ValueError(f"Unknown one-row kind {kind!r}, expected h, e or g")


# #### `complete`

# The factorial complete symmetric polynomial `h_k[z_1, ..., z_N|c]` of arbitrary
# arguments (for instance `x, x̄` or `x, x̄, 1`), by the one-row tableau recursion
# `h_k[z_1..z_N|c] = sum_j h_j[z_1..z_(N-1)|c] * [z_N|τ^(N-1+j) c]^(k-j)`.


def complete(k: int, values: Sequence, c: CSpec) -> Poly:
    """
    ```python
    >>> from ninthvar.sequences import CSpec
    >>> str(complete(1, [ring.x(1), ring.x(2)], CSpec.symbolic()))
    'x1 + x2 - c0 - c1'

    ```
    """
    if k < 0:
        return ZERO

    if k == 0:
        return ONE

    if not values:
        return ZERO

    row = [factorial_power(values[0], c, j) for j in range(k + 1)]

    for count, value in enumerate(values[1:], 2):
        row = [
            sum(
                (row[i] * factorial_power(value, tau_shift(c, count - 1 + i), j - i) for i in range(j + 1)),
                ZERO,
            )
            for j in range(k + 1)
        ]

    return row[k]


# ## Gelfand-Tsetlin patterns

# The combinatorial formula multiplies, for every pattern entry, the factorial
# power `[x_i|τ^(i - j + G_(i-1,j)) c]^(G_(i,j) - G_(i-1,j))` with the boundary
# `G_(i-1,i) = 0`. With the `literal` convention the shift is one larger.

GT_CONVENTIONS = ("content", "literal")


def gt_character(
    lam: Sequence[int],
    n: int,
    c: CSpec,
    *,
    convention: str = "content",
    variables: Optional[Sequence[int]] = None,
) -> Character:
    """
    ```python
    >>> from ninthvar.sequences import CSpec
    >>> str(gt_character([1, 0], 2, CSpec.symbolic()))
    'x1 + x2 - c0 - c1'

    ```
    """
    if convention not in GT_CONVENTIONS:
        raise ValueError(f"Unknown convention {convention!r}, expected one of {GT_CONVENTIONS}")

    parts = _composition(lam, n)
    variables = _variables(n, variables)
    extra = 1 if convention == "literal" else 0
    total = Quotient(ZERO)

    for pattern in gt_patterns(parts):
        term = Quotient(ONE)

        for i in range(1, n + 1):
            for j in range(1, i + 1):
                previous = pattern(i - 1, j) if j < i else 0
                exponent = pattern(i, j) - previous

                if exponent:
                    shift = tau_shift(c, i - j + previous + extra)
                    term = term * factorial_power_quotient(variables[i - 1], shift, exponent)

        total = total + term

    if not total.den:
        return total.num

    return total
