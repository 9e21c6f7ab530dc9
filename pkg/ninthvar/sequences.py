# # Polynomial sequences

"""This module defines the sequences of polynomials that parametrize
every character in `ninthvar`: the parameter sequence `c` (`CSpec`),
admissible sequences `F = (f_n)` with their extension to negative indices,
and the dual and double dual sequences.

A factorial sequence is built from a parameter sequence:

```python
>>> from ninthvar import ring
>>> F = factorial_sequence(CSpec.symbolic())
>>> str(F.evaluate(2, ring.x(1)))
'x1^2 - x1*c0 - x1*c1 + c0*c1'

```
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import ring
from .errors import (
    AlgebraError,
    CapTooSmall,
    F0NotOne,
    NegativePartWrongOrder,
    NonInvertibleLeadingCoefficient,
    NotMonic,
    SequenceTooShort,
    WrongDegree,
)
from .ring import ONE, ZERO, Family, Poly, Quotient, Series, as_poly

# ## The parameter sequence

# A `CSpec` describes a doubly infinite sequence `(c_m)` without materializing it.
# Shifts and reversals only change the affine map `m -> sign * m + offset`
# from the requested index to the underlying one, so they compose freely.

KINDS = ("symbolic", "zeros", "explicit")


@dataclass(frozen=True)
class CSpec:
    kind: str = "symbolic"
    values: Tuple[Tuple[int, Fraction], ...] = ()
    offset: int = 0
    sign: int = 1
    negative_cut: bool = False
    zero_c0: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"Unknown parameter kind {self.kind!r}, expected one of {KINDS}")

        if self.sign not in (1, -1):
            raise ValueError(f"Sign must be 1 or -1, got {self.sign}")

    @classmethod
    def symbolic(cls, negative_cut: bool = False, zero_c0: bool = False) -> CSpec:
        return cls("symbolic", negative_cut=negative_cut, zero_c0=zero_c0)

    @classmethod
    def zeros(cls) -> CSpec:
        return cls("zeros")

    @classmethod
    def explicit(cls, values: Mapping[int, Union[int, str, Fraction]], **flags) -> CSpec:
        clean = tuple(sorted((int(m), Fraction(value)) for m, value in values.items()))
        return cls("explicit", clean, **flags)

    def base_index(self, m: int) -> int:
        return self.sign * m + self.offset

    # #### `CSpec.lookup`

    # Returns `c_m` as a polynomial: an indeterminate in symbolic mode,
    # a rational constant otherwise.

    def lookup(self, m: int) -> Poly:
        base = self.base_index(m)

        if self.negative_cut and base < 0:
            return ZERO

        if self.zero_c0 and base == 0:
            return ZERO

        if self.kind == "symbolic":
            return ring.c(base)

        if self.kind == "zeros":
            return ZERO

        return Poly.constant(dict(self.values).get(base, 0))

    __getitem__ = lookup

    def shifted(self, r: int) -> CSpec:
        return replace(self, offset=self.offset + self.sign * r)

    def reversed(self) -> CSpec:
        return replace(self, sign=-self.sign, offset=self.offset - self.sign)

    def cut(self) -> CSpec:
        return replace(self, negative_cut=True)

    def to_json(self) -> dict:
        data = {"kind": self.kind}

        if self.kind == "explicit":
            data["values"] = {str(m): str(value) for m, value in self.values}

        if self.negative_cut:
            data["negative_cut"] = True

        if self.zero_c0:
            data["zero_c0"] = True

        if self.offset or self.sign != 1:
            data["offset"] = self.offset
            data["sign"] = self.sign

        return data


def tau_shift(c: CSpec, r: int) -> CSpec:
    """The shifted sequence `(τ^r c)_m = c_(m + r)`.

    ```python
    >>> str(tau_shift(CSpec.symbolic(), 1)[0])
    'c1'

    ```
    """
    return c.shifted(r)


def reverse_c(c: CSpec) -> CSpec:
    """The reversed sequence `c̃_m = c_(-m-1)`.

    ```python
    >>> str(reverse_c(CSpec.symbolic())[0])
    'c-1'

    ```
    """
    return c.reversed()


def load_c_spec(data: Optional[Mapping]) -> CSpec:
    if data is None:
        return CSpec.symbolic()

    kind = data.get("kind", "symbolic")
    flags = dict(
        negative_cut=bool(data.get("negative_cut", False)),
        zero_c0=bool(data.get("zero_c0", False)),
    )

    if kind == "explicit":
        spec = CSpec.explicit({int(m): value for m, value in data.get("values", {}).items()}, **flags)
    elif kind == "zeros":
        spec = CSpec.zeros()
    else:
        spec = CSpec(kind, **flags)

    return replace(spec, offset=int(data.get("offset", 0)), sign=int(data.get("sign", 1)))


# ## Helpers


def _expand_roots(roots: Sequence[Poly]) -> List[Poly]:
    """Coefficients, from the constant term up, of `prod(z - root for root in roots)`."""
    coeffs = [ONE]

    for root in roots:
        shifted = [ZERO] + coeffs
        coeffs = [shifted[j] - (root * coeffs[j] if j < len(coeffs) else ZERO) for j in range(len(shifted))]

    return coeffs


def _complete_in(roots: Sequence[Poly], degree: int) -> List[Poly]:
    """Coefficients up to `degree` of `1 / prod(1 - root * w for root in roots)`."""
    coeffs = [ONE] + [ZERO] * degree

    for root in roots:
        for j in range(1, degree + 1):
            coeffs[j] = coeffs[j] + root * coeffs[j - 1]

    return coeffs


def _horner(coeffs: Sequence[Poly], value: Poly) -> Poly:
    result = ZERO

    for coeff in reversed(coeffs):
        result = result * value + coeff

    return result


def _coefficient(value) -> Poly:
    if isinstance(value, Poly):
        return value

    return Poly.constant(Fraction(value))


# ## Factorial powers


def factorial_power(value, c: CSpec, k: int) -> Poly:
    """The factorial power `[value|c]^k = (value - c_0) ... (value - c_(k-1))` for `k >= 0`."""
    if k < 0:
        raise ValueError(f"Negative factorial power {k} is not a polynomial, use factorial_power_quotient")

    value = as_poly(value)
    result = ONE

    for l in range(k):
        result = result * (value - c[l])

    return result


def factorial_power_quotient(i: int, c: CSpec, k: int) -> Quotient:
    """The factorial power `[x_i|c]^k` for any integer `k`.

    For negative `k` this is `1 / ((x_i - c_(-1)) ... (x_i - c_k))`.
    """
    if k >= 0:
        return Quotient(factorial_power(ring.x(i), c, k))

    return Quotient.reciprocal(i, [c[-l] for l in range(1, -k + 1)])


# ## Admissible sequences

# An admissible sequence is a family of monic polynomials `f_n` of degree `n`
# with `f_0 = 1`. Negative indices, when available, are series in `w = 1/x`
# where `f_(-n)` has order exactly `n`.


class AdmissibleSequence:
    kind: str = "custom"

    def coefficients(self, k: int) -> List[Poly]:
        """Coefficients of `f_k`, from the constant term up."""
        raise NotImplementedError()

    def evaluate(self, k: int, value) -> Poly:
        """`f_k(value)` for `k >= 0`."""
        return _horner(self.coefficients(k), as_poly(value))

    def negative_coefficients(self, k: int, order: int) -> List[Poly]:
        """Coefficients of `w^0, ..., w^order` in `f_(-k)`, with `w = 1/x`."""
        raise NotImplementedError()

    @property
    def has_negative_part(self) -> bool:
        return False

    def is_constant_term_free(self, upto: int = 8) -> bool:
        return all(not self.coefficients(k)[0] for k in range(1, upto + 1))

    def to_json(self) -> dict:
        raise NotImplementedError()


class FactorialSequence(AdmissibleSequence):
    kind = "factorial"

    def __init__(self, c: CSpec) -> None:
        self.c = c

    def coefficients(self, k: int) -> List[Poly]:
        return _expand_roots([self.c[l] for l in range(k)])

    def evaluate(self, k: int, value) -> Poly:
        return factorial_power(value, self.c, k)

    # `f_(-k) = 1 / ((x - c_(-1)) ... (x - c_(-k))) = w^k / prod(1 - c_(-l) w)`.
    def negative_coefficients(self, k: int, order: int) -> List[Poly]:
        if order < k:
            return [ZERO] * (order + 1)

        tail = _complete_in([self.c[-l] for l in range(1, k + 1)], order - k)
        return [ZERO] * k + tail

    @property
    def has_negative_part(self) -> bool:
        return True

    def is_constant_term_free(self, upto: int = 8) -> bool:
        return not self.c[0]

    def to_json(self) -> dict:
        return {"kind": self.kind, "c": self.c.to_json()}

    def __repr__(self) -> str:
        return f"FactorialSequence({self.c!r})"


class MonomialSequence(FactorialSequence):
    kind = "monomial"

    def __init__(self) -> None:
        super().__init__(CSpec.zeros())

    def coefficients(self, k: int) -> List[Poly]:
        return [ZERO] * k + [ONE]

    def evaluate(self, k: int, value) -> Poly:
        return as_poly(value) ** k

    def to_json(self) -> dict:
        return {"kind": self.kind}

    def __repr__(self) -> str:
        return "MonomialSequence()"


class CustomSequence(AdmissibleSequence):
    kind = "custom"

    def __init__(
        self,
        table: Mapping[int, Sequence[Poly]],
        negative: Optional[Mapping[int, Sequence[Poly]]] = None,
    ) -> None:
        self.table: Dict[int, List[Poly]] = {k: list(v) for k, v in table.items()}
        self.negative: Dict[int, List[Poly]] = {k: list(v) for k, v in (negative or {}).items()}

    def coefficients(self, k: int) -> List[Poly]:
        if k == 0:
            return [ONE]

        if k not in self.table:
            raise SequenceTooShort(f"The sequence has no polynomial f_{k}")

        return self.table[k]

    def negative_coefficients(self, k: int, order: int) -> List[Poly]:
        if k == 0:
            return [ONE] + [ZERO] * order

        if order < k:
            return [ZERO] * (order + 1)

        if k not in self.negative:
            raise SequenceTooShort(f"The sequence has no series f_{-k}")

        known = self.negative[k]

        if len(known) <= order:
            raise CapTooSmall(f"f_{-k} is only known up to w^{len(known) - 1}, requested w^{order}")

        return known[: order + 1]

    @property
    def has_negative_part(self) -> bool:
        return bool(self.negative)

    def is_constant_term_free(self, upto: Optional[int] = None) -> bool:
        return all(not coeffs[0] for k, coeffs in self.table.items() if k > 0)

    def to_json(self) -> dict:
        data = {
            "kind": self.kind,
            "coeffs": {str(k): [str(p) for p in coeffs] for k, coeffs in sorted(self.table.items())},
        }

        if self.negative:
            data["negative"] = {
                str(k): [str(p) for p in coeffs] for k, coeffs in sorted(self.negative.items())
            }

        return data


def factorial_sequence(c: Optional[CSpec] = None) -> FactorialSequence:
    return FactorialSequence(c if c is not None else CSpec.symbolic())


def monomial_sequence() -> MonomialSequence:
    return MonomialSequence()


# ### Validation

# A custom table maps `n` to the coefficients of `f_n` from the constant term up.
# Trailing zeros are ignored, so `[0, 1, 0]` is `x`.


def custom_sequence(coeff_table: Mapping, negative_table: Optional[Mapping] = None) -> CustomSequence:
    """Validates and builds an admissible sequence from coefficient tables.

    **Parameters**:

    - `coeff_table`: A mapping from `n >= 0` to the coefficients of `f_n`.
    - `negative_table`: An optional mapping from `n >= 1` to the coefficients of
      `w^0, w^1, ...` in the series `f_(-n)`.

    ```python
    >>> custom_sequence({0: [1], 1: [1, 1], 2: [0, 1, 1]}).evaluate(2, 3)
    Poly('12')
    >>> custom_sequence({1: [0, 2]})
    Traceback (most recent call last):
    ...
    ninthvar.errors.NotMonic: f_1 has leading coefficient 2

    ```
    """
    table: Dict[int, List[Poly]] = {}

    for k, raw in sorted((int(k), raw) for k, raw in coeff_table.items()):
        if k < 0:
            raise WrongDegree(f"Polynomial index {k} must be nonnegative, use the negative table")

        coeffs = [_coefficient(value) for value in raw]

        while coeffs and not coeffs[-1]:
            coeffs.pop()

        if k == 0:
            if coeffs != [ONE]:
                raise F0NotOne(f"f_0 must be 1, got coefficients {list(map(str, coeffs))}")

            continue

        if len(coeffs) - 1 != k:
            raise WrongDegree(f"f_{k} has degree {len(coeffs) - 1}")

        if coeffs[-1] != ONE:
            raise NotMonic(f"f_{k} has leading coefficient {coeffs[-1]}")

        table[k] = coeffs

    negative: Dict[int, List[Poly]] = {}

    for k, raw in sorted((int(k), raw) for k, raw in (negative_table or {}).items()):
        coeffs = [_coefficient(value) for value in raw]

        if k < 1 or len(coeffs) <= k or any(coeffs[:k]) or not coeffs[k]:
            raise NegativePartWrongOrder(f"f_{-k} must have order exactly {k} in 1/x")

        negative[k] = coeffs

    return CustomSequence(table, negative)


# ## Loading sequences

# A sequence specification is a JSON object with a `kind`
# (`factorial`, `monomial` or `custom`), an optional parameter sequence `c`,
# and the coefficient tables for custom sequences.


def load_sequence(data: Optional[Mapping]) -> AdmissibleSequence:
    if data is None:
        return factorial_sequence()

    kind = data.get("kind", "factorial")

    if kind == "factorial":
        return factorial_sequence(load_c_spec(data.get("c")))

    if kind == "monomial":
        return monomial_sequence()

    if kind == "custom":
        return custom_sequence(data.get("coeffs", {}), data.get("negative"))

    raise ValueError(f"Unknown sequence kind {kind!r}")


def load_sequence_file(path: Union[str, Path]) -> AdmissibleSequence:
    with open(path) as fp:
        return load_sequence(json.load(fp))


# ## Dual sequences

# The dual of `F` is the unique sequence `(f̂_n(u))` of power series with
# `sum f_n(x) f̂_n(u) = 1 / (1 - xu)`. In coefficients, if `f_n = sum F[n][j] x^j`,
# then the coefficient matrix of the dual is the transposed inverse of `F`.
# Everything is truncated at a cap `D`.


@dataclass(frozen=True)
class DualSequence:
    matrix: Tuple[Tuple[Poly, ...], ...]
    cap: int

    def polynomial(self, n: int, value) -> Poly:
        if n > self.cap:
            raise CapTooSmall(f"Dual entry {n} is beyond the cap {self.cap}")

        return _horner(self.matrix[n], as_poly(value))

    def entry(self, n: int, i: int = 1) -> Series:
        """`f̂_n(u_i)` as a truncated series."""
        return Series(self.polynomial(n, ring.u(i)), [Family.U], self.cap)

    def pairing(self, sequence: AdmissibleSequence) -> List[List[Poly]]:
        """The matrix of `<f_n, f̂_m>` where `<x^j, u^k> = δ_jk`."""
        rows = _coefficient_matrix(sequence, self.cap)
        return ring.matmul(rows, ring.transpose([list(row) for row in self.matrix]))


def _coefficient_matrix(sequence: AdmissibleSequence, cap: int) -> List[List[Poly]]:
    rows = []

    for n in range(cap + 1):
        coeffs = sequence.coefficients(n)
        rows.append(list(coeffs) + [ZERO] * (cap + 1 - len(coeffs)))

    return rows


def dual_sequence(sequence: AdmissibleSequence, cap: int) -> DualSequence:
    """The dual sequence of `sequence` by triangular inversion, up to `u^cap`.

    ```python
    >>> dual = dual_sequence(monomial_sequence(), 3)
    >>> str(dual.polynomial(2, ring.u(1)))
    'u1^2'

    ```
    """
    rows = _coefficient_matrix(sequence, cap)
    inverse = ring.triangular_inverse(rows, lower=True)
    dual = DualSequence(tuple(tuple(row) for row in ring.transpose(inverse)), cap)

    if dual.pairing(sequence) != ring.identity_matrix(cap + 1):
        raise AlgebraError("Dual sequence does not pair to the identity")

    return dual


def factorial_dual(c: CSpec, cap: int) -> DualSequence:
    """The closed form `f̂_k(u) = u^k / prod((1 - c_l u) for l in 0..k)` of the factorial dual."""
    matrix = []

    for k in range(cap + 1):
        tail = _complete_in([c[l] for l in range(k + 1)], cap - k)
        matrix.append(tuple([ZERO] * k + tail))

    return DualSequence(tuple(matrix), cap)


# ## Double dual sequences

# The double dual `(f̌_n(v))` satisfies `sum f_(-n)(x) f̌_n(v) = 1 / (1 - v/x)`.
# With `f_(-n) = sum A[n][j] w^j` the matrix `A` is upper triangular,
# and the coefficient matrix of the double dual is its transposed inverse.


@dataclass(frozen=True)
class DoubleDualSequence:
    matrix: Tuple[Tuple[Poly, ...], ...]
    cap: int

    def polynomial(self, n: int, value) -> Poly:
        if n > self.cap:
            raise CapTooSmall(f"Double dual entry {n} is beyond the cap {self.cap}")

        return _horner(self.matrix[n], as_poly(value))

    def reduced(self, n: int, value) -> Poly:
        """`f̌_n(v) / v` for `n >= 1`, which is a polynomial."""
        if n > self.cap:
            raise CapTooSmall(f"Double dual entry {n} is beyond the cap {self.cap}")

        return _horner(self.matrix[n][1:], as_poly(value))

    def pairing(self, sequence: AdmissibleSequence) -> List[List[Poly]]:
        rows = _negative_matrix(sequence, self.cap)
        return ring.matmul(rows, ring.transpose([list(row) for row in self.matrix]))


def _negative_matrix(sequence: AdmissibleSequence, cap: int) -> List[List[Poly]]:
    rows = [[ONE] + [ZERO] * cap]

    for n in range(1, cap + 1):
        rows.append(list(sequence.negative_coefficients(n, cap)))

    return rows


def double_dual_sequence(sequence: AdmissibleSequence, cap: int) -> DoubleDualSequence:
    if not sequence.has_negative_part:
        raise SequenceTooShort("The sequence has no negative part")

    rows = _negative_matrix(sequence, cap)

    for n in range(cap + 1):
        lead = rows[n][n]

        if not lead or not lead.is_constant():
            raise NonInvertibleLeadingCoefficient(
                f"f_{-n} has leading coefficient {lead}, which is not a nonzero rational"
            )

    inverse = ring.triangular_inverse(rows, lower=False)
    result = DoubleDualSequence(tuple(tuple(row) for row in ring.transpose(inverse)), cap)

    if result.pairing(sequence) != ring.identity_matrix(cap + 1):
        raise AlgebraError("Double dual sequence does not pair to the identity")

    return result


def factorial_double_dual(c: CSpec, cap: int) -> DoubleDualSequence:
    """The closed form `f̌_n(v) = v [v|c̃]^(n-1)` of the factorial double dual."""
    reversed_c = reverse_c(c)
    matrix = [tuple([ONE] + [ZERO] * cap)]

    for n in range(1, cap + 1):
        coeffs = [ZERO] + _expand_roots([reversed_c[l] for l in range(n - 1)])
        matrix.append(tuple(coeffs + [ZERO] * (cap + 1 - len(coeffs))))

    return DoubleDualSequence(tuple(matrix), cap)
