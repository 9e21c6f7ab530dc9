# # Exact polynomial arithmetic

"""This module defines the exact algebra everything else is built on:
sparse multivariate Laurent polynomials over the rationals (`Poly`),
truncated power series (`Series`), quotients by products of linear factors
(`Quotient`), and the matrix operations (determinants, triangular inverses)
that the character formulas need.

Polynomials are immutable, and every operation returns a new value in canonical form,
so two polynomials are equal if and only if their term maps are equal.

```python
>>> from ninthvar import ring
>>> p = (ring.x(1) + ring.x(2)) * (ring.x(1) - ring.x(2))
>>> str(p)
'x1^2 - x2^2'
>>> str(ring.exact_divide(p, ring.x(1) - ring.x(2)))
'x1 + x2'

```
"""

from __future__ import annotations

import heapq
import re
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .errors import (
    AlgebraError,
    NegativeSeriesExponent,
    NonInvertibleImage,
    NonSquare,
    NonUnitConstantTerm,
    NotDivisible,
)

# ## Variables

# Every variable belongs to a family. The order of the families
# is the order in which they are displayed, and it is also
# the first key in the canonical monomial order.


class Family(IntEnum):
    X = 0  # x_i, the character variables
    Y = 1  # y_i, square roots of x_i (used by the odd orthogonal characters)
    U = 2  # u_i, dual Schur variables
    V = 3  # v_j, double dual Schur variables
    T = 4  # t, generating function variable
    C = 5  # c_m, the parameter sequence
    H = 6  # h_{r,s}, the ninth variation indeterminates


# Only `X` and `Y` variables may carry negative exponents,
# and only `U`, `V` and `T` may act as series variables.

LAURENT_FAMILIES = frozenset({Family.X, Family.Y})
SERIES_FAMILIES = frozenset({Family.U, Family.V, Family.T})

_PREFIXES = {
    Family.X: "x",
    Family.Y: "y",
    Family.U: "u",
    Family.V: "v",
    Family.T: "t",
    Family.C: "c",
    Family.H: "h",
}

_INDEXED = re.compile(r"^([xyuv])(\d+)$")
_PARAMETER = re.compile(r"^c(-?\d+)$")
_NINTH = re.compile(r"^h:(-?\d+):(-?\d+)$")


class Var(NamedTuple):
    family: Family
    index: int = 0
    shift: int = 0

    @property
    def name(self) -> str:
        prefix = _PREFIXES[self.family]

        if self.family == Family.T:
            return prefix

        if self.family == Family.H:
            return f"{prefix}:{self.index}:{self.shift}"

        return f"{prefix}{self.index}"

    @classmethod
    def parse(cls, name: str) -> Var:
        """Parses a variable name such as `x1`, `t`, `c-3` or `h:2:-1`.

        ```python
        >>> Var.parse("c-3")
        Var(family=<Family.C: 5>, index=-3, shift=0)

        ```
        """
        if name == "t":
            return cls(Family.T)

        match = _INDEXED.match(name)

        if match:
            family = {"x": Family.X, "y": Family.Y, "u": Family.U, "v": Family.V}
            return _indexed(family[match.group(1)], int(match.group(2)))

        match = _PARAMETER.match(name)

        if match:
            return cls(Family.C, int(match.group(1)))

        match = _NINTH.match(name)

        if match:
            return _ninth(int(match.group(1)), int(match.group(2)))

        raise ValueError(f"Invalid variable name: {name}")


def _indexed(family: Family, index: int) -> Var:
    if index < 1:
        raise ValueError(f"Variable index must be positive, got {index}")

    return Var(family, index)


def _ninth(r: int, s: int) -> Var:
    if r < 1:
        raise ValueError(f"h_(r,s) requires r >= 1, got r={r}")

    return Var(Family.H, r, s)


# A monomial is a sorted tuple of `(variable, exponent)` pairs with nonzero exponents.

Monomial = Tuple[Tuple[Var, int], ...]
Coefficient = Union[int, Fraction]


def _normalize(value: Coefficient) -> Coefficient:
    # Integral coefficients are stored as `int`, which is much faster than `Fraction`.
    if type(value) is Fraction and value.denominator == 1:
        return value.numerator

    return value


def _canonical(monomial: Iterable[Tuple[Var, int]]) -> Monomial:
    exponents: Dict[Var, int] = {}

    for var, exp in monomial:
        exponents[var] = exponents.get(var, 0) + exp

    result = tuple(sorted((v, e) for v, e in exponents.items() if e))

    for var, exp in result:
        if exp < 0 and var.family not in LAURENT_FAMILIES:
            raise AlgebraError(f"Negative exponent for {var.name} is not allowed")

    return result


@lru_cache(maxsize=1 << 18)
def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b

    if not b:
        return a

    exponents = dict(a)

    for var, exp in b:
        total = exponents.get(var, 0) + exp

        if total:
            exponents[var] = total
        else:
            del exponents[var]

    return tuple(sorted(exponents.items()))


def _degree(monomial: Monomial, families: frozenset) -> int:
    return sum(exp for var, exp in monomial if var.family in families)


# ## The `Poly` class


class Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping] = None) -> None:
        """Creates a polynomial from a mapping of monomials to coefficients.

        **Parameters**:

        - `terms`: A mapping whose keys are iterables of `(Var, exponent)` pairs
                   and whose values are anything `Fraction` accepts.
        """
        clean: Dict[Monomial, Coefficient] = {}

        for monomial, coeff in (terms or {}).items():
            key = _canonical(monomial)
            clean[key] = clean.get(key, 0) + Fraction(coeff)

        self._terms: Dict[Monomial, Coefficient] = {
            m: _normalize(c) for m, c in clean.items() if c
        }
        self._hash = None

    @classmethod
    def _make(cls, terms: Dict[Monomial, Coefficient]) -> Poly:
        # Trusted constructor: `terms` is already canonical and has no zeros.
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value: Coefficient) -> Poly:
        value = _normalize(Fraction(value))
        return cls._make({(): value} if value else {})

    @classmethod
    def variable(cls, var: Var, exponent: int = 1) -> Poly:
        return cls._make({_canonical([(var, exponent)]): 1})

    # ### Arithmetic

    def __add__(self, other) -> Poly:
        other = _coerce(other)

        if other is NotImplemented:
            return NotImplemented

        if len(other._terms) > len(self._terms):
            self, other = other, self

        terms = dict(self._terms)

        for mono, coeff in other._terms.items():
            total = terms.get(mono, 0) + coeff

            if total:
                terms[mono] = _normalize(total)
            else:
                del terms[mono]

        return Poly._make(terms)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._make({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Poly:
        other = _coerce(other)

        if other is NotImplemented:
            return NotImplemented

        return self + (-other)

    def __rsub__(self, other) -> Poly:
        other = _coerce(other)

        if other is NotImplemented:
            return NotImplemented

        return other + (-self)

    def __mul__(self, other) -> Poly:
        other = _coerce(other)

        if other is NotImplemented:
            return NotImplemented

        if not self._terms or not other._terms:
            return ZERO

        if other.is_constant():
            return self.scaled(other._terms[()])

        if self.is_constant():
            return other.scaled(self._terms[()])

        terms: Dict[Monomial, Coefficient] = {}

        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = _mono_mul(ma, mb)
                terms[mono] = terms.get(mono, 0) + ca * cb

        return Poly._make({m: _normalize(c) for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            return self.inverse() ** (-exponent)

        result = ONE
        base = self

        while exponent:
            if exponent & 1:
                result = result * base

            exponent >>= 1

            if exponent:
                base = base * base

        return result

    def inverse(self) -> Poly:
        """Inverts a single-term polynomial with Laurent variables only."""
        if len(self._terms) != 1:
            raise NonInvertibleImage(f"{self} is not an invertible monomial")

        ((mono, coeff),) = self._terms.items()
        inverted = _canonical((var, -exp) for var, exp in mono)
        return Poly._make({inverted: _normalize(1 / Fraction(coeff))})

    def scaled(self, factor: Coefficient) -> Poly:
        if not factor:
            return ZERO

        if factor == 1:
            return self

        return Poly._make({m: _normalize(c * factor) for m, c in self._terms.items()})

    # ### Comparison

    def __eq__(self, other) -> bool:
        other = _coerce(other)

        if other is NotImplemented:
            return NotImplemented

        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))

        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ### Inspection

    def items(self) -> Iterable[Tuple[Monomial, Coefficient]]:
        return self._terms.items()

    def terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Returns the terms in canonical order: graded by total degree (highest first),
        then lexicographic over the variables in family order.
        """
        variables = sorted({var for mono in self._terms for var, _ in mono})

        def key(mono: Monomial):
            exponents = dict(mono)
            return (
                -sum(exponents.values()),
                tuple(-exponents.get(var, 0) for var in variables),
            )

        return [(m, Fraction(self._terms[m])) for m in sorted(self._terms, key=key)]

    def coefficient(self, monomial: Iterable[Tuple[Var, int]] = ()) -> Fraction:
        return Fraction(self._terms.get(_canonical(monomial), 0))

    def constant_term(self) -> Fraction:
        return Fraction(self._terms.get((), 0))

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def variables(self) -> frozenset:
        return frozenset(var for mono in self._terms for var, _ in mono)

    def degree(self, families: Iterable[Family] = tuple(Family)) -> int:
        """Highest total degree in the given families (`-inf` for the zero polynomial)."""
        families = frozenset(families)
        return max((_degree(m, families) for m in self._terms), default=float("-inf"))

    def low_degree(self, families: Iterable[Family] = tuple(Family)) -> int:
        families = frozenset(families)
        return min((_degree(m, families) for m in self._terms), default=float("inf"))

    # ### Transformations

    def truncate(self, families: Iterable[Family], cap: int) -> Poly:
        """Discards every term whose total degree in `families` exceeds `cap`."""
        families = frozenset(families)
        return Poly._make(
            {m: c for m, c in self._terms.items() if _degree(m, families) <= cap}
        )

    def floor(self, families: Iterable[Family], low: int) -> Poly:
        """Discards every term whose total degree in `families` is below `low`."""
        families = frozenset(families)
        return Poly._make(
            {m: c for m, c in self._terms.items() if _degree(m, families) >= low}
        )

    def homogeneous(self, families: Iterable[Family], degree: int) -> Poly:
        families = frozenset(families)
        return Poly._make(
            {m: c for m, c in self._terms.items() if _degree(m, families) == degree}
        )

    def map_monomials(self, function: Callable[[Monomial], Monomial]) -> Poly:
        """Applies `function` to every monomial, adding up coefficients that collide."""
        terms: Dict[Monomial, Coefficient] = {}

        for mono, coeff in self._terms.items():
            image = _canonical(function(mono))
            terms[image] = terms.get(image, 0) + coeff

        return Poly._make({m: _normalize(c) for m, c in terms.items() if c})

    # ### Rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"

        parts = []

        for mono, coeff in self.terms():
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            factors = [
                var.name if exp == 1 else f"{var.name}^{exp}" for var, exp in mono
            ]

            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))

            parts.append((sign, "*".join(factors)))

        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first

        for sign, body in parts[1:]:
            text += f" {sign} {body}"

        return text

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def to_json(self) -> List[dict]:
        """Encodes the polynomial as a list of `{"coeff", "monomial"}` objects in canonical order."""
        return [
            {"coeff": str(coeff), "monomial": {var.name: exp for var, exp in mono}}
            for mono, coeff in self.terms()
        ]

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> Poly:
        return cls(
            {
                tuple((Var.parse(name), int(exp)) for name, exp in term["monomial"].items()): Fraction(
                    term["coeff"]
                )
                for term in data
            }
        )


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value

    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)

    return NotImplemented


def as_poly(value) -> Poly:
    poly = _coerce(value)

    if poly is NotImplemented:
        raise TypeError(f"Cannot interpret {value!r} as a polynomial")

    return poly


ZERO = Poly._make({})
ONE = Poly._make({(): 1})

# ## Variable constructors

# These are the building blocks for writing polynomials by hand, e.g. `x(1) - c(0)`.


def x(i: int, exponent: int = 1) -> Poly:
    return Poly.variable(_indexed(Family.X, i), exponent)


def xbar(i: int) -> Poly:
    return Poly.variable(_indexed(Family.X, i), -1)


def y(i: int, exponent: int = 1) -> Poly:
    return Poly.variable(_indexed(Family.Y, i), exponent)


def u(i: int) -> Poly:
    return Poly.variable(_indexed(Family.U, i))


def v(i: int) -> Poly:
    return Poly.variable(_indexed(Family.V, i))


def t() -> Poly:
    return Poly.variable(Var(Family.T))


def c(m: int) -> Poly:
    return Poly.variable(Var(Family.C, m))


def h(r: int, s: int) -> Poly:
    """The ninth variation indeterminate `h_(r,s)`, with `h_(0,s) = 1` and `h_(r,s) = 0` for `r < 0`."""
    if r == 0:
        return ONE

    if r < 0:
        return ZERO

    return Poly.variable(_ninth(r, s))


# ## Substitution


def substitute(poly: Poly, bindings: Mapping[Var, Poly]) -> Poly:
    """Simultaneously replaces variables by polynomials.

    A variable that occurs with a negative exponent must be bound to
    a single invertible monomial.

    ```python
    >>> str(substitute(x(1) + x(2) - c(0) - c(1), {Var(Family.C, 0): ZERO, Var(Family.C, 1): ZERO}))
    'x1 + x2'

    ```
    """
    bindings = {var: as_poly(value) for var, value in bindings.items()}
    powers: Dict[Tuple[Var, int], Poly] = {}

    def power(var: Var, exp: int) -> Poly:
        key = (var, exp)

        if key not in powers:
            image = bindings[var]

            if exp < 0 and len(image) != 1:
                raise NonInvertibleImage(
                    f"{var.name} occurs with exponent {exp} but its image {image} is not a monomial"
                )

            powers[key] = image**exp

        return powers[key]

    # Terms are grouped by their bound part, so that every product of powers
    # is expanded once and multiplied by the sum of the remaining cofactors.
    groups: Dict[Monomial, Dict[Monomial, Coefficient]] = {}

    for mono, coeff in poly.items():
        kept = tuple((var, exp) for var, exp in mono if var not in bindings)
        bound = tuple((var, exp) for var, exp in mono if var in bindings)
        groups.setdefault(bound, {})[kept] = coeff

    result: Dict[Monomial, Coefficient] = {}

    for bound, cofactor in groups.items():
        term = Poly._make(cofactor)

        for var, exp in bound:
            term = term * power(var, exp)

        for mono, coeff in term.items():
            result[mono] = result.get(mono, 0) + coeff

    return Poly._make({m: _normalize(c) for m, c in result.items() if c})


# ## Exact division

# Division works on dense exponent vectors over the variables involved,
# ordered lexicographically. This is a monomial order compatible with multiplication
# even for Laurent monomials, so the leading term of a product is the product
# of the leading terms. Exact quotients are recovered term by term, from the top.
# Every quotient exponent must also lie in the box spanned by the exponents of
# numerator and denominator, which bounds the number of steps.


def exact_divide(num, den) -> Poly:
    """Returns `q` such that `q * den == num`, or raises `NotDivisible`.

    ```python
    >>> str(exact_divide(x(1)**2 - x(2)**2, x(1) - x(2)))
    'x1 + x2'

    ```
    """
    num, den = as_poly(num), as_poly(den)

    if not den:
        raise ZeroDivisionError("Division by the zero polynomial")

    if not num:
        return ZERO

    if len(den) == 1:
        return _divide_by_term(num, den)

    variables = sorted(num.variables() | den.variables())
    position = {var: k for k, var in enumerate(variables)}
    width = len(variables)

    def vector(mono: Monomial) -> Tuple[int, ...]:
        vec = [0] * width

        for var, exp in mono:
            vec[position[var]] = exp

        return tuple(vec)

    remainder = {vector(m): c for m, c in num.items()}
    divisor = [(vector(m), c) for m, c in den.items()]

    low = [min(vec[k] for vec in remainder) - min(vec[k] for vec, _ in divisor) for k in range(width)]
    high = [max(vec[k] for vec in remainder) - max(vec[k] for vec, _ in divisor) for k in range(width)]

    lead_vec, lead_coeff = max(divisor)
    heap = [tuple(-e for e in vec) for vec in remainder]
    heapq.heapify(heap)
    quotient: Dict[Tuple[int, ...], Coefficient] = {}

    while remainder:
        top = tuple(-e for e in heapq.heappop(heap))
        coeff = remainder.get(top)

        if coeff is None:
            continue

        qvec = tuple(a - b for a, b in zip(top, lead_vec))

        if any(e < lo or e > hi for e, lo, hi in zip(qvec, low, high)):
            raise NotDivisible(f"{num} is not divisible by {den}")

        qcoeff = _normalize(Fraction(coeff) / lead_coeff)
        quotient[qvec] = qcoeff

        for dvec, dcoeff in divisor:
            target = tuple(a + b for a, b in zip(qvec, dvec))
            value = remainder.get(target, 0) - qcoeff * dcoeff

            if value:
                if target not in remainder:
                    heapq.heappush(heap, tuple(-e for e in target))

                remainder[target] = _normalize(value)
            else:
                remainder.pop(target, None)

    terms = {}

    for vec, coeff in quotient.items():
        mono = tuple((variables[k], e) for k, e in enumerate(vec) if e)

        for var, exp in mono:
            if exp < 0 and var.family not in LAURENT_FAMILIES:
                raise NotDivisible(f"{num} is not divisible by {den}")

        terms[mono] = coeff

    return Poly._make(terms)


# A single-term divisor is divided out of every term by subtracting exponents.
# Only the Laurent families may end up with negative exponents.


def _divide_by_term(num: Poly, den: Poly) -> Poly:
    ((divisor, lead),) = den.items()
    terms = {}

    for mono, coeff in num.items():
        exponents = dict(mono)

        for var, exp in divisor:
            exponents[var] = exponents.get(var, 0) - exp

            if exponents[var] < 0 and var.family not in LAURENT_FAMILIES:
                raise NotDivisible(f"{num} is not divisible by {den}")

        quotient = tuple(sorted((var, exp) for var, exp in exponents.items() if exp))
        terms[quotient] = _normalize(Fraction(coeff) / lead)

    return Poly._make(terms)


def vandermonde(values: Sequence) -> Poly:
    """The product of `values[i] - values[j]` over `i < j`."""
    result = ONE

    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            result = result * (as_poly(values[i]) - as_poly(values[j]))

    return result


def divide_vandermonde(num: Poly, values: Sequence) -> Poly:
    """Divides by the Vandermonde of `values`, one linear factor at a time."""
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            num = exact_divide(num, as_poly(values[i]) - as_poly(values[j]))

    return num


# #### `alternant_quotient`

# When row `i` of a matrix only depends on `values[i]`, its determinant divided by
# the Vandermonde is computed with divided differences: subtracting row `k` from
# every later row `i` and dividing by `values[i] - values[k]` is exact entry by entry.
# After `n - 1` rounds row `i` holds the divided differences of order `i`, and the
# determinant of that matrix is the quotient up to the sign `(-1)^(n(n-1)/2)`.
# The entries shrink instead of the determinant growing.


def alternant_quotient(rows: Sequence[Sequence], values: Sequence) -> Poly:
    """Returns `det(rows) / vandermonde(values)`, for rows that are functions of `values`.

    ```python
    >>> rows = [[x(i) ** 2, x(i), 1] for i in (1, 2, 3)]
    >>> alternant_quotient(rows, [x(1), x(2), x(3)])
    Poly('1')

    ```
    """
    size = _check_square(rows)
    rows = [[as_poly(e) for e in row] for row in rows]
    values = [as_poly(v) for v in values]

    if len(values) != size:
        raise NonSquare(f"Expected {size} values, got {len(values)}")

    for k in range(size - 1):
        for i in range(k + 1, size):
            gap = values[i] - values[k]
            rows[i] = [exact_divide(a - b, gap) for a, b in zip(rows[i], rows[k])]

    result = determinant(rows)
    return -result if (size * (size - 1) // 2) % 2 else result


# ## Truncated series


class Series:
    __slots__ = ("body", "families", "cap")

    def __init__(self, body, families: Iterable[Family], cap: int) -> None:
        """A polynomial in which every term of total degree above `cap`
        in the series `families` is considered zero.
        """
        families = frozenset(Family(f) for f in families)

        if not families <= SERIES_FAMILIES:
            raise ValueError(f"Series variables must be among U, V, T, got {sorted(families)}")

        if cap < 0:
            raise ValueError(f"Series cap must be nonnegative, got {cap}")

        body = as_poly(body)

        for mono, _ in body.items():
            for var, exp in mono:
                if exp < 0 and var.family in families:
                    raise NegativeSeriesExponent(f"{var.name} has negative exponent in {body}")

        self.body: Poly = body.truncate(families, cap)
        self.families: frozenset = families
        self.cap: int = cap

    def _lift(self, other) -> Series:
        if isinstance(other, Series):
            if other.families != self.families or other.cap != self.cap:
                raise ValueError("Cannot combine series with different variables or caps")

            return other

        other = _coerce(other)

        if other is NotImplemented:
            return NotImplemented

        return Series(other, self.families, self.cap)

    def _with(self, body: Poly) -> Series:
        series = Series.__new__(Series)
        series.body = body
        series.families = self.families
        series.cap = self.cap
        return series

    def __add__(self, other) -> Series:
        other = self._lift(other)

        if other is NotImplemented:
            return NotImplemented

        return self._with(self.body + other.body)

    __radd__ = __add__

    def __neg__(self) -> Series:
        return self._with(-self.body)

    def __sub__(self, other) -> Series:
        other = self._lift(other)

        if other is NotImplemented:
            return NotImplemented

        return self._with(self.body - other.body)

    def __rsub__(self, other) -> Series:
        other = self._lift(other)

        if other is NotImplemented:
            return NotImplemented

        return self._with(other.body - self.body)

    def __mul__(self, other) -> Series:
        other = self._lift(other)

        if other is NotImplemented:
            return NotImplemented

        return self._with(_truncated_product(self.body, other.body, self.families, self.cap))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._lift(other)

        if other is NotImplemented:
            return NotImplemented

        return self.body == other.body

    def __hash__(self) -> int:
        return hash((self.body, self.families, self.cap))

    def __bool__(self) -> bool:
        return bool(self.body)

    def __repr__(self) -> str:
        return f"Series({str(self.body)!r}, cap={self.cap})"

    def order(self) -> int:
        """Lowest total degree in the series variables."""
        return self.body.low_degree(self.families)

    def constant_term(self) -> Poly:
        return self.body.homogeneous(self.families, 0)


def _truncated_product(a: Poly, b: Poly, families: frozenset, cap: int) -> Poly:
    left = [(m, c, _degree(m, families)) for m, c in a.items()]
    right = sorted(((m, c, _degree(m, families)) for m, c in b.items()), key=lambda t: t[2])
    terms: Dict[Monomial, Coefficient] = {}

    for ma, ca, da in left:
        budget = cap - da

        for mb, cb, db in right:
            if db > budget:
                break

            mono = _mono_mul(ma, mb)
            terms[mono] = terms.get(mono, 0) + ca * cb

    return Poly._make({m: _normalize(c) for m, c in terms.items() if c})


def series_truncate(poly, families: Iterable[Family], cap: int) -> Series:
    """Truncates `poly` to a `Series` in `families`.

    ```python
    >>> series_truncate(x(1) + x(1) * u(1) + x(1) * u(1)**3, [Family.U], 2)
    Series('x1*u1 + x1', cap=2)

    ```
    """
    return Series(poly, families, cap)


def geometric_inverse(series: Series) -> Series:
    """Inverts a series whose constant term (in the series variables) is a nonzero rational."""
    constant = series.constant_term()

    if not constant or not constant.is_constant():
        raise NonUnitConstantTerm(f"Constant term {constant} is not a nonzero rational")

    unit = 1 / Fraction(constant.constant_term())
    step = -((series - constant) * unit)
    result = series._with(ONE)

    # Horner evaluation of 1 + q + q^2 + ... up to the cap.
    for _ in range(series.cap):
        result = step * result + 1

    return result * unit


# ## Quotients by linear factors

# Characters indexed by signatures with negative parts are rational functions,
# whose denominators are products of factors `x_i - a` with `a` free of `x`.
# A `Quotient` keeps the numerator as a polynomial and the denominator as a
# multiset of such factors, so adding quotients only needs the least common
# multiple of two multisets, and equality is decided by cross-multiplication.

FactorKey = Tuple[int, Poly]


class Quotient:
    __slots__ = ("num", "den")

    def __init__(self, num, den: Optional[Mapping[FactorKey, int]] = None) -> None:
        self.num: Poly = as_poly(num)
        self.den: Dict[FactorKey, int] = {
            (i, as_poly(a)): m for (i, a), m in (den or {}).items() if m > 0
        }

        for i, root in self.den:
            if Family.X in {var.family for var in root.variables()}:
                raise ValueError(f"Factor root {root} must not involve x variables")

    @classmethod
    def lift(cls, value) -> Quotient:
        if isinstance(value, Quotient):
            return value

        poly = _coerce(value)

        if poly is NotImplemented:
            return NotImplemented

        return cls(poly)

    @classmethod
    def reciprocal(cls, i: int, roots: Iterable) -> Quotient:
        """The quotient `1 / prod(x_i - a for a in roots)`."""
        den: Dict[FactorKey, int] = {}

        for root in roots:
            key = (i, as_poly(root))
            den[key] = den.get(key, 0) + 1

        return cls(ONE, den)

    @staticmethod
    def factor(key: FactorKey) -> Poly:
        i, root = key
        return x(i) - root

    def denominator(self) -> Poly:
        result = ONE

        for key, mult in self.den.items():
            result = result * self.factor(key) ** mult

        return result

    def _raised(self, target: Mapping[FactorKey, int]) -> Poly:
        result = self.num

        for key, mult in target.items():
            missing = mult - self.den.get(key, 0)

            if missing:
                result = result * self.factor(key) ** missing

        return result

    def __add__(self, other) -> Quotient:
        other = Quotient.lift(other)

        if other is NotImplemented:
            return NotImplemented

        target = dict(self.den)

        for key, mult in other.den.items():
            target[key] = max(target.get(key, 0), mult)

        return Quotient(self._raised(target) + other._raised(target), target)

    __radd__ = __add__

    def __neg__(self) -> Quotient:
        return Quotient(-self.num, self.den)

    def __sub__(self, other) -> Quotient:
        other = Quotient.lift(other)

        if other is NotImplemented:
            return NotImplemented

        return self + (-other)

    def __rsub__(self, other) -> Quotient:
        other = Quotient.lift(other)

        if other is NotImplemented:
            return NotImplemented

        return other + (-self)

    def __mul__(self, other) -> Quotient:
        other = Quotient.lift(other)

        if other is NotImplemented:
            return NotImplemented

        den = dict(self.den)

        for key, mult in other.den.items():
            den[key] = den.get(key, 0) + mult

        return Quotient(self.num * other.num, den)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = Quotient.lift(other)

        if other is NotImplemented:
            return NotImplemented

        return not (self - other).num

    def __hash__(self) -> int:
        # Unreduced quotients may be equal with different representations.
        raise TypeError("Quotient is not hashable")

    def __bool__(self) -> bool:
        return bool(self.num)

    def __str__(self) -> str:
        return f"({self.num}) / ({self.denominator()})"

    def __repr__(self) -> str:
        return f"Quotient({str(self.num)!r}, {str(self.denominator())!r})"

    def to_poly(self) -> Poly:
        return exact_divide(self.num, self.denominator())

    def expand(self, floor: int) -> Poly:
        """Expands as a Laurent series in the inverse `x` variables, keeping
        every term of total `x`-degree at least `floor` (all of them exact).
        """
        if not self.num:
            return ZERO

        xs = [Family.X]
        count = sum(self.den.values())

        if not count:
            return self.num.floor(xs, floor)

        budget = floor - self.num.degree(xs)
        series = ONE

        # 1/(x_i - a) = sum_r a^r x_i^(-1-r); each of the `count` factors has degree <= -1.
        for (i, root), mult in sorted(self.den.items(), key=lambda item: (item[0][0], str(item[0][1]))):
            terms = max(0, -budget - count + 1)
            expansion = sum((root**r * x(i, -1 - r) for r in range(terms)), ZERO)

            for _ in range(mult):
                series = (series * expansion).floor(xs, budget)

        return (self.num * series).floor(xs, floor)

    def to_json(self) -> dict:
        factors = sorted(self.den.items(), key=lambda item: (item[0][0], str(item[0][1])))
        return {
            "numerator": self.num.to_json(),
            "denominator": [
                {"variable": Var(Family.X, i).name, "root": root.to_json(), "power": mult}
                for (i, root), mult in factors
            ],
        }


# ## Matrices

# Matrices are plain lists of rows. The entries may be any ring element
# (`Poly`, `Series`, `Quotient`); only Bareiss elimination requires `Poly`.

Matrix = List[List]

# Cofactor expansion keeps one minor per subset of columns.
LAPLACE_LIMIT = 8


def _check_square(matrix: Sequence[Sequence]) -> int:
    size = len(matrix)

    for row in matrix:
        if len(row) != size:
            raise NonSquare(f"Expected a {size}x{size} matrix, got a row of length {len(row)}")

    return size


def determinant(matrix: Sequence[Sequence], one=ONE):
    """The exact determinant: memoised cofactor expansion up to size `LAPLACE_LIMIT`
    (or for non-polynomial entries), fraction-free Bareiss elimination above.

    ```python
    >>> str(determinant([[x(1), 1], [x(2), 1]]))
    'x1 - x2'
    >>> determinant([])
    Poly('1')

    ```
    """
    size = _check_square(matrix)

    if size == 0:
        return one

    rows = [
        [Poly.constant(e) if isinstance(e, (int, Fraction)) else e for e in row]
        for row in matrix
    ]

    if size > LAPLACE_LIMIT and all(isinstance(e, Poly) for row in rows for e in row):
        return _bareiss(rows)

    return _laplace(rows)


def _laplace(rows: Matrix):
    size = len(rows)
    memo: Dict[Tuple[int, ...], object] = {}

    # The minor on the last `len(columns)` rows and the given columns,
    # expanded along its first row.
    def minor(columns: Tuple[int, ...]):
        if columns in memo:
            return memo[columns]

        row = rows[size - len(columns)]

        if len(columns) == 1:
            result = row[columns[0]]
        else:
            result = None

            for k, col in enumerate(columns):
                entry = row[col]

                if not entry:
                    continue

                term = entry * minor(columns[:k] + columns[k + 1 :])

                if k % 2:
                    term = -term

                result = term if result is None else result + term

            if result is None:
                result = row[columns[0]] * 0

        memo[columns] = result
        return result

    return minor(tuple(range(size)))


def _bareiss(rows: List[List[Poly]]) -> Poly:
    size = len(rows)
    sign = 1
    previous = ONE

    for k in range(size - 1):
        if not rows[k][k]:
            swap = next((i for i in range(k + 1, size) if rows[i][k]), None)

            if swap is None:
                return ZERO

            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign

        pivot = rows[k][k]

        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = exact_divide(rows[i][j] * pivot - rows[i][k] * rows[k][j], previous)

        previous = pivot

    return rows[size - 1][size - 1] * sign


def minor(matrix: Sequence[Sequence], rows: Sequence[int], columns: Sequence[int]):
    """Determinant of the submatrix on the given rows and columns (in the given order)."""
    return determinant([[matrix[i][j] for j in columns] for i in rows])


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    inner = len(b)
    width = len(b[0]) if b else 0
    result = []

    for row in a:
        out = []

        for j in range(width):
            total = ZERO

            for k in range(inner):
                if row[k] and b[k][j]:
                    total = total + row[k] * b[k][j]

            out.append(total)

        result.append(out)

    return result


def identity_matrix(size: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]


def transpose(matrix: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*matrix)] if matrix else []


def triangular_inverse(matrix: Sequence[Sequence], lower: bool = True) -> Matrix:
    """Inverts a triangular polynomial matrix whose diagonal entries are nonzero rationals."""
    size = _check_square(matrix)
    rows = [[as_poly(e) for e in row] for row in matrix]

    if not lower:
        return transpose(triangular_inverse(transpose(rows), lower=True))

    diagonal = []

    for i in range(size):
        entry = rows[i][i]

        if not entry or not entry.is_constant():
            raise AlgebraError(f"Diagonal entry {entry} is not a nonzero rational")

        diagonal.append(1 / Fraction(entry.constant_term()))

    inverse = [[ZERO] * size for _ in range(size)]

    # Forward substitution, one column of the inverse at a time.
    for j in range(size):
        inverse[j][j] = Poly.constant(diagonal[j])

        for i in range(j + 1, size):
            total = ZERO

            for k in range(j, i):
                if rows[i][k] and inverse[k][j]:
                    total = total + rows[i][k] * inverse[k][j]

            inverse[i][j] = (-total).scaled(diagonal[i])

    return inverse
