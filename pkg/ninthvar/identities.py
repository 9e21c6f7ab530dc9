# # Identity checks

"""This module turns each identity about ninth variation characters into a
check that computes both sides exactly and compares them.

Every check returns a `CheckReport`. The verdict is `holds` exactly when the
difference of both sides is the zero polynomial (at the stated truncation),
and a failing report carries a witness of the difference.

```python
>>> from ninthvar.sequences import factorial_sequence
>>> check_cauchy(factorial_sequence(), 1, 2).holds
True

```

Infinite sums over partitions are truncated by degree. The dual Schur function
`ŝ_λ` has lowest total degree `|λ|`, so the terms with `|λ| <= D` are exactly the
ones that contribute below the cap `D`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

from . import ring
from .characters import (
    character,
    complete,
    double_dual_schur,
    dual_schur,
    from_w,
    gt_character,
    one_row,
    schur,
    w_character,
)
from .errors import (
    HypothesisViolated,
    NotConstantTermFree,
    SplitMismatch,
)
from .partitions import Partition, Signature, partitions, partitions_in_box
from .ring import ONE, ZERO, Family, Poly, Quotient, Series, geometric_inverse
from .sequences import (
    AdmissibleSequence,
    CSpec,
    FactorialSequence,
    double_dual_sequence,
    dual_sequence,
    factorial_double_dual,
    factorial_dual,
    factorial_power_quotient,
    factorial_sequence,
    reverse_c,
    tau_shift,
)

WITNESS_LIMIT = 200

# ## Reports


@dataclass
class CheckReport:
    identity_id: str
    parameters: Dict[str, Any]
    difference: Poly
    elapsed: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.difference

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def witness(self) -> Optional[dict]:
        """The difference itself, or its lowest term and size when it is too large."""
        if self.holds:
            return None

        if len(self.difference) <= WITNESS_LIMIT:
            return {"terms": len(self.difference), "difference": self.difference.to_json()}

        mono, coeff = self.difference.terms()[-1]
        lowest = Poly({mono: coeff})
        return {"terms": len(self.difference), "lowest": lowest.to_json()}

    def to_json(self, timing: bool = False) -> dict:
        data = {
            "identity": self.identity_id,
            "parameters": self.parameters,
            "verdict": self.verdict,
        }

        if self.notes:
            data["notes"] = list(self.notes)

        if not self.holds:
            data["witness"] = self.witness()

        if timing:
            data["elapsed_ms"] = round(self.elapsed, 3)

        return data

    def __str__(self) -> str:
        return f"{self.identity_id}: {self.verdict}"


Side = Union[Poly, Series, Quotient]


def _difference(lhs: Side, rhs: Side) -> Poly:
    if isinstance(lhs, Quotient) or isinstance(rhs, Quotient):
        return (Quotient.lift(lhs) - Quotient.lift(rhs)).num

    if isinstance(lhs, Series) or isinstance(rhs, Series):
        series = lhs if isinstance(lhs, Series) else rhs
        return (series._lift(lhs) - series._lift(rhs)).body

    return lhs - rhs


class Timer:
    def __init__(self) -> None:
        self.start = time.perf_counter()

    def report(self, identity_id: str, parameters: dict, lhs: Side, rhs: Side, notes=()) -> CheckReport:
        return CheckReport(
            identity_id,
            parameters,
            _difference(lhs, rhs),
            (time.perf_counter() - self.start) * 1000,
            list(notes),
        )


# ## Series helpers


def _series(poly, families, cap: int) -> Series:
    return Series(poly, families, cap)


def _inverse_linear(constant, variable, families, cap: int) -> Series:
    """The truncated expansion of `1 / (1 - constant * variable)`."""
    return geometric_inverse(Series(ONE - ring.as_poly(constant) * variable, families, cap))


def _dual_cap(n: int, cap: int) -> int:
    return cap + max(n * (n - 1) // 2, n - 1, 0)


# ## Cauchy and Littlewood identities


def check_cauchy(F: AdmissibleSequence, n: int, cap: int) -> CheckReport:
    """`sum s_λ(x) ŝ_λ(u) = 1 / prod (1 - x_i u_j)` up to total `u`-degree `cap`."""
    timer = Timer()
    families = [Family.U]
    dual = dual_sequence(F, _dual_cap(n, cap))
    lhs = _series(ZERO, families, cap)

    for lam in partitions(cap, max_length=n):
        lhs = lhs + dual_schur(dual, lam, n, cap) * schur(F, lam, n)

    rhs = _series(ONE, families, cap)

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rhs = rhs * _inverse_linear(ring.x(i), ring.u(j), families, cap)

    return timer.report("cauchy", {"n": n, "truncate": cap}, lhs, rhs)


# #### `check_littlewood`

# The symplectic and orthogonal Littlewood identities share a left-hand side
# `sum g_λ(x) ŝ_λ(u)` and differ in the numerator of the right-hand side.


def check_littlewood(family: str, F: AdmissibleSequence, n: int, cap: int) -> CheckReport:
    family = family.lower()

    if family not in ("c", "b", "d"):
        raise ValueError(f"Littlewood identities are stated for families c, b and d, got {family!r}")

    if family == "d" and not F.is_constant_term_free():
        raise NotConstantTermFree("The even orthogonal Littlewood identity needs a constant-term free sequence")

    timer = Timer()
    families = [Family.U]
    dual = dual_sequence(F, _dual_cap(n, cap))
    lhs = _series(ZERO, families, cap)

    for lam in partitions(cap, max_length=n):
        lhs = lhs + dual_schur(dual, lam, n, cap) * character(family, F, lam, n)

    us = [ring.u(j) for j in range(1, n + 1)]
    rhs = _series(ONE, families, cap)

    for a in range(n):
        for b in range(a if family != "c" else a + 1, n):
            rhs = rhs * (ONE - us[a] * us[b])

    if family == "b":
        for u in us:
            rhs = rhs * _inverse_linear(ONE, u, families, cap)

    for i in range(1, n + 1):
        for u in us:
            rhs = rhs * _inverse_linear(ring.x(i), u, families, cap)
            rhs = rhs * _inverse_linear(ring.xbar(i), u, families, cap)

    return timer.report(f"littlewood-{family}", {"n": n, "truncate": cap}, lhs, rhs)


# #### `check_littlewood_a`

# Both sides are Laurent series in `x̄`. A term of `u`-degree `a` and `v`-degree `b`
# on the right has `x`-degree at least `-nq - b`, so comparing everything of
# `x`-degree at least `-nq - D` is exact at total degree `D` in `u` and `v`.
# The `x`-degree of `s_(μ, -ν)` is at most `|μ| - |ν| - nq`, and `š_ν` has terms
# of `v`-degree far below `|ν|`, so `ν` runs over `|ν| <= D + |μ|`.


def check_littlewood_a(F: AdmissibleSequence, n: int, p: int, q: int, cap: int) -> CheckReport:
    if p + q != n or p < 0 or q < 0:
        raise SplitMismatch(f"p + q must equal n, got p={p}, q={q}, n={n}")

    timer = Timer()
    families = [Family.U, Family.V]
    floor = -n * q - cap
    dual = dual_sequence(F, _dual_cap(p, cap)) if p else None
    double_dual = double_dual_sequence(F, 2 * cap + q) if q else None
    lhs = _series(ZERO, families, cap)

    for mu in partitions(cap, max_length=p):
        for nu in partitions(cap + mu.weight, max_length=q):
            parts = Signature(mu.padded(p) + tuple(-v for v in reversed(nu.padded(q))))
            s = schur(F, [part - q for part in parts], n, floor=floor)
            s = s.expand(floor) if isinstance(s, Quotient) else s.floor([Family.X], floor)

            term = _series(s, families, cap)

            if p:
                term = term * _series(dual_schur(dual, mu, p, cap).body, families, cap)

            if q:
                term = term * double_dual_schur(double_dual, nu, q)

            lhs = lhs + term

    rhs = _series(ONE, families, cap)

    for i in range(1, p + 1):
        for j in range(1, q + 1):
            rhs = rhs * (ONE - ring.u(i) * ring.v(j))

    for k in range(1, n + 1):
        for i in range(1, p + 1):
            rhs = rhs * _inverse_linear(ring.x(k), ring.u(i), families, cap)

        # 1 / (x_k - v_j) = x̄_k / (1 - x̄_k v_j)
        for j in range(1, q + 1):
            rhs = rhs * ring.xbar(k) * _inverse_linear(ring.xbar(k), ring.v(j), families, cap)

    lhs = _series(lhs.body.floor([Family.X], floor), families, cap)
    rhs = _series(rhs.body.floor([Family.X], floor), families, cap)
    parameters = {"n": n, "p": p, "q": q, "truncate": cap}
    return timer.report("littlewood-a", parameters, lhs, rhs)


# ## Dual Cauchy identities


def check_dual_cauchy(family: str, F: AdmissibleSequence, n: int, m: int) -> CheckReport:
    """`sum (-1)^|λ̃| g_λ(x) g_λ̃(y) = prod (x_i - y_j)` over `λ ⊂ (m^n)`, with
    `x_i + x̄_i - y_j - ȳ_j` as factors in types C, B and D.

    The `y` variables are `x_(n+1), ..., x_(n+m)`.
    """
    family = family.lower()
    timer = Timer()
    xs = list(range(1, n + 1))
    ys = list(range(n + 1, n + m + 1))
    lhs = ZERO

    for lam in partitions_in_box(n, m):
        complement = lam.box_complement(n, m)
        term = character(family, F, lam, n, variables=xs) * character(
            family, F, complement, m, variables=ys
        )
        lhs = lhs + (term if complement.weight % 2 == 0 else -term)

    rhs = ONE

    for i in xs:
        for j in ys:
            if family == "a":
                rhs = rhs * (ring.x(i) - ring.x(j))
            else:
                rhs = rhs * (ring.x(i) + ring.xbar(i) - ring.x(j) - ring.xbar(j))

    return timer.report(f"dual-cauchy-{family}", {"n": n, "m": m}, lhs, rhs)


# ## Jacobi-Trudi identities

# The unflagged Jacobi-Trudi identities of types C, B and D express the factorial
# characters through factorial complete symmetric polynomials in `x, x̄`
# (and `1` in type B), for a parameter sequence that vanishes at negative indices.


def _doubled(n: int, odd: bool = False) -> List[Poly]:
    values = [ring.x(i) for i in range(1, n + 1)] + [ring.xbar(i) for i in range(1, n + 1)]
    return values + [ONE] if odd else values


def require_negative_cut(c: CSpec, family: str) -> None:
    if not c.negative_cut:
        raise HypothesisViolated("This identity needs c_m = 0 for all m < 0 (negative_cut)")

    if family == "d" and c[0]:
        raise HypothesisViolated("This identity needs c_0 = 0")


def jt_matrix(family: str, c: CSpec, lam: Sequence[int], n: int, perturb: bool = False) -> List[List[Poly]]:
    """The matrix of complete factorial polynomials whose determinant is the character."""
    family = family.lower()
    lam = Partition(lam)
    rows = []

    for i in range(1, n + 1):
        row = []

        for j in range(1, n + 1):
            part = lam.part(i)

            if family == "c":
                values = _doubled(n)
                first = complete(part - i + j, values, tau_shift(c, 1 - n - j))
                second = complete(part - i - j + 2, values, tau_shift(c, -1 - n + j))
            elif family == "b":
                values = _doubled(n, odd=True)
                first = complete(part - i + j, values, tau_shift(c, -n - j))
                second = -complete(part - i - j, values, tau_shift(c, -n + j))
            elif family == "d":
                values = _doubled(n)
                first = complete(part - i + j, values, tau_shift(c, 1 - n - j))
                second = -complete(part - i - j, values, tau_shift(c, 1 - n + j))
            else:
                raise ValueError(f"Unflagged Jacobi-Trudi identities are stated for c, b and d, got {family!r}")

            row.append(first - second if perturb and family != "c" else first + second)

        rows.append(row)

    return rows


def check_jt(family: str, c: CSpec, lam: Sequence[int], n: int, perturb: bool = False) -> CheckReport:
    """
    With `perturb`, the identity is deliberately broken (the `1/2` of type C
    is dropped, the sign of the second term flips in types B and D), so that
    the check must fail.
    """
    family = family.lower()
    require_negative_cut(c, family)
    timer = Timer()
    lhs = character(family, factorial_sequence(c), lam, n)
    rhs = ring.determinant(jt_matrix(family, c, lam, n, perturb))
    consulted = [var.index for var in rhs.variables() if var.family == Family.C]

    # The cut makes every lookup of a negative index vanish.
    if consulted and min(consulted) < 0:
        raise HypothesisViolated(f"c_{min(consulted)} survived the negative cut")

    if family == "c" and not perturb:
        rhs = rhs.scaled(Fraction(1, 2))

    parameters = {"family": family, "lambda": list(Partition(lam)), "n": n}

    if perturb:
        parameters["perturb"] = True

    return timer.report(f"jt-{family}", parameters, lhs, rhs)


# #### `check_jt_a`

# The type A identity for a signature `λ = (μ, ν)` is a block determinant:
# `q` rows of `g_(ν_(q-i+1) + i - j)[x|τ^(1-j) c]` over `p` rows of
# `h_(μ_i - q - i + j)[x|τ^(1-j) c]`, and it equals `s_(λ - (q^n))[x|c]`.


def check_jt_a(c: CSpec, lam: Sequence[int], n: int, q: Optional[int] = None) -> CheckReport:
    timer = Timer()
    parts = tuple(lam) + (0,) * (n - len(tuple(lam)))

    if q is None:
        q = sum(1 for part in parts if part < 0)

    mu, nu = Signature(parts).split(q)
    p = n - q
    F = factorial_sequence(c)
    lhs = schur(F, [part - q for part in parts], n)
    rows = []

    for i in range(1, q + 1):
        rows.append(
            [
                Quotient.lift(one_row("g", nu.part(q - i + 1) + i - j, factorial_sequence(tau_shift(c, 1 - j)), n))
                for j in range(1, n + 1)
            ]
        )

    for i in range(1, p + 1):
        rows.append(
            [
                Quotient.lift(one_row("h", mu.part(i) - q - i + j, factorial_sequence(tau_shift(c, 1 - j)), n))
                for j in range(1, n + 1)
            ]
        )

    rhs = ring.determinant(rows, one=Quotient(ONE))
    return timer.report("jt-a", {"lambda": list(parts), "n": n, "q": q}, lhs, rhs)


# ## Flagged identities

# The flagged Jacobi-Trudi, flagged Nägelsbach-Kostka and Giambelli identities
# hold for every admissible sequence and every family. The number of variables
# of the entries changes from column to column in the flagged ones.


def _w_one_row(kind: str, k: int, F: AdmissibleSequence, n: int, family: str) -> Poly:
    if k < 0 or (kind == "e" and k > n):
        return ZERO

    if not k:
        return ONE

    return w_character(family, F, (k,) if kind == "h" else (1,) * k, n)


def flagged_matrix(
    kind: str, family: str, F: AdmissibleSequence, lam: Sequence[int], n: int, *, in_w: bool = False
) -> List[List[Any]]:
    """The matrix whose determinant is the character `λ` of `family` in the `kind` identity.

    With `in_w`, the entries of types C, B and D are given as `w_character` forms.
    """
    family = family.lower()
    in_w = in_w and family != "a"

    def row_character(row_kind: str, k: int, count: int) -> Any:
        if in_w:
            return _w_one_row(row_kind, k, F, count, family)

        return one_row(row_kind, k, F, count, family=family)

    if kind == "jt":
        parts = tuple(lam) + (0,) * (n - len(tuple(lam)))
        rows = []

        for i in range(1, n + 1):
            row = []

            for j in range(1, n + 1):
                k, count = parts[i - 1] - i + j, n - j + 1

                if family == "a":
                    row.append(schur(F, (k,) + (0,) * (count - 1), count))
                else:
                    row.append(row_character("h", k, count))

            rows.append(row)

        return rows

    lam = Partition(lam)

    if kind == "nk":
        conjugate = lam.conjugate()
        size = lam.part(1)
        return [
            [row_character("e", conjugate.part(i) - i + j, n + j - 1) for j in range(1, size + 1)]
            for i in range(1, size + 1)
        ]

    if kind == "giambelli":
        alpha, beta = lam.frobenius()
        hook = w_character if in_w else character
        return [[hook(family, F, Partition.hook(a, b), n) for b in beta] for a in alpha]

    raise ValueError(f"Unknown flagged identity {kind!r}, expected jt, nk or giambelli")


def check_flagged(kind: str, family: str, F: AdmissibleSequence, lam: Sequence[int], n: int) -> CheckReport:
    timer = Timer()
    family = family.lower()
    parameters = {"family": family, "lambda": list(lam), "n": n}

    if family in ("c", "b", "d"):
        # Both sides are compared as polynomials in `w_i = x_i + x̄_i`.
        lhs = w_character(family, F, lam, n)
        rhs = ring.determinant(flagged_matrix(kind, family, F, lam, n, in_w=True))
        expanded = from_w(lhs)
        return timer.report(f"flagged-{kind}", parameters, expanded, expanded if rhs == lhs else from_w(rhs))

    lhs = character(family, F, lam, n)
    rows = flagged_matrix(kind, family, F, lam, n)

    if any(isinstance(entry, Quotient) for row in rows for entry in row):
        rows = [[Quotient.lift(entry) for entry in row] for row in rows]
        rhs = ring.determinant(rows, one=Quotient(ONE))
    else:
        rhs = ring.determinant(rows)

    return timer.report(f"flagged-{kind}", parameters, lhs, rhs)


# ## Generating functions

GENFUN_FAMILIES = ("a", "c", "b", "d", "aconvenient", "g")


def check_genfun(family: str, c: CSpec, n: int, cap: int) -> CheckReport:
    """Generating functions of the one-row characters, up to `t`-degree `cap`.

    For `g`, the identity `sum g_k[x|c] [t|c̃]^k = 1 / prod (x_i - t)` is compared
    on the terms of `x`-degree at least `-n - cap`, since `g_k` has `x`-degree
    at most `-n - k` and the right-hand side has `x`-degree `-n - b` in degree `t^b`.
    """
    family = family.lower()

    if family not in GENFUN_FAMILIES:
        raise ValueError(f"Unknown generating function {family!r}, expected one of {GENFUN_FAMILIES}")

    F = factorial_sequence(c)
    t = ring.t()
    families = [Family.T]
    timer = Timer()
    parameters = {"family": family, "n": n, "truncate": cap}

    if family == "g":
        return timer.report("genfun-g", parameters, *_genfun_g(c, n, cap))

    if family == "d" and c[0]:
        raise NotConstantTermFree("The even orthogonal generating function needs c_0 = 0")

    lhs = _series(ZERO, families, cap)

    for k in range(cap + 1):
        if family == "aconvenient":
            weights = range(n, n + k)
            value = one_row("h", k, F, n)
        else:
            weights = range(0, k + n)
            value = one_row("h", k, F, n, family=family[0])

        term = _series(value * t**k, families, cap)

        for l in weights:
            term = term * _inverse_linear(c[l], t, families, cap)

        lhs = lhs + term

    rhs = _series(ONE, families, cap)

    if family == "aconvenient":
        for l in range(n):
            rhs = rhs * (ONE - t * c[l])
    elif family == "b":
        rhs = rhs * (ONE + t)
    elif family == "d":
        rhs = rhs * (ONE - t * t)

    for i in range(1, n + 1):
        rhs = rhs * _inverse_linear(ring.x(i), t, families, cap)

        if family in ("c", "b", "d"):
            rhs = rhs * _inverse_linear(ring.xbar(i), t, families, cap)

    return timer.report(f"genfun-{family}", parameters, lhs, rhs)


def _genfun_g(c: CSpec, n: int, cap: int):
    F = factorial_sequence(c)
    t = ring.t()
    floor = -n - cap
    families = [Family.T]
    reversed_c = reverse_c(c)
    lhs = ZERO

    for k in range(cap + 1):
        g = one_row("g", k, F, n)
        g = g.expand(floor) if isinstance(g, Quotient) else g.floor([Family.X], floor)
        power = ONE

        for l in range(k):
            power = power * (t - reversed_c[l])

        lhs = lhs + g * power

    rhs = _series(ONE, families, cap)

    for i in range(1, n + 1):
        rhs = rhs * ring.xbar(i) * _inverse_linear(ring.xbar(i), t, families, cap)

    lhs = _series(lhs.floor([Family.X], floor), families, cap)
    rhs = _series(rhs.body.floor([Family.X], floor), families, cap)
    return lhs, rhs


# ## Factorial Schur functions of signatures


def check_gt(lam: Sequence[int], n: int, c: CSpec, convention: str = "content") -> CheckReport:
    """The Gelfand-Tsetlin sum against the bialternant."""
    timer = Timer()
    lhs = gt_character(lam, n, c, convention=convention)
    rhs = schur(factorial_sequence(c), lam, n)
    parameters = {"lambda": list(lam), "n": n, "convention": convention}
    return timer.report("gt", parameters, lhs, rhs)


def check_signature_shift(lam: Sequence[int], n: int, c: CSpec) -> CheckReport:
    """`s_(λ + (1^n))[x|c] = s_(1^n)[x|c] * s_λ[x|τc]`."""
    timer = Timer()
    parts = tuple(lam) + (0,) * (n - len(tuple(lam)))
    lhs = schur(factorial_sequence(c), [p + 1 for p in parts], n)
    rhs = Quotient.lift(schur(factorial_sequence(c), (1,) * n, n)) * Quotient.lift(
        schur(factorial_sequence(tau_shift(c, 1)), parts, n)
    )
    return timer.report("signature-shift", {"lambda": list(parts), "n": n}, lhs, rhs)


def check_shift_law(c: CSpec, r: int, s: int, i: int = 1) -> CheckReport:
    """`[x|c]^(r+s) = [x|c]^r * [x|τ^r c]^s` for all integers `r, s`."""
    timer = Timer()
    lhs = factorial_power_quotient(i, c, r + s)
    rhs = factorial_power_quotient(i, c, r) * factorial_power_quotient(i, tau_shift(c, r), s)
    return timer.report("shift-law", {"r": r, "s": s}, lhs, rhs)


def check_sp_one_row(c: CSpec, k: int, n: int) -> CheckReport:
    """`sp_(k)[x|c] = h_k[x, x̄|τ^(-n) c]` for a sequence with `c_m = 0` for `m < 0`."""
    require_negative_cut(c, "c")
    timer = Timer()
    lhs = one_row("h", k, factorial_sequence(c), n, family="c")
    rhs = complete(k, _doubled(n), tau_shift(c, -n))
    return timer.report("sp-one-row", {"k": k, "n": n}, lhs, rhs)


# ## Dual sequences


def _matrix_difference(left, right) -> Poly:
    for row_a, row_b in zip(left, right):
        for a, b in zip(row_a, row_b):
            if a != b:
                return ring.as_poly(a) - ring.as_poly(b)

    return ZERO


def check_dual(F: AdmissibleSequence, cap: int) -> CheckReport:
    """The dual pairs to the identity, and matches the closed form for factorial sequences."""
    timer = Timer()
    dual = dual_sequence(F, cap)
    difference = _matrix_difference(dual.pairing(F), ring.identity_matrix(cap + 1))
    notes = []

    if not difference and isinstance(F, FactorialSequence):
        difference = _matrix_difference(dual.matrix, factorial_dual(F.c, cap).matrix)
        notes.append("compared with u^k / prod(1 - u c_l)")

    return timer.report("dual", {"truncate": cap}, difference, ZERO, notes)


def check_double_dual(F: AdmissibleSequence, cap: int) -> CheckReport:
    timer = Timer()
    double_dual = double_dual_sequence(F, cap)
    difference = _matrix_difference(double_dual.pairing(F), ring.identity_matrix(cap + 1))
    notes = []

    if not difference and isinstance(F, FactorialSequence):
        difference = _matrix_difference(double_dual.matrix, factorial_double_dual(F.c, cap).matrix)
        notes.append("compared with v [v|c̃]^(n-1)")

    return timer.report("double-dual", {"truncate": cap}, difference, ZERO, notes)
