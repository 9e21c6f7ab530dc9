# # The identity catalogue

"""This module names every check, so that the command line and batch
manifests can refer to them by id.

A `CheckRequest` carries every parameter a check may need; each entry
of the catalogue picks the ones it uses.

```python
>>> report = run_check(CheckRequest("cauchy", n=1, truncate=2))
>>> report.verdict
'holds'

```
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from . import identities, ninth
from .errors import AlgebraError, UnknownIdentity
from .identities import CheckReport
from .partitions import parse_parts
from .sequences import (
    AdmissibleSequence,
    CSpec,
    factorial_sequence,
    load_c_spec,
    load_sequence,
    monomial_sequence,
)

# ## Requests


@dataclass(frozen=True)
class CheckRequest:
    identity: str
    family: str = "a"
    lam: Tuple[int, ...] = ()
    mu: Tuple[int, ...] = ()
    n: int = 1
    m: int = 1
    p: Optional[int] = None
    q: Optional[int] = None
    truncate: int = 4
    sequence: Union[str, Mapping, None] = None
    c: CSpec = field(default_factory=CSpec.symbolic)
    perturb: bool = False
    convention: Optional[str] = None
    k: int = 1
    r: int = 1
    s: int = 1
    pair: str = "plus"
    size: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "family", self.family.lower())

        if self.truncate < 0:
            raise ValueError(f"The truncation must be nonnegative, got {self.truncate}")

    def admissible_sequence(self) -> AdmissibleSequence:
        """The sequence `F`: factorial in `c` unless another one is requested."""
        if self.sequence in (None, "factorial"):
            return factorial_sequence(self.c)

        if self.sequence == "monomial":
            return monomial_sequence()

        if isinstance(self.sequence, Mapping):
            return load_sequence(self.sequence)

        raise ValueError(f"Unknown sequence {self.sequence!r}, expected factorial, monomial or a specification")

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> CheckRequest:
        """Builds a request from a batch manifest entry.

        The keys are the field names, with `lambda` for `lam`, and
        `c_cut` and `c0_zero` as flags on the parameter sequence.
        """
        if "identity" not in data:
            raise ValueError(f"Manifest entry {dict(data)} has no identity")

        c = data.get("c")
        c = load_c_spec(c) if isinstance(c, Mapping) else (CSpec.zeros() if c == "zeros" else CSpec.symbolic())

        if data.get("c_cut"):
            c = replace(c, negative_cut=True)

        if data.get("c0_zero"):
            c = replace(c, zero_c0=True)

        values = {
            key: data[key]
            for key in ("family", "n", "m", "p", "q", "truncate", "sequence", "perturb", "convention", "k", "r", "s", "pair", "size")
            if key in data
        }
        return cls(
            identity=data["identity"],
            lam=_parts(data.get("lambda", ())),
            mu=_parts(data.get("mu", ())),
            c=c,
            **values,
        )


def _parts(value) -> Tuple[int, ...]:
    if isinstance(value, str):
        return parse_parts(value)

    return tuple(int(p) for p in value)


# ## The catalogue

# Checks of the Jacobi-Trudi type need `c_m = 0` for `m < 0` (and `c_0 = 0` in
# type D). When the request does not provide it, the hypothesis is
# switched on and a note says so in the report.


def _with_hypotheses(c: CSpec, family: str, notes: List[str]) -> CSpec:
    if not c.negative_cut:
        c = c.cut()
        notes.append("enabled c_m = 0 for m < 0")

    if family == "d" and not c.zero_c0 and c[0]:
        c = replace(c, zero_c0=True)
        notes.append("enabled c_0 = 0")

    return c


def _jt(request: CheckRequest, notes: List[str]) -> CheckReport:
    if request.family == "a":
        return identities.check_jt_a(request.c, request.lam, request.n, request.q)

    c = _with_hypotheses(request.c, request.family, notes)
    return identities.check_jt(request.family, c, request.lam, request.n, request.perturb)


def _littlewood_a(request: CheckRequest, notes: List[str]) -> CheckReport:
    q = request.q if request.q is not None else (request.n - request.p if request.p is not None else 0)
    p = request.p if request.p is not None else request.n - q
    return identities.check_littlewood_a(request.admissible_sequence(), request.n, p, q, request.truncate)


def _genfun(request: CheckRequest, notes: List[str]) -> CheckReport:
    c = request.c

    if request.family == "d" and c[0]:
        c = replace(c, zero_c0=True)
        notes.append("enabled c_0 = 0")

    return identities.check_genfun(request.family, c, request.n, request.truncate)


def _specialisation(request: CheckRequest, notes: List[str]) -> CheckReport:
    c = request.c if request.family == "a" else _with_hypotheses(request.c, request.family, notes)
    return ninth.check_specialisation(request.family, request.lam, request.n, c)


def _sp_one_row(request: CheckRequest, notes: List[str]) -> CheckReport:
    c = _with_hypotheses(request.c, "c", notes)
    return identities.check_sp_one_row(c, request.k, request.n)


class Identity(NamedTuple):
    description: str
    run: Callable[[CheckRequest, List[str]], CheckReport]


IDENTITIES: Dict[str, Identity] = {
    "cauchy": Identity(
        "Cauchy identity for generalised Schur functions",
        lambda r, _: identities.check_cauchy(r.admissible_sequence(), r.n, r.truncate),
    ),
    "littlewood": Identity(
        "Littlewood identities of types C, B and D",
        lambda r, _: identities.check_littlewood(r.family, r.admissible_sequence(), r.n, r.truncate),
    ),
    "littlewood-a": Identity("Littlewood identity of type A with signatures", _littlewood_a),
    "dual-cauchy": Identity(
        "Dual Cauchy identity in all four types",
        lambda r, _: identities.check_dual_cauchy(r.family, r.admissible_sequence(), r.n, r.m),
    ),
    "jt": Identity("Jacobi-Trudi identities (block form in type A)", _jt),
    "flagged-jt": Identity(
        "Flagged Jacobi-Trudi identity",
        lambda r, _: identities.check_flagged("jt", r.family, r.admissible_sequence(), r.lam, r.n),
    ),
    "flagged-nk": Identity(
        "Flagged Nägelsbach-Kostka identity",
        lambda r, _: identities.check_flagged("nk", r.family, r.admissible_sequence(), r.lam, r.n),
    ),
    "giambelli": Identity(
        "Giambelli identity",
        lambda r, _: identities.check_flagged("giambelli", r.family, r.admissible_sequence(), r.lam, r.n),
    ),
    "genfun": Identity("Generating functions of the one-row characters", _genfun),
    "gt": Identity(
        "Gelfand-Tsetlin formula for factorial Schur functions",
        lambda r, _: identities.check_gt(r.lam, r.n, r.c, r.convention or "content"),
    ),
    "signature-shift": Identity(
        "Factorial Schur functions of shifted signatures",
        lambda r, _: identities.check_signature_shift(r.lam, r.n, r.c),
    ),
    "shift-law": Identity(
        "Multiplicativity of factorial powers",
        lambda r, _: identities.check_shift_law(r.c, r.r, r.s),
    ),
    "sp-one-row": Identity("One-row symplectic characters as doubled complete functions", _sp_one_row),
    "dual": Identity(
        "Dual sequence by inversion against its closed form",
        lambda r, _: identities.check_dual(r.admissible_sequence(), r.truncate),
    ),
    "double-dual": Identity(
        "Double dual sequence by inversion against its closed form",
        lambda r, _: identities.check_double_dual(r.admissible_sequence(), r.truncate),
    ),
    "ninth-inverse-pairs": Identity(
        "The structured matrices are pairwise inverse",
        lambda r, _: ninth.check_inverse_pairs(r.n, r.m),
    ),
    "ninth-nk": Identity(
        "Nägelsbach-Kostka identities in the ninth variation",
        lambda r, _: ninth.check_ninth_nk(r.family, r.lam, r.n, r.m, r.mu, r.convention or "minor"),
    ),
    "ninth-minor-duality": Identity(
        "Complementary minors of the structured matrices",
        lambda r, _: ninth.check_minor_duality(r.n, r.m, r.pair, r.size),
    ),
    "ninth-specialisation": Identity("Specialisation of the ninth variation to factorial characters", _specialisation),
    "ninth-omega": Identity("The involution ω sends s_λ to s_λ'", lambda r, _: ninth.check_omega(r.lam)),
    "ninth-duality": Identity("The involution ω on sp_λ against o_λ'", lambda r, _: ninth.check_duality(r.lam)),
    "ninth-phi-equivariance": Identity(
        "The shift φ commutes with the characters",
        lambda r, _: ninth.check_phi_equivariance(r.family, r.lam, r.n),
    ),
}


def run_check(request: CheckRequest) -> CheckReport:
    if request.identity not in IDENTITIES:
        raise UnknownIdentity(
            f"Unknown identity {request.identity!r}, expected one of: {', '.join(IDENTITIES)}"
        )

    notes: List[str] = []
    report = IDENTITIES[request.identity].run(request, notes)
    report.notes = notes + report.notes
    return report


# ## Batches

# Checks are independent, so a batch may run them in separate processes.
# Results come back in manifest order, and an item that raises is recorded
# as an error without stopping the others.


def _run_item(item: Tuple[Mapping, bool]) -> dict:
    data, timing = item

    try:
        return run_check(CheckRequest.from_json(data)).to_json(timing)
    except (AlgebraError, ValueError, TypeError, KeyError) as e:
        return {"identity": data.get("identity"), "verdict": "error", "error": f"{type(e).__name__}: {e}"}


def run_batch(manifest: Sequence[Mapping], workers: int = 1, timing: bool = False) -> dict:
    items = [(dict(data), timing) for data in manifest]

    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_run_item, items))
    else:
        results = [_run_item(item) for item in items]

    passed = sum(1 for result in results if result["verdict"] == "holds")
    return {
        "reports": results,
        "summary": {"passed": passed, "total": len(results)},
    }
