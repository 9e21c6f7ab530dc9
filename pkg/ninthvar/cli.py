# # The command line

"""This module implements the `ninthvar` command.

```bash
ninthvar compute --family c --lambda 1 --n 1
ninthvar check cauchy --n 1 --truncate 3
ninthvar check jt --family c --lambda 2,1 --n 2 --c-cut
ninthvar batch manifest.json --workers 4
ninthvar ninth sp --lambda 2,1 --n 2 --emit json
ninthvar list-identities
```

The exit code is `0` when everything holds, `1` when some identity fails,
`2` for usage errors (including inputs that violate a hypothesis), and `3`
when an internal computation fails, such as an exact division that doesn't divide.
Output is canonical, so identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Any, Optional, Sequence

from . import ninth, ring
from .characters import FAMILIES, GT_CONVENTIONS, character, gt_character
from .errors import AlgebraError, ComputationError
from .identities import CheckReport
from .partitions import parse_parts
from .registry import IDENTITIES, CheckRequest, run_batch, run_check
from .sequences import (
    CSpec,
    double_dual_sequence,
    dual_sequence,
    load_c_spec,
    load_sequence,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


# ## Parsing


def _parts(text: str):
    try:
        return parse_parts(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _read_json(path: str) -> Any:
    try:
        with open(path) as fp:
            return json.load(fp)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"Cannot read {path}: {e}")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", default="a", help="a, c, b or d (default: a)")
    parser.add_argument("--lambda", dest="lam", type=_parts, default=(), help="comma-separated parts, e.g. 2,1,-1")
    parser.add_argument("--mu", type=_parts, default=(), help="inner partition for skew characters")
    parser.add_argument("--n", type=int, default=1, help="number of variables (default: 1)")
    parser.add_argument("--m", type=int, default=1, help="second size parameter (default: 1)")
    parser.add_argument("--p", type=int, default=None)
    parser.add_argument("--q", type=int, default=None)
    parser.add_argument("--truncate", type=int, default=4, help="series truncation degree (default: 4)")
    parser.add_argument("--sequence", default="factorial", help="factorial, monomial or file:PATH")
    parser.add_argument("--c", default="symbolic", help="symbolic, zeros or file:PATH")
    parser.add_argument("--c-cut", action="store_true", help="set c_m = 0 for m < 0")
    parser.add_argument("--c0-zero", action="store_true", help="set c_0 = 0")
    parser.add_argument("--format", "--emit", dest="format", choices=["json", "text"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ninthvar",
        description="Exact computation of generalised characters and verification of their identities.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="compute a character")
    _add_common(compute)
    compute.add_argument("--floor", type=int, default=None, help="lowest exact x-degree for truncated signatures")

    check = commands.add_parser("check", help="check one identity")
    check.add_argument("identity", help="identity id, see list-identities")
    _add_common(check)
    check.add_argument("--perturb", action="store_true", help="break the identity on purpose")
    check.add_argument("--convention", default=None)
    check.add_argument("--k", type=int, default=1)
    check.add_argument("--r", type=int, default=1)
    check.add_argument("--s", type=int, default=1)
    check.add_argument("--pair", default="plus", choices=sorted(ninth.PAIRS))
    check.add_argument("--size", type=int, default=None)
    check.add_argument("--timing", action="store_true", help="include elapsed milliseconds")

    batch = commands.add_parser("batch", help="run a manifest of checks")
    batch.add_argument("manifest", help="JSON file with a list of checks")
    batch.add_argument("--workers", type=int, default=1)
    batch.add_argument("--timing", action="store_true")
    batch.add_argument("--format", choices=["json", "text"], default="json")

    dual = commands.add_parser("dual", help="compute a dual or double dual sequence")
    _add_common(dual)
    dual.add_argument("--double", action="store_true", help="compute the double dual instead")

    gt = commands.add_parser("gt", help="factorial Schur function by Gelfand-Tsetlin patterns")
    _add_common(gt)
    gt.add_argument("--convention", default="content", choices=GT_CONVENTIONS)

    listing = commands.add_parser("list-identities", help="list the identity ids")
    listing.add_argument("--format", choices=["json", "text"], default="text")

    ninth_parser = commands.add_parser("ninth", help="ninth variation characters and checks")
    ninth_parser.add_argument("action", choices=["e", "s", "sp", "o", "matrices", "check-nk", "check-pairs"])
    _add_common(ninth_parser)
    ninth_parser.add_argument("--shift", type=int, default=0)
    ninth_parser.add_argument("--r", type=int, default=1, help="index of e_r")
    ninth_parser.add_argument("--skew", action="store_true", help="compute sp or o as a minor with inner --mu")

    return parser


# Flags are turned into a parameter sequence and an admissible sequence
# before anything is computed, so bad combinations fail early.


def _c_spec(args) -> CSpec:
    if args.c == "symbolic":
        c = CSpec.symbolic()
    elif args.c == "zeros":
        c = CSpec.zeros()
    elif args.c.startswith("file:"):
        c = load_c_spec(_read_json(args.c[len("file:") :]))
    else:
        raise UsageError(f"Invalid --c {args.c!r}: use symbolic, zeros or file:PATH")

    if args.c_cut:
        c = replace(c, negative_cut=True)

    if args.c0_zero:
        c = replace(c, zero_c0=True)

    return c


def _sequence_spec(args):
    if args.sequence in ("factorial", "monomial"):
        return args.sequence

    if args.sequence.startswith("file:"):
        return _read_json(args.sequence[len("file:") :])

    raise UsageError(f"Invalid --sequence {args.sequence!r}: use factorial, monomial or file:PATH")


def _family(args) -> str:
    family = args.family.lower()

    if family not in FAMILIES + ("aconvenient", "g", "o"):
        raise UsageError(f"Invalid --family {args.family!r}: use one of {', '.join(FAMILIES)}")

    return family


def request_from_args(args) -> CheckRequest:
    if args.identity not in IDENTITIES:
        raise UsageError(
            f"Unknown identity {args.identity!r}. Known identities: {', '.join(IDENTITIES)}"
        )

    return CheckRequest(
        identity=args.identity,
        family=_family(args),
        lam=tuple(args.lam),
        mu=tuple(args.mu),
        n=args.n,
        m=args.m,
        p=args.p,
        q=args.q,
        truncate=args.truncate,
        sequence=_sequence_spec(args),
        c=_c_spec(args),
        perturb=args.perturb,
        convention=args.convention,
        k=args.k,
        r=args.r,
        s=args.s,
        pair=args.pair,
        size=args.size,
    )


# ## Output


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def _value_json(value) -> Any:
    if isinstance(value, ring.Quotient):
        return value.to_json()

    return ring.as_poly(value).to_json()


def _emit_value(args, label: str, value, extra: Optional[dict] = None) -> None:
    if args.format == "text":
        print(str(value))
        return

    data = dict(extra or {})
    data[label] = _value_json(value)
    data["text"] = str(value)
    print(_dump(data))


def _emit_report(report: CheckReport, fmt: str, timing: bool) -> None:
    if fmt == "json":
        print(_dump(report.to_json(timing)))
        return

    print(str(report))

    for note in report.notes:
        print(f"  note: {note}")

    if not report.holds:
        witness = report.witness()
        print(f"  difference ({witness['terms']} terms):")

        if "difference" in witness:
            print(f"    {report.difference}")
        else:
            print(f"    lowest term: {ring.Poly.from_json(witness['lowest'])}")


# ## Commands


def _compute(args) -> int:
    family = _family(args)
    sequence = load_sequence(_as_sequence_data(_sequence_spec(args), _c_spec(args)))
    value = character(family, sequence, args.lam, args.n, floor=args.floor if family == "a" else None)
    extra = {"family": family, "lambda": list(args.lam), "n": args.n, "sequence": sequence.to_json()}
    _emit_value(args, "value", value, extra)
    return EXIT_OK


def _as_sequence_data(spec, c: CSpec) -> dict:
    if spec == "factorial":
        return {"kind": "factorial", "c": c.to_json()}

    if spec == "monomial":
        return {"kind": "monomial"}

    return spec


def _check(args) -> int:
    report = run_check(request_from_args(args))
    _emit_report(report, args.format, args.timing)
    return EXIT_OK if report.holds else EXIT_FAILED


def _batch(args) -> int:
    manifest = _read_json(args.manifest)

    if not isinstance(manifest, list):
        raise UsageError("A batch manifest must be a JSON list of checks")

    result = run_batch(manifest, workers=max(1, args.workers), timing=args.timing)
    summary = result["summary"]

    if args.format == "json":
        print(_dump(result))
    else:
        for item in result["reports"]:
            line = f"{item.get('identity')}: {item['verdict']}"
            print(line if "error" not in item else f"{line} ({item['error']})")

        print(f"{summary['passed']}/{summary['total']} passed")

    return EXIT_OK if summary["passed"] == summary["total"] else EXIT_FAILED


def _dual(args) -> int:
    sequence = load_sequence(_as_sequence_data(_sequence_spec(args), _c_spec(args)))

    if args.double:
        result = double_dual_sequence(sequence, args.truncate)
        variable = ring.v(1)
    else:
        result = dual_sequence(sequence, args.truncate)
        variable = ring.u(1)

    polynomials = [result.polynomial(k, variable) for k in range(args.truncate + 1)]

    if args.format == "text":
        for k, poly in enumerate(polynomials):
            print(f"{k}: {poly}")
    else:
        data = {
            "kind": "double-dual" if args.double else "dual",
            "truncate": args.truncate,
            "polynomials": [poly.to_json() for poly in polynomials],
            "text": [str(poly) for poly in polynomials],
        }
        print(_dump(data))

    return EXIT_OK


def _gt(args) -> int:
    value = gt_character(args.lam, args.n, _c_spec(args), convention=args.convention)
    extra = {"lambda": list(args.lam), "n": args.n, "convention": args.convention}
    _emit_value(args, "value", value, extra)
    return EXIT_OK


def _list_identities(args) -> int:
    if args.format == "json":
        print(_dump([{"id": key, "description": value.description} for key, value in IDENTITIES.items()]))
    else:
        for key, value in IDENTITIES.items():
            print(f"{key}: {value.description}")

    return EXIT_OK


def _ninth(args) -> int:
    action = args.action
    lam, mu = args.lam, args.mu

    if action == "check-nk":
        report = ninth.check_ninth_nk(args.family, lam, args.n, args.m, mu)
        _emit_report(report, args.format, False)
        return EXIT_OK if report.holds else EXIT_FAILED

    if action == "check-pairs":
        report = ninth.check_inverse_pairs(args.n, args.m)
        _emit_report(report, args.format, False)
        return EXIT_OK if report.holds else EXIT_FAILED

    if action == "matrices":
        matrices = ninth.build_nk_matrices(args.n, args.m)
        data = {
            name: [[str(entry) for entry in row] for row in getattr(matrices, name)]
            for pair in ninth.PAIRS.values()
            for name in pair
        }

        if args.format == "text":
            for name, rows in data.items():
                print(f"{name}:")

                for row in rows:
                    print("  [" + ", ".join(row) + "]")
        else:
            print(_dump({"n": args.n, "m": args.m, "matrices": data}))

        return EXIT_OK

    if action == "e":
        value = ninth.ninth_e(args.r, args.shift)
    elif action == "s":
        value = ninth.phi(ninth.ninth_skew_schur(lam, mu, args.n), args.shift)
    elif action == "sp":
        value = ninth.ninth_sp(lam, args.n, mu if args.skew else None, shift=args.shift, m=args.m)
    else:
        value = ninth.ninth_o(lam, args.n, mu if args.skew else None, shift=args.shift, m=args.m)

    extra = {"character": action, "lambda": list(lam), "n": args.n, "shift": args.shift}

    if mu:
        extra["mu"] = list(mu)

    _emit_value(args, "element", value, extra)
    return EXIT_OK


COMMANDS = {
    "compute": _compute,
    "check": _check,
    "batch": _batch,
    "dual": _dual,
    "gt": _gt,
    "list-identities": _list_identities,
    "ninth": _ninth,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except ComputationError as e:
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, AlgebraError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
