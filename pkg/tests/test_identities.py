import time

import pytest

from ninthvar import identities
from ninthvar.errors import HypothesisViolated, NotConstantTermFree, SplitMismatch
from ninthvar.identities import CheckReport
from ninthvar.partitions import partitions, partitions_inside, signatures
from ninthvar.ring import ZERO, Poly, c, x
from ninthvar.sequences import CSpec, custom_sequence, factorial_sequence, monomial_sequence

F = factorial_sequence()
CUT = CSpec.symbolic(negative_cut=True)
CUT_D = CSpec.symbolic(negative_cut=True, zero_c0=True)


def _cut(family):
    return CUT_D if family == "d" else CUT


@pytest.mark.parametrize(
    "sequence, n, cap",
    [
        (F, 1, 4),
        (F, 2, 3),
        (F, 2, 0),
        (monomial_sequence(), 2, 4),
        (custom_sequence({1: [1, 1], 2: [0, 2, 1], 3: [1, 0, 0, 1], 4: [0, 0, 0, 0, 1]}), 1, 3),
    ],
)
def test_cauchy(sequence, n, cap):
    assert identities.check_cauchy(sequence, n, cap).holds


@pytest.mark.parametrize("family", ["c", "b"])
@pytest.mark.parametrize("n, cap", [(1, 4), (2, 2)])
def test_littlewood(family, n, cap):
    assert identities.check_littlewood(family, F, n, cap).holds


@pytest.mark.parametrize("n, cap", [(1, 4), (2, 2)])
def test_littlewood_d(n, cap):
    sequence = factorial_sequence(CSpec.symbolic(zero_c0=True))
    assert identities.check_littlewood("d", sequence, n, cap).holds


@pytest.mark.parametrize("family", ["c", "b", "d"])
def test_littlewood_at_degree_five(family):
    sequence = factorial_sequence(CSpec.symbolic(zero_c0=family == "d"))
    assert identities.check_littlewood(family, sequence, 2, 5).holds


def test_littlewood_d_needs_constant_term_free_sequence():
    with pytest.raises(NotConstantTermFree):
        identities.check_littlewood("d", F, 1, 2)


def test_littlewood_unknown_family():
    with pytest.raises(ValueError):
        identities.check_littlewood("a", F, 1, 2)


@pytest.mark.parametrize(
    "sequence, n, p, q, cap",
    [
        (F, 1, 1, 0, 3),
        (F, 1, 0, 1, 3),
        (F, 2, 1, 1, 2),
        (F, 2, 0, 2, 2),
        (monomial_sequence(), 2, 1, 1, 2),
    ],
)
def test_littlewood_a(sequence, n, p, q, cap):
    assert identities.check_littlewood_a(sequence, n, p, q, cap).holds


@pytest.mark.parametrize("p, q", [(1, 1), (2, 1)])
def test_littlewood_a_at_degree_four(p, q):
    assert identities.check_littlewood_a(F, p + q, p, q, 4).holds


def test_littlewood_a_split_mismatch():
    with pytest.raises(SplitMismatch):
        identities.check_littlewood_a(F, 2, 2, 1, 2)


@pytest.mark.parametrize("family", ["a", "c", "b", "d"])
@pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_dual_cauchy(family, n, m):
    assert identities.check_dual_cauchy(family, F, n, m).holds


@pytest.mark.parametrize("family", ["c", "b", "d"])
@pytest.mark.parametrize("n", [1, 2])
def test_jacobi_trudi(family, n):
    for lam in partitions_inside([2] * n):
        assert identities.check_jt(family, _cut(family), lam, n).holds


@pytest.mark.parametrize("family, lam", [("c", [1, 1, 1]), ("b", [2, 1]), ("d", [1, 1])])
def test_jacobi_trudi_three_variables(family, lam):
    assert identities.check_jt(family, _cut(family), lam, 3).holds


@pytest.mark.parametrize("family, lam", [("c", [1]), ("b", [2]), ("d", [2])])
def test_jacobi_trudi_perturbed_fails(family, lam):
    report = identities.check_jt(family, _cut(family), lam, 1, perturb=True)
    assert not report.holds
    assert report.witness()["terms"] > 0


@pytest.mark.parametrize("family, c_spec", [("c", CSpec.symbolic()), ("d", CUT)])
def test_jacobi_trudi_hypotheses(family, c_spec):
    with pytest.raises(HypothesisViolated):
        identities.check_jt(family, c_spec, [1], 1)


@pytest.mark.parametrize("n", [1, 2])
def test_jacobi_trudi_signatures(n):
    for signature in signatures(n, -1, 1):
        assert identities.check_jt_a(CSpec.symbolic(), list(signature), n).holds


@pytest.mark.parametrize("lam", [[-2], [1, -2], [0, -2]])
def test_jacobi_trudi_deeper_signatures(lam):
    assert identities.check_jt_a(CSpec.symbolic(), lam, len(lam)).holds


@pytest.mark.parametrize("kind", ["jt", "nk", "giambelli"])
@pytest.mark.parametrize("family", ["a", "c", "b", "d"])
@pytest.mark.parametrize("lam", [[1], [2, 1], [1, 1], [2, 2]])
def test_flagged(kind, family, lam):
    assert identities.check_flagged(kind, family, F, lam, 2).holds


@pytest.mark.parametrize("family", ["a", "c", "b", "d"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_flagged_grid(family, n):
    start = time.perf_counter()

    for lam in partitions(5, min_weight=1, max_length=n):
        for kind in ("jt", "nk", "giambelli"):
            assert identities.check_flagged(kind, family, F, list(lam), n).holds, (kind, lam)

    assert time.perf_counter() - start < 60


def test_flagged_with_custom_sequence():
    sequence = custom_sequence({1: [3, 1], 2: [1, 1, 1], 3: [0, 2, 0, 1]})
    assert identities.check_flagged("jt", "a", sequence, [2, 1], 2).holds
    assert identities.check_flagged("giambelli", "c", sequence, [2, 1], 2).holds


@pytest.mark.parametrize("family", ["a", "c", "b", "aconvenient"])
@pytest.mark.parametrize("n", [1, 2])
def test_generating_functions(family, n):
    assert identities.check_genfun(family, CSpec.symbolic(), n, 3).holds


@pytest.mark.parametrize("n", [1, 2])
def test_generating_function_d(n):
    assert identities.check_genfun("d", CSpec.symbolic(zero_c0=True), n, 3).holds

    with pytest.raises(NotConstantTermFree):
        identities.check_genfun("d", CSpec.symbolic(), n, 3)


@pytest.mark.parametrize("n, cap", [(1, 3), (2, 2)])
def test_generating_function_g(n, cap):
    assert identities.check_genfun("g", CSpec.symbolic(), n, cap).holds


def test_generating_function_unknown():
    with pytest.raises(ValueError):
        identities.check_genfun("e", CSpec.symbolic(), 1, 2)


@pytest.mark.parametrize("n", [1, 2])
def test_gelfand_tsetlin(n):
    for signature in signatures(n, -1, 2):
        assert identities.check_gt(list(signature), n, CSpec.symbolic()).holds


def test_gelfand_tsetlin_literal_fails():
    assert not identities.check_gt([1, 0], 2, CSpec.symbolic(), "literal").holds


@pytest.mark.parametrize("lam", [[0, 0], [1, 0], [0, -1], [2, -1]])
def test_signature_shift(lam):
    assert identities.check_signature_shift(lam, 2, CSpec.symbolic()).holds


@pytest.mark.parametrize("r", [-2, -1, 0, 1, 2])
@pytest.mark.parametrize("s", [-2, 0, 3])
def test_shift_law(r, s):
    assert identities.check_shift_law(CSpec.symbolic(), r, s).holds


@pytest.mark.parametrize("k", [0, 1, 2, 3])
@pytest.mark.parametrize("n", [1, 2])
def test_symplectic_one_row(k, n):
    assert identities.check_sp_one_row(CUT, k, n).holds


@pytest.mark.parametrize("sequence", [F, monomial_sequence(), custom_sequence({1: [5, 1], 2: [1, 2, 1]})])
def test_dual(sequence):
    report = identities.check_dual(sequence, 2)
    assert report.holds


@pytest.mark.parametrize("sequence", [F, monomial_sequence()])
def test_double_dual(sequence):
    report = identities.check_double_dual(sequence, 4)
    assert report.holds
    assert report.notes


def test_report_serialization():
    report = CheckReport("cauchy", {"n": 1}, ZERO, elapsed=1.5)
    assert report.to_json() == {"identity": "cauchy", "parameters": {"n": 1}, "verdict": "holds"}
    assert report.to_json(timing=True)["elapsed_ms"] == 1.5
    assert str(report) == "cauchy: holds"


def test_report_witness():
    report = CheckReport("jt-c", {}, x(1) - c(0))
    assert report.verdict == "fails"
    assert report.to_json()["witness"] == {"terms": 2, "difference": (x(1) - c(0)).to_json()}


def test_report_witness_is_bounded():
    difference = sum((x(1, k) for k in range(identities.WITNESS_LIMIT + 1)), ZERO)
    witness = CheckReport("cauchy", {}, difference).witness()
    assert witness["terms"] == identities.WITNESS_LIMIT + 1
    assert witness["lowest"] == Poly.constant(1).to_json()
