from fractions import Fraction

import pytest

from ninthvar import ring
from ninthvar.errors import F0NotOne, NegativePartWrongOrder, NotMonic, SequenceTooShort, WrongDegree
from ninthvar.ring import ONE, ZERO, c, v, x
from ninthvar.sequences import (
    CSpec,
    MonomialSequence,
    custom_sequence,
    double_dual_sequence,
    dual_sequence,
    factorial_double_dual,
    factorial_dual,
    factorial_power_quotient,
    factorial_sequence,
    load_c_spec,
    load_sequence,
    load_sequence_file,
    monomial_sequence,
    reverse_c,
    tau_shift,
)


def test_symbolic_parameters():
    spec = CSpec.symbolic()
    assert spec[3] == c(3)
    assert spec[-2] == c(-2)


def test_negative_cut_and_zero_c0():
    spec = CSpec.symbolic(negative_cut=True, zero_c0=True)
    assert spec[-1] == ZERO
    assert spec[0] == ZERO
    assert spec[1] == c(1)


def test_explicit_parameters():
    spec = CSpec.explicit({0: 1, 1: "1/2"})
    assert spec[1] == ring.Poly.constant(Fraction(1, 2))
    assert spec[5] == ZERO


@pytest.mark.parametrize("r, m", [(0, 0), (1, 0), (-2, 3), (3, -5)])
def test_shift_and_reverse(r, m):
    spec = CSpec.symbolic()
    assert tau_shift(spec, r)[m] == c(m + r)
    assert reverse_c(spec)[m] == c(-m - 1)
    assert reverse_c(tau_shift(spec, r))[m] == c(-m - 1 + r)
    assert tau_shift(reverse_c(spec), r)[m] == c(-m - r - 1)


def test_cut_applies_to_underlying_index():
    spec = tau_shift(CSpec.symbolic(negative_cut=True), -2)
    assert spec[1] == ZERO
    assert spec[2] == c(0)


def test_unknown_kind():
    with pytest.raises(ValueError):
        CSpec("random")


def test_factorial_evaluation():
    F = factorial_sequence()
    assert F.evaluate(2, x(1)) == (x(1) - c(0)) * (x(1) - c(1))
    assert F.evaluate(0, x(1)) == ONE
    assert monomial_sequence().evaluate(3, x(2)) == x(2) ** 3


def test_factorial_power_quotient():
    q = factorial_power_quotient(1, CSpec.symbolic(), -2)
    assert q * (x(1) - c(-1)) * (x(1) - c(-2)) == ONE


def test_custom_sequence_evaluation():
    F = custom_sequence({1: [1, 1], 2: ["1/2", 0, 1]})
    assert F.evaluate(2, x(1)) == x(1) ** 2 + Fraction(1, 2)
    assert not F.is_constant_term_free()


@pytest.mark.parametrize(
    "table, negative, error",
    [
        ({0: [2]}, None, F0NotOne),
        ({2: [0, 1]}, None, WrongDegree),
        ({1: [0, 2]}, None, NotMonic),
        ({1: [0, 1]}, {1: [1]}, NegativePartWrongOrder),
        ({1: [0, 1]}, {2: [0, 1, 1]}, NegativePartWrongOrder),
    ],
)
def test_custom_sequence_validation(table, negative, error):
    with pytest.raises(error):
        custom_sequence(table, negative)


def test_custom_sequence_too_short():
    F = custom_sequence({1: [0, 1]})

    with pytest.raises(SequenceTooShort):
        F.evaluate(2, x(1))


@pytest.mark.parametrize(
    "F, free",
    [
        (factorial_sequence(), False),
        (factorial_sequence(CSpec.symbolic(zero_c0=True)), True),
        (monomial_sequence(), True),
        (custom_sequence({1: [0, 1], 2: [0, 3, 1]}), True),
    ],
)
def test_constant_term_free(F, free):
    assert F.is_constant_term_free() == free


def test_load_sequence():
    assert isinstance(load_sequence({"kind": "monomial"}), MonomialSequence)
    F = load_sequence({"kind": "factorial", "c": {"kind": "symbolic", "negative_cut": True}})
    assert F.c.negative_cut
    assert load_sequence({"kind": "custom", "coeffs": {"1": [0, 1]}}).evaluate(1, x(1)) == x(1)

    with pytest.raises(ValueError):
        load_sequence({"kind": "bernoulli"})


def test_load_sequence_file(tmp_path):
    path = tmp_path / "sequence.json"
    path.write_text('{"kind": "custom", "coeffs": {"1": ["-1", 1]}}')
    assert load_sequence_file(path).evaluate(1, x(1)) == x(1) - 1


def test_load_c_spec():
    spec = load_c_spec({"kind": "explicit", "values": {"0": "2"}, "zero_c0": True})
    assert spec[0] == ZERO
    assert load_c_spec(None) == CSpec.symbolic()
    assert load_c_spec(CSpec.symbolic().reversed().to_json()) == CSpec.symbolic().reversed()


@pytest.mark.parametrize("cap", [0, 3, 5])
def test_factorial_dual_closed_form(cap):
    spec = CSpec.symbolic()
    assert dual_sequence(factorial_sequence(spec), cap) == factorial_dual(spec, cap)


def test_monomial_dual():
    dual = dual_sequence(monomial_sequence(), 4)
    assert dual.polynomial(3, ring.u(1)) == ring.u(1) ** 3


def test_custom_dual_pairs_to_identity():
    F = custom_sequence({1: [2, 1], 2: [1, -1, 1], 3: [0, 0, 5, 1]})
    dual = dual_sequence(F, 3)
    assert dual.pairing(F) == ring.identity_matrix(4)


@pytest.mark.parametrize("cap", [1, 3, 5])
def test_factorial_double_dual_closed_form(cap):
    spec = CSpec.symbolic()
    assert double_dual_sequence(factorial_sequence(spec), cap) == factorial_double_dual(spec, cap)


def test_monomial_double_dual():
    double_dual = double_dual_sequence(monomial_sequence(), 4)
    assert double_dual.polynomial(3, v(1)) == v(1) ** 3
    assert double_dual.reduced(3, v(1)) == v(1) ** 2


def test_double_dual_needs_negative_part():
    with pytest.raises(SequenceTooShort):
        double_dual_sequence(custom_sequence({1: [0, 1]}), 2)


def test_custom_double_dual():
    F = custom_sequence({1: [0, 1]}, {1: [0, 1, 3, 9], 2: [0, 0, 1, 5], 3: [0, 0, 0, 1]})
    double_dual = double_dual_sequence(F, 3)
    assert double_dual.pairing(F) == ring.identity_matrix(4)
