from fractions import Fraction

import pytest

from ninthvar import ring
from ninthvar.characters import (
    _w_coefficients,
    character,
    complete,
    double_dual_schur,
    dual_schur,
    even_orthogonal,
    even_orthogonal_alternant,
    from_w,
    gt_character,
    odd_orthogonal,
    one_row,
    schur,
    symplectic,
    w_character,
    weyl_character,
    weyl_denominator,
    weyl_denominator_product,
)
from ninthvar.errors import CapTooSmall, ComputationError, LengthExceedsN, NegativePartsUnsupported
from ninthvar.partitions import partitions
from ninthvar.ring import ONE, ZERO, Quotient, c, u, v, x, xbar
from ninthvar.sequences import (
    CSpec,
    custom_sequence,
    dual_sequence,
    factorial_double_dual,
    factorial_sequence,
    monomial_sequence,
)

F = factorial_sequence()


def _small(n, weight):
    return [list(lam) for lam in partitions(weight, max_length=n)]


@pytest.mark.parametrize("family", ["a", "c", "b", "d"])
@pytest.mark.parametrize("n, weight", [(1, 3), (2, 3), (3, 2)])
def test_classical_limit(family, n, weight):
    zeros = factorial_sequence(CSpec.zeros())

    for lam in _small(n, weight):
        expected = weyl_character(family, lam, n)
        assert character(family, monomial_sequence(), lam, n) == expected
        assert character(family, zeros, lam, n) == expected


@pytest.mark.parametrize("family", ["a", "c", "b", "d"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_weyl_denominator_factorizes(family, n):
    assert weyl_denominator(family, n) == weyl_denominator_product(family, n)


@pytest.mark.parametrize("family", ["a", "c", "b", "d"])
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_empty_partition_is_one(family, n):
    assert character(family, F, [], n) == ONE


def test_small_values():
    assert schur(F, [1], 2) == x(1) + x(2) - c(0) - c(1)
    assert symplectic(F, [1], 1) == x(1) - c(0) + xbar(1)
    assert even_orthogonal(F, [1], 1) == x(1) - c(0) * 2 + xbar(1)
    assert odd_orthogonal(monomial_sequence(), [1], 1) == x(1) + 1 + xbar(1)


def test_schur_of_signature_is_a_quotient():
    value = schur(F, [0, -1], 2)
    assert isinstance(value, Quotient)
    assert value * (x(1) - c(-1)) * (x(2) - c(-1)) == x(1) + x(2) - c(0) - c(-1)


def test_schur_of_signature_needs_a_negative_part():
    with pytest.raises(NegativePartsUnsupported):
        schur(custom_sequence({1: [1, 1]}), [0, -1], 2)


def test_truncated_schur_matches_quotient():
    floor = -4
    assert schur(F, [0, -1], 2, floor=floor) == schur(F, [0, -1], 2).expand(floor)


def test_length_exceeds_n():
    with pytest.raises(LengthExceedsN):
        schur(F, [1, 1, 1], 2)

    with pytest.raises(LengthExceedsN):
        symplectic(F, [1, 1], 1)


def test_unknown_family():
    with pytest.raises(ValueError):
        character("e", F, [1], 1)


def test_explicit_variables():
    assert schur(F, [1], 1, variables=[3]) == x(3) - c(0)


@pytest.mark.parametrize(
    "kind, k, n, expected",
    [
        ("h", 0, 2, ONE),
        ("h", -1, 2, ZERO),
        ("e", 3, 2, ZERO),
        ("h", 1, 1, x(1) - c(0)),
        ("e", 2, 2, (x(1) - c(0)) * (x(2) - c(0))),
    ],
)
def test_one_row(kind, k, n, expected):
    assert one_row(kind, k, F, n) == expected


def test_one_row_g():
    assert one_row("g", 0, F, 1) == Quotient.reciprocal(1, [c(-1)])

    with pytest.raises(NegativePartsUnsupported):
        one_row("g", 0, custom_sequence({1: [0, 1]}), 1)

    with pytest.raises(ValueError):
        one_row("g", 0, F, 1, family="c")


def test_complete():
    spec = CSpec.symbolic()
    assert complete(2, [x(1)], spec) == (x(1) - c(0)) * (x(1) - c(1))
    assert complete(1, [x(1), xbar(1), ONE], spec) == x(1) + xbar(1) + 1 - c(0) - c(1) - c(2)
    assert complete(3, [], spec) == ZERO


@pytest.mark.parametrize("n, k", [(1, 2), (2, 1), (2, 2), (3, 2)])
def test_complete_is_one_row_schur(n, k):
    xs = [x(i) for i in range(1, n + 1)]
    assert complete(k, xs, CSpec.symbolic()) == schur(F, [k], n)


@pytest.mark.parametrize("lam, n", [([1, 0], 2), ([2, 1], 2), ([1, -1], 2), ([0, -2], 2), ([1, 0, 0], 3)])
def test_gt_character(lam, n):
    assert gt_character(lam, n, CSpec.symbolic()) == schur(F, lam, n)


def test_gt_literal_convention_differs():
    literal = gt_character([1, 0], 2, CSpec.symbolic(), convention="literal")
    assert literal != schur(F, [1, 0], 2)


def test_dual_schur_of_monomial_sequence():
    dual = dual_sequence(monomial_sequence(), 6)
    assert dual_schur(dual, [1], 2, 3).body == u(1) + u(2)


def test_dual_schur_cap_too_small():
    with pytest.raises(CapTooSmall):
        dual_schur(dual_sequence(F, 2), [1], 2, 3)


def test_double_dual_schur():
    double_dual = factorial_double_dual(CSpec.symbolic(), 4)
    assert double_dual_schur(double_dual, [], 1) == ONE
    assert double_dual_schur(double_dual, [1], 1) == v(1) - c(-1)

    with pytest.raises(CapTooSmall):
        double_dual_schur(double_dual, [4], 1)


def test_symplectic_characters_are_symmetric():
    value = symplectic(F, [2, 1], 2)
    swapped = ring.substitute(value, {ring.Var(ring.Family.X, 1): x(2), ring.Var(ring.Family.X, 2): x(1)})
    inverted = ring.substitute(value, {ring.Var(ring.Family.X, 1): xbar(1)})
    assert swapped == value
    assert inverted == value



@pytest.mark.parametrize("lam", [[], [1], [2, 1], [3, 1], [2, 2]])
def test_symplectic_matches_divided_alternant(lam):
    indices = [(lam + [0, 0])[0] + 1, (lam + [0, 0])[1]]
    rows = [
        [ring.exact_divide(x(i) * F.evaluate(m, x(i)) - xbar(i) * F.evaluate(m, xbar(i)), x(i) - xbar(i)) for m in indices]
        for i in (1, 2)
    ]
    assert symplectic(F, lam, 2) == ring.alternant_quotient(rows, [x(1) + xbar(1), x(2) + xbar(2)])


@pytest.mark.parametrize("lam", [[], [1], [2, 1], [3, 1], [2, 2]])
def test_even_orthogonal_matches_raw_alternant(lam):
    eta = Fraction(1, 2) if len(lam) < 2 else 1
    w1, w2 = x(1) + xbar(1), x(2) + xbar(2)
    assert even_orthogonal(F, lam, 2) * (w1 - w2) == even_orthogonal_alternant(F, lam, 2).scaled(eta)


def test_w_coefficients():
    assert _w_coefficients(x(1) - c(0) + xbar(1)) == x(1) - c(0)
    assert _w_coefficients(c(1)) == c(1)

    with pytest.raises(ComputationError):
        _w_coefficients(x(1))


@pytest.mark.parametrize("family", ["c", "b", "d"])
@pytest.mark.parametrize("lam", [[], [1], [2], [1, 1], [2, 1], [3, 2]])
def test_w_character_expands_to_character(family, lam):
    assert from_w(w_character(family, F, lam, 2)) == character(family, F, lam, 2)
