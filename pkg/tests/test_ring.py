from fractions import Fraction

import pytest

from ninthvar import ring
from ninthvar.errors import NonSquare, NonUnitConstantTerm, NotDivisible
from ninthvar.ring import ONE, ZERO, Family, Poly, Quotient, Series, Var, c, u, x, xbar


def test_laurent_arithmetic():
    assert x(1) * xbar(1) == ONE
    assert (x(1) + x(2)) * (x(1) - x(2)) == x(1) ** 2 - x(2) ** 2
    assert x(1) ** -2 == xbar(1) * xbar(1)
    assert (x(1) - x(1)) == ZERO
    assert not ZERO


def test_rational_coefficients():
    half = (x(1) + c(0)).scaled(Fraction(1, 2))
    assert half + half == x(1) + c(0)
    assert str(half) == "1/2*x1 + 1/2*c0"


def test_canonical_printing():
    assert str(x(1) - c(0) + xbar(1)) == "x1 - c0 + x1^-1"
    assert str(ring.h(1, -1) * ring.h(1, 0)) == "h:1:-1*h:1:0"
    assert str(ZERO) == "0"


@pytest.mark.parametrize("name", ["x1", "y2", "u3", "v1", "t", "c-3", "c0", "h:2:-1"])
def test_variable_names(name):
    assert Var.parse(name).name == name


def test_unknown_variable_name():
    with pytest.raises(ValueError):
        Var.parse("z1")


def test_json_encoding():
    poly = (x(1) - c(-1)).scaled(Fraction(2, 3)) * xbar(2)
    assert Poly.from_json(poly.to_json()) == poly


def test_h_boundary_values():
    assert ring.h(0, 5) == ONE
    assert ring.h(-1, 0) == ZERO
    assert ring.h(2, -1).variables() == {Var(Family.H, 2, -1)}


def test_exact_divide():
    assert ring.exact_divide(x(1) ** 3 - c(0) ** 3, x(1) - c(0)) == x(1) ** 2 + x(1) * c(0) + c(0) ** 2
    assert ring.exact_divide(x(1) - xbar(1), x(1)) == ONE - x(1) ** -2


def test_exact_divide_remainder():
    with pytest.raises(NotDivisible):
        ring.exact_divide(x(1) ** 2 + 1, x(1) - 1)


@pytest.mark.parametrize(
    "num, den, quotient",
    [
        (c(0) * c(1), c(0), c(1)),
        (ring.h(1, 0) * ring.h(2, 0), ring.h(1, 0), ring.h(2, 0)),
        (u(1) ** 3 * x(1) - u(1) * c(2), u(1), u(1) ** 2 * x(1) - c(2)),
        ((c(0) * 2 + x(1) * c(0) ** 2) * xbar(2), c(0) * 4, (x(1) * c(0) + 2).scaled(Fraction(1, 4)) * xbar(2)),
        (x(1) + c(0), x(2), (x(1) + c(0)) * xbar(2)),
    ],
)
def test_exact_divide_by_term(num, den, quotient):
    assert ring.exact_divide(num, den) == quotient


@pytest.mark.parametrize("num, den", [(c(0), c(1)), (c(0) + c(1), c(0)), (ring.h(1, 0), ring.h(1, 1)), (u(1) + 1, u(1))])
def test_exact_divide_by_term_remainder(num, den):
    with pytest.raises(NotDivisible):
        ring.exact_divide(num, den)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_vandermonde_determinant(n):
    values = [x(i) for i in range(1, n + 1)]
    matrix = [[x(i, n - j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    assert ring.determinant(matrix) == ring.vandermonde(values)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_alternant_quotient(n):
    values = [x(i) for i in range(1, n + 1)]
    rows = [[(value - c(0)) ** (n - j) * (value + c(j)) for j in range(n)] for value in values]
    expected = ring.divide_vandermonde(ring.determinant(rows), values)
    assert ring.alternant_quotient(rows, values) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_alternant_quotient_laurent(n):
    values = [x(i) + xbar(i) for i in range(1, n + 1)]
    rows = [[x(i, m) + x(i, -m) - c(m) for m in (n + 1, n - 1, 1)[:n]] for i in range(1, n + 1)]
    expected = ring.divide_vandermonde(ring.determinant(rows), values)
    assert ring.alternant_quotient(rows, values) == expected


def test_alternant_quotient_needs_one_value_per_row():
    with pytest.raises(NonSquare):
        ring.alternant_quotient([[ONE]], [x(1), x(2)])


def test_bareiss_with_zero_pivot():
    diagonal = [ONE, ONE, x(1), c(0), ring.h(1, 0), c(1), u(1), x(2), ring.h(2, -1)]
    matrix = [[diagonal[i] if i == j else ZERO for j in range(9)] for i in range(9)]
    matrix[0], matrix[1] = matrix[1], matrix[0]
    expected = ONE

    for entry in diagonal:
        expected = expected * entry

    assert ring.determinant(matrix) == -expected


@pytest.mark.parametrize("size", [3, 5, 7])
def test_bareiss_agrees_with_cofactors(size):
    # The first pivot is the single term h_(1,0).
    rows = [[ring.h(1 - i + j, 1 - j) for j in range(1, size + 1)] for i in range(1, size + 1)]
    assert ring._bareiss([list(row) for row in rows]) == ring._laplace(rows)


def test_determinant_non_square():
    with pytest.raises(NonSquare):
        ring.determinant([[ONE, ZERO]])


def test_triangular_inverse():
    matrix = [[ONE, ZERO, ZERO], [x(1), ONE, ZERO], [c(0), x(2), Poly.constant(2)]]
    inverse = ring.triangular_inverse(matrix)
    assert ring.matmul(matrix, inverse) == ring.identity_matrix(3)


def test_series_truncation():
    series = Series(ONE + u(1) + u(1) ** 2 + u(1) ** 3, [Family.U], 2)
    assert series == Series(ONE + u(1) + u(1) ** 2, [Family.U], 2)
    assert (series * series).body == ONE + u(1) * 2 + u(1) ** 2 * 3


@pytest.mark.parametrize("cap", [0, 1, 5])
def test_geometric_inverse(cap):
    series = Series(ONE - x(1) * u(1), [Family.U], cap)
    assert ring.geometric_inverse(series) * series == Series(ONE, [Family.U], cap)


@pytest.mark.parametrize("body", [u(1), x(1) + u(1)])
def test_geometric_inverse_needs_unit(body):
    with pytest.raises(NonUnitConstantTerm):
        ring.geometric_inverse(Series(body, [Family.U], 3))


def test_series_families():
    with pytest.raises(ValueError):
        Series(ONE, [Family.X], 3)


def test_quotient_arithmetic():
    q = Quotient.reciprocal(1, [c(0)])
    assert q * (x(1) - c(0)) == ONE
    assert (q + q).num == Poly.constant(2)
    assert (q * (x(1) - c(0))).to_poly() == ONE


def test_quotient_expansion():
    q = Quotient.reciprocal(1, [c(0)])
    assert q.expand(-3) == xbar(1) + c(0) * x(1, -2) + c(0) ** 2 * x(1, -3)


def test_quotient_is_unhashable():
    with pytest.raises(TypeError):
        hash(Quotient(ONE))


def test_substitute_inverse_needs_monomial():
    with pytest.raises(ring.NonInvertibleImage):
        ring.substitute(xbar(1), {Var(Family.X, 1): x(1) + 1})
