import pytest

from ninthvar import ninth, ring
from ninthvar.errors import HypothesisViolated, LengthExceedsN
from ninthvar.partitions import partitions, partitions_inside
from ninthvar.ring import ONE, ZERO, h
from ninthvar.sequences import CSpec


def test_elementary_functions():
    assert ninth.ninth_e(0) == ONE
    assert ninth.ninth_e(-2) == ZERO
    assert ninth.ninth_e(1) == h(1, 0)
    assert ninth.ninth_e(2) == h(1, -1) * h(1, 0) - h(2, -1)
    assert ninth.ninth_e(1, 3) == h(1, 3)


def test_large_elementary_functions():
    # e_r is a sum over the compositions of r, with sign (-1)^(r - parts).
    for r in range(5, 8):
        e = ninth.ninth_e(r)
        assert len(e) == 2 ** (r - 1)
        assert e.coefficient([(ring.Var(ring.Family.H, 1, 1 - j), 1) for j in range(1, r + 1)]) == 1
        assert e.coefficient([(ring.Var(ring.Family.H, r, 1 - r), 1)]) == (-1) ** (r - 1)


def test_phi():
    assert ninth.phi(h(2, -1) * h(1, 0), 2) == h(2, 1) * h(1, 2)
    assert ninth.phi(ninth.phi(h(3, 0), 5), -5) == h(3, 0)
    assert ninth.is_ninth(h(2, 0) + 1)
    assert not ninth.is_ninth(ring.x(1))


def test_skew_schur():
    assert ninth.ninth_skew_schur([2, 1]) == h(1, -1) * h(2, 0) - h(3, -1)
    assert ninth.ninth_skew_schur([2, 1], [2, 1]) == ONE
    assert ninth.ninth_skew_schur([1], [2]) == ZERO
    assert ninth.ninth_skew_schur([2], [1]) == h(1, 1)


def test_skew_schur_length():
    with pytest.raises(LengthExceedsN):
        ninth.ninth_skew_schur([1, 1, 1], (), 2)


def test_small_symplectic_and_orthogonal():
    assert ninth.ninth_sp([], 2) == ONE
    assert ninth.ninth_sp([1], 1) == h(1, 0)
    assert ninth.ninth_sp([1, 1], 2) == h(1, 0) * h(1, -1) - h(2, -1) - 1
    assert ninth.ninth_o([], 2) == ONE
    assert ninth.ninth_o([1], 1) == h(1, 0)
    assert ninth.ninth_o([2], 1) == h(2, 0) - 1


@pytest.mark.parametrize("lam", [list(lam) for lam in partitions_inside([2, 2])])
def test_straight_characters_are_minors(lam):
    assert ninth.ninth_sp(lam, 2, ()) == ninth.ninth_sp(lam, 2)
    assert ninth.ninth_o(lam, 2, ()) == ninth.ninth_o(lam, 2)


def test_shifted_characters():
    assert ninth.ninth_sp([2, 1], 2, shift=1) == ninth.phi(ninth.ninth_sp([2, 1], 2))
    assert ninth.ninth_o([1], 1, [], shift=-1) == h(1, -1)


def test_matrices():
    matrices = ninth.build_nk_matrices(2, 2)
    assert matrices.size == 4

    for name in ninth.PAIRS:
        left, right = matrices.pair(name)

        for i in range(matrices.size):
            assert left[i][i] == ONE
            assert right[i][i] == ONE

    with pytest.raises(ValueError):
        matrices.pair("minus")

    with pytest.raises(ValueError):
        ninth.build_nk_matrices(0, 1)


def test_skew_minor_bounds():
    with pytest.raises(LengthExceedsN):
        ninth.build_nk_matrices(1, 1).skew("plain", [2])


@pytest.mark.parametrize("n, m", [(n, m) for n in range(1, 8) for m in range(1, 9 - n)])
def test_inverse_pairs(n, m):
    assert ninth.check_inverse_pairs(n, m).holds


@pytest.mark.parametrize("pair", ["plain", "plus", "circ"])
@pytest.mark.parametrize("n, m, size", [(1, 2, None), (2, 1, None), (2, 2, None), (2, 2, 1), (2, 2, 3)])
def test_minor_duality(pair, n, m, size):
    assert ninth.check_minor_duality(n, m, pair, size).holds


@pytest.mark.parametrize("family", ["a", "c", "o"])
def test_nagelsbach_kostka(family):
    for lam in partitions_inside([3, 2, 1]):
        assert ninth.check_ninth_nk(family, lam, 3, 3).holds


@pytest.mark.parametrize("lam, mu", [([2, 1], [1]), ([2, 2], [1]), ([3, 1], [2]), ([2, 1], [1, 1])])
def test_nagelsbach_kostka_skew(lam, mu):
    assert ninth.check_ninth_nk("a", lam, 2, 3, mu).holds


@pytest.mark.parametrize(
    "family, lam, n, m, holds",
    [
        ("o", [1], 1, 1, True),
        ("o", [2], 1, 2, False),
        ("c", [1, 1], 2, 2, True),
        ("c", [1, 1, 1], 3, 1, False),
    ],
)
def test_nagelsbach_kostka_literal_convention(family, lam, n, m, holds):
    assert ninth.check_ninth_nk(family, lam, n, m, convention="literal").holds == holds


def test_nagelsbach_kostka_needs_room():
    with pytest.raises(LengthExceedsN):
        ninth.check_ninth_nk("c", [3], 1, 2)


def test_unknown_family():
    with pytest.raises(ValueError):
        ninth.check_ninth_nk("e", [1], 1, 1)


@pytest.mark.parametrize("n", [1, 2])
def test_specialisation_type_a(n):
    for lam in partitions_inside([2] * n):
        assert ninth.check_specialisation("a", lam, n, CSpec.symbolic()).holds


@pytest.mark.parametrize("family", ["c", "b", "d"])
@pytest.mark.parametrize("n", [1, 2])
def test_specialisation(family, n):
    c = CSpec.symbolic(negative_cut=True, zero_c0=family == "d")

    for lam in partitions_inside([2] * n):
        assert ninth.check_specialisation(family, lam, n, c).holds


def test_specialisation_needs_cut():
    with pytest.raises(HypothesisViolated):
        ninth.check_specialisation("c", [1], 1, CSpec.symbolic())


def test_specialise_type_b():
    c = CSpec.symbolic(negative_cut=True)
    value = ninth.specialise(h(1, 0), "b", 1, c)
    assert value == ring.x(1) + ring.xbar(1) + 1 - c[-2] - c[-1] - c[0]


@pytest.mark.parametrize("lam", [list(lam) for lam in partitions(4, min_weight=1)])
def test_omega(lam):
    assert ninth.check_omega(lam).holds


def test_omega_is_an_involution_on_h():
    assert ninth.omega(ninth.omega(h(2, 1))) == h(2, 1)
    assert ninth.omega(h(1, 3)) == h(1, -3)


@pytest.mark.parametrize("lam", [list(lam) for lam in partitions(5, min_weight=1)])
def test_duality(lam):
    assert ninth.check_duality(lam).holds


def test_duality_has_no_small_counterexample():
    assert ninth.duality_witness() is None


@pytest.mark.parametrize("family", ["c", "o"])
def test_phi_equivariance(family):
    for lam in partitions_inside([2, 2]):
        assert ninth.check_phi_equivariance(family, lam, 2).holds


def test_phi_equivariance_type_a():
    with pytest.raises(ValueError):
        ninth.check_phi_equivariance("a", [1], 1)
