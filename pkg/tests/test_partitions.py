import pytest

from ninthvar.errors import SplitMismatch
from ninthvar.partitions import (
    GTPattern,
    Partition,
    Signature,
    gt_patterns,
    parse_parts,
    partitions,
    partitions_in_box,
    partitions_inside,
    signatures,
)


def test_partition_normalizes_zeros():
    assert Partition([2, 1, 0, 0]) == Partition([2, 1])
    assert Partition([2, 1]).padded(4) == (2, 1, 0, 0)
    assert Partition([2, 1]).part(3) == 0


@pytest.mark.parametrize("parts", [[1, 2], [2, -1]])
def test_invalid_partitions(parts):
    with pytest.raises(ValueError):
        Partition(parts)


def test_conjugate_is_an_involution():
    for lam in partitions(7):
        assert lam.conjugate().conjugate() == lam
        assert lam.conjugate().weight == lam.weight


@pytest.mark.parametrize(
    "lam, alpha, beta",
    [
        ([3, 1], (2,), (1,)),
        ([2, 2], (1, 0), (1, 0)),
        ([1, 1, 1], (0,), (2,)),
        ([], (), ()),
    ],
)
def test_frobenius(lam, alpha, beta):
    assert Partition(lam).frobenius() == (alpha, beta)


def test_hook():
    assert Partition.hook(2, 1) == Partition([3, 1])


@pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_box_complement(n, m):
    for lam in partitions_in_box(n, m):
        complement = lam.box_complement(n, m)
        assert lam.weight + complement.weight == n * m
        assert complement.box_complement(m, n) == lam


@pytest.mark.parametrize(
    "count, expected",
    [
        (lambda: partitions(5), 19),
        (lambda: partitions_in_box(2, 2), 6),
        (lambda: partitions_inside([2, 1]), 5),
        (lambda: partitions(4, max_length=2), 1 + 1 + 2 + 2 + 3),
        (lambda: signatures(2, -1, 1), 6),
    ],
)
def test_enumeration_sizes(count, expected):
    assert len(list(count())) == expected


@pytest.mark.parametrize(
    "parts, q, mu, nu",
    [
        ([1, 0, -2], None, [1], [2]),
        ([0, 0], None, [], []),
        ([0, 0], 2, [], []),
        ([-1, -3], None, [], [3, 1]),
    ],
)
def test_signature_split(parts, q, mu, nu):
    assert Signature(parts).split(q) == (Partition(mu), Partition(nu))


@pytest.mark.parametrize("parts, q", [([1, 0], 2), ([0, -1], 0), ([1], 3)])
def test_signature_split_mismatch(parts, q):
    with pytest.raises(SplitMismatch):
        Signature(parts).split(q)


def test_signature_order():
    with pytest.raises(ValueError):
        Signature([0, 1])

    assert Signature([0, -1]).shifted(2) == Signature([2, 1])


@pytest.mark.parametrize(
    "top, count",
    [
        ([1, 0], 2),
        ([2, 0], 3),
        ([1, 0, 0], 3),
        ([1, 1, 0], 3),
        ([2, 1, 0], 8),
        ([0, -1], 2),
        ([3], 1),
    ],
)
def test_gt_pattern_counts(top, count):
    assert len(list(gt_patterns(top))) == count


def test_gt_pattern_interlacing():
    pattern = GTPattern([[1], [2, 0]])
    assert pattern(2, 1) == 2
    assert pattern.size == 2

    with pytest.raises(ValueError):
        GTPattern([[3], [2, 0]])


def test_parse_parts():
    assert parse_parts("2,1,-1") == (2, 1, -1)
    assert parse_parts(" ") == ()

    with pytest.raises(ValueError):
        parse_parts("2,a")
