# # Partitions, signatures and patterns

"""This module defines the combinatorial objects that index characters:
partitions (dominant weights of types C, B and D), signatures (dominant weights
of type A, possibly with negative parts), and Gelfand-Tsetlin patterns.

```python
>>> Partition([3, 1]).conjugate()
Partition(2, 1, 1)
>>> Signature([1, 0, -2]).split()
(Partition(1), Partition(2))

```
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import SplitMismatch

# ## The `Partition` class


class Partition:
    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()) -> None:
        parts = tuple(int(p) for p in parts)

        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Invalid partition: {parts}")

        self.parts: Tuple[int, ...] = tuple(p for p in parts if p)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts

        if isinstance(other, tuple):
            return self.parts == Partition(other).parts

        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self.parts))})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    # #### `Partition.part`

    # Parts are 1-based here, as in the formulas, and vanish beyond the length.

    def part(self, i: int) -> int:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> Tuple[int, ...]:
        if len(self.parts) > n:
            raise ValueError(f"Partition {self} has more than {n} parts")

        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self) -> Partition:
        if not self.parts:
            return self

        return Partition(
            sum(1 for p in self.parts if p >= k) for k in range(1, self.parts[0] + 1)
        )

    def contains(self, other: Partition) -> bool:
        other = Partition(other)
        return len(other) <= len(self) and all(
            a >= b for a, b in zip(self.parts, other.parts)
        )

    # #### `Partition.frobenius`

    # Frobenius coordinates `(α|β)` with `α_i = λ_i - i` and `β_i = λ'_i - i`
    # over the Durfee square.

    def frobenius(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        conjugate = self.conjugate()
        rank = sum(1 for i, p in enumerate(self.parts, 1) if p >= i)
        alpha = tuple(self.part(i) - i for i in range(1, rank + 1))
        beta = tuple(conjugate.part(i) - i for i in range(1, rank + 1))
        return alpha, beta

    @classmethod
    def hook(cls, arm: int, leg: int) -> Partition:
        """The hook `(arm|leg) = (arm + 1, 1^leg)`."""
        return cls((arm + 1,) + (1,) * leg)

    def box_complement(self, rows: int, cols: int) -> Partition:
        """The partition `(rows - λ'_cols, ..., rows - λ'_1)` for `λ` inside `(cols^rows)`."""
        conjugate = self.conjugate().padded(cols)
        return Partition(rows - conjugate[cols - 1 - k] for k in range(cols))


# ## The `Signature` class


class Signature:
    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]) -> None:
        parts = tuple(int(p) for p in parts)

        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Invalid signature: {parts}")

        self.parts: Tuple[int, ...] = parts

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __eq__(self, other) -> bool:
        if isinstance(other, Signature):
            return self.parts == other.parts

        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Signature({', '.join(map(str, self.parts))})"

    @property
    def is_partition(self) -> bool:
        return all(p >= 0 for p in self.parts)

    def shifted(self, k: int) -> Signature:
        return Signature(p + k for p in self.parts)

    # #### `Signature.split`

    # A signature decomposes as `(μ_1, ..., μ_p, -ν_q, ..., -ν_1)`. By default
    # `q` is the number of strictly negative parts, so zero parts belong to `μ`.

    def split(self, q: Optional[int] = None) -> Tuple[Partition, Partition]:
        n = len(self.parts)

        if q is None:
            q = sum(1 for p in self.parts if p < 0)

        if not 0 <= q <= n:
            raise SplitMismatch(f"Cannot split {self} with q={q}")

        head, tail = self.parts[: n - q], self.parts[n - q :]

        if any(p < 0 for p in head) or any(p > 0 for p in tail):
            raise SplitMismatch(f"Cannot split {self} with q={q}")

        return Partition(head), Partition(-p for p in reversed(tail))


# ## Enumeration

# Partitions are enumerated by weight, and reverse-lexicographically within each weight.


def partitions(
    max_weight: int,
    max_length: Optional[int] = None,
    max_part: Optional[int] = None,
    min_weight: int = 0,
) -> Iterator[Partition]:
    for weight in range(min_weight, max_weight + 1):
        for parts in _partitions_of(weight, max_part if max_part is not None else weight, max_length):
            yield Partition(parts)


def _partitions_of(weight: int, largest: int, length: Optional[int]) -> Iterator[Tuple[int, ...]]:
    if weight == 0:
        yield ()
        return

    if length == 0:
        return

    for first in range(min(weight, largest), 0, -1):
        rest = None if length is None else length - 1

        for tail in _partitions_of(weight - first, first, rest):
            yield (first,) + tail


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most `rows` parts, each at most `cols`."""
    return partitions(rows * cols, max_length=rows, max_part=cols)


def partitions_inside(shape: Sequence[int]) -> Iterator[Partition]:
    """All partitions contained in `shape`, by weight."""
    shape = Partition(shape)
    box = partitions(shape.weight, max_length=len(shape), max_part=shape.part(1))
    return (p for p in box if shape.contains(p))


def signatures(n: int, low: int, high: int) -> Iterator[Signature]:
    """All signatures of length `n` with parts in `[low, high]`."""
    for parts in itertools.combinations_with_replacement(range(high, low - 1, -1), n):
        yield Signature(parts)


def parse_parts(text: str) -> Tuple[int, ...]:
    """Parses a comma-separated list of integers, e.g. `"2,1,-1"`."""
    text = text.strip()

    if not text:
        return ()

    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"Invalid list of parts: {text!r}")


# ## Gelfand-Tsetlin patterns

# A pattern is stored as its rows from the shortest (row 1, one entry)
# to the top row `n`, which is the signature itself. Consecutive rows interlace:
# `G[i+1][j] >= G[i][j] >= G[i+1][j+1]`.


class GTPattern:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]) -> None:
        self.rows: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in rows)

        for i, row in enumerate(self.rows, 1):
            if len(row) != i:
                raise ValueError(f"Row {i} of a pattern must have {i} entries")

        for lower, upper in zip(self.rows, self.rows[1:]):
            for j, value in enumerate(lower):
                if not upper[j] >= value >= upper[j + 1]:
                    raise ValueError(f"Rows {upper} and {lower} do not interlace")

    def __call__(self, i: int, j: int) -> int:
        """The entry `G_(i,j)`, 1-based."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, GTPattern) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"GTPattern({list(map(list, self.rows))})"

    @property
    def size(self) -> int:
        return len(self.rows)


def gt_patterns(top: Sequence[int]) -> Iterator[GTPattern]:
    """All integral patterns with the given top row.

    ```python
    >>> len(list(gt_patterns([1, 0])))
    2

    ```
    """
    top = tuple(Signature(top))

    if not top:
        return

    for rows in _lower_rows(top):
        yield GTPattern(rows + [top])


def _lower_rows(row: Tuple[int, ...]) -> Iterator[List[Tuple[int, ...]]]:
    if len(row) == 1:
        yield []
        return

    ranges = [range(row[j + 1], row[j] + 1) for j in range(len(row) - 1)]

    for below in itertools.product(*ranges):
        for rows in _lower_rows(below):
            yield rows + [below]
