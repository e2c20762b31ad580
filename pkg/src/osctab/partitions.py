"""Integer partitions as nodes of Young's lattice.

A :class:`Partition` is a tuple subclass holding weakly decreasing positive
parts, so structural equality is mathematical equality and partitions can be
used directly as dict keys and memo keys.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from osctab.errors import ValidationError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; ``()`` is the empty partition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        return make_partition(parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        # Skips validation; callers guarantee canonical form.
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}" if self else "Partition()"


EMPTY = Partition._trusted(())


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical :class:`Partition`.

    Trailing zeros are stripped; any remaining zero, negative part or
    increase raises :class:`ValidationError`.
    """
    seq = list(parts)
    for p in seq:
        if isinstance(p, bool) or not isinstance(p, int):
            raise ValidationError(f"partition parts must be integers, got {p!r}")
    while seq and seq[-1] == 0:
        seq.pop()
    for idx, p in enumerate(seq):
        if p < 1:
            raise ValidationError(f"part {idx} is {p}; parts must be positive")
        if idx and p > seq[idx - 1]:
            raise ValidationError(f"parts must be weakly decreasing: {seq}")
    return Partition._trusted(seq)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return EMPTY
    return Partition._trusted(sum(1 for p in lam if p > c) for c in range(lam[0]))


@dataclass(frozen=True)
class Cell:
    row: int
    col: int
    hook: int
    content: int


def cells(lam: Partition) -> list[Cell]:
    """All boxes of ``lam`` in row-major order (1-based coordinates)."""
    conj = conjugate(lam)
    out = []
    for r, length in enumerate(lam, start=1):
        for c in range(1, length + 1):
            arm = length - c
            leg = conj[c - 1] - r
            out.append(Cell(r, c, arm + leg + 1, c - r))
    return out


@lru_cache(maxsize=None)
def hook_product(lam: Partition) -> int:
    return prod(cell.hook for cell in cells(lam))


@lru_cache(maxsize=None)
def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` by the hook length formula."""
    n = sum(lam)
    q, rem = divmod(factorial(n), hook_product(lam))
    assert rem == 0, lam
    return q


@lru_cache(maxsize=None)
def up_neighbors(lam: Partition) -> tuple[Partition, ...]:
    """Partitions obtained by adding one box, in lexicographic order."""
    out = []
    parts = list(lam)
    for i in range(len(parts)):
        if i == 0 or parts[i - 1] > parts[i]:
            parts[i] += 1
            out.append(Partition._trusted(parts))
            parts[i] -= 1
    out.append(Partition._trusted(parts + [1]))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def down_neighbors(lam: Partition) -> tuple[Partition, ...]:
    """Partitions obtained by removing one corner box, in lexicographic order."""
    out = []
    parts = list(lam)
    for i in range(len(parts)):
        if i == len(parts) - 1 or parts[i] > parts[i + 1]:
            parts[i] -= 1
            out.append(Partition._trusted(p for p in parts if p))
            parts[i] += 1
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def neighbors(lam: Partition) -> tuple[Partition, ...]:
    """Union of up and down neighbours, lexicographically sorted."""
    return tuple(sorted(up_neighbors(lam) + down_neighbors(lam)))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition._trusted((first,) + rest)


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    for n in range(max_size + 1):
        yield from partitions_of(n)
