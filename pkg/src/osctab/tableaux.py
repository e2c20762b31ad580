"""Oscillating tableaux: counting, enumeration and weight averages.

An oscillating tableau of shape ``lam`` and length ``l`` is a walk
``(lam^0 = (), lam^1, ..., lam^l = lam)`` in Young's lattice where each step
adds or removes one box.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Callable, Iterator, Sequence, Union

from osctab.arith import binom, double_factorial
from osctab.errors import EmptySetError, ValidationError
from osctab.partitions import (
    EMPTY,
    Partition,
    cells,
    down_neighbors,
    make_partition,
    neighbors,
    syt_count,
    up_neighbors,
)
from osctab.polyring import Poly


@dataclass(frozen=True)
class OscillatingTableau:
    steps: tuple[Partition, ...]

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    @property
    def shape(self) -> Partition:
        return self.steps[-1]

    def sizes(self) -> tuple[int, ...]:
        return tuple(sum(p) for p in self.steps)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.steps]


def make_tableau(steps: Sequence[Sequence[int]]) -> OscillatingTableau:
    """Validate a sequence of partitions as an oscillating tableau."""
    parts = tuple(make_partition(s) for s in steps)
    if not parts:
        raise ValidationError("an oscillating tableau has at least one partition")
    if parts[0] != EMPTY:
        raise ValidationError("an oscillating tableau must start at the empty partition")
    for a, b in zip(parts, parts[1:]):
        if b not in up_neighbors(a) and b not in down_neighbors(a):
            raise ValidationError(f"{list(a)} -> {list(b)} is not a one-box step")
    return OscillatingTableau(parts)


# counting


def _reachable(size: int, steps: int) -> bool:
    return steps >= size and (steps - size) % 2 == 0


def count_oscillating(lam: Partition, l: int) -> int:
    """``C(k+2n, k) (2n-1)!! f_lam`` when ``l = k + 2n``, else 0."""
    k = sum(lam)
    if l < 0 or not _reachable(k, l):
        return 0
    n = (l - k) // 2
    return binom(l, k) * double_factorial(2 * n - 1) * syt_count(lam)


@lru_cache(maxsize=None)
def _walks_dp(mu: Partition, t: int) -> int:
    if t == 0:
        return 1 if not mu else 0
    return sum(_walks_dp(nu, t - 1) for nu in neighbors(mu) if _reachable(sum(nu), t - 1))


def count_oscillating_dp(lam: Partition, l: int) -> int:
    """Count walks of length ``l`` from the empty partition to ``lam`` by memoised DP."""
    if l < 0 or not _reachable(sum(lam), l):
        return 0
    return _walks_dp(lam, l)


# enumeration


def _backward(mu: Partition, t: int, suffix: list[Partition]) -> Iterator[tuple[Partition, ...]]:
    # suffix holds the walk from mu to the target, reversed
    if t == 0:
        yield tuple(reversed(suffix))
        return
    for nu in neighbors(mu):
        if _reachable(sum(nu), t - 1):
            suffix.append(nu)
            yield from _backward(nu, t - 1, suffix)
            suffix.pop()


def enumerate_oscillating(
    lam: Partition, l: int, _tail: tuple[Partition, ...] = ()
) -> Iterator[OscillatingTableau]:
    """Yield every oscillating tableau of shape ``lam`` and length ``l`` once.

    Walks are built backwards from ``lam``; states that cannot reach the empty
    partition in the remaining number of steps are pruned.
    """
    if l < 0 or not _reachable(sum(lam), l):
        return
    suffix = list(reversed(_tail)) + [lam]
    for steps in _backward(lam, l, suffix):
        yield OscillatingTableau(steps)


def split_subtrees(lam: Partition, l: int) -> list[tuple[Partition, int, tuple[Partition, ...]]]:
    """Partition the enumeration by the second-to-last partition.

    Each item ``(mu, l - 1, (lam,))`` enumerates a disjoint subtree with
    ``enumerate_oscillating(mu, l - 1, _tail=(lam,))``.
    """
    if l <= 0 or not _reachable(sum(lam), l):
        return []
    return [(mu, l - 1, (lam,)) for mu in neighbors(lam) if _reachable(sum(mu), l - 1)]


# weights


@dataclass(frozen=True)
class WeightSpec:
    """``wt_P(T) = sum_i P(|lam^i|, i)`` for a polynomial ``P``."""

    poly: Poly

    def __call__(self, t: OscillatingTableau) -> Fraction:
        return weight(t, self)


@dataclass(frozen=True)
class HookWeight:
    """``sum_i sum_{box in lam^i} prod_{1<=j<=r} (h^2 - j^2)``."""

    r: int

    def __call__(self, t: OscillatingTableau) -> int:
        return hook_product_weight(t, self.r)


@dataclass(frozen=True)
class ContentWeight:
    """``sum_i sum_{box in lam^i} prod_{0<=j<=r-1} (c^2 - j^2)``."""

    r: int

    def __call__(self, t: OscillatingTableau) -> int:
        return content_product_weight(t, self.r)


WeightFunction = Union[WeightSpec, HookWeight, ContentWeight, Callable[[OscillatingTableau], Fraction]]


@lru_cache(maxsize=256)
def _denominator(p: Poly) -> int:
    return lcm(*(c.denominator for c in p.terms.values())) if p else 1


@lru_cache(maxsize=65536)
def _scaled_at(p: Poly, s: int, i: int) -> int:
    # P(s, i) times the common denominator of P's coefficients: an integer
    v = p.evaluate(s, i) * _denominator(p)
    assert v.denominator == 1
    return v.numerator


def weight(t: OscillatingTableau, w: WeightSpec | Poly) -> Fraction:
    p = w.poly if isinstance(w, WeightSpec) else w
    total = sum(_scaled_at(p, sum(lam), i) for i, lam in enumerate(t.steps))
    return Fraction(total, _denominator(p))


@lru_cache(maxsize=None)
def _hook_sum(lam: Partition, r: int) -> int:
    return sum(prod(c.hook**2 - j * j for j in range(1, r + 1)) for c in cells(lam))


@lru_cache(maxsize=None)
def _content_sum(lam: Partition, r: int) -> int:
    return sum(prod(c.content**2 - j * j for j in range(r)) for c in cells(lam))


def hook_product_weight(t: OscillatingTableau, r: int) -> int:
    return sum(_hook_sum(lam, r) for lam in t.steps)


def content_product_weight(t: OscillatingTableau, r: int) -> int:
    return sum(_content_sum(lam, r) for lam in t.steps)


# averages


def _subtree_sum(args) -> tuple[Fraction, int]:
    mu, t, tail, w = args
    total, count = Fraction(0), 0
    for tab in enumerate_oscillating(mu, t, tail):
        total += w(tab)
        count += 1
    return total, count


def weight_sum_bruteforce(lam: Partition, l: int, w: WeightFunction, workers: int = 1) -> tuple[Fraction, int]:
    """Exact ``(sum of weights, number of tableaux)`` by enumeration.

    With ``workers > 1`` the subtrees from :func:`split_subtrees` are summed in
    separate processes; ``w`` must then be picklable.
    """
    if workers > 1:
        jobs = [(mu, t, tail, w) for mu, t, tail in split_subtrees(lam, l)]
        if len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
                parts = list(pool.map(_subtree_sum, jobs))
            return sum((p[0] for p in parts), Fraction(0)), sum(p[1] for p in parts)
    return _subtree_sum((lam, l, (), w))


def average_weight_bruteforce(lam: Partition, l: int, w: WeightFunction, workers: int | None = None) -> Fraction:
    """Exact mean of ``w`` over all oscillating tableaux of shape ``lam`` and length ``l``."""
    if count_oscillating(lam, l) == 0:
        raise EmptySetError(f"no oscillating tableaux of shape {list(lam)} and length {l}")
    if isinstance(w, Poly):
        w = WeightSpec(w)
    if workers is None:
        workers = int(os.environ.get("OSCTAB_WORKERS", "1"))
    total, count = weight_sum_bruteforce(lam, l, w, workers)
    return Fraction(total) / count
