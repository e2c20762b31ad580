"""Closed-form averages, asymptotic coefficients and leading-coefficient identities."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from osctab.arith import binom
from osctab.errors import CoefficientCheckError, UnknownFormula
from osctab.polyring import X, Y, binomial_poly
from osctab.psi import psi_inverse


def _hz(k: int, n: int, r: int) -> Fraction:
    return Fraction((k + 2 * n + 1) * (3 * k + 2 * n), 6)


def _wt20(k: int, n: int, r: int) -> Fraction:
    return Fraction((k + 2 * n + 1) * (10 * k * k + 4 * n * n + 10 * k * n + 5 * k + 6 * n), 30)


def _wt11(k: int, n: int, r: int) -> Fraction:
    return Fraction((k + 2 * n + 1) * (2 * k * k + 2 * n * n + 5 * k * n + k), 6)


def _empty_binom_x(k: int, n: int, r: int) -> Fraction:
    # normalised by 2^n n! / (2n+1)!, i.e. average / (2n+1)
    return Fraction(2**r * factorial(r) ** 2, factorial(2 * r + 1)) * binom(n, r)


def _binom_i(k: int, n: int, r: int) -> Fraction:
    return Fraction(k + 2 * n + 1, r + 1) * binom(k + 2 * n, r)


def _xr_at_origin(k: int, n: int, r: int) -> Fraction:
    value = _empty_binom_x(0, n, r)
    direct = psi_inverse(binomial_poly("x", r)).evaluate(0, 2 * n)
    if direct != value:
        raise AssertionError(f"Psi^-1(C(x,{r}))(0, {2 * n}) = {direct}, closed form gives {value}")
    return value


def _hook_empty(k: int, n: int, r: int) -> Fraction:
    return Fraction(factorial(2 * r) * 2**r, (2 * r + 3) * factorial(r + 1)) * binom(n, r + 1)


def _content_empty(k: int, n: int, r: int) -> Fraction:
    return Fraction(factorial(r) * 2**r, (2 * r + 1) * (2 * r + 3)) * binom(n, r + 1)


FORMULAS: dict[str, Callable[[int, int, int], Fraction]] = {
    "hz": _hz,
    "wt20": _wt20,
    "wt11": _wt11,
    "empty_binom_x": _empty_binom_x,
    "binom_i": _binom_i,
    "xr_at_origin": _xr_at_origin,
    "hook_empty": _hook_empty,
    "content_empty": _content_empty,
}

# Formulas normalised by 2^n n!/(2n+1)! (average divided by the length plus one).
NORMALISED = frozenset({"empty_binom_x", "xr_at_origin", "hook_empty", "content_empty"})


def closed_form(name: str, k: int = 0, n: int = 0, r: int = 0) -> Fraction:
    """Evaluate a named closed form exactly.

    ``hz``, ``wt20``, ``wt11`` and ``binom_i`` are averages over tableaux of a
    size-``k`` shape and length ``k + 2n``. The ``NORMALISED`` ids concern the
    empty shape and are divided by ``2n + 1``; ``k`` is ignored for them.
    """
    try:
        fn = FORMULAS[name]
    except KeyError:
        raise UnknownFormula(name) from None
    if min(k, n, r) < 0:
        raise ValueError("k, n and r must be nonnegative")
    return fn(k, n, r)


def asymptotic_coefficient(i: int, j: int, regime: str) -> tuple[Fraction, int]:
    """Leading behaviour of the average of ``sum_t |lam^t|^i t^j``.

    ``large_size``: ``coef * k^(i+j+1)`` as ``k -> oo`` with ``n`` fixed.
    ``large_length``: ``coef * (2n)^(i+j+1)`` as ``n -> oo`` with the shape fixed.
    """
    if i < 0 or j < 0:
        raise ValueError("i and j must be nonnegative")
    e = i + j + 1
    if regime == "large_size":
        return Fraction(1, e), e
    if regime == "large_length":
        return Fraction(factorial(i) * factorial(i + j), factorial(2 * i + j + 1)), e
    raise ValueError(f"unknown regime {regime!r}; use 'large_size' or 'large_length'")


@dataclass(frozen=True)
class LeadingCoefficientRow:
    r: int
    i: int
    y_power_coefficient: Fraction
    y_power_expected: Fraction
    top_partial_sum: Fraction
    top_partial_expected: Fraction


def leading_coefficient_checks(r: int) -> list[LeadingCoefficientRow]:
    """Check the two exact coefficient identities of ``Psi^{-1}(x^i (x+2y)^(r-i))``.

    For each ``0 <= i <= r`` with ``A = Psi^{-1}(x^i (x+2y)^(r-i))``:
    the coefficient of ``y^r`` is ``r! i! / (r+i+1)!`` and the coefficients of
    ``x^t y^(r-t)`` for ``t <= i`` sum to ``1 / (r+1)``.
    """
    rows = []
    for i in range(r + 1):
        a = psi_inverse(X**i * (X + 2 * Y) ** (r - i))
        got = a.coefficient(0, r)
        want = Fraction(factorial(r) * factorial(i), factorial(r + i + 1))
        if got != want:
            raise CoefficientCheckError(r, i, f"coefficient of y^{r} is {got}, expected {want}")
        partial = sum((a.coefficient(t, r - t) for t in range(i + 1)), Fraction(0))
        if partial != Fraction(1, r + 1):
            raise CoefficientCheckError(r, i, f"top-degree partial sum is {partial}, expected 1/{r + 1}")
        rows.append(LeadingCoefficientRow(r, i, got, want, partial, Fraction(1, r + 1)))
    return rows
