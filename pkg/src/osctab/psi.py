"""The operator Psi on Q[x, y], its triangular matrix and its inverse.

    Psi(A)(x, y) = (x+2y+1) A(x, x+2y) - x A(x-1, x+2y-1) - 2y A(x+1, x+2y-1)

Psi maps polynomials of degree <= r bijectively onto themselves. In the
ordered bases

    alpha_{j,i} = x^i y^(j-i),   beta_{j,i} = x^i (x+2y)^(j-i)

listed as (r,r), (r,r-1), ..., (r,0), (r-1,r-1), ..., (0,0), the matrix whose
column c holds the beta-expansion of Psi(alpha_c) is lower triangular, so the
inverse is a forward substitution.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from osctab.polyring import NEG_INF, ONE, X, Y, Poly

Z = X + 2 * Y  # x + 2y

BasisIndex = tuple[int, int]  # (j, i): total degree j, x-exponent i


def psi_apply(a: Poly) -> Poly:
    """Apply Psi directly from its defining substitutions."""
    a = Poly.coerce(a)
    return (
        (Z + 1) * a.substitute(X, Z)
        - X * a.substitute(X - 1, Z - 1)
        - 2 * Y * a.substitute(X + 1, Z - 1)
    )


def basis_order(r: int) -> tuple[BasisIndex, ...]:
    return tuple((j, i) for j in range(r, -1, -1) for i in range(j, -1, -1))


def alpha(j: int, i: int) -> Poly:
    return Poly.monomial(i, j - i)


def beta(j: int, i: int) -> Poly:
    return X**i * Z ** (j - i)


def beta_coordinates(b: Poly) -> dict[BasisIndex, Fraction]:
    """Coordinates of ``b`` in the beta basis, keyed by ``(j, i)``.

    Writing y = (z - x)/2 turns ``b`` into a polynomial in x and z whose
    monomial x^i z^m is exactly beta_{i+m, i}.
    """
    in_xz = b.substitute(X, (Y - X) / 2)
    return {(i + m, i): c for (i, m), c in in_xz.terms.items()}


def from_beta_coordinates(coords: dict[BasisIndex, Any]) -> Poly:
    out = Poly()
    for (j, i), c in coords.items():
        out = out + beta(j, i) * c
    return out


@dataclass(frozen=True)
class PsiMatrix:
    """Matrix of Psi on polynomials of degree <= r, alpha basis -> beta basis."""

    r: int
    basis: tuple[BasisIndex, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[k][k] for k in range(self.dim))

    def is_lower_triangular(self) -> bool:
        return all(
            self.entries[row][col] == 0
            for row in range(self.dim)
            for col in range(row + 1, self.dim)
        )

    def solve(self, rhs: list[Fraction]) -> list[Fraction]:
        """Forward substitution for ``M a = rhs``."""
        a: list[Fraction] = []
        for row in range(self.dim):
            acc = Fraction(rhs[row])
            for col in range(row):
                if self.entries[row][col]:
                    acc -= self.entries[row][col] * a[col]
            a.append(acc / self.entries[row][row])
        return a

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "basis": [{"j": j, "i": i} for j, i in self.basis],
            "rows": [[f"{c.numerator}/{c.denominator}" for c in row] for row in self.entries],
        }


@lru_cache(maxsize=None)
def psi_matrix(r: int) -> PsiMatrix:
    if r < 0:
        raise ValueError("r must be nonnegative")
    basis = basis_order(r)
    position = {b: k for k, b in enumerate(basis)}
    n = len(basis)
    cols = [[Fraction(0)] * n for _ in range(n)]
    for col, (j, i) in enumerate(basis):
        for idx, c in beta_coordinates(psi_apply(alpha(j, i))).items():
            cols[col][position[idx]] = c
    entries = tuple(tuple(cols[col][row] for col in range(n)) for row in range(n))
    return PsiMatrix(r, basis, entries)


def psi_inverse(b: Poly) -> Poly:
    """The unique ``a`` of degree <= deg(b) with ``psi_apply(a) == b``."""
    b = Poly.coerce(b)
    if b.degree == NEG_INF:
        return Poly()
    m = psi_matrix(int(b.degree))
    coords = beta_coordinates(b)
    sol = m.solve([coords.get(idx, Fraction(0)) for idx in m.basis])
    return Poly(((i, j - i), c) for (j, i), c in zip(m.basis, sol))


def q_polynomial(p: Poly) -> Poly:
    """``Psi^{-1}(P(x, x+2y))``; the average weight is ``(k+2n+1) Q(k, k+2n)``."""
    return psi_inverse(Poly.coerce(p).substitute(X, Z))


def _induction_polynomial(p: Poly) -> Poly:
    """``A(x, y) = (x+2y+1) Q(x, x+2y)``, so that ``A(k, n)`` is the average weight."""
    return (Z + ONE) * q_polynomial(p).substitute(X, Z)


def average_weight_formula(k: int, n: int, p: Poly) -> Fraction:
    """Exact average of ``wt_P`` over oscillating tableaux of size-``k`` shape and length ``k+2n``."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    return (k + 2 * n + 1) * q_polynomial(p).evaluate(k, k + 2 * n)
