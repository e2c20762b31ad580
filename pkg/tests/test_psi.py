from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import polys, rationals
from osctab.partitions import partitions_up_to
from osctab.polyring import ONE, X, Y, ZERO, Poly, binomial_poly, parse_poly
from osctab.psi import (
    _induction_polynomial,
    alpha,
    average_weight_formula,
    basis_order,
    beta,
    beta_coordinates,
    from_beta_coordinates,
    psi_apply,
    psi_inverse,
    psi_matrix,
    q_polynomial,
)
from osctab.tableaux import average_weight_bruteforce

sx, sy = sympy.symbols("x y")


def to_sympy(p):
    return sum((sympy.Rational(c.numerator, c.denominator) * sx**i * sy**j for (i, j), c in p.terms.items()), sympy.Integer(0))


def from_sympy(expr):
    poly = sympy.Poly(sympy.expand(expr), sx, sy)
    return Poly({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


def sympy_psi(expr):
    z = sx + 2 * sy
    sub = lambda a, b: expr.subs({sx: a, sy: b}, simultaneous=True)
    return sympy.expand((z + 1) * sub(sx, z) - sx * sub(sx - 1, z - 1) - 2 * sy * sub(sx + 1, z - 1))


def sympy_inverse(p):
    """Solve for the preimage in the plain monomial basis, as the reference program does."""
    d = 0 if p.is_zero() else p.degree
    monos = [(i, j) for i in range(d + 1) for j in range(d + 1) if i + j <= d]
    unknowns = sympy.symbols(f"c0:{len(monos)}")
    guess = sum(u * sx**i * sy**j for u, (i, j) in zip(unknowns, monos))
    residual = sympy.Poly(sympy.expand(sympy_psi(guess) - to_sympy(p)), sx, sy)
    sol = sympy.solve(residual.coeffs(), unknowns, dict=True)[0]
    return from_sympy(guess.subs(sol))


GOLDEN = {
    "x": "2*x - 2*y",
    "y": "2*x + 4*y",
    "x*y": "3*x^2 + 4*x*y - 4*y^2 - x + 2*y",
    "x^2": "3*x^2 - 4*x*y - x - 2*y",
    "y^2": "3*x^2 + 12*x*y + 12*y^2 - x - 2*y",
}

M2 = [
    [5, 0, 0, 0, 0, 0],
    [-2, 4, 0, 0, 0, 0],
    [0, -1, 3, 0, 0, 0],
    [0, -2, 0, 3, 0, 0],
    [-1, 1, -1, -1, 2, 0],
    [0, 0, 0, 0, 0, 1],
]


@pytest.mark.parametrize("src, img", GOLDEN.items())
def test_psi_golden(src, img):
    assert str(psi_apply(parse_poly(src))) == img


def test_psi_of_constant():
    assert psi_apply(Poly.const(Fraction(7, 3))) == Fraction(7, 3)
    assert psi_apply(ZERO) == ZERO


@pytest.mark.parametrize("r", range(5))
def test_psi_of_binomial_in_y(r):
    assert psi_apply(binomial_poly("y", r)) == (r + 1) * binomial_poly(X + 2 * Y, r)
    assert psi_inverse(binomial_poly(X + 2 * Y, r)) == binomial_poly("y", r) / (r + 1)


@given(polys(max_degree=4))
@settings(max_examples=25, deadline=None)
def test_psi_matches_sympy(a):
    assert psi_apply(a) == from_sympy(sympy_psi(to_sympy(a)))


def test_matrix_r0_r1_r2():
    assert psi_matrix(0).entries == ((1,),)
    assert psi_matrix(1).diagonal() == (3, 2, 1)
    assert [list(row) for row in psi_matrix(2).entries] == M2


def test_basis_order():
    assert basis_order(2) == ((2, 2), (2, 1), (2, 0), (1, 1), (1, 0), (0, 0))
    assert alpha(2, 1) == X * Y and beta(2, 1) == X * (X + 2 * Y)


@pytest.mark.parametrize("r", range(7))
def test_matrix_structure(r):
    m = psi_matrix(r)
    assert m.dim == (r + 1) * (r + 2) // 2
    assert m.is_lower_triangular()
    expected_diag = [r + j + i + 1 - r for j in range(r, -1, -1) for i in range(j, -1, -1)]
    # diagonal entry for alpha_{j,i} is j + i + 1
    assert list(m.diagonal()) == [j + i + 1 for j, i in m.basis] == expected_diag


@pytest.mark.parametrize("r", range(5))
def test_matrix_columns_reproduce_psi(r):
    m = psi_matrix(r)
    for col, (j, i) in enumerate(m.basis):
        image = from_beta_coordinates({idx: m.entries[row][col] for row, idx in enumerate(m.basis)})
        assert image == psi_apply(alpha(j, i))


@given(polys())
def test_beta_coordinates_round_trip(a):
    assert from_beta_coordinates(beta_coordinates(a)) == a


def test_inverse_examples():
    assert str(psi_inverse(parse_poly("x^2+2*x*y"))) == "1/4*x*y + 1/12*y^2 + 1/6*x"
    assert psi_inverse(X**2) == (6 * X**2 + 3 * X * Y + Y**2 + 2 * X + 3 * Y) / 30
    assert psi_inverse(ONE) == ONE
    assert psi_inverse(ZERO) == ZERO


@given(polys(max_degree=3, max_terms=4))
@settings(max_examples=20, deadline=None)
def test_inverse_matches_monomial_basis_solve(b):
    assert psi_inverse(b) == sympy_inverse(b)


@given(polys(), polys(), rationals, rationals)
@settings(deadline=None)
def test_linearity(a, b, s, t):
    assert psi_apply(s * a + t * b) == s * psi_apply(a) + t * psi_apply(b)


@given(polys())
@settings(deadline=None)
def test_round_trip_and_preservation(a):
    img = psi_apply(a)
    assert psi_inverse(img) == a
    assert psi_apply(psi_inverse(a)) == a
    assert img.degree == a.degree
    assert img.constant_term == a.constant_term


def test_q_polynomial_examples():
    # Psi(x) = 2x - 2y and Psi(y) = 2x + 4y give Psi^-1(x) = x/3 + y/6
    assert q_polynomial(X) == (2 * X + Y) / 6
    assert q_polynomial(X * Y) == (3 * X * Y + Y**2 + 2 * X) / 12
    for r in range(5):
        assert q_polynomial(binomial_poly("y", r)) == binomial_poly("y", r) / (r + 1)


@given(polys(max_degree=5))
@settings(deadline=None)
def test_q_polynomial_shape(p):
    q = q_polynomial(p)
    assert q.degree == p.degree and q.constant_term == p.constant_term


def test_average_formula_examples():
    assert average_weight_formula(0, 2, X) == Fraction(10, 3)
    for k in range(6):
        for n in range(6):
            assert average_weight_formula(k, n, X) == Fraction((k + 2 * n + 1) * (3 * k + 2 * n), 6)


@given(polys(max_degree=4))
@settings(max_examples=30, deadline=None)
def test_average_formula_at_origin(p):
    assert average_weight_formula(0, 0, p) == p.evaluate(0, 0)


@given(polys(max_degree=3, max_terms=4))
@settings(max_examples=30, deadline=None)
def test_induction_step_identity(p):
    # (x+2y) P(x, x+2y) = (x+2y) A(x,y) - x A(x-1, y) - 2y A(x+1, y-1)
    a = _induction_polynomial(p)
    z = X + 2 * Y
    lhs = z * p.substitute(X, z)
    rhs = z * a - X * a.substitute(X - 1, Y) - 2 * Y * a.substitute(X + 1, Y - 1)
    assert lhs == rhs


def test_induction_recursion_on_averages():
    p = parse_poly("x^2 - 3*x*y + 2")
    a = _induction_polynomial(p)
    for k in range(5):
        for n in range(4):
            if k + 2 * n == 0:
                continue
            l = k + 2 * n
            step = Fraction(2 * n, l) * a.evaluate(k + 1, n - 1) + Fraction(k, l) * a.evaluate(k - 1, n) + p.evaluate(k, l)
            assert step == a.evaluate(k, n) == average_weight_formula(k, n, p)


@pytest.mark.parametrize("lam", list(partitions_up_to(3)), ids=str)
def test_master_identity_monomials(lam):
    k = sum(lam)
    for n in range(3):
        for a in range(4):
            for b in range(4 - a):
                p = Poly.monomial(a, b)
                assert average_weight_bruteforce(lam, k + 2 * n, p) == average_weight_formula(k, n, p)
