"""Sparse bivariate polynomials in ``x`` and ``y`` with exact rational coefficients."""
from __future__ import annotations

import ast
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Any, Iterable, Mapping

from osctab.errors import ValidationError

NEG_INF = float("-inf")

Monomial = tuple[int, int]


def _as_fraction(c: Any) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool) or not isinstance(c, (int, Rational)):
        raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")
    return Fraction(c)


def _grlex_key(mono: Monomial) -> tuple[int, int]:
    i, j = mono
    return (-(i + j), -i)


class Poly:
    """An element of Q[x, y] stored as ``{(i, j): coefficient}`` without zeros.

    Instances are treated as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Any] | Iterable[tuple[Monomial, Any]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValidationError(f"negative exponent in monomial {(i, j)}")
            c = _as_fraction(c)
            if c:
                key = (int(i), int(j))
                total = clean.get(key, 0) + c
                if total:
                    clean[key] = total
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Poly":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Any) -> "Poly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Any = 1) -> "Poly":
        return cls({(i, j): c})

    @classmethod
    def coerce(cls, other: Any) -> "Poly":
        if isinstance(other, Poly):
            return other
        return cls.const(other)

    # inspection

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded lexicographic order (degree desc, then x-exponent desc)."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]))

    @property
    def degree(self) -> int | float:
        if not self._terms:
            return NEG_INF
        return max(i + j for i, j in self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    def is_zero(self) -> bool:
        return not self._terms

    # ring operations

    def __add__(self, other: Any) -> "Poly":
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> "Poly":
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "Poly":
        return (-self) + other

    def __mul__(self, other: Any) -> "Poly":
        if not isinstance(other, Poly):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Poly._raw({})
            return Poly._raw({m: c * v for m, v in self._terms.items()})
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Poly":
        c = _as_fraction(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / c)

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        try:
            return self._terms == Poly.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # evaluation and composition

    def __call__(self, x0: Any, y0: Any) -> Any:
        """Evaluate at ``(x0, y0)``; polynomial arguments give composition."""
        if isinstance(x0, Poly) or isinstance(y0, Poly):
            return self.substitute(Poly.coerce(x0), Poly.coerce(y0))
        return self.evaluate(x0, y0)

    def evaluate(self, x0: Any, y0: Any) -> Fraction:
        x0, y0 = _as_fraction(x0), _as_fraction(y0)
        xp: dict[int, Fraction] = {}
        yp: dict[int, Fraction] = {}
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            if i not in xp:
                xp[i] = x0**i
            if j not in yp:
                yp[j] = y0**j
            total += c * xp[i] * yp[j]
        return total

    def substitute(self, ex: "Poly", ey: "Poly") -> "Poly":
        """Return ``self(ex, ey)`` expanded to canonical form."""
        ex, ey = Poly.coerce(ex), Poly.coerce(ey)
        xpow = _power_table(ex, max((i for i, _ in self._terms), default=0))
        ypow = _power_table(ey, max((j for _, j in self._terms), default=0))
        out: dict[Monomial, Fraction] = {}
        for (i, j), c in self._terms.items():
            for m, v in (xpow[i] * ypow[j])._terms.items():
                out[m] = out.get(m, 0) + c * v
        return Poly._raw({m: v for m, v in out.items() if v})

    # text and JSON

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"i": i, "j": j, "num": str(c.numerator), "den": str(c.denominator)}
                for (i, j), c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        try:
            return cls(
                ((int(t["i"]), int(t["j"])), Fraction(int(t["num"]), int(t["den"])))
                for t in data["terms"]
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad polynomial JSON: {exc}") from exc

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return parse_poly(text)


def _power_table(p: Poly, top: int) -> list[Poly]:
    table = [Poly.const(1)]
    for _ in range(top):
        table.append(table[-1] * p)
    return table


X = Poly.monomial(1, 0)
Y = Poly.monomial(0, 1)
ONE = Poly.const(1)
ZERO = Poly()


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Render like ``3*x^2 - 4*x*y - x - 2*y`` (graded lex order)."""
    pieces = []
    for (i, j), c in p.sorted_terms():
        mono = _format_monomial(i, j)
        mag = abs(c)
        if not mono:
            body = _format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coefficient(mag)}*{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces) or "0"


_MAX_EXPONENT = 512


def parse_poly(text: str) -> Poly:
    """Parse text such as ``"1/4*x*y + 1/12*y^2 + 1/6*x"``.

    Accepts integer literals, the variables ``x`` and ``y``, ``+ - * /``,
    ``^`` (or ``**``) with a constant nonnegative integer exponent, and
    parentheses. Division is only allowed by nonzero constants.
    """
    if not isinstance(text, str) or not text.strip():
        raise ValidationError("empty polynomial text")
    try:
        tree = ast.parse(text.strip().replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValidationError(f"cannot parse polynomial {text!r}: {exc.msg}") from exc
    return _eval_node(tree.body, text)


def _eval_node(node: ast.AST, text: str) -> Poly:
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ValidationError(f"only integer literals allowed in {text!r}")
        return Poly.const(node.value)
    if isinstance(node, ast.Name):
        if node.id == "x":
            return X
        if node.id == "y":
            return Y
        raise ValidationError(f"unknown variable {node.id!r} in {text!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
        inner = _eval_node(node.operand, text)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, text)
        right = _eval_node(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if right.degree != 0:
                raise ValidationError(f"division by a non-constant in {text!r}")
            return left / right.constant_term
        if isinstance(node.op, ast.Pow):
            e = right.constant_term if right.degree in (0, NEG_INF) else None
            if e is None or e.denominator != 1 or not 0 <= e <= _MAX_EXPONENT:
                raise ValidationError(f"exponent must be an integer in [0, {_MAX_EXPONENT}] in {text!r}")
            return left ** int(e)
    raise ValidationError(f"unsupported syntax in {text!r}")


# functional surface


def add(a: Poly, b: Poly) -> Poly:
    return a + b


def scale(c: Any, a: Poly) -> Poly:
    return a * _as_fraction(c)


def multiply(a: Poly, b: Poly) -> Poly:
    return a * b


def substitute(a: Poly, ex: Poly, ey: Poly) -> Poly:
    return a.substitute(ex, ey)


def evaluate(a: Poly, x0: Any, y0: Any) -> Fraction:
    return a.evaluate(x0, y0)


def degree(a: Poly) -> int | float:
    return a.degree


def constant_term(a: Poly) -> Fraction:
    return a.constant_term


def coefficient(a: Poly, i: int, j: int) -> Fraction:
    return a.coefficient(i, j)


def binomial_poly(var: str | Poly, r: int) -> Poly:
    """Expand ``C(v, r) = v (v-1) ... (v-r+1) / r!`` for ``v`` in {x, y} or any polynomial."""
    if r < 0:
        raise ValidationError("r must be nonnegative")
    if isinstance(var, str):
        if var not in ("x", "y"):
            raise ValidationError(f"variable must be 'x' or 'y', got {var!r}")
        v = X if var == "x" else Y
    else:
        v = var
    out = ONE
    for t in range(r):
        out = out * (v - t)
    return out / factorial(r)
