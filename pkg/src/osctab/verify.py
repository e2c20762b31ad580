"""Invariant suites run by ``osctab verify``.

Each check takes a :class:`VerifyConfig` and returns a :class:`CheckResult`;
checks are independent so they can be farmed out to worker processes.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from osctab.formulas import asymptotic_coefficient, closed_form, leading_coefficient_checks
from osctab.partitions import (
    EMPTY,
    down_neighbors,
    partitions_of,
    partitions_up_to,
    syt_count,
    up_neighbors,
)
from osctab.polyring import Poly, X, Y, binomial_poly, parse_poly
from osctab.psi import average_weight_formula, psi_apply, psi_inverse, psi_matrix
from osctab.tableaux import (
    ContentWeight,
    HookWeight,
    WeightSpec,
    average_weight_bruteforce,
    count_oscillating,
    count_oscillating_dp,
    enumerate_oscillating,
)


@dataclass(frozen=True)
class VerifyConfig:
    max_size: int = 4
    max_n: int = 3
    max_degree: int = 6
    count_extra: int = 8  # lengths up to |lam| + count_extra
    empty_max_n: int = 6
    max_r: int = 4
    samples: int = 200
    seed: int = 0
    workers: int = 1


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


class _Fail(Exception):
    pass


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise _Fail(msg)


def check_counting(cfg: VerifyConfig) -> str:
    cases = 0
    for lam in partitions_up_to(cfg.max_size):
        for l in range(sum(lam) + cfg.count_extra + 1):
            c = count_oscillating(lam, l)
            _expect(c == count_oscillating_dp(lam, l), f"dp mismatch at {list(lam)}, l={l}")
            _expect(c == sum(1 for _ in enumerate_oscillating(lam, l)), f"enumeration mismatch at {list(lam)}, l={l}")
            cases += 1
    return f"{cases} (shape, length) pairs"


def check_closed_form_averages(cfg: VerifyConfig) -> str:
    weights = {"hz": X, "wt20": X**2, "wt11": X * Y}
    cases = 0
    for lam in partitions_up_to(cfg.max_size):
        k = sum(lam)
        for n in range(cfg.max_n + 1):
            for name, p in weights.items():
                brute = average_weight_bruteforce(lam, k + 2 * n, p, workers=1)
                _expect(brute == closed_form(name, k, n), f"{name} at {list(lam)}, n={n}: {brute}")
                cases += 1
    return f"{cases} averages"


def check_master_identity(cfg: VerifyConfig) -> str:
    monomials = [Poly.monomial(a, b) for a in range(4) for b in range(4) if a + b <= 3]
    cases = 0
    for lam in partitions_up_to(min(cfg.max_size, 4)):
        k = sum(lam)
        for n in range(cfg.max_n + 1):
            for p in monomials:
                brute = average_weight_bruteforce(lam, k + 2 * n, p, workers=1)
                _expect(brute == average_weight_formula(k, n, p), f"P={p} at {list(lam)}, n={n}")
                cases += 1
    return f"{cases} (shape, n, monomial) triples"


def check_empty_binomial(cfg: VerifyConfig) -> str:
    for r in range(cfg.max_r + 1):
        w = WeightSpec(binomial_poly("x", r))
        for n in range(cfg.empty_max_n + 1):
            lhs = average_weight_bruteforce(EMPTY, 2 * n, w, workers=1) / (2 * n + 1)
            _expect(lhs == closed_form("empty_binom_x", 0, n, r), f"r={r}, n={n}: {lhs}")
            _expect(lhs == closed_form("xr_at_origin", 0, n, r), f"xr r={r}, n={n}")
    return f"r <= {cfg.max_r}, n <= {cfg.empty_max_n}"


def check_binomial_index(cfg: VerifyConfig) -> str:
    for r in range(4):
        w = WeightSpec(binomial_poly("y", r))
        for lam in partitions_up_to(3):
            k = sum(lam)
            for n in range(cfg.max_n + 1):
                brute = average_weight_bruteforce(lam, k + 2 * n, w, workers=1)
                _expect(brute == closed_form("binom_i", k, n, r), f"r={r} at {list(lam)}, n={n}")
    return "r <= 3, |lam| <= 3"


_PSI_GOLDEN = {
    "x": "2*x - 2*y",
    "y": "2*x + 4*y",
    "x*y": "3*x^2 + 4*x*y - 4*y^2 - x + 2*y",
    "x^2": "3*x^2 - 4*x*y - x - 2*y",
    "y^2": "3*x^2 + 12*x*y + 12*y^2 - x - 2*y",
}

_M2 = [
    [5, 0, 0, 0, 0, 0],
    [-2, 4, 0, 0, 0, 0],
    [0, -1, 3, 0, 0, 0],
    [0, -2, 0, 3, 0, 0],
    [-1, 1, -1, -1, 2, 0],
    [0, 0, 0, 0, 0, 1],
]


def check_golden(cfg: VerifyConfig) -> str:
    for src, img in _PSI_GOLDEN.items():
        _expect(psi_apply(parse_poly(src)) == parse_poly(img), f"Psi({src})")
    m = psi_matrix(2)
    _expect([list(row) for row in m.entries] == _M2, "M_2 differs")
    got = str(psi_inverse(parse_poly("x^2+2*x*y")))
    _expect(got == "1/4*x*y + 1/12*y^2 + 1/6*x", f"inverse gave {got}")
    return "5 images, M_2, inverse session"


def random_poly(rng: random.Random, max_degree: int, max_terms: int = 8) -> Poly:
    d = rng.randint(0, max_degree)
    monos = [(i, j - i) for j in range(d + 1) for i in range(j + 1)]
    terms = {m: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for m in rng.sample(monos, min(len(monos), max_terms))}
    return Poly(terms)


def check_bijectivity(cfg: VerifyConfig) -> str:
    rng = random.Random(cfg.seed)
    for _ in range(cfg.samples):
        a = random_poly(rng, cfg.max_degree)
        img = psi_apply(a)
        _expect(psi_inverse(img) == a, f"round trip failed for {a}")
        _expect(psi_apply(psi_inverse(a)) == a, f"inverse round trip failed for {a}")
        _expect(img.degree == a.degree and img.constant_term == a.constant_term, f"degree/constant for {a}")
    return f"{cfg.samples} random polynomials of degree <= {cfg.max_degree}"


def check_branching_ratios(cfg: VerifyConfig) -> str:
    for size in range(1, cfg.max_size + 2):
        for lam in partitions_of(size):
            for n in range(cfg.max_n + 1):
                l = size + 2 * n
                total = count_oscillating(lam, l)
                up = sum(count_oscillating(mu, l - 1) for mu in up_neighbors(lam))
                down = sum(count_oscillating(mu, l - 1) for mu in down_neighbors(lam))
                _expect(Fraction(up, total) == Fraction(2 * n, l), f"up ratio at {list(lam)}, n={n}")
                _expect(Fraction(down, total) == Fraction(size, l), f"down ratio at {list(lam)}, n={n}")
    return f"1 <= |lam| <= {cfg.max_size + 1}"


ASYMPTOTIC_PAIRS = ((1, 0), (0, 1), (1, 1), (2, 0))


def asymptotic_ratios(i: int, j: int, big: int = 500) -> tuple[Fraction, Fraction]:
    """Ratios of the exact average to the two asymptotes at ``n = big`` and ``k = big``."""
    p = Poly.monomial(i, j)
    c_len, e = asymptotic_coefficient(i, j, "large_length")
    c_size, _ = asymptotic_coefficient(i, j, "large_size")
    by_length = average_weight_formula(0, big, p) / (c_len * (2 * big) ** e)
    by_size = average_weight_formula(big, 0, p) / (c_size * big**e)
    return by_length, by_size


def check_asymptotics(cfg: VerifyConfig) -> str:
    for r in range(cfg.max_degree + 1):
        leading_coefficient_checks(r)
    for i, j in ASYMPTOTIC_PAIRS:
        for ratio in asymptotic_ratios(i, j):
            _expect(abs(ratio - 1) <= Fraction(5, 100), f"(i,j)=({i},{j}) ratio {float(ratio):.4f}")
    return f"coefficient identities r <= {cfg.max_degree}; 4 asymptote ratios within 5%"


def check_hook_content(cfg: VerifyConfig) -> str:
    for r in range(3):
        for n in range(6):
            norm = 2 * n + 1
            hook = average_weight_bruteforce(EMPTY, 2 * n, HookWeight(r), workers=1) / norm
            content = average_weight_bruteforce(EMPTY, 2 * n, ContentWeight(r), workers=1) / norm
            _expect(hook == closed_form("hook_empty", 0, n, r), f"hook r={r}, n={n}: {hook}")
            _expect(content == closed_form("content_empty", 0, n, r), f"content r={r}, n={n}: {content}")
            if r == 0:
                _expect(hook == content == closed_form("hz", 0, n) / norm == Fraction(n, 3), f"r=0 cross-check n={n}")
    return "r <= 2, n <= 5"


def check_auxiliary(cfg: VerifyConfig) -> str:
    for r in range(9):
        _expect(sum(syt_count(lam) ** 2 for lam in partitions_of(r)) == factorial(r), f"sum f^2 at r={r}")
    for lam in partitions_up_to(8):
        k = sum(lam)
        _expect(sum(syt_count(mu) for mu in up_neighbors(lam)) == (k + 1) * syt_count(lam), f"up sum {list(lam)}")
        if k:
            _expect(sum(syt_count(mu) for mu in down_neighbors(lam)) == syt_count(lam), f"down sum {list(lam)}")
    for r in range(cfg.max_r + 1):
        for n in range(cfg.empty_max_n + 1):
            closed_form("xr_at_origin", 0, n, r)
    return "sizes <= 8"


CHECKS: dict[str, Callable[[VerifyConfig], str]] = {
    "counting": check_counting,
    "closed-form-averages": check_closed_form_averages,
    "master-identity": check_master_identity,
    "empty-binomial": check_empty_binomial,
    "binomial-index": check_binomial_index,
    "golden": check_golden,
    "bijectivity": check_bijectivity,
    "branching-ratios": check_branching_ratios,
    "asymptotics": check_asymptotics,
    "hook-content": check_hook_content,
    "auxiliary": check_auxiliary,
}


def run_check(name: str, cfg: VerifyConfig) -> CheckResult:
    start = time.perf_counter()
    try:
        detail = CHECKS[name](cfg)
        passed = True
    except (_Fail, AssertionError) as exc:
        detail, passed = str(exc), False
    return CheckResult(name, passed, detail, time.perf_counter() - start)


def run_all(cfg: VerifyConfig, names: list[str] | None = None) -> list[CheckResult]:
    names = list(CHECKS) if not names else names
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            return list(pool.map(run_check, names, [cfg] * len(names)))
    return [run_check(name, cfg) for name in names]
