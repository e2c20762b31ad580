"""Integer helpers with the conventions used throughout the package."""
from math import comb, prod


def double_factorial(m: int) -> int:
    """``m!!`` with ``(-1)!! = 0!! = 1``."""
    if m < -1:
        raise ValueError(f"double factorial undefined for {m}")
    return prod(range(m, 0, -2))


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero when ``k < 0`` or ``k > n >= 0``."""
    if k < 0 or n < 0:
        return 0
    return comb(n, k)
