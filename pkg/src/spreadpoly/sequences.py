"""Constructors for the classical polynomial and integer families.

Lucas polynomials, cyclotomic polynomials, the zpread/spread family, and
Fibonacci numbers, plus the totient and divisor helpers the factor engine
needs.  Everything is exact; results are memoized per family.
"""

from __future__ import annotations

import math
import os
from typing import Callable, TypeVar

from .errors import InternalInconsistencyError
from .intpoly import IntPoly, X, div_exact

T = TypeVar("T")

_MISSING = object()


class SequenceCache:
    """Insert-only memo tables, one per family, keyed by index.

    A stored value is never replaced, and every value is a pure function of
    its index, so concurrent readers always see results identical to
    recomputation.  ``max_index`` bounds which indices are retained; higher
    ones are recomputed on demand.
    """

    def __init__(self, max_index: int | None = None):
        self._tables: dict[str, dict[int, object]] = {}
        self.max_index = max_index

    def table(self, family: str) -> dict[int, object]:
        table = self._tables.get(family)
        if table is None:
            table = self._tables.setdefault(family, {})
        return table

    def lookup(self, family: str, n: int):
        return self.table(family).get(n, _MISSING)

    def store(self, family: str, n: int, value: T) -> T:
        if self.max_index is None or n <= self.max_index:
            self.table(family).setdefault(n, value)
        return value

    def get_or_compute(self, family: str, n: int, compute: Callable[[], T]) -> T:
        got = self.lookup(family, n)
        if got is not _MISSING:
            return got  # type: ignore[return-value]
        return self.store(family, n, compute())

    def clear(self) -> None:
        self._tables.clear()


def _cache_from_env() -> SequenceCache:
    raw = os.environ.get("SPREADPOLY_CACHE_MAX_INDEX")
    return SequenceCache(int(raw) if raw else None)


CACHE = _cache_from_env()


def lucas(n: int) -> IntPoly:
    """The degree-n Lucas polynomial: L_0 = 2, L_1 = x, L_n = x*L_{n-1} - L_{n-2}.

    >>> str(lucas(4))
    '2 - 4*x^2 + x^4'
    """
    if n < 0:
        raise ValueError("lucas index must be non-negative")
    got = CACHE.lookup("lucas", n)
    if got is not _MISSING:
        return got
    a, b = IntPoly((2,)), X
    if n == 0:
        return CACHE.store("lucas", 0, a)
    for k in range(2, n + 1):
        c = CACHE.lookup("lucas", k)
        if c is _MISSING:
            c = CACHE.store("lucas", k, X * b - a)
        a, b = b, c
    return b


def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1.

    >>> str(cyclotomic(6))
    '1 - x + x^2'
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    return CACHE.get_or_compute("cyclotomic", n, lambda: _cyclotomic(n))


def _cyclotomic(n: int) -> IntPoly:
    if n == 1:
        return IntPoly((-1, 1))
    rest = IntPoly((1,))
    for d in divisors(n)[:-1]:
        rest = rest * cyclotomic(d)
    return div_exact(IntPoly.monomial(n) - 1, rest)


def zpread(n: int) -> IntPoly:
    """The degree-n zpread polynomial from its closed-form coefficients.

    The coefficient of x^k is (-1)^(k-1) * C(n+k-1, n-k) * n/k; the division
    by k is checked exact, a failure means the formula was coded wrong.

    >>> str(zpread(3))
    '9*x - 6*x^2 + x^3'
    """
    if n < 1:
        raise ValueError("zpread index must be positive")
    return CACHE.get_or_compute("zpread", n, lambda: _zpread(n))


def _zpread(n: int) -> IntPoly:
    coeffs = [0] * (n + 1)
    sign = 1
    for k in range(1, n + 1):
        t = math.comb(n + k - 1, n - k) * n
        if t % k:
            raise InternalInconsistencyError(
                f"zpread coefficient ({n},{k}) is not an integer"
            )
        coeffs[k] = sign * (t // k)
        sign = -sign
    return IntPoly(coeffs)


def zpread_via_lucas(n: int) -> IntPoly:
    """The same polynomial as ``zpread`` built as 2 - L_n(2 - x).

    Kept independent of the closed form so the two constructions can be
    checked against each other.
    """
    if n < 1:
        raise ValueError("zpread index must be positive")
    return 2 - lucas(n).compose(IntPoly((2, -1)))


def monic_zpread(n: int) -> IntPoly:
    """The monic version: the zpread polynomial times (-1)^(n-1)."""
    z = zpread(n)
    return z if n % 2 else -z


def spread(n: int) -> IntPoly:
    """The degree-n spread polynomial; x^k picks up a factor 4^(k-1).

    >>> str(spread(3))
    '9*x - 24*x^2 + 16*x^3'
    """
    z = zpread(n).coeffs
    if z and z[0]:
        raise InternalInconsistencyError("zpread constant term must vanish")
    out = [0] * len(z)
    for k in range(1, len(z)):
        out[k] = z[k] * 4 ** (k - 1)
    return IntPoly(out)


def fibonacci(n: int) -> int:
    """The n-th Fibonacci number, exact."""
    if n < 0:
        raise ValueError("fibonacci index must be non-negative")
    got = CACHE.lookup("fibonacci", n)
    if got is not _MISSING:
        return got
    a, b = 0, 1
    if n == 0:
        return CACHE.store("fibonacci", 0, 0)
    for k in range(2, n + 1):
        c = CACHE.lookup("fibonacci", k)
        if c is _MISSING:
            c = CACHE.store("fibonacci", k, a + b)
        a, b = b, c
    return b


def totient(n: int) -> int:
    """Euler's totient, by trial-division factorization."""
    if n < 1:
        raise ValueError("totient argument must be positive")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order."""
    if n < 1:
        raise ValueError("divisors argument must be positive")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large
