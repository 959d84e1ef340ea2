"""Fibonacci numbers factored into primitive parts.

Evaluating the zpread factorization at 5 turns the polynomial identity into
an integer one: F_n is the product over divisors d of n of the primitive
parts p_d, where p_1 = 1 and p_d is the absolute value of the minimal
polynomial of 4*sin^2(pi/d) evaluated at 5.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IdentityFailureError, VerificationFailureError
from .factor import phi_min
from .sequences import divisors, fibonacci, zpread


def primitive_part(n: int) -> int:
    """The positive integer attached to divisor n in the Fibonacci product."""
    if n < 1:
        raise ValueError("index must be positive")
    if n == 1:
        return 1
    return abs(phi_min(n).eval_int(5))


@dataclass(frozen=True)
class PrimitivePartTable:
    """Divisor-indexed primitive parts whose product rebuilds a Fibonacci number."""

    n: int
    parts: tuple[tuple[int, int], ...]
    reconstructed: int

    def to_record(self) -> dict:
        return {
            "kind": "primitive_parts",
            "n": self.n,
            "parts": [{"d": d, "p": str(p)} for d, p in self.parts],
            "reconstructed": str(self.reconstructed),
        }

    def to_text(self) -> str:
        product = " * ".join(str(p) for _, p in self.parts)
        lines = [f"F[{self.n}] = {self.reconstructed} = {product}"]
        for d, p in self.parts:
            lines.append(f"  d={d}  p={p}")
        return "\n".join(lines)


def fib_factorization(n: int) -> PrimitivePartTable:
    """Primitive parts for every divisor of n, verified against F_n."""
    if n < 1:
        raise ValueError("index must be positive")
    parts = tuple((d, primitive_part(d)) for d in divisors(n))
    product = 1
    for _, p in parts:
        product *= p
    expected = fibonacci(n)
    if product != expected:
        raise VerificationFailureError(
            f"primitive parts of {n} multiply to {product}, not F_{n} = {expected}"
        )
    return PrimitivePartTable(n, parts, product)


def zpread_at5_identity(n: int) -> bool:
    """Check Z_n(5) = (-1)^(n-1) * 5 * F_n^2 exactly; raises on mismatch."""
    if n < 1:
        raise ValueError("index must be positive")
    left = zpread(n).eval_int(5)
    f = fibonacci(n)
    right = 5 * f * f if n % 2 else -5 * f * f
    if left != right:
        raise IdentityFailureError(f"zpread value at 5 for n={n}", left, right)
    return True
