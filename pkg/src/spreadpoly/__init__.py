"""Exact kernel for spread/zpread polynomials and their factorizations.

The package constructs the classical polynomial families with
arbitrary-precision integer arithmetic, factors each zpread polynomial
into one factor per divisor (three independent routes, cross-checked),
and applies the factorization at x = 5 to split Fibonacci numbers into
primitive parts.
"""

from .errors import (
    IdentityFailureError,
    InternalInconsistencyError,
    NotDivisibleError,
    NotPalindromicError,
    OddDegreeError,
    OddTermPresentError,
    OutOfBoundsError,
    RouteMismatchError,
    SpreadPolyError,
    ToleranceExceededError,
    VerificationFailureError,
)
from .factor import (
    Factor,
    FactorizationRecord,
    FloatRootCheck,
    PhiCrossCheck,
    PhiRoute,
    capital_phi,
    cross_check_phi,
    factor_lucas_minus2,
    factor_zpread,
    float_root_check,
    phi_composed,
    phi_min,
    phi_odd_lucas,
    phi_pow2,
    psi,
)
from .fib import PrimitivePartTable, fib_factorization, primitive_part, zpread_at5_identity
from .intpoly import (
    ExactRational,
    IntPoly,
    ONE,
    PalindromeFold,
    X,
    ZERO,
    add,
    compose,
    div_exact,
    eval_float,
    eval_int,
    eval_rational,
    get_mul_threshold,
    mul,
    mul_karatsuba,
    mul_schoolbook,
    palindrome_fold,
    set_mul_threshold,
)
from .sequences import (
    CACHE,
    SequenceCache,
    cyclotomic,
    divisors,
    fibonacci,
    lucas,
    monic_zpread,
    spread,
    totient,
    zpread,
    zpread_via_lucas,
)
from .verify import SuiteResult, VerifyReport, run_suite, run_verification

__version__ = "0.1.0"

__all__ = [
    "CACHE",
    "ExactRational",
    "Factor",
    "FactorizationRecord",
    "FloatRootCheck",
    "IdentityFailureError",
    "IntPoly",
    "InternalInconsistencyError",
    "NotDivisibleError",
    "NotPalindromicError",
    "ONE",
    "OddDegreeError",
    "OddTermPresentError",
    "OutOfBoundsError",
    "PalindromeFold",
    "PhiCrossCheck",
    "PhiRoute",
    "PrimitivePartTable",
    "RouteMismatchError",
    "SequenceCache",
    "SpreadPolyError",
    "SuiteResult",
    "ToleranceExceededError",
    "VerificationFailureError",
    "VerifyReport",
    "X",
    "ZERO",
    "add",
    "capital_phi",
    "compose",
    "cross_check_phi",
    "cyclotomic",
    "div_exact",
    "divisors",
    "eval_float",
    "eval_int",
    "eval_rational",
    "factor_lucas_minus2",
    "factor_zpread",
    "fib_factorization",
    "fibonacci",
    "float_root_check",
    "get_mul_threshold",
    "lucas",
    "monic_zpread",
    "mul",
    "mul_karatsuba",
    "mul_schoolbook",
    "palindrome_fold",
    "phi_composed",
    "phi_min",
    "phi_odd_lucas",
    "phi_pow2",
    "primitive_part",
    "psi",
    "run_suite",
    "run_verification",
    "set_mul_threshold",
    "spread",
    "totient",
    "zpread",
    "zpread_at5_identity",
    "zpread_via_lucas",
]
