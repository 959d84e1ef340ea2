"""Golden tables and identities for the classical families."""

import math

import pytest

from spreadpoly import (
    IntPoly,
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

LUCAS_TABLE = {
    0: (2,),
    1: (0, 1),
    2: (-2, 0, 1),
    3: (0, -3, 0, 1),
    4: (2, 0, -4, 0, 1),
    5: (0, 5, 0, -5, 0, 1),
    6: (-2, 0, 9, 0, -6, 0, 1),
}

CYCLOTOMIC_TABLE = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    7: (1, 1, 1, 1, 1, 1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    12: (1, 0, -1, 0, 1),
}

ZPREAD_TABLE = {
    1: (0, 1),
    2: (0, 4, -1),
    3: (0, 9, -6, 1),
    4: (0, 16, -20, 8, -1),
    5: (0, 25, -50, 35, -10, 1),
}


@pytest.mark.parametrize("n,coeffs", LUCAS_TABLE.items())
def test_lucas_golden(n, coeffs):
    assert lucas(n) == IntPoly(coeffs)


def test_lucas_recursion_holds():
    for n in range(2, 40):
        assert lucas(n) == IntPoly((0, 1)) * lucas(n - 1) - lucas(n - 2)


def test_lucas_rejects_negative():
    with pytest.raises(ValueError):
        lucas(-1)


@pytest.mark.parametrize("n,coeffs", CYCLOTOMIC_TABLE.items())
def test_cyclotomic_golden(n, coeffs):
    assert cyclotomic(n) == IntPoly(coeffs)


def test_cyclotomic_completeness_small():
    for n in range(1, 61):
        product = IntPoly((1,))
        for d in divisors(n):
            product = product * cyclotomic(d)
        assert product == IntPoly.monomial(n) - 1
        assert cyclotomic(n).degree() == totient(n)


def test_cyclotomic_palindromic_small():
    for n in range(3, 61):
        c = cyclotomic(n)
        assert c.degree() % 2 == 0
        assert c.is_palindromic()


@pytest.mark.parametrize("n,coeffs", ZPREAD_TABLE.items())
def test_zpread_golden(n, coeffs):
    assert zpread(n) == IntPoly(coeffs)


def test_zpread_routes_agree_small():
    for n in range(1, 61):
        assert zpread(n) == zpread_via_lucas(n)


def test_zpread_vanishes_at_origin():
    for n in range(1, 61):
        assert zpread(n).constant_term() == 0


def test_monic_zpread_golden():
    assert monic_zpread(1) == IntPoly((0, 1))
    assert monic_zpread(2) == IntPoly((0, -4, 1))
    assert monic_zpread(4) == IntPoly((0, -16, 20, -8, 1))
    for n in range(1, 40):
        assert monic_zpread(n).is_monic()


def test_spread_golden():
    assert spread(1) == IntPoly((0, 1))
    assert spread(2) == IntPoly((0, 4, -4))
    assert spread(3) == IntPoly((0, 9, -24, 16))


def test_spread_matches_sine_numerically():
    # S_n(sin^2 t) = sin^2(n t), checked in floating point
    for n in (2, 3, 5):
        p = spread(n)
        for t in (0.3, 0.7, 1.1):
            expected = math.sin(n * t) ** 2
            assert abs(p.eval_float(math.sin(t) ** 2) - expected) < 1e-9


def test_lucas_index_product_small():
    for m in range(0, 9):
        for n in range(0, 9):
            assert lucas(m * n) == lucas(m).compose(lucas(n))


def test_lucas_square_identities_small():
    for n in range(1, 31):
        ln = lucas(n)
        assert lucas(2 * n) - 2 == (ln - 2) * (ln + 2)
        assert lucas(2 * n) + 2 == ln * ln


def test_fibonacci_sequence():
    assert [fibonacci(n) for n in range(9)] == [0, 1, 1, 2, 3, 5, 8, 13, 21]
    assert fibonacci(100) == fibonacci(99) + fibonacci(98)
    assert math.gcd(fibonacci(100), fibonacci(60)) == fibonacci(20)
    with pytest.raises(ValueError):
        fibonacci(-1)


def test_totient_examples():
    assert totient(1) == 1
    assert totient(12) == 4
    assert totient(9) == 6


def test_totient_against_enumeration():
    for n in range(1, 201):
        assert totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_totient_divisor_sum():
    for n in range(1, 101):
        assert sum(totient(d) for d in divisors(n)) == n


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]
    for n in range(1, 101):
        ds = divisors(n)
        assert ds == sorted(ds)
        assert all(n % d == 0 for d in ds)


def test_preconditions():
    for fn in (cyclotomic, zpread, zpread_via_lucas, monic_zpread, spread, totient, divisors):
        with pytest.raises(ValueError):
            fn(0)


def test_zpread_integrality_guard(monkeypatch):
    import spreadpoly.sequences as seq_mod
    from spreadpoly import InternalInconsistencyError

    broken = type("M", (), {"comb": staticmethod(lambda a, b: 1)})
    monkeypatch.setattr(seq_mod, "math", broken)
    with pytest.raises(InternalInconsistencyError):
        seq_mod._zpread(4)


def test_cache_max_index_knob():
    cache = SequenceCache(max_index=5)
    cache.store("demo", 3, "kept")
    cache.store("demo", 9, "dropped")
    assert cache.table("demo") == {3: "kept"}
    computed = cache.get_or_compute("demo", 9, lambda: "recomputed")
    assert computed == "recomputed"
    assert 9 not in cache.table("demo")


def test_cache_hits_are_identical():
    cache = SequenceCache()
    first = cache.get_or_compute("demo", 2, lambda: IntPoly((1, 2)))
    second = cache.get_or_compute("demo", 2, lambda: IntPoly((9, 9)))
    assert second is first
