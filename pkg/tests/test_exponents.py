from __future__ import annotations

import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gpst.cyclotomic import UndefinedAtTwoError, crt_compose, crt_decompose, negation_reduction


def zeta(n, k):
    return cmath.exp(2j * math.pi * k / n)


def test_example_36_5():
    dec = crt_decompose(36, 5)
    assert dec.parts == (1, 8)
    assert dec.pi_theta() == {2: (1, 0), 3: (2, 2)}


@pytest.mark.parametrize("n", [12, 36, 45, 60])
def test_round_trip(n):
    for x in range(n):
        dec = crt_decompose(n, x)
        assert crt_compose(n, dec.parts) == x


@pytest.mark.parametrize("n", [12, 36, 45, 60, 100])
def test_product_of_prime_power_roots(n):
    for x in range(n):
        dec = crt_decompose(n, x)
        prod = 1
        for (p, f), xj in zip(dec.primes, dec.parts):
            prod *= zeta(p**f, xj)
        assert abs(prod - zeta(n, x)) < 1e-12


@given(st.integers(2, 400), st.integers(-1000, 1000))
def test_pi_theta_reassemble(n, x):
    dec = crt_decompose(n, x)
    for p, (pi, theta) in dec.pi_theta().items():
        f = dict(dec.primes)[p]
        size = 2 ** (f - 2) if p == 2 else p ** (f - 1)
        assert 0 <= theta < size
        assert pi * size + theta == dec.component(p)


def test_undefined_at_two():
    dec = crt_decompose(6, 1)
    assert 2 not in dec.pi_theta()
    with pytest.raises(UndefinedAtTwoError):
        dec.pi(2)


def test_compose_validation():
    with pytest.raises(ValueError):
        crt_compose(12, (1,))
    with pytest.raises(ValueError):
        crt_compose(12, (4, 0))


def test_negation_reduction_36_5():
    out = negation_reduction(36, 5)
    assert out["negated"] == {2: (3, 0), 3: (2, 2)}
    assert out["inverse_pi3"] == 0


@pytest.mark.parametrize("n", [12, 24, 36, 60, 9, 45])
def test_negation_reduction_all(n):
    for x in range(n):
        out = negation_reduction(n, x)
        if n % 3 == 0:
            assert out["inverse_pi3"] == crt_decompose(n, -x).pi(3)


def test_negation_needs_3_or_4():
    with pytest.raises(ValueError):
        negation_reduction(10, 1)
