from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest
import sympy

from conftest import rand_elem
from gpst.cyclotomic import (
    ConductorMismatchError,
    CycloElem,
    DegreeCapError,
    cyclotomic_polynomial,
    epsilon_map,
    factorize,
    lift_common,
    reduced_denominator,
    totient,
)

X = sympy.Symbol("x")


@pytest.mark.parametrize("n", list(range(1, 61)) + [72, 105, 128])
def test_phi_matches_sympy(n):
    ref = sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == [int(c) for c in ref]
    assert len(cyclotomic_polynomial(n)) - 1 == totient(n) == int(sympy.totient(n))


def test_phi_12():
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_factorize():
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert factorize(1) == []


def test_degree_cap():
    with pytest.raises(DegreeCapError):
        CycloElem.from_power(1031, 1)  # phi = 1030


@pytest.mark.parametrize("n", [5, 8, 9, 12, 36])
def test_ring_laws(n, rnd):
    one = CycloElem.from_rational(n, 1)
    zero = CycloElem.zero(n)
    for _ in range(200):
        a, b, c = (rand_elem(rnd, n) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * one == a and a + zero == a
        assert (a - a).is_zero()


@pytest.mark.parametrize("n", [5, 8, 9, 12, 36])
def test_numeric_embedding(n, rnd):
    for _ in range(30):
        a, b = rand_elem(rnd, n), rand_elem(rnd, n)
        assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9
        assert abs(a.conjugate().to_complex() - a.to_complex().conjugate()) < 1e-9


def test_powers_wrap():
    z = CycloElem.from_power(7, 1)
    acc = CycloElem.from_rational(7, 1)
    for _ in range(7):
        acc = acc * z
    assert acc == CycloElem.from_rational(7, 1)
    assert CycloElem.sum_of_powers(5, [1, 2, 3, 4]) == CycloElem.from_rational(5, -1)


def test_lift_preserves_value():
    e = CycloElem.sum_of_powers(6, [1, 5], [1, -1])
    up = e.lift(36)
    assert abs(up.to_complex() - e.to_complex()) < 1e-12
    with pytest.raises(ConductorMismatchError):
        e.lift(10)
    a, b = lift_common(CycloElem.from_power(4, 1), CycloElem.from_power(6, 1))
    assert a.conductor == b.conductor == 12


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatchError):
        CycloElem.from_power(5, 1) + CycloElem.from_power(7, 1)


@pytest.mark.parametrize("l,c,expected", [(3, 1, (-1, 2)), (5, 4, (1, 2)), (7, 7, (-1, 7))])
def test_epsilon_map_values(l, c, expected):
    assert epsilon_map(l, c) == expected


@pytest.mark.parametrize("l", [1, 3, 5, 9, 15])
def test_epsilon_map_numeric(l):
    for c in range(2 * l):
        s, e = epsilon_map(l, c)
        lhs = cmath.exp(2j * math.pi * c / (2 * l))
        rhs = s * cmath.exp(2j * math.pi * e / l)
        assert abs(lhs - rhs) < 1e-12


def test_epsilon_map_even():
    with pytest.raises(ValueError):
        epsilon_map(4, 1)


def test_str_and_rational():
    e = CycloElem.from_poly(5, [Fraction(1, 2), 0, 3])
    assert str(e) == "1/2 + 3*z5^2"
    assert CycloElem.from_rational(5, 3).is_rational()
    assert reduced_denominator(Fraction(6, 4)) == 2
