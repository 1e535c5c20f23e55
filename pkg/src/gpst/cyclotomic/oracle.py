"""Characteristic-polynomial integrality oracle.

An element e of a number field is an algebraic integer iff the characteristic
polynomial of multiplication-by-e has integer coefficients. This route never
touches an integral basis, so it can check :func:`is_algebraic_integer`.
"""

from __future__ import annotations

from fractions import Fraction

from .field import CycloElem


def multiplication_matrix(e: CycloElem) -> list[list[Fraction]]:
    """Matrix of ``v -> e * v`` in the power basis (column i is ``e * z^i``)."""
    n = e.conductor
    cols = [(e * CycloElem.from_power(n, i)).coeffs for i in range(len(e.coeffs))]
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]


def characteristic_polynomial(m: list[list[Fraction]]) -> list[Fraction]:
    """Coefficients of det(xI - m), highest degree first (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [Fraction(1)]
    acc = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        # acc <- m @ acc + c_prev * I
        prod = [[sum(m[i][t] * acc[t][j] for t in range(n) if m[i][t]) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += c_prev
        acc = prod
        trace = sum(sum(m[i][t] * acc[t][i] for t in range(n)) for i in range(n))
        coeffs.append(-trace / k)
    return coeffs


def is_algebraic_integer_charpoly(e: CycloElem) -> bool:
    return all(c.denominator == 1 for c in characteristic_polynomial(multiplication_matrix(e)))
