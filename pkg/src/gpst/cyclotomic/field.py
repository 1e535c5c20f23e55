"""Exact arithmetic in the cyclotomic field Q(zeta_n).

An element is stored as rational coordinates over the power basis
``1, z, ..., z^(phi(n)-1)`` with ``z = exp(2 pi i / n)``, reduced modulo the
n-th cyclotomic polynomial. Because the reduction is canonical, two elements
are equal exactly when their coordinate tuples are.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

MAX_DEGREE = 512


class ConductorMismatchError(ValueError):
    pass


class DegreeCapError(ValueError):
    """Raised when phi(n) exceeds :data:`MAX_DEGREE`."""


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n >= 1`` as ``[(p, f), ...]`` with p increasing."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            f = 0
            while n % p == 0:
                n //= p
                f += 1
            out.append((p, f))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # low-degree-first integer polynomials; den is monic
    num = list(num)
    dq = len(den) - 1
    quot = [0] * (len(num) - dq)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dq]
        quot[i] = c
        if c:
            for k, d in enumerate(den):
                num[i + k] -= c * d
    if any(num[:dq]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Obtained by dividing ``x^n - 1`` by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the power-basis coordinates of z^k for k in [n]."""
    phi = totient(n)
    if phi > MAX_DEGREE:
        raise DegreeCapError(f"phi({n}) = {phi} exceeds the cap {MAX_DEGREE}")
    cyc = cyclotomic_polynomial(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * cyc[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _reduce(n: int, poly: Sequence) -> tuple[Fraction, ...]:
    table = _power_table(n)
    phi = len(table[0])
    out = [Fraction(0)] * phi
    for i, c in enumerate(poly):
        if not c:
            continue
        if i < phi:
            out[i] += c
        else:
            for k, t in enumerate(table[i % n]):
                if t:
                    out[k] += c * t
    return tuple(out)


def _coerce(q) -> Fraction:
    if isinstance(q, (Rational, int, str)):
        return Fraction(q)
    raise TypeError(f"not a rational scalar: {q!r}")


@dataclass(frozen=True)
class CycloElem:
    """Element of Q(zeta_conductor) in canonical power-basis form."""

    conductor: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != totient(self.conductor):
            raise ValueError("coefficient vector length must equal phi(conductor)")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_poly(cls, n: int, poly: Iterable) -> CycloElem:
        """Reduce ``sum poly[i] z^i`` modulo Phi_n."""
        return cls(n, _reduce(n, [Fraction(c) for c in poly]))

    @classmethod
    def from_power(cls, n: int, k: int) -> CycloElem:
        row = _power_table(n)[k % n]
        return cls(n, tuple(Fraction(v) for v in row))

    @classmethod
    def from_rational(cls, n: int, q) -> CycloElem:
        phi = totient(n)
        _power_table(n)  # enforce the degree cap
        return cls(n, (_coerce(q),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, n: int) -> CycloElem:
        return cls.from_rational(n, 0)

    @classmethod
    def sum_of_powers(cls, n: int, exponents: Iterable[int], signs: Iterable[int] | None = None) -> CycloElem:
        exponents = list(exponents)
        signs = [1] * len(exponents) if signs is None else list(signs)
        poly = [0] * n
        for e, s in zip(exponents, signs):
            poly[e % n] += s
        return cls.from_poly(n, poly)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: CycloElem) -> None:
        if other.conductor != self.conductor:
            raise ConductorMismatchError(
                f"conductors differ ({self.conductor} vs {other.conductor}); lift to the lcm first"
            )

    def __add__(self, other):
        if isinstance(other, CycloElem):
            self._check(other)
            return CycloElem(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        return self + CycloElem.from_rational(self.conductor, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CycloElem):
            return self.scale(other)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloElem(self.conductor, _reduce(self.conductor, prod))

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, q) -> CycloElem:
        q = _coerce(q)
        return CycloElem(self.conductor, tuple(q * a for a in self.coeffs))

    def conjugate(self) -> CycloElem:
        """Complex conjugation, i.e. the automorphism z -> z^-1."""
        n = self.conductor
        poly = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            poly[(-i) % n] += c
        return CycloElem.from_poly(n, poly)

    def lift(self, m: int) -> CycloElem:
        """Rewrite in Q(zeta_m); requires conductor | m."""
        n = self.conductor
        if m % n:
            raise ConductorMismatchError(f"{n} does not divide {m}")
        if m == n:
            return self
        step = m // n
        poly = [Fraction(0)] * m
        for i, c in enumerate(self.coeffs):
            poly[i * step % m] += c
        return CycloElem.from_poly(m, poly)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_complex(self) -> complex:
        n = self.conductor
        return sum(
            (float(c) * cmath.exp(2j * math.pi * i / n) for i, c in enumerate(self.coeffs) if c),
            0j,
        )

    def __float__(self) -> float:
        return self.to_complex().real

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*z{self.conductor}^{i}")
        return " + ".join(terms) if terms else "0"


def lift_common(*elems: CycloElem) -> list[CycloElem]:
    m = math.lcm(*(e.conductor for e in elems))
    return [e.lift(m) for e in elems]


def epsilon_map(l: int, c: int) -> tuple[int, int]:
    """Return ``(sign, e)`` with ``zeta_{2l}^c = sign * zeta_l^e`` for odd ``l``."""
    if l < 1 or l % 2 == 0:
        raise ValueError(f"epsilon map needs odd l, got {l}")
    sign = -1 if c % 2 else 1
    e = c // 2 if c % 2 == 0 else (c + l) // 2
    lhs = CycloElem.from_power(2 * l, c)
    rhs = CycloElem.from_power(l, e).lift(2 * l).scale(sign)
    if lhs != rhs:  # pragma: no cover - identity holds for every odd l
        raise ArithmeticError("epsilon map identity failed")
    return sign, e


def reduced_denominator(r) -> int:
    """Denominator of ``r`` in lowest terms."""
    return Fraction(r).denominator
