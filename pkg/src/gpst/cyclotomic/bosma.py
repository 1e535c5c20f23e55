"""Canonical integral bases of Q(zeta_n) and integrality tests built on them.

For ``n != 2 mod 4`` with ``n = prod p^f``, choose for each prime a subset
``A_p`` of ``[p]`` of size ``phi(p*)`` (``p* = 4`` for p = 2, else p) and put
``B_p = [p^f / p*]``. The products ``prod zeta_{p*}^a zeta_{p^f}^b`` with
``a in A_p, b in B_p`` are an integral basis, so an element is an algebraic
integer exactly when its coordinates in that basis are all integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import linalg
from .exponents import crt_decompose
from .field import CycloElem, epsilon_map, factorize, totient


def p_star(p: int) -> int:
    return 4 if p == 2 else p


def default_choice(p: int) -> tuple[int, ...]:
    return tuple(range(totient(p_star(p))))


@dataclass(frozen=True)
class BosmaBasis:
    n: int
    primes: tuple[tuple[int, int], ...]
    choices: tuple[tuple[int, tuple[int, ...]], ...]
    exponents: tuple[int, ...]
    # columns of the change-of-basis matrix, one per basis element
    _columns: tuple[tuple[Fraction, ...], ...] = field(repr=False, compare=False)

    @property
    def elements(self) -> list[CycloElem]:
        return [CycloElem.from_power(self.n, e) for e in self.exponents]

    def coordinates(self, elem: CycloElem) -> list[Fraction]:
        """Rational coordinates of ``elem`` in this basis."""
        if elem.conductor != self.n:
            raise ValueError(f"element lives in Q(zeta_{elem.conductor}), basis in Q(zeta_{self.n})")
        phi = len(self.exponents)
        matrix = [[self._columns[j][i] for j in range(phi)] for i in range(phi)]
        return linalg.solve(matrix, list(elem.coeffs))


def _normalize_choices(n: int, choices: Mapping[int, Iterable[int]] | None) -> tuple:
    primes = factorize(n)
    choices = dict(choices or {})
    unknown = set(choices) - {p for p, _ in primes}
    if unknown:
        raise ValueError(f"choices given for primes not dividing {n}: {sorted(unknown)}")
    out = []
    for p, _ in primes:
        a = tuple(sorted(set(choices.get(p, default_choice(p)))))
        want = totient(p_star(p))
        if len(a) != want or any(not 0 <= v < p for v in a):
            raise ValueError(f"A_{p} must be a {want}-subset of [{p}], got {a}")
        out.append((p, a))
    return tuple(out)


def bosma_basis(n: int, choices: Mapping[int, Iterable[int]] | None = None) -> BosmaBasis:
    """Build the canonical basis; ``choices`` maps primes to ``A_p`` (defaults to ``[phi(p*)]``)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n % 4 == 2:
        raise ValueError(f"n = {n} is 2 mod 4; rewrite Q(zeta_n) as Q(zeta_{n // 2}) first")
    return _bosma_basis(n, _normalize_choices(n, choices))


@lru_cache(maxsize=256)
def _bosma_basis(n: int, choices: tuple) -> BosmaBasis:
    primes = tuple(factorize(n))
    exps = [0]
    for (p, f), (_, a_set) in zip(primes, choices):
        ps = p_star(p)
        b_range = range(p**f // ps)
        factor = [a * (n // ps) + b * (n // p**f) for a in a_set for b in b_range]
        exps = [(e + g) % n for e in exps for g in factor]
    columns = tuple(CycloElem.from_power(n, e).coeffs for e in exps)
    if len(exps) != totient(n) or linalg.rank(columns) != len(exps):
        raise ArithmeticError(f"basis for n={n} is degenerate")  # pragma: no cover
    return BosmaBasis(n, primes, choices, tuple(exps), columns)


def is_algebraic_integer(elem: CycloElem, basis: BosmaBasis | None = None) -> bool:
    basis = basis or bosma_basis(elem.conductor)
    try:
        coords = basis.coordinates(elem)
    except linalg.SingularSystemError as exc:  # pragma: no cover
        raise ArithmeticError("integral basis is singular") from exc
    return all(c.denominator == 1 for c in coords)


def q_linear_independent(elems: Sequence[CycloElem]) -> bool:
    if not elems:
        return True
    n = elems[0].conductor
    if any(e.conductor != n for e in elems):
        raise ValueError("elements must share a conductor")
    return linalg.rank([e.coeffs for e in elems]) == len(elems)


# -- the four-term half sum ---------------------------------------------------


def check_four_regular(l: int, a: int, b: int) -> None:
    m = 2 * l
    if l < 2:
        raise ValueError("l must be at least 2")
    if a % l == 0 or b % l == 0:
        raise ValueError(f"a, b must be nonzero mod l (a={a}, b={b}, l={l})")
    if (a + b) % m == 0 or (a - b) % m == 0:
        raise ValueError(f"a +- b must be nonzero mod 2l (a={a}, b={b}, l={l})")


@dataclass(frozen=True)
class DeltaReport:
    l: int
    a: int
    b: int
    value: CycloElem  # the half sum in Q(zeta_{2l})
    conductor: int  # field the basis lives in
    rewritten: CycloElem  # the same number written in Q(zeta_conductor)
    terms: tuple[tuple[int, int], ...]  # (sign, exponent) over zeta_conductor
    branch: str
    basis: BosmaBasis
    coordinates: tuple[Fraction, ...]

    @property
    def integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coordinates)

    @property
    def non_integer_coordinates(self) -> list[tuple[int, Fraction]]:
        return [(e, c) for e, c in zip(self.basis.exponents, self.coordinates) if c.denominator != 1]


def _choices_for_terms(m: int, exps: Sequence[int]) -> dict[int, tuple[int, ...]]:
    choices: dict[int, tuple[int, ...]] = {}
    for p, _ in factorize(m):
        if p == 2:
            continue
        vals = {crt_decompose(m, r).pi(p) for r in exps}
        if p == 3 and len(vals) == 3:
            choices[p] = (1, 2)
            continue
        pad = [v for v in range(p) if v not in vals]
        choices[p] = tuple(sorted(vals | set(pad[: p - 1 - len(vals)])))
    return choices


def delta_report(l: int, a: int, b: int) -> DeltaReport:
    """Write ``(z^a + z^-a + z^b + z^-b) / 2`` (z = zeta_{2l}) in a fitted integral basis."""
    check_four_regular(l, a, b)
    m = 2 * l
    value = CycloElem.sum_of_powers(m, [a, -a, b, -b]).scale(Fraction(1, 2))
    if l % 2:
        conductor = l
        terms = [epsilon_map(l, c % m) for c in (a, -a, b, -b)]
        terms = [(s, e % l) for s, e in terms]
        branch = "odd-l"
    else:
        conductor = m
        terms = [(1, c % m) for c in (a, -a, b, -b)]
        branch = "even-l"
        for c in (a, b):
            if (4 * c) % m == 0:
                # z^c + z^-c = 0 here; only the other pair survives
                terms = [t for t in terms if t[1] not in (c % m, -c % m)]
                branch = "even-l-reduced"
    rewritten = CycloElem.sum_of_powers(
        conductor, [e for _, e in terms], [s for s, _ in terms]
    ).scale(Fraction(1, 2))
    if rewritten.lift(m) != value:  # pragma: no cover
        raise ArithmeticError("rewriting changed the value")
    basis = bosma_basis(conductor, _choices_for_terms(conductor, [e for _, e in terms]))
    coords = tuple(basis.coordinates(rewritten))
    return DeltaReport(l, a, b, value, conductor, rewritten, tuple(terms), branch, basis, coords)


def delta_integrality(l: int, a: int, b: int) -> bool:
    """Is the four-term half sum for X(Z_2l, {+-a, +-b}) an algebraic integer?"""
    return delta_report(l, a, b).integral


def half_cosine_sum_is_integral(m: int, k: int) -> bool:
    """Integrality of ``zeta_m^k + zeta_m^-k`` (always true; kept as a self-check)."""
    return is_algebraic_integer(to_bosma_conductor(CycloElem.sum_of_powers(m, [k, -k])))


def _rewrite_half(e: CycloElem) -> CycloElem:
    """Move an element of Q(zeta_m), m = 2 mod 4, into Q(zeta_{m/2})."""
    m = e.conductor
    l = m // 2
    poly = [Fraction(0)] * l
    for i, c in enumerate(e.coeffs):
        if c:
            s, k = epsilon_map(l, i)
            poly[k % l] += s * c
    out = CycloElem.from_poly(l, poly)
    if out.lift(m) != e:  # pragma: no cover
        raise ArithmeticError("rewrite to half conductor failed")
    return out


def to_bosma_conductor(e: CycloElem) -> CycloElem:
    """Return ``e`` in a field whose conductor admits a canonical basis."""
    return _rewrite_half(e) if e.conductor % 4 == 2 else e
