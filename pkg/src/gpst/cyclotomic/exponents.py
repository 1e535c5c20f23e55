"""CRT splitting of roots of unity and the per-prime exponent maps.

For ``n = prod q_j`` with ``q_j = p_j^f_j`` every ``zeta_n^x`` is a unique
product ``prod zeta_{q_j}^{x_j}``. Each ``x_j`` is further split as
``x_j = pi * p^(f-1) + theta`` (odd p) or ``x_j = pi * 2^(f-2) + theta``
(p = 2, f >= 2); pi selects a power of ``zeta_{p*}`` and theta a power of
``zeta_{q_j}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import factorize


class UndefinedAtTwoError(ValueError):
    """pi/theta at p = 2 are undefined when n = 2 mod 4."""


def _prime_split(p: int, f: int) -> int:
    """Size of the theta range for prime power p^f."""
    if p == 2:
        if f < 2:
            raise UndefinedAtTwoError("pi/theta at 2 need 4 | n")
        return 2 ** (f - 2)
    return p ** (f - 1)


@dataclass(frozen=True)
class ExponentDecomposition:
    n: int
    x: int
    primes: tuple[tuple[int, int], ...]
    parts: tuple[int, ...]

    def component(self, p: int) -> int:
        for (q, _), xj in zip(self.primes, self.parts):
            if q == p:
                return xj
        raise KeyError(f"{p} does not divide {self.n}")

    def _split(self, p: int) -> tuple[int, int]:
        f = dict(self.primes)[p]
        size = _prime_split(p, f)
        return divmod(self.component(p), size)

    def pi(self, p: int) -> int:
        return self._split(p)[0]

    def theta(self, p: int) -> int:
        return self._split(p)[1]

    def pi_theta(self) -> dict[int, tuple[int, int]]:
        """``{p: (pi, theta)}`` for every prime where the maps are defined."""
        out = {}
        for p, f in self.primes:
            if p == 2 and f < 2:
                continue
            out[p] = self._split(p)
        return out


def crt_decompose(n: int, x: int) -> ExponentDecomposition:
    if n < 2:
        raise ValueError("n must be at least 2")
    primes = tuple(factorize(n))
    x %= n
    parts = []
    for p, f in primes:
        q = p**f
        cof = n // q
        parts.append(x * pow(cof, -1, q) % q)
    return ExponentDecomposition(n, x, primes, tuple(parts))


def crt_compose(n: int, parts) -> int:
    """Inverse of :func:`crt_decompose`: the x with prod zeta_{q_j}^{x_j} = zeta_n^x."""
    primes = factorize(n)
    if len(parts) != len(primes):
        raise ValueError("one component per prime power is required")
    x = 0
    for (p, f), xj in zip(primes, parts):
        q = p**f
        if not 0 <= xj < q:
            raise ValueError(f"component {xj} outside [{q}]")
        x += xj * (n // q)
    return x % n


def negation_reduction(n: int, x: int) -> dict:
    """pi/theta of ``-zeta_n^x`` and ``pi^(3)`` of ``zeta_n^-x`` by the reduction rules.

    The rule values are compared with a direct decomposition of the rewritten
    exponent (``x + n/2`` and ``-x``) before being returned.
    """
    out: dict = {}
    base = crt_decompose(n, x)
    if n % 4 == 0:
        neg = {}
        for p, (pi, theta) in base.pi_theta().items():
            neg[p] = ((pi + 2) % 4 if p == 2 else pi, theta)
        direct = crt_decompose(n, x + n // 2).pi_theta()
        if direct != neg:  # pragma: no cover
            raise ArithmeticError(f"negation rule disagrees with direct decomposition at n={n}, x={x}")
        out["negated"] = neg
    if n % 3 == 0:
        pi3, theta3 = base.pi(3), base.theta(3)
        rule = (3 - pi3) % 3 if theta3 == 0 else 2 - pi3
        direct = crt_decompose(n, -x).pi(3)
        if direct != rule:  # pragma: no cover
            raise ArithmeticError(f"inversion rule disagrees with direct decomposition at n={n}, x={x}")
        out["inverse_pi3"] = rule
    if not out:
        raise ValueError(f"neither 4 nor 3 divides n={n}")
    return out
