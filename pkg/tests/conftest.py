from __future__ import annotations

import random
import sys
from fractions import Fraction

import pytest

from gpst.cyclotomic import CycloElem, totient


def rand_elem(rnd: random.Random, n: int, dens=(1, 1, 2, 3, 4)) -> CycloElem:
    den = rnd.choice(dens)
    return CycloElem(n, tuple(Fraction(rnd.randint(-3, 3), den) for _ in range(totient(n))))


@pytest.fixture
def rnd():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split(":")[0].split()[1])):
        terminalreporter.write_line(line)
