from __future__ import annotations

from gpst.serialize import dumps
from gpst.suites import run_suite


def test_all_suite_small():
    recs = run_suite("all", 8, seed=3)
    assert recs[-1]["pass"], [r for r in recs if not r["pass"]]
    kinds = {r.get("kind") for r in recs}
    assert {"classification", "circulant", "random-graph", "bosma-36", "delta", "integrality-oracle"} <= kinds


def test_seed_determinism():
    a = "".join(dumps(r) for r in run_suite("lemmas", 7, seed=11))
    b = "".join(dumps(r) for r in run_suite("lemmas", 7, seed=11))
    assert a == b
