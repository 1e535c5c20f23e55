"""PST decision procedure for circulants of valency 2, 3 and 4.

The verdicts here are read off the theorem statements; brute-force search is
used only by :func:`verify_classification` to cross-check them.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from .cyclotomic import delta_report
from .graph_core import CirculantSpec, build_circulant, is_connected
from .pst_engine import PSTVerdict, search_min_pst

CASE_LABELS = (
    "cycle-even",
    "cycle-odd",
    "valency3",
    "v4-sum-l-odd",
    "v4-sum-l-2mod4",
    "v4-sum-l-0mod4",
    "v4-sum-not-l",
    "v4-odd-order",
)


class ClassificationRefused(ValueError):
    pass


@dataclass(frozen=True)
class CirculantFamilyCase:
    valency: int
    label: str
    l: int | None = None
    a: int | None = None
    b: int | None = None


def family_case(spec: CirculantSpec) -> CirculantFamilyCase:
    k = spec.valency
    if k not in (2, 3, 4):
        raise ClassificationRefused(f"valency {k} is outside 2..4")
    if not is_connected(spec):
        raise ClassificationRefused(f"{spec} is disconnected")
    n = spec.n
    gens = spec.generators
    if k == 2:
        return CirculantFamilyCase(2, "cycle-even" if n % 2 == 0 else "cycle-odd", n // 2 if n % 2 == 0 else None, gens[0])
    if k == 3:
        # odd valency forces n = 2l with l in S
        l = n // 2
        (a,) = [g for g in gens if g != l]
        return CirculantFamilyCase(3, "valency3", l, a)
    if n % 2:
        return CirculantFamilyCase(4, "v4-odd-order", None, gens[0], gens[1])
    l = n // 2
    a, b = gens
    if a + b != l:
        label = "v4-sum-not-l"
    elif l % 2:
        label = "v4-sum-l-odd"
    elif l % 4 == 2:
        label = "v4-sum-l-2mod4"
    else:
        label = "v4-sum-l-0mod4"
    return CirculantFamilyCase(4, label, l, a, b)


_BRANCH = {
    "cycle-even": "cycle theorem: even cycle, PST at minimum time n/2",
    "cycle-odd": "cycle theorem: odd cycle, no PST",
    "valency3": "valency-3 theorem: no PST",
    "v4-sum-l-odd": "valency-4 theorem (i): a+b=l, l odd, minimum time 2l",
    "v4-sum-l-2mod4": "valency-4 theorem (ii): a+b=l, l=2 mod 4, minimum time l",
    "v4-sum-l-0mod4": "valency-4 theorem: a+b=l with l=0 mod 4, no PST",
    "v4-sum-not-l": "valency-4 theorem: a+b!=l, no PST",
    "v4-odd-order": "antipodal lemma: n odd, no PST",
}


def classify(spec: CirculantSpec, x: int = 0) -> PSTVerdict:
    case = family_case(spec)
    n = spec.n
    tau = None
    if case.label == "cycle-even":
        tau = n // 2
    elif case.label == "v4-sum-l-odd":
        tau = 2 * case.l
    elif case.label == "v4-sum-l-2mod4":
        tau = case.l
    evidence = [{"criterion": "theorem", "passed": tau is not None,
                 "details": {"case": case.label, "branch": _BRANCH[case.label],
                             "l": case.l, "a": case.a, "b": case.b}}]
    if tau is None:
        return PSTVerdict(False, x, evidence=evidence, case=case.label)
    y = (x + n // 2) % n
    return PSTVerdict(True, x, y, tau, 1, evidence, [y], case.label)


def enumerate_circulants(n_max: int, valencies=(2, 3, 4), n_min: int = 3,
                         connected_only: bool = True) -> list[CirculantSpec]:
    """Every circulant with ``n_min <= n <= n_max`` and the given valencies, each S once."""
    out = []
    for n in range(max(n_min, 2), n_max + 1):
        reps = list(range(1, n // 2 + 1))
        for mask in range(1, 1 << len(reps)):
            gens = [r for i, r in enumerate(reps) if mask >> i & 1]
            spec = CirculantSpec.from_generators(n, gens)
            if spec.valency not in valencies:
                continue
            if connected_only and not is_connected(spec):
                continue
            out.append(spec)
    out.sort(key=lambda s: (s.n, s.valency, s.generators))
    return out


def _compare(spec: CirculantSpec, tau_max_factor: int) -> dict[str, Any]:
    theory = classify(spec)
    brute = search_min_pst(build_circulant(spec), 0, tau_max_factor * spec.n, spec, prune=False)
    fields = ("occurs", "target", "tau_min", "gamma")
    diffs = [f for f in fields if getattr(theory, f) != getattr(brute, f)]
    return {
        "n": spec.n,
        "s": sorted(spec.s),
        "case": theory.case,
        "theory": {f: getattr(theory, f) for f in fields},
        "search": {f: getattr(brute, f) for f in fields},
        "tau_max": tau_max_factor * spec.n,
        "agree": not diffs,
        "mismatch_fields": diffs,
    }


@dataclass
class ClassificationReport:
    records: list[dict[str, Any]] = field(default_factory=list)

    @property
    def mismatches(self) -> list[dict[str, Any]]:
        return [r for r in self.records if not r["agree"]]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_classification(n_max: int, tau_max_factor: int = 4, jobs: int = 1) -> ClassificationReport:
    """Compare :func:`classify` with brute-force search on every connected circulant up to ``n_max``."""
    specs = enumerate_circulants(n_max)
    factors = [tau_max_factor] * len(specs)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_compare, specs, factors, chunksize=4))
    else:
        records = [_compare(s, f) for s, f in zip(specs, factors)]
    return ClassificationReport(records)


def normalize_pair(l: int, a: int, b: int) -> tuple[int, int]:
    """Representatives of +-a, +-b in [1, l-1], sorted."""
    m = 2 * l
    ra, rb = sorted(min(v % m, (-v) % m) for v in (a, b))
    return ra, rb


def nonintegrality_witness(l: int, a: int, b: int) -> dict[str, Any]:
    """Evidence that the four-term half sum is not an algebraic integer (no PST)."""
    ra, rb = normalize_pair(l, a, b)
    if ra in (0, l) or rb in (0, l) or ra == rb:
        raise ValueError(f"X(Z_{2 * l}, {{+-{a}, +-{b}}}) is not 4-regular")
    if ra + rb == l:
        raise ValueError("a + b = l: the non-integrality argument does not apply")
    rep = delta_report(l, ra, rb)
    return {
        "l": l,
        "a": ra,
        "b": rb,
        "delta": str(rep.value),
        "conductor": rep.conductor,
        "rewritten": str(rep.rewritten),
        "branch": rep.branch,
        "basis_choices": {str(p): list(c) for p, c in rep.basis.choices},
        "basis_exponents": list(rep.basis.exponents),
        "coordinates": [str(c) for c in rep.coordinates],
        "non_integer": [[e, str(c)] for e, c in rep.non_integer_coordinates],
        "certified": not rep.integral,
    }
