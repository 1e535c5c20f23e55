"""The 4-regular circulants X(Z_2l, {+-a, +-b}).

The theorem-based classifier says PST happens exactly when a + b = l and
l is not divisible by 4. Brute force agrees on every instance below.
"""

from __future__ import annotations

from gpst.classifier import classify, enumerate_circulants
from gpst.graph_core import build_circulant
from gpst.pst_engine import search_min_pst

print(f"{'graph':<22s} {'case':<16s} {'theory':>8s} {'search':>8s}")
for spec in enumerate_circulants(20, valencies=(4,)):
    if spec.n % 2:
        continue
    theory = classify(spec)
    brute = search_min_pst(build_circulant(spec), 0, 4 * spec.n, spec, prune=False)
    t = theory.tau_min if theory.occurs else "-"
    s = brute.tau_min if brute.occurs else "-"
    mark = "" if (theory.occurs, theory.tau_min) == (brute.occurs, brute.tau_min) else "  <-- mismatch"
    if theory.occurs or spec.n <= 10:
        print(f"{str(spec):<22s} {theory.case:<16s} {t!s:>8s} {s!s:>8s}{mark}")
