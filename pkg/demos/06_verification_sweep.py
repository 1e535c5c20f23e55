"""Cross-check the classifier against brute force on every small circulant.

The same sweep is available as ``gpst verify --suite theorems``.
"""

from __future__ import annotations

import time
from collections import Counter

from gpst.classifier import verify_classification

t0 = time.perf_counter()
report = verify_classification(16)
elapsed = time.perf_counter() - t0

cases = Counter(r["case"] for r in report.records)
positive = Counter(r["case"] for r in report.records if r["theory"]["occurs"])
print(f"{len(report.records)} connected circulants with n <= 16 in {elapsed:.2f} s")
for case, count in sorted(cases.items()):
    print(f"  {case:<16s} {count:4d} graphs, {positive[case]:3d} with PST")
print("mismatches:", report.mismatches or "none")
