"""Why a + b != l rules out PST: a number that should be an algebraic integer is not.

The half sum (z^a + z^-a + z^b + z^-b) / 2 with z a primitive 2l-th root of
unity is written in an integral basis of a cyclotomic field. A fractional
coordinate certifies that it is not an algebraic integer.
"""

from __future__ import annotations

from gpst.classifier import nonintegrality_witness
from gpst.cyclotomic import bosma_basis, crt_decompose, delta_report

basis = bosma_basis(36, {2: (0, 1), 3: (0, 2)})
print("integral basis of Q(zeta_36) with A_2={0,1}, A_3={0,2}:")
print("  zeta_36^e for e in", sorted(basis.exponents))

dec = crt_decompose(36, 5)
print(f"zeta_36^5 splits as zeta_4^{dec.parts[0]} zeta_9^{dec.parts[1]}, pi/theta = {dec.pi_theta()}")

for l, a, b in [(5, 1, 2), (6, 1, 3), (7, 2, 3), (5, 2, 3)]:
    rep = delta_report(l, a, b)
    print(f"\nl={l}, a={a}, b={b}  ({rep.branch}, conductor {rep.conductor})")
    print(f"  value      {rep.rewritten}")
    print(f"  coords     {[str(c) for c in rep.coordinates]}")
    print(f"  integral   {rep.integral}")
    if a + b != l:
        print(f"  witness    {nonintegrality_witness(l, a, b)['non_integer']}")
