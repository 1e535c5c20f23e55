"""Three ways to decide PST at a given time.

(A) run the walk, (B) check T_tau(P) e_x = +-e_y, (C) read it off the
spectral projectors and cos(j pi / tau) angles. For X(Z_12, {+-1, +-5}) all
three light up first at tau = 6 for the antipodal vertex.
"""

from __future__ import annotations

from gpst.graph_core import CirculantSpec, build_circulant, build_walk_matrices, vertex_type_state
from gpst.pst_engine import pst_criterion_B, pst_criterion_C, spectral_decomposition
from gpst.walk_sim import evolve, transfer_check

spec = CirculantSpec.from_generators(12, [1, 5])
g = build_circulant(spec)
wm = build_walk_matrices(g)
dec = spectral_decomposition(wm, spec)

print("eigenvalue classes of P:")
for c in dec.classes:
    print(f"  {c.value:+.6f}  multiplicity {c.multiplicity}  j in {sorted(c.indices)}")

phi, psi = vertex_type_state(g, 0), vertex_type_state(g, 6)
print("\n tau   (A)    (B)    (C)")
for tau in range(1, 13):
    a, _ = transfer_check(evolve(wm.U, phi, tau), psi)
    b, _ = pst_criterion_B(wm, 0, 6, tau)
    c = pst_criterion_C(dec, 0, 6, tau)
    print(f"{tau:4d}  {a!s:5s}  {b!s:5s}  {c.holds!s:5s}  {c.failure or ''}")

c = pst_criterion_C(dec, 0, 6, 6)
print("\nwitnesses at tau = 6:")
for i, w in c.witnesses.items():
    print(f"  lambda = {w.lam:+.4f} = cos({w.j} pi / 6), {w.parity}, exact = {w.exact}")
