"""Automorphisms commute with the walk and carry PST along with them.

Every dihedral map of Z_n is an automorphism of a circulant. Because it
commutes with U, it moves a PST pair (0, l) to another PST pair at the same
time. An automorphism that fixes 0 but moves y rules y out as a target.
"""

from __future__ import annotations

from gpst.graph_core import CirculantSpec, build_circulant, build_walk_matrices
from gpst.pst_engine import search_min_pst
from gpst.symmetry import dihedral_automorphisms, fixing_group_obstruction, pst_transport_check, verify_intertwining

spec = CirculantSpec.from_generators(20, [3, 7])
g = build_circulant(spec)
wm = build_walk_matrices(g)
auts = dihedral_automorphisms(spec, g)
print(f"{spec}: {len(auts)} dihedral automorphisms, "
      f"max intertwining deviation {max(verify_intertwining(wm, a) for a in auts):.1e}")

v = search_min_pst(wm, 0, 80, spec)
print(f"PST 0 -> {v.target} at tau = {v.tau_min}")
moved = [(a(0), a(v.target)) for a in auts[:5]]
ok = all(pst_transport_check(wm, a, 0, v.target, v.tau_min, v.gamma) for a in auts)
print(f"transported pairs (first five): {moved}; all hold: {ok}")

blocked = [y for y in range(1, spec.n) if fixing_group_obstruction(g, 0, y, auts)]
print(f"targets excluded by an automorphism fixing 0: {len(blocked)} of {spec.n - 1}; "
      f"left: {[y for y in range(1, spec.n) if y not in blocked]}")
