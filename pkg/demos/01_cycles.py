"""Perfect state transfer on cycles.

On an even cycle the vertex state d*e_0 arrives at the opposite vertex after
n/2 steps and then returns there every n steps. Odd cycles never get there.
"""

from __future__ import annotations

from gpst.graph_core import build_walk_matrices, cycle_graph, vertex_type_state
from gpst.pst_engine import search_min_pst
from gpst.walk_sim import fidelity_trace

for n in range(3, 11):
    v = search_min_pst(cycle_graph(n), 0, 4 * n)
    if v.occurs:
        print(f"C_{n}: PST 0 -> {v.target} at tau = {v.tau_min} (gamma = {v.gamma})")
    else:
        print(f"C_{n}: no PST up to tau = {4 * n}")

g = cycle_graph(6)
wm = build_walk_matrices(g)
trace = fidelity_trace(wm.U, vertex_type_state(g, 0), vertex_type_state(g, 3), 20)
print("\nC_6 fidelity to vertex 3:")
for t, f in zip(trace.times, trace.fidelities):
    print(f"  tau={t:2d}  {'#' * round(40 * f):<40s} {f:.3f}")
print("hits at", trace.hits)
