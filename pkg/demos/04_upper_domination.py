"""Upper domination Γ with Z gadgets, checked against a full subset scan."""

import time

from domrec import DomVariant, bb_optimal, construct_upper, enumerate_minimal_dominating
from domrec.graph import complete, popcount
from domrec.solvers import brute_force_minimal_dominating

C = construct_upper(complete(2))
G = C.graph
value, family = bb_optimal(G, DomVariant.UPPER_GAMMA)
print(f"K2 host -> {G.n} vertices, Γ = {value}")
for labels in family.as_labels():
    print("  ", ",".join(labels))

t = time.perf_counter()
every = enumerate_minimal_dominating(G)
t1 = time.perf_counter()
scan = brute_force_minimal_dominating(G)
t2 = time.perf_counter()
print(f"minimal dominating sets: {len(every)} by search ({t1 - t:.2f}s), "
      f"{len(scan)} by scanning 2^{G.n} subsets ({t2 - t1:.2f}s), equal: {every == scan}")

# z* also sees the host, so it can keep a host vertex private next to all of X*
start = dict(C.gadgets)["Z*"]
block = 0b1111111 << start
heavy = [S for S in every if popcount(S & block) == 4]
print(f"sets meeting Z* in four vertices: {len(heavy)}, largest has {max(map(popcount, heavy))}")
print("example:", G.format_set(heavy[0]))
