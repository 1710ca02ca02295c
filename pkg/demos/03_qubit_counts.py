"""Qubit-count accounting: exact totals, the closed-form bound, and the
gap between the plain- and total-domination encodings.

Total domination uses open neighborhoods, so degree-2 vertices need no
slack at all and degree-d vertices encode a slack range one smaller than
in the plain-domination encoding. On every graph the plain encoding
therefore needs at least as many qubits; the gap g obeys
2|V2| <= g <= 2|V2| + |V>=3|.
"""

import numpy as np

from tds_qaoa import Graph, builtin_instance, degree_partition, qubit_counts, qubit_upper_bound

g = builtin_instance()
q_tdp, q_dp, gap = qubit_counts(g)
part = degree_partition(g)
print(f"benchmark: q_tdp = {q_tdp}, q_dp = {q_dp}, gap = {gap}")
print(f"  |V2| = {len(part.v2)}, |V>=3| = {len(part.v_ge3)}, "
      f"interval [{2 * len(part.v2)}, {2 * len(part.v2) + len(part.v_ge3)}]")
print(f"  closed-form upper bound: {qubit_upper_bound(g):.4f} >= {q_tdp}")

rng = np.random.default_rng(0)
print("\nrandom graphs with min degree >= 2:")
for _ in range(5):
    n = int(rng.integers(5, 12))
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6]
        cand = Graph(n, edges)
        if min(cand.degrees()) >= 2:
            break
    q_tdp, q_dp, gap = qubit_counts(cand)
    print(f"  n={n:2d} m={cand.n_edges:2d}: q_tdp={q_tdp:2d} q_dp={q_dp:2d} gap={gap:2d} "
          f"bound={qubit_upper_bound(cand):6.2f}")
