"""Shared test helpers: random graphs and independent reference oracles."""

from __future__ import annotations

import numpy as np

from tds_qaoa import Graph

# Minimum total dominating sets of the bundled 6-node benchmark graph.
PAPER6_MIN_TDS = {
    frozenset({0, 1, 2}),
    frozenset({0, 4, 5}),
    frozenset({1, 2, 4}),
    frozenset({2, 4, 5}),
}


def reference_paper6_qubo(x, p):
    """Hand-expanded objective plus the six penalty terms of the benchmark.

    Written directly from the graph's neighborhoods (vertex i constraint
    covers N(i)): degree-2 vertices 0, 1, 3, 5 get the product form, the
    degree-3 vertices 2 and 4 get squared slack forms over (x6, x7) and
    (x8, x9). Independent of the compiler's expand-and-merge pipeline.
    """
    obj = x[0] + x[1] + x[2] + x[3] + x[4] + x[5]
    pen = (
        (1 - x[1] - x[5] + x[1] * x[5])
        + (1 - x[0] - x[2] + x[0] * x[2])
        + (x[1] + x[3] + x[4] - (x[6] + x[7]) - 1) ** 2
        + (1 - x[2] - x[4] + x[2] * x[4])
        + (x[2] + x[3] + x[5] - (x[8] + x[9]) - 1) ** 2
        + (1 - x[0] - x[4] + x[0] * x[4])
    )
    return obj + p * pen


def random_graph(rng: np.random.Generator, n: int, edge_prob: float = 0.5) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    return Graph(n, edges)


def random_graph_min_degree(
    rng: np.random.Generator, n: int, min_degree: int, connected: bool = False
) -> Graph:
    """Rejection-sample a random graph with the requested minimum degree."""
    for _ in range(10_000):
        g = random_graph(rng, n, edge_prob=max(0.5, 2.0 * min_degree / max(n - 1, 1)))
        if min(g.degrees(), default=0) < min_degree:
            continue
        if connected and not _is_connected(g):
            continue
        return g
    raise RuntimeError(f"could not sample a graph with n={n}, min degree {min_degree}")


def _is_connected(g: Graph) -> bool:
    if g.n_vertices == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n_vertices


def dense_evolve_oracle(energies: np.ndarray, gammas, betas) -> np.ndarray:
    """Reference circuit built from explicit 2^n x 2^n matrix exponentials.

    The mixer exponential comes from the eigendecomposition of the dense
    sum-of-X operator; the cost exponential from the diagonal energies.
    """
    size = len(energies)
    n = size.bit_length() - 1
    pauli_x = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    mixer = np.zeros((size, size), dtype=complex)
    for j in range(n):
        op = np.eye(1, dtype=complex)
        for k in range(n):
            op = np.kron(op, pauli_x if k == j else np.eye(2, dtype=complex))
        mixer += op
    eigvals, eigvecs = np.linalg.eigh(mixer)

    state = np.full(size, 2.0 ** (-n / 2.0), dtype=complex)
    for gamma, beta in zip(gammas, betas):
        state = np.exp(-1j * gamma * energies) * state
        state = eigvecs @ (np.exp(-1j * beta * eigvals) * (eigvecs.conj().T @ state))
    return state


def all_assignments(n_vars: int):
    """All 0/1 tuples of length n_vars in basis-state index order."""
    for k in range(1 << n_vars):
        yield tuple((k >> (n_vars - 1 - i)) & 1 for i in range(n_vars))
