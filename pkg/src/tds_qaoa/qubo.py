"""Compile the total domination problem into a QUBO model.

The 0-1 program minimizes sum(X_i) subject to sum_{j in N(i)} X_j >= 1 for
every vertex i. Each covering constraint becomes a quadratic penalty scaled
by a punishment coefficient P:

  |N(i)| = 1, N(i) = {j}:    P * (X_j - 1)^2
  |N(i)| = 2, N(i) = {j,k}:  P * (1 - X_j - X_k + X_j * X_k)
  |N(i)| >= 3:               P * (sum_{j in N(i)} X_j - S_i - 1)^2

where S_i is a slack integer in [0, |N(i)|-1] realized by a binary expansion
over fresh 0/1 variables. All squares are expanded, x^2 folded to x, and
like terms merged, yielding constant + linear + quadratic coefficient maps.

Also provides the qubit-count quantities: the closed-form upper bound
2|V| + |V| log2(2|E|/|V| - 1) and the exact per-graph counts for the total
and plain domination encodings, whose gap g satisfies
2|V2| <= g <= 2|V2| + |V>=3|.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

from .graphs import Graph, InfeasibleGraphError, degree_partition


@dataclass(frozen=True)
class SlackGroup:
    """Slack variables encoding one covering constraint with |N(i)| >= 3."""

    vertex: int
    indices: tuple[int, ...]
    coefficients: tuple[int, ...]


@dataclass(frozen=True)
class VariableRegistry:
    """Layout of QUBO variables: vertex vars first, then slack groups.

    Vertex i maps to variable i; slack groups occupy contiguous index ranges
    after the vertex block, in ascending constraint-vertex order.
    """

    n_vertex_vars: int
    slack_groups: tuple[SlackGroup, ...] = ()

    @property
    def total_vars(self) -> int:
        return self.n_vertex_vars + sum(len(g.indices) for g in self.slack_groups)


@dataclass(frozen=True)
class QuboModel:
    """Merged quadratic polynomial over 0/1 variables.

    quadratic keys are ordered pairs (i, j) with i < j; squares have been
    folded into the linear map via x^2 = x. Treat instances as immutable.
    """

    n_vars: int
    constant: float
    linear: dict[int, float]
    quadratic: dict[tuple[int, int], float]
    penalty: float
    registry: VariableRegistry = field(repr=False)

    def evaluate(self, x: Sequence[int]) -> float:
        """Value of the polynomial at a 0/1 assignment of length n_vars."""
        if len(x) != self.n_vars:
            raise ValueError(f"assignment has length {len(x)}, expected {self.n_vars}")
        total = self.constant
        for i, c in self.linear.items():
            if x[i]:
                total += c
        for (i, j), c in self.quadratic.items():
            if x[i] and x[j]:
                total += c
        return total

    def to_dict(self) -> dict:
        return {
            "n_vars": self.n_vars,
            "constant": self.constant,
            "linear": [[i, c] for i, c in sorted(self.linear.items())],
            "quadratic": [[i, j, c] for (i, j), c in sorted(self.quadratic.items())],
            "penalty": self.penalty,
            "n_vertex_vars": self.registry.n_vertex_vars,
            "slack_groups": [
                {
                    "vertex": g.vertex,
                    "indices": list(g.indices),
                    "coefficients": list(g.coefficients),
                }
                for g in self.registry.slack_groups
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "QuboModel":
        registry = VariableRegistry(
            n_vertex_vars=data["n_vertex_vars"],
            slack_groups=tuple(
                SlackGroup(g["vertex"], tuple(g["indices"]), tuple(g["coefficients"]))
                for g in data["slack_groups"]
            ),
        )
        return cls(
            n_vars=data["n_vars"],
            constant=float(data["constant"]),
            linear={int(i): float(c) for i, c in data["linear"]},
            quadratic={(int(i), int(j)): float(c) for i, j, c in data["quadratic"]},
            penalty=float(data["penalty"]),
            registry=registry,
        )

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "QuboModel":
        return cls.from_dict(json.loads(text))


def slack_coefficients(n: int) -> list[int]:
    """Binary-expansion coefficients for a slack integer in [0, n-1], n >= 3.

    Uses bl = floor(log2(n-1)) + 1 coefficients: powers 2^0 .. 2^(bl-2)
    followed by a remainder (n-1) - (2^(bl-1) - 1), so that subset sums of
    the coefficients reach exactly {0, ..., n-1}.
    """
    if n < 3:
        raise ValueError(f"slack encoding requires n >= 3, got {n} (n = 1, 2 need no slack)")
    bl = (n - 1).bit_length()
    powers = [1 << (i - 1) for i in range(1, bl)]
    remainder = (n - 1) - sum(powers)
    return powers + [remainder]


def _add_linear(linear: dict[int, float], i: int, c: float) -> None:
    linear[i] = linear.get(i, 0.0) + c


def _add_quadratic(quad: dict[tuple[int, int], float], i: int, j: int, c: float) -> None:
    key = (i, j) if i < j else (j, i)
    quad[key] = quad.get(key, 0.0) + c


def _add_squared_affine(
    linear: dict[int, float],
    quad: dict[tuple[int, int], float],
    terms: list[tuple[int, float]],
    offset: float,
    scale: float,
) -> float:
    """Accumulate scale * (sum_k a_k x_k + offset)^2, folding x^2 = x.

    Returns the constant contribution scale * offset^2.
    """
    for idx, (i, a) in enumerate(terms):
        _add_linear(linear, i, scale * (a * a + 2.0 * offset * a))
        for j, b in terms[idx + 1 :]:
            _add_quadratic(quad, i, j, scale * 2.0 * a * b)
    return scale * offset * offset


def compile_tdp_qubo(g: Graph, p: float | None = None) -> QuboModel:
    """Build the QUBO for the total domination problem on g.

    p is the punishment coefficient; defaults to 1.5 * n_vertices. Raises
    InfeasibleGraphError when the graph has an isolated vertex (the covering
    constraint sum over an empty neighborhood cannot be satisfied).
    """
    if p is None:
        p = 1.5 * g.n_vertices
    if p <= 0:
        raise ValueError(f"punishment coefficient must be positive, got {p}")

    degrees = g.degrees()
    if any(deg == 0 for deg in degrees):
        raise InfeasibleGraphError("infeasible: no TDS exists (isolated vertex)")

    groups = []
    next_index = g.n_vertices
    for v in range(g.n_vertices):
        if degrees[v] >= 3:
            coeffs = slack_coefficients(degrees[v])
            indices = tuple(range(next_index, next_index + len(coeffs)))
            groups.append(SlackGroup(v, indices, tuple(coeffs)))
            next_index += len(coeffs)
    registry = VariableRegistry(g.n_vertices, tuple(groups))
    slack_by_vertex = {grp.vertex: grp for grp in registry.slack_groups}

    constant = 0.0
    linear: dict[int, float] = {}
    quadratic: dict[tuple[int, int], float] = {}

    # Objective: the cardinality of the candidate set.
    for v in range(g.n_vertices):
        _add_linear(linear, v, 1.0)

    for i in range(g.n_vertices):
        nbrs = sorted(g.neighbors(i))
        if len(nbrs) == 1:
            # P * (X_j - 1)^2
            (j,) = nbrs
            constant += _add_squared_affine(linear, quadratic, [(j, 1.0)], -1.0, p)
        elif len(nbrs) == 2:
            # P * (1 - X_j - X_k + X_j X_k)
            j, k = nbrs
            constant += p
            _add_linear(linear, j, -p)
            _add_linear(linear, k, -p)
            _add_quadratic(quadratic, j, k, p)
        else:
            # P * (sum_{j in N(i)} X_j - S_i - 1)^2, slack expanded
            grp = slack_by_vertex[i]
            terms = [(j, 1.0) for j in nbrs]
            terms += [(idx, -float(c)) for idx, c in zip(grp.indices, grp.coefficients)]
            constant += _add_squared_affine(linear, quadratic, terms, -1.0, p)

    linear = {i: c for i, c in sorted(linear.items()) if c != 0.0}
    quadratic = {k: c for k, c in sorted(quadratic.items()) if c != 0.0}
    return QuboModel(
        n_vars=registry.total_vars,
        constant=constant,
        linear=linear,
        quadratic=quadratic,
        penalty=float(p),
        registry=registry,
    )


def qubit_upper_bound(g: Graph) -> float:
    """Closed-form qubit upper bound 2|V| + |V| log2(2|E|/|V| - 1).

    Valid for graphs with minimum degree >= 2; the logarithm argument is
    nonpositive when 2|E| <= |V|, which is rejected.
    """
    n, m = g.n_vertices, g.n_edges
    if n == 0:
        raise ValueError("bound undefined for the empty graph")
    ratio = 2.0 * m / n - 1.0
    if ratio <= 0.0:
        raise ValueError(f"bound undefined: 2|E|/|V| - 1 = {ratio} is nonpositive")
    return 2.0 * n + n * math.log2(ratio)


def qubit_counts(g: Graph) -> tuple[int, int, int]:
    """Exact qubit counts (q_tdp, q_dp, gap) for the two domination encodings.

    q_tdp = |V| + sum over deg >= 3 of (floor(log2(d - 1)) + 1);
    q_dp  = |V| + 2|V2| + sum over deg >= 3 of (floor(log2(d)) + 1).
    The plain domination encoding uses closed neighborhoods, so degree-2
    vertices already need slack there and every high-degree slack is one
    range step wider.
    """
    part = degree_partition(g)
    degrees = g.degrees()
    # floor(log2(x)) + 1 == x.bit_length() for x >= 1
    q_tdp = g.n_vertices + sum((degrees[v] - 1).bit_length() for v in part.v_ge3)
    q_dp = (
        g.n_vertices
        + 2 * len(part.v2)
        + sum(degrees[v].bit_length() for v in part.v_ge3)
    )
    return q_tdp, q_dp, q_dp - q_tdp


_MIN_BRUTEFORCE_LIMIT = 24


def qubo_min_bruteforce(m: QuboModel) -> tuple[float, list[tuple[int, ...]]]:
    """Exhaustive minimum over all 2^n_vars assignments, with all argmins.

    Ground-truth oracle; assignments are returned as 0/1 tuples in variable
    order.
    """
    if m.n_vars > _MIN_BRUTEFORCE_LIMIT:
        raise ValueError(f"exhaustive scan limited to {_MIN_BRUTEFORCE_LIMIT} variables")
    best = math.inf
    argmins: list[tuple[int, ...]] = []
    for k in range(1 << m.n_vars):
        x = tuple((k >> (m.n_vars - 1 - i)) & 1 for i in range(m.n_vars))
        value = m.evaluate(x)
        if value < best:
            best = value
            argmins = [x]
        elif value == best:
            argmins.append(x)
    return best, argmins
