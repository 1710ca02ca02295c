import math

import numpy as np
import pytest

from tds_qaoa import (
    Graph,
    InfeasibleGraphError,
    QuboModel,
    VariableRegistry,
    builtin_instance,
    build_energy_table,
    compile_tdp_qubo,
    is_total_dominating_set,
    qubit_counts,
    qubit_upper_bound,
    qubo_min_bruteforce,
    slack_coefficients,
)
from support import (
    PAPER6_MIN_TDS,
    all_assignments,
    random_graph,
    random_graph_min_degree,
    reference_paper6_qubo,
)


def bits(s):
    return [int(c) for c in s]


class TestSlackCoefficients:
    def test_n3(self):
        assert slack_coefficients(3) == [1, 1]

    def test_n4(self):
        assert slack_coefficients(4) == [1, 2]

    def test_n5(self):
        assert slack_coefficients(5) == [1, 2, 1]

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            slack_coefficients(2)

    @pytest.mark.parametrize("n", range(3, 40))
    def test_reachable_sums_exact(self, n):
        coeffs = slack_coefficients(n)
        assert len(coeffs) == (n - 1).bit_length()
        assert sum(coeffs) == n - 1
        sums = {0}
        for c in coeffs:
            sums |= {s + c for s in sums}
        assert sums == set(range(n))


class TestCompile:
    def test_paper6_layout(self):
        m = compile_tdp_qubo(builtin_instance(), 9.0)
        assert m.n_vars == 10
        assert m.registry.n_vertex_vars == 6
        groups = m.registry.slack_groups
        assert [(g.vertex, g.indices, g.coefficients) for g in groups] == [
            (2, (6, 7), (1, 1)),
            (4, (8, 9), (1, 1)),
        ]

    @pytest.mark.parametrize("p", [9.0, 6.5, 1.0])
    def test_paper6_matches_reference_expansion_exactly(self, p):
        m = compile_tdp_qubo(builtin_instance(), p)
        for x in all_assignments(10):
            assert m.evaluate(x) == reference_paper6_qubo(x, p)

    def test_paper6_matches_reference_at_nonrepresentable_penalty(self):
        # 4.8 is not exactly representable; merged vs term-by-term orders
        # agree only to rounding
        m = compile_tdp_qubo(builtin_instance(), 4.8)
        worst = max(
            abs(m.evaluate(x) - reference_paper6_qubo(x, 4.8)) for x in all_assignments(10)
        )
        assert worst < 1e-9

    def test_single_edge_model(self):
        g = Graph(2, [(0, 1)])
        m = compile_tdp_qubo(g, 3.0)
        assert m.n_vars == 2
        values = {x: m.evaluate(x) for x in all_assignments(2)}
        reference = {x: x[0] + x[1] + 3.0 * (x[1] - 1) ** 2 + 3.0 * (x[0] - 1) ** 2
                     for x in all_assignments(2)}
        assert values == reference
        assert min(values, key=values.get) == (1, 1)
        assert values[(1, 1)] == 2.0

    def test_triangle_has_no_slack(self):
        m = compile_tdp_qubo(Graph(3, [(0, 1), (1, 2), (0, 2)]), 5.0)
        assert m.n_vars == 3
        assert m.registry.slack_groups == ()

    def test_default_penalty_is_multiplier_1_5(self):
        m = compile_tdp_qubo(builtin_instance())
        assert m.penalty == 9.0

    def test_isolated_vertex_infeasible(self):
        with pytest.raises(InfeasibleGraphError):
            compile_tdp_qubo(Graph(3, [(0, 1)]), 2.0)

    def test_nonpositive_penalty_rejected(self):
        with pytest.raises(ValueError):
            compile_tdp_qubo(builtin_instance(), 0.0)


class TestEvaluate:
    def test_paper6_tds_assignment(self):
        m = compile_tdp_qubo(builtin_instance(), 9.0)
        assert m.evaluate(bits("1000110000")) == 3.0

    def test_paper6_all_zeros(self):
        m = compile_tdp_qubo(builtin_instance(), 9.0)
        assert m.evaluate([0] * 10) == 54.0

    def test_length_mismatch(self):
        m = compile_tdp_qubo(builtin_instance(), 9.0)
        with pytest.raises(ValueError):
            m.evaluate([0] * 9)

    def test_random_models_match_term_by_term(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            g = random_graph_min_degree(rng, int(rng.integers(3, 8)), 1)
            p = float(rng.uniform(0.5, 10.0))
            m = compile_tdp_qubo(g, p)
            x = [int(b) for b in rng.integers(0, 2, m.n_vars)]
            direct = m.constant
            direct += sum(c for i, c in m.linear.items() if x[i])
            direct += sum(c for (i, j), c in m.quadratic.items() if x[i] and x[j])
            assert m.evaluate(x) == pytest.approx(direct, abs=1e-12)


class TestJsonSchema:
    def test_roundtrip(self):
        m = compile_tdp_qubo(builtin_instance(), 9.0)
        restored = QuboModel.from_json(m.to_json())
        assert restored == m

    def test_schema_fields(self):
        data = compile_tdp_qubo(builtin_instance(), 9.0).to_dict()
        assert set(data) == {
            "n_vars", "constant", "linear", "quadratic", "penalty",
            "n_vertex_vars", "slack_groups",
        }
        assert data["n_vars"] == 10
        assert data["slack_groups"][0] == {"vertex": 2, "indices": [6, 7], "coefficients": [1, 1]}
        assert all(i < j for i, j, _ in data["quadratic"])


class TestQubitCounts:
    def test_paper6_counts(self):
        assert qubit_counts(builtin_instance()) == (10, 18, 8)

    def test_paper6_gap_bounds(self):
        g = builtin_instance()
        _, _, gap = qubit_counts(g)
        assert 2 * 4 <= gap <= 2 * 4 + 2

    def test_perfect_matching(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert qubit_counts(g) == (4, 4, 0)

    def test_paper6_upper_bound(self):
        bound = qubit_upper_bound(builtin_instance())
        assert bound == pytest.approx(12 + 6 * math.log2(4 / 3), abs=1e-9)
        assert bound == pytest.approx(14.49, abs=0.01)

    def test_cycle_bound(self):
        g = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert qubit_upper_bound(g) == pytest.approx(10.0)

    def test_k4_bound(self):
        g = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert qubit_upper_bound(g) == pytest.approx(12.0)

    def test_sparse_bound_undefined(self):
        with pytest.raises(ValueError):
            qubit_upper_bound(Graph(2, [(0, 1)]))

    def test_theorem_bound_holds_on_random_graphs(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            g = random_graph_min_degree(rng, int(rng.integers(4, 13)), 2, connected=True)
            q_tdp, _, _ = qubit_counts(g)
            assert q_tdp <= qubit_upper_bound(g) + 1e-9

    def test_theorem_gap_interval_on_random_graphs(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            g = random_graph(rng, int(rng.integers(1, 13)))
            part_v2 = sum(1 for d in g.degrees() if d == 2)
            part_ge3 = sum(1 for d in g.degrees() if d >= 3)
            _, _, gap = qubit_counts(g)
            assert 2 * part_v2 <= gap <= 2 * part_v2 + part_ge3


class TestMinBruteforce:
    def test_paper6_minimum(self):
        m = compile_tdp_qubo(builtin_instance(), 9.0)
        best, argmins = qubo_min_bruteforce(m)
        assert best == 3.0
        projections = {frozenset(i for i in range(6) if x[i]) for x in argmins}
        assert projections == PAPER6_MIN_TDS
        # slack substructure: sum(N(i)) = 2 admits two encodings of S = 1
        assert len(argmins) == 6

    def test_single_edge(self):
        best, argmins = qubo_min_bruteforce(compile_tdp_qubo(Graph(2, [(0, 1)]), 3.0))
        assert (best, argmins) == (2.0, [(1, 1)])

    def test_zero_penalty_model(self):
        m = QuboModel(
            n_vars=3, constant=0.0, linear={0: 1.0, 1: 1.0, 2: 1.0},
            quadratic={}, penalty=1.0, registry=VariableRegistry(3),
        )
        best, argmins = qubo_min_bruteforce(m)
        assert best == 0.0
        assert argmins == [(0, 0, 0)]

    def test_too_many_vars_rejected(self):
        m = QuboModel(25, 0.0, {}, {}, 1.0, VariableRegistry(25))
        with pytest.raises(ValueError):
            qubo_min_bruteforce(m)


class TestPenaltyValidityEquivalence:
    def test_zero_penalty_iff_tds(self):
        # For fixed vertex bits, the minimum of the penalty part over all
        # slack completions is zero exactly when the vertex set is a TDS.
        rng = np.random.default_rng(8)
        checked = 0
        while checked < 12:
            g = random_graph_min_degree(rng, int(rng.integers(3, 7)), 1)
            m = compile_tdp_qubo(g, 7.0)
            if m.n_vars > 16:
                continue
            table = build_energy_table(m)
            nv = g.n_vertices
            n_slack = m.n_vars - nv
            grid = table.energies.reshape(1 << nv, 1 << n_slack)
            for vkey in range(1 << nv):
                x_v = [(vkey >> (nv - 1 - i)) & 1 for i in range(nv)]
                penalty_min = grid[vkey].min() - sum(x_v)
                vertex_set = {i for i in range(nv) if x_v[i]}
                assert (abs(penalty_min) < 1e-9) == is_total_dominating_set(g, vertex_set)
            checked += 1

    def test_large_penalty_reproduces_oracle(self):
        from tds_qaoa import minimum_tds_bruteforce

        rng = np.random.default_rng(9)
        checked = 0
        while checked < 10:
            g = random_graph_min_degree(rng, int(rng.integers(3, 7)), 1)
            m = compile_tdp_qubo(g, g.n_vertices + 1.0)
            if m.n_vars > 18:
                continue
            best, argmins = qubo_min_bruteforce(m)
            size, sets = minimum_tds_bruteforce(g)
            assert best == pytest.approx(size)
            projections = {
                frozenset(i for i in range(g.n_vertices) if x[i]) for x in argmins
            }
            assert projections == set(sets)
            checked += 1
