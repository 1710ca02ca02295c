"""Total dominating set optimization via QUBO penalties and simulated QAOA."""

from .graphs import (
    DegreePartition,
    Graph,
    InfeasibleGraphError,
    builtin_instance,
    degree_partition,
    is_dominating_set,
    is_total_dominating_set,
    load_graph,
    minimum_ds_bruteforce,
    minimum_tds_bruteforce,
    neighbors,
    parse_graph,
    read_graph_file,
)
from .harness import (
    Metrics,
    RunConfig,
    RunResult,
    SweepResult,
    compute_metrics,
    run_single,
    run_sweep,
)
from .ising import (
    EnergyTable,
    SpinModel,
    bits_to_index,
    build_energy_table,
    index_to_bits,
    qubo_to_spin,
)
from .optimize import (
    OptimizationTrace,
    OptimizerConfig,
    angle_bounds,
    default_ramp_scales,
    initial_angles,
    minimize,
)
from .qaoa import (
    AngleSchedule,
    StateVector,
    apply_cost_layer,
    apply_mixer_layer,
    evolve,
    expectation,
    marginalize_vertices,
    sample,
    uniform_state,
)
from .qubo import (
    QuboModel,
    SlackGroup,
    VariableRegistry,
    compile_tdp_qubo,
    qubit_counts,
    qubit_upper_bound,
    qubo_min_bruteforce,
    slack_coefficients,
)

__version__ = "0.1.0"

__all__ = [
    "AngleSchedule",
    "DegreePartition",
    "EnergyTable",
    "Graph",
    "InfeasibleGraphError",
    "Metrics",
    "OptimizationTrace",
    "OptimizerConfig",
    "QuboModel",
    "RunConfig",
    "RunResult",
    "SlackGroup",
    "SpinModel",
    "StateVector",
    "SweepResult",
    "VariableRegistry",
    "angle_bounds",
    "apply_cost_layer",
    "apply_mixer_layer",
    "bits_to_index",
    "build_energy_table",
    "builtin_instance",
    "compile_tdp_qubo",
    "compute_metrics",
    "default_ramp_scales",
    "degree_partition",
    "evolve",
    "expectation",
    "index_to_bits",
    "initial_angles",
    "is_dominating_set",
    "is_total_dominating_set",
    "load_graph",
    "marginalize_vertices",
    "minimize",
    "minimum_ds_bruteforce",
    "minimum_tds_bruteforce",
    "neighbors",
    "parse_graph",
    "qubit_counts",
    "qubit_upper_bound",
    "qubo_min_bruteforce",
    "qubo_to_spin",
    "read_graph_file",
    "run_single",
    "run_sweep",
    "sample",
    "slack_coefficients",
    "uniform_state",
]
