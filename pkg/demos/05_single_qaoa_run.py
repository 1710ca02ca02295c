"""One full layered-circuit run on the benchmark instance.

Pipeline: compile the QUBO, materialize the energy table, start from the
calibrated linear ramp, locally polish the angles against the exact
expectation, then read off the final state. Slack bits are marginalized
out before scoring, so metrics live over 6-character vertex strings:

  correct probability = mass on strings decoding to any valid TDS
  optimal probability = mass on minimum-cardinality TDS
  z*                  = the most probable vertex string
"""

from tds_qaoa import RunConfig, run_single

config = RunConfig(
    graph_source="builtin:paper6",
    layers_q=5,
    penalty=9.0,
    max_iterations=500,
    seed=0,
)
result = run_single(config)

print(f"penalty P = {result.penalty}, layers q = {config.layers_q}, "
      f"budget {config.max_iterations} evaluations")
print(f"optimizer: {result.trace.n_evaluations} evaluations, "
      f"final cost {result.trace.best_value:.4f} ({result.trace.termination_reason})")
print(f"\nz* = {result.z_star}  (TDS: {result.z_star_is_tds}, "
      f"minimal: {result.z_star_is_minimal_tds})")
print(f"correct probability: {result.correct_probability:.4f}")
print(f"optimal probability: {result.optimal_probability:.4f}")

print("\ntop vertex strings:")
for bits, prob in result.top_k[:8]:
    members = {i for i, c in enumerate(bits) if c == "1"}
    print(f"  {bits}  p = {prob:.4f}  vertices {sorted(members)}")

print("\ncost trace (every 100th evaluation):")
values = result.trace.values()
for i in range(0, len(values), 100):
    print(f"  eval {i:4d}: F = {values[i]:8.3f}")
