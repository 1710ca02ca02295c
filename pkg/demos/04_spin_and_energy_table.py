"""From the 0/1 polynomial to the spin picture and the diagonal Hamiltonian.

The substitution x = (s + 1)/2 produces fields and couplings over +-1
spins; because the resulting operator is diagonal in the computational
basis, the whole Hamiltonian is just the array of energies per basis
state. Bit strings read left to right as vertex 0..n-1.
"""

import numpy as np

from tds_qaoa import (
    bits_to_index,
    build_energy_table,
    builtin_instance,
    compile_tdp_qubo,
    index_to_bits,
    qubo_to_spin,
)

model = compile_tdp_qubo(builtin_instance(), 9.0)
spin = qubo_to_spin(model)
print(f"spin model: offset {spin.offset}, {len(spin.fields_h)} fields, "
      f"{len(spin.couplings_J)} couplings")

# spot-check the equivalence on a couple of assignments
for bits in ("1000110000", "0000000000", "1111111111"):
    x = [int(c) for c in bits]
    s = [2 * b - 1 for b in x]
    print(f"  {bits}: qubo {model.evaluate(x):7.1f}  spin {spin.energy(s):7.1f}")

table = build_energy_table(model)
print(f"\nenergy table over 2^{table.n_vars} basis states:")
print(f"  min {table.energies.min()}, max {table.energies.max()}, mean {table.energies.mean():.2f}")

print("\nground states (energy 3):")
for k in table.argmin_indices():
    bits = index_to_bits(k, table.n_vars)
    print(f"  |{bits}>  vertices {bits[:6]}, slacks {bits[6:]}")

k = bits_to_index("1000110000")
print(f"\nenergy of |1000110000> = {table.energies[k]}")
print("histogram of energies:")
values, counts = np.unique(table.energies, return_counts=True)
for v, c in list(zip(values, counts))[:8]:
    print(f"  E = {v:6.1f}: {c:4d} states")
