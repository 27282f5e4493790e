"""
Coherent projectors of a finite quantum system
==============================================

For odd d, displacing a fiducial vector around the discrete phase space
Z(d) x Z(d) yields d^2 coherent states.  Projectors onto spans of several
coherent states keep the two hallmarks of coherence: displacement
covariance, and resolutions of the identity over all translates.
"""

import numpy as np

from qlattice import (CoherentAggregate, CoherentFamily, generic_fiducial,
                      mixed_coherent_state)
from qlattice.coherent import (displacement_covariance_residuals,
                               resolution_residuals)

d = 5
family = CoherentFamily(d, generic_fiducial(d))

# %% the displacement algebra
Z, X = family.z_gen, family.x_gen
print("X^d = 1:", np.allclose(np.linalg.matrix_power(X, d), np.eye(d)))
print("Z^d = 1:", np.allclose(np.linalg.matrix_power(Z, d), np.eye(d)))
print("2^{-1} mod", d, "=", family.half)

# %% overlaps are generically nonzero: the states are overcomplete
print("overlap <C;0,0|C;1,2> =", np.round(family.overlap(0, 0, 1, 2), 4))
total = sum(family.state_projector(a, b) for a in range(d) for b in range(d))
print("(1/d) sum of all state projectors = 1:",
      np.allclose(total / d, np.eye(d)))

# %% growing an aggregate one state at a time
labels = [(0, 0), (1, 0), (0, 1)]
agg = CoherentAggregate.from_labels(family, labels)
print("aggregate trace:", np.trace(agg.projector).real)
for k, inc in enumerate(agg.increments, start=2):
    print(f"  increment {k}: trace {np.trace(inc).real:.6f}, rank one")

# %% displacement covariance: conjugating equals relabeling
res = displacement_covariance_residuals(agg, 2, 3)
for name, value in res.items():
    print(f"covariance [{name}]: {value:.2e}")

# %% resolutions of the identity over all d^2 translates
res = resolution_residuals(family, labels)
print(f"(1/(i d)) sum of projectors  -> 1: {res['identity_from_projectors']:.2e}")
print(f"(1/d) sum of last increments -> 1: {res['identity_from_increments']:.2e}")
print(f"(1/i) scaling instead        -> off by {res['increments_naive_coefficient']:.2f}"
      " (closes only when i = d)")
print(f"sum of translated operators  -> 0: {res['mobius_sum']:.2e}")

# %% equal mixtures over coherent spans
rho = mixed_coherent_state(agg)
print("mixed-state entropy:", rho.entropy(), " log n =", np.log(agg.size))
