"""
Non-additivity operators on three lines in H(3)
===============================================

Three one-dimensional subspaces spanned by

    v1 = (0.3, 0.3, 0.905),  v2 = (0.4, 0.5, 0.768),
    v3 = (v1 + v2)/|v1 + v2|

give nonzero non-additivity operators: the quantum analogue of the
inclusion-exclusion defect p(A u B) - p(A) - p(B) + p(A n B), which is
identically zero for additive probabilities.
"""

import numpy as np

from qlattice import join, meet, mobius, mobius_dual
from qlattice.golden import worked_example

np.set_printoptions(precision=3, suppress=True)

H1, H2, H3, rho = worked_example()

# %% all pairwise intersections vanish; v3 lies in the plane of v1 and v2
print("meet ranks:", meet(H1, H2).rank, meet(H1, H3).rank, meet(H2, H3).rank)
print("H1 v H3 equals H2 v H3:", join(H1, H3).equiv(join(H2, H3)))

# %% the pair operators: zero trace, nonzero entries
for name, pair in (("D(1,2)", (H1, H2)), ("D(1,3)", (H1, H3)), ("D(2,3)", (H2, H3))):
    op = mobius(pair)
    print(f"{name}: trace {op.trace:+.3f}")
    print(op.matrix.real)

# %% the triple operator and its dual
D = mobius([H1, H2, H3])
Dd = mobius_dual([H1, H2, H3])
print("D(1,2,3):")
print(D.matrix.real)
print("dual:")
print(Dd.matrix.real)
print("triple trace:", f"{D.trace:+.3f}",
      " (the alternating dimension count: 2 - 3*2 + 3*1 - 0 = -1)")

# %% the sum rule ties the five operators together exactly
total = (D.matrix + Dd.matrix + mobius([H1, H2]).matrix
         + mobius([H1, H3]).matrix + mobius([H2, H3]).matrix)
print("sum-rule residual:", np.linalg.norm(total))

# %% the commutator identity: non-commutativity IS non-additivity
P1, P2 = H1.projector(), H2.projector()
D12 = mobius([H1, H2]).matrix
print("commutator-link residual:",
      np.linalg.norm(P1 @ P2 - P2 @ P1 - D12 @ (P1 - P2)))
