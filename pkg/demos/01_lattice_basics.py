"""
Subspace lattice basics
=======================

Subspaces of a finite-dimensional complex Hilbert space form a lattice:
meet is the intersection, join is the span of the union, and the
orthocomplement plays the role of negation.  Unlike sets, the join contains
every superposition, which is why quantum "OR" is bigger than classical OR.
"""

import numpy as np

from qlattice import (Subspace, Xorshift64Star, commutes, join, leq, meet,
                      orthocomplement, random_subspace)

rng = Xorshift64Star(2)

# %% two generic planes in a 4-dimensional space
H1 = random_subspace(4, 2, rng)
H2 = random_subspace(4, 2, rng)
print("H1:", H1)
print("H2:", H2)
print("join rank:", join(H1, H2).rank, "  meet rank:", meet(H1, H2).rank)

# %% the orthocomplement obeys the expected laws
perp = orthocomplement(H1)
print("H1 ^ H1perp is zero:", meet(H1, perp).is_zero())
print("H1 v H1perp is everything:", join(H1, perp).is_full())
print("double complement returns H1:", orthocomplement(perp).equiv(H1))

# %% de Morgan duality holds as an operator identity
lhs = orthocomplement(meet(H1, H2)).projector()
rhs = join(orthocomplement(H1), orthocomplement(H2)).projector()
print("de Morgan residual:", np.linalg.norm(lhs - rhs))

# %% order and commutation
print("zero <= H1:", leq(Subspace.zero(4), H1))
print("H1 <= H1 v H2:", leq(H1, join(H1, H2)))
print("H1 commutes with its complement:", commutes(H1, perp))
print("two generic planes commute:", commutes(H1, H2))

# %% modularity: the weak distributivity that survives in this lattice
d = 5
H3 = random_subspace(d, 4, rng)
mix = rng.complex_gaussian_matrix(4, 2)
H1m = Subspace.from_vectors(H3.basis @ mix)   # guarantees H1m <= H3
H2m = random_subspace(d, 3, rng)
lhs = join(H1m, meet(H2m, H3)).projector()
rhs = meet(join(H1m, H2m), H3).projector()
print("modularity residual (H1 <= H3):", np.linalg.norm(lhs - rhs))
