"""
The classical baseline
======================

On finite sets with an additive measure, every Moebius quantity vanishes
identically and the law of total probability is exact.  Dempster-Shafer
belief/plausibility pairs relax additivity in a controlled way: belief is
supermodular, plausibility submodular, and the gap between them is the
uncommitted ("don't know") mass.  This is the additive world the subspace
operators deviate from.
"""

from qlattice import Xorshift64Star, belief_plausibility, mobius_delta
from qlattice.classical import (FiniteMeasure, MassFunction, random_measure,
                                random_mass_function,
                                total_probability_residual)

rng = Xorshift64Star(6)

# %% additive measures have identically vanishing Moebius quantities
measure = random_measure(8, rng)
sets = [0b00101101, 0b11010010, 0b00110011]
delta, delta_dual = mobius_delta(measure, sets)
print(f"delta = {delta:.2e}   dual = {delta_dual:.2e}  (always zero)")

# %% and the law of total probability is exact
blocks = [0b00001111, 0b11110000]
print("total-probability residual:",
      total_probability_residual(measure, 0b01100110, blocks))

# %% a mass function spreads weight over subsets, not points
mf = MassFunction(3, ((0b001, 0.2), (0b011, 0.3), (0b111, 0.5)))
for A in (0b001, 0b011, 0b110):
    lo, up = belief_plausibility(mf, A)
    print(f"A={A:03b}: belief {lo:.2f} <= plausibility {up:.2f}")

# %% belief is supermodular, plausibility submodular; the slack is 'don't know'
mf = random_mass_function(5, rng)
A, B = 0b01101, 0b10011
l, u = mf.belief, mf.plausibility
print("belief  supermodularity:", l(A | B) - l(A) - l(B) + l(A & B), ">= 0")
print("plausib submodularity:  ", u(A | B) - u(A) - u(B) + u(A & B), "<= 0")
comp = mf.full_mask & ~A
print("uncommitted mass:", 1.0 - l(A) - l(comp), "=", u(A) + u(comp) - 1.0)

# %% singleton-only masses collapse back to an additive measure
additive = MassFunction(2, ((0b01, 0.3), (0b10, 0.7)))
kol = FiniteMeasure((0.3, 0.7))
for A in range(4):
    lo, up = belief_plausibility(additive, A)
    assert abs(lo - kol.p(A)) < 1e-12 and abs(up - kol.p(A)) < 1e-12
print("singleton masses reproduce the additive measure exactly")
