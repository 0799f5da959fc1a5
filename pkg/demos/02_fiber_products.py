"""
Powers of fiber products
========================

For I in K[x1..x3] and J in K[y1..y3], F = I + J + (x_i y_j) lives in
six variables.  Its a-invariants in higher indices are the maximum of the
two factors' a-invariants of lower powers, shifted by the power lost.
"""

from aiinv import MonomialIdeal
from aiinv import verify as V

I = MonomialIdeal(3, [[1, 1, 1]])
J = MonomialIdeal(3, [[2, 0, 0], [0, 1, 1]])
inst = V.FiberInstance(I, J, 2)
print("generators of F^2:", len(inst.big_ideal().gens))

for j in range(2, 7):
    r = V.verify_fiber_aj(inst, j)
    print(f"a_{j}: direct {r.lhs}, formula {r.rhs} -> {r.verdict}")

# a_1 needs extra hypotheses; with I = J = 0 the answer is 2k - 2.
zero = MonomialIdeal.zero(3)
for k in (1, 2, 3):
    r = V.verify_fiber_a1(V.FiberInstance(zero, zero, k))
    print(f"a_1(T/(mn)^{k}) = {r.lhs}")

# One graded piece at a time, the bigraded decomposition.
r = V.verify_bigraded_box(inst)
print("bigraded box:", r.details["checked"], "pieces checked,",
      r.details["mismatches"], "mismatches,", r.details["plus_one_fired"], "extra summands")
