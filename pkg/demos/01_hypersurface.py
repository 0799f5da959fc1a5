"""
Local cohomology of a hypersurface and its powers
=================================================

S = K[x1, x2, x3] and I = (x1 x2 x3).  Every graded piece of the local
cohomology of S/I is the reduced homology of a small simplicial complex.
"""

from aiinv import MonomialIdeal, cohomology_table, degree_complex, power, reduced_betti

I = MonomialIdeal(3, [[1, 1, 1]])

# In degree 0 the degree complex is the boundary of a triangle: a circle.
delta = degree_complex(I, (0, 0, 0))
print("facets in degree 0:", [[v + 1 for v in F] for F in delta.facet_sets()])
print("reduced Betti numbers:", reduced_betti(delta))

# The whole table only needs one representative per run of degrees.
table = cohomology_table(I)
print("a-invariants:", table.a, " reg:", table.reg)
for entry in table.support():
    print("  ", entry)

# Powers push the top a-invariant up by 3 each time.
for n in (1, 2, 3):
    t = cohomology_table(power(I, n))
    print(f"I^{n}: a_2 = {t.a[2]}, reg = {t.reg}")
