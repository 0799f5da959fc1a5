"""
Characteristic matters
======================

Homology, and therefore local cohomology dimensions, can depend on the
field.  The six-vertex projective plane is the standard example.
"""

from aiinv import QQ, Field, SimplicialComplex, cohomology_table, reduced_betti, stanley_reisner

rp2 = SimplicialComplex.from_facets(6, [
    [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
    [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]])

for field in (QQ, Field(2)):
    print(field, "betti:", reduced_betti(rp2, field))

# Same thing through the quotient ring: degree 0 carries the complex itself.
I = stanley_reisner(rp2)
for field in (QQ, Field(2)):
    t = cohomology_table(I, field)
    print(field, "a-invariants of S/I:", t.a)
