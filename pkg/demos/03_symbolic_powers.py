"""
Symbolic powers of Stanley-Reisner ideals
=========================================

The degree complexes of a symbolic power come straight from the facets of
the complex, so the ideal is never formed.  The top a-invariant agrees
with that of the ordinary power and is at most (k + 2)(n - 1), with
equality exactly when some k + 2 vertices span an empty simplex boundary.
"""

from aiinv import SimplicialComplex
from aiinv import verify as V
from aiinv.complexes import find_sphere_restriction

examples = {
    "triangle boundary": SimplicialComplex.boundary_of_simplex(3),
    "tetrahedron boundary": SimplicialComplex.boundary_of_simplex(4),
    "path 1-2-3": SimplicialComplex.from_facets(3, [[0, 1], [1, 2]]),
    "square": SimplicialComplex.from_facets(4, [[0, 1], [1, 2], [2, 3], [0, 3]]),
}

for name, delta in examples.items():
    k = delta.dim
    sphere = find_sphere_restriction(delta)
    print(f"{name}: dim {k}, sphere {None if sphere is None else [v + 1 for v in sphere]}")
    for n in (2, 3):
        same = V.verify_symbolic_equals_ordinary(delta, n)
        bound = V.verify_bound_and_sphere(delta, n)
        print(f"  n={n}: symbolic {same.lhs}, ordinary {same.rhs}, bound {bound.rhs}")
