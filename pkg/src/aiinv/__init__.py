"""Local cohomology of monomial quotients through degree complexes."""

from .complexes import SimplicialComplex, link, stanley_reisner, complex_of_ideal
from .degree_complexes import degree_complex, symbolic_degree_complex_facets
from .homology import QQ, Field, reduced_betti
from .local_cohomology import (
    MINUS_INFINITY,
    CohomologyTable,
    a_invariant,
    a_vector,
    cohomology_table,
    regularity,
    symbolic_cohomology_table,
)
from .monomials import MonomialIdeal, fiber_product, power

__version__ = "0.1.0"

__all__ = [
    "MonomialIdeal", "SimplicialComplex", "Field", "QQ", "MINUS_INFINITY",
    "CohomologyTable", "cohomology_table", "symbolic_cohomology_table",
    "a_invariant", "a_vector", "regularity", "degree_complex",
    "symbolic_degree_complex_facets", "reduced_betti", "link",
    "stanley_reisner", "complex_of_ideal", "fiber_product", "power",
]
