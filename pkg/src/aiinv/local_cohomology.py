"""Graded local cohomology of ``S/I`` for monomial ideals ``I``.

Each multigraded piece ``H^i_m(S/I)_alpha`` is the reduced homology of a
degree complex, shifted by the size of the negative support of ``alpha``::

    dim H^i_m(S/I)_alpha = dim H~_{i - |G| - 1}(degree complex)   if G is a face
                         = 0                                       otherwise

Only finitely many degrees need to be looked at.  A coordinate ``alpha_j
<= -1`` enters only through ``G``, so ``-1`` represents all of them and has
the largest total degree.  A coordinate ``alpha_j >= rho_j`` (the largest
exponent of ``x_j`` among the generators) makes the complex a cone with
apex ``j`` or void.  The search box is therefore ``[-1, rho_j - 1]`` in each
coordinate, and inside it the complex is constant on runs of ``alpha_j``
between consecutive generator exponents.  :func:`cohomology_table` evaluates
one representative per run.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Any, Iterator, Optional, Sequence

import numpy as np

from .complexes import SimplicialComplex, complex_of_ideal, is_face, popcount
from .degree_complexes import (
    complex_from_key,
    degree_complex,
    negative_support,
    nonface_keys,
    symbolic_degree_complex_facets,
)
from .homology import QQ, Field, reduced_betti, reduced_homology_dim
from .limits import check_cells, check_time
from .monomials import InvalidIdealError, MonomialIdeal

MINUS_INFINITY = float("-inf")


def is_minus_infinity(x) -> bool:
    return x == MINUS_INFINITY


def max_or_minus_infinity(values) -> Any:
    """``max`` that returns ``MINUS_INFINITY`` on an empty input."""
    return max(values, default=MINUS_INFINITY)


@dataclass(frozen=True)
class Cell:
    """Degrees ``low <= alpha <= high`` sharing the value ``dim`` in index ``i``."""

    i: int
    low: tuple[int, ...]
    high: tuple[int, ...]
    dim: int

    def points(self) -> Iterator[tuple[int, ...]]:
        return product(*(range(lo, hi + 1) for lo, hi in zip(self.low, self.high)))

    @property
    def top_degree(self) -> int:
        return sum(self.high)


@dataclass(frozen=True)
class CohomologyTable:
    """Nonzero graded pieces of ``H^*_m(S/I)`` over the search box."""

    ideal: Any
    field: Field
    ambient: int
    box_low: tuple[int, ...]
    box_high: tuple[int, ...]
    cells: tuple[Cell, ...]
    krull_dim: int
    a: tuple = dc_field(init=False)

    def __post_init__(self):
        a = [MINUS_INFINITY] * (self.ambient + 1)
        for c in self.cells:
            a[c.i] = max(a[c.i], c.top_degree)
        object.__setattr__(self, "a", tuple(a[: max(self.krull_dim, -1) + 1]))

    @property
    def reg(self):
        return regularity(self)

    def entries(self) -> dict[tuple[int, tuple[int, ...]], int]:
        """``(i, alpha) -> dim`` for every nonzero piece in the box."""
        out = {}
        for c in self.cells:
            for alpha in c.points():
                out[(c.i, alpha)] = c.dim
        return out

    def support(self) -> list[dict]:
        return [{"i": i, "alpha": list(alpha), "dim": d}
                for (i, alpha), d in sorted(self.entries().items())]

    def dim_at(self, i: int, alpha: Sequence[int]) -> int:
        """Table lookup; any coordinate ``<= -1`` is folded onto ``-1``."""
        alpha = tuple(max(a, -1) for a in alpha)
        for c in self.cells:
            if c.i == i and all(lo <= x <= hi for lo, x, hi in zip(c.low, alpha, c.high)):
                return c.dim
        return 0


def krull_dim(I: MonomialIdeal) -> int:
    if I.is_unit:
        raise InvalidIdealError("S/S is the zero module")
    return complex_of_ideal(I).dim + 1


def graded_piece_dim(I: MonomialIdeal, i: int, alpha: Sequence[int], field: Field = QQ) -> int:
    """``dim_K H^i_m(S/I)_alpha``; zero for the unit ideal."""
    if len(alpha) != I.ambient:
        raise ValueError("degree length does not match the ring")
    if I.is_unit:
        return 0
    G = negative_support(alpha)
    if not is_face(complex_of_ideal(I), G):
        return 0
    return reduced_homology_dim(degree_complex(I, alpha), i - popcount(G) - 1, field)


def _runs(values: Sequence[int]) -> list[tuple[int, int]]:
    """Runs ``[lo, hi]`` of ``alpha_j`` with a constant degree complex."""
    cuts = sorted(set(values) | {0})
    runs = [(-1, -1)]
    runs.extend((lo, hi - 1) for lo, hi in zip(cuts, cuts[1:]))
    return runs


def cohomology_table(I: MonomialIdeal, field: Field = QQ) -> CohomologyTable:
    """All nonzero ``H^i_m(S/I)_alpha`` over the search box."""
    if I.is_unit:
        raise InvalidIdealError("cohomology table of the zero module requested")
    s = I.ambient
    if I.is_zero:
        columns = [[] for _ in range(s)]
    else:
        columns = [list(col) for col in zip(*I.gens)]
    runs = [_runs(col) for col in columns]
    n_cells = 1
    for r in runs:
        n_cells *= len(r)
    check_cells(n_cells)

    lows = np.array([[lo for lo, _ in combo] for combo in product(*runs)], dtype=np.int64)
    highs = np.array([[hi for _, hi in combo] for combo in product(*runs)], dtype=np.int64)
    lows = lows.reshape(n_cells, s)
    highs = highs.reshape(n_cells, s)
    keys, inverse = nonface_keys(I, lows)
    order = np.argsort(inverse, kind="stable")
    bounds = np.searchsorted(inverse[order], np.arange(len(keys) + 1))

    cells = []
    for u, key in enumerate(keys):
        check_time()
        betti = reduced_betti(complex_from_key(s, key), field)
        if not any(betti):
            continue
        g = popcount(int(key[0]))
        members = order[bounds[u]:bounds[u + 1]]
        for b, d in enumerate(betti):
            if d == 0:
                continue
            i = b + g
            for r in members:
                cells.append(Cell(i, tuple(int(x) for x in lows[r]),
                                  tuple(int(x) for x in highs[r]), int(d)))
    cells.sort(key=lambda c: (c.i, c.low))
    return CohomologyTable(
        ideal=I,
        field=field,
        ambient=s,
        box_low=(-1,) * s,
        box_high=tuple(max(col, default=0) - 1 for col in columns),
        cells=tuple(cells),
        krull_dim=krull_dim(I),
    )


def symbolic_cohomology_table(delta: SimplicialComplex, n: int, field: Field = QQ,
                              top: Optional[int] = None) -> CohomologyTable:
    """Cohomology of ``S/I_delta^(n)`` from the facet description of its degree complexes.

    The box is ``[-1, n - 1]`` per coordinate: a coordinate ``alpha_j >= n``
    outside ``G`` forces every surviving facet to contain ``j``.  ``top``
    widens the box (used to test that nothing lives beyond it).
    """
    if delta.is_void:
        raise InvalidIdealError("the void complex gives the unit ideal")
    s = delta.vertices
    hi = n - 1 if top is None else top
    cells = []
    for alpha in product(range(-1, hi + 1), repeat=s):
        G = negative_support(alpha)
        if not is_face(delta, G):
            continue
        betti = reduced_betti(symbolic_degree_complex_facets(delta, n, alpha), field)
        g = popcount(G)
        for b, d in enumerate(betti):
            if d:
                cells.append(Cell(b + g, alpha, alpha, d))
    check_time()
    cells.sort(key=lambda c: (c.i, c.low))
    return CohomologyTable(
        ideal=("symbolic", delta.facets, n),
        field=field,
        ambient=s,
        box_low=(-1,) * s,
        box_high=(hi,) * s,
        cells=tuple(cells),
        krull_dim=delta.dim + 1,
    )


def a_invariant(table: CohomologyTable, i: int):
    if not 0 <= i <= table.ambient:
        raise ValueError(f"index {i} outside 0..{table.ambient}")
    if i >= len(table.a):
        return MINUS_INFINITY
    return table.a[i]


def a_vector(table: CohomologyTable) -> list:
    """``a_0 .. a_s`` with ``MINUS_INFINITY`` past the Krull dimension."""
    return [a_invariant(table, i) for i in range(table.ambient + 1)]


def regularity(table: CohomologyTable):
    return max_or_minus_infinity(a + i for i, a in enumerate(table.a) if a != MINUS_INFINITY)
