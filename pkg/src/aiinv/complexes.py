"""Simplicial complexes on a fixed vertex set ``{0, ..., s-1}``.

Faces are bitmasks.  A complex is stored by its facets, an antichain of
masks.  Two degenerate complexes are kept apart on purpose:

* the *void* complex has no faces at all (``facets == ()``);
* the *irrelevant* complex has only the empty face (``facets == (0,)``).

Reduced homology distinguishes them (``H~_{-1}`` is one-dimensional for the
irrelevant complex and zero for the void one), and the local cohomology
formulas depend on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .monomials import MonomialIdeal, radical


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including ``mask`` and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    pool = sorted(set(masks), key=lambda m: -popcount(m))
    kept: list[int] = []
    for m in pool:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def minimal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    pool = sorted(set(masks), key=popcount)
    kept: list[int] = []
    for m in pool:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on ``vertices`` vertices given by its facet masks."""

    vertices: int
    facets: tuple[int, ...]

    def __init__(self, vertices: int, facets: Iterable[int] = ()):
        facets = tuple(facets)
        limit = 1 << vertices
        for f in facets:
            if f < 0 or f >= limit:
                raise ValueError(f"facet mask {f:#b} outside {vertices} vertices")
        object.__setattr__(self, "vertices", int(vertices))
        object.__setattr__(self, "facets", maximal_masks(facets))

    # constructors

    @classmethod
    def from_facets(cls, vertices: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from 0-based vertex lists.  Pass ``[[]]`` for the irrelevant complex."""
        return cls(vertices, [mask_of(F) for F in facets])

    @classmethod
    def void(cls, vertices: int) -> "SimplicialComplex":
        return cls(vertices, ())

    @classmethod
    def irrelevant(cls, vertices: int) -> "SimplicialComplex":
        return cls(vertices, (0,))

    @classmethod
    def simplex(cls, vertices: int, support: Optional[Iterable[int]] = None) -> "SimplicialComplex":
        m = (1 << vertices) - 1 if support is None else mask_of(support)
        return cls(vertices, (m,))

    @classmethod
    def boundary_of_simplex(cls, vertices: int, support: Optional[Iterable[int]] = None) -> "SimplicialComplex":
        m = (1 << vertices) - 1 if support is None else mask_of(support)
        vs = vertices_of(m)
        if not vs:
            return cls.void(vertices)
        return cls(vertices, [m & ~(1 << v) for v in vs])

    @classmethod
    def from_nonfaces(cls, vertices: int, nonfaces: Iterable[int], ground: Optional[int] = None) -> "SimplicialComplex":
        """Subsets of ``ground`` containing none of ``nonfaces``."""
        if ground is None:
            ground = (1 << vertices) - 1
        N = minimal_masks(n & ground for n in nonfaces)
        if N and N[0] == 0:
            return cls.void(vertices)
        return cls(vertices, _independent_facets(ground, N))

    # basic queries

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(popcount(f) for f in self.facets) - 1

    @property
    def support(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [vertices_of(f) for f in self.facets]

    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            out.update(submasks(f))
        return frozenset(out)

    def faces_by_dim(self) -> dict[int, list[int]]:
        """Faces grouped by dimension, each group in lexicographic order."""
        groups: dict[int, list[int]] = {}
        for f in self.faces():
            groups.setdefault(popcount(f) - 1, []).append(f)
        return {d: sorted(fs, key=vertices_of) for d, fs in sorted(groups.items())}

    def f_vector(self) -> list[int]:
        """``[f_{-1}, f_0, ..., f_dim]``; empty for the void complex."""
        if self.is_void:
            return []
        groups = self.faces_by_dim()
        return [len(groups.get(d, [])) for d in range(-1, self.dim + 1)]

    def __contains__(self, face) -> bool:
        return is_face(self, face)

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex.void({self.vertices})"
        return f"SimplicialComplex.from_facets({self.vertices}, {self.facet_sets()})"


def _independent_facets(ground: int, nonfaces: tuple[int, ...]) -> list[int]:
    faces = [F for F in submasks(ground) if not any(n & F == n for n in nonfaces)]
    return list(maximal_masks(faces))


def _as_mask(face) -> int:
    return face if isinstance(face, int) else mask_of(face)


def is_face(delta: SimplicialComplex, face) -> bool:
    """``face`` may be a mask or an iterable of 0-based vertices."""
    m = _as_mask(face)
    return any(m & f == m for f in delta.facets)


def link(delta: SimplicialComplex, G) -> SimplicialComplex:
    g = _as_mask(G)
    if not is_face(delta, g):
        return SimplicialComplex.void(delta.vertices)
    return SimplicialComplex(delta.vertices, [f & ~g for f in delta.facets if f & g == g])


def restriction(delta: SimplicialComplex, B) -> SimplicialComplex:
    b = _as_mask(B)
    if delta.is_void:
        return delta
    return SimplicialComplex(delta.vertices, [f & b for f in delta.facets])


def pure_skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """Complex generated by the ``i``-dimensional faces of ``delta``."""
    if i < -1:
        raise ValueError("skeleton index must be >= -1")
    if delta.is_void:
        return delta
    if i == -1:
        return SimplicialComplex.irrelevant(delta.vertices)
    faces = [f for f in delta.faces() if popcount(f) == i + 1]
    return SimplicialComplex(delta.vertices, faces)


def minimal_nonfaces(delta: SimplicialComplex) -> tuple[int, ...]:
    if delta.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ideal")
    faces = delta.faces()
    out = []
    for m in range(1 << delta.vertices):
        if m in faces:
            continue
        if all((m & ~(1 << v)) in faces for v in vertices_of(m)):
            out.append(m)
    return tuple(sorted(out, key=lambda m: (popcount(m), vertices_of(m))))


def stanley_reisner(delta: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal.squarefree(
        delta.vertices, [vertices_of(m) for m in minimal_nonfaces(delta)])


def complex_of_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """Faces ``F`` with ``x_F`` outside the radical of ``I``."""
    supports = [mask_of(i for i, e in enumerate(g) if e) for g in radical(I).gens]
    return SimplicialComplex.from_nonfaces(I.ambient, supports)


def is_cone(delta: SimplicialComplex) -> Optional[int]:
    """A vertex lying in every facet, or ``None``."""
    if delta.is_void:
        raise ValueError("cone test undefined on the void complex")
    common = delta.facets[0]
    for f in delta.facets[1:]:
        common &= f
    if common == 0:
        return None
    return vertices_of(common)[0]


def find_sphere_restriction(delta: SimplicialComplex) -> Optional[tuple[int, ...]]:
    """Smallest-lex ``B`` with ``|B| = dim + 2`` whose restriction is ``boundary(B)``."""
    if delta.is_void:
        return None
    k = delta.dim
    faces = delta.faces()
    for B in combinations(range(delta.vertices), k + 2):
        b = mask_of(B)
        if b in faces:
            continue
        if all((b & ~(1 << v)) in faces for v in B):
            return B
    return None
