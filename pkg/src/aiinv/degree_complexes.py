"""Degree complexes of monomial ideals.

For ``alpha`` in Z^s let ``G`` be its negative support and ``alpha_+`` its
nonnegative part.  The degree complex is

    {F subset of [s] - G : x^{alpha_+} not in I[F | G]}

where ``I[U]`` sets the variables in ``U`` to one.  A generator ``g``
witnesses ``x^{alpha_+} in I[U]`` exactly when its *bad set*
``{j : g_j > alpha_+_j}`` lies inside ``U``.  So the degree complex is the
independence complex on ``[s] - G`` of the sets ``bad(g) - G``, and it is
void as soon as some bad set lies inside ``G``.  Everything below builds on
that observation.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Optional, Sequence

import numpy as np

from .complexes import (
    SimplicialComplex,
    complex_of_ideal,
    is_face,
    link,
    mask_of,
    popcount,
    submasks,
)
from .monomials import MonomialIdeal, contains, localize


def positive_part(alpha: Sequence[int]) -> tuple[int, ...]:
    return tuple(max(a, 0) for a in alpha)


def negative_support(alpha: Sequence[int]) -> int:
    """Mask of coordinates with ``alpha_i < 0``."""
    return mask_of(i for i, a in enumerate(alpha) if a < 0)


def bad_mask(g: Sequence[int], alpha: Sequence[int]) -> int:
    return mask_of(j for j, (e, a) in enumerate(zip(g, alpha)) if e > max(a, 0))


def degree_complex(I: MonomialIdeal, alpha: Sequence[int]) -> SimplicialComplex:
    """The degree complex of ``I`` in degree ``alpha``.

    The unit ideal gives the void complex.  No gating on the negative support
    happens here; if it is not a face of the complex of ``I`` the result is
    void anyway.
    """
    s = I.ambient
    if len(alpha) != s:
        raise ValueError(f"degree has length {len(alpha)}, ring has {s} variables")
    G = negative_support(alpha)
    ground = ((1 << s) - 1) & ~G
    return SimplicialComplex.from_nonfaces(
        s, (bad_mask(g, alpha) & ~G for g in I.gens), ground=ground)


def degree_complex_by_definition(I: MonomialIdeal, alpha: Sequence[int]) -> SimplicialComplex:
    """Same complex by scanning every candidate face with a localized membership test."""
    s = I.ambient
    G = negative_support(alpha)
    ap = positive_part(alpha)
    ground = ((1 << s) - 1) & ~G
    faces = []
    for F in submasks(ground):
        U = [i for i in range(s) if (F | G) >> i & 1]
        if not contains(localize(I, U), ap):
            faces.append(F)
    return SimplicialComplex(s, faces)


def associated_prime_faces(I: MonomialIdeal) -> list[int]:
    """Masks ``F`` whose prime ``P_F = (x_i : i not in F)`` is associated to ``S/I``.

    ``P_F`` is associated iff the maximal ideal of ``K[x_i : i not in F]`` is
    associated to ``I[F]``, i.e. some ``x^a`` outside ``I[F]`` lands inside
    ``I[F | {j}]`` for every ``j`` outside ``F``.  Such an ``a`` can be found
    below the exponent profile.
    """
    s = I.ambient
    if I.is_unit:
        return []
    if I.is_zero:
        return [(1 << s) - 1]
    out = []
    rho = [max(col) for col in zip(*I.gens)]
    for F in range(1 << s):
        rest = [j for j in range(s) if not F >> j & 1]
        ranges = [range(rho[j]) if not F >> j & 1 else range(1) for j in range(s)]
        for a in product(*ranges):
            if any(bad_mask(g, a) & ~F == 0 for g in I.gens):
                continue
            if all(_in_localization(I, _bump(a, j), F) for j in rest):
                out.append(F)
                break
    return out


def _bump(a: Sequence[int], j: int) -> tuple[int, ...]:
    return tuple(e + (i == j) for i, e in enumerate(a))


def _in_localization(I: MonomialIdeal, a: Sequence[int], F: int) -> bool:
    return any(bad_mask(g, a) & ~F == 0 for g in I.gens)


def has_embedded_primes(I: MonomialIdeal) -> bool:
    minimal = set(complex_of_ideal(I).facets)
    return any(F not in minimal for F in associated_prime_faces(I))


def degree_complex_from_facets(I: MonomialIdeal, alpha: Sequence[int]) -> SimplicialComplex:
    """Shortcut for ``alpha >= 0`` and ``I`` without embedded primes.

    The facets are then among the facets of the complex of ``I``; keep the
    ones whose localization misses ``x^alpha``.
    """
    if any(a < 0 for a in alpha):
        raise ValueError("facet shortcut needs a nonnegative degree")
    if has_embedded_primes(I):
        raise ValueError("facet shortcut is unsound for ideals with embedded primes")
    s = I.ambient
    keep = [F for F in complex_of_ideal(I).facets
            if not any(bad_mask(g, alpha) & ~F == 0 for g in I.gens)]
    return SimplicialComplex(s, keep)


def symbolic_degree_complex_facets(delta: SimplicialComplex, n: int,
                                   alpha: Sequence[int]) -> SimplicialComplex:
    """Degree complex of the ``n``-th symbolic power of ``I_delta``.

    Its facets are the facets ``F`` of ``lk(G)`` with
    ``sum(alpha_i for i not in F | G) <= n - 1``, so the ideal itself is never
    built.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    G = negative_support(alpha)
    lk = link(delta, G)
    if lk.is_void:
        return lk
    keep = []
    for F in lk.facets:
        out = F | G
        if sum(a for i, a in enumerate(alpha) if not out >> i & 1) <= n - 1:
            keep.append(F)
    return SimplicialComplex(delta.vertices, keep)


def power_top_faces(delta: SimplicialComplex, n: int, alpha: Sequence[int]) -> frozenset[int]:
    """Top-dimensional faces of the degree complex of ``I_delta^n`` for ``alpha >= 0``.

    A ``dim(delta)``-face ``F`` of ``delta`` belongs to it iff
    ``sum(alpha_i for i not in F) <= n - 1``.
    """
    if any(a < 0 for a in alpha):
        raise ValueError("alpha must be nonnegative")
    k = delta.dim
    out = set()
    for F in delta.faces():
        if popcount(F) != k + 1:
            continue
        if sum(a for i, a in enumerate(alpha) if not F >> i & 1) <= n - 1:
            out.add(F)
    return frozenset(out)


def top_faces(delta: SimplicialComplex, k: int) -> frozenset[int]:
    if delta.is_void:
        return frozenset()
    return frozenset(F for F in delta.faces() if popcount(F) == k + 1)


# batch evaluation


def nonface_keys(I: MonomialIdeal, alphas: np.ndarray, chunk: int = 1 << 21):
    """Canonical keys of the degree complexes for every row of ``alphas``.

    Returns ``(keys, inverse)``: ``keys`` is an integer array whose rows are
    ``[G, sorted bad masks minus G...]`` and ``inverse[r]`` indexes the key of
    row ``r``.  Equal keys mean equal complexes.
    """
    alphas = np.asarray(alphas, dtype=np.int64)
    N, s = alphas.shape
    if N == 0:
        return np.zeros((0, 1), dtype=np.int64), np.zeros(0, dtype=np.int64)
    weights = (1 << np.arange(s, dtype=np.int64))
    G = (alphas < 0).astype(np.int64) @ weights
    if I.is_zero:
        rows = G[:, None]
    else:
        gens = np.asarray(I.gens, dtype=np.int64)
        m = len(gens)
        step = max(1, chunk // max(1, m * s))
        parts = []
        for start in range(0, N, step):
            ap = np.maximum(alphas[start:start + step], 0)
            bad = (gens[None, :, :] > ap[:, None, :]).astype(np.int64) @ weights
            bad &= ~G[start:start + step, None]
            bad.sort(axis=1)
            parts.append(bad)
        rows = np.concatenate([G[:, None], np.concatenate(parts)], axis=1)
    keys, inverse = np.unique(rows, axis=0, return_inverse=True)
    return keys, inverse.reshape(-1)


def complex_from_key(s: int, key: Iterable[int]) -> SimplicialComplex:
    key = [int(x) for x in key]
    G, bads = key[0], key[1:]
    ground = ((1 << s) - 1) & ~G
    return SimplicialComplex.from_nonfaces(s, bads, ground=ground)


def degree_complexes_batch(I: MonomialIdeal, alphas) -> list[SimplicialComplex]:
    keys, inverse = nonface_keys(I, np.asarray(alphas))
    complexes = [complex_from_key(I.ambient, k) for k in keys]
    return [complexes[i] for i in inverse]


def gated_face(I: MonomialIdeal, G: int) -> bool:
    """Whether the negative support ``G`` is a face of the complex of ``I``."""
    return is_face(complex_of_ideal(I), G)


def box_alphas(lows: Sequence[int], highs: Sequence[int]) -> np.ndarray:
    """All integer points of the box, in lexicographic order."""
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(lows, highs)]
    if any(len(a) == 0 for a in axes):
        return np.zeros((0, len(axes)), dtype=np.int64)
    grids = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1)


def stabilization_cone_apex(I: MonomialIdeal, alpha: Sequence[int],
                            rho: Sequence[int]) -> Optional[int]:
    """A coordinate ``j`` outside ``G`` with ``alpha_j >= rho_j``, if any."""
    for j, (a, r) in enumerate(zip(alpha, rho)):
        if a >= 0 and a >= r:
            return j
    return None
