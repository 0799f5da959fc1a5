"""Reduced simplicial homology over Q or a prime field."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import SimplicialComplex, vertices_of


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: ``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accepts ``q`` or ``fp:<p>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("fp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"bad prime in field spec {text!r}") from None
            return cls(p)
        raise ValueError(f"unknown field {text!r}; use 'q' or 'fp:<p>'")

    def __str__(self) -> str:
        return "q" if self.characteristic == 0 else f"fp:{self.characteristic}"


QQ = Field(0)


def rank(matrix: list[list[int]], field: Field = QQ) -> int:
    """Rank of an integer matrix over ``field``.

    Over Q this is fraction-free (Bareiss) elimination, so all intermediate
    values stay integral and exact.
    """
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    p = field.characteristic
    if p:
        rows = [[x % p for x in r] for r in rows]
        return _rank_mod_p(rows, p)
    return _rank_bareiss(rows)


def _rank_bareiss(a: list[list[int]]) -> int:
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            ar = a[r]
            for j in range(c + 1, ncols):
                ai[j] = (pv * ai[j] - f * ar[j]) // prev
            ai[c] = 0
        prev = pv
        r += 1
        if r == nrows:
            break
    return r


def _rank_mod_p(a: list[list[int]], p: int) -> int:
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        ar = [(x * inv) % p for x in a[r]]
        a[r] = ar
        for i in range(r + 1, nrows):
            f = a[i][c]
            if f:
                ai = a[i]
                a[i] = [(x - f * y) % p for x, y in zip(ai, ar)]
        r += 1
        if r == nrows:
            break
    return r


def boundary_matrix(delta: SimplicialComplex, i: int) -> list[list[int]]:
    """Matrix of ``d_i : C_i -> C_{i-1}`` (rows are (i-1)-faces).

    ``d_0`` is the augmentation onto the empty face.  Faces are ordered
    lexicographically by their sorted vertex lists; removing the ``j``-th
    vertex contributes ``(-1)^j``.
    """
    groups = delta.faces_by_dim() if not delta.is_void else {}
    cols = groups.get(i, [])
    rows = groups.get(i - 1, [])
    index = {f: n for n, f in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        for j, v in enumerate(vertices_of(face)):
            M[index[face & ~(1 << v)]][c] = -1 if j % 2 else 1
    return M


def reduced_betti(delta: SimplicialComplex, field: Field = QQ) -> tuple[int, ...]:
    """``(H~_{-1}, H~_0, ..., H~_dim)`` dimensions; ``()`` for the void complex."""
    return _reduced_betti(delta.vertices, delta.facets, field.characteristic)


@lru_cache(maxsize=1 << 16)
def _reduced_betti(vertices: int, facets: tuple[int, ...], p: int) -> tuple[int, ...]:
    delta = SimplicialComplex(vertices, facets)
    if delta.is_void:
        return ()
    field = Field(p)
    groups = delta.faces_by_dim()
    top = delta.dim
    ranks = {}
    for i in range(0, top + 1):
        ranks[i] = rank(boundary_matrix(delta, i), field)
    out = []
    for i in range(-1, top + 1):
        f = len(groups.get(i, []))
        out.append(f - ranks.get(i, 0) - ranks.get(i + 1, 0))
    return tuple(out)


def reduced_homology_dim(delta: SimplicialComplex, i: int, field: Field = QQ) -> int:
    """``dim H~_i(delta)``; zero outside ``-1..dim``."""
    betti = reduced_betti(delta, field)
    if i < -1 or i + 1 >= len(betti):
        return 0
    return betti[i + 1]


def euler_characteristic(delta: SimplicialComplex) -> int:
    """Reduced Euler characteristic ``sum_i (-1)^i f_i`` over ``i >= -1``."""
    fv = delta.f_vector()
    return sum((-1) ** (d - 1) * f for d, f in enumerate(fv))
