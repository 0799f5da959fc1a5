"""Monomial ideals stored by their minimal generators.

Monomials are exponent tuples.  A :class:`MonomialIdeal` carries the ambient
number of variables and an antichain of generators under divisibility.  The
zero ideal has no generators, the unit ideal has the single generator
``(0, ..., 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Sequence

Exponent = tuple[int, ...]


class AmbientMismatchError(ValueError):
    """Raised when exponent vectors or ideals live in different rings."""


class InvalidIdealError(ValueError):
    pass


def _check_len(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise AmbientMismatchError(f"length {len(a)} != {len(b)}")


def divides(g: Sequence[int], m: Sequence[int]) -> bool:
    """True iff ``x^g`` divides ``x^m``."""
    _check_len(g, m)
    return all(a <= b for a, b in zip(g, m))


def lcm(g: Sequence[int], h: Sequence[int]) -> Exponent:
    return tuple(max(a, b) for a, b in zip(g, h))


def mul(g: Sequence[int], h: Sequence[int]) -> Exponent:
    return tuple(a + b for a, b in zip(g, h))


def degree(g: Sequence[int]) -> int:
    return sum(g)


def minimalize(gens: Iterable[Sequence[int]]) -> tuple[Exponent, ...]:
    """Drop every generator divisible by another one; result sorted."""
    # scanning by degree means a divisor is always seen before its multiples
    pool = sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), g))
    kept: list[Exponent] = []
    for g in pool:
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``ambient`` variables, given by minimal generators."""

    ambient: int
    gens: tuple[Exponent, ...]

    def __init__(self, ambient: int, gens: Iterable[Sequence[int]] = ()):
        gens = [tuple(int(e) for e in g) for g in gens]
        for g in gens:
            if len(g) != ambient:
                raise AmbientMismatchError(
                    f"generator {g} has length {len(g)}, expected {ambient}")
            if min(g, default=0) < 0:
                raise InvalidIdealError(f"negative exponent in {g}")
        object.__setattr__(self, "ambient", int(ambient))
        object.__setattr__(self, "gens", minimalize(gens))

    @classmethod
    def zero(cls, ambient: int) -> "MonomialIdeal":
        return cls(ambient, ())

    @classmethod
    def unit(cls, ambient: int) -> "MonomialIdeal":
        return cls(ambient, [(0,) * ambient])

    @classmethod
    def maximal(cls, ambient: int) -> "MonomialIdeal":
        """The graded maximal ideal ``(x_1, ..., x_s)``."""
        return cls(ambient, _unit_vectors(ambient))

    @classmethod
    def squarefree(cls, ambient: int, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        """Ideal generated by ``x_F`` for 0-based vertex sets ``F``."""
        gens = []
        for F in supports:
            v = [0] * ambient
            for i in F:
                v[i] = 1
            gens.append(v)
        return cls(ambient, gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.ambient,)

    def __contains__(self, m: Sequence[int]) -> bool:
        return contains(self, m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return add(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return multiply(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.ambient}, {list(self.gens)})"


def _unit_vectors(s: int) -> list[Exponent]:
    return [tuple(int(i == j) for j in range(s)) for i in range(s)]


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ambient != J.ambient:
        raise AmbientMismatchError(f"ambient {I.ambient} != {J.ambient}")


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    _check_len(m, (0,) * I.ambient)
    return any(all(a <= b for a, b in zip(g, m)) for g in I.gens)


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ambient, I.gens + J.gens)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ambient, (mul(g, h) for g in I.gens for h in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generators of ``I^k`` for ``k >= 1``; ``I^0`` is the unit ideal."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    if k == 0:
        return MonomialIdeal.unit(I.ambient)
    result = I
    for _ in range(k - 1):
        result = multiply(result, I)
    return result


def power_by_multisets(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^k`` from all k-multisets of generators at once (test oracle)."""
    gens = []
    for combo in combinations_with_replacement(I.gens, k):
        g = (0,) * I.ambient
        for h in combo:
            g = mul(g, h)
        gens.append(g)
    return MonomialIdeal(I.ambient, gens)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ambient, (lcm(g, h) for g in I.gens for h in J.gens))


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("empty intersection has no ambient ring")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ambient, (tuple(min(e, 1) for e in g) for g in I.gens))


def localize(I: MonomialIdeal, F: Iterable[int]) -> MonomialIdeal:
    """Monomial localization ``I[F]``: set ``x_i = 1`` for ``i`` in ``F``.

    The result stays in the same ambient ring with the exponents on ``F``
    zeroed.
    """
    F = set(F)
    return MonomialIdeal(
        I.ambient, (tuple(0 if i in F else e for i, e in enumerate(g)) for g in I.gens))


def embed(I: MonomialIdeal, total: int, offset: int) -> MonomialIdeal:
    """Place ``I`` into ``total`` variables starting at position ``offset``."""
    if offset + I.ambient > total:
        raise AmbientMismatchError("block does not fit")
    pad_l, pad_r = (0,) * offset, (0,) * (total - offset - I.ambient)
    return MonomialIdeal(total, (pad_l + g + pad_r for g in I.gens))


def product_of_maximals(s: int, r: int) -> MonomialIdeal:
    """``m n`` in ``s + r`` variables: all ``x_i y_j``."""
    gens = []
    for i, j in product(range(s), range(r)):
        v = [0] * (s + r)
        v[i] = v[s + j] = 1
        gens.append(v)
    return MonomialIdeal(s + r, gens)


def fiber_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I + J + m n`` in ``K[x_1..x_s, y_1..y_r]``."""
    if I.is_unit or J.is_unit:
        raise InvalidIdealError("fiber product needs I in m and J in n")
    s, r = I.ambient, J.ambient
    return add(add(embed(I, s + r, 0), embed(J, s + r, s)), product_of_maximals(s, r))


def max_exponent_profile(I: MonomialIdeal) -> Exponent:
    """Componentwise maximum of the generator exponents."""
    if I.is_zero or I.is_unit:
        raise InvalidIdealError("profile undefined for zero or unit ideal")
    return tuple(max(col) for col in zip(*I.gens))


def is_minimal(gens: Sequence[Sequence[int]]) -> bool:
    for g, h in combinations(gens, 2):
        if divides(g, h) or divides(h, g):
            return False
    return True


def in_power_of_maximal(I: MonomialIdeal, d: int) -> bool:
    """True iff ``I`` is contained in ``m^d``."""
    return all(sum(g) >= d for g in I.gens)


@dataclass(frozen=True)
class PowerDecompositionCheck:
    hypothesis: bool
    sum_identity: bool
    intersection_identities: tuple[bool, ...]

    @property
    def holds(self) -> bool:
        return self.sum_identity and all(self.intersection_identities)


def check_power_decomposition(I: MonomialIdeal, J: MonomialIdeal, k: int) -> PowerDecompositionCheck:
    """Evaluate the two identities for powers of ``I + J + m n``.

    With ``H = I + m n`` and ``G_t = H^k + sum_{i<=t} (mn)^(k-i) J^i``:

    * ``F^k == G_k``;
    * ``G_{t-1} & (mn)^(k-t) J^t == m^(k-t+1) n^(k-t) J^t`` for ``1 <= t <= k``.

    The identities are evaluated even when ``I`` is not in ``m^2`` or ``J``
    not in ``n^2``; ``hypothesis`` records whether those containments hold.
    """
    if k < 1:
        raise ValueError("k must be positive")
    s, r = I.ambient, J.ambient
    T = s + r
    hyp = in_power_of_maximal(I, 2) and in_power_of_maximal(J, 2)
    Ie, Je = embed(I, T, 0), embed(J, T, s)
    m = embed(MonomialIdeal.maximal(s), T, 0)
    n = embed(MonomialIdeal.maximal(r), T, s)
    mn = product_of_maximals(s, r)
    H = add(Ie, mn)

    G = [power(H, k)]
    pieces = []
    for t in range(1, k + 1):
        piece = multiply(power(mn, k - t), power(Je, t))
        pieces.append(piece)
        G.append(add(G[-1], piece))

    sum_ok = power(fiber_product(I, J), k) == G[k]
    inter_ok = []
    for t in range(1, k + 1):
        rhs = multiply(multiply(power(m, k - t + 1), power(n, k - t)), power(Je, t))
        inter_ok.append(intersect(G[t - 1], pieces[t - 1]) == rhs)
    return PowerDecompositionCheck(hyp, sum_ok, tuple(inter_ok))


def verify_power_decomposition(I: MonomialIdeal, J: MonomialIdeal, k: int) -> bool:
    return check_power_decomposition(I, J, k).holds


@dataclass(frozen=True)
class SymbolicPowerOracle:
    """Membership in ``I_Delta^(n)``, the intersection of ``P_F^n`` over facets.

    ``facets`` are 0-based vertex sets of the complex on ``ambient`` vertices.
    """

    ambient: int
    facets: tuple[frozenset[int], ...]
    n: int

    def __init__(self, ambient: int, facets: Iterable[Iterable[int]], n: int):
        if n < 1:
            raise ValueError("symbolic power exponent must be >= 1")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "facets", tuple(frozenset(F) for F in facets))
        object.__setattr__(self, "n", n)

    def __contains__(self, a: Sequence[int]) -> bool:
        return symbolic_membership(self, a)

    def explicit(self) -> MonomialIdeal:
        """Generators via explicit intersection of prime powers (expensive)."""
        if not self.facets:
            return MonomialIdeal.unit(self.ambient)
        primes = []
        for F in self.facets:
            P = MonomialIdeal(self.ambient, [v for i, v in enumerate(_unit_vectors(self.ambient))
                                             if i not in F])
            primes.append(power(P, self.n) if not P.is_zero else P)
        return intersect_all(primes)


def symbolic_membership(o: SymbolicPowerOracle, a: Sequence[int]) -> bool:
    _check_len(a, (0,) * o.ambient)
    return all(sum(e for i, e in enumerate(a) if i not in F) >= o.n for F in o.facets)
