"""Two-sided checks of the a-invariant formulas on concrete instances.

Every check computes its left-hand side directly, by running the local
cohomology machinery on the big ideal, and its right-hand side from the
closed formula built out of smaller computations.  The result is a
:class:`VerificationReport`.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations, product
from typing import Any, Optional, Sequence

from .complexes import SimplicialComplex, find_sphere_restriction, is_face, mask_of, popcount, stanley_reisner
from .degree_complexes import degree_complex, negative_support, symbolic_degree_complex_facets
from .homology import QQ, Field, reduced_betti, reduced_homology_dim
from .local_cohomology import (
    MINUS_INFINITY,
    a_invariant,
    cohomology_table,
    max_or_minus_infinity,
    symbolic_cohomology_table,
)
from .monomials import (
    MonomialIdeal,
    check_power_decomposition,
    fiber_product,
    in_power_of_maximal,
    power,
    radical,
)

PASS, FAIL, NOT_MET = "pass", "fail", "hypothesis-not-met"


@dataclass(frozen=True)
class FiberInstance:
    I: MonomialIdeal
    J: MonomialIdeal
    k: int

    @property
    def s(self) -> int:
        return self.I.ambient

    @property
    def r(self) -> int:
        return self.J.ambient

    def big_ideal(self) -> MonomialIdeal:
        return power(fiber_product(self.I, self.J), self.k)

    def descriptor(self) -> dict:
        return {"I": ideal_to_json(self.I), "J": ideal_to_json(self.J), "k": self.k}


@dataclass
class VerificationReport:
    instance: dict
    theorem: str
    hypotheses: dict
    lhs: Any
    rhs: Any
    verdict: str
    details: dict = dc_field(default_factory=dict)
    timing: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "instance": self.instance,
            "hypotheses": self.hypotheses,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "verdict": self.verdict,
            "details": _jsonable(self.details),
        }
        if include_timing:
            out["timing"] = self.timing
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, separators=(",", ":"))


def _jsonable(x):
    if isinstance(x, float) and x == MINUS_INFINITY:
        return None
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"vars": I.ambient, "gens": [list(g) for g in I.gens]}


def complex_to_json(delta: SimplicialComplex) -> dict:
    if delta.is_void:
        return {"vertices": delta.vertices, "facets": None}
    if delta.is_irrelevant:
        return {"vertices": delta.vertices, "facets": []}
    return {"vertices": delta.vertices,
            "facets": [[v + 1 for v in F] for F in delta.facet_sets()]}


def _verdict(ok: bool, hypotheses_hold: bool = True) -> str:
    if not hypotheses_hold:
        return NOT_MET
    return PASS if ok else FAIL


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.timing = time.perf_counter() - t0
        return report
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@lru_cache(maxsize=256)
def _table(I: MonomialIdeal, field: Field):
    return cohomology_table(I, field)


def a_of_quotient(I: MonomialIdeal, i: int, field: Field = QQ):
    """``a_i(S/I)`` with ``MINUS_INFINITY`` for ``i`` past the ring or the module."""
    if I.is_unit or i > I.ambient:
        return MINUS_INFINITY
    return a_invariant(_table(I, field), i)


def _power_side(I: MonomialIdeal, k: int, j: int, field: Field):
    """``max{a_j(S/I^(k-t)) + t : 0 <= t <= k-1}``."""
    return max_or_minus_infinity(a_of_quotient(power(I, k - t), j, field) + t for t in range(k))


# fiber products


@_timed
def verify_fiber_aj(inst: FiberInstance, j: int, field: Field = QQ) -> VerificationReport:
    """``a_j(T/F^k)`` against the max over the two factors, for ``j >= 2``."""
    if j < 2:
        raise ValueError("this formula is for j >= 2")
    lhs = a_of_quotient(inst.big_ideal(), j, field)
    rhs = max(_power_side(inst.I, inst.k, j, field), _power_side(inst.J, inst.k, j, field))
    return VerificationReport(
        instance={**inst.descriptor(), "j": j}, theorem="fiber-aj", hypotheses={},
        lhs=lhs, rhs=rhs, verdict=_verdict(lhs == rhs))


def fiber_a1_hypotheses(inst: FiberInstance) -> dict:
    return {
        "dim_S_gt_2": inst.s > 2,
        "dim_R_gt_2": inst.r > 2,
        "I_in_m2": in_power_of_maximal(inst.I, 2),
        "J_in_n2": in_power_of_maximal(inst.J, 2),
        "rad_I_ne_m": radical(inst.I) != MonomialIdeal.maximal(inst.s),
        "rad_J_ne_n": radical(inst.J) != MonomialIdeal.maximal(inst.r),
    }


@_timed
def verify_fiber_a1(inst: FiberInstance, field: Field = QQ) -> VerificationReport:
    """``a_1(T/F^k)`` against ``max{2k-2, ...}``; asserted only under the hypotheses."""
    hyp = fiber_a1_hypotheses(inst)
    lhs = a_of_quotient(inst.big_ideal(), 1, field)
    rhs = max(2 * inst.k - 2, _power_side(inst.I, inst.k, 1, field),
              _power_side(inst.J, inst.k, 1, field))
    return VerificationReport(
        instance=inst.descriptor(), theorem="fiber-a1", hypotheses=hyp,
        lhs=lhs, rhs=rhs, verdict=_verdict(lhs == rhs, all(hyp.values())),
        details={"holds": lhs == rhs})


def _shifted_power(I: MonomialIdeal, e: int) -> MonomialIdeal:
    """``I^e`` with ``I^e = S`` for ``e <= 0``."""
    return MonomialIdeal.unit(I.ambient) if e <= 0 else power(I, e)


@lru_cache(maxsize=1 << 16)
def _piece(I: MonomialIdeal, alpha: tuple[int, ...], field: Field):
    """``(|G|, betti, has_vertex)`` of the degree complex of ``I`` at ``alpha``."""
    c = degree_complex(I, alpha)
    return popcount(negative_support(alpha)), reduced_betti(c, field), bool(c.facets) and c.dim >= 0


def _piece_dim(I: MonomialIdeal, p: int, alpha, field: Field) -> int:
    g, betti, _ = _piece(I, tuple(alpha), field)
    b = p - g
    return betti[b] if 0 <= b < len(betti) else 0


def bigraded_rhs(inst: FiberInstance, p: int, gamma: Sequence[int], field: Field = QQ) -> tuple[int, bool]:
    """Right-hand side of the per-degree decomposition and whether the +1 fired.

    For ``gamma = (alpha, beta)``:

    * ``dim H^p(S/I^(k-|beta|))_alpha`` counts only when ``beta >= 0``;
    * ``dim H^p(R/J^(k-|alpha|))_beta`` counts only when ``alpha >= 0``;
    * one more when ``p == 1``, both degrees are nonnegative and both degree
      complexes have at least one vertex.

    Powers with exponent ``<= 0`` are the unit ideal.
    """
    s = inst.s
    alpha, beta = tuple(gamma[:s]), tuple(gamma[s:])
    A = _shifted_power(inst.I, inst.k - sum(beta))
    B = _shifted_power(inst.J, inst.k - sum(alpha))
    a_ok, b_ok = min(alpha) >= 0, min(beta) >= 0
    total = 0
    if b_ok:
        total += _piece_dim(A, p, alpha, field)
    if a_ok:
        total += _piece_dim(B, p, beta, field)
    plus = (p == 1 and a_ok and b_ok and _piece(A, alpha, field)[2] and _piece(B, beta, field)[2])
    return total + int(plus), bool(plus)


def bigraded_rhs_as_printed(inst: FiberInstance, p: int, gamma: Sequence[int], field: Field = QQ) -> int:
    """Sum without the sign restrictions, +1 when both complexes are non-void."""
    s = inst.s
    alpha, beta = tuple(gamma[:s]), tuple(gamma[s:])
    A = _shifted_power(inst.I, inst.k - sum(beta))
    B = _shifted_power(inst.J, inst.k - sum(alpha))
    plus = p == 1 and not degree_complex(A, alpha).is_void and not degree_complex(B, beta).is_void
    return _piece_dim(A, p, alpha, field) + _piece_dim(B, p, beta, field) + int(plus)


@_timed
def verify_bigraded_decomposition(inst: FiberInstance, p: int, gamma: Sequence[int],
                                  field: Field = QQ) -> VerificationReport:
    lhs = _piece_dim(inst.big_ideal(), p, gamma, field)
    rhs, plus = bigraded_rhs(inst, p, gamma, field)
    return VerificationReport(
        instance={**inst.descriptor(), "p": p, "gamma": list(gamma)},
        theorem="bigraded", hypotheses={"p_ge_1": p >= 1}, lhs=lhs, rhs=rhs,
        verdict=_verdict(lhs == rhs, p >= 1), details={"plus_one": plus})


@_timed
def verify_bigraded_box(inst: FiberInstance, field: Field = QQ) -> VerificationReport:
    """Per-degree decomposition over the whole search box of ``T/F^k``.

    Asserted for ``1 <= p <= s + r``; mismatches at ``p = 0`` are counted but
    not asserted.
    """
    big = inst.big_ideal()
    table = _table(big, field)
    entries = table.entries()
    total = inst.s + inst.r
    checked = mismatches = plus_fired = p0_mismatches = 0
    first_bad = None
    for gamma in product(*(range(lo, hi + 1) for lo, hi in zip(table.box_low, table.box_high))):
        for p in range(0, total + 1):
            lhs = entries.get((p, gamma), 0)
            rhs, plus = bigraded_rhs(inst, p, gamma, field)
            if p == 0:
                p0_mismatches += lhs != rhs
                continue
            checked += 1
            plus_fired += plus
            if lhs != rhs:
                mismatches += 1
                if first_bad is None:
                    first_bad = {"p": p, "gamma": list(gamma), "lhs": lhs, "rhs": rhs}
    return VerificationReport(
        instance=inst.descriptor(), theorem="bigraded-box", hypotheses={},
        lhs=checked - mismatches, rhs=checked, verdict=_verdict(mismatches == 0),
        details={"checked": checked, "mismatches": mismatches, "plus_one_fired": plus_fired,
                 "p0_mismatches": p0_mismatches, "first_mismatch": first_bad})


# Stanley-Reisner ideals


@lru_cache(maxsize=256)
def _symbolic_table(delta: SimplicialComplex, n: int, field: Field):
    return symbolic_cohomology_table(delta, n, field)


def symbolic_a(delta: SimplicialComplex, n: int, i: int, field: Field = QQ):
    return a_invariant(_symbolic_table(delta, n, field), i)


def ordinary_a(delta: SimplicialComplex, n: int, i: int, field: Field = QQ):
    return a_of_quotient(power(stanley_reisner(delta), n), i, field)


def _complex_descriptor(delta: SimplicialComplex, n: int) -> dict:
    return {"complex": complex_to_json(delta), "n": n}


@_timed
def verify_symbolic_equals_ordinary(delta: SimplicialComplex, n: int,
                                    field: Field = QQ) -> VerificationReport:
    """Top a-invariant of the symbolic power against that of the ordinary power."""
    k = delta.dim
    lhs = symbolic_a(delta, n, k + 1, field)
    rhs = ordinary_a(delta, n, k + 1, field)
    return VerificationReport(
        instance=_complex_descriptor(delta, n), theorem="symbolic", hypotheses={"dim": k},
        lhs=lhs, rhs=rhs, verdict=_verdict(lhs == rhs, k >= 0))


@_timed
def verify_bound_and_sphere(delta: SimplicialComplex, n: int, field: Field = QQ) -> VerificationReport:
    """``a_{k+1}(S/I^(n)) <= (k+2)(n-1)``, with equality iff a sphere restriction exists."""
    k = delta.dim
    a = symbolic_a(delta, n, k + 1, field)
    bound = (k + 2) * (n - 1)
    sphere = find_sphere_restriction(delta)
    ok = a <= bound
    if n >= 2:
        ok = ok and ((a == bound) == (sphere is not None))
    hyp = {"k_ge_1": k >= 1, "n_ge_2": n >= 2, "zero_ideal": stanley_reisner(delta).is_zero}
    # asserted for k >= 2; a k = 1 deviation is reported, not failed
    asserted = k >= 2 or (k == 1 and ok)
    return VerificationReport(
        instance=_complex_descriptor(delta, n), theorem="bound", hypotheses=hyp,
        lhs=a, rhs=bound, verdict=_verdict(ok, asserted),
        details={"sphere": None if sphere is None else [v + 1 for v in sphere],
                 "attained": a == bound, "k1_deviation": k == 1 and not ok})


@_timed
def verify_witness_bound(delta: SimplicialComplex, n: int, field: Field = QQ,
                         margin: int = 2) -> VerificationReport:
    """Nonvanishing top homology only occurs in degrees with every entry ``<= n - 1``.

    The scan runs over ``[-1, n - 1 + margin]`` so degrees beyond the claimed
    bound are actually examined.
    """
    k = delta.dim
    s = delta.vertices
    witnesses = 0
    worst = MINUS_INFINITY
    offender = None
    for alpha in product(range(-1, n + margin), repeat=s):
        G = negative_support(alpha)
        if not is_face(delta, G):
            continue
        c = symbolic_degree_complex_facets(delta, n, alpha)
        if reduced_homology_dim(c, k - popcount(G), field):
            witnesses += 1
            top = max(alpha)
            if top > worst:
                worst = top
            if top > n - 1 and offender is None:
                offender = list(alpha)
    return VerificationReport(
        instance={**_complex_descriptor(delta, n), "margin": margin}, theorem="lemma29",
        hypotheses={"dim": k}, lhs=worst, rhs=n - 1,
        verdict=_verdict(offender is None),
        details={"witnesses": witnesses, "offender": offender})


def verify_power_identities(I: MonomialIdeal, J: MonomialIdeal, k: int) -> VerificationReport:
    chk = check_power_decomposition(I, J, k)
    inst = FiberInstance(I, J, k)
    return VerificationReport(
        instance=inst.descriptor(), theorem="power-decomposition",
        hypotheses={"I_in_m2_and_J_in_n2": chk.hypothesis},
        lhs=chk.sum_identity, rhs=list(chk.intersection_identities),
        verdict=_verdict(chk.holds, chk.hypothesis))


# instance generation


def generate_random_complex(s: int, k: int, density: float, seed: int,
                            pure: bool = False) -> SimplicialComplex:
    """Random ``k``-dimensional complex on ``s`` vertices.

    Each ``k``-face is kept with probability ``density`` (at least one is
    always kept).  Unless ``pure``, lower faces are sprinkled in with
    probability ``density / 2`` each, which only matters when they are not
    already covered.
    """
    if k < 0 or k >= s:
        raise ValueError(f"cannot place a {k}-dimensional complex on {s} vertices")
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    tops = [mask_of(c) for c in combinations(range(s), k + 1)]
    facets = [m for m in tops if rng.random() < density]
    if not facets:
        facets.append(rng.choice(tops))
    if not pure:
        for d in range(0, k):
            for c in combinations(range(s), d + 1):
                if rng.random() < density / 2:
                    facets.append(mask_of(c))
    return SimplicialComplex(s, facets)


def generate_random_ideal(s: int, max_deg: int, count: int, seed: int,
                          min_deg: int = 1, max_exp: Optional[int] = None) -> MonomialIdeal:
    """Ideal generated by ``count`` random monomials of degree in ``[min_deg, max_deg]``."""
    if s < 1 or min_deg < 1 or max_deg < min_deg or count < 0:
        raise ValueError("need s >= 1 and 1 <= min_deg <= max_deg, count >= 0")
    rng = random.Random(seed)
    gens = []
    for _ in range(count):
        while True:
            d = rng.randint(min_deg, max_deg)
            v = [0] * s
            for _ in range(d):
                v[rng.randrange(s)] += 1
            if max_exp is None or max(v) <= max_exp:
                break
        gens.append(v)
    return MonomialIdeal(s, gens)


def random_fiber_instances(n: int, seed: int, s: int = 3, r: int = 3, max_deg: int = 3,
                           max_power: int = 2, max_gens: int = 3, a1_hypotheses: bool = False,
                           max_exp: Optional[int] = None) -> list[FiberInstance]:
    """Seeded fiber-product instances.

    With ``a1_hypotheses`` the ideals are drawn inside ``m^2`` and resampled
    until their radicals differ from the maximal ideal.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        k = rng.randint(1, max_power)
        ideals = []
        for ambient in (s, r):
            while True:
                lo = 2 if a1_hypotheses else 1
                I = generate_random_ideal(ambient, max(max_deg, lo), rng.randint(0, max_gens),
                                          rng.randrange(1 << 30), min_deg=lo, max_exp=max_exp)
                if not a1_hypotheses or radical(I) != MonomialIdeal.maximal(ambient):
                    break
            ideals.append(I)
        out.append(FiberInstance(ideals[0], ideals[1], k))
    return out


def random_complex_suite(n: int, seed: int, max_vertices: int = 6, max_dim: int = 3,
                         min_dim: int = 1) -> list[SimplicialComplex]:
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        s = rng.randint(3, max_vertices)
        k = rng.randint(min_dim, min(max_dim, s - 2))
        density = rng.choice([0.3, 0.5, 0.7, 1.0])
        out.append(generate_random_complex(s, k, density, rng.randrange(1 << 30),
                                           pure=rng.random() < 0.5))
    return out
