from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aiinv.complexes import SimplicialComplex, complex_of_ideal, is_face, popcount, stanley_reisner
from aiinv.degree_complexes import degree_complex_by_definition, negative_support
from aiinv.homology import QQ, Field, reduced_homology_dim
from aiinv.local_cohomology import (
    MINUS_INFINITY,
    a_invariant,
    a_vector,
    cohomology_table,
    graded_piece_dim,
    krull_dim,
    max_or_minus_infinity,
    regularity,
    symbolic_cohomology_table,
)
from aiinv.limits import ResourceLimitExceeded, limits
from aiinv.monomials import InvalidIdealError, MonomialIdeal, max_exponent_profile, multiply, power

from strategies import proper_ideals

x123 = MonomialIdeal(3, [[1, 1, 1]])


def piece_by_definition(I, i, alpha, field=QQ):
    G = negative_support(alpha)
    if not is_face(complex_of_ideal(I), G):
        return 0
    return reduced_homology_dim(degree_complex_by_definition(I, alpha), i - popcount(G) - 1, field)


def test_hypersurface():
    t = cohomology_table(x123)
    assert t.a == (MINUS_INFINITY, MINUS_INFINITY, 0)
    assert regularity(t) == 2
    assert graded_piece_dim(x123, 2, (0, 0, 0)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_powers_of_hypersurface(n):
    t = cohomology_table(power(x123, n))
    assert a_invariant(t, 2) == 3 * (n - 1)


def test_polynomial_ring():
    t = cohomology_table(MonomialIdeal.zero(2))
    assert a_vector(t) == [MINUS_INFINITY, MINUS_INFINITY, -2]
    assert krull_dim(MonomialIdeal.zero(3)) == 3


def test_residue_field():
    t = cohomology_table(MonomialIdeal.maximal(3))
    assert t.a == (0,)
    assert a_vector(t) == [0] + [MINUS_INFINITY] * 3
    assert regularity(t) == 0
    assert krull_dim(MonomialIdeal.maximal(3)) == 0


def test_path_complex():
    t = cohomology_table(MonomialIdeal(3, [[1, 0, 1]]))
    assert regularity(t) == 1
    assert krull_dim(x123) == 2


def test_errors():
    t = cohomology_table(x123)
    with pytest.raises(ValueError):
        a_invariant(t, 4)
    with pytest.raises(ValueError):
        a_invariant(t, -1)
    with pytest.raises(InvalidIdealError):
        cohomology_table(MonomialIdeal.unit(2))
    assert graded_piece_dim(MonomialIdeal.unit(2), 0, (0, 0)) == 0


def test_minus_infinity_max():
    assert max_or_minus_infinity([]) == MINUS_INFINITY
    assert max_or_minus_infinity([MINUS_INFINITY, 3]) == 3


def test_cell_cap():
    with limits(max_cells=2):
        with pytest.raises(ResourceLimitExceeded):
            cohomology_table(x123)


def test_time_budget(monkeypatch):
    monkeypatch.setenv("AIINV_MAX_MS", "0")
    with limits():
        with pytest.raises(ResourceLimitExceeded):
            cohomology_table(power(MonomialIdeal(3, [[1, 1, 0], [0, 1, 1]]), 2))


def test_no_finite_length_part_means_no_h0():
    I = MonomialIdeal(3, [[1, 1, 0], [0, 1, 1]])
    t = cohomology_table(I)
    assert t.a[0] == MINUS_INFINITY


@given(proper_ideals(max_gens=3))
def test_table_matches_definition_on_wider_box(I):
    t = cohomology_table(I)
    entries = t.entries()
    rho = max_exponent_profile(I) if not I.is_zero else (0,) * I.ambient
    for alpha in product(*(range(-2, r + 1) for r in rho)):
        for i in range(I.ambient + 1):
            d = piece_by_definition(I, i, alpha)
            assert t.dim_at(i, alpha) == d
            folded = tuple(max(a, -1) for a in alpha)
            if all(a <= r - 1 for a, r in zip(alpha, rho)):
                assert entries.get((i, folded), 0) == d


@given(proper_ideals(max_gens=3))
def test_vanishing_above_dimension(I):
    t = cohomology_table(I)
    assert all(c.i <= t.krull_dim for c in t.cells)
    assert len(t.a) == t.krull_dim + 1
    if I.is_zero:
        assert t.a[-1] == -I.ambient


@given(proper_ideals(max_gens=3), st.integers(2, 4))
def test_very_negative_coordinates_fold(I, depth):
    rho = max_exponent_profile(I) if not I.is_zero else (0,) * I.ambient
    for alpha in product(*(range(-1, r) for r in rho)):
        deep = tuple(-depth if a < 0 else a for a in alpha)
        for i in range(I.ambient + 1):
            assert graded_piece_dim(I, i, deep) == graded_piece_dim(I, i, alpha)


@given(proper_ideals(max_gens=3))
def test_box_is_complete(I):
    if I.is_zero:
        return
    rho = max_exponent_profile(I)
    for alpha in product(*(range(-1, r) for r in rho)):
        for j in range(I.ambient):
            if alpha[j] != rho[j] - 1:
                continue
            up = list(alpha)
            up[j] = rho[j]
            for i in range(I.ambient + 1):
                assert graded_piece_dim(I, i, up) == 0


@given(proper_ideals(s=3, max_gens=3), st.integers(1, 3))
def test_first_a_invariant_ignores_maximal_factor(I, k):
    if I.is_zero:
        return
    m = MonomialIdeal.maximal(I.ambient)
    for t in range(k):
        lhs = cohomology_table(multiply(power(m, t), power(I, k - t))) if t else cohomology_table(power(I, k))
        rhs = cohomology_table(power(I, k - t))
        assert a_vector(lhs)[1] == a_vector(rhs)[1]


def test_tetrahedron_boundary_symbolic_and_ordinary():
    d = SimplicialComplex.boundary_of_simplex(4)
    assert a_invariant(symbolic_cohomology_table(d, 2), 3) == 4
    assert a_invariant(cohomology_table(power(stanley_reisner(d), 2)), 3) == 4


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symbolic_box_is_wide_enough(n):
    d = SimplicialComplex.from_facets(4, [[0, 1], [1, 2], [2, 3], [0, 3]])
    narrow = symbolic_cohomology_table(d, n)
    wide = symbolic_cohomology_table(d, n, top=n + 1)
    assert narrow.cells == wide.cells


def test_fields_agree_on_small_quotient():
    I = MonomialIdeal(3, [[2, 1, 0], [0, 1, 2]])
    assert cohomology_table(I, QQ).cells == cohomology_table(I, Field(2)).cells
