from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aiinv.monomials import (
    AmbientMismatchError,
    InvalidIdealError,
    MonomialIdeal,
    SymbolicPowerOracle,
    check_power_decomposition,
    contains,
    divides,
    fiber_product,
    intersect,
    is_minimal,
    localize,
    max_exponent_profile,
    multiply,
    power,
    power_by_multisets,
    radical,
    symbolic_membership,
    verify_power_decomposition,
)

from strategies import ideals


def box(top):
    return product(*(range(t + 1) for t in top))


def test_divides():
    assert divides((1, 0), (1, 2))
    assert not divides((2, 0), (1, 2))
    assert divides((0, 0), (5, 7))
    with pytest.raises(AmbientMismatchError):
        divides((1,), (1, 2))


def test_contains():
    I = MonomialIdeal(3, [[1, 1, 1]])
    assert not contains(I, (1, 1, 0))
    assert contains(I, (2, 1, 1))
    assert contains(MonomialIdeal.unit(3), (0, 0, 0))
    assert (0, 0, 0) not in MonomialIdeal.zero(3)


def test_power():
    assert power(MonomialIdeal(3, [[1, 1, 1]]), 2) == MonomialIdeal(3, [[2, 2, 2]])
    m = MonomialIdeal.maximal(2)
    assert set(power(m, 2).gens) == {(2, 0), (1, 1), (0, 2)}
    I = MonomialIdeal(2, [[1, 2], [3, 0]])
    assert power(I, 1) == I
    assert power(I, 0).is_unit


def test_intersect():
    x1, x2 = MonomialIdeal(2, [[1, 0]]), MonomialIdeal(2, [[0, 1]])
    assert intersect(x1, x2) == MonomialIdeal(2, [[1, 1]])
    assert intersect(x1, MonomialIdeal(2, [[1, 1]])) == MonomialIdeal(2, [[1, 1]])
    A = MonomialIdeal(2, [[2, 0], [0, 1]])
    B = MonomialIdeal(2, [[0, 2], [1, 0]])
    assert set(intersect(A, B).gens) == {(2, 0), (1, 1), (0, 2)}


def test_radical():
    assert radical(MonomialIdeal(3, [[2, 2, 2]])) == MonomialIdeal(3, [[1, 1, 1]])
    assert radical(MonomialIdeal(2, [[2, 0], [0, 1]])) == MonomialIdeal.maximal(2)
    assert radical(MonomialIdeal.zero(2)).is_zero


def test_localize():
    I = MonomialIdeal(3, [[1, 1, 1]])
    assert localize(I, [0]) == MonomialIdeal(3, [[0, 1, 1]])
    assert localize(I, []) == I


def test_localize_top_face_gives_complement_prime():
    # boundary of the triangle: I = (x1 x2 x3), a top face {1,2}
    I = MonomialIdeal(3, [[1, 1, 1]])
    assert localize(I, [0, 1]) == MonomialIdeal(3, [[0, 0, 1]])


def test_fiber_product():
    assert fiber_product(MonomialIdeal.zero(1), MonomialIdeal.zero(1)) == MonomialIdeal(2, [[1, 1]])
    F = fiber_product(MonomialIdeal(2, [[1, 1]]), MonomialIdeal.zero(1))
    assert set(F.gens) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}
    F = fiber_product(MonomialIdeal.zero(2), MonomialIdeal.zero(2))
    assert set(F.gens) == {(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)}
    with pytest.raises(InvalidIdealError):
        fiber_product(MonomialIdeal.unit(1), MonomialIdeal.zero(1))


def test_power_decomposition_examples():
    I, J = MonomialIdeal(2, [[2, 0]]), MonomialIdeal(2, [[2, 0]])
    assert verify_power_decomposition(I, J, 1)
    assert verify_power_decomposition(I, J, 2)
    chk = check_power_decomposition(MonomialIdeal(2, [[1, 0]]), J, 1)
    assert chk.hypothesis is False


def test_symbolic_membership():
    o = SymbolicPowerOracle(3, [{0, 1}, {1, 2}], 2)
    assert symbolic_membership(o, (2, 0, 2))
    assert not symbolic_membership(o, (1, 5, 1))
    o1 = SymbolicPowerOracle(3, [{0, 1}, {1, 2}], 1)
    I = MonomialIdeal(3, [[1, 0, 1]])
    for a in box((2, 2, 2)):
        assert (a in o1) == contains(I, a)


def test_max_exponent_profile():
    assert max_exponent_profile(MonomialIdeal(2, [[2, 1], [0, 3]])) == (2, 3)
    assert max_exponent_profile(MonomialIdeal(3, [[1, 1, 1]])) == (1, 1, 1)
    assert max_exponent_profile(MonomialIdeal(2, [[1, 0]])) == (1, 0)


@given(ideals(), ideals())
def test_constructors_keep_generators_minimal(I, J):
    if I.ambient != J.ambient:
        J = MonomialIdeal(I.ambient, [])
    for K in (I + J, I * J, I & J, power(I, 2), radical(I)):
        assert is_minimal(K.gens)


@given(st.integers(1, 3).flatmap(lambda s: st.tuples(ideals(s=s, max_gens=3), ideals(s=s, max_gens=3))))
def test_membership_of_intersection_and_product(pair):
    I, J = pair
    top = (4,) * I.ambient
    meet, IJ = I & J, multiply(I, J)
    for m in box(top):
        assert contains(meet, m) == (contains(I, m) and contains(J, m))
        witness = any(contains(I, g) and contains(J, tuple(x - y for x, y in zip(m, g)))
                      for g in box(m))
        assert contains(IJ, m) == witness


@given(ideals(max_gens=3, top=2), st.integers(1, 3))
def test_power_matches_multiset_products(I, k):
    assert power(I, k) == power_by_multisets(I, k)


@given(st.integers(1, 3).flatmap(lambda s: st.tuples(ideals(s=s, max_gens=3), ideals(s=s, max_gens=3),
                                                      st.sets(st.integers(0, s - 1)))))
def test_localization_is_multiplicative_and_meet_compatible(data):
    I, J, F = data
    assert localize(I * J, F) == localize(I, F) * localize(J, F)
    assert localize(I & J, F) == localize(I, F) & localize(J, F)


@given(ideals(max_gens=3), st.integers(1, 3))
def test_radical_of_power(I, k):
    assert radical(power(I, k)) == radical(I)


@given(st.integers(1, 4).flatmap(
    lambda s: st.tuples(st.just(s), st.lists(st.sets(st.integers(0, s - 1)), min_size=1, max_size=4),
                        st.integers(1, 3))))
def test_symbolic_oracle_matches_explicit_intersection(data):
    s, facets, n = data
    o = SymbolicPowerOracle(s, facets, n)
    explicit = o.explicit()
    for a in box((n,) * s):
        assert (a in o) == contains(explicit, a)
