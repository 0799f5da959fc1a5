"""Hypothesis strategies for small ideals and complexes."""

from hypothesis import strategies as st

from aiinv.complexes import SimplicialComplex
from aiinv.monomials import MonomialIdeal


def exponents(s: int, top: int = 3):
    return st.lists(st.integers(0, top), min_size=s, max_size=s)


@st.composite
def ideals(draw, s=None, max_gens=4, top=3, nonzero=False):
    s = draw(st.integers(1, 4)) if s is None else s
    gens = draw(st.lists(exponents(s, top), min_size=1 if nonzero else 0, max_size=max_gens))
    return MonomialIdeal(s, gens)


@st.composite
def proper_ideals(draw, s=None, max_gens=4, top=3):
    I = draw(ideals(s=s, max_gens=max_gens, top=top))
    if I.is_unit:
        I = MonomialIdeal.zero(I.ambient)
    return I


@st.composite
def complexes(draw, max_vertices=6, allow_void=False):
    s = draw(st.integers(1, max_vertices))
    full = (1 << s) - 1
    facets = draw(st.lists(st.integers(0, full), min_size=0 if allow_void else 1, max_size=5))
    return SimplicialComplex(s, facets)
