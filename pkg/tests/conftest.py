"""Shared fixtures: cached enumerations and closures per n, hypothesis strategies"""

from functools import lru_cache

import pytest
from hypothesis import strategies as st

from pkg.gens import genset_minus
from pkg.monoids import WheelMonoids
from pkg.ptrans import PartialInjection, compose_all, omega


@lru_cache(maxsize=None)
def wheel_monoids(n: int) -> WheelMonoids:
    return WheelMonoids(n)


@pytest.fixture(scope="session")
def monoids():
    """WheelMonoids(n), enumerated once per test session"""
    return wheel_monoids


@pytest.fixture(scope="session")
def minus6():
    return wheel_monoids(6).closure("minus")


@pytest.fixture(scope="session")
def full5():
    return wheel_monoids(5).closure("full")


@st.composite
def partial_injections(draw, ambient):
    """Uniform-ish partial injection on a fixed ambient"""
    points = list(ambient)
    domain = draw(st.lists(st.sampled_from(points), unique=True, max_size=len(points)))
    image = draw(st.permutations(points))[: len(domain)]
    return PartialInjection.from_mapping(ambient, dict(zip(domain, image)))


@st.composite
def rim_maps(draw, n_values=(4, 5, 6, 7)):
    n = draw(st.sampled_from(n_values))
    return n, draw(partial_injections(omega(n)))


@st.composite
def minus_members(draw, n_values=(6, 7, 8, 9)):
    """Random products of the DPW_n^- generators, so every draw is a member"""
    n = draw(st.sampled_from(n_values))
    gens = genset_minus(n).elements
    word = draw(st.lists(st.sampled_from(gens), max_size=16))
    return n, compose_all(omega(n), word)
