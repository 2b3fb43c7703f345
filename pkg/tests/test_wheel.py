import pytest
from hypothesis import given, settings

from conftest import rim_maps
from pkg.errors import AmbientMismatchError, NotAMemberError
from pkg.gens import B, C, E, E0, G, G0, H, IOTA, Z, build
from pkg.graphs import wheel
from pkg.isometry import dihedral, is_partial_isometry, partial_injections
from pkg.ptrans import PartialInjection, inverse, omega, omega0
from pkg.wheel import (
    Arc,
    Classification,
    JType,
    Orientation,
    char_member_minus,
    classify,
    embed,
    from_arc_maps,
    j_type,
    jtype_exists,
    maximal_arcs,
    orientation,
    project,
    psi,
    psi_inv,
    split_lemma_check,
)


def rim_element(n, mapping):
    return PartialInjection.from_mapping(omega(n), mapping)


def test_arc_membership_and_size():
    arc = Arc(6, 5, 2)
    assert arc.members == (5, 6, 1, 2)
    assert arc.size == 4
    assert arc.min == 1
    assert 6 in arc and 3 not in arc
    assert Arc(6, 1, 6).size == 6


def test_maximal_arcs():
    assert maximal_arcs(6, {5, 6, 1, 2}) == [Arc(6, 5, 2)]
    assert maximal_arcs(6, {1, 2, 4, 5}) == [Arc(6, 1, 2), Arc(6, 4, 5)]
    assert maximal_arcs(6, range(1, 7)) == [Arc(6, 1, 6)]
    assert maximal_arcs(6, set()) == []
    assert maximal_arcs(7, {7, 1, 3, 5}) == [Arc(7, 7, 1), Arc(7, 3, 3), Arc(7, 5, 5)]


def test_char_member_minus_examples():
    assert char_member_minus(6, build(6, G))
    assert char_member_minus(6, build(6, C(1)))
    assert not char_member_minus(6, rim_element(6, {1: 1, 2: 2, 3: 5}))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_char_member_minus_matches_isometry_exhaustively(n):
    G = wheel(n)
    for alpha in partial_injections(omega(n)):
        assert char_member_minus(n, alpha) == is_partial_isometry(G, embed(alpha))


@settings(max_examples=300, deadline=None)
@given(rim_maps())
def test_char_member_minus_matches_isometry(case):
    n, alpha = case
    assert char_member_minus(n, alpha) == is_partial_isometry(wheel(n), embed(alpha))


def test_orientation():
    n = 6
    assert orientation(n, build(n, G), Arc(n, 1, n)) is Orientation.PRESERVES
    assert orientation(n, build(n, H), Arc(n, 1, n)) is Orientation.REVERSES
    assert orientation(n, build(n, C(1)), Arc(n, 4, 5)) is Orientation.REVERSES
    assert orientation(n, build(n, C(1)), Arc(n, 1, 2)) is Orientation.PRESERVES
    assert orientation(n, rim_element(n, {3: 5}), Arc(n, 3, 3)) is Orientation.PRESERVES
    with pytest.raises(NotAMemberError):
        orientation(n, build(n, E), Arc(n, 5, 6))


def test_j_type():
    assert j_type(build(6, E)) == JType((5,))
    assert j_type(build(7, C(1))) == JType((2, 3))
    assert j_type(build(7, G)) == JType((7,))
    assert j_type(rim_element(6, {})) == JType(())
    assert str(JType((1, 2))) == "(1,2)"


def test_jtype_exists():
    assert jtype_exists(6, (6,))
    assert jtype_exists(6, (2, 2))
    assert not jtype_exists(6, (2, 3))
    assert not jtype_exists(4, (1, 2))


def test_classify():
    n = 6
    assert classify(n, build(n, Z)) is Classification.OUTSIDE
    assert classify(n, build(n, G0)) is Classification.PLUS
    assert classify(n, build(n, IOTA)) is Classification.MINUS
    with pytest.raises(AmbientMismatchError):
        classify(n, build(n, G))


def test_psi_round_trip():
    n = 7
    assert psi(build(n, G0)) == build(n, G)
    assert psi(build(n, E0)) == build(n, E)
    assert psi_inv(build(n, C(1))) == build(n, B(1))
    assert psi_inv(psi(build(n, B(1)))) == build(n, B(1))
    with pytest.raises(NotAMemberError):
        psi(build(n, Z))
    with pytest.raises(NotAMemberError):
        psi_inv(rim_element(n, {1: 1, 2: 3}))


def test_embed_and_project():
    alpha = rim_element(5, {1: 2, 2: 3})
    assert embed(alpha).ambient == omega0(5)
    assert project(embed(alpha)) == alpha
    with pytest.raises(NotAMemberError):
        project(build(5, G0))


def test_split_lemma_check():
    n = 6
    assert split_lemma_check(n, build(n, Z)) == []
    fabricated = PartialInjection.from_mapping(omega0(n), {0: 1, 1: 0, 2: 2, 3: 3, 4: 4})
    assert "property-1" in split_lemma_check(n, fabricated)
    assert not is_partial_isometry(wheel(n), fabricated)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_wheel_invariants(n, monoids):
    """Outside elements are small, units are the dihedral group, j_type is inverse-invariant"""
    m = monoids(n)
    assert all(x.rank <= 4 for x in m.outside)
    assert all(classify(n, x) is not Classification.OUTSIDE for x in m.dpw if x.rank >= 5)
    assert all(x.mapping[0] == 0 for x in m.plus)
    assert all(split_lemma_check(n, x) == [] for x in m.dpw)
    assert {x for x in m.minus if x.rank == n} == set(dihedral(n).elements)
    units = [x for x in m.dpw if x.rank == n + 1]
    assert len(units) == 2 * n and all(x.mapping[0] == 0 for x in units)
    assert all(j_type(x) == j_type(inverse(x)) for x in m.minus)


@pytest.mark.parametrize("n", [4, 5])
def test_small_wheels_collapse_to_di(n, monoids):
    assert monoids(n).minus == monoids(n).di


def test_from_arc_maps_builds_c1():
    n = 6
    c1 = from_arc_maps(
        n,
        [
            (Arc(n, 1, 2), Arc(n, 1, 2), Orientation.PRESERVES),
            (Arc(n, 4, 5), Arc(n, 4, 5), Orientation.REVERSES),
        ],
    )
    assert c1 == build(n, C(1))
