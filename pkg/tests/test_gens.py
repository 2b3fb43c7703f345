import pytest

from pkg.errors import InvalidParameterError
from pkg.gens import (
    B,
    C,
    E,
    E0,
    G,
    G0,
    H,
    H0,
    IOTA,
    Z,
    E_i,
    GeneratorLabel,
    Tag,
    build,
    c_range,
    genset,
    genset_full,
    genset_minus,
    genset_plus,
    genset_union,
)
from pkg.graphs import wheel
from pkg.isometry import is_partial_isometry, rotation
from pkg.ptrans import PartialInjection, compose, compose_all, identity, omega, omega0
from pkg.wheel import char_member_minus, embed


def test_build_examples():
    assert build(6, C(1)).mapping == {1: 1, 2: 2, 4: 5, 5: 4}
    assert build(7, Z).mapping == {0: 1, 1: 0, 2: 2, 7: 7}
    assert build(5, E).domain == frozenset({1, 2, 3, 4})
    assert build(5, IOTA) == PartialInjection.from_mapping(omega0(5), {i: i for i in range(1, 6)})


@pytest.mark.parametrize("n", [4, 6, 9])
def test_e_i_is_a_conjugate_of_e(n):
    for i in range(1, n + 1):
        expected = compose_all(omega(n), (rotation(n, n - i), build(n, E), rotation(n, i)))
        assert build(n, E_i(i)) == expected
    assert build(n, E_i(n)) == build(n, E)


def test_parameter_ranges():
    assert list(c_range(5)) == []
    assert list(c_range(9)) == [1, 2]
    with pytest.raises(InvalidParameterError):
        build(5, C(1))
    with pytest.raises(InvalidParameterError):
        build(6, E_i(7))
    with pytest.raises(InvalidParameterError):
        build(3, G)
    with pytest.raises(InvalidParameterError):
        GeneratorLabel(Tag.C)


def test_label_parsing_and_names():
    assert str(C(2)) == "C(2)"
    assert str(E_i(3)) == "E_i(3)"
    assert GeneratorLabel.parse("B(1)") == B(1)
    assert GeneratorLabel.parse("Iota") == IOTA
    assert GeneratorLabel.parse("G0") == G0
    assert C(1).to_full_world() == B(1)
    with pytest.raises(InvalidParameterError):
        GeneratorLabel.parse("Q")
    with pytest.raises(InvalidParameterError):
        IOTA.to_full_world()


@pytest.mark.parametrize("n", range(4, 10))
def test_generators_are_partial_isometries(n):
    W = wheel(n)
    for label, x in genset_full(n):
        assert is_partial_isometry(W, x), label
    for label, x in genset_union(n):
        assert is_partial_isometry(W, x), label
    for label, x in genset_minus(n):
        assert char_member_minus(n, x), label


@pytest.mark.parametrize("n", [4, 5, 7, 8])
def test_relations(n):
    g, h = build(n, G), build(n, H)
    one = identity(omega(n))
    assert compose_all(omega(n), [g] * n) == one
    assert compose(h, h) == one
    assert compose(h, g) == compose(compose_all(omega(n), [g] * (n - 1)), h)


@pytest.mark.parametrize("n", [6, 7])
def test_iota_bridge(n):
    iota = build(n, IOTA)
    for full, rim in ((G0, G), (H0, H), (E0, E), (B(1), C(1))):
        assert compose(build(n, full), iota) == embed(build(n, rim))


def test_n4_e0_identity():
    g0, z = build(4, G0), build(4, Z)
    assert compose_all(omega0(4), (g0, g0, g0, z, z, g0)) == build(4, E0)


def test_genset_sizes():
    assert len(genset_minus(8)) == 5
    assert genset_minus(5).labels == (G, H, E)
    assert len(genset_full(6)) == 6
    assert genset_full(4).labels == (G0, H0, IOTA, Z)
    for n in range(5, 10):
        assert len(genset_minus(n)) == len(genset_plus(n)) == n // 2 + 1
        assert len(genset_union(n)) == n // 2 + 2
        assert len(genset_full(n)) == n // 2 + 3
    assert genset_plus(6).ambient == omega0(6)
    with pytest.raises(InvalidParameterError):
        genset(6, "nope")
