import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import partial_injections
from pkg.errors import AmbientMismatchError, InvalidElementError
from pkg.ptrans import (
    PartialInjection,
    compose,
    compose_all,
    decode_ambient,
    encode_ambient,
    from_json,
    identity,
    inverse,
    omega,
    omega0,
    partial_identity,
    restrict,
    to_dict,
    to_json,
)

AMBIENT = omega0(5)


def pi(mapping, ambient=AMBIENT):
    return PartialInjection.from_mapping(ambient, mapping)


def test_compose_is_left_to_right():
    """First a, then b"""
    a = pi({1: 2, 3: 4})
    b = pi({2: 5, 4: 0})
    assert compose(a, b) == pi({1: 5, 3: 0})
    assert a * b == compose(a, b)


def test_compose_drops_points_leaving_the_domain():
    a = pi({1: 2, 3: 4})
    b = pi({2: 2})
    assert compose(a, b) == pi({1: 2})


def test_compose_rejects_different_ambients():
    with pytest.raises(AmbientMismatchError):
        compose(pi({1: 1}, omega(5)), pi({1: 1}, omega0(5)))


def test_identity_and_empty_product():
    assert compose_all(AMBIENT, []) == identity(AMBIENT)
    assert identity(AMBIENT).rank == 6


def test_invalid_elements_are_rejected():
    """Non-injective maps, unsorted pairs and points outside the ambient"""
    with pytest.raises(InvalidElementError):
        PartialInjection(AMBIENT, ((1, 2), (3, 2)))
    with pytest.raises(InvalidElementError):
        PartialInjection(AMBIENT, ((3, 1), (1, 2)))
    with pytest.raises(InvalidElementError):
        PartialInjection(AMBIENT, ((1, 9),))


def test_restrict_and_partial_identity():
    a = pi({0: 1, 1: 2, 2: 3})
    assert restrict(a, [0, 2]) == pi({0: 1, 2: 3})
    assert partial_identity(AMBIENT, [2, 1]) == pi({1: 1, 2: 2})
    with pytest.raises(InvalidElementError):
        restrict(a, [7])


def test_call_outside_domain():
    with pytest.raises(InvalidElementError):
        pi({1: 2})(3)
    assert pi({1: 2})(1) == 2


def test_json_encoding():
    a = pi({0: 0, 1: 2})
    assert to_dict(a) == {"ambient": "0..5", "map": [[0, 0], [1, 2]]}
    assert json.loads(to_json(a)) == to_dict(a)
    assert from_json('{"ambient": "0..5", "map": [[1, 2], [0, 0]]}') == a
    assert encode_ambient(omega(6)) == 6
    assert decode_ambient(6) == omega(6)
    assert decode_ambient("0..4") == omega0(4)


def test_json_default_ambient():
    assert from_json('{"map": [[1, 1]]}', default_ambient=omega(4)) == pi({1: 1}, omega(4))
    with pytest.raises(InvalidElementError):
        from_json('{"map": [[1, 1]]}')
    with pytest.raises(InvalidElementError):
        from_json("not json")
    with pytest.raises(InvalidElementError):
        from_json('{"ambient": 4}')


@settings(max_examples=200)
@given(st.data())
def test_composition_is_associative(data):
    a, b, c = (data.draw(partial_injections(AMBIENT)) for _ in range(3))
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@settings(max_examples=200)
@given(partial_injections(AMBIENT))
def test_inverse_law(a):
    """a a^-1 a = a and a a^-1 is the identity on the domain"""
    b = inverse(a)
    assert compose(compose(a, b), a) == a
    assert compose(a, b) == partial_identity(AMBIENT, a.domain)
    assert inverse(b) == a


@settings(max_examples=200)
@given(st.data())
def test_rank_of_a_product(data):
    a, b = (data.draw(partial_injections(AMBIENT)) for _ in range(2))
    assert compose(a, b).rank <= min(a.rank, b.rank)


def test_composition_is_associative_on_dpw4(monoids):
    """Every triple, through the multiplication table"""
    elements = monoids(4).dpw
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[compose(a, b)] for b in elements] for a in elements]
    for row in table:
        for j in range(len(elements)):
            assert [row[k] for k in table[j]] == table[row[j]]


@pytest.mark.parametrize(
    "text",
    [
        '{"ambient": ["a"], "map": []}',
        '{"ambient": [1, null], "map": []}',
        '{"ambient": [1, true], "map": []}',
        '{"ambient": 5, "map": [[1.9, 2.2]]}',
        '{"ambient": 5, "map": [[1, "2"]]}',
        '{"ambient": 5, "map": [[1, 2, 3]]}',
        '{"ambient": 5, "map": 7}',
    ],
)
def test_json_rejects_non_integer_points(text):
    with pytest.raises(InvalidElementError):
        from_json(text)
