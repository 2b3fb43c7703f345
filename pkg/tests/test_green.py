import pytest

from pkg.closure import generate
from pkg.errors import InvalidParameterError
from pkg.gens import Z, build, genset
from pkg.green import (
    MODES,
    canonical,
    check_theorem,
    class_table,
    expected_labels,
    green,
    meet,
    theorem_j_label,
)


def test_partition_helpers():
    assert canonical([[3, 1], [2], [0]]) == [(0,), (1, 3), (2,)]
    assert meet([(0, 1, 2), (3,)], [(0, 1), (2, 3)]) == [(0, 1), (2,), (3,)]


@pytest.mark.parametrize("mode", MODES)
def test_dihedral_group_is_one_class(mode):
    gens = genset(6, "dihedral")
    structure = green(generate(gens.ambient, gens), mode)
    assert len(structure.d_classes) == 1
    assert len(structure.h_classes) == 1


def test_modes_agree(full5):
    a = green(full5, "by-dom-im").partitions()
    b = green(full5, "by-ideals").partitions()
    assert a == b


def test_unknown_mode(minus6):
    with pytest.raises(InvalidParameterError):
        green(minus6, "by-guessing")


def test_d_classes_are_j_type_fibers(minus6):
    results = check_theorem("theorem-J-minus", 6, minus6, green(minus6))
    assert [r.passed for r in results] == [True]


@pytest.mark.parametrize("n", [5, 6])
def test_plus_and_union_theorems(monoids, n):
    for theorem, monoid in (("theorem-J-plus", "plus"), ("theorem-J-union", "union")):
        closure = monoids(n).closure(monoid)
        assert all(r.passed for r in check_theorem(theorem, n, closure, green(closure)))


@pytest.mark.parametrize("n", [5, 6])
def test_full_theorem_and_inventory(monoids, n):
    closure = monoids(n).closure("full")
    results = check_theorem("theorem-J", n, closure, green(closure))
    assert [r.name for r in results][:2] == ["theorem-J", "theorem-J-inventory-rank-0"]
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_rank_two_classes_of_dpw6(monoids):
    closure = monoids(6).closure("full")
    rows = class_table(6, closure, green(closure), "full")
    assert sorted(row["name"] for row in rows if row["rank"] == 2) == ["J'_2", "J-(1,1)"]
    assert sum(row["size"] for row in rows) == len(closure)


def test_named_classes():
    assert theorem_j_label(6, build(6, Z)) == "J'_4"
    assert expected_labels(5, 4) == ["J'_4", "J-(4)", "J+(1,2)"]
    assert expected_labels(6, 0) == ["J_0"]


def test_class_table_names(minus6):
    rows = class_table(6, minus6, green(minus6), "minus")
    top = [row for row in rows if row["rank"] == 6]
    assert top == [{"class": top[0]["class"], "size": 12, "rank": 6, "name": "(6)"}]


def test_unknown_theorem(minus6):
    with pytest.raises(InvalidParameterError):
        check_theorem("theorem-K", 6, minus6, green(minus6))
