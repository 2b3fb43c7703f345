import pytest

from pkg.closure import generate
from pkg.errors import ClosureMismatchError, InvalidParameterError
from pkg.gens import E, build, genset, genset_dihedral, genset_minus
from pkg.ptrans import omega
from pkg.rank import rank_exact, rank_lower_full, rank_lower_minus, rank_upper


def test_rank_upper(monoids):
    target = monoids(5).minus
    assert rank_upper(omega(5), genset_minus(5), target).value == 3
    short = rank_upper(omega(5), genset_dihedral(5), target)
    assert not short.ok
    assert short.witness == build(5, E)


@pytest.mark.parametrize("n, expected", [(5, 3), (6, 4)])
def test_rank_lower_minus(monoids, n, expected):
    m = monoids(n)
    bound = rank_lower_minus(n, m.closure("minus"), m.minus)
    assert bound.holds
    assert bound.value == expected == len(genset_minus(n))


def test_rank_lower_minus_rejects_other_closures(monoids):
    m = monoids(6)
    with pytest.raises(ClosureMismatchError):
        rank_lower_minus(6, m.closure("di"), m.minus)
    with pytest.raises(ClosureMismatchError):
        rank_lower_minus(6, m.closure("full"), m.minus)


def test_rank_lower_full(monoids, full5):
    bound = rank_lower_full(5, full5, monoids(5).full)
    assert bound.holds
    assert bound.value == 5
    with pytest.raises(InvalidParameterError):
        rank_lower_full(4, monoids(4).closure("full"))


@pytest.mark.slow
def test_rank_lower_full_n6(monoids):
    m = monoids(6)
    bound = rank_lower_full(6, m.closure("full"), m.full)
    assert bound.holds and bound.value == 6


def test_rank_exact_dihedral():
    gens = genset(5, "dihedral")
    search = rank_exact(generate(gens.ambient, gens))
    assert search.value == 2
    assert len(search.generators) == 2


def test_rank_exact_small_monoids(monoids):
    assert rank_exact(monoids(4).closure("full")).value == 4
    assert rank_exact(monoids(5).closure("minus")).value == 3


def test_rank_exact_budget(monoids):
    search = rank_exact(monoids(5).closure("minus"), search_budget=1)
    assert search.inconclusive
    assert search.closures_tried == 2


def test_rank_lower_full_records_forced_generator_rank(monoids, full5):
    bound = rank_lower_full(5, full5, monoids(5).full)
    claim = next(c for c in bound.claims if c.name.startswith("forced union generators"))
    assert claim.passed
    assert claim.count == 5
    assert "4 of 4" in claim.detail
