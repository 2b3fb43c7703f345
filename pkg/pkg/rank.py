"""
dpwheel - Ranks

- rank_upper: a generating set proves rank <= |gens| when its closure is the target
- rank_lower_minus / rank_lower_full: the necessity arguments for DPW_n^-
  and DPW_n, each step checked inside the enumerated monoid; the bound
  counts only the steps that hold
- rank_exact: exhaustive minimal generating set search for small monoids

Search pruning used by rank_exact:
- The units of a finite monoid are products of units only, so every
  generating set contains a generating set of the unit group; one fixed
  minimal one is used.
- Replacing a non-unit generator x by u x v (u, v units) keeps the
  generated monoid, so non-unit candidates are one per two-sided unit
  orbit.
- A D-class that no product of two elements from outside it can reach
  must contribute a generator.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from pkg.closure import MonoidClosure, generate, generate_from
from pkg.errors import ClosureMismatchError, InvalidParameterError
from pkg.gens import (
    C,
    LabeledSet,
    build,
    c_range,
    genset_minus,
    genset_plus,
    genset_union,
)
from pkg.green import green
from pkg.isometry import dihedral, is_in_DI
from pkg.monoids import WheelMonoids
from pkg.ptrans import (
    Ambient,
    PartialInjection,
    compose,
    identity,
    omega,
    omega0,
)
from pkg.report import CheckResult
from pkg.wheel import Classification, classify, maximal_arcs, psi

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 20_000


@dataclass
class UpperBound:
    value: Optional[int]
    witness: Optional[PartialInjection] = None

    @property
    def ok(self) -> bool:
        return self.value is not None


@dataclass
class LowerBound:
    value: int
    claims: List[CheckResult] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(c.passed for c in self.claims)


@dataclass
class RankSearch:
    value: Optional[int]
    generators: List[PartialInjection]
    closures_tried: int

    @property
    def inconclusive(self) -> bool:
        return self.value is None


def _witness(elements: FrozenSet[PartialInjection]) -> PartialInjection:
    """Highest rank first, then canonical order"""
    return min(elements, key=lambda x: (-x.rank, x.pairs))


def rank_upper(
    ambient: Ambient,
    gens: LabeledSet,
    target: FrozenSet[PartialInjection],
    cap: Optional[int] = None,
) -> UpperBound:
    generated = generate(ambient, gens, cap=cap).element_set
    if generated == target:
        return UpperBound(len(gens))
    missing = target - generated
    return UpperBound(None, _witness(missing or generated - target))


def _arc_sizes(n: int, points: FrozenSet[int]) -> Tuple[int, ...]:
    return tuple(sorted(a.size for a in maximal_arcs(n, points)))


def _subgroup_size(ambient: Ambient, x: PartialInjection) -> int:
    return len(generate(ambient, [x]))


def rank_lower_minus(
    n: int,
    closure: MonoidClosure,
    target: Optional[FrozenSet[PartialInjection]] = None,
) -> LowerBound:
    if closure.ambient != omega(n):
        raise ClosureMismatchError(f"expected a closure on 1..{n}")
    target = WheelMonoids(n).minus if target is None else target
    if closure.element_set != target:
        raise ClosureMismatchError(f"closure is not DPW_{n}^-")

    claims: List[CheckResult] = []
    elements = closure.elements

    high = [x for x in elements if x.rank >= n - 1]
    bad = next((x for x in high if not is_in_DI(n, x)), None)
    corank_le_one_in_di = bad is None
    claims.append(
        CheckResult.of(
            "rank >= n-1 lies in DI_n", n, corank_le_one_in_di, len(high), witness=bad
        )
    )

    units = [x for x in elements if x.rank == n]
    units_are_dihedral = set(units) == set(dihedral(n).elements)
    not_cyclic = all(_subgroup_size(omega(n), u) < len(units) for u in units)
    claims.append(
        CheckResult.of(
            "units need two generators",
            n,
            units_are_dihedral and not_cyclic,
            len(units),
            detail="unit group is D_2n and has no single generator",
        )
    )
    value = 2 if units_are_dihedral and not_cyclic else 0

    corank_one = [x for x in elements if x.rank == n - 1]
    from_units = generate(omega(n), units).element_set
    stray = next((x for x in from_units if x.rank == n - 1), None)
    needs_corank_one = bool(corank_one) and stray is None
    claims.append(
        CheckResult.of(
            "a rank n-1 generator is needed",
            n,
            needs_corank_one,
            len(corank_one),
            witness=stray,
        )
    )
    value += 1 if needs_corank_one else 0

    high_closure = generate_from(omega(n), high).element_set
    signatures: Dict[tuple, int] = {}
    for j in c_range(n):
        c = build(n, C(j))
        expected = tuple(sorted((j + 1, n - j - 3)))
        prefixes = [x for x in elements if x.domain == c.domain]
        off = next((x for x in prefixes if _arc_sizes(n, x.image) != expected), None)
        ok = (
            corank_le_one_in_di
            and c in closure
            and not is_in_DI(n, c)
            and c not in high_closure
            and off is None
            and expected not in signatures
        )
        signatures[expected] = j
        claims.append(
            CheckResult.of(
                f"c_{j} forces a rank n-2 generator with image arcs {expected}",
                n,
                ok,
                len(prefixes),
                witness=off if off is not None else c,
            )
        )
        value += 1 if ok else 0

    logger.info("rank lower bound for DPW_%d^-: %d", n, value)
    return LowerBound(value, claims)


def _irredundant(gens: LabeledSet) -> List[PartialInjection]:
    """Generators outside the closure of the others"""
    elements = gens.elements
    kept = []
    for i, x in enumerate(elements):
        others = elements[:i] + elements[i + 1 :]
        if x not in generate(gens.ambient, others).element_set:
            kept.append(x)
    return kept


def rank_lower_full(
    n: int,
    closure: MonoidClosure,
    target: Optional[FrozenSet[PartialInjection]] = None,
) -> LowerBound:
    if n == 4:
        raise InvalidParameterError("n = 4 is not covered by the counting argument; use rank_exact")
    if closure.ambient != omega0(n):
        raise ClosureMismatchError(f"expected a closure on 0..{n}")
    monoids = WheelMonoids(n)
    target = monoids.full if target is None else target
    if closure.element_set != target:
        raise ClosureMismatchError(f"closure is not DPW_{n}")

    claims: List[CheckResult] = []
    kinds = {x: classify(n, x) for x in closure.elements}

    outside = [x for x, kind in kinds.items() if kind is Classification.OUTSIDE]
    tall = next((x for x in outside if x.rank > 4), None)
    claims.append(
        CheckResult.of(
            "outside elements have rank <= 4", n, tall is None, len(outside), witness=tall
        )
    )

    high = [x for x in closure.elements if x.rank >= 5]
    stray = next((x for x in high if kinds[x] is Classification.OUTSIDE), None)
    claims.append(
        CheckResult.of(
            "rank >= 5 lies in the union", n, stray is None, len(high), witness=stray
        )
    )

    union = frozenset(x for x, kind in kinds.items() if kind is not Classification.OUTSIDE)
    union_gens = genset_union(n)
    union_closed = generate(union_gens.ambient, union_gens).element_set == union
    claims.append(CheckResult.of("the union is a submonoid", n, union_closed, len(union)))

    plus = frozenset(x for x, kind in kinds.items() if kind is Classification.PLUS)
    plus_gens = genset_plus(n)
    plus_closed = generate(plus_gens.ambient, plus_gens).element_set == plus
    minus_closure = generate(omega(n), genset_minus(n))
    psi_onto = frozenset(psi(x) for x in plus) == minus_closure.element_set
    claims.append(
        CheckResult.of(
            "Psi maps the Plus submonoid onto DPW_n^-",
            n,
            plus_closed and psi_onto,
            len(plus),
        )
    )

    minus_bound = rank_lower_minus(n, minus_closure, monoids.minus)
    claims.extend(c.model_copy(update={"name": f"minus: {c.name}"}) for c in minus_bound.claims)
    forced = _irredundant(union_gens)
    lowest_forced = min((x.rank for x in forced), default=0)
    low = next((x for x in forced if x.rank < 5), None)
    claims.append(
        CheckResult.of(
            "forced union generators have rank >= 5",
            n,
            bool(forced) and low is None,
            lowest_forced,
            detail=(
                f"{len(forced)} of {len(union_gens)} union generators are irredundant, "
                f"lowest rank {lowest_forced}"
            ),
            witness=low,
        )
    )

    big_minus = [x for x, kind in kinds.items() if kind is Classification.MINUS and x.rank >= 5]
    claims.append(
        CheckResult.of(
            "Minus elements of rank >= 5 exist", n, bool(big_minus), len(big_minus)
        )
    )

    value = 0
    if stray is None and plus_closed and psi_onto and forced and low is None:
        value += minus_bound.value
        if big_minus:
            value += 1
    if tall is None and stray is None and union_closed and outside:
        value += 1

    logger.info("rank lower bound for DPW_%d: %d", n, value)
    return LowerBound(value, claims)


def _generates(
    ambient: Ambient,
    gens: Sequence[PartialInjection],
    target: FrozenSet[PartialInjection],
) -> bool:
    if not gens:
        return target == frozenset([identity(ambient)])
    return generate(ambient, list(gens)).element_set == target


def rank_exact(closure: MonoidClosure, search_budget: int = DEFAULT_SEARCH_BUDGET) -> RankSearch:
    ambient = closure.ambient
    elements = closure.elements
    index = closure.index
    everything = closure.element_set
    tried = 0

    unit_ids = [i for i, x in enumerate(elements) if x.rank == len(ambient)]
    unit_elems = [elements[i] for i in unit_ids]
    unit_set = frozenset(unit_elems)

    base: List[PartialInjection] = []
    if len(unit_ids) > 1:
        found = None
        for r in range(1, len(unit_ids) + 1):
            for combo in combinations(unit_elems, r):
                tried += 1
                if tried > search_budget:
                    return RankSearch(None, [], tried)
                if generate(ambient, list(combo)).element_set == unit_set:
                    found = list(combo)
                    break
            if found:
                break
        base = found or []

    unit_index = set(unit_ids)
    orbit_rep: Dict[int, int] = {}
    reps: List[int] = []
    for i, x in enumerate(elements):
        if i in unit_index or i in orbit_rep:
            continue
        for u in unit_elems:
            ux = compose(u, x)
            for v in unit_elems:
                orbit_rep[index[compose(ux, v)]] = i
        reps.append(i)

    structure = green(closure)
    d_of = structure.d_class_of()
    reached = set()
    for a, x in enumerate(elements):
        for b, y in enumerate(elements):
            c = index[compose(x, y)]
            dc = d_of[c]
            if dc not in reached and d_of[a] != dc and d_of[b] != dc:
                reached.add(dc)
    unit_classes = {d_of[i] for i in unit_ids}
    required = sorted({d_of[i] for i in reps} - reached - unit_classes)
    reps_by_class: Dict[int, List[int]] = {}
    for i in reps:
        reps_by_class.setdefault(d_of[i], []).append(i)
    logger.info(
        "rank search: %d units, %d orbit representatives, %d required classes",
        len(unit_ids),
        len(reps),
        len(required),
    )

    for extra in range(len(reps) + 1):
        for choice in product(*(reps_by_class[d] for d in required)):
            for extras in combinations(reps, extra):
                picked = set(choice) | set(extras)
                if len(picked) < len(required) + extra:
                    continue
                tried += 1
                if tried > search_budget:
                    return RankSearch(None, [], tried)
                gens = base + [elements[i] for i in sorted(picked)]
                if _generates(ambient, gens, everything):
                    return RankSearch(len(gens), gens, tried)
    return RankSearch(None, [], tried)
