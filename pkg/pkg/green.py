"""
dpwheel - Green's relations

Two independent ways to get the L, R, H and D (= J) classes of a closure:

- by-dom-im: L by equal image, R by equal domain, H by both, D as the
  join of L and R (union-find)
- by-ideals: L, R and J as strongly connected components of the left,
  right and two-sided Cayley graphs (equal principal ideals), H = L ^ R

Partitions are canonical: each class sorted, classes sorted by their
smallest element index.

The second half of the module names the classes the structure theorems
predict, so a computed partition can be compared against them.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Tuple

import networkx as nx
from networkx.utils import UnionFind

from pkg.closure import MonoidClosure
from pkg.errors import InvalidParameterError, NotAMemberError
from pkg.ptrans import PartialInjection
from pkg.report import CheckResult
from pkg.wheel import Classification, JType, classify, j_type, jtype_exists, psi

logger = logging.getLogger(__name__)

MODES = ("by-dom-im", "by-ideals")

Partition = List[Tuple[int, ...]]


def canonical(groups: Iterable[Iterable[int]]) -> Partition:
    return sorted(tuple(sorted(g)) for g in groups)


def fibers(items: Iterable[Tuple[int, Hashable]]) -> Partition:
    buckets: Dict[Hashable, List[int]] = defaultdict(list)
    for i, key in items:
        buckets[key].append(i)
    return canonical(buckets.values())


def meet(a: Partition, b: Partition) -> Partition:
    class_a = class_ids(a)
    class_b = class_ids(b)
    return fibers((i, (class_a[i], class_b[i])) for i in class_a)


def class_ids(partition: Partition) -> Dict[int, int]:
    return {i: c for c, members in enumerate(partition) for i in members}


@dataclass
class GreenStructure:
    l_classes: Partition
    r_classes: Partition
    h_classes: Partition
    d_classes: Partition

    def d_class_of(self) -> Dict[int, int]:
        return class_ids(self.d_classes)

    def partitions(self) -> Dict[str, Partition]:
        return {"L": self.l_classes, "R": self.r_classes, "H": self.h_classes, "D": self.d_classes}


def _scc(size: int, edges: Iterable[Tuple[int, int]]) -> Partition:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(size))
    graph.add_edges_from(edges)
    return canonical(nx.strongly_connected_components(graph))


def green(closure: MonoidClosure, mode: str = "by-dom-im") -> GreenStructure:
    if mode not in MODES:
        raise InvalidParameterError(f"unknown Green mode {mode!r}")
    elements = closure.elements
    size = len(elements)

    if mode == "by-dom-im":
        l_classes = fibers((i, x.image) for i, x in enumerate(elements))
        r_classes = fibers((i, x.domain) for i, x in enumerate(elements))
        h_classes = fibers((i, (x.domain, x.image)) for i, x in enumerate(elements))
        uf = UnionFind(range(size))
        for cls in l_classes + r_classes:
            uf.union(*cls)
        d_classes = canonical(uf.to_sets())
    else:
        right = closure.right_cayley
        left = closure.left_cayley()
        right_edges = [(i, j) for i, row in enumerate(right) for j in row]
        left_edges = [(i, j) for i, row in enumerate(left) for j in row]
        r_classes = _scc(size, right_edges)
        l_classes = _scc(size, left_edges)
        h_classes = meet(l_classes, r_classes)
        d_classes = _scc(size, right_edges + left_edges)

    logger.info("green (%s): %d D-classes over %d elements", mode, len(d_classes), size)
    return GreenStructure(l_classes, r_classes, h_classes, d_classes)


def partition_by(closure: MonoidClosure, key: Callable[[PartialInjection], Hashable]) -> Partition:
    return fibers((i, key(x)) for i, x in enumerate(closure.elements))


def union_key(n: int, alpha: PartialInjection) -> Tuple[str, JType]:
    """Classification, then J-type of alpha (Minus) or of alpha Psi (Plus)"""
    kind = classify(n, alpha)
    if kind is Classification.MINUS:
        return (kind.value, j_type(alpha))
    if kind is Classification.PLUS:
        return (kind.value, j_type(psi(alpha)))
    raise NotAMemberError(f"{alpha} is neither Minus nor Plus")


def theorem_j_label(n: int, alpha: PartialInjection) -> str:
    """Name of the J-class of alpha in DPW_n"""
    k = alpha.rank
    if k == 0:
        return "J_0"
    if k == 1:
        return "J_1"
    kind = classify(n, alpha)
    in_both = 0 in alpha.domain and 0 in alpha.image
    if kind is Classification.MINUS:
        jt = j_type(alpha)
        if k == 3 and jt.parts == (3,) or k == 2 and jt.parts == (2,):
            return f"J'_{k}"
        return f"J-{jt}"
    if kind is Classification.PLUS:
        jt = j_type(psi(alpha))
        if k == 4 and jt.parts == (3,):
            return "J'_4"
        if k == 3 and jt.parts == (1, 1) or k == 2:
            return f"J'_{k}"
        if k == 3 and jt.parts == (2,):
            return "J''_3"
        return f"J+{jt}"
    if k == 3 and in_both:
        return "J''_3"
    return f"J'_{k}"


def expected_labels(n: int, k: int) -> List[str]:
    """Named classes of rank k <= 4 that exist in DPW_n"""
    named = {
        4: ["J'_4"],
        3: ["J'_3", "J''_3"],
        2: ["J'_2"],
        1: ["J_1"],
        0: ["J_0"],
    }[k]
    minus = {4: [(4,), (1, 3), (2, 2), (1, 1, 2), (1, 1, 1, 1)], 3: [(1, 2), (1, 1, 1)], 2: [(1, 1)]}
    plus = {4: [(1, 2), (1, 1, 1)]}
    labels = list(named)
    labels += [f"J-{JType(p)}" for p in minus.get(k, []) if jtype_exists(n, p)]
    labels += [f"J+{JType(p)}" for p in plus.get(k, []) if jtype_exists(n, p)]
    return labels


def _first_split(
    computed: Partition, expected: Partition, closure: MonoidClosure
) -> Optional[PartialInjection]:
    """An element whose computed class differs from its expected class"""
    expected_of = class_ids(expected)
    for cls in computed:
        keys = {expected[expected_of[i]] for i in cls}
        if len(keys) > 1 or cls not in keys:
            return closure.elements[cls[0]]
    return None


def compare_partitions(
    name: str, n: Optional[int], closure: MonoidClosure, computed: Partition, expected: Partition
) -> CheckResult:
    ok = computed == expected
    witness = None if ok else _first_split(computed, expected, closure)
    return CheckResult.of(
        name,
        n,
        ok,
        count=len(computed),
        detail=f"{len(computed)} computed classes, {len(expected)} expected",
        witness=witness,
    )


def check_theorem(
    name: str, n: int, closure: MonoidClosure, structure: GreenStructure
) -> List[CheckResult]:
    """Compare the computed D-classes with the partition a structure theorem predicts"""
    d = structure.d_classes
    if name == "theorem-J-minus":
        return [compare_partitions(name, n, closure, d, partition_by(closure, j_type))]
    if name == "theorem-J-plus":
        return [compare_partitions(name, n, closure, d, partition_by(closure, lambda a: j_type(psi(a))))]
    if name == "theorem-J-union":
        return [compare_partitions(name, n, closure, d, partition_by(closure, lambda a: union_key(n, a)))]
    if name == "theorem-J":
        results = [compare_partitions(name, n, closure, d, partition_by(closure, lambda a: theorem_j_label(n, a)))]
        results.extend(check_inventory(n, closure, structure))
        return results
    raise InvalidParameterError(f"unknown theorem check {name!r}")


def check_inventory(n: int, closure: MonoidClosure, structure: GreenStructure) -> List[CheckResult]:
    """Named classes present at each rank <= 4 are exactly the predicted ones"""
    results = []
    labels_by_rank: Dict[int, set] = defaultdict(set)
    for cls in structure.d_classes:
        alpha = closure.elements[cls[0]]
        if alpha.rank <= 4:
            labels_by_rank[alpha.rank].add(theorem_j_label(n, alpha))
    for k in range(5):
        expected = set(expected_labels(n, k))
        found = labels_by_rank[k]
        detail = f"rank {k}: {', '.join(sorted(found))}"
        witness: Any = None
        if found != expected:
            witness = {"missing": sorted(expected - found), "unexpected": sorted(found - expected)}
        results.append(CheckResult.of(f"theorem-J-inventory-rank-{k}", n, found == expected, len(found), detail, witness))
    return results


def class_table(
    n: int, closure: MonoidClosure, structure: GreenStructure, monoid: str
) -> List[Dict[str, Any]]:
    """One row per D-class: index, size, rank, and its name or J-type"""
    rows = []
    for c, cls in enumerate(structure.d_classes):
        alpha = closure.elements[cls[0]]
        if monoid == "full":
            name = theorem_j_label(n, alpha)
        elif monoid == "union":
            kind, jt = union_key(n, alpha)
            name = f"{kind}{jt}"
        elif monoid == "plus":
            name = str(j_type(psi(alpha)))
        else:
            name = str(j_type(alpha))
        rows.append({"class": c, "size": len(cls), "rank": alpha.rank, "name": name})
    return rows
