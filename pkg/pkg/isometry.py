"""
dpwheel - Partial isometries and the dihedral inverse monoid

- is_partial_isometry: the distance-preserving predicate on any Graph
- enumerate_dp: brute-force DP(G) by distance-pruned backtracking
- dihedral / is_in_DI: the dihedral group D_2n on the rim and membership
  of a partial injection in DI_n (restrictions of dihedral elements)
- helpers to iterate or sample the full symmetric inverse monoid I(V)
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from pkg.errors import AmbientMismatchError, CapExceededError, InvalidParameterError
from pkg.graphs import Graph
from pkg.ptrans import Ambient, Pairs, PartialInjection, compose, identity, omega

logger = logging.getLogger(__name__)

DEFAULT_VERTEX_CAP = 10


def is_partial_isometry(G: Graph, alpha: PartialInjection) -> bool:
    if alpha.ambient != G.vertices:
        raise AmbientMismatchError(f"element ambient does not match the vertices of {G.name}")
    table = G.distance_table
    pairs = alpha.pairs
    for (x, xa), (y, ya) in combinations(pairs, 2):
        if table[x][y] != table[xa][ya]:
            return False
    return True


def is_line_isometry(alpha: PartialInjection) -> bool:
    """|x alpha - y alpha| == |x - y| for all domain points x, y"""
    return all(abs(xa - ya) == abs(x - y) for (x, xa), (y, ya) in combinations(alpha.pairs, 2))


def _extend(
    vertices: Sequence[int],
    table: List[List[int]],
    start: int,
    assigned: List[Tuple[int, int]],
    used: set,
    out: List[Pairs],
) -> None:
    if start == len(vertices):
        out.append(tuple(assigned))
        return
    v = vertices[start]
    _extend(vertices, table, start + 1, assigned, used, out)
    row_v = table[v]
    for w in vertices:
        if w in used:
            continue
        row_w = table[w]
        if all(row_v[x] == row_w[y] for x, y in assigned):
            assigned.append((v, w))
            used.add(w)
            _extend(vertices, table, start + 1, assigned, used, out)
            assigned.pop()
            used.discard(w)


def _enumerate_branch(
    vertices: Tuple[int, ...], table: List[List[int]], first: Optional[int]
) -> List[Pairs]:
    """All isometries whose first vertex is skipped (first=None) or sent to `first`"""
    out: List[Pairs] = []
    if first is None:
        _extend(vertices, table, 1, [], set(), out)
    else:
        _extend(vertices, table, 1, [(vertices[0], first)], {first}, out)
    return out


def enumerate_dp(G: Graph, cap: int = DEFAULT_VERTEX_CAP, workers: int = 1) -> List[PartialInjection]:
    """Every partial isometry of G, sorted by canonical pairs"""
    if G.vertex_count > cap:
        raise CapExceededError(f"{G.name} has {G.vertex_count} vertices and", cap)

    vertices = G.vertices
    table = G.distance_table
    branches: List[Optional[int]] = [None, *vertices]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            width = len(branches)
            chunks = list(
                pool.map(_enumerate_branch, [vertices] * width, [table] * width, branches)
            )
    else:
        chunks = [_enumerate_branch(vertices, table, b) for b in branches]

    found = sorted(p for chunk in chunks for p in chunk)
    logger.info("enumerated %d partial isometries of %s", len(found), G.name)
    return [PartialInjection(vertices, p) for p in found]


def rotation(n: int, k: int) -> PartialInjection:
    """g^k: i -> i+k for i <= n-k, else i+k-n"""
    k %= n
    return PartialInjection(omega(n), tuple((i, i + k if i <= n - k else i + k - n) for i in range(1, n + 1)))


def reflection(n: int, k: int) -> PartialInjection:
    """hg^k: i -> k-i+1 for i <= k, else n+k-i+1"""
    k %= n
    pairs = tuple((i, k - i + 1 if i <= k else n + k - i + 1) for i in range(1, n + 1))
    return PartialInjection(omega(n), pairs)


class DihedralWitness(NamedTuple):
    reflection: bool
    k: int
    element: PartialInjection

    @property
    def label(self) -> str:
        return f"hg^{self.k}" if self.reflection else f"g^{self.k}"


@dataclass(frozen=True)
class DihedralGroup:
    """D_2n acting on the rim, listed as g^0..g^{n-1}, hg^0..hg^{n-1}"""

    n: int
    elements: Tuple[PartialInjection, ...]

    def witness(self, index: int) -> DihedralWitness:
        return DihedralWitness(index >= self.n, index % self.n, self.elements[index])

    def relations_hold(self) -> bool:
        n = self.n
        g, h = self.elements[1], self.elements[n]
        one = identity(omega(n))
        g_power = one
        for _ in range(n):
            g_power = compose(g_power, g)
        g_last = self.elements[n - 1]
        return (
            len(set(self.elements)) == 2 * n
            and g_power == one
            and compose(h, h) == one
            and compose(h, g) == compose(g_last, h)
            and all(compose(a, b) in self.elements for a in self.elements for b in self.elements)
        )


@lru_cache(maxsize=None)
def dihedral(n: int) -> DihedralGroup:
    if n < 3:
        raise InvalidParameterError(f"dihedral groups need n >= 3, got {n}")
    elements = tuple(rotation(n, k) for k in range(n)) + tuple(reflection(n, k) for k in range(n))
    return DihedralGroup(n, elements)


def dihedral_witness(n: int, alpha: PartialInjection) -> Optional[DihedralWitness]:
    """First dihedral element (in scan order) that alpha is a restriction of"""
    if alpha.ambient != omega(n):
        raise AmbientMismatchError(f"DI_{n} membership needs an element on 1..{n}")
    group = dihedral(n)
    for index, sigma in enumerate(group.elements):
        sm = sigma.mapping
        if all(sm[x] == y for x, y in alpha.pairs):
            return group.witness(index)
    return None


def is_in_DI(n: int, alpha: PartialInjection) -> bool:
    return dihedral_witness(n, alpha) is not None


def partial_injections(ambient: Ambient) -> Iterator[PartialInjection]:
    """All of I(ambient), by rank, then domain, then image order"""
    for k in range(len(ambient) + 1):
        for dom in combinations(ambient, k):
            for img in permutations(ambient, k):
                yield PartialInjection(ambient, tuple(zip(dom, img)))


def count_partial_injections(m: int) -> int:
    return sum(comb(m, k) ** 2 * factorial(k) for k in range(m + 1))


def sample_partial_injection(ambient: Ambient, rng: random.Random) -> PartialInjection:
    """Uniform sample from I(ambient)"""
    m = len(ambient)
    weights = [comb(m, k) ** 2 * factorial(k) for k in range(m + 1)]
    k = rng.choices(range(m + 1), weights=weights)[0]
    dom = sorted(rng.sample(ambient, k))
    img = rng.sample(ambient, k)
    return PartialInjection(ambient, tuple(zip(dom, img)))


def di_elements(n: int) -> FrozenSet[PartialInjection]:
    """DI_n: every restriction of every dihedral element"""
    group = dihedral(n)
    found = set()
    for k in range(n + 1):
        for dom in combinations(range(1, n + 1), k):
            for sigma in group.elements:
                sm = sigma.mapping
                found.add(PartialInjection(omega(n), tuple((x, sm[x]) for x in dom)))
    return frozenset(found)
