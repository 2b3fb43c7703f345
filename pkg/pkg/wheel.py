"""
dpwheel - Wheel structure theory

Arcs and maximal arcs of rim subsets, the maximal-arc membership test for
DPW_n^-, arc orientation, J-types, the Minus/Plus/Outside split of DPW_n
and the isomorphism Psi between DPW_n^+ and DPW_n^-.

Two ambient conventions coexist:
- the rim world 1..n, where DPW_n^- and DI_n live as submonoids of I_n
- the full world 0..n, where DPW_n lives
embed/project are the only conversions between them.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from pkg.errors import AmbientMismatchError, InvalidParameterError, NotAMemberError
from pkg.graphs import rim
from pkg.isometry import dihedral_witness, reflection, rotation
from pkg.ptrans import PartialInjection, omega, omega0, restrict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arc:
    """The cyclic interval A_{i,j} = {i, i+1, ..., j} of the rim"""

    n: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if not (1 <= self.i <= self.n and 1 <= self.j <= self.n):
            raise InvalidParameterError(f"arc endpoints must lie in 1..{self.n}")

    @property
    def size(self) -> int:
        return (self.j - self.i) % self.n + 1

    @property
    def members(self) -> Tuple[int, ...]:
        """Members in cyclic order starting at i"""
        return tuple(rim(self.n, self.i + t) for t in range(self.size))

    @property
    def points(self) -> FrozenSet[int]:
        return frozenset(self.members)

    @property
    def min(self) -> int:
        return min(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.points

    def __str__(self) -> str:
        return f"A_{{{self.i},{self.j}}}"


@dataclass(frozen=True, order=True)
class JType:
    """Sorted sizes of the maximal arcs of a domain"""

    parts: Tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


class Classification(str, Enum):
    MINUS = "minus"
    PLUS = "plus"
    OUTSIDE = "outside"


class Orientation(str, Enum):
    PRESERVES = "preserves"
    REVERSES = "reverses"


def maximal_arcs(n: int, X: Iterable[int]) -> List[Arc]:
    points = set(X)
    if not points.issubset(range(1, n + 1)):
        raise InvalidParameterError(f"{sorted(points)} is not a subset of 1..{n}")
    if not points:
        return []
    if len(points) == n:
        return [Arc(n, 1, n)]
    arcs = []
    for start in points:
        if rim(n, start - 1) in points:
            continue
        end = start
        while rim(n, end + 1) in points:
            end = rim(n, end + 1)
        arcs.append(Arc(n, start, end))
    return sorted(arcs, key=lambda a: a.min)


def embed(alpha: PartialInjection) -> PartialInjection:
    """Rim element -> the same hubless map on 0..n"""
    n = len(alpha.ambient)
    if alpha.ambient != omega(n):
        raise AmbientMismatchError("embed expects an element on 1..n")
    return PartialInjection(omega0(n), alpha.pairs)


def project(alpha: PartialInjection) -> PartialInjection:
    """Hubless element on 0..n -> the same map on 1..n"""
    n = _rim_size(alpha)
    if alpha.ambient != omega0(n):
        raise AmbientMismatchError("project expects an element on 0..n")
    if 0 in alpha.domain or 0 in alpha.image:
        raise NotAMemberError(f"{alpha} involves the hub and cannot be projected to the rim")
    return PartialInjection(omega(n), alpha.pairs)


def _rim_size(alpha: PartialInjection) -> int:
    ambient = alpha.ambient
    return len(ambient) - 1 if ambient and ambient[0] == 0 else len(ambient)


def _as_rim(n: int, alpha: PartialInjection) -> PartialInjection:
    if alpha.ambient == omega(n):
        return alpha
    if alpha.ambient == omega0(n):
        return project(alpha)
    raise AmbientMismatchError(f"element does not live on 1..{n} or 0..{n}")


def arc_image(n: int, alpha: PartialInjection, arc: Arc) -> FrozenSet[int]:
    m = alpha.mapping
    return frozenset(m[x] for x in arc.members)


def char_member_minus(n: int, alpha: PartialInjection) -> bool:
    """Maximal arcs of Dom map onto maximal arcs of Im, each by a dihedral restriction"""
    alpha = _as_rim(n, alpha)
    image_arcs = {a.points for a in maximal_arcs(n, alpha.image)}
    for arc in maximal_arcs(n, alpha.domain):
        if arc_image(n, alpha, arc) not in image_arcs:
            return False
        if dihedral_witness(n, restrict(alpha, arc.members)) is None:
            return False
    return True


def orientation(n: int, alpha: PartialInjection, arc: Arc) -> Orientation:
    alpha = _as_rim(n, alpha)
    if not arc.points.issubset(alpha.domain):
        raise NotAMemberError(f"{arc} is not inside the domain of {alpha}")
    if not char_member_minus(n, alpha):
        raise NotAMemberError(f"{alpha} is not in DPW_{n}^-")
    if arc.size == 1:
        return Orientation.PRESERVES
    m = alpha.mapping
    start = arc.i
    forward = rotation(n, m[start] - start).mapping
    if all(forward[x] == m[x] for x in arc.members):
        return Orientation.PRESERVES
    backward = reflection(n, m[start] + start - 1).mapping
    if all(backward[x] == m[x] for x in arc.members):
        return Orientation.REVERSES
    raise NotAMemberError(f"{alpha} is not a dihedral restriction on {arc}")


def j_type(alpha: PartialInjection) -> JType:
    n = _rim_size(alpha)
    rim_alpha = _as_rim(n, alpha)
    return JType(tuple(sorted(a.size for a in maximal_arcs(n, rim_alpha.domain))))


def jtype_exists(n: int, parts: Sequence[int]) -> bool:
    """Whether DPW_n^- has an element of this J-type"""
    if tuple(parts) == (n,):
        return True
    return all(p >= 1 for p in parts) and sum(parts) + len(parts) <= n


def classify(n: int, alpha: PartialInjection) -> Classification:
    if alpha.ambient != omega0(n):
        raise AmbientMismatchError(f"classification needs an element on 0..{n}")
    if 0 not in alpha.domain and 0 not in alpha.image:
        return Classification.MINUS
    if alpha.mapping.get(0) == 0:
        return Classification.PLUS
    return Classification.OUTSIDE


def psi(alpha: PartialInjection) -> PartialInjection:
    """DPW_n^+ -> DPW_n^-: drop the 0->0 pair"""
    n = _rim_size(alpha)
    if classify(n, alpha) is not Classification.PLUS:
        raise NotAMemberError(f"psi is defined on Plus elements only, got {alpha}")
    return PartialInjection(omega(n), alpha.pairs[1:])


def psi_inv(beta: PartialInjection) -> PartialInjection:
    """DPW_n^- -> DPW_n^+: adjoin the 0->0 pair"""
    n = _rim_size(beta)
    beta = _as_rim(n, beta)
    if not char_member_minus(n, beta):
        raise NotAMemberError(f"psi_inv is defined on Minus elements only, got {beta}")
    return PartialInjection(omega0(n), ((0, 0),) + beta.pairs)


def split_lemma_check(n: int, alpha: PartialInjection) -> List[str]:
    """Names of the hub-placement properties alpha violates"""
    if alpha.ambient != omega0(n):
        raise AmbientMismatchError(f"split check needs an element on 0..{n}")
    k = alpha.rank
    in_dom = 0 in alpha.domain
    in_im = 0 in alpha.image
    m = alpha.mapping
    violated = []
    if in_dom and m[0] != 0 and k > 4:
        violated.append("property-1")
    if in_im and dict((y, x) for x, y in alpha.pairs)[0] != 0 and k > 4:
        violated.append("property-2")
    if k >= 4 and in_dom != in_im:
        violated.append("property-3")
    if k >= 5 and (in_dom or in_im) and not (in_dom and in_im and m[0] == 0):
        violated.append("property-4")
    return violated


def from_arc_maps(n: int, pieces: Sequence[Tuple[Arc, Arc, Orientation]]) -> PartialInjection:
    """Rim element sending each source arc onto its target arc, forwards or backwards"""
    mapping = {}
    for source, target, how in pieces:
        if source.size != target.size:
            raise InvalidParameterError(f"{source} and {target} differ in size")
        images = target.members if how is Orientation.PRESERVES else tuple(reversed(target.members))
        mapping.update(zip(source.members, images))
    return PartialInjection.from_mapping(omega(n), mapping)
