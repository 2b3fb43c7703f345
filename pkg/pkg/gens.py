"""
dpwheel - Named generators and generating sets

Rim world (ambient 1..n): g, h, e, e_i, c_j
Full world (ambient 0..n): g0, h0, e0, b_j, iota, z

Generating sets:
- minus: g, h, e, c_1..c_m            (DPW_n^-)
- plus:  g0, h0, e0, b_1..b_m         (DPW_n^+)
- union: g0, h0, e0, iota, b_1..b_m   (DPW_n^- u DPW_n^+)
- full:  g0, h0, e0, iota, z, b_1..b_m (DPW_n); {g0, h0, iota, z} for n = 4
with m = floor(n/2) - 2.
"""

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Optional, Tuple

from pkg.errors import InvalidParameterError
from pkg.isometry import reflection, rotation
from pkg.ptrans import Ambient, PartialInjection, omega, omega0, partial_identity


class Tag(str, Enum):
    G = "G"
    H = "H"
    E = "E"
    E_I = "E_i"
    C = "C"
    G0 = "G0"
    H0 = "H0"
    E0 = "E0"
    B = "B"
    IOTA = "Iota"
    Z = "Z"


PARAMETRIZED = (Tag.E_I, Tag.C, Tag.B)
FULL_WORLD = (Tag.G0, Tag.H0, Tag.E0, Tag.B, Tag.IOTA, Tag.Z)

# rim generator -> its hub-fixing counterpart
TO_FULL_WORLD = {Tag.G: Tag.G0, Tag.H: Tag.H0, Tag.E: Tag.E0, Tag.C: Tag.B}

_LABEL_RE = re.compile(r"^(\w+?)(?:\((\d+)\))?$")


@dataclass(frozen=True)
class GeneratorLabel:
    tag: Tag
    param: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.tag in PARAMETRIZED) != (self.param is not None):
            raise InvalidParameterError(f"bad parameter for generator {self.tag.value}")

    @property
    def full_world(self) -> bool:
        return self.tag in FULL_WORLD

    def to_full_world(self) -> "GeneratorLabel":
        if self.tag not in TO_FULL_WORLD:
            raise InvalidParameterError(f"{self} has no hub-fixing counterpart")
        return GeneratorLabel(TO_FULL_WORLD[self.tag], self.param)

    @classmethod
    def parse(cls, text: str) -> "GeneratorLabel":
        match = _LABEL_RE.match(text.strip())
        if not match:
            raise InvalidParameterError(f"cannot parse generator label {text!r}")
        name, param = match.groups()
        try:
            tag = Tag(name)
        except ValueError:
            raise InvalidParameterError(f"unknown generator {name!r}") from None
        return cls(tag, int(param) if param is not None else None)

    def __str__(self) -> str:
        if self.param is None:
            return self.tag.value
        return f"{self.tag.value}({self.param})"


G = GeneratorLabel(Tag.G)
H = GeneratorLabel(Tag.H)
E = GeneratorLabel(Tag.E)
G0 = GeneratorLabel(Tag.G0)
H0 = GeneratorLabel(Tag.H0)
E0 = GeneratorLabel(Tag.E0)
IOTA = GeneratorLabel(Tag.IOTA)
Z = GeneratorLabel(Tag.Z)


def C(j: int) -> GeneratorLabel:
    return GeneratorLabel(Tag.C, j)


def B(j: int) -> GeneratorLabel:
    return GeneratorLabel(Tag.B, j)


def E_i(i: int) -> GeneratorLabel:
    return GeneratorLabel(Tag.E_I, i)


def c_range(n: int) -> range:
    """Valid j for c_j and b_j: 1..floor(n/2)-2"""
    return range(1, n // 2 - 1)


def _c_mapping(n: int, j: int) -> Dict[int, int]:
    mapping = {x: x for x in range(1, j + 2)}
    mapping.update({x: (j + 3) + (n - 1) - x for x in range(j + 3, n)})
    return mapping


def _with_hub(alpha: PartialInjection) -> PartialInjection:
    n = len(alpha.ambient)
    return PartialInjection(omega0(n), ((0, 0),) + alpha.pairs)


@lru_cache(maxsize=None)
def build(n: int, label: GeneratorLabel) -> PartialInjection:
    if n < 4:
        raise InvalidParameterError(f"generators are defined for n >= 4, got {n}")
    tag, p = label.tag, label.param
    if tag in (Tag.C, Tag.B) and p not in c_range(n):
        raise InvalidParameterError(f"{label} needs 1 <= j <= {n // 2 - 2} for n = {n}")
    if tag is Tag.E_I and not 1 <= p <= n:
        raise InvalidParameterError(f"{label} needs 1 <= i <= {n}")

    if tag is Tag.G:
        return rotation(n, 1)
    if tag is Tag.H:
        return reflection(n, 0)
    if tag is Tag.E:
        return partial_identity(omega(n), range(1, n))
    if tag is Tag.E_I:
        return partial_identity(omega(n), (x for x in range(1, n + 1) if x != p))
    if tag is Tag.C:
        return PartialInjection.from_mapping(omega(n), _c_mapping(n, p))
    if tag is Tag.IOTA:
        return partial_identity(omega0(n), range(1, n + 1))
    if tag is Tag.Z:
        return PartialInjection.from_mapping(omega0(n), {0: 1, 1: 0, 2: 2, n: n})
    rim_tag = {Tag.G0: Tag.G, Tag.H0: Tag.H, Tag.E0: Tag.E, Tag.B: Tag.C}[tag]
    return _with_hub(build(n, GeneratorLabel(rim_tag, p)))


@dataclass(frozen=True)
class LabeledSet:
    """A named, ordered generating set"""

    name: str
    n: int
    labels: Tuple[GeneratorLabel, ...]

    @property
    def elements(self) -> Tuple[PartialInjection, ...]:
        return tuple(build(self.n, label) for label in self.labels)

    @property
    def ambient(self) -> Ambient:
        return omega0(self.n) if self.labels and self.labels[0].full_world else omega(self.n)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(zip(self.labels, self.elements))


def _check_n(n: int) -> None:
    if n < 4:
        raise InvalidParameterError(f"generating sets are defined for n >= 4, got {n}")


def genset_minus(n: int) -> LabeledSet:
    _check_n(n)
    return LabeledSet("minus", n, (G, H, E) + tuple(C(j) for j in c_range(n)))


def genset_plus(n: int) -> LabeledSet:
    _check_n(n)
    return LabeledSet("plus", n, (G0, H0, E0) + tuple(B(j) for j in c_range(n)))


def genset_union(n: int) -> LabeledSet:
    _check_n(n)
    return LabeledSet("union", n, (G0, H0, E0, IOTA) + tuple(B(j) for j in c_range(n)))


def genset_full(n: int) -> LabeledSet:
    _check_n(n)
    if n == 4:
        return LabeledSet("full", n, (G0, H0, IOTA, Z))
    return LabeledSet("full", n, (G0, H0, E0, IOTA, Z) + tuple(B(j) for j in c_range(n)))


def genset_dihedral(n: int) -> LabeledSet:
    _check_n(n)
    return LabeledSet("dihedral", n, (G, H))


def genset_di(n: int) -> LabeledSet:
    _check_n(n)
    return LabeledSet("di", n, (G, H, E))


GENERATING_SETS = {
    "minus": genset_minus,
    "plus": genset_plus,
    "union": genset_union,
    "full": genset_full,
    "dihedral": genset_dihedral,
    "di": genset_di,
}


def genset(n: int, name: str) -> LabeledSet:
    if name not in GENERATING_SETS:
        raise InvalidParameterError(f"unknown generating set {name!r}; choose from {', '.join(GENERATING_SETS)}")
    return GENERATING_SETS[name](n)
