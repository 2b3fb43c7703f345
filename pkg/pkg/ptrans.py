"""
dpwheel - Partial Injective Transformations

The value type every monoid in this package is made of. A PartialInjection
is an immutable, canonically ordered list of (domain point, image point)
pairs over an explicit ambient vertex set.

Composition is left to right: x(ab) = (xa)b.
"""

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Tuple, Union

from pkg.errors import AmbientMismatchError, InvalidElementError

Ambient = Tuple[int, ...]
Pairs = Tuple[Tuple[int, int], ...]


def omega(n: int) -> Ambient:
    """The rim vertex set {1..n}"""
    return tuple(range(1, n + 1))


def omega0(n: int) -> Ambient:
    """The wheel vertex set {0..n}"""
    return tuple(range(0, n + 1))


@dataclass(frozen=True)
class PartialInjection:
    """A partial injective map on a finite ambient set"""

    ambient: Ambient
    pairs: Pairs

    def __post_init__(self) -> None:
        members = set(self.ambient)
        previous = None
        images = set()
        for d, i in self.pairs:
            if d not in members or i not in members:
                raise InvalidElementError(f"pair ({d}, {i}) leaves the ambient set")
            if previous is not None and d <= previous:
                raise InvalidElementError("pairs must be sorted by distinct domain points")
            if i in images:
                raise InvalidElementError(f"image point {i} is hit twice")
            previous = d
            images.add(i)

    @classmethod
    def from_mapping(cls, ambient: Iterable[int], mapping: Mapping[int, int]) -> "PartialInjection":
        return cls(tuple(sorted(ambient)), tuple(sorted(mapping.items())))

    @cached_property
    def mapping(self) -> Dict[int, int]:
        return dict(self.pairs)

    @cached_property
    def domain(self) -> FrozenSet[int]:
        return frozenset(d for d, _ in self.pairs)

    @cached_property
    def image(self) -> FrozenSet[int]:
        return frozenset(i for _, i in self.pairs)

    @property
    def rank(self) -> int:
        return len(self.pairs)

    def __call__(self, x: int) -> int:
        try:
            return self.mapping[x]
        except KeyError:
            raise InvalidElementError(f"{x} is not in the domain") from None

    def __mul__(self, other: "PartialInjection") -> "PartialInjection":
        return compose(self, other)

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        body = ", ".join(f"{d}->{i}" for d, i in self.pairs)
        return f"[{body}]"

    def sort_key(self) -> Tuple[Ambient, Pairs]:
        return (self.ambient, self.pairs)


def compose(a: PartialInjection, b: PartialInjection) -> PartialInjection:
    """Left-to-right product: first a, then b"""
    if a.ambient != b.ambient:
        raise AmbientMismatchError("cannot compose elements on different ambients")
    bm = b.mapping
    return PartialInjection(a.ambient, tuple((x, bm[y]) for x, y in a.pairs if y in bm))


def compose_all(ambient: Ambient, factors: Iterable[PartialInjection]) -> PartialInjection:
    result = identity(ambient)
    for f in factors:
        result = compose(result, f)
    return result


def inverse(a: PartialInjection) -> PartialInjection:
    return PartialInjection(a.ambient, tuple(sorted((y, x) for x, y in a.pairs)))


def restrict(a: PartialInjection, X: Iterable[int]) -> PartialInjection:
    keep = set(X)
    if not keep.issubset(a.ambient):
        raise InvalidElementError(f"restriction set {sorted(keep)} is not inside the ambient")
    return PartialInjection(a.ambient, tuple(p for p in a.pairs if p[0] in keep))


def partial_identity(ambient: Ambient, X: Iterable[int]) -> PartialInjection:
    points = sorted(set(X))
    if not set(points).issubset(ambient):
        raise InvalidElementError(f"{points} is not inside the ambient")
    return PartialInjection(ambient, tuple((x, x) for x in points))


def identity(ambient: Ambient) -> PartialInjection:
    return PartialInjection(ambient, tuple((x, x) for x in ambient))


# JSON encoding: {"ambient": n | "a..b" | [v, ...], "map": [[d, i], ...]}

def _is_point(v: Any) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def encode_ambient(ambient: Ambient) -> Union[int, str, List[int]]:
    if ambient and ambient == tuple(range(ambient[0], ambient[-1] + 1)):
        if ambient[0] == 1:
            return len(ambient)
        return f"{ambient[0]}..{ambient[-1]}"
    return list(ambient)


def decode_ambient(value: Any) -> Ambient:
    if isinstance(value, bool):
        raise InvalidElementError(f"bad ambient: {value!r}")
    if isinstance(value, int):
        if value < 0:
            raise InvalidElementError(f"bad ambient size: {value}")
        return omega(value)
    if isinstance(value, str):
        lo, sep, hi = value.partition("..")
        try:
            if not sep:
                return omega(int(value))
            return tuple(range(int(lo), int(hi) + 1))
        except ValueError:
            raise InvalidElementError(f"bad ambient: {value!r}") from None
    if isinstance(value, list):
        if not all(_is_point(v) for v in value):
            raise InvalidElementError(f"bad ambient: {value!r}")
        return tuple(sorted(value))
    raise InvalidElementError(f"bad ambient: {value!r}")


def to_dict(a: PartialInjection) -> Dict[str, Any]:
    return {"ambient": encode_ambient(a.ambient), "map": [list(p) for p in a.pairs]}


def from_dict(data: Mapping[str, Any], default_ambient: Union[Ambient, None] = None) -> PartialInjection:
    if "map" not in data:
        raise InvalidElementError("element JSON needs a 'map' field")
    if "ambient" in data:
        ambient = decode_ambient(data["ambient"])
    elif default_ambient is not None:
        ambient = default_ambient
    else:
        raise InvalidElementError("element JSON needs an 'ambient' field")
    try:
        pairs = [(d, i) for d, i in data["map"]]
    except (TypeError, ValueError):
        raise InvalidElementError("'map' must be a list of [domain, image] pairs") from None
    if not all(_is_point(d) and _is_point(i) for d, i in pairs):
        raise InvalidElementError("map points must be integers")
    pairs.sort()
    return PartialInjection(ambient, tuple(pairs))


def to_json(a: PartialInjection) -> str:
    return json.dumps(to_dict(a), separators=(",", ":"))


def from_json(text: str, default_ambient: Union[Ambient, None] = None) -> PartialInjection:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidElementError(f"element is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise InvalidElementError("element JSON must be an object")
    return from_dict(data, default_ambient)
