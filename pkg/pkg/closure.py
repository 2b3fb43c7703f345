"""
dpwheel - Monoid closure

Breadth-first search over the right Cayley graph, starting from the
identity of the ambient set. Elements are indexed in discovery order;
since the frontier is processed in index order and generators in listed
order, the first word reaching an element is its shortlex-least word.
"""

import logging
import os
from collections import deque
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from pkg.errors import AmbientMismatchError, CapExceededError, InvalidParameterError
from pkg.gens import LabeledSet
from pkg.ptrans import Ambient, PartialInjection, compose, identity

logger = logging.getLogger(__name__)

DEFAULT_ELEMENT_CAP = 50_000_000
ELEMENT_CAP_ENV = "DPW_ELEMENT_CAP"


def default_element_cap() -> int:
    value = os.environ.get(ELEMENT_CAP_ENV)
    if value:
        try:
            return int(value)
        except ValueError:
            raise InvalidParameterError(f"{ELEMENT_CAP_ENV} must be an integer, got {value!r}") from None
    return DEFAULT_ELEMENT_CAP


class MonoidClosure:
    """The submonoid generated by a labelled list of partial injections"""

    def __init__(
        self,
        ambient: Ambient,
        labels: Sequence[str],
        generators: Sequence[PartialInjection],
        elements: List[PartialInjection],
        parent: List[int],
        last: List[int],
        right_cayley: List[Tuple[int, ...]],
        index: Optional[Dict[PartialInjection, int]] = None,
    ):
        self.ambient = ambient
        self.labels = tuple(labels)
        self.generators = tuple(generators)
        self.elements = elements
        self.index: Dict[PartialInjection, int] = index if index is not None else {x: i for i, x in enumerate(elements)}
        self._parent = parent
        self._last = last
        self.right_cayley = right_cayley

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def element_set(self) -> FrozenSet[PartialInjection]:
        return frozenset(self.elements)

    def word_indices(self, i: int) -> Tuple[int, ...]:
        out = []
        while i != 0:
            out.append(self._last[i])
            i = self._parent[i]
        return tuple(reversed(out))

    def word(self, x: Union[int, PartialInjection]) -> Tuple[str, ...]:
        i = x if isinstance(x, int) else self.index[x]
        return tuple(self.labels[g] for g in self.word_indices(i))

    @cached_property
    def word_lengths(self) -> List[int]:
        lengths = [0] * len(self.elements)
        for i in range(1, len(self.elements)):
            lengths[i] = lengths[self._parent[i]] + 1
        return lengths

    @property
    def max_word_length(self) -> int:
        return max(self.word_lengths) if self.elements else 0

    def left_cayley(self) -> List[Tuple[int, ...]]:
        """generator x element -> element index, derived on demand"""
        return [
            tuple(self.index[compose(g, x)] for g in self.generators)
            for x in self.elements
        ]

    def summary(self) -> Dict[str, object]:
        return {
            "generators": list(self.labels),
            "size": len(self),
            "max_word_length": self.max_word_length,
        }


def generate(
    ambient: Ambient,
    gens: Union[LabeledSet, Sequence[PartialInjection]],
    cap: Optional[int] = None,
    labels: Optional[Sequence[str]] = None,
) -> MonoidClosure:
    if isinstance(gens, LabeledSet):
        labels = [str(label) for label in gens.labels]
        generators: Tuple[PartialInjection, ...] = gens.elements
    else:
        generators = tuple(gens)
        if labels is None:
            labels = [f"x{i}" for i in range(len(generators))]
    if not generators:
        raise InvalidParameterError("need at least one generator")
    if len(labels) != len(generators):
        raise InvalidParameterError("one label per generator")
    for g in generators:
        if g.ambient != ambient:
            raise AmbientMismatchError(f"generator {g} is not on the requested ambient")
    cap = default_element_cap() if cap is None else cap

    one = identity(ambient)
    elements = [one]
    index = {one: 0}
    parent = [0]
    last = [-1]
    right: List[Tuple[int, ...]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        x = elements[i]
        row = []
        for gi, g in enumerate(generators):
            y = compose(x, g)
            j = index.get(y)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CapExceededError("monoid closure", cap)
                elements.append(y)
                index[y] = j
                parent.append(i)
                last.append(gi)
                queue.append(j)
            row.append(j)
        right.append(tuple(row))

    closure = MonoidClosure(ambient, labels, generators, elements, parent, last, right, index)
    logger.info(
        "closure of %s: %d elements, max word length %d",
        ",".join(labels),
        len(closure),
        closure.max_word_length,
    )
    return closure


def generate_from(
    ambient: Ambient,
    elements: Iterable[PartialInjection],
    cap: Optional[int] = None,
) -> MonoidClosure:
    """Closure of an arbitrary element set; the identity alone if the set is empty"""
    elements = list(elements)
    if not elements:
        elements = [identity(ambient)]
    return generate(ambient, elements, cap=cap)

