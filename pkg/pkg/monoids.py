"""
dpwheel - Enumerated wheel monoids

WheelMonoids(n) enumerates DPW_n once and exposes its pieces as element
sets (the brute-force side of every comparison) together with the
closures of the named generating sets (the constructive side).

Targets:
- minus: DPW_n^- on the rim 1..n
- plus:  DPW_n^+ on 0..n
- union: DPW_n^- (as hubless maps on 0..n) together with DPW_n^+
- full:  DPW_n
- di:    DI_n on the rim
"""

import logging
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional

from pkg.closure import MonoidClosure, generate
from pkg.errors import InvalidParameterError
from pkg.gens import genset
from pkg.graphs import Graph, wheel
from pkg.isometry import DEFAULT_VERTEX_CAP, di_elements, enumerate_dp
from pkg.ptrans import PartialInjection
from pkg.wheel import Classification, classify, project

logger = logging.getLogger(__name__)

TARGETS = ("minus", "plus", "union", "full", "di")


class WheelMonoids:
    """Lazily enumerated DPW_n and its submonoids"""

    def __init__(
        self,
        n: int,
        vertex_cap: int = DEFAULT_VERTEX_CAP,
        element_cap: Optional[int] = None,
        workers: int = 1,
    ):
        self.n = n
        self.vertex_cap = vertex_cap
        self.element_cap = element_cap
        self.workers = workers
        self._closures: Dict[str, MonoidClosure] = {}

    @cached_property
    def graph(self) -> Graph:
        return wheel(self.n)

    @cached_property
    def dpw(self) -> List[PartialInjection]:
        return enumerate_dp(self.graph, cap=self.vertex_cap, workers=self.workers)

    @cached_property
    def classes(self) -> Dict[PartialInjection, Classification]:
        return {alpha: classify(self.n, alpha) for alpha in self.dpw}

    def of_class(self, kind: Classification) -> List[PartialInjection]:
        return [alpha for alpha in self.dpw if self.classes[alpha] is kind]

    @cached_property
    def minus(self) -> FrozenSet[PartialInjection]:
        return frozenset(project(alpha) for alpha in self.of_class(Classification.MINUS))

    @cached_property
    def plus(self) -> FrozenSet[PartialInjection]:
        return frozenset(self.of_class(Classification.PLUS))

    @cached_property
    def outside(self) -> FrozenSet[PartialInjection]:
        return frozenset(self.of_class(Classification.OUTSIDE))

    @cached_property
    def union(self) -> FrozenSet[PartialInjection]:
        return frozenset(self.of_class(Classification.MINUS)) | self.plus

    @cached_property
    def full(self) -> FrozenSet[PartialInjection]:
        return frozenset(self.dpw)

    @cached_property
    def di(self) -> FrozenSet[PartialInjection]:
        return di_elements(self.n)

    def target(self, name: str) -> FrozenSet[PartialInjection]:
        if name not in TARGETS:
            raise InvalidParameterError(f"unknown monoid {name!r}; choose from {', '.join(TARGETS)}")
        return getattr(self, name)

    def closure(self, name: str) -> MonoidClosure:
        """Closure of the generating set that is claimed to give the target of the same name"""
        if name not in self._closures:
            gens = genset(self.n, name)
            self._closures[name] = generate(gens.ambient, gens, cap=self.element_cap)
        return self._closures[name]
