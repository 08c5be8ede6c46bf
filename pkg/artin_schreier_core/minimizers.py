# coding: utf-8

# Copyright 2021 artin-schreier-core contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Minimizer pairs, the maximal minimizer and the minimizer height of a coin set.

A pair (sigma, I) is a minimizer when every target q*l - sigma(l) attains the
weight lower bound. Minimizers are unions of disjoint cyclic minimizers, so
the maximal one is read off the cycles of the tightness graph on {1..nu}.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .changemaking import ChangeMakingTable, CoinSet
from .computation_exception import ComputationException

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinimizerPair:
    """A permutation sigma of a finite support.

    Attributes:
        support (tuple): Sorted support.
        permutation (tuple): Pairs (l, sigma(l)) sorted by l.

    Raises:
        ValueError: permutation is not a bijection of support.
    """
    support: Tuple[int, ...]
    permutation: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        support = tuple(sorted(set(self.support)))
        mapping = dict(self.permutation)
        if sorted(mapping) != list(support) or sorted(mapping.values()) != list(support):
            raise ValueError('permutation must be a bijection of the support onto itself')
        object.__setattr__(self, 'support', support)
        object.__setattr__(self, 'permutation', tuple(sorted(mapping.items())))

    @classmethod
    def from_mapping(cls, mapping: Dict[int, int]) -> 'MinimizerPair':
        return cls(support=tuple(mapping), permutation=tuple(mapping.items()))

    @classmethod
    def from_cycle(cls, cycle: Tuple[int, ...]) -> 'MinimizerPair':
        """The cyclic permutation l_0 -> l_1 -> ... -> l_0."""
        return cls.from_mapping({v: cycle[(t + 1) % len(cycle)] for t, v in enumerate(cycle)})

    @classmethod
    def identity(cls, support: Tuple[int, ...]) -> 'MinimizerPair':
        return cls.from_mapping({v: v for v in support})

    def sigma(self, ell: int) -> int:
        return dict(self.permutation)[ell]

    def to_dict(self) -> dict:
        return {'support': list(self.support), 'permutation': {str(k): v for k, v in self.permutation}}

    @classmethod
    def from_dict(cls, _dict: dict) -> 'MinimizerPair':
        return cls(support=tuple(_dict['support']),
                   permutation=tuple((int(k), v) for k, v in _dict['permutation'].items()))


@dataclass(frozen=True)
class TightnessGraph:
    """Directed graph on {1..nu} with an edge l -> l' iff q*l - l' attains the weight bound.

    Attributes:
        nu (int): Vertex count.
        edges (tuple): Sorted pairs (l, l').
    """
    nu: int
    edges: Tuple[Tuple[int, int], ...]

    def successor(self) -> Dict[int, int]:
        return dict(self.edges)

    def to_dict(self) -> dict:
        return {'vertices': self.nu, 'edges': [list(e) for e in self.edges]}


@dataclass(frozen=True)
class MaximalMinimizer:
    """The unique maximal minimizer.

    Attributes:
        support (tuple): Its support, sorted.
        cycles (tuple): Disjoint cycles, each starting at its smallest vertex.
        height (int): Size of the support.
    """
    support: Tuple[int, ...]
    cycles: Tuple[Tuple[int, ...], ...]
    height: int

    def pair(self) -> MinimizerPair:
        mapping = {}
        for cycle in self.cycles:
            mapping.update(MinimizerPair.from_cycle(cycle).permutation)
        return MinimizerPair.from_mapping(mapping)

    def to_dict(self) -> dict:
        return {'support': list(self.support), 'cycles': [list(c) for c in self.cycles], 'height': self.height}

    @classmethod
    def from_dict(cls, _dict: dict) -> 'MaximalMinimizer':
        """Initialize a MaximalMinimizer object from a json dictionary."""
        for key in ('support', 'cycles', 'height'):
            if key not in _dict:
                raise ValueError('Required property \'{0}\' not present in MaximalMinimizer JSON'.format(key))
        return cls(support=tuple(_dict['support']), cycles=tuple(tuple(c) for c in _dict['cycles']),
                   height=_dict['height'])


def is_minimizer(pair: MinimizerPair, coin_set: CoinSet, *, table: Optional[ChangeMakingTable] = None) -> bool:
    """True iff q*l - sigma(l) is positive and attains the weight bound for every l in the support."""
    q = coin_set.q
    table = table or ChangeMakingTable(coin_set)
    for ell, image in pair.permutation:
        target = q * ell - image
        if target <= 0 or not table.is_weight_tight(target):
            return False
    return True


def _require_unique(coin_set: CoinSet) -> None:
    if not coin_set.nu_unique:
        raise ValueError('The coin set must have a unique element of maximal weight')


def tightness_graph(coin_set: CoinSet, *, table: Optional[ChangeMakingTable] = None) -> TightnessGraph:
    """Build the tightness graph on {1..nu}.

    Raises:
        ValueError: nu is not unique.
        ComputationException: A vertex has more than one successor (ORACLE_INCONSISTENT).
    """
    _require_unique(coin_set)
    nu, q = coin_set.nu, coin_set.q
    table = table or ChangeMakingTable(coin_set, q * nu)
    edges = []
    for ell in range(1, nu + 1):
        out = [m for m in range(1, nu + 1) if q * ell - m > 0 and table.is_weight_tight(q * ell - m)]
        if len(out) > 1:
            raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                       message='Tightness graph vertex has more than one successor',
                                       details={'vertex': ell, 'successors': out})
        edges.extend((ell, m) for m in out)
    logger.debug('Tightness graph for %s: %d edges on %d vertices', coin_set.exponent_set, len(edges), nu)
    return TightnessGraph(nu=nu, edges=tuple(edges))


def graph_cycles(graph: TightnessGraph) -> List[Tuple[int, ...]]:
    """Cycles of a graph with out-degree at most one, each starting at its smallest vertex."""
    succ = graph.successor()
    state: Dict[int, int] = {}  # 1 = on the current walk, 2 = finished
    cycles = []
    for start in range(1, graph.nu + 1):
        if start in state:
            continue
        walk = []
        v = start
        while v is not None and v not in state:
            state[v] = 1
            walk.append(v)
            v = succ.get(v)
        if v is not None and state[v] == 1:
            cycle = walk[walk.index(v):]
            pivot = cycle.index(min(cycle))
            cycles.append(tuple(cycle[pivot:] + cycle[:pivot]))
        for u in walk:
            state[u] = 2
    return sorted(cycles)


def maximal_minimizer(coin_set: CoinSet) -> Optional[MaximalMinimizer]:
    """The maximal minimizer, or None when no minimizer exists.

    Raises:
        ValueError: nu is not unique.
        ComputationException: Cycles overlap or a cycle is not a minimizer (ORACLE_INCONSISTENT).
    """
    _require_unique(coin_set)
    table = ChangeMakingTable(coin_set, coin_set.q * coin_set.nu)
    cycles = graph_cycles(tightness_graph(coin_set, table=table))
    seen = set()
    for cycle in cycles:
        if seen.intersection(cycle):
            raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                       message='Cyclic minimizers overlap', details={'cycle': cycle})
        seen.update(cycle)
        if not is_minimizer(MinimizerPair.from_cycle(cycle), coin_set, table=table):
            raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                       message='Graph cycle is not a minimizer', details={'cycle': cycle})
    if not cycles:
        return None
    return MaximalMinimizer(support=tuple(sorted(seen)), cycles=tuple(cycles), height=len(seen))


def height(coin_set: CoinSet) -> int:
    """The minimizer height: support size of the maximal minimizer, 0 when none exists."""
    result = maximal_minimizer(coin_set)
    return 0 if result is None else result.height
