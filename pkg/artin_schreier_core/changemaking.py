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
"""The p-adic change-making problem over coin systems {i * p^j}.

A coin set is built from a support of coprime-to-p integers and a degree a;
M_C(N) is the least number of coins summing to N. The weight bound
M_C(N) >= s_p(N) / s_p(nu) is attained exactly when N = nu * w is a
carry-free product with w < p^a (for a unique maximal-weight nu).
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .computation_exception import ComputationException
from .padic import is_carryfree_mul, validate_prime, weight
from .utils import fraction_to_string, remove_null_values, string_to_fraction

logger = logging.getLogger(__name__)


class Infeasible:
    """Marker returned when no representation of the target exists."""
    _instance = None

    def __new__(cls) -> 'Infeasible':
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'Infeasible'

    def __bool__(self) -> bool:
        return False


INFEASIBLE = Infeasible()

SolutionValue = Union[int, Infeasible]


@dataclass(frozen=True)
class CoinSet:
    """The coin system {i * p^j : i in exponent_set, 0 <= j < a}.

    Attributes:
        p (int): The prime.
        a (int): The degree, q = p^a.
        exponent_set (tuple): Sorted support, every element coprime to p.
        nu (int): The smallest element of maximal p-adic weight.
        nu_unique (bool): True iff exactly one element has maximal weight.

    Raises:
        ValueError: p is not prime, a < 1, the support is empty or holds
            an element divisible by p.
    """
    p: int
    a: int
    exponent_set: Tuple[int, ...]
    nu: int = field(init=False)
    nu_unique: bool = field(init=False)

    def __post_init__(self) -> None:
        validate_prime(self.p)
        if not isinstance(self.a, int) or self.a < 1:
            raise ValueError('a must be a positive integer, got {0}'.format(self.a))
        support = tuple(sorted(set(self.exponent_set)))
        if not support:
            raise ValueError('exponent_set must not be empty')
        for i in support:
            if not isinstance(i, int) or i < 1:
                raise ValueError('exponent_set elements must be positive integers, got {0}'.format(i))
            if i % self.p == 0:
                raise ValueError('exponent_set elements must be coprime to p, got {0}'.format(i))
        object.__setattr__(self, 'exponent_set', support)
        weights = {i: weight(i, self.p) for i in support}
        top = max(weights.values())
        argmax = [i for i in support if weights[i] == top]
        object.__setattr__(self, 'nu', argmax[0])
        object.__setattr__(self, 'nu_unique', len(argmax) == 1)
        if len(self.coins()) != len(support) * self.a:
            raise ValueError('The index map (i, j) -> i * p^j must be injective')

    @property
    def q(self) -> int:
        return self.p**self.a

    def coins(self) -> Dict[int, Tuple[int, int]]:
        """Map each coin value to its index (i, j)."""
        return {i * self.p**j: (i, j) for i in self.exponent_set for j in range(self.a)}

    def to_dict(self) -> dict:
        """Return a json dictionary representing this coin set."""
        return {
            'p': self.p,
            'a': self.a,
            'exponent_set': list(self.exponent_set),
            'nu': self.nu,
            'nu_unique': self.nu_unique,
        }

    @classmethod
    def from_dict(cls, _dict: dict) -> 'CoinSet':
        """Initialize a CoinSet object from a json dictionary."""
        for key in ('p', 'a', 'exponent_set'):
            if key not in _dict:
                raise ValueError('Required property \'{0}\' not present in CoinSet JSON'.format(key))
        return cls(p=_dict['p'], a=_dict['a'], exponent_set=tuple(_dict['exponent_set']))


@dataclass(frozen=True)
class Representation:
    """A multiset of coins i * p^j summing to target.

    Attributes:
        p (int): The prime of the coin set.
        multiplicities (tuple): Sorted pairs ((i, j), t_ij) with t_ij > 0.
        target (int): The represented integer.
        size (int): Total number of coins.

    Raises:
        ValueError: The multiplicities do not sum to target or size.
    """
    p: int
    multiplicities: Tuple[Tuple[Tuple[int, int], int], ...]
    target: int
    size: int

    def __post_init__(self) -> None:
        total = sum(t * i * self.p**j for (i, j), t in self.multiplicities)
        if total != self.target:
            raise ValueError('Representation sums to {0}, not {1}'.format(total, self.target))
        if sum(t for _, t in self.multiplicities) != self.size:
            raise ValueError('Representation size does not match its multiplicities')

    @classmethod
    def from_coins(cls, p: int, indices: Iterable[Tuple[int, int]]) -> 'Representation':
        """Build a representation from coin indices (i, j), repeats allowed."""
        counts = Counter(indices)
        return cls(p=p,
                   multiplicities=tuple(sorted(counts.items())),
                   target=sum(t * i * p**j for (i, j), t in counts.items()),
                   size=sum(counts.values()))

    def multiplicity(self, i: int, j: int) -> int:
        return dict(self.multiplicities).get((i, j), 0)

    def to_dict(self) -> dict:
        """Return a json dictionary representing this representation."""
        return {
            'p': self.p,
            'coins': [{'i': i, 'j': j, 't': t} for (i, j), t in self.multiplicities],
            'target': self.target,
            'size': self.size,
        }

    @classmethod
    def from_dict(cls, _dict: dict) -> 'Representation':
        """Initialize a Representation object from a json dictionary."""
        p = _dict.get('p')
        coins = [((c['i'], c['j']), c['t']) for c in _dict.get('coins', [])]
        return cls(p=p, multiplicities=tuple(sorted(coins)), target=_dict.get('target'), size=_dict.get('size'))


class ChangeMakingTable:
    """Dense dynamic-programming table of M_C(v) for v = 0..limit.

    The table grows on demand, so one instance can serve many targets.

    Args:
        coin_set: The coin system.
        limit: Initial largest value to tabulate. Defaults to 0.
    """

    def __init__(self, coin_set: CoinSet, limit: int = 0) -> None:
        self.coin_set = coin_set
        # coin values in increasing order with their indices
        self._coins: List[Tuple[int, Tuple[int, int]]] = sorted(coin_set.coins().items())
        self._best: List[int] = [0]
        self._memo: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}
        self._extend(limit)

    def _extend(self, limit: int) -> None:
        start = len(self._best)
        if limit < start:
            return
        best = self._best
        for v in range(start, limit + 1):
            value = -1
            for coin, _ in self._coins:
                if coin > v:
                    break
                prev = best[v - coin]
                if prev >= 0 and (value < 0 or prev + 1 < value):
                    value = prev + 1
            best.append(value)
        logger.debug('Change-making table for %s extended to %d', self.coin_set.exponent_set, limit)

    def value(self, n: int) -> SolutionValue:
        """M_C(n), or INFEASIBLE when n has no representation."""
        if n < 0:
            return INFEASIBLE
        self._extend(n)
        best = self._best[n]
        return INFEASIBLE if best < 0 else best

    def _optimal_steps(self, n: int, start: int) -> List[Tuple[int, Tuple[int, int]]]:
        # (position, remaining state) for every coin that can open an optimal multiset of n
        steps = []
        remaining = self._best[n] - 1
        for position in range(start, len(self._coins)):
            coin = self._coins[position][0]
            if coin > n:
                break
            if self._best[n - coin] == remaining:
                steps.append((position, (n - coin, position)))
        return steps

    def _optimal_index_tuples(self, n: int, start: int) -> List[Tuple[int, ...]]:
        # multisets as nondecreasing tuples of positions in self._coins, each at least start;
        # resolved with an explicit stack, n strictly decreases along every step
        memo = self._memo
        pending = [(n, start)]
        while pending:
            key = pending[-1]
            if key in memo:
                pending.pop()
                continue
            if key[0] == 0:
                memo[key] = [()]
                pending.pop()
                continue
            steps = self._optimal_steps(*key)
            missing = [state for _, state in steps if state not in memo]
            if missing:
                pending.extend(missing)
                continue
            pending.pop()
            memo[key] = [(position,) + tail for position, state in steps for tail in memo[state]]
        return memo[(n, start)]

    def solutions(self, n: int) -> List[Representation]:
        """All representations of n of minimal size, in canonical order."""
        if isinstance(self.value(n), Infeasible):
            return []
        p = self.coin_set.p
        reps = [Representation.from_coins(p, (self._coins[pos][1] for pos in combo))
                for combo in self._optimal_index_tuples(n, 0)]
        return sorted(reps, key=lambda r: r.multiplicities)

    def is_weight_tight(self, n: int) -> bool:
        """True iff M_C(n) = s_p(n) / s_p(nu) (False when infeasible)."""
        value = self.value(n)
        if isinstance(value, Infeasible):
            return False
        p = self.coin_set.p
        return value * weight(self.coin_set.nu, p) == weight(n, p)


def solution_value(coin_set: CoinSet, n: int) -> SolutionValue:
    """The solution value M_C(n); INFEASIBLE when no representation exists.

    Raises:
        ValueError: n is negative.
    """
    _validate_target(n)
    return ChangeMakingTable(coin_set, n).value(n)


def solve(coin_set: CoinSet, n: int) -> List[Representation]:
    """Every representation of n of size M_C(n); empty iff infeasible."""
    _validate_target(n)
    return ChangeMakingTable(coin_set, n).solutions(n)


def weight_lower_bound(coin_set: CoinSet, n: int) -> Fraction:
    """The bound s_p(n) / s_p(nu) as an exact rational."""
    _validate_target(n)
    return Fraction(weight(n, coin_set.p), weight(coin_set.nu, coin_set.p))


def carry_free_witness(coin_set: CoinSet, n: int) -> Optional[int]:
    """Return w with n = nu * w carry-free and 0 < w < q, or None."""
    _validate_target(n)
    nu = coin_set.nu
    if n == 0 or n % nu:
        return None
    w = n // nu
    if w < coin_set.q and is_carryfree_mul(nu, w, coin_set.p):
        return w
    return None


@dataclass(frozen=True)
class TightnessReport:
    """Whether the weight lower bound is attained for a target.

    Attributes:
        target (int): The target N.
        solution_value (int): M_C(N), None when infeasible.
        lower_bound (Fraction): s_p(N) / s_p(nu).
        tight (bool): True iff solution_value equals lower_bound.
        witness (int): When nu is unique and the bound is tight, w = sum_j t_{nu,j} p^j.
        solution_count (int): Number of optimal representations, when enumerated.
    """
    target: int
    solution_value: Optional[int]
    lower_bound: Fraction
    tight: bool
    witness: Optional[int] = None
    solution_count: Optional[int] = None

    def to_dict(self) -> dict:
        """Return a json dictionary representing this report."""
        return remove_null_values({
            'target': self.target,
            'solution_value': self.solution_value,
            'infeasible': self.solution_value is None,
            'lower_bound': fraction_to_string(self.lower_bound),
            'tight': self.tight,
            'witness': self.witness,
            'solution_count': self.solution_count,
        })

    @classmethod
    def from_dict(cls, _dict: dict) -> 'TightnessReport':
        """Initialize a TightnessReport object from a json dictionary."""
        for key in ('target', 'lower_bound', 'tight'):
            if key not in _dict:
                raise ValueError('Required property \'{0}\' not present in TightnessReport JSON'.format(key))
        return cls(target=_dict['target'],
                   solution_value=_dict.get('solution_value'),
                   lower_bound=string_to_fraction(_dict['lower_bound']),
                   tight=_dict['tight'],
                   witness=_dict.get('witness'),
                   solution_count=_dict.get('solution_count'))


def is_tight(coin_set: CoinSet, n: int, *, table: Optional[ChangeMakingTable] = None) -> TightnessReport:
    """Decide whether M_C(n) attains the weight lower bound.

    When nu is unique and the bound is attained, the optimal representation
    is extracted and checked to use only the coins nu * p^j, each at most
    p - 1 times, with nu * w = n carry-free.

    Args:
        coin_set: The coin system.
        n: The target.

    Keyword Args:
        table: A table to reuse across calls. Defaults to a fresh one.

    Raises:
        ComputationException: The extracted witness contradicts the carry-free
            characterization (ORACLE_INCONSISTENT).
    """
    _validate_target(n)
    table = table or ChangeMakingTable(coin_set, n)
    value = table.value(n)
    bound = weight_lower_bound(coin_set, n)
    forward = carry_free_witness(coin_set, n)
    if isinstance(value, Infeasible):
        return TightnessReport(target=n, solution_value=None, lower_bound=bound, tight=False)

    tight = value == bound
    if forward is not None and not tight:
        raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                   message='Carry-free factorization exists but the bound is not attained',
                                   details={'target': n, 'w': forward, 'solution_value': value})
    if not (tight and coin_set.nu_unique and n > 0):
        return TightnessReport(target=n, solution_value=value, lower_bound=bound, tight=tight)

    solutions = table.solutions(n)
    witness = _extract_witness(coin_set, n, solutions)
    return TightnessReport(target=n, solution_value=value, lower_bound=bound, tight=True,
                           witness=witness, solution_count=len(solutions))


def _extract_witness(coin_set: CoinSet, n: int, solutions: List[Representation]) -> int:
    p, nu = coin_set.p, coin_set.nu
    if len(solutions) != 1:
        raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                   message='Tight target has more than one optimal representation',
                                   details={'target': n, 'solution_count': len(solutions)})
    rep = solutions[0]
    w = 0
    for (i, j), t in rep.multiplicities:
        if i != nu or t > p - 1:
            raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                       message='Tight representation uses a coin outside nu * p^j',
                                       details={'target': n, 'coin': (i, j), 'multiplicity': t})
        w += t * p**j
    if nu * w != n or w >= coin_set.q or not is_carryfree_mul(nu, w, p):
        raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                   message='Tight representation is not a carry-free factorization',
                                   details={'target': n, 'w': w})
    return w


def _validate_target(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError('N must be an int')
    if n < 0:
        raise ValueError('N must be nonnegative, got {0}'.format(n))
