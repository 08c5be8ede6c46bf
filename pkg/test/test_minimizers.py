# pylint: disable=missing-docstring
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

from itertools import combinations, permutations

import pytest

from artin_schreier_core.changemaking import ChangeMakingTable, CoinSet
from artin_schreier_core.minimizers import (MinimizerPair, TightnessGraph, graph_cycles, height, is_minimizer,
                                            maximal_minimizer, tightness_graph)
from artin_schreier_core.padic import is_carryfree_mul, weight
from artin_schreier_core.psymmetry import Symmetric, detect


def test_minimizer_pair():
    pair = MinimizerPair.from_cycle((2, 5, 3))
    assert pair.support == (2, 3, 5)
    assert pair.sigma(2) == 5
    assert pair.sigma(5) == 3
    assert pair.sigma(3) == 2
    assert pair.to_dict() == {'support': [2, 3, 5], 'permutation': {'2': 5, '3': 2, '5': 3}}
    assert MinimizerPair.identity((4, 1)).permutation == ((1, 1), (4, 4))
    with pytest.raises(ValueError) as err:
        MinimizerPair(support=(1,), permutation=((1, 2),))
    assert str(err.value) == 'permutation must be a bijection of the support onto itself'


def test_tightness_graph_self_loops():
    coin_set = CoinSet(p=2, a=2, exponent_set=(3,))
    graph = tightness_graph(coin_set)
    assert graph.nu == 3
    assert graph.edges == ((1, 1), (2, 2))
    assert graph.to_dict() == {'vertices': 3, 'edges': [[1, 1], [2, 2]]}


def test_maximal_minimizer():
    coin_set = CoinSet(p=2, a=2, exponent_set=(3,))
    result = maximal_minimizer(coin_set)
    assert result.support == (1, 2)
    assert result.cycles == ((1,), (2,))
    assert result.height == 2
    assert result.pair() == MinimizerPair.identity((1, 2))
    assert is_minimizer(result.pair(), coin_set)
    assert result.to_dict() == {'support': [1, 2], 'cycles': [[1], [2]], 'height': 2}


def test_is_minimizer():
    coin_set = CoinSet(p=2, a=2, exponent_set=(3,))
    assert is_minimizer(MinimizerPair.identity((1,)), coin_set)
    # 4 * 1 - 2 = 2 has no representation
    assert not is_minimizer(MinimizerPair.from_cycle((1, 2)), coin_set)


def test_height_of_mersenne_like_supports():
    assert height(CoinSet(p=2, a=2, exponent_set=(3,))) == 2
    assert height(CoinSet(p=2, a=3, exponent_set=(7,))) == 3
    assert height(CoinSet(p=3, a=2, exponent_set=(8,))) == 2
    assert maximal_minimizer(CoinSet(p=3, a=2, exponent_set=(8,))).support == (1, 3)


def test_extra_low_weight_coins_keep_the_height():
    assert height(CoinSet(p=2, a=3, exponent_set=(3, 5, 7))) == height(CoinSet(p=2, a=3, exponent_set=(7,)))


def test_graph_cycles():
    graph = TightnessGraph(nu=5, edges=((1, 2), (2, 3), (3, 2), (4, 4)))
    assert graph_cycles(graph) == [(2, 3), (4,)]
    assert graph_cycles(TightnessGraph(nu=3, edges=((1, 2), (2, 3)))) == []


def test_non_unique_maximum_is_rejected():
    coin_set = CoinSet(p=5, a=1, exponent_set=(3, 7))
    with pytest.raises(ValueError) as err:
        maximal_minimizer(coin_set)
    assert str(err.value) == 'The coin set must have a unique element of maximal weight'
    with pytest.raises(ValueError):
        tightness_graph(coin_set)


# every coin set with a unique nu <= 8 over small fields, plus a few with extra low-weight coins
SMALL_COIN_SETS = [CoinSet(p=p, a=a, exponent_set=(nu,))
                   for p, a_max in ((2, 4), (3, 2), (5, 2), (7, 1))
                   for a in range(1, a_max + 1)
                   for nu in range(2, 9) if nu % p] + [
                       CoinSet(p=2, a=2, exponent_set=(1, 3)),
                       CoinSet(p=2, a=3, exponent_set=(1, 7)),
                       CoinSet(p=3, a=2, exponent_set=(2, 8)),
                       CoinSet(p=5, a=2, exponent_set=(3, 8)),
                   ]


def tight_edges(coin_set):
    """Every l -> m on {1..nu} whose target q*l - m attains the weight bound, found by direct search."""
    table = ChangeMakingTable(coin_set)
    s_nu = weight(coin_set.nu, coin_set.p)
    edges = set()
    for ell in range(1, coin_set.nu + 1):
        for m in range(1, coin_set.nu + 1):
            target = coin_set.q * ell - m
            value = table.value(target) if target > 0 else None
            if isinstance(value, int) and value * s_nu == weight(target, coin_set.p):
                edges.add((ell, m))
    return edges


def simple_cycles(nu, edges):
    """All simple cycles, each listed once from its smallest vertex."""
    found = []
    for start in range(1, nu + 1):
        stack = [(start,)]
        while stack:
            path = stack.pop()
            for m in range(start, nu + 1):
                if (path[-1], m) not in edges:
                    continue
                if m == start:
                    found.append(path)
                elif m not in path:
                    stack.append(path + (m,))
    return sorted(found)


@pytest.mark.parametrize('coin_set', SMALL_COIN_SETS, ids=str)
def test_minimizer_supports_are_bounded_by_nu(coin_set):
    nu = coin_set.nu
    table = ChangeMakingTable(coin_set)
    maximal = maximal_minimizer(coin_set)
    sigma = dict(maximal.pair().permutation) if maximal else {}
    for size in (1, 2, 3):
        for support in combinations(range(1, 2 * nu + 1), size):
            for image in permutations(support):
                pair = MinimizerPair.from_mapping(dict(zip(support, image)))
                if not is_minimizer(pair, coin_set, table=table):
                    continue
                assert max(support) <= nu
                # the maximal minimizer contains every minimizer
                assert all(sigma.get(ell) == m for ell, m in pair.permutation)


@pytest.mark.parametrize('coin_set', [c for c in SMALL_COIN_SETS if c.nu <= 8], ids=str)
def test_cyclic_minimizers_are_disjoint(coin_set):
    cycles = simple_cycles(coin_set.nu, tight_edges(coin_set))
    for first, second in combinations(cycles, 2):
        assert not set(first) & set(second)
    assert graph_cycles(tightness_graph(coin_set)) == cycles
    maximal = maximal_minimizer(coin_set)
    if cycles:
        assert maximal.support == tuple(sorted(v for c in cycles for v in c))
        assert maximal.height == height(coin_set)
    else:
        assert maximal is None
        assert height(coin_set) == 0


def test_maximal_minimizer_is_unique_up_to_rotation():
    for coin_set in SMALL_COIN_SETS:
        maximal = maximal_minimizer(coin_set)
        if maximal is None:
            continue
        for cycle in maximal.cycles:
            rotations = {MinimizerPair.from_cycle(cycle[t:] + cycle[:t]) for t in range(len(cycle))}
            assert len(rotations) == 1
            reverse = tuple(reversed(cycle))
            if len(cycle) > 2:
                assert not is_minimizer(MinimizerPair.from_cycle(reverse), coin_set)


def test_minimizers_are_hereditary():
    for coin_set in SMALL_COIN_SETS:
        maximal = maximal_minimizer(coin_set)
        if maximal is None:
            continue
        for size in range(1, len(maximal.cycles) + 1):
            for chosen in combinations(maximal.cycles, size):
                mapping = {}
                for cycle in chosen:
                    mapping.update(MinimizerPair.from_cycle(cycle).permutation)
                assert is_minimizer(MinimizerPair.from_mapping(mapping), coin_set)
        outside = [v for v in range(1, coin_set.nu + 1) if v not in maximal.support]
        if outside:
            mapping = dict(maximal.pair().permutation)
            mapping[outside[0]] = outside[0]
            assert not is_minimizer(MinimizerPair.from_mapping(mapping), coin_set)


def test_self_loops():
    checked = 0
    for coin_set in SMALL_COIN_SETS:
        p, q, nu = coin_set.p, coin_set.q, coin_set.nu
        loops = {ell for ell, m in tightness_graph(coin_set).edges if ell == m}
        # a self-loop at l is a carry-free nu * w = (q - 1) * l with w < q
        for ell in range(1, nu + 1):
            w, rest = divmod((q - 1) * ell, nu)
            assert (ell in loops) == (rest == 0 and w < q and is_carryfree_mul(nu, w, p))
        result = detect(nu, p)
        if not isinstance(result, Symmetric) or coin_set.a % result.certificate.k:
            continue
        cert = result.certificate
        if not cert.minimal or cert.ell > p**cert.k:
            continue
        for r in range(cert.k - cert.shift_factor):
            if cert.ell * p**r <= min(nu, q):
                assert cert.ell * p**r in loops
                checked += 1
    assert checked > 0


@pytest.mark.parametrize('p,k,a', [(2, 2, 2), (2, 2, 4), (2, 3, 3), (3, 1, 1), (3, 1, 2), (3, 2, 2), (5, 1, 1),
                                   (5, 1, 2), (7, 1, 1)])
def test_pk_minus_one_self_minimizers(p, k, a):
    nu = p**k - 1
    coin_set = CoinSet(p=p, a=a, exponent_set=(nu,))
    powers = {p**r for r in range(k)}
    table = ChangeMakingTable(coin_set)
    for ell in range(1, 2 * nu + 2):
        assert is_minimizer(MinimizerPair.identity((ell,)), coin_set, table=table) == (ell in powers)
