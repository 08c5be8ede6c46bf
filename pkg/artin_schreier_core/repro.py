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
"""Scripted reproductions of the published examples, each reporting PASS or FAIL per check.

Every case runs at desk scale: point counting is capped by REPRO_FIELD_SIZE_GUARD
on top of the configured guard, and checks that need a larger field report SKIP.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .changemaking import ChangeMakingTable, CoinSet, carry_free_witness, is_tight
from .computation_exception import ComputationException
from .counters import PointCounter
from .curves import CurveSpec, build_gv_family, normalize, ppp_degree_window
from .get_point_counter import get_point_counter
from .minimizers import maximal_minimizer
from .predict import Claim, ClaimStatus, PredictionBasis, predict, verify
from .psymmetry import census, census_ratio, detect
from .run_config import RunConfig
from .zeta import first_slope, is_supersingular, newton_polygon, zeta_numerator

logger = logging.getLogger(__name__)

# caps the configured guard; strict-7-4 needs F_7^9 and always skips
REPRO_FIELD_SIZE_GUARD = 2**16

CENSUS_5_3 = [26, 28, 31, 32, 36, 48, 52, 56, 62, 72, 76, 96, 104, 124]


@dataclass
class ReproContext:
    """What a reproduction needs from the run configuration."""
    guard: int
    k_max: Optional[int]
    counter: PointCounter

    @classmethod
    def from_config(cls, config: RunConfig) -> 'ReproContext':
        return cls(guard=min(config.field_size_guard, REPRO_FIELD_SIZE_GUARD), k_max=config.k_max,
                   counter=get_point_counter(config))


@dataclass(frozen=True)
class ReproCase:
    tag: str
    description: str
    runner: Callable[[ReproContext], List[Claim]]


@dataclass(frozen=True)
class ReproResult:
    """Outcome of one reproduction."""
    tag: str
    description: str
    checks: Tuple[Claim, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != ClaimStatus.FAIL for c in self.checks)

    @property
    def status(self) -> ClaimStatus:
        return ClaimStatus.PASS if self.passed else ClaimStatus.FAIL

    def to_dict(self) -> dict:
        return {'tag': self.tag, 'description': self.description, 'status': self.status.value,
                'checks': [c.to_dict() for c in self.checks]}

    @classmethod
    def from_dict(cls, _dict: dict) -> 'ReproResult':
        return cls(tag=_dict['tag'], description=_dict['description'],
                   checks=tuple(Claim.from_dict(c) for c in _dict['checks']))


REGISTRY: Dict[str, ReproCase] = {}


def _register(tag: str, description: str) -> Callable:
    def decorator(runner: Callable[[ReproContext], List[Claim]]) -> Callable[[ReproContext], List[Claim]]:
        REGISTRY[tag] = ReproCase(tag=tag, description=description, runner=runner)
        return runner
    return decorator


def _check(name: str, ok: bool, detail: str = '') -> Claim:
    return Claim(name, ClaimStatus.PASS if ok else ClaimStatus.FAIL, detail)


def _monomial(p: int, d: int) -> CurveSpec:
    return normalize(p, 1, {d: 1})


def _verify_claims(name: str, spec: CurveSpec, ctx: ReproContext) -> List[Claim]:
    report = verify(spec, ctx.k_max, counter=ctx.counter, guard=ctx.guard)
    return [Claim('{0}: {1}'.format(name, c.name), c.status, c.detail) for c in report.claims]


def _slope_claims(name: str, spec: CurveSpec, ctx: ReproContext, *, slope: Fraction,
                  multiplicity: Optional[int] = None, supersingular: Optional[bool] = None) -> List[Claim]:
    numerator, _ = zeta_numerator(spec, counter=ctx.counter, guard=ctx.guard)
    polygon = newton_polygon(numerator)
    actual, mult = first_slope(polygon)
    claims = [_check('{0}: first slope'.format(name), actual == slope, '{0} == {1}'.format(actual, slope))]
    if multiplicity is not None:
        claims.append(_check('{0}: multiplicity'.format(name), mult == multiplicity,
                             '{0} == {1}'.format(mult, multiplicity)))
    if supersingular is not None:
        ss = is_supersingular(polygon)
        claims.append(_check('{0}: supersingular'.format(name), ss == supersingular,
                             '{0} == {1}'.format(ss, supersingular)))
    return claims


@_register('census-5-3', 'The 5-symmetric numbers with three base-5 digits')
def _census_5_3(ctx: ReproContext) -> List[Claim]:
    found = census(5, 3, ctx.k_max)
    ratio = census_ratio(5, 3, ctx.k_max)
    return [_check('census', found == CENSUS_5_3, str(found)),
            _check('ratio', ratio == Fraction(7, 40), '{0} of the 80 candidates'.format(ratio))]


@_register('shift-factors', 'Shift factors of (301)_5, (110011)_2, p^m + 1 and p^k - 1')
def _shift_factors(_: ReproContext) -> List[Claim]:
    claims = []
    for nu, p, e in ((76, 5, 1), (51, 2, 2)):
        cert = detect(nu, p).certificate
        claims.append(_check('e({0}) at p={1}'.format(nu, p), cert.shift_factor == e, str(cert.to_dict())))
    for p, m in ((2, 2), (2, 4), (3, 2), (5, 2)):
        cert = detect(p**m + 1, p).certificate
        claims.append(_check('e({0}^{1} + 1)'.format(p, m), cert.shift_factor == m - 1, str(cert.to_dict())))
        if p == 2:
            claims.append(_check('k(2^{0} + 1)'.format(m), cert.k == 2 * m, 'k={0}'.format(cert.k)))
    for p, k in ((2, 3), (3, 2), (5, 2)):
        cert = detect(p**k - 1, p).certificate
        claims.append(_check('e({0}^{1} - 1)'.format(p, k), cert.shift_factor == 0 and cert.w == 1,
                             str(cert.to_dict())))
    return claims


@_register('pk-minus-one', 'y^p - y = x^(p^k - 1): first slope 1/(k(p-1)) with multiplicity k(p-1)')
def _pk_minus_one(ctx: ReproContext) -> List[Claim]:
    claims = []
    for p, k in ((2, 2), (2, 3), (2, 4), (3, 2)):
        spec = _monomial(p, p**k - 1)
        claims.extend(_verify_claims('p={0} k={1}'.format(p, k), spec, ctx))
    return claims


@_register('remark-2-21', 'f = x^21 + x^19 + x^13 + x^7 + x^3 over F_2 has first slope 1/2')
def _nonunique_2_21(ctx: ReproContext) -> List[Claim]:
    spec = normalize(2, 1, {21: 1, 19: 1, 13: 1, 7: 1, 3: 1})
    prediction = predict(spec, ctx.k_max)
    claims = [_check('prediction', prediction.basis == PredictionBasis.NON_UNIQUE_MAX
                     and prediction.lower_bound == Fraction(1, 3), str(prediction.to_dict()))]
    return claims + _slope_claims('five-term x^21', spec, ctx, slope=Fraction(1, 2))


def _strict_case(name: str, p: int, d: int, ctx: ReproContext) -> List[Claim]:
    spec = _monomial(p, d)
    prediction = predict(spec, ctx.k_max)
    claims = [_check('{0}: predicted strict'.format(name),
                     prediction.basis == PredictionBasis.UNIQUE_NOT_SYMMETRIC and prediction.strict,
                     str(prediction.to_dict()))]
    if spec.q**spec.genus > ctx.guard:
        claims.append(Claim('{0}: verification'.format(name), ClaimStatus.SKIP,
                            'F_{0}^{1} exceeds the guard {2}'.format(spec.q, spec.genus, ctx.guard)))
        return claims
    return claims + _verify_claims(name, spec, ctx)


@_register('strict-5-3', 'y^5 - y = x^3 over F_5 has first slope strictly above 1/3')
def _strict_5_3(ctx: ReproContext) -> List[Claim]:
    return _strict_case('x^3/F_5', 5, 3, ctx)


@_register('strict-7-4', 'y^7 - y = x^4 over F_7 is predicted strict; counting over F_7^9 is past the '
                         'reproduction guard, so verification always reports SKIP')
def _strict_7_4(ctx: ReproContext) -> List[Claim]:
    return _strict_case('x^4/F_7', 7, 4, ctx)


@_register('spd-5-4', 'y^5 - y = x^4 over F_5 has first slope 1/4')
def _spd_5_4(ctx: ReproContext) -> List[Claim]:
    return _verify_claims('x^4/F_5', _monomial(5, 4), ctx)


@_register('ppp-2-3', 'p=2, support {9, 7}: first slope 1/3, multiplicity 3, not supersingular')
def _ppp_2_3(ctx: ReproContext) -> List[Claim]:
    low, high = ppp_degree_window(2, 3)
    spec = normalize(2, 1, {9: 1, 7: 1})
    claims = [_check('degree window', low <= spec.degree <= high, '[{0}, {1}]'.format(low, high))]
    claims.extend(_verify_claims('x^9 + x^7', spec, ctx))
    return claims + _slope_claims('x^9 + x^7', spec, ctx, slope=Fraction(1, 3), multiplicity=3,
                                  supersingular=False)


@_register('ppp-2-2', 'y^2 - y = x^3 over F_2 is supersingular')
def _ppp_2_2(ctx: ReproContext) -> List[Claim]:
    return _slope_claims('x^3/F_2', _monomial(2, 3), ctx, slope=Fraction(1, 2), multiplicity=2,
                         supersingular=True)


@_register('gv-nonss', 'x^7 + x^5 + x^3 over F_2 (nu = 7 symmetric, not 2^i + 1) is not supersingular')
def _gv_nonss(ctx: ReproContext) -> List[Claim]:
    spec = build_gv_family(2, 1, 7, 1, {1: 1, 2: 1}, 2)
    claims = _verify_claims('gv', spec, ctx)
    return claims + _slope_claims('gv', spec, ctx, slope=Fraction(1, 3), supersingular=False)


@_register('main-bang-bang', 'Unique maximal weight: exact slope 1/s_p(nu) iff nu is p-symmetric')
def _main_bang_bang(ctx: ReproContext) -> List[Claim]:
    claims = []
    for p, d in ((2, 5), (2, 7), (2, 11), (5, 3), (3, 4)):
        spec = _monomial(p, d)
        if spec.q**spec.genus > ctx.guard:
            claims.append(Claim('x^{0}/F_{1}'.format(d, p), ClaimStatus.SKIP, 'above the guard'))
            continue
        claims.extend(_verify_claims('x^{0}/F_{1}'.format(d, p), spec, ctx))
    return claims


@_register('key-lemma', 'Tight targets are exactly the carry-free multiples nu * w with w < q')
def _key_lemma(_: ReproContext) -> List[Claim]:
    claims = []
    for p, a, support in ((2, 2, (3,)), (2, 3, (3, 5, 7)), (3, 2, (2, 5)), (5, 2, (6,)), (5, 1, (3, 7))):
        coin_set = CoinSet(p=p, a=a, exponent_set=support)
        limit = 600
        table = ChangeMakingTable(coin_set, limit)
        mismatches = []
        for n in range(limit + 1):
            try:
                report = is_tight(coin_set, n, table=table)
            except ComputationException as err:
                mismatches.append('{0}: {1}'.format(n, err))
                continue
            if coin_set.nu_unique and report.tight != (carry_free_witness(coin_set, n) is not None or n == 0):
                mismatches.append(str(n))
        claims.append(_check('p={0} a={1} i={2}'.format(p, a, list(support)), not mismatches,
                             ', '.join(mismatches[:5])))
    return claims


@_register('minimizer-height', 'For nu = p^k - 1 the maximal minimizer is {1, p, ..., p^(k-1)} of height k')
def _minimizer_height(_: ReproContext) -> List[Claim]:
    claims = []
    for p, k, a in ((2, 2, 2), (2, 3, 3), (3, 2, 2)):
        result = maximal_minimizer(CoinSet(p=p, a=a, exponent_set=(p**k - 1,)))
        expected = tuple(p**j for j in range(k))
        ok = result is not None and result.height == k and result.support == expected
        claims.append(_check('p={0} k={1} a={2}'.format(p, k, a), ok,
                             str(result.to_dict()) if result else 'no minimizer'))
    return claims


def repro_tags() -> List[str]:
    return sorted(REGISTRY)


def run_repro(tag: str, config: Optional[RunConfig] = None) -> ReproResult:
    """Run one registered reproduction.

    Raises:
        ValueError: tag is not registered.
    """
    if tag not in REGISTRY:
        raise ValueError('Unknown reproduction tag \'{0}\', expected one of: {1}'.format(tag, ', '.join(repro_tags())))
    case = REGISTRY[tag]
    ctx = ReproContext.from_config(config or RunConfig())
    logger.info('Running reproduction %s', tag)
    return ReproResult(tag=tag, description=case.description, checks=tuple(case.runner(ctx)))
