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
"""The verification oracle: exact point counts, the zeta numerator and its Newton polygon.

For y^p - y = f(x) over F_q the fiber over x has p points iff the absolute
trace of f(x) vanishes, and there is one point at infinity, so
N_m = p * #{x in F_{q^m} : Tr f(x) = 0} + 1. The numerator
P(s) = c_0 + c_1 s + ... + c_{2g} s^{2g} follows from N_1..N_g through
Newton's identities and the functional equation c_{2g-i} = q^(g-i) c_i.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import multiplicity

from .computation_exception import ComputationException
from .counters import CountingTask, PointCounter, SerialPointCounter
from .curves import CurveSpec
from .finitefield import Element, FieldContext, embed_field, make_field
from .run_config import DEFAULT_FIELD_SIZE_GUARD
from .utils import fraction_to_string, string_to_fraction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointCountRecord:
    """Point count of a curve over F_{q^m}.

    Attributes:
        m (int): Extension degree over the base field.
        field_size (int): q^m.
        zero_trace_count (int): #{x : Tr f(x) = 0}.
        points (int): N_m = p * zero_trace_count + 1.
    """
    m: int
    field_size: int
    zero_trace_count: int
    points: int

    def to_dict(self) -> dict:
        return {'m': self.m, 'field_size': self.field_size, 'zero_trace_count': self.zero_trace_count,
                'points': self.points}

    @classmethod
    def from_dict(cls, _dict: dict) -> 'PointCountRecord':
        return cls(m=_dict['m'], field_size=_dict['field_size'], zero_trace_count=_dict['zero_trace_count'],
                   points=_dict['points'])


@dataclass(frozen=True)
class ZetaNumerator:
    """The integer polynomial P(s) = prod (1 - alpha_i s) of degree 2g.

    Attributes:
        coefficients (tuple): c_0 .. c_{2g}, c_0 = 1.
        p (int): The characteristic.
        a (int): q = p^a.
    """
    coefficients: Tuple[int, ...]
    p: int
    a: int

    @property
    def q(self) -> int:
        return self.p**self.a

    @property
    def genus(self) -> int:
        return (len(self.coefficients) - 1) // 2

    def satisfies_functional_equation(self) -> bool:
        c, g, q = self.coefficients, self.genus, self.q
        return c[0] == 1 and all(c[2 * g - i] == q**(g - i) * c[i] for i in range(g + 1))

    def to_dict(self) -> dict:
        return {'p': self.p, 'a': self.a, 'coefficients': list(self.coefficients)}

    @classmethod
    def from_dict(cls, _dict: dict) -> 'ZetaNumerator':
        return cls(coefficients=tuple(_dict['coefficients']), p=_dict['p'], a=_dict['a'])


@dataclass(frozen=True)
class NewtonPolygonData:
    """Lower convex hull of the points (i, v_q(c_i)).

    Attributes:
        points (tuple): (i, v_q(c_i)) with None for c_i = 0.
        vertices (tuple): Hull vertices, left to right.
        slopes (tuple): The 2g slopes, nondecreasing.
    """
    points: Tuple[Tuple[int, Optional[Fraction]], ...]
    vertices: Tuple[Tuple[int, Fraction], ...]
    slopes: Tuple[Fraction, ...]

    def slope_multiplicities(self) -> List[Tuple[Fraction, int]]:
        result: List[Tuple[Fraction, int]] = []
        for s in self.slopes:
            if result and result[-1][0] == s:
                result[-1] = (s, result[-1][1] + 1)
            else:
                result.append((s, 1))
        return result

    def to_dict(self) -> dict:
        return {
            'points': [[i, fraction_to_string(v)] for i, v in self.points],
            'vertices': [[i, fraction_to_string(v)] for i, v in self.vertices],
            'slopes': [[fraction_to_string(s), t] for s, t in self.slope_multiplicities()],
        }

    @classmethod
    def from_dict(cls, _dict: dict) -> 'NewtonPolygonData':
        slopes = []
        for s, t in _dict['slopes']:
            slopes.extend([string_to_fraction(s)] * t)
        return cls(points=tuple((i, string_to_fraction(v)) for i, v in _dict['points']),
                   vertices=tuple((i, string_to_fraction(v)) for i, v in _dict['vertices']),
                   slopes=tuple(slopes))


def check_guard(field_size: int, guard: int) -> None:
    """Raise GUARD_EXCEEDED when a field of field_size elements is above the guard."""
    if field_size > guard:
        raise ComputationException(ComputationException.GUARD_EXCEEDED,
                                   message='Field of size {0} exceeds the guard {1}'.format(field_size, guard),
                                   details={'field_size': field_size, 'guard': guard})


def _embedded_task(base: FieldContext, terms: Dict[int, Element], m: int) -> CountingTask:
    big = make_field(base.p, base.m * m)
    embedding = embed_field(base, big)
    return CountingTask(field=big, terms=tuple(sorted((i, embedding(c)) for i, c in terms.items())))


def _record(p: int, m: int, field_size: int, zero_traces: int) -> PointCountRecord:
    return PointCountRecord(m=m, field_size=field_size, zero_trace_count=zero_traces, points=p * zero_traces + 1)


def check_weil_bound(record: PointCountRecord, genus: int) -> None:
    """|N_m - (q^m + 1)| <= 2 g q^(m/2), compared after squaring.

    Raises:
        ComputationException: The bound fails (ORACLE_INCONSISTENT).
    """
    deviation = record.points - record.field_size - 1
    if deviation * deviation > 4 * genus * genus * record.field_size:
        raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                   message='Point count violates the Weil bound',
                                   details={'m': record.m, 'points': record.points, 'genus': genus})


def count_points(spec: CurveSpec, m: int, *,
                 counter: Optional[PointCounter] = None,
                 guard: int = DEFAULT_FIELD_SIZE_GUARD) -> PointCountRecord:
    """Count the rational points of the curve over F_{q^m}.

    Raises:
        ComputationException: q^m exceeds the guard (GUARD_EXCEEDED) or the
            count breaks the Weil bound (ORACLE_INCONSISTENT).
    """
    if m < 1:
        raise ValueError('m must be positive, got {0}'.format(m))
    field_size = spec.q**m
    check_guard(field_size, guard)
    counter = counter or SerialPointCounter()
    zero_traces = counter.count_zero_traces(_embedded_task(spec.field, spec.coefficients, m))
    record = _record(spec.p, m, field_size, zero_traces)
    logger.debug('N_%d = %d over F_%d', m, record.points, field_size)
    check_weil_bound(record, spec.genus)
    return record


def count_points_raw(field: FieldContext, raw_coefficients: Dict[int, Element], m: int, *,
                     counter: Optional[PointCounter] = None,
                     guard: int = DEFAULT_FIELD_SIZE_GUARD) -> PointCountRecord:
    """Count y^p - y = f(x) for an arbitrary f (constant term and p-th power exponents allowed)."""
    if m < 1:
        raise ValueError('m must be positive, got {0}'.format(m))
    field_size = field.size**m
    check_guard(field_size, guard)
    counter = counter or SerialPointCounter()
    terms = {i: c for i, c in raw_coefficients.items() if c}
    zero_traces = counter.count_zero_traces(_embedded_task(field, terms, m))
    return _record(field.p, m, field_size, zero_traces)


def elementary_from_power_sums(power_sums: Sequence[int]) -> List[int]:
    """e_0..e_n from ps_1..ps_n by Newton's identities, in exact integer arithmetic.

    Raises:
        ComputationException: A division is not exact (ORACLE_INCONSISTENT).
    """
    elementary = [1]
    for m in range(1, len(power_sums) + 1):
        total = 0
        for j in range(1, m + 1):
            term = elementary[m - j] * power_sums[j - 1]
            total += term if j % 2 else -term
        e_m, remainder = divmod(total, m)
        if remainder:
            raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                       message='Newton identity division is not exact',
                                       details={'m': m, 'numerator': total})
        elementary.append(e_m)
    return elementary


def _power_sums(q: int, counts: Sequence[PointCountRecord]) -> List[int]:
    ordered = sorted(counts, key=lambda r: r.m)
    if [r.m for r in ordered] != list(range(1, len(ordered) + 1)):
        raise ValueError('Point counts must cover m = 1..{0} exactly'.format(len(ordered)))
    return [q**r.m + 1 - r.points for r in ordered]


def numerator_from_counts(spec: CurveSpec, counts: Sequence[PointCountRecord]) -> ZetaNumerator:
    """Reconstruct P(s) from N_1..N_g.

    Raises:
        ValueError: counts does not hold exactly the records m = 1..g.
        ComputationException: Newton's identities fail to divide exactly (ORACLE_INCONSISTENT).
    """
    g, q = spec.genus, spec.q
    if len(counts) != g:
        raise ValueError('Expected {0} point counts, got {1}'.format(g, len(counts)))
    elementary = elementary_from_power_sums(_power_sums(q, counts))
    lower = [(-1)**m * e for m, e in enumerate(elementary)]
    upper = [q**(g - i) * lower[i] for i in range(g - 1, -1, -1)]
    return ZetaNumerator(coefficients=tuple(lower + upper), p=spec.p, a=spec.a)


def zeta_numerator(spec: CurveSpec, *,
                   counter: Optional[PointCounter] = None,
                   guard: int = DEFAULT_FIELD_SIZE_GUARD) -> Tuple[ZetaNumerator, List[PointCountRecord]]:
    """Count N_1..N_g and build the numerator; the whole run is guarded up front."""
    if spec.genus:
        check_guard(spec.q**spec.genus, guard)
    counts = [count_points(spec, m, counter=counter, guard=guard) for m in range(1, spec.genus + 1)]
    return numerator_from_counts(spec, counts), counts


@dataclass(frozen=True)
class FunctionalEquationCheck:
    """Coefficients from direct counts up to 2g against the functional-equation values."""
    direct: Tuple[int, ...]
    predicted: Tuple[int, ...]

    @property
    def consistent(self) -> bool:
        return self.direct == self.predicted

    def to_dict(self) -> dict:
        return {'direct': list(self.direct), 'predicted': list(self.predicted), 'consistent': self.consistent}


def verify_functional_equation(spec: CurveSpec, *,
                               counter: Optional[PointCounter] = None,
                               guard: int = DEFAULT_FIELD_SIZE_GUARD) -> FunctionalEquationCheck:
    """Count up to m = 2g and rebuild every coefficient without the functional equation."""
    g = spec.genus
    if g:
        check_guard(spec.q**(2 * g), guard)
    counts = [count_points(spec, m, counter=counter, guard=guard) for m in range(1, 2 * g + 1)]
    direct = [(-1)**m * e for m, e in enumerate(elementary_from_power_sums(_power_sums(spec.q, counts)))]
    predicted = numerator_from_counts(spec, counts[:g]).coefficients
    return FunctionalEquationCheck(direct=tuple(direct), predicted=tuple(predicted))


def _cross(o: Tuple[int, Fraction], a: Tuple[int, Fraction], b: Tuple[int, Fraction]) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Sequence[Tuple[int, Fraction]]) -> List[Tuple[int, Fraction]]:
    """Lower convex hull by the monotone chain, collinear points dropped."""
    hull: List[Tuple[int, Fraction]] = []
    for pt in sorted(points):
        while len(hull) > 1 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def newton_polygon(numerator: ZetaNumerator) -> NewtonPolygonData:
    """The q-adic Newton polygon of P(s): points (i, v_p(c_i)/a) and their lower hull."""
    points: List[Tuple[int, Optional[Fraction]]] = []
    for i, c in enumerate(numerator.coefficients):
        points.append((i, Fraction(multiplicity(numerator.p, abs(c)), numerator.a) if c else None))
    finite = [(i, v) for i, v in points if v is not None]
    vertices = lower_hull(finite)
    slopes: List[Fraction] = []
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
        slopes.extend([(y1 - y0) / (x1 - x0)] * (x1 - x0))
    return NewtonPolygonData(points=tuple(points), vertices=tuple(vertices), slopes=tuple(slopes))


def first_slope(polygon: NewtonPolygonData) -> Tuple[Fraction, int]:
    """The smallest slope and its multiplicity.

    Raises:
        ValueError: The polygon has no slopes (genus 0).
    """
    if not polygon.slopes:
        raise ValueError('A genus-zero polygon has no slopes')
    return polygon.slope_multiplicities()[0]


def is_supersingular(polygon: NewtonPolygonData) -> bool:
    """True iff every slope is 1/2."""
    if not polygon.slopes:
        raise ValueError('A genus-zero polygon has no slopes')
    return all(s == Fraction(1, 2) for s in polygon.slopes)


def is_ordinary(polygon: NewtonPolygonData) -> bool:
    """True iff the slopes are g copies of 0 and g copies of 1."""
    g = len(polygon.slopes) // 2
    return bool(polygon.slopes) and polygon.slopes == tuple([Fraction(0)] * g + [Fraction(1)] * g)
