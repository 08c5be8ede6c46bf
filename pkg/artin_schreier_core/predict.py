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
"""First-slope predictions from the support of f, and their reconciliation with the zeta oracle."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from .changemaking import CoinSet
from .counters import PointCounter
from .curves import CurveSpec, analyze_support
from .minimizers import height
from .padic import digit_count, validate_prime
from .psymmetry import (NotFoundWithin, SymmetryCertificate, detect, family_divisor_certificate,
                        weight_divides_certificate)
from .run_config import DEFAULT_FIELD_SIZE_GUARD
from .utils import fraction_to_string, remove_null_values, string_to_fraction
from .zeta import NewtonPolygonData, ZetaNumerator, first_slope, is_supersingular, newton_polygon, zeta_numerator

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class PredictionBasis(Enum):
    """The reasoning path a prediction rests on."""
    LOWER_BOUND_ONLY = 'LowerBoundOnly'
    NON_UNIQUE_MAX = 'NonUniqueMax'
    PK_MINUS_ONE = 'PkMinusOne'
    UNIQUE_SYMMETRIC = 'UniqueSymmetric'
    WEIGHT_DIVIDES_P_MINUS_ONE = 'WeightDividesPminus1'
    UNIQUE_NOT_SYMMETRIC = 'UniqueNotSymmetric'


class ClaimStatus(Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    SKIP = 'SKIP'


@dataclass(frozen=True)
class SlopePrediction:
    """What the support of f says about the first slope.

    Attributes:
        p (int): The characteristic.
        support (tuple): The exponents of f.
        lower_bound (Fraction): 1 / max weight over the support.
        basis (PredictionBasis): How the prediction was reached.
        exact_slope (Fraction): The first slope, when the support determines it.
        strict (bool): True when the first slope is known to exceed lower_bound.
        multiplicity (int): Exact multiplicity of the first slope, when known.
        multiplicity_interval (tuple): Bounds (low, high) on the multiplicity, when known.
        certificate (SymmetryCertificate): The p-symmetry certificate of nu, if any.
        note (str): Free-form remark for inconclusive cases.
    """
    p: int
    support: Tuple[int, ...]
    lower_bound: Fraction
    basis: PredictionBasis
    exact_slope: Optional[Fraction] = None
    strict: bool = False
    multiplicity: Optional[int] = None
    multiplicity_interval: Optional[Tuple[int, int]] = None
    certificate: Optional[SymmetryCertificate] = None
    note: Optional[str] = None

    def __post_init__(self) -> None:
        if self.exact_slope is not None:
            if self.strict:
                raise ValueError('An exact slope cannot be a strict prediction')
            if self.exact_slope != self.lower_bound:
                raise ValueError('exact_slope must equal lower_bound')
        if self.multiplicity_interval is not None and self.multiplicity_interval[0] > self.multiplicity_interval[1]:
            raise ValueError('multiplicity_interval must not be empty')

    @property
    def provisional(self) -> bool:
        """True when the multiplicity interval rests on a certificate not known to be minimal."""
        return (self.multiplicity_interval is not None and self.certificate is not None
                and not self.certificate.minimal)

    def predicts_supersingular(self) -> Optional[bool]:
        """True or False when the prediction decides supersingularity, None otherwise.

        A first slope of 1/2 forces every slope to 1/2 by the symmetry s -> 1 - s.
        """
        if self.lower_bound >= HALF:
            return True
        if self.exact_slope is not None:
            return False
        return None

    def to_dict(self) -> dict:
        """Return a json dictionary representing this prediction."""
        return remove_null_values({
            'p': self.p,
            'support': list(self.support),
            'lower_bound': fraction_to_string(self.lower_bound),
            'basis': self.basis.value,
            'exact_slope': fraction_to_string(self.exact_slope) if self.exact_slope is not None else None,
            'strict': self.strict,
            'multiplicity': self.multiplicity,
            'multiplicity_interval': list(self.multiplicity_interval) if self.multiplicity_interval else None,
            'certificate': self.certificate.to_dict() if self.certificate else None,
            'note': self.note,
            'provisional': self.provisional or None,
        })

    @classmethod
    def from_dict(cls, _dict: dict) -> 'SlopePrediction':
        """Initialize a SlopePrediction object from a json dictionary."""
        for key in ('p', 'support', 'lower_bound', 'basis'):
            if key not in _dict:
                raise ValueError('Required property \'{0}\' not present in SlopePrediction JSON'.format(key))
        exact = _dict.get('exact_slope')
        interval = _dict.get('multiplicity_interval')
        cert = _dict.get('certificate')
        return cls(p=_dict['p'],
                   support=tuple(_dict['support']),
                   lower_bound=string_to_fraction(_dict['lower_bound']),
                   basis=PredictionBasis(_dict['basis']),
                   exact_slope=string_to_fraction(exact) if exact is not None else None,
                   strict=_dict.get('strict', False),
                   multiplicity=_dict.get('multiplicity'),
                   multiplicity_interval=tuple(interval) if interval else None,
                   certificate=SymmetryCertificate.from_dict(cert) if cert else None,
                   note=_dict.get('note'))


def _pk_minus_one_exponent(nu: int, p: int) -> Optional[int]:
    k = digit_count(nu + 1, p) - 1
    return k if k >= 1 and p**k - 1 == nu else None


def predict_support(p: int, support: Iterable[int], k_max: Optional[int] = None) -> SlopePrediction:
    """Predict the first slope of any curve y^p - y = f with the given support.

    Raises:
        ValueError: p is not prime or the support is empty or has an exponent divisible by p.
    """
    validate_prime(p)
    support = tuple(sorted(set(support)))
    for i in support:
        if i < 1 or i % p == 0:
            raise ValueError('Exponents must be positive and coprime to p, got {0}'.format(i))
    analysis = analyze_support(p, support)
    if analysis.max_weight < 2:
        raise ValueError('The support must contain an exponent of p-adic weight at least 2')
    lower = Fraction(1, analysis.max_weight)
    base = {'p': p, 'support': support, 'lower_bound': lower}
    if not analysis.unique:
        return SlopePrediction(basis=PredictionBasis.NON_UNIQUE_MAX,
                               note='Maximal weight attained by {0}'.format(list(analysis.argmax)), **base)
    nu, s = analysis.nu, analysis.max_weight
    k = _pk_minus_one_exponent(nu, p)
    if k is not None:
        return SlopePrediction(basis=PredictionBasis.PK_MINUS_ONE, exact_slope=lower, multiplicity=k * (p - 1),
                               certificate=family_divisor_certificate(p, k, 1), **base)
    detection = detect(nu, p, k_max)
    if not isinstance(detection, NotFoundWithin):
        cert = detection.certificate
        interval = ((cert.k - cert.shift_factor) * (p - 1), nu * (p - 1))
        note = None
        if not cert.minimal:
            note = ('Certificate w={0} is not known to be minimal; '
                    'the multiplicity interval is provisional'.format(cert.w))
        return SlopePrediction(basis=PredictionBasis.UNIQUE_SYMMETRIC, exact_slope=lower,
                               multiplicity_interval=interval, certificate=cert, note=note, **base)
    if (p - 1) % s == 0:
        return SlopePrediction(basis=PredictionBasis.WEIGHT_DIVIDES_P_MINUS_ONE, exact_slope=lower,
                               certificate=weight_divides_certificate(nu, p), **base)
    if nu < p:
        return SlopePrediction(basis=PredictionBasis.UNIQUE_NOT_SYMMETRIC, strict=True,
                               note='nu={0} < p does not divide p - 1'.format(nu), **base)
    logger.info('No certificate for nu=%d, p=%d with k <= %d', nu, p, detection.k_max)
    return SlopePrediction(basis=PredictionBasis.LOWER_BOUND_ONLY,
                           note='Inconclusive: no certificate for nu={0} with k <= {1}'.format(nu, detection.k_max),
                           **base)


def predict(spec: CurveSpec, k_max: Optional[int] = None) -> SlopePrediction:
    """Predict the first slope of the curve.

    Raises:
        ValueError: The degree of f is below 3.
    """
    if spec.degree < 3:
        raise ValueError('The degree of f must be at least 3, got {0}'.format(spec.degree))
    return predict_support(spec.p, spec.support, k_max)


@dataclass(frozen=True)
class Claim:
    name: str
    status: ClaimStatus
    detail: str = ''

    def to_dict(self) -> dict:
        return {'name': self.name, 'status': self.status.value, 'detail': self.detail}

    @classmethod
    def from_dict(cls, _dict: dict) -> 'Claim':
        return cls(name=_dict['name'], status=ClaimStatus(_dict['status']), detail=_dict.get('detail', ''))


@dataclass(frozen=True)
class VerificationReport:
    """A prediction checked claim by claim against the computed Newton polygon."""
    prediction: SlopePrediction
    numerator: ZetaNumerator
    polygon: NewtonPolygonData
    claims: Tuple[Claim, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.status != ClaimStatus.FAIL for c in self.claims)

    def failures(self) -> List[Claim]:
        return [c for c in self.claims if c.status == ClaimStatus.FAIL]

    def to_dict(self) -> dict:
        """Return a json dictionary representing this report."""
        return {
            'prediction': self.prediction.to_dict(),
            'numerator': self.numerator.to_dict(),
            'polygon': self.polygon.to_dict(),
            'claims': [c.to_dict() for c in self.claims],
            'passed': self.passed,
        }

    @classmethod
    def from_dict(cls, _dict: dict) -> 'VerificationReport':
        """Initialize a VerificationReport object from a json dictionary."""
        return cls(prediction=SlopePrediction.from_dict(_dict['prediction']),
                   numerator=ZetaNumerator.from_dict(_dict['numerator']),
                   polygon=NewtonPolygonData.from_dict(_dict['polygon']),
                   claims=tuple(Claim.from_dict(c) for c in _dict['claims']))


def _status(ok: bool) -> ClaimStatus:
    return ClaimStatus.PASS if ok else ClaimStatus.FAIL


def reconcile(prediction: SlopePrediction, polygon: NewtonPolygonData, *,
              minimizer_height: Optional[int] = None) -> List[Claim]:
    """Check each claim of the prediction against a computed polygon."""
    slope, mult = first_slope(polygon)
    fs = fraction_to_string
    claims = [Claim('lower_bound', _status(slope >= prediction.lower_bound),
                    'first slope {0} >= {1}'.format(fs(slope), fs(prediction.lower_bound)))]

    if prediction.exact_slope is not None:
        claims.append(Claim('exactness', _status(slope == prediction.exact_slope),
                            'first slope {0} == {1}'.format(fs(slope), fs(prediction.exact_slope))))
    elif prediction.strict:
        claims.append(Claim('strictness', _status(slope > prediction.lower_bound),
                            'first slope {0} > {1}'.format(fs(slope), fs(prediction.lower_bound))))
    else:
        claims.append(Claim('exactness', ClaimStatus.SKIP, 'no exact slope predicted'))

    if prediction.multiplicity is not None:
        claims.append(Claim('multiplicity', _status(mult == prediction.multiplicity),
                            'multiplicity {0} == {1}'.format(mult, prediction.multiplicity)))
    elif prediction.multiplicity_interval is not None:
        low, high = prediction.multiplicity_interval
        detail = 'multiplicity {0} in [{1}, {2}]'.format(mult, low, high)
        if prediction.provisional:
            detail += ' (provisional)'
        claims.append(Claim('multiplicity', _status(low <= mult <= high), detail))
    else:
        claims.append(Claim('multiplicity', ClaimStatus.SKIP, 'no multiplicity predicted'))

    expected = prediction.predicts_supersingular()
    actual = is_supersingular(polygon)
    if expected is None:
        claims.append(Claim('supersingularity', ClaimStatus.SKIP, 'computed supersingular={0}'.format(actual)))
    else:
        claims.append(Claim('supersingularity', _status(expected == actual),
                            'supersingular {0}, predicted {1}'.format(actual, expected)))

    if minimizer_height is not None:
        p = prediction.p
        claims.append(Claim('minimizer_height', _status(mult == (p - 1) * minimizer_height),
                            'multiplicity {0} == (p - 1) * height {1}'.format(mult, minimizer_height)))
    return claims


def verify(spec: CurveSpec, k_max: Optional[int] = None, *,
           counter: Optional[PointCounter] = None,
           guard: int = DEFAULT_FIELD_SIZE_GUARD) -> VerificationReport:
    """Run predict and the zeta oracle and reconcile them; never repairs a failing claim.

    Raises:
        ValueError: The degree of f is below 3.
        ComputationException: A field exceeds the guard or the oracle is inconsistent.
    """
    prediction = predict(spec, k_max)
    numerator, _ = zeta_numerator(spec, counter=counter, guard=guard)
    polygon = newton_polygon(numerator)
    minimizer_height = None
    if prediction.basis == PredictionBasis.PK_MINUS_ONE:
        k = prediction.multiplicity // (spec.p - 1)
        minimizer_height = height(CoinSet(p=spec.p, a=k, exponent_set=spec.support))
    report = VerificationReport(prediction=prediction, numerator=numerator, polygon=polygon,
                                claims=tuple(reconcile(prediction, polygon, minimizer_height=minimizer_height)))
    logger.info('verify %s: %s', spec, 'PASS' if report.passed else 'FAIL')
    return report
