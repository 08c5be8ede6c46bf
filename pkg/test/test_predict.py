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

import os
from fractions import Fraction

import pytest

from artin_schreier_core.curves import normalize, read_curve_file
from artin_schreier_core.predict import (Claim, ClaimStatus, PredictionBasis, SlopePrediction, VerificationReport,
                                         predict, predict_support, reconcile, verify)
from artin_schreier_core.zeta import ZetaNumerator, newton_polygon

CURVES = os.path.join(os.path.dirname(__file__), '../resources/curves')


def test_predict_pk_minus_one():
    prediction = predict_support(2, (7,))
    assert prediction.basis == PredictionBasis.PK_MINUS_ONE
    assert prediction.lower_bound == Fraction(1, 3)
    assert prediction.exact_slope == Fraction(1, 3)
    assert prediction.multiplicity == 3
    assert (prediction.certificate.nu, prediction.certificate.w, prediction.certificate.k) == (7, 1, 3)
    assert prediction.predicts_supersingular() is False

    prediction = predict_support(3, (8, 4))
    assert prediction.basis == PredictionBasis.PK_MINUS_ONE
    assert prediction.multiplicity == 4


def test_predict_unique_symmetric():
    prediction = predict_support(2, (5,))
    assert prediction.basis == PredictionBasis.UNIQUE_SYMMETRIC
    assert prediction.exact_slope == Fraction(1, 2)
    assert prediction.multiplicity_interval == (3, 5)
    assert prediction.certificate.shift_factor == 1
    assert prediction.predicts_supersingular() is True

    prediction = predict_support(3, (4,))
    assert prediction.multiplicity_interval == (2, 8)
    assert (prediction.certificate.w, prediction.certificate.k, prediction.certificate.ell) == (1, 1, 2)


def test_predict_weight_divides_p_minus_one():
    prediction = predict_support(5, (26,), k_max=1)
    assert prediction.basis == PredictionBasis.WEIGHT_DIVIDES_P_MINUS_ONE
    assert prediction.exact_slope == Fraction(1, 2)
    assert (prediction.certificate.w, prediction.certificate.k, prediction.certificate.ell) == (62, 3, 13)


def test_predict_unique_not_symmetric():
    prediction = predict_support(5, (3,))
    assert prediction.basis == PredictionBasis.UNIQUE_NOT_SYMMETRIC
    assert prediction.strict
    assert prediction.exact_slope is None
    assert prediction.note == 'nu=3 < p does not divide p - 1'
    assert prediction.predicts_supersingular() is None


def test_predict_lower_bound_only():
    prediction = predict_support(5, (7,), k_max=1)
    assert prediction.basis == PredictionBasis.LOWER_BOUND_ONLY
    assert prediction.lower_bound == Fraction(1, 3)
    assert prediction.note == 'Inconclusive: no certificate for nu=7 with k <= 1'
    assert not prediction.strict


def test_predict_non_unique_max():
    prediction = predict(read_curve_file(os.path.join(CURVES, 'nonunique_f2.curve')))
    assert prediction.basis == PredictionBasis.NON_UNIQUE_MAX
    assert prediction.lower_bound == Fraction(1, 3)
    assert prediction.note == 'Maximal weight attained by [7, 13, 19, 21]'
    assert prediction.to_dict()['basis'] == 'NonUniqueMax'


def test_predict_validation():
    with pytest.raises(ValueError) as err:
        predict_support(5, (10,))
    assert str(err.value) == 'Exponents must be positive and coprime to p, got 10'
    with pytest.raises(ValueError) as err:
        predict_support(2, (1,))
    assert str(err.value) == 'The support must contain an exponent of p-adic weight at least 2'
    with pytest.raises(ValueError) as err:
        predict(normalize(3, 1, {2: 1}))
    assert str(err.value) == 'The degree of f must be at least 3, got 2'


def test_slope_prediction_validation():
    third = Fraction(1, 3)
    with pytest.raises(ValueError) as err:
        SlopePrediction(p=2, support=(7,), lower_bound=third, basis=PredictionBasis.PK_MINUS_ONE,
                        exact_slope=third, strict=True)
    assert str(err.value) == 'An exact slope cannot be a strict prediction'
    with pytest.raises(ValueError) as err:
        SlopePrediction(p=2, support=(7,), lower_bound=third, basis=PredictionBasis.PK_MINUS_ONE,
                        exact_slope=Fraction(1, 2))
    assert str(err.value) == 'exact_slope must equal lower_bound'
    with pytest.raises(ValueError) as err:
        SlopePrediction(p=2, support=(5,), lower_bound=Fraction(1, 2), basis=PredictionBasis.UNIQUE_SYMMETRIC,
                        multiplicity_interval=(5, 3))
    assert str(err.value) == 'multiplicity_interval must not be empty'


def test_slope_prediction_dict():
    prediction = predict_support(2, (5,))
    data = prediction.to_dict()
    assert data['lower_bound'] == '1/2'
    assert data['multiplicity_interval'] == [3, 5]
    assert 'multiplicity' not in data
    assert SlopePrediction.from_dict(data) == prediction
    with pytest.raises(ValueError) as err:
        SlopePrediction.from_dict({'p': 2})
    assert str(err.value) == 'Required property \'support\' not present in SlopePrediction JSON'


def test_reconcile_reports_failures():
    prediction = predict_support(2, (7,))
    polygon = newton_polygon(ZetaNumerator(coefficients=(1, 0, 2), p=2, a=1))
    claims = reconcile(prediction, polygon)
    assert [(c.name, c.status) for c in claims] == [
        ('lower_bound', ClaimStatus.PASS),
        ('exactness', ClaimStatus.FAIL),
        ('multiplicity', ClaimStatus.FAIL),
        ('supersingularity', ClaimStatus.FAIL),
    ]
    assert claims[1].detail == 'first slope 1/2 == 1/3'
    claims = reconcile(prediction, polygon, minimizer_height=3)
    assert claims[-1] == Claim('minimizer_height', ClaimStatus.FAIL, 'multiplicity 2 == (p - 1) * height 3')


def test_verify_pk_minus_one():
    report = verify(read_curve_file(os.path.join(CURVES, 'x7_f2.curve')))
    assert report.passed
    assert report.failures() == []
    assert [c.name for c in report.claims] == ['lower_bound', 'exactness', 'multiplicity', 'supersingularity',
                                               'minimizer_height']
    assert report.numerator.coefficients == (1, 0, 0, -2, 0, 0, 8)
    data = report.to_dict()
    assert data['passed']
    assert VerificationReport.from_dict(data) == report


def test_verify_unique_symmetric_and_strict():
    report = verify(normalize(2, 1, {5: 1}))
    assert report.passed
    assert report.prediction.basis == PredictionBasis.UNIQUE_SYMMETRIC
    assert all(c.status == ClaimStatus.PASS for c in report.claims)

    report = verify(read_curve_file(os.path.join(CURVES, 'x3_f5.curve')))
    assert report.passed
    statuses = {c.name: c.status for c in report.claims}
    assert statuses['strictness'] == ClaimStatus.PASS
    assert statuses['multiplicity'] == ClaimStatus.SKIP
    assert statuses['supersingularity'] == ClaimStatus.SKIP


def test_verify_multiplicity_interval():
    report = verify(normalize(3, 1, {4: 1}))
    assert report.passed
    claim = [c for c in report.claims if c.name == 'multiplicity'][0]
    assert claim.status == ClaimStatus.PASS
    assert claim.detail.endswith('in [2, 8]')


def test_interval_from_non_minimal_certificate_is_provisional():
    # with k <= 2 the search cannot rule out a smaller witness for 76 = (301)_5
    prediction = predict_support(5, (76,), k_max=2)
    assert prediction.basis == PredictionBasis.UNIQUE_SYMMETRIC
    cert = prediction.certificate
    assert (cert.w, cert.k, cert.ell, cert.minimal) == (6, 2, 19, False)
    assert prediction.multiplicity_interval == (4, 304)
    assert prediction.provisional
    assert prediction.note == 'Certificate w=6 is not known to be minimal; the multiplicity interval is provisional'
    data = prediction.to_dict()
    assert data['provisional'] is True
    assert SlopePrediction.from_dict(data) == prediction

    polygon = newton_polygon(ZetaNumerator(coefficients=(1, 0, 0, 0, 5, 0, 0, 0, 625), p=5, a=1))
    claim = [c for c in reconcile(prediction, polygon) if c.name == 'multiplicity'][0]
    assert claim == Claim('multiplicity', ClaimStatus.PASS, 'multiplicity 4 in [4, 304] (provisional)')

    prediction = predict_support(5, (76,))
    assert prediction.certificate.minimal
    assert not prediction.provisional
    assert prediction.note is None
    assert 'provisional' not in prediction.to_dict()
