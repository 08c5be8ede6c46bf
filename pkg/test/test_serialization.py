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


import json
import os

import pytest

from artin_schreier_core.changemaking import CoinSet, TightnessReport, is_tight
from artin_schreier_core.curves import normalize, read_curve_file
from artin_schreier_core.minimizers import MaximalMinimizer, MinimizerPair, maximal_minimizer
from artin_schreier_core.predict import SlopePrediction, VerificationReport, predict_support, verify
from artin_schreier_core.psymmetry import SymmetryCertificate, detect, weight_divides_certificate
from artin_schreier_core.zeta import NewtonPolygonData, PointCountRecord, ZetaNumerator, newton_polygon, zeta_numerator

CURVES = os.path.join(os.path.dirname(__file__), '../resources/curves')


def through_json(model):
    return type(model).from_dict(json.loads(json.dumps(model.to_dict())))


def tightness_reports():
    coin_set = CoinSet(p=5, a=2, exponent_set=(26,))
    return [is_tight(coin_set, 312), is_tight(coin_set, 25), is_tight(CoinSet(p=2, a=2, exponent_set=(1, 3)), 7)]


def certificates():
    return [detect(76, 5).certificate, weight_divides_certificate(6, 5)]


def minimizers():
    return [maximal_minimizer(CoinSet(p=2, a=2, exponent_set=(3,))),
            maximal_minimizer(CoinSet(p=2, a=3, exponent_set=(1, 7)))]


def zeta_models():
    numerator, counts = zeta_numerator(read_curve_file(os.path.join(CURVES, 'x7_f2.curve')))
    return [numerator, newton_polygon(numerator)] + counts


def predictions():
    return [predict_support(2, (7,)), predict_support(2, (5,)), predict_support(5, (76,), k_max=2),
            predict_support(5, (26,), k_max=1), predict_support(5, (3,)), predict_support(5, (7,), k_max=1),
            predict_support(2, (7, 13, 19, 21))]


def reports():
    return [verify(read_curve_file(os.path.join(CURVES, 'x7_f2.curve'))), verify(normalize(3, 1, {4: 1}))]


@pytest.mark.parametrize('factory', [tightness_reports, certificates, minimizers, zeta_models, predictions, reports])
def test_json_round_trip(factory):
    models = factory()
    assert models
    for model in models:
        assert through_json(model) == model


def test_round_trip_covers_every_model():
    produced = {type(m) for factory in (tightness_reports, certificates, minimizers, zeta_models, predictions,
                                        reports) for m in factory()}
    assert produced == {TightnessReport, SymmetryCertificate, MaximalMinimizer, PointCountRecord, ZetaNumerator,
                        NewtonPolygonData, SlopePrediction, VerificationReport}


def test_minimizer_pair_round_trip():
    pair = MinimizerPair.from_cycle((1, 3, 2))
    assert through_json(pair) == pair
    assert MinimizerPair.from_dict({'support': [1, 2], 'permutation': {'1': 2, '2': 1}}).sigma(1) == 2


def test_missing_required_properties():
    with pytest.raises(ValueError) as err:
        TightnessReport.from_dict({'target': 7, 'tight': False})
    assert str(err.value) == 'Required property \'lower_bound\' not present in TightnessReport JSON'
    with pytest.raises(ValueError) as err:
        MaximalMinimizer.from_dict({'support': [1]})
    assert str(err.value) == 'Required property \'cycles\' not present in MaximalMinimizer JSON'
