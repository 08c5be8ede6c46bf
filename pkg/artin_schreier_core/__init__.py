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
"""Exact p-adic combinatorics and first Newton-polygon slopes of Artin-Schreier curves.

classes:
    DigitForm: A base-p digit sequence.
    CoinSet: The coin system {i * p^j}.
    ChangeMakingTable: Shared dynamic-programming table of solution values.
    SymmetryCertificate: Witness of a carry-free product nu * w = (p^k - 1) * ell.
    MinimizerPair: A permutation pair checked against the weight lower bound.
    FieldContext: Arithmetic in F_{p^m}.
    CurveSpec: The curve y^p - y = f(x) in normalized form.
    ZetaNumerator: The integer numerator of the zeta function.
    NewtonPolygonData: Points, hull vertices and slopes of a Newton polygon.
    SlopePrediction: What the support of f says about the first slope.
    VerificationReport: A prediction reconciled with the zeta oracle.
    RunConfig: Guard, search bound and counting back end of a run.
    DetailedReport: The object emitted by CLI commands.
    ComputationException: Custom exception class for failed or inconsistent computations.

functions:
    weight: The base-p digit sum.
    solution_value: Minimal number of coins summing to N.
    detect: Search for the minimal p-symmetry certificate.
    census: The p-symmetric numbers with a given digit count.
    maximal_minimizer: The maximal minimizer of a coin set.
    make_field: The default model of F_{p^m}.
    normalize: Bring f to the form with every exponent coprime to p.
    count_points: Exact point count over F_{q^m}.
    zeta_numerator: Count and reconstruct the numerator.
    newton_polygon: Lower hull of the q-adic valuations.
    predict: Predict the first slope.
    verify: Check a prediction against the oracle.
    datetime_to_string: Serialize a datetime to a string.
    string_to_datetime: De-serialize a string to a datetime.
    fraction_to_string: Serialize an exact rational.
    string_to_fraction: De-serialize an exact rational.
    parse_int_list: Split a comma-separated list of integers.
    read_external_sources: Get config object from external sources.
    get_point_counter_from_environment: Get the point counter from external sources.
"""

from .padic import DigitForm, to_digit_form, weight, is_carryfree_add, is_carryfree_mul, digit_reverse
from .changemaking import CoinSet, ChangeMakingTable, Representation, solution_value, solve, is_tight
from .psymmetry import SymmetryCertificate, detect, census, minimal_factorization
from .minimizers import MinimizerPair, maximal_minimizer, height, is_minimizer
from .finitefield import FieldContext, make_field
from .curves import CurveSpec, normalize, read_curve_file
from .zeta import ZetaNumerator, NewtonPolygonData, count_points, zeta_numerator, newton_polygon
from .zeta import first_slope, is_supersingular
from .predict import SlopePrediction, VerificationReport, predict, verify
from .run_config import RunConfig
from .detailed_report import DetailedReport
from .computation_exception import ComputationException
from .utils import datetime_to_string, string_to_datetime, fraction_to_string, string_to_fraction
from .utils import parse_int_list, read_external_sources
from .get_point_counter import get_point_counter, get_point_counter_from_environment
from .version import __version__
