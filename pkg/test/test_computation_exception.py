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

from artin_schreier_core import ComputationException


def test_computation_exception():
    exception = ComputationException(ComputationException.GUARD_EXCEEDED)
    assert exception.code == 3
    assert exception.message == 'Field size exceeds the configured guard'
    assert exception.details is None
    assert str(exception) == 'Error: Field size exceeds the configured guard, Code: 3'

    exception = ComputationException(ComputationException.ORACLE_INCONSISTENT, message='Newton identity failed',
                                     details={'numerator': 7, 'm': 2})
    assert exception.message == 'Newton identity failed'
    assert str(exception) == 'Error: Newton identity failed, Code: 4 , Details: m=2, numerator=7'

    assert ComputationException(99).message == 'Unknown error'
    assert ComputationException(ComputationException.USAGE).message == 'Invalid usage'
    assert ComputationException(ComputationException.VERIFICATION_FAILED).code == 1
