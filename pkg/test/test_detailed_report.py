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

import datetime
import json

from artin_schreier_core import DetailedReport, __version__


def test_detailed_report_dict():
    generated_at = datetime.datetime(2021, 6, 20, 4, 25, 16, tzinfo=datetime.timezone.utc)
    report = DetailedReport(result={'weight': 8}, command='weight', exit_code=0, generated_at=generated_at)
    assert report.get_result() == {'weight': 8}
    assert report.get_exit_code() == 0
    assert report.to_dict() == {
        'result': {'weight': 8},
        'metadata': {'command': 'weight', 'version': __version__, 'generated_at': '2021-06-20T04:25:16Z'},
        'exit_code': 0,
    }
    assert json.loads(str(report)) == report.to_dict()
    assert DetailedReport.from_dict(report.to_dict()) == report


def test_detailed_report_defaults():
    report = DetailedReport()
    data = report.to_dict()
    assert 'result' not in data
    assert 'exit_code' not in data
    assert data['metadata']['version'] == __version__
    assert report.generated_at.tzinfo is not None
    assert report != {'metadata': data['metadata']}
