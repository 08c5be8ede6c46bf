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

import pytest

from artin_schreier_core import RunConfig, get_point_counter, get_point_counter_from_environment
from artin_schreier_core.counters import PooledPointCounter, SerialPointCounter
from artin_schreier_core.run_config import DEFAULT_FIELD_SIZE_GUARD

RESOURCES = os.path.join(os.path.dirname(__file__), '../resources')


def test_defaults():
    config = RunConfig()
    assert config.field_size_guard == DEFAULT_FIELD_SIZE_GUARD == 2**26
    assert config.k_max is None
    assert config.threads == 0
    assert config.output == 'human'
    assert config.log_level == 'WARNING'
    assert config.resolved_counter_type() == 'pooled'
    assert RunConfig(threads=1).resolved_counter_type() == 'serial'
    assert RunConfig(threads=1, counter_type='pooled').resolved_counter_type() == 'pooled'
    assert RunConfig.from_dict(config.to_dict()).to_dict() == config.to_dict()


def test_setters_validate():
    config = RunConfig()
    with pytest.raises(TypeError) as err:
        config.set_field_size_guard('big')
    assert str(err.value) == 'field_size_guard must be an int'
    with pytest.raises(ValueError) as err:
        config.set_field_size_guard(0)
    assert str(err.value) == 'field_size_guard must be positive'
    with pytest.raises(ValueError) as err:
        config.set_k_max(0)
    assert str(err.value) == 'k_max must be positive'
    with pytest.raises(TypeError):
        config.set_k_max(True)
    with pytest.raises(ValueError) as err:
        config.set_threads(-1)
    assert str(err.value) == 'threads must not be negative'
    with pytest.raises(ValueError) as err:
        config.set_output('xml')
    assert str(err.value) == 'output must be one of human, json'
    with pytest.raises(ValueError) as err:
        config.set_counter_type('gpu')
    assert str(err.value) == 'counter_type must be one of serial, pooled'
    with pytest.raises(ValueError) as err:
        config.set_log_level('chatty')
    assert str(err.value) == 'log_level must be one of DEBUG, INFO, WARNING, ERROR, CRITICAL'
    config.set_log_level('debug')
    assert config.log_level == 'DEBUG'


def test_configure_from_file():
    os.environ['ARTIN_SCHREIER_CONFIG_FILE'] = os.path.join(RESOURCES, 'artin-schreier.env')
    config = RunConfig().configure()
    assert config.field_size_guard == 1048576
    assert config.k_max == 12
    assert config.threads == 1
    assert config.output == 'json'
    assert config.log_level == 'INFO'
    assert isinstance(get_point_counter(config), SerialPointCounter)
    assert isinstance(get_point_counter_from_environment(), SerialPointCounter)

    config = RunConfig().configure('desk-run')
    assert config.field_size_guard == 4096
    assert config.counter_type == 'pooled'
    counter = get_point_counter(config)
    assert isinstance(counter, PooledPointCounter)
    assert counter.workers == 2
    del os.environ['ARTIN_SCHREIER_CONFIG_FILE']


def test_configure_rejects_bad_values():
    os.environ['ARTIN_SCHREIER_CONFIG_FILE'] = os.path.join(RESOURCES, 'artin-schreier-bad.env')
    with pytest.raises(ValueError) as err:
        RunConfig().configure()
    assert str(err.value) == 'FIELD_SIZE_GUARD must be an integer, got \'lots\''
    del os.environ['ARTIN_SCHREIER_CONFIG_FILE']
    with pytest.raises(ValueError) as err:
        RunConfig().configure(None)
    assert str(err.value) == 'Config name must be of type string.'


def test_configure_from_environment():
    os.environ['ARTIN_SCHREIER_CONFIG_FILE'] = os.path.join(RESOURCES, 'no-such.env')
    os.environ['SWEEP_THREADS'] = '3'
    os.environ['SWEEP_K_MAX'] = '9'
    config = RunConfig().configure('sweep')
    assert config.threads == 3
    assert config.k_max == 9
    assert config.field_size_guard == DEFAULT_FIELD_SIZE_GUARD
    del os.environ['SWEEP_THREADS']
    del os.environ['SWEEP_K_MAX']
    del os.environ['ARTIN_SCHREIER_CONFIG_FILE']
