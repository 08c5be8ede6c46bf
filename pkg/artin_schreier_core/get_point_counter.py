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

from typing import Optional

from .counters import PointCounter, PooledPointCounter, SerialPointCounter
from .run_config import RunConfig
from .utils import DEFAULT_CONFIG_NAME


def get_point_counter(config: Optional[RunConfig] = None) -> PointCounter:
    """Construct the point counter a run configuration asks for.

    Args:
        config: The run configuration. Defaults to RunConfig().

    Returns:
        A SerialPointCounter or a PooledPointCounter.
    """
    config = config or RunConfig()
    if config.resolved_counter_type() == 'serial':
        return SerialPointCounter()
    return PooledPointCounter(workers=config.threads or None)


def get_point_counter_from_environment(name: str = DEFAULT_CONFIG_NAME) -> PointCounter:
    """Look for external configuration of the point counter.

    Try to get the configuration from external sources, with the following priority:
    1. Config file (artin-schreier.env)
    2. Environment variables

    Args:
        name: The configuration name.

    Returns:
        The point counter found from the configuration.
    """
    return get_point_counter(RunConfig().configure(name))
