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

import logging
from typing import Optional

from .utils import DEFAULT_CONFIG_NAME, read_external_sources

logger = logging.getLogger(__name__)

DEFAULT_FIELD_SIZE_GUARD = 2**26
OUTPUT_MODES = ('human', 'json')
COUNTER_TYPES = ('serial', 'pooled')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


class RunConfig:
    """Run-wide settings shared by the library entry points and the CLI.

    Keyword Args:
        field_size_guard: Largest field (number of elements) the point counter may enumerate.
            Defaults to 2**26.
        k_max: Search bound for p-symmetry detection. Defaults to None (per-call default).
        threads: Worker count for point counting, 0 means one per CPU. Defaults to 0.
        output: 'human' or 'json'. Defaults to 'human'.
        counter_type: 'serial' or 'pooled'. Defaults to None (derived from threads).
        log_level: Name of the logging level. Defaults to 'WARNING'.

    Raises:
        ValueError: A setting is out of range.
        TypeError: A setting has the wrong type.
    """

    def __init__(self,
                 *,
                 field_size_guard: int = DEFAULT_FIELD_SIZE_GUARD,
                 k_max: Optional[int] = None,
                 threads: int = 0,
                 output: str = 'human',
                 counter_type: Optional[str] = None,
                 log_level: str = 'WARNING') -> None:
        self.field_size_guard = None
        self.k_max = None
        self.threads = None
        self.output = None
        self.counter_type = None
        self.log_level = None
        self.set_field_size_guard(field_size_guard)
        self.set_k_max(k_max)
        self.set_threads(threads)
        self.set_output(output)
        self.set_counter_type(counter_type)
        self.set_log_level(log_level)

    def configure(self, name: str = DEFAULT_CONFIG_NAME) -> 'RunConfig':
        """Look for external configuration and apply it.

        Try to get config from external sources, with the following priority:
        1. Config file (artin-schreier.env)
        2. Environment variables

        Args:
            name: The configuration name, used as the key prefix.

        Returns:
            This config, for chaining.

        Raises:
            ValueError: If name is not a string or a value found is invalid.
        """
        if not isinstance(name, str):
            raise ValueError('Config name must be of type string.')

        config = read_external_sources(name)
        logger.debug('External configuration keys: %s', sorted(config))
        if config.get('FIELD_SIZE_GUARD'):
            self.set_field_size_guard(_to_int('FIELD_SIZE_GUARD', config.get('FIELD_SIZE_GUARD')))
        if config.get('K_MAX'):
            self.set_k_max(_to_int('K_MAX', config.get('K_MAX')))
        if config.get('THREADS'):
            self.set_threads(_to_int('THREADS', config.get('THREADS')))
        if config.get('OUTPUT'):
            self.set_output(config.get('OUTPUT').lower())
        if config.get('COUNTER_TYPE'):
            self.set_counter_type(config.get('COUNTER_TYPE').lower())
        if config.get('LOG_LEVEL'):
            self.set_log_level(config.get('LOG_LEVEL'))
        return self

    def set_field_size_guard(self, field_size_guard: int) -> None:
        """Set the largest field the point counter may enumerate.

        Raises:
            TypeError: field_size_guard is not an int.
            ValueError: field_size_guard is not positive.
        """
        if not isinstance(field_size_guard, int) or isinstance(field_size_guard, bool):
            raise TypeError('field_size_guard must be an int')
        if field_size_guard < 1:
            raise ValueError('field_size_guard must be positive')
        self.field_size_guard = field_size_guard

    def set_k_max(self, k_max: Optional[int]) -> None:
        """Set the p-symmetry search bound, None restores the per-call default.

        Raises:
            TypeError: k_max is not an int.
            ValueError: k_max is not positive.
        """
        if k_max is None:
            self.k_max = None
            return
        if not isinstance(k_max, int) or isinstance(k_max, bool):
            raise TypeError('k_max must be an int')
        if k_max < 1:
            raise ValueError('k_max must be positive')
        self.k_max = k_max

    def set_threads(self, threads: int) -> None:
        """Set the worker count, 0 means one per CPU.

        Raises:
            TypeError: threads is not an int.
            ValueError: threads is negative.
        """
        if not isinstance(threads, int) or isinstance(threads, bool):
            raise TypeError('threads must be an int')
        if threads < 0:
            raise ValueError('threads must not be negative')
        self.threads = threads

    def set_output(self, output: str) -> None:
        if output not in OUTPUT_MODES:
            raise ValueError('output must be one of {0}'.format(', '.join(OUTPUT_MODES)))
        self.output = output

    def set_counter_type(self, counter_type: Optional[str]) -> None:
        if counter_type is not None and counter_type not in COUNTER_TYPES:
            raise ValueError('counter_type must be one of {0}'.format(', '.join(COUNTER_TYPES)))
        self.counter_type = counter_type

    def set_log_level(self, log_level: str) -> None:
        if not isinstance(log_level, str) or log_level.upper() not in LOG_LEVELS:
            raise ValueError('log_level must be one of {0}'.format(', '.join(LOG_LEVELS)))
        self.log_level = log_level.upper()

    def resolved_counter_type(self) -> str:
        """The counter type to use: explicit setting first, else pooled iff threads != 1."""
        if self.counter_type is not None:
            return self.counter_type
        return 'serial' if self.threads == 1 else 'pooled'

    def to_dict(self) -> dict:
        """Return a json dictionary representing this config."""
        return {
            'field_size_guard': self.field_size_guard,
            'k_max': self.k_max,
            'threads': self.threads,
            'output': self.output,
            'counter_type': self.counter_type,
            'log_level': self.log_level,
        }

    @classmethod
    def from_dict(cls, _dict: dict) -> 'RunConfig':
        """Initialize a RunConfig object from a json dictionary."""
        args = {k: v for k, v in _dict.items() if v is not None}
        return cls(**args)


def _to_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ValueError('{0} must be an integer, got \'{1}\''.format(key, value)) from None
