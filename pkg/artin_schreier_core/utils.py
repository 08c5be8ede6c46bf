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
from fractions import Fraction
from os import getenv, environ, getcwd
from os.path import isfile, join, expanduser
from typing import List, Optional, Union

import dateutil.parser as date_parser

DEFAULT_CONFIG_NAME = 'artin_schreier'
DEFAULT_CONFIG_FILE_NAME = 'artin-schreier.env'


def remove_null_values(dictionary: dict) -> dict:
    """Drop the None-valued keys of a to_dict() payload; anything that is not a dict passes through."""
    if not isinstance(dictionary, dict):
        return dictionary
    return {key: value for key, value in dictionary.items() if value is not None}


def datetime_to_string(val: datetime.datetime) -> str:
    """Render a report timestamp as ISO-8601 in UTC with a 'Z' suffix.

    Naive datetimes are taken to be UTC already. Values that are not datetimes are returned unchanged.
    """
    if not isinstance(val, datetime.datetime):
        return val
    if val.tzinfo is not None:
        val = val.astimezone(datetime.timezone.utc).replace(tzinfo=None)
    return val.isoformat() + 'Z'


def string_to_datetime(string: str) -> datetime.datetime:
    """Parse an ISO-8601 report timestamp, attaching UTC when it carries no offset."""
    parsed = date_parser.parse(string)
    return parsed if parsed.tzinfo is not None else parsed.replace(tzinfo=datetime.timezone.utc)



def fraction_to_string(val: Optional[Fraction]) -> Optional[str]:
    """Serialize an exact rational as 'n/d' (or 'n' for integers)."""
    if val is None:
        return None
    return str(Fraction(val))


def string_to_fraction(string: Optional[Union[str, int]]) -> Optional[Fraction]:
    """De-serialize the output of fraction_to_string."""
    if string is None:
        return None
    return Fraction(string)


def parse_int_list(val: Union[str, List[int]]) -> List[int]:
    """Convert a comma-separated string of integers into a list.

    Arguments:
        val: A string such as '21,19,13' or an already parsed list.

    Returns:
        The list of integers.

    Raises:
        ValueError: An item is not an integer.
    """
    if isinstance(val, list):
        return [int(x) for x in val]
    items = [x.strip() for x in val.split(',') if x.strip()]
    try:
        return [int(x) for x in items]
    except ValueError:
        raise ValueError('Expected a comma-separated list of integers, got \'{0}\''.format(val)) from None


def read_external_sources(name: str = DEFAULT_CONFIG_NAME) -> dict:
    """Look for external configuration.

    Try to get config from external sources, with the following priority:
    1. Config file (artin-schreier.env)
    2. Environment variables

    Args:
        name: The configuration name, used as the key prefix.

    Returns:
        A dictionary containing the configuration found, keyed without the prefix.
    """
    config = __read_from_config_file(name)

    if not config:
        config = __read_from_env_variables(name)

    return config


def __read_from_env_variables(name: str) -> dict:
    """Return a config object based on environment variables.

    Args:
        name: The prefix to look for in env variables.

    Returns:
        A set of configuration key-value pairs.
    """
    config = {}
    for key, value in environ.items():
        _parse_key_and_update_config(config, name, key, value)
    return config


def __read_from_config_file(name: str,
                            *,
                            separator: str = '=') -> dict:
    """Return a config object based on the config file.

    Args:
        name: The prefix to look for in the file's keys.

    Keyword Args:
        separator: The character to split on to de-serialize a line into a key-value pair.

    Returns:
        A set of configuration key-value pairs.
    """
    # 1. ${ARTIN_SCHREIER_CONFIG_FILE}
    config_file_path = getenv('ARTIN_SCHREIER_CONFIG_FILE')

    # 2. <current-working-directory>/artin-schreier.env
    if config_file_path is None:
        file_path = join(getcwd(), DEFAULT_CONFIG_FILE_NAME)
        if isfile(file_path):
            config_file_path = file_path

    # 3. <user-home-directory>/artin-schreier.env
    if config_file_path is None:
        file_path = join(expanduser('~'), DEFAULT_CONFIG_FILE_NAME)
        if isfile(file_path):
            config_file_path = file_path

    config = {}
    if config_file_path is not None:
        try:
            with open(config_file_path, 'r') as fobj:
                for line in fobj:
                    if line.lstrip().startswith('#'):
                        continue
                    key_val = line.strip().split(separator, 1)
                    if len(key_val) == 2:
                        _parse_key_and_update_config(config, name, key_val[0].strip(), key_val[1].strip())
        except OSError:
            # just absorb the exception and make sure we return an empty response
            config = {}

    return config


def _parse_key_and_update_config(config: dict, name: str, key: str,
                                 value: str) -> None:
    name = name.replace(' ', '_').replace('-', '_').upper()
    if key.startswith(name + '_'):
        config[key[len(name) + 1:]] = value
