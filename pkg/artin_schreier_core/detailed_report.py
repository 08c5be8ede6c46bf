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
from typing import Optional

from .utils import datetime_to_string, string_to_datetime, remove_null_values
from .version import __version__


class DetailedReport:
    """Custom class for the detailed report returned from CLI commands.

    Keyword Args:
        result: The JSON-ready result of the command, defaults to None.
        command: The name of the command that produced it, defaults to None.
        exit_code: The exit code the command finishes with, defaults to None.
        generated_at: When the report was produced, defaults to now (UTC).

    Attributes:
        result (dict): The JSON-ready result of the command.
        command (str): The name of the command.
        exit_code (int): The exit code of the command.
        generated_at (datetime.datetime): Creation time of the report.
        version (str): The package version that produced the report.
    """
    def __init__(self,
                 *,
                 result: Optional[dict] = None,
                 command: Optional[str] = None,
                 exit_code: Optional[int] = None,
                 generated_at: Optional[datetime.datetime] = None,
                 version: str = __version__) -> None:
        self.result = result
        self.command = command
        self.exit_code = exit_code
        self.generated_at = generated_at or datetime.datetime.now(datetime.timezone.utc)
        self.version = version

    def get_result(self) -> dict:
        """Get the result of the command.

        Returns:
            The JSON-ready result
        """
        return self.result

    def get_exit_code(self) -> int:
        """The exit code of the command.

        Returns:
            The exit code.
        """
        return self.exit_code

    def to_dict(self) -> dict:
        """Return a json dictionary representing this report."""
        return remove_null_values({
            'result': self.result,
            'metadata': remove_null_values({
                'command': self.command,
                'version': self.version,
                'generated_at': datetime_to_string(self.generated_at),
            }),
            'exit_code': self.exit_code,
        })

    @classmethod
    def from_dict(cls, _dict: dict) -> 'DetailedReport':
        """Initialize a DetailedReport object from a json dictionary."""
        metadata = _dict.get('metadata', {})
        generated_at = metadata.get('generated_at')
        return cls(result=_dict.get('result'),
                   command=metadata.get('command'),
                   exit_code=_dict.get('exit_code'),
                   generated_at=string_to_datetime(generated_at) if generated_at else None,
                   version=metadata.get('version', __version__))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DetailedReport):
            return False
        return self.to_dict() == other.to_dict()

    def __str__(self) -> str:
        return json.dumps(self.to_dict(), indent=4, sort_keys=True)
