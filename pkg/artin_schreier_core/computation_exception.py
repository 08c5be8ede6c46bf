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


class ComputationException(Exception):
    """Custom exception class for failed or self-inconsistent computations.

    Args:
        code: One of the class level codes, doubles as the CLI exit status family.
        message: A description of the failure. Defaults to None.
        details: Structured diagnostics (counts, coefficients, offending values). Defaults to None.

    Attributes:
        code (int): The failure code.
        message (str): A description of the failure.
        details (dict): Structured diagnostics attached by the raising site.
    """
    VERIFICATION_FAILED = 1
    USAGE = 2
    GUARD_EXCEEDED = 3
    ORACLE_INCONSISTENT = 4

    _DEFAULT_MESSAGES = {
        VERIFICATION_FAILED: 'A predicted claim failed against the zeta oracle',
        USAGE: 'Invalid usage',
        GUARD_EXCEEDED: 'Field size exceeds the configured guard',
        ORACLE_INCONSISTENT: 'Internal consistency check failed',
    }

    def __init__(self, code: int, *, message: Optional[str] = None, details: Optional[dict] = None) -> None:
        # Call the base class constructor with the parameters it needs
        super().__init__(message)
        self.code = code
        self.details = details
        self.message = message if message else self._get_error_message(code)

    def __str__(self) -> str:
        msg = 'Error: ' + str(self.message) + ', Code: ' + str(self.code)
        if self.details:
            msg += ' , Details: ' + ', '.join('{0}={1}'.format(k, v) for k, v in sorted(self.details.items()))
        return msg

    @classmethod
    def _get_error_message(cls, code: int) -> str:
        return cls._DEFAULT_MESSAGES.get(code, 'Unknown error')
