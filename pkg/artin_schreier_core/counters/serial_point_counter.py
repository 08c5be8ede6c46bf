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

from .point_counter import CountingTask, PointCounter, count_range


class SerialPointCounter(PointCounter):
    """Enumerates the whole field in the calling process."""
    counter_type = 'serial'

    def validate(self) -> None:
        pass

    def count_zero_traces(self, task: CountingTask) -> int:
        return count_range(task, 0, task.size)
