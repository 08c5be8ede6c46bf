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
"""The artin_schreier_core project supports the following point-counting back ends:

  Serial (in-process enumeration)
  Pooled (disjoint index ranges counted in a process pool)

  Both count x in a finite field with Tr(f(x)) = 0 and return identical results;
  the choice only affects throughput.

classes:
  PointCounter: Abstract Base Class. Implement this interface to provide other enumeration strategies.
  CountingTask: The field and the polynomial to count over.
  SerialPointCounter: Counts in the calling process.
  PooledPointCounter: Counts in a process pool and sums the partial counts.

functions:
  count_range: Zero-trace count over a range of element indices.
"""

from .point_counter import CountingTask, PointCounter, count_range
from .serial_point_counter import SerialPointCounter
from .pooled_point_counter import PooledPointCounter
