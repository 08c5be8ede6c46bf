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
import os
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from .point_counter import CountingTask, PointCounter, count_range

logger = logging.getLogger(__name__)


def _count_chunk(args: Tuple[CountingTask, int, int]) -> int:
    task, start, stop = args
    return count_range(task, start, stop)


class PooledPointCounter(PointCounter):
    """Splits the enumeration into disjoint index ranges counted in a process pool.

    Partial counts are summed exactly, so the result equals the serial count.
    Fields smaller than min_parallel_size are counted in-process.

    Keyword Args:
        workers: Process count, 0 or None for one per CPU. Defaults to None.
        min_parallel_size: Smallest field worth dispatching to the pool. Defaults to 4096.
        chunks_per_worker: Ranges handed to each worker. Defaults to 4.

    Raises:
        ValueError: A setting is negative or zero where a positive value is needed.
    """
    counter_type = 'pooled'

    def __init__(self,
                 *,
                 workers: Optional[int] = None,
                 min_parallel_size: int = 4096,
                 chunks_per_worker: int = 4) -> None:
        self.workers = workers or os.cpu_count() or 1
        self.min_parallel_size = min_parallel_size
        self.chunks_per_worker = chunks_per_worker
        self.validate()

    def validate(self) -> None:
        if self.workers < 1:
            raise ValueError('workers must be positive')
        if self.min_parallel_size < 1:
            raise ValueError('min_parallel_size must be positive')
        if self.chunks_per_worker < 1:
            raise ValueError('chunks_per_worker must be positive')

    def ranges(self, size: int) -> List[Tuple[int, int]]:
        """Disjoint [start, stop) ranges covering 0..size."""
        parts = min(size, self.workers * self.chunks_per_worker)
        bounds = [size * t // parts for t in range(parts + 1)]
        return [(bounds[t], bounds[t + 1]) for t in range(parts) if bounds[t] < bounds[t + 1]]

    def count_zero_traces(self, task: CountingTask) -> int:
        if self.workers == 1 or task.size < self.min_parallel_size:
            return count_range(task, 0, task.size)
        jobs = [(task, start, stop) for start, stop in self.ranges(task.size)]
        logger.debug('Counting F_%d^%d in %d ranges on %d workers', task.field.p, task.field.m, len(jobs),
                     self.workers)
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            return sum(executor.map(_count_chunk, jobs))
