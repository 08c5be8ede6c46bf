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

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Tuple

from ..finitefield import Element, FieldContext, enumerate_elements, evaluate_poly, trace_to_prime


@dataclass(frozen=True)
class CountingTask:
    """Count x in F_{p^m} with Tr(f(x)) = 0, where f already has coefficients in that field.

    Attributes:
        field (FieldContext): The field enumerated.
        terms (tuple): Pairs (exponent, coefficient) of f, exponents >= 0.
    """
    field: FieldContext
    terms: Tuple[Tuple[int, Element], ...]

    @property
    def size(self) -> int:
        return self.field.size

    def coefficients(self) -> Dict[int, Element]:
        return dict(self.terms)


def count_range(task: CountingTask, start: int, stop: int) -> int:
    """Zero-trace count over the elements with index in [start, stop)."""
    ctx = task.field
    terms = task.coefficients()
    constant = terms.pop(0, ())
    count = 0
    for x in enumerate_elements(ctx, start, stop):
        value = evaluate_poly(ctx, terms, x) if terms else ()
        if constant:
            value = ctx.add(value, constant)
        if trace_to_prime(ctx, value) == 0:
            count += 1
    return count


class PointCounter(ABC):
    """This interface defines the common methods associated with a point-counting back end."""
    @abstractmethod
    def count_zero_traces(self, task: CountingTask) -> int:
        """Return #{x : Tr(f(x)) = 0} over the task's field.

        Results must not depend on how the enumeration is split.

        To be implemented by subclasses.
        """
        pass

    @abstractmethod
    def validate(self) -> None:
        """Validates the current configuration of the counter.

        Raises:
            ValueError: The configuration is not usable.

        To be implemented by subclasses.
        """
        pass
