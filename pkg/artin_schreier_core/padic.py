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
"""Base-p digit arithmetic: weights, carries and carry-free predicates.

Digits are stored least-significant first and zero is the empty sequence.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import isprime


def validate_prime(p: int) -> None:
    """Reject anything that is not a prime integer.

    Raises:
        TypeError: p is not an int.
        ValueError: p is not prime.
    """
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError('p must be an int')
    if not isprime(p):
        raise ValueError('p must be a prime, got {0}'.format(p))


def _validate_nonnegative(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError('{0} must be an int'.format(name))
    if value < 0:
        raise ValueError('{0} must be nonnegative, got {1}'.format(name, value))


def _digits(n: int, p: int) -> List[int]:
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits


@dataclass(frozen=True)
class DigitForm:
    """A base-p digit sequence, least-significant digit first.

    Attributes:
        base (int): The prime p.
        digits (tuple): Digits in [0, p-1], no trailing zero; () represents 0.
    """
    base: int
    digits: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d < 0 or d >= self.base for d in self.digits):
            raise ValueError('digits must lie in [0, {0}]'.format(self.base - 1))
        if self.digits and self.digits[-1] == 0:
            raise ValueError('digits must not carry a trailing zero')

    @property
    def value(self) -> int:
        return from_digit_form(self)

    @property
    def weight(self) -> int:
        return sum(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        if not self.digits:
            return '(0)_{0}'.format(self.base)
        sep = '' if self.base <= 10 else ','
        return '({0})_{1}'.format(sep.join(str(d) for d in reversed(self.digits)), self.base)

    def to_dict(self) -> dict:
        """Return a json dictionary representing this digit form."""
        return {'base': self.base, 'digits': list(self.digits), 'value': self.value}

    @classmethod
    def from_dict(cls, _dict: dict) -> 'DigitForm':
        """Initialize a DigitForm object from a json dictionary."""
        if 'base' not in _dict:
            raise ValueError('Required property \'base\' not present in DigitForm JSON')
        return cls(base=_dict.get('base'), digits=tuple(_dict.get('digits', ())))


def to_digit_form(n: int, p: int) -> DigitForm:
    """Return the unique base-p representation of n.

    Raises:
        ValueError: p is not prime or n is negative.
    """
    validate_prime(p)
    _validate_nonnegative('N', n)
    return DigitForm(base=p, digits=tuple(_digits(n, p)))


def from_digit_form(form: DigitForm) -> int:
    value = 0
    for d in reversed(form.digits):
        value = value * form.base + d
    return value


def digit_count(n: int, p: int) -> int:
    """Number of base-p digits of n, zero for n = 0."""
    validate_prime(p)
    _validate_nonnegative('N', n)
    return len(_digits(n, p))


def weight(n: int, p: int) -> int:
    """The p-adic weight s_p(n): the sum of the base-p digits of n."""
    validate_prime(p)
    _validate_nonnegative('N', n)
    total = 0
    while n:
        n, d = divmod(n, p)
        total += d
    return total


def carry_count_add(n: int, m: int, p: int) -> int:
    """Number of carries produced by the base-p addition n + m.

    Satisfies s_p(n + m) = s_p(n) + s_p(m) - (p - 1) * carries.
    """
    validate_prime(p)
    _validate_nonnegative('N', n)
    _validate_nonnegative('M', m)
    carries = 0
    carry = 0
    while n or m or carry:
        n, a = divmod(n, p)
        m, b = divmod(m, p)
        carry = 1 if a + b + carry >= p else 0
        carries += carry
    return carries


def is_carryfree_add(summands: Sequence[int], p: int) -> bool:
    """True iff the digitwise sum of all summands stays below p at every position.

    Raises:
        ValueError: summands is empty.
    """
    validate_prime(p)
    if not summands:
        raise ValueError('At least one summand is required')
    columns: List[int] = []
    for summand in summands:
        _validate_nonnegative('summand', summand)
        for position, d in enumerate(_digits(summand, p)):
            if position == len(columns):
                columns.append(0)
            columns[position] += d
            if columns[position] >= p:
                return False
    return True


def digit_convolution(n: int, m: int, p: int) -> List[int]:
    """Convolution of the base-p digit sequences of n and m, without carrying."""
    validate_prime(p)
    _validate_nonnegative('N', n)
    _validate_nonnegative('M', m)
    left = _digits(n, p)
    right = _digits(m, p)
    if not left or not right:
        return []
    conv = [0] * (len(left) + len(right) - 1)
    for i, x in enumerate(left):
        if not x:
            continue
        for j, y in enumerate(right):
            conv[i + j] += x * y
    return conv


def is_carryfree_mul(n: int, m: int, p: int) -> bool:
    """True iff every digit-convolution coefficient of n and m is at most p - 1."""
    return all(c <= p - 1 for c in digit_convolution(n, m, p))


def digit_reverse(n: int, p: int) -> int:
    """Reverse the base-p digits of n (leading zeros of the reversal are dropped).

    Raises:
        ValueError: n < 1.
    """
    validate_prime(p)
    if not isinstance(n, int) or n < 1:
        raise ValueError('N must be a positive integer, got {0}'.format(n))
    value = 0
    for d in _digits(n, p):
        value = value * p + d
    return value


def binomial_valuation(w: int, u: int, p: int) -> int:
    """v_p of the binomial coefficient C(w, u), by counting carries (Kummer)."""
    validate_prime(p)
    _validate_nonnegative('w', w)
    _validate_nonnegative('u', u)
    if u > w:
        raise ValueError('u must not exceed w')
    return (weight(w - u, p) + weight(u, p) - weight(w, p)) // (p - 1)
