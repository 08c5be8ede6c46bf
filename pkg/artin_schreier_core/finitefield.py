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
"""Exact arithmetic in F_{p^m} on top of sympy's dense GF(p)[x] routines.

Elements are tuples of coefficients in F_p, highest degree first and
stripped of leading zeros (zero is the empty tuple), reduced modulo the
context's monic irreducible modulus. Element index i corresponds to the
polynomial whose coefficient of x^j is the j-th base-p digit of i.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (gf_add, gf_compose_mod, gf_irred_p_rabin, gf_mul, gf_neg, gf_pow_mod, gf_rem,
                                     gf_strip, gf_sub)

from .padic import validate_prime

logger = logging.getLogger(__name__)

Element = Tuple[int, ...]


def _tup(poly: Sequence) -> Element:
    return tuple(int(c) for c in gf_strip(list(poly)))


@dataclass(frozen=True)
class FieldContext:
    """The field F_p[x] / (modulus) of size p^m.

    Attributes:
        p (int): The characteristic.
        m (int): Degree over F_p.
        modulus (tuple): Monic irreducible of degree m, highest degree first.
    """
    p: int
    m: int
    modulus: Element
    trace_basis: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.modulus) != self.m + 1 or self.modulus[0] != 1:
            raise ValueError('modulus must be monic of degree {0}'.format(self.m))
        # trace of x^j for j = 0..m-1; the trace is F_p-linear in the coefficients
        basis = []
        for j in range(self.m):
            monomial = self.reduce([1] + [0] * j)
            value = self.trace_direct(monomial)
            if len(value) > 1:
                raise ValueError('modulus is not irreducible: trace left the prime field')
            basis.append(value[0] if value else 0)
        object.__setattr__(self, 'trace_basis', tuple(basis))

    @property
    def size(self) -> int:
        return self.p**self.m

    @property
    def zero(self) -> Element:
        return ()

    @property
    def one(self) -> Element:
        return (1,)

    @property
    def generator(self) -> Element:
        """The class of x."""
        return self.reduce([1, 0])

    def reduce(self, poly: Sequence[int]) -> Element:
        return _tup(gf_rem([c % self.p for c in poly], list(self.modulus), self.p, ZZ))

    def constant(self, c: int) -> Element:
        c %= self.p
        return (c,) if c else ()

    def add(self, x: Element, y: Element) -> Element:
        return _tup(gf_add(list(x), list(y), self.p, ZZ))

    def sub(self, x: Element, y: Element) -> Element:
        return _tup(gf_sub(list(x), list(y), self.p, ZZ))

    def neg(self, x: Element) -> Element:
        return _tup(gf_neg(list(x), self.p, ZZ))

    def mul(self, x: Element, y: Element) -> Element:
        if not x or not y:
            return ()
        return _tup(gf_rem(gf_mul(list(x), list(y), self.p, ZZ), list(self.modulus), self.p, ZZ))

    def pow(self, x: Element, n: int) -> Element:
        if n < 0:
            return self.pow(self.inverse(x), -n)
        if n == 0:
            return (1,)
        if not x:
            return ()
        return _tup(gf_pow_mod(list(x), n, list(self.modulus), self.p, ZZ))

    def inverse(self, x: Element) -> Element:
        if not x:
            raise ZeroDivisionError('zero has no inverse')
        return self.pow(x, self.size - 2)

    def frobenius(self, x: Element) -> Element:
        return self.pow(x, self.p)

    def trace_direct(self, x: Element) -> Element:
        """z + z^p + ... + z^(p^(m-1)) by repeated Frobenius."""
        total: Element = ()
        z = x
        for _ in range(self.m):
            total = self.add(total, z)
            z = self.frobenius(z)
        return total

    def to_coefficients(self, x: Element) -> List[int]:
        """Length-m coefficient list, least significant first."""
        coeffs = list(reversed(x))
        return coeffs + [0] * (self.m - len(coeffs))

    def from_coefficients(self, coeffs: Sequence[int]) -> Element:
        """Inverse of to_coefficients (longer inputs are reduced)."""
        return self.reduce(list(reversed(list(coeffs))))

    def to_index(self, x: Element) -> int:
        value = 0
        for c in x:
            value = value * self.p + c
        return value

    def from_index(self, index: int) -> Element:
        if not 0 <= index < self.size:
            raise ValueError('index must lie in [0, {0})'.format(self.size))
        digits = []
        while index:
            index, d = divmod(index, self.p)
            digits.append(d)
        return tuple(reversed(digits))

    def contains(self, x: Element) -> bool:
        return (isinstance(x, tuple) and len(x) <= self.m and all(0 <= c < self.p for c in x)
                and (not x or x[0] != 0))

    def to_dict(self) -> dict:
        return {'p': self.p, 'm': self.m, 'modulus': list(reversed(self.modulus))}


def _monic_candidates(p: int, m: int) -> Iterator[List[int]]:
    for tail in itertools.product(range(p), repeat=m):
        yield [1] + list(tail)


@lru_cache(maxsize=None)
def make_field(p: int, m: int) -> FieldContext:
    """The field of size p^m modulo the lexicographically smallest monic irreducible.

    Degree one uses the modulus x. Contexts are cached and immutable.

    Raises:
        ValueError: p is not prime or m < 1.
    """
    validate_prime(p)
    if not isinstance(m, int) or m < 1:
        raise ValueError('m must be a positive integer, got {0}'.format(m))
    if m == 1:
        return FieldContext(p=p, m=1, modulus=(1, 0))
    for candidate in _monic_candidates(p, m):
        if candidate[-1] and gf_irred_p_rabin(candidate, p, ZZ):
            logger.debug('F_%d^%d modulus %s', p, m, candidate)
            return FieldContext(p=p, m=m, modulus=tuple(candidate))
    raise ValueError('No irreducible polynomial of degree {0} over F_{1}'.format(m, p))  # unreachable


def field_with_modulus(p: int, modulus_lsb: Sequence[int]) -> FieldContext:
    """A context for an explicit modulus given least significant coefficient first.

    Raises:
        ValueError: The modulus is not monic or not irreducible.
    """
    validate_prime(p)
    modulus = [c % p for c in reversed(list(modulus_lsb))]
    modulus = list(gf_strip(modulus))
    if not modulus or modulus[0] != 1 or len(modulus) < 2:
        raise ValueError('modulus must be monic of positive degree')
    m = len(modulus) - 1
    if m > 1 and not gf_irred_p_rabin(modulus, p, ZZ):
        raise ValueError('modulus {0} is not irreducible over F_{1}'.format(list(modulus_lsb), p))
    if m == 1 and modulus != [1, 0]:
        # every degree-one modulus gives the same arithmetic on constants
        modulus = [1, 0]
    return FieldContext(p=p, m=m, modulus=tuple(modulus))


def trace_to_prime(ctx: FieldContext, z: Element) -> int:
    """Absolute trace of z down to F_p, as an integer in [0, p-1]."""
    total = 0
    for j, c in enumerate(reversed(z)):
        total += c * ctx.trace_basis[j]
    return total % ctx.p


def enumerate_elements(ctx: FieldContext, start: int = 0, stop: Optional[int] = None) -> Iterator[Element]:
    """Yield the elements with index in [start, stop), in index order."""
    stop = ctx.size if stop is None else stop
    for index in range(start, stop):
        yield ctx.from_index(index)


def evaluate_poly(ctx: FieldContext, coeffs: Dict[int, Element], x: Element) -> Element:
    """Evaluate sum c_e x^e for exponents e >= 1 (Horner over the exponent gaps)."""
    if any(e < 1 for e in coeffs):
        raise ValueError('exponents must be positive')
    result: Element = ()
    previous = None
    for e in sorted(coeffs, reverse=True):
        if previous is not None:
            result = ctx.mul(result, ctx.pow(x, previous - e))
        result = ctx.add(result, coeffs[e])
        previous = e
    if previous is not None:
        result = ctx.mul(result, ctx.pow(x, previous))
    return result


@dataclass(frozen=True)
class FieldEmbedding:
    """The embedding F_{p^a} -> F_{p^(a*m)} sending the small generator to root."""
    small: FieldContext
    big: FieldContext
    root: Element

    def __call__(self, x: Element) -> Element:
        if not x:
            return ()
        return _tup(gf_compose_mod(list(x), list(self.root), list(self.big.modulus), self.big.p, ZZ))


@lru_cache(maxsize=None)
def embed_field(small: FieldContext, big: FieldContext) -> FieldEmbedding:
    """Find the embedding of small into big by searching big for a root of small's modulus.

    Raises:
        ValueError: The characteristics differ or small.m does not divide big.m.
    """
    if small.p != big.p or big.m % small.m:
        raise ValueError('F_{0}^{1} does not embed in F_{2}^{3}'.format(small.p, small.m, big.p, big.m))
    if small.m == 1:
        return FieldEmbedding(small=small, big=big, root=())
    modulus = list(small.modulus)
    for candidate in enumerate_elements(big, start=1):
        if not gf_compose_mod(modulus, list(candidate), list(big.modulus), big.p, ZZ):
            logger.debug('Embedding root of %s in F_%d^%d: %s', small.modulus, big.p, big.m, candidate)
            return FieldEmbedding(small=small, big=big, root=candidate)
    raise ValueError('No root of the small modulus in the big field')  # unreachable for valid contexts
