# pylint: disable=missing-docstring
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

import pytest

from artin_schreier_core.finitefield import (FieldContext, embed_field, enumerate_elements, evaluate_poly,
                                             field_with_modulus, make_field, trace_to_prime)


def test_make_field_moduli():
    assert make_field(2, 1).modulus == (1, 0)
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(2, 3).modulus == (1, 0, 1, 1)
    assert make_field(5, 2).modulus == (1, 0, 2)
    assert make_field(5, 2).to_dict() == {'p': 5, 'm': 2, 'modulus': [2, 0, 1]}
    assert make_field(3, 2) is make_field(3, 2)
    with pytest.raises(ValueError) as err:
        make_field(2, 0)
    assert str(err.value) == 'm must be a positive integer, got 0'
    with pytest.raises(ValueError) as err:
        make_field(6, 1)
    assert str(err.value) == 'p must be a prime, got 6'


def test_field_with_modulus():
    assert field_with_modulus(2, [1, 1, 1]) == make_field(2, 2)
    assert field_with_modulus(5, [3, 1]).modulus == (1, 0)
    with pytest.raises(ValueError) as err:
        field_with_modulus(2, [1, 0, 1])
    assert str(err.value) == 'modulus [1, 0, 1] is not irreducible over F_2'
    with pytest.raises(ValueError) as err:
        field_with_modulus(3, [1, 1, 2])
    assert str(err.value) == 'modulus must be monic of positive degree'
    with pytest.raises(ValueError) as err:
        FieldContext(p=2, m=2, modulus=(1, 0))
    assert str(err.value) == 'modulus must be monic of degree 2'


def test_arithmetic_in_f4():
    ctx = make_field(2, 2)
    x = ctx.generator
    assert x == (1, 0)
    assert ctx.mul(x, x) == (1, 1)
    assert ctx.add(x, ctx.one) == (1, 1)
    assert ctx.add(x, x) == ctx.zero
    assert ctx.inverse(x) == (1, 1)
    assert ctx.pow(x, -1) == (1, 1)
    assert ctx.pow(x, 3) == ctx.one
    assert ctx.pow(ctx.zero, 0) == ctx.one
    assert ctx.frobenius(x) == (1, 1)
    assert ctx.neg(x) == x
    assert ctx.sub(ctx.one, x) == (1, 1)
    with pytest.raises(ZeroDivisionError) as err:
        ctx.inverse(ctx.zero)
    assert str(err.value) == 'zero has no inverse'


def test_indices_and_coefficients():
    ctx = make_field(3, 2)
    assert ctx.to_index((1, 2)) == 5
    assert ctx.from_index(5) == (1, 2)
    assert ctx.from_index(0) == ()
    assert ctx.to_coefficients((1, 2)) == [2, 1]
    assert ctx.to_coefficients(()) == [0, 0]
    assert ctx.from_coefficients([2, 1]) == (1, 2)
    assert ctx.constant(4) == (1,)
    assert ctx.constant(3) == ()
    assert ctx.contains((2, 1))
    assert not ctx.contains((0, 1))
    assert not ctx.contains((1, 0, 0))
    with pytest.raises(ValueError) as err:
        ctx.from_index(9)
    assert str(err.value) == 'index must lie in [0, 9)'
    elements = list(enumerate_elements(ctx))
    assert len(elements) == 9
    assert len(set(elements)) == 9
    assert list(enumerate_elements(ctx, 3, 5)) == [(1, 0), (1, 1)]


def test_field_axioms_in_f9():
    ctx = make_field(3, 2)
    for x in enumerate_elements(ctx, start=1):
        assert ctx.mul(x, ctx.inverse(x)) == ctx.one
        assert ctx.pow(x, ctx.size) == x
        assert ctx.add(x, ctx.neg(x)) == ctx.zero


def test_trace():
    ctx = make_field(2, 2)
    assert ctx.trace_basis == (0, 1)
    assert trace_to_prime(ctx, ctx.one) == 0
    assert trace_to_prime(ctx, ctx.generator) == 1
    for p, m in ((3, 3), (5, 2), (2, 4)):
        ctx = make_field(p, m)
        counts = [0] * p
        for z in enumerate_elements(ctx):
            direct = ctx.trace_direct(z)
            assert len(direct) <= 1
            value = trace_to_prime(ctx, z)
            assert value == (direct[0] if direct else 0)
            counts[value] += 1
        # the trace is onto F_p with equal fibers
        assert counts == [p**(m - 1)] * p


def test_evaluate_poly():
    ctx = make_field(2, 2)
    for x in enumerate_elements(ctx, start=1):
        assert evaluate_poly(ctx, {3: ctx.one}, x) == ctx.one
    assert evaluate_poly(ctx, {3: ctx.one, 1: ctx.one}, ctx.generator) == (1, 1)
    assert evaluate_poly(ctx, {}, ctx.generator) == ()
    with pytest.raises(ValueError) as err:
        evaluate_poly(ctx, {0: ctx.one}, ctx.generator)
    assert str(err.value) == 'exponents must be positive'


def test_embedding_is_a_field_homomorphism():
    small, big = make_field(2, 2), make_field(2, 4)
    embedding = embed_field(small, big)
    images = [embedding(x) for x in enumerate_elements(small)]
    assert len(set(images)) == 4
    assert embedding(small.one) == big.one
    for x in enumerate_elements(small):
        for y in enumerate_elements(small):
            assert embedding(small.mul(x, y)) == big.mul(embedding(x), embedding(y))
            assert embedding(small.add(x, y)) == big.add(embedding(x), embedding(y))


def test_prime_field_embedding_is_identity_on_constants():
    embedding = embed_field(make_field(3, 1), make_field(3, 3))
    assert embedding((2,)) == (2,)
    assert embedding(()) == ()


def test_embedding_requires_divisibility():
    with pytest.raises(ValueError) as err:
        embed_field(make_field(2, 2), make_field(2, 3))
    assert str(err.value) == 'F_2^2 does not embed in F_2^3'
