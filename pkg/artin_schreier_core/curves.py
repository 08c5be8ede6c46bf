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
"""Artin-Schreier curves y^p - y = f(x) over F_{p^a}, their normalization and constructors."""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from .finitefield import Element, FieldContext, field_with_modulus, make_field
from .padic import to_digit_form, validate_prime, weight
from .psymmetry import detect, family_geometric

logger = logging.getLogger(__name__)

Coefficient = Union[int, Element, Sequence[int]]


@dataclass(frozen=True)
class CurveSpec:
    """The curve y^p - y = sum c_i x^i over the base field F_{p^a}.

    Attributes:
        field (FieldContext): The base field F_{p^a}.
        terms (tuple): Sorted pairs (i, c_i), i >= 1 coprime to p, c_i nonzero.

    Raises:
        ValueError: An exponent is divisible by p or not positive, a coefficient
            is zero or not in the field, or there are no terms.
    """
    field: FieldContext
    terms: Tuple[Tuple[int, Element], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError('A curve needs at least one term')
        exponents = [i for i, _ in self.terms]
        if len(set(exponents)) != len(exponents):
            raise ValueError('Exponents must be distinct')
        for i, c in self.terms:
            if not isinstance(i, int) or i < 1:
                raise ValueError('Exponents must be positive integers, got {0}'.format(i))
            if i % self.p == 0:
                raise ValueError('Exponents must be coprime to p, got {0}'.format(i))
            if not c or not self.field.contains(c):
                raise ValueError('Coefficient of x^{0} must be a nonzero element of the base field'.format(i))
        object.__setattr__(self, 'terms', tuple(sorted(self.terms)))

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def a(self) -> int:
        return self.field.m

    @property
    def q(self) -> int:
        return self.field.size

    @property
    def coefficients(self) -> Dict[int, Element]:
        return dict(self.terms)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.terms)

    @property
    def degree(self) -> int:
        return self.terms[-1][0]

    @property
    def genus(self) -> int:
        return (self.p - 1) * (self.degree - 1) // 2

    def __str__(self) -> str:
        parts = []
        for i, c in reversed(self.terms):
            coeff = '' if c == (1,) else '[{0}]*'.format(','.join(str(x) for x in self.field.to_coefficients(c)))
            parts.append('{0}x^{1}'.format(coeff, i))
        return 'y^{0} - y = {1} over F_{2}'.format(self.p, ' + '.join(parts), self.q)

    def to_dict(self) -> dict:
        """Return a json dictionary representing this curve."""
        return {
            'p': self.p,
            'a': self.a,
            'modulus': list(reversed(self.field.modulus)),
            'terms': [{'exponent': i, 'coefficient': self.field.to_coefficients(c)} for i, c in self.terms],
            'degree': self.degree,
            'genus': self.genus,
        }

    @classmethod
    def from_dict(cls, _dict: dict) -> 'CurveSpec':
        """Initialize a CurveSpec object from a json dictionary."""
        for key in ('p', 'terms'):
            if key not in _dict:
                raise ValueError('Required property \'{0}\' not present in CurveSpec JSON'.format(key))
        field = base_field(_dict['p'], _dict.get('a', 1), _dict.get('modulus'))
        terms = tuple((t['exponent'], coerce_coefficient(field, t['coefficient'])) for t in _dict['terms'])
        return cls(field=field, terms=terms)


def base_field(p: int, a: int, modulus: Optional[Sequence[int]] = None) -> FieldContext:
    """The default F_{p^a}, or the one defined by an explicit LSB-first modulus."""
    if modulus is None:
        return make_field(p, a)
    field = field_with_modulus(p, modulus)
    if field.m != a:
        raise ValueError('modulus has degree {0}, expected a={1}'.format(field.m, a))
    return field


def coerce_coefficient(field: FieldContext, c: Coefficient) -> Element:
    """Accept an int (prime-field constant), an LSB-first list, or a field element tuple."""
    if isinstance(c, bool):
        raise TypeError('Coefficient must not be a bool')
    if isinstance(c, int):
        return field.constant(c)
    if isinstance(c, tuple):
        if not field.contains(c):
            raise ValueError('Coefficient {0} is not a reduced element of F_{1}'.format(c, field.size))
        return c
    if isinstance(c, list):
        if len(c) > field.m:
            raise ValueError('Coefficient vector {0} is longer than a={1}'.format(c, field.m))
        return field.from_coefficients(c)
    raise TypeError('Unsupported coefficient {0!r}'.format(c))


def normalize(p: int, a: int, raw_coefficients: Dict[int, Coefficient], *,
              field: Optional[FieldContext] = None) -> CurveSpec:
    """Bring y^p - y = f to the isomorphic form with every exponent coprime to p.

    The constant term is dropped and each c x^(p j) is replaced by c^(p^(a-1)) x^j,
    merging coefficients, until no exponent is divisible by p.

    Raises:
        ValueError: f normalizes to a constant.
    """
    validate_prime(p)
    field = field or make_field(p, a)
    if field.p != p or field.m != a:
        raise ValueError('field does not match p={0}, a={1}'.format(p, a))
    current: Dict[int, Element] = {}
    for i, c in raw_coefficients.items():
        if i < 0:
            raise ValueError('Exponents must be nonnegative, got {0}'.format(i))
        _accumulate(field, current, i, coerce_coefficient(field, c))
    root_power = p**(a - 1)
    while any(i % p == 0 for i in current if i):
        reduced: Dict[int, Element] = {}
        for i, c in current.items():
            if i and i % p == 0:
                _accumulate(field, reduced, i // p, field.pow(c, root_power))
            else:
                _accumulate(field, reduced, i, c)
        current = reduced
    current.pop(0, None)
    if not current:
        raise ValueError('The polynomial normalizes to a constant')
    return CurveSpec(field=field, terms=tuple(current.items()))


def _accumulate(field: FieldContext, terms: Dict[int, Element], i: int, c: Element) -> None:
    total = field.add(terms.get(i, ()), c)
    if total:
        terms[i] = total
    else:
        terms.pop(i, None)


@dataclass(frozen=True)
class SupportAnalysis:
    """Maximal p-adic weight over the support and where it is attained."""
    max_weight: int
    argmax: Tuple[int, ...]
    unique: bool
    nu: int

    def to_dict(self) -> dict:
        return {'max_weight': self.max_weight, 'argmax': list(self.argmax), 'unique': self.unique, 'nu': self.nu}


def analyze_support(p: int, support: Iterable[int]) -> SupportAnalysis:
    validate_prime(p)
    support = sorted(set(support))
    if not support:
        raise ValueError('support must not be empty')
    weights = {i: weight(i, p) for i in support}
    top = max(weights.values())
    argmax = tuple(i for i in support if weights[i] == top)
    return SupportAnalysis(max_weight=top, argmax=argmax, unique=len(argmax) == 1, nu=argmax[0])


def support_analysis(spec: CurveSpec) -> SupportAnalysis:
    """Maximal p-adic weight over Supp(f), the exponents attaining it and whether it is unique."""
    return analyze_support(spec.p, spec.support)


def is_gv_shape(i: int, p: int, n: int) -> bool:
    """True iff i = 1 + p^(i_1) + ... + p^(i_m) with distinct i_k >= 1 and m <= n - 2."""
    if i < 2:
        return False
    digits = to_digit_form(i - 1, p).digits
    return digits[0] == 0 and all(d <= 1 for d in digits) and sum(digits) <= n - 2


def build_gv_family(p: int, a: int, nu: int, c_nu: Coefficient, ai_terms: Dict[int, Coefficient],
                    i_max: int, *, field: Optional[FieldContext] = None) -> CurveSpec:
    """The curve c_nu x^nu + sum_i a_i x^(1 + p^i), normalized.

    Raises:
        ValueError: nu <= 1, nu is not found p-symmetric, nu = p^i + 1,
            c_nu is zero or an index lies outside 0..i_max.
    """
    validate_prime(p)
    field = field or make_field(p, a)
    if nu <= 1:
        raise ValueError('nu must be greater than 1, got {0}'.format(nu))
    if _is_power_plus_one(nu, p):
        raise ValueError('nu must not be of the form p^i + 1, got {0}'.format(nu))
    if not detect(nu, p).symmetric:
        raise ValueError('nu={0} is not p-symmetric within the default search bound'.format(nu))
    leading = coerce_coefficient(field, c_nu)
    if not leading:
        raise ValueError('c_nu must be nonzero')
    raw: Dict[int, Element] = {nu: leading}
    for i, c in ai_terms.items():
        if not 0 <= i <= i_max:
            raise ValueError('a_i index must lie in [0, {0}], got {1}'.format(i_max, i))
        _accumulate(field, raw, 1 + p**i, coerce_coefficient(field, c))
    return normalize(p, a, raw, field=field)


def _is_power_plus_one(nu: int, p: int) -> bool:
    power = 1
    while power + 1 <= nu:
        if power + 1 == nu:
            return True
        power *= p
    return False


def construct_slope_curve(p: int, n: int, genus_floor: int,
                          extra_exponents: Iterable[int] = ()) -> CurveSpec:
    """A curve over F_p with first slope 1/n and genus at least genus_floor.

    The support holds the weight-n p-symmetric nu = 1 + p + ... + p^(n-1) and
    1 + p^t with t = ceil(2 N / (p - 1)). For n = 2 the two would tie, so nu
    itself is taken as 1 + p^max(t, 1). Extra exponents must have the shape
    1 + p^(i_1) + ... + p^(i_m) with m <= n - 2.

    Raises:
        ValueError: n < 2, genus_floor < 0 or an extra exponent has the wrong shape.
    """
    validate_prime(p)
    if n < 2:
        raise ValueError('n must be at least 2, got {0}'.format(n))
    if genus_floor < 0:
        raise ValueError('genus_floor must be nonnegative, got {0}'.format(genus_floor))
    t = -(-2 * genus_floor // (p - 1))
    raw: Dict[int, int] = {}
    if n == 2:
        raw[family_geometric(p, 2, max(t, 1) - 1)] = 1
    else:
        raw[family_geometric(p, n, 0)] = 1
        if genus_floor > 0:
            raw[1 + p**t] = 1
    for i in extra_exponents:
        if not is_gv_shape(i, p, n):
            raise ValueError('Exponent {0} is not of the form 1 + sum of at most {1} powers p^i'.format(i, n - 2))
        raw[i] = 1
    spec = normalize(p, 1, raw)
    logger.debug('Slope curve p=%d n=%d: support %s, genus %d', p, n, spec.support, spec.genus)
    return spec


def construct_small_genus_curve(p: int, n: int) -> CurveSpec:
    """y^p - y = x^nu with nu = (p^n - 1)/(p - 1): first slope 1/n, genus (p^n - p)/2."""
    validate_prime(p)
    if n < 2:
        raise ValueError('n must be at least 2, got {0}'.format(n))
    return normalize(p, 1, {(p**n - 1) // (p - 1): 1})


def build_broad_family(p: int, a: int, nu: int, c_nu: Coefficient, low_terms: Dict[int, Coefficient], *,
                       field: Optional[FieldContext] = None) -> CurveSpec:
    """c_nu x^nu + g with every exponent of g of weight strictly below s_p(nu).

    Raises:
        ValueError: A low exponent reaches the weight of nu or is divisible by p.
    """
    validate_prime(p)
    field = field or make_field(p, a)
    top = weight(nu, p)
    raw: Dict[int, Coefficient] = {nu: c_nu}
    for i, c in low_terms.items():
        if i % p == 0:
            raise ValueError('Exponents must be coprime to p, got {0}'.format(i))
        if weight(i, p) >= top:
            raise ValueError('Exponent {0} has weight {1}, not below s_p(nu)={2}'.format(i, weight(i, p), top))
        raw[i] = c
    if not coerce_coefficient(field, c_nu):
        raise ValueError('c_nu must be nonzero')
    return normalize(p, a, raw, field=field)


def ppp_degree_window(p: int, k: int) -> Tuple[int, int]:
    """Degrees [p^k - 1, 2 p^k - p^(k-1) - 2] of the supersingularity classification."""
    validate_prime(p)
    if k < 1:
        raise ValueError('k must be positive, got {0}'.format(k))
    return p**k - 1, 2 * p**k - p**(k - 1) - 2


def affine_substitute(spec: CurveSpec, alpha: Coefficient, beta: Coefficient) -> Tuple[Dict[int, Element], CurveSpec]:
    """Expand f(alpha x + beta) over the base field and normalize it.

    Returns:
        The raw coefficient map (constant term included) and its normalization.

    Raises:
        ValueError: alpha is zero.
    """
    field = spec.field
    alpha_e = coerce_coefficient(field, alpha)
    beta_e = coerce_coefficient(field, beta)
    if not alpha_e:
        raise ValueError('alpha must be nonzero')
    raw: Dict[int, Element] = {}
    for i, c in spec.terms:
        for u in range(i + 1):
            binom = comb(i, u) % spec.p
            if not binom:
                continue
            term = field.mul(c, field.mul(field.pow(alpha_e, u), field.pow(beta_e, i - u)))
            _accumulate(field, raw, u, field.mul(field.constant(binom), term))
    return raw, normalize(spec.p, spec.a, raw, field=field)


# curve files: KEY=value lines, '#' comments
#   P=2
#   A=1
#   MODULUS=1,1,1        optional, least significant coefficient first
#   TERMS=7:1 3:1        exponent:coefficient, coefficient an int or c0/c1/... (LSB first)


def parse_curve(text: str, *, source: str = '<string>') -> CurveSpec:
    """Parse the curve file format and normalize the result.

    Raises:
        ValueError: A required key is missing or a value is malformed.
    """
    config: Dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        key_val = line.split('=', 1)
        if len(key_val) != 2:
            raise ValueError('{0}: expected KEY=value, got \'{1}\''.format(source, line))
        config[key_val[0].strip().upper()] = key_val[1].strip()
    for key in ('P', 'TERMS'):
        if not config.get(key):
            raise ValueError('{0}: missing required key {1}'.format(source, key))
    try:
        p = int(config['P'])
        a = int(config.get('A', '1'))
        modulus = [int(c) for c in config['MODULUS'].split(',')] if config.get('MODULUS') else None
        field = base_field(p, a, modulus)
        raw: Dict[int, Coefficient] = {}
        for item in config['TERMS'].replace(',', ' ').split():
            exponent, _, coefficient = item.partition(':')
            value: Coefficient = [int(c) for c in coefficient.split('/')] if '/' in coefficient \
                else int(coefficient or '1')
            _accumulate(field, raw, int(exponent), coerce_coefficient(field, value))
    except ValueError as err:
        raise ValueError('{0}: {1}'.format(source, err)) from None
    return normalize(p, a, raw, field=field)


def read_curve_file(path: str) -> CurveSpec:
    """Read a curve file.

    Raises:
        OSError: The file cannot be read.
        ValueError: The contents are malformed.
    """
    with open(path, 'r') as fobj:
        return parse_curve(fobj.read(), source=path)


def format_curve(spec: CurveSpec) -> str:
    lines = ['P={0}'.format(spec.p), 'A={0}'.format(spec.a)]
    if spec.a > 1:
        lines.append('MODULUS={0}'.format(','.join(str(c) for c in reversed(spec.field.modulus))))
    terms = []
    for i, c in reversed(spec.terms):
        coeffs = spec.field.to_coefficients(c)
        terms.append('{0}:{1}'.format(i, '/'.join(str(x) for x in coeffs) if spec.a > 1 else coeffs[0]))
    lines.append('TERMS={0}'.format(' '.join(terms)))
    return '\n'.join(lines) + '\n'


def write_curve_file(spec: CurveSpec, path: str) -> None:
    with open(path, 'w') as fobj:
        fobj.write(format_curve(spec))
