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
"""Detection and certification of p-symmetric numbers.

nu is p-symmetric when some w makes nu * w = (p^k - 1) * ell a carry-free
product with ell < p^k. The smallest such w is the minimal factorization and
the index of its leading digit is the shift factor.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple, Union

from .computation_exception import ComputationException
from .padic import digit_count, is_carryfree_mul, validate_prime, weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymmetryCertificate:
    """Witness that nu * w = (p^k - 1) * ell is a carry-free product.

    Attributes:
        nu (int): The certified number, coprime to p.
        p (int): The prime.
        w (int): The witness.
        k (int): Exponent of the Mersenne-like factor p^k - 1.
        ell (int): Cofactor, ell < p^k.
        shift_factor (int): Index of the leading base-p digit of w.
        minimal (bool): True iff w is known to be the smallest witness.
    """
    nu: int
    p: int
    w: int
    k: int
    ell: int
    shift_factor: int
    minimal: bool = False

    def to_dict(self) -> dict:
        """Return a json dictionary representing this certificate."""
        return {
            'nu': self.nu,
            'p': self.p,
            'w': self.w,
            'k': self.k,
            'ell': self.ell,
            'shift_factor': self.shift_factor,
            'minimal': self.minimal,
        }

    @classmethod
    def from_dict(cls, _dict: dict) -> 'SymmetryCertificate':
        """Initialize a SymmetryCertificate object from a json dictionary."""
        args = {}
        for key in ('nu', 'p', 'w', 'k', 'ell', 'shift_factor'):
            if key not in _dict:
                raise ValueError('Required property \'{0}\' not present in SymmetryCertificate JSON'.format(key))
            args[key] = _dict[key]
        return cls(minimal=bool(_dict.get('minimal', False)), **args)


@dataclass(frozen=True)
class Symmetric:
    """Verdict of a successful search, carrying its certificate."""
    certificate: SymmetryCertificate

    symmetric = True

    def to_dict(self) -> dict:
        return {'verdict': 'Symmetric', 'certificate': self.certificate.to_dict()}


@dataclass(frozen=True)
class NotFoundWithin:
    """Inconclusive verdict: no certificate with k <= k_max exists."""
    nu: int
    p: int
    k_max: int

    symmetric = False

    def to_dict(self) -> dict:
        return {'verdict': 'NotFoundWithin', 'nu': self.nu, 'p': self.p, 'k_max': self.k_max}


Detection = Union[Symmetric, NotFoundWithin]


def shift_factor(w: int, p: int) -> int:
    """Index of the leading base-p digit of w."""
    return digit_count(w, p) - 1


def default_k_max(nu: int, p: int) -> int:
    return 2 * digit_count(nu, p) + 4


def check_certificate(cert: SymmetryCertificate) -> bool:
    """Verify every certificate property by direct computation."""
    try:
        validate_prime(cert.p)
    except (TypeError, ValueError):
        return False
    nu, p, w, k, ell = cert.nu, cert.p, cert.w, cert.k, cert.ell
    if nu <= 1 or nu % p == 0 or w < 1 or k < 1 or ell < 1:
        return False
    modulus = p**k - 1
    if ell >= p**k or nu * w != modulus * ell:
        return False
    if not is_carryfree_mul(nu, w, p):
        return False
    e = shift_factor(w, p)
    if cert.shift_factor != e:
        return False
    if cert.minimal:
        if w % p == 0 or k < e + 1 or ell * p**(k - e - 1) >= nu:
            return False
    return True


def _validate_nu(nu: int, p: int) -> None:
    validate_prime(p)
    if not isinstance(nu, int) or isinstance(nu, bool):
        raise TypeError('nu must be an int')
    if nu <= 1:
        raise ValueError('nu must be greater than 1, got {0}'.format(nu))
    if nu % p == 0:
        raise ValueError('nu must be coprime to p, got nu={0}, p={1}'.format(nu, p))


def _smallest_witness(nu: int, p: int, k_max: int) -> Optional[Tuple[int, int, int]]:
    best = None
    for k in range(1, k_max + 1):
        p_k = p**k
        modulus = p_k - 1
        step = nu // gcd(nu, modulus)
        found = None
        # a minimal witness has ell < nu; w grows with ell, so the first hit is the smallest at this k
        for ell in range(step, min(nu, p_k), step):
            w = modulus * ell // nu
            if best is not None and w >= best[0]:
                break
            if is_carryfree_mul(nu, w, p):
                found = (w, k, ell)
                break
        if found is not None:
            logger.debug('nu=%d p=%d: witness w=%d at k=%d', nu, p, found[0], k)
            best = found
    return best


def detect(nu: int, p: int, k_max: Optional[int] = None) -> Detection:
    """Search for the minimal carry-free factorization of nu with k <= k_max.

    Args:
        nu: The candidate, greater than 1 and coprime to p.
        p: The prime.
        k_max: Search bound. Defaults to 2 * (number of base-p digits of nu) + 4.

    Returns:
        Symmetric with the certificate of smallest w, or NotFoundWithin(k_max).
        The certificate is flagged minimal when no larger k can yield a smaller w.

    Raises:
        ValueError: nu <= 1 or p divides nu.
    """
    _validate_nu(nu, p)
    if k_max is None:
        k_max = default_k_max(nu, p)
    if k_max < 1:
        raise ValueError('k_max must be positive, got {0}'.format(k_max))
    found = _smallest_witness(nu, p, k_max)
    if found is None:
        return NotFoundWithin(nu=nu, p=p, k_max=k_max)
    w, k, ell = found
    # any certificate with k > k_max has w >= (p^(k_max+1) - 1) / nu
    minimal = w * nu <= p**(k_max + 1) - 1
    cert = SymmetryCertificate(nu=nu, p=p, w=w, k=k, ell=ell, shift_factor=shift_factor(w, p), minimal=minimal)
    if not check_certificate(cert):
        raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                   message='Search produced an invalid certificate', details=cert.to_dict())
    return Symmetric(certificate=cert)


def minimal_factorization(nu: int, p: int, k_max: Optional[int] = None) -> Union[Tuple[int, int, int], NotFoundWithin]:
    """The triple (w, k, ell) of the minimal certificate, or NotFoundWithin."""
    result = detect(nu, p, k_max)
    if isinstance(result, NotFoundWithin):
        return result
    cert = result.certificate
    return cert.w, cert.k, cert.ell


def is_symmetric_below_p(nu: int, p: int) -> bool:
    """For 1 < nu < p: nu is p-symmetric iff nu divides p - 1."""
    _validate_nu(nu, p)
    if nu >= p:
        raise ValueError('nu must be less than p, got nu={0}, p={1}'.format(nu, p))
    return (p - 1) % nu == 0


def _census_member(args: Tuple[int, int, int]) -> Optional[int]:
    nu, p, k_max = args
    return nu if detect(nu, p, k_max).symmetric else None


def _census_candidates(p: int, digits: int) -> List[int]:
    return [nu for nu in range(max(2, p**(digits - 1)), p**digits) if nu % p]


def census(p: int, digits: int, k_max: Optional[int] = None, *, workers: int = 1) -> List[int]:
    """All p-symmetric integers with exactly `digits` base-p digits, in increasing order.

    Args:
        p: The prime.
        digits: Number of base-p digits.
        k_max: Search bound per candidate. Defaults to 2 * digits + 6.

    Keyword Args:
        workers: Process count; results are merged in candidate order. Defaults to 1.
    """
    validate_prime(p)
    if digits < 1:
        raise ValueError('digits must be positive, got {0}'.format(digits))
    if k_max is None:
        k_max = 2 * digits + 6
    tasks = [(nu, p, k_max) for nu in _census_candidates(p, digits)]
    logger.debug('Census p=%d digits=%d over %d candidates', p, digits, len(tasks))
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            found = list(executor.map(_census_member, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        found = [_census_member(task) for task in tasks]
    return [nu for nu in found if nu is not None]


def census_ratio(p: int, digits: int, k_max: Optional[int] = None) -> Fraction:
    """Share of coprime-to-p integers with `digits` digits that are p-symmetric."""
    candidates = len(_census_candidates(p, digits))
    if candidates == 0:
        return Fraction(0)
    return Fraction(len(census(p, digits, k_max)), candidates)


def family_geometric(p: int, n: int, m: int) -> int:
    """nu = 1 + p^(m+1) + ... + p^((n-1)(m+1)), of weight n and shift factor m.

    Raises:
        ValueError: n < 2 (nu would be 1) or m < 0.
    """
    validate_prime(p)
    if m < 0:
        raise ValueError('m must be nonnegative, got {0}'.format(m))
    if n < 2:
        raise ValueError('n must be at least 2 so that nu > 1, got {0}'.format(n))
    return sum(p**(t * (m + 1)) for t in range(n))


def family_geometric_certificate(p: int, n: int, m: int) -> SymmetryCertificate:
    """The certificate nu * (p^(m+1) - 1) = p^(n(m+1)) - 1 for family_geometric."""
    nu = family_geometric(p, n, m)
    w = p**(m + 1) - 1
    return _checked(SymmetryCertificate(nu=nu, p=p, w=w, k=n * (m + 1), ell=1, shift_factor=shift_factor(w, p)))


def family_divisor(p: int, b: int, w: int) -> int:
    """nu = (p^b - 1) / w for w dividing p - 1; its shift factor is 0.

    Raises:
        ValueError: w does not divide p - 1 or b < 1.
    """
    validate_prime(p)
    if b < 1:
        raise ValueError('b must be positive, got {0}'.format(b))
    if w < 1 or (p - 1) % w:
        raise ValueError('w must divide p - 1, got w={0}, p={1}'.format(w, p))
    return (p**b - 1) // w


def family_divisor_certificate(p: int, b: int, w: int) -> SymmetryCertificate:
    nu = family_divisor(p, b, w)
    return _checked(SymmetryCertificate(nu=nu, p=p, w=w, k=b, ell=1, shift_factor=0))


def weight_divides_certificate(nu: int, p: int) -> SymmetryCertificate:
    """Certificate for nu whose weight divides p - 1.

    With s = s_p(nu), m = (p - 1) / s and D base-p digits, the witness
    w = m * (1 + p + ... + p^(D-1)) gives nu * w = (p^D - 1) * (nu / s).

    Raises:
        ValueError: s_p(nu) does not divide p - 1.
    """
    _validate_nu(nu, p)
    s = weight(nu, p)
    if (p - 1) % s:
        raise ValueError('s_p(nu) must divide p - 1, got s_p({0})={1}, p={2}'.format(nu, s, p))
    k = digit_count(nu, p)
    w = (p - 1) // s * ((p**k - 1) // (p - 1))
    return _checked(SymmetryCertificate(nu=nu, p=p, w=w, k=k, ell=nu // s, shift_factor=shift_factor(w, p)))


def family_replicate(cert: SymmetryCertificate, b: int) -> SymmetryCertificate:
    """Certificate for nu * (1 + p^k + ... + p^((b-1)k)) with the same witness.

    Raises:
        ValueError: b < 1 or cert does not verify.
    """
    if b < 1:
        raise ValueError('b must be positive, got {0}'.format(b))
    if not check_certificate(cert):
        raise ValueError('cert must be a valid certificate')
    if b == 1:
        return cert
    p, k = cert.p, cert.k
    factor = sum(p**(t * k) for t in range(b))
    return _checked(SymmetryCertificate(nu=cert.nu * factor, p=p, w=cert.w, k=k * b, ell=cert.ell,
                                        shift_factor=cert.shift_factor))


def extend_witness(cert: SymmetryCertificate, b: int) -> SymmetryCertificate:
    """Certificate for the same nu with w * (1 + p^k + ... + p^((b-1)k)) against p^(kb) - 1."""
    if b < 1:
        raise ValueError('b must be positive, got {0}'.format(b))
    if not check_certificate(cert):
        raise ValueError('cert must be a valid certificate')
    if b == 1:
        return cert
    p, k = cert.p, cert.k
    w = cert.w * sum(p**(t * k) for t in range(b))
    return _checked(SymmetryCertificate(nu=cert.nu, p=p, w=w, k=k * b, ell=cert.ell,
                                        shift_factor=shift_factor(w, p)))


def all_factorizations(nu: int, p: int, *, w_max: int, k_max: int) -> List[SymmetryCertificate]:
    """Every certificate with p not dividing w, w <= w_max and k <= k_max (unflagged)."""
    _validate_nu(nu, p)
    found = []
    for k in range(1, k_max + 1):
        p_k = p**k
        modulus = p_k - 1
        step = nu // gcd(nu, modulus)
        for ell in range(step, p_k, step):
            w = modulus * ell // nu
            if w > w_max:
                break
            if w % p and is_carryfree_mul(nu, w, p):
                found.append(SymmetryCertificate(nu=nu, p=p, w=w, k=k, ell=ell, shift_factor=shift_factor(w, p)))
    return found


def _checked(cert: SymmetryCertificate) -> SymmetryCertificate:
    if not check_certificate(cert):
        raise ComputationException(ComputationException.ORACLE_INCONSISTENT,
                                   message='Constructed certificate does not verify', details=cert.to_dict())
    return cert
