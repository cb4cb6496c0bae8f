# Copyright 2022 CodeNotary, Inc. All rights reserved.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#       http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Arithmetic in GF(2^m) and its subfield tower.

Elements are plain ints holding the coefficients of 1, pi, ..., pi^(m-1)
(bit i is the coefficient of pi^i). Addition is XOR. Subfields are not
separate objects: the subfield of degree t is the fixed-point set of
x -> x^(2^t).
"""

import functools
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

import numpy as np
import sympy

from kasami.constants import LOG_TABLE_MAX_DEGREE, MAX_FIELD_DEGREE, MIN_FIELD_DEGREE
from kasami.exceptions import ErrBudgetExceeded, ErrIllegalArguments, ErrNotInSubfield

logger = logging.getLogger(__name__)

FieldElement = int


@dataclass(frozen=True)
class FieldSpec:
    m: int
    modulus: int
    pi_powers: Optional[np.ndarray] = field(default=None, repr=False, compare=False)
    logs: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    @property
    def order(self) -> int:
        return (1 << self.m) - 1

    @property
    def size(self) -> int:
        return 1 << self.m

    @property
    def has_tables(self) -> bool:
        return self.pi_powers is not None


def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _reduce(c: int, modulus: int, m: int) -> int:
    while c.bit_length() > m:
        c ^= modulus << (c.bit_length() - m - 1)
    return c


def _polypow(base: int, exponent: int, modulus: int, m: int) -> int:
    result = 1
    while exponent:
        if exponent & 1:
            result = _reduce(_clmul(result, base), modulus, m)
        base = _reduce(_clmul(base, base), modulus, m)
        exponent >>= 1
    return result


def _is_primitive(modulus: int, m: int) -> bool:
    order = (1 << m) - 1
    x = _reduce(2, modulus, m)
    if _polypow(x, order, modulus, m) != 1:
        return False
    for p in sympy.primefactors(order):
        if _polypow(x, order // p, modulus, m) == 1:
            return False
    return True


def _build_tables(m: int, modulus: int):
    order = (1 << m) - 1
    pi_powers = np.zeros(order, dtype=np.int64)
    logs = np.zeros(1 << m, dtype=np.int64)
    x = 1
    for i in range(order):
        pi_powers[i] = x
        logs[x] = i
        x <<= 1
        if x >> m:
            x ^= modulus
    return pi_powers, logs


@functools.lru_cache(maxsize=None)
def make_field(m: int) -> FieldSpec:
    """Build GF(2^m) on the lexicographically smallest primitive polynomial."""
    if not (MIN_FIELD_DEGREE <= m <= MAX_FIELD_DEGREE):
        raise ErrIllegalArguments(
            "field degree must lie in [{}, {}], got {}".format(MIN_FIELD_DEGREE, MAX_FIELD_DEGREE, m))
    modulus = None
    for candidate in range((1 << m) | 1, 1 << (m + 1), 2):
        if _is_primitive(candidate, m):
            modulus = candidate
            break
    logger.debug("GF(2^%d): primitive modulus %s", m, bin(modulus))
    if m <= LOG_TABLE_MAX_DEGREE:
        pi_powers, logs = _build_tables(m, modulus)
        return FieldSpec(m=m, modulus=modulus, pi_powers=pi_powers, logs=logs)
    return FieldSpec(m=m, modulus=modulus)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a ^ b


def mul(f: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    if a == 0 or b == 0:
        return 0
    if f.has_tables:
        return int(f.pi_powers[(int(f.logs[a]) + int(f.logs[b])) % f.order])
    return _reduce(_clmul(a, b), f.modulus, f.m)


def power(f: FieldSpec, x: FieldElement, k: int) -> FieldElement:
    if x == 0:
        if k <= 0:
            raise ErrIllegalArguments("zero has no nonpositive powers")
        return 0
    k %= f.order
    if f.has_tables:
        return int(f.pi_powers[(int(f.logs[x]) * k) % f.order])
    return _polypow(x, k, f.modulus, f.m)


def inverse(f: FieldSpec, x: FieldElement) -> FieldElement:
    if x == 0:
        raise ErrIllegalArguments("zero is not invertible")
    return power(f, x, f.order - 1)


def pi_power(f: FieldSpec, i: int) -> FieldElement:
    """pi^i; negative i is taken modulo 2^m - 1."""
    i %= f.order
    if f.has_tables:
        return int(f.pi_powers[i])
    return _polypow(2, i, f.modulus, f.m)


def frobenius_pow(f: FieldSpec, x: FieldElement, t: int) -> FieldElement:
    """x^(2^t) with t taken modulo m, so x^(2^-d) means x^(2^(m-d))."""
    t %= f.m
    if x == 0 or t == 0:
        return x
    if f.has_tables:
        return int(f.pi_powers[(int(f.logs[x]) << t) % f.order])
    for _ in range(t):
        x = _reduce(_clmul(x, x), f.modulus, f.m)
    return x


def _check_tower(f: FieldSpec, from_deg: int, to_deg: int):
    if to_deg < 1 or from_deg < 1 or from_deg % to_deg != 0 or f.m % from_deg != 0:
        raise ErrIllegalArguments(
            "need {} | {} | {}".format(to_deg, from_deg, f.m))


def in_subfield(f: FieldSpec, x: FieldElement, deg: int) -> bool:
    return frobenius_pow(f, x, deg) == x


def rel_trace(f: FieldSpec, x: FieldElement, from_deg: int, to_deg: int) -> FieldElement:
    _check_tower(f, from_deg, to_deg)
    if not in_subfield(f, x, from_deg):
        raise ErrNotInSubfield("{} is not in GF(2^{})".format(x, from_deg))
    total = 0
    for i in range(from_deg // to_deg):
        total ^= frobenius_pow(f, x, to_deg * i)
    return total


def subfield_elements(f: FieldSpec, deg: int) -> List[FieldElement]:
    if deg < 1 or f.m % deg != 0:
        raise ErrIllegalArguments("{} does not divide {}".format(deg, f.m))
    if deg == f.m:
        return list(range(f.size))
    step = f.order // ((1 << deg) - 1)
    elements = [0] + [pi_power(f, step * j) for j in range((1 << deg) - 1)]
    return sorted(elements)


def span(f: FieldSpec, vectors: Iterable[FieldElement], scalars: List[FieldElement]) -> set:
    """Span of vectors over the scalar subfield, as a set of elements."""
    result = {0}
    for v in vectors:
        result = {s ^ mul(f, c, v) for s in result for c in scalars}
    return result


def linearly_dependent(f: FieldSpec, vectors: List[FieldElement], deg: int) -> bool:
    """True iff vectors are GF(2^deg)-linearly dependent inside GF(2^m)."""
    scalars = subfield_elements(f, deg)
    current = {0}
    for v in vectors:
        grown = {s ^ mul(f, c, v) for s in current for c in scalars}
        if len(grown) != len(current) * len(scalars):
            return True
        current = grown
    return False


@functools.lru_cache(maxsize=None)
def subfield_basis(f: FieldSpec, deg: int, over: int = 1) -> tuple:
    """Greedy GF(2^over)-basis of GF(2^deg) drawn from its sorted elements."""
    if over < 1 or deg % over != 0:
        raise ErrIllegalArguments("{} does not divide {}".format(over, deg))
    scalars = subfield_elements(f, over)
    basis = []
    current = {0}
    for x in subfield_elements(f, deg):
        if x in current:
            continue
        basis.append(x)
        current = {s ^ mul(f, c, x) for s in current for c in scalars}
        if len(basis) == deg // over:
            break
    return tuple(basis)


def _require_tables(f: FieldSpec):
    if not f.has_tables:
        raise ErrBudgetExceeded(
            "vectorised arithmetic needs log tables (m <= {})".format(LOG_TABLE_MAX_DEGREE))


def mul_vec(f: FieldSpec, a, b) -> np.ndarray:
    _require_tables(f)
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    product = f.pi_powers[(f.logs[a] + f.logs[b]) % f.order]
    return np.where((a == 0) | (b == 0), 0, product)


def frobenius_vec(f: FieldSpec, xs, t: int) -> np.ndarray:
    _require_tables(f)
    xs = np.asarray(xs, dtype=np.int64)
    t %= f.m
    if t == 0:
        return xs.copy()
    images = f.pi_powers[(f.logs[xs] << t) % f.order]
    return np.where(xs == 0, 0, images)


def rel_trace_vec(f: FieldSpec, xs, from_deg: int, to_deg: int) -> np.ndarray:
    """Elementwise relative trace; membership in GF(2^from_deg) is not checked."""
    _check_tower(f, from_deg, to_deg)
    xs = np.asarray(xs, dtype=np.int64)
    total = np.zeros_like(xs)
    for i in range(from_deg // to_deg):
        total ^= frobenius_vec(f, xs, to_deg * i)
    return total
