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

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from kasami.algebra import field as ff
from kasami.algebra.gf2 import gf2_rank
from kasami.exceptions import ErrIllegalArguments, ErrInvalidParams
from kasami.printable import printable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CodeParams:
    m: int
    n: int
    d: int
    e: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1 or self.k < 1:
            raise ErrInvalidParams("n, d and k must be positive")
        if self.m != 2 * self.n:
            raise ErrInvalidParams("m != 2n ({} != 2*{})".format(self.m, self.n))
        if math.gcd(self.n, self.d) != math.gcd(self.m, self.d):
            raise ErrInvalidParams("gcd(n,d) != gcd(m,d) ({} != {})".format(
                math.gcd(self.n, self.d), math.gcd(self.m, self.d)))
        if self.e != math.gcd(self.n, self.d):
            raise ErrInvalidParams("e != gcd(n,d) ({} != {})".format(self.e, math.gcd(self.n, self.d)))
        if not 1 <= self.k <= self.n // self.e:
            raise ErrInvalidParams("k must lie in [1, n/e] = [1, {}], got {}".format(self.n // self.e, self.k))

    @property
    def field(self) -> ff.FieldSpec:
        return ff.make_field(self.m)

    def shift(self, j: int) -> int:
        """Frobenius exponent (n/e - j)d reduced mod m; shift(0) == n."""
        return ((self.n // self.e - j) * self.d) % self.m

    @property
    def quadratic_bits(self) -> int:
        """F_2-dimension of (a_0, ..., a_{k-1})."""
        return self.n + self.m * (self.k - 1)

    @property
    def coeff_bits(self) -> int:
        return self.quadratic_bits + self.m

    @property
    def dimension(self) -> int:
        """dim over F_2 of the code, n(2k+1)."""
        return self.n * (2 * self.k + 1)


def make_params(m: int, n: int, d: int, k: int) -> CodeParams:
    """Derive e = gcd(n,d) and validate the tower."""
    if n < 1 or d < 1:
        raise ErrInvalidParams("n and d must be positive")
    return CodeParams(m=m, n=n, d=d, e=math.gcd(n, d), k=k)


@dataclass(frozen=True)
class CoeffVector:
    a0: int
    a: Tuple[int, ...]
    ak: int

    def quadratic_is_zero(self) -> bool:
        return self.a0 == 0 and not any(self.a)

    def __xor__(self, other: "CoeffVector") -> "CoeffVector":
        return CoeffVector(self.a0 ^ other.a0,
                           tuple(x ^ y for x, y in zip(self.a, other.a)),
                           self.ak ^ other.ak)


def zero_coeffs(p: CodeParams) -> CoeffVector:
    return CoeffVector(0, (0,) * (p.k - 1), 0)


def coeffs_from_index(p: CodeParams, index: int) -> CoeffVector:
    """Decode an index: low n bits are a_0 over an F_2-basis of GF(2^n),
    then a_1..a_{k-1} in m-bit words, then a_k in the top m bits."""
    if not 0 <= index < (1 << p.coeff_bits):
        raise ErrIllegalArguments("coefficient index {} out of range".format(index))
    f = p.field
    a0 = 0
    for i, b in enumerate(ff.subfield_basis(f, p.n)):
        if (index >> i) & 1:
            a0 ^= b
    mask = (1 << p.m) - 1
    a = tuple((index >> (p.n + p.m * (j - 1))) & mask for j in range(1, p.k))
    ak = (index >> p.quadratic_bits) & mask
    return CoeffVector(a0, a, ak)


def _check_coeffs(p: CodeParams, a: CoeffVector):
    if len(a.a) != p.k - 1:
        raise ErrIllegalArguments("expected {} middle coefficients, got {}".format(p.k - 1, len(a.a)))
    if not ff.in_subfield(p.field, a.a0, p.n):
        raise ErrIllegalArguments("a_0 = {} is not in GF(2^{})".format(a.a0, p.n))


def quad_form(p: CodeParams, a: CoeffVector, x: int) -> int:
    _check_coeffs(p, a)
    f = p.field
    t0 = p.shift(0)
    value = ff.rel_trace(f, ff.mul(f, a.a0, ff.mul(f, ff.frobenius_pow(f, x, t0), x)), p.n, p.e)
    for j, aj in enumerate(a.a, start=1):
        xj = ff.mul(f, ff.frobenius_pow(f, x, p.shift(j)), x)
        value ^= ff.rel_trace(f, ff.mul(f, aj, xj), p.m, p.e)
    value ^= ff.rel_trace(f, ff.mul(f, a.ak, x), p.m, p.e)
    return value


def quad_form_vec(p: CodeParams, a: CoeffVector, xs) -> np.ndarray:
    """quad_form over an array of field elements."""
    _check_coeffs(p, a)
    f = p.field
    xs = np.asarray(xs, dtype=np.int64)
    inner = ff.mul_vec(f, a.a0, ff.mul_vec(f, ff.frobenius_vec(f, xs, p.shift(0)), xs))
    value = ff.rel_trace_vec(f, inner, p.n, p.e)
    for j, aj in enumerate(a.a, start=1):
        xj = ff.mul_vec(f, ff.frobenius_vec(f, xs, p.shift(j)), xs)
        value ^= ff.rel_trace_vec(f, ff.mul_vec(f, aj, xj), p.m, p.e)
    value ^= ff.rel_trace_vec(f, ff.mul_vec(f, a.ak, xs), p.m, p.e)
    return value


def bilinear_form(p: CodeParams, a: CoeffVector, x: int, y: int) -> int:
    _check_coeffs(p, a)
    f = p.field

    def polar(coef, t):
        return ff.mul(f, coef, ff.mul(f, x, ff.frobenius_pow(f, y, t)) ^ ff.mul(f, ff.frobenius_pow(f, x, t), y))

    value = ff.rel_trace(f, polar(a.a0, p.shift(0)), p.n, p.e)
    for j, aj in enumerate(a.a, start=1):
        value ^= ff.rel_trace(f, polar(aj, p.shift(j)), p.m, p.e)
    return value


def form_basis(p: CodeParams) -> Tuple[int, ...]:
    """1, pi, ..., pi^(m/e - 1): the first m/e powers of pi independent over GF(2^e)."""
    f = p.field
    return tuple(ff.pi_power(f, i) for i in range(p.m // p.e))


@dataclass(repr=False)
class GramMatrix(printable):
    dim: int
    entries: Tuple[Tuple[int, ...], ...]

    def is_alternating(self) -> bool:
        return all(self.entries[i][i] == 0 and self.entries[i][j] == self.entries[j][i]
                   for i in range(self.dim) for j in range(self.dim))


def gram_matrix(p: CodeParams, a: CoeffVector) -> GramMatrix:
    basis = form_basis(p)
    entries = tuple(tuple(bilinear_form(p, a, bi, bj) for bj in basis) for bi in basis)
    return GramMatrix(dim=len(basis), entries=entries)


def _echelon(f: ff.FieldSpec, matrix: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[int]]:
    rows = [list(r) for r in matrix]
    pivots = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ff.inverse(f, rows[r][c])
        rows[r] = [ff.mul(f, inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [vi ^ ff.mul(f, factor, vr) for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank_over_subfield(f: ff.FieldSpec, matrix: Sequence[Sequence[int]]) -> int:
    return len(_echelon(f, matrix)[1])


def nullspace_over_subfield(f: ff.FieldSpec, matrix: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    rows, pivots = _echelon(f, matrix)
    ncols = len(matrix[0]) if matrix else 0
    free = [c for c in range(ncols) if c not in pivots]
    result = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = rows[r][fc]
        result.append(tuple(vec))
    return result


def rank(p: CodeParams, a: CoeffVector) -> int:
    g = gram_matrix(p, a)
    return rank_over_subfield(p.field, g.entries)


def radical(p: CodeParams, a: CoeffVector) -> List[int]:
    """A GF(2^e)-basis of Rad(B_a), as field elements."""
    f = p.field
    basis = form_basis(p)
    result = []
    for coords in nullspace_over_subfield(f, gram_matrix(p, a).entries):
        z = 0
        for c, b in zip(coords, basis):
            z ^= ff.mul(f, c, b)
        result.append(z)
    return result


def quad_rank(p: CodeParams, a: CoeffVector) -> int:
    """rk(Q_a): rk(B_a), plus one when Q_a does not vanish on the radical."""
    f = p.field
    scalars = ff.subfield_basis(f, p.e)
    r = rank(p, a)
    for z in radical(p, a):
        if any(quad_form(p, a, ff.mul(f, c, z)) for c in scalars):
            return r + 1
    return r


def trace_gram_rows(p: CodeParams, a: CoeffVector) -> List[int]:
    """Rows of Tr_{e->1}(B_a) on the bit basis of GF(2^m), packed as ints.

    Its F_2-rank is e * rank(p, a).
    """
    f = p.field
    rows = []
    for i in range(p.m):
        row = 0
        for j in range(p.m):
            if ff.rel_trace(f, bilinear_form(p, a, 1 << i, 1 << j), p.e, 1):
                row |= 1 << j
        rows.append(row)
    return rows


def rank_via_trace(p: CodeParams, a: CoeffVector) -> int:
    return gf2_rank(trace_gram_rows(p, a)) // p.e
