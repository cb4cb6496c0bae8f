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

"""Exact q-analog combinatorics.

Everything here is integer arithmetic except vandermonde_solve, which
carries Fraction intermediates and checks its own answer.
"""

import functools
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from kasami.exceptions import ErrIllegalArguments, ErrNonIntegral, ErrTheoremViolated

logger = logging.getLogger(__name__)


def _c2(x: int) -> int:
    return x * (x - 1) // 2


def _sign(x: int) -> int:
    return -1 if x & 1 else 1


@functools.lru_cache(maxsize=None)
def gaussian_binomial(u: int, i: int, q: int) -> int:
    """(u over i)_q by the telescoping product; every prefix is itself a q-binomial."""
    if q < 2:
        raise ErrIllegalArguments("q must be at least 2, got {}".format(q))
    if i < 0 or u < 0 or i > u:
        return 0
    result = 1
    for t in range(i):
        result, rem = divmod(result * (q ** (u - t) - 1), q ** (t + 1) - 1)
        if rem:
            raise ErrNonIntegral("({} over {})_{}: step {}".format(u, i, q, t))
    return result


def mobius_pair_sums(u: int, v: int, q: int) -> Tuple[int, int]:
    """Row and column sums of the q-binomial matrix against its signed inverse; both vanish for u > v."""
    if not u > v >= 0:
        raise ErrIllegalArguments("need u > v >= 0, got u={} v={}".format(u, v))
    row = 0
    col = 0
    for i in range(v, u + 1):
        row += gaussian_binomial(i, v, q) * _sign(u - i) * q ** _c2(u - i) * gaussian_binomial(u, i, q)
        col += _sign(i - v) * q ** _c2(i - v) * gaussian_binomial(i, v, q) * gaussian_binomial(u, i, q)
    return row, col


def mobius_pair_check(u: int, v: int, q: int) -> bool:
    return mobius_pair_sums(u, v, q) == (0, 0)


def vandermonde_apply(x: Sequence, q: int) -> List:
    """y_i = sum_j q^(i*j) x_j."""
    return [sum(q ** (i * j) * xj for j, xj in enumerate(x)) for i in range(len(x))]


def vandermonde_solve(y: Sequence[int], q: int) -> List[Fraction]:
    """Invert the symmetric system (q^(i*j)) x = y in closed form."""
    if len(y) < 1:
        raise ErrIllegalArguments("empty right-hand side")
    if q < 2:
        raise ErrIllegalArguments("q must be at least 2, got {}".format(q))
    u = len(y) - 1
    w = []
    for v in range(u + 1):
        inner = sum(_sign(v - i) * q ** _c2(v - i) * gaussian_binomial(v, i, q) * y[i]
                    for i in range(v + 1))
        denom = 1
        for i in range(v):
            denom *= q ** v - q ** i
        w.append(Fraction(inner, denom))
    x = []
    for j in range(u + 1):
        x.append(sum((_sign(v - j) * q ** _c2(v - j) * gaussian_binomial(v, j, q) * w[v]
                      for v in range(j, u + 1)), Fraction(0)))
    if vandermonde_apply(x, q) != [Fraction(yi) for yi in y]:
        raise ErrTheoremViolated("symmetric Vandermonde inversion failed for q={}".format(q))
    return x


def product_formula_sides(i: int, q: int) -> Tuple[int, int]:
    if i < 1:
        raise ErrIllegalArguments("need i >= 1, got {}".format(i))
    lhs = sum(q ** j * gaussian_binomial(i, j, q * q) for j in range(i + 1))
    rhs = 1
    for j in range(1, i + 1):
        rhs *= 1 + q ** j
    return lhs, rhs


def product_formula_check(i: int, q: int) -> bool:
    lhs, rhs = product_formula_sides(i, q)
    return lhs == rhs


def twovsone_sides(u: int, i: int, q: int) -> Tuple[int, int]:
    if not u >= i >= 1:
        raise ErrIllegalArguments("need u >= i >= 1, got u={} i={}".format(u, i))
    lhs = gaussian_binomial(u, i, q * q) * sum(
        q ** j * gaussian_binomial(i, j, q * q) for j in range(i + 1))
    rhs = gaussian_binomial(u, i, q)
    for j in range(i):
        rhs *= 1 + q ** (u - j)
    return lhs, rhs


def twovsone_check(u: int, i: int, q: int) -> bool:
    lhs, rhs = twovsone_sides(u, i, q)
    return lhs == rhs


def pascal_check(i: int, j: int, q: int) -> bool:
    if not 1 <= j <= i:
        raise ErrIllegalArguments("need 1 <= j <= i, got i={} j={}".format(i, j))
    return gaussian_binomial(i, j, q) == (
        gaussian_binomial(i - 1, j, q) + q ** (i - j) * gaussian_binomial(i - 1, j - 1, q))


def triple_product_check(v: int, u: int, i: int, j: int, q: int) -> bool:
    if not (v >= i >= u >= 0 and j >= 0):
        raise ErrIllegalArguments("need v >= i >= u >= 0 and j >= 0")
    g = gaussian_binomial
    return g(v, u, q) * g(v - u, i - u, q) * g(i - u, j, q) == g(v, i, q) * g(i, j, q) * g(i - j, u, q)


def subspace_chain_check(i: int, u: int, j: int, q: int) -> bool:
    if not i >= u >= j >= 0:
        raise ErrIllegalArguments("need i >= u >= j >= 0")
    g = gaussian_binomial
    return g(i, u, q) * g(u, j, q) == g(i, j, q) * g(i - j, u - j, q)


def qbinomial_theorem_sides(N: int, q: int, t) -> Tuple:
    lhs = sum(_sign(w) * q ** _c2(w) * gaussian_binomial(N, w, q) * t ** w for w in range(N + 1))
    rhs = 1
    for j in range(N):
        rhs *= 1 - q ** j * t
    return lhs, rhs


def qbinomial_theorem_check(N: int, q: int, t) -> bool:
    """sum_w (-1)^w q^C(w,2) (N over w)_q t^w == prod_{j<N} (1 - q^j t)."""
    if N < 0:
        raise ErrIllegalArguments("need N >= 0, got {}".format(N))
    lhs, rhs = qbinomial_theorem_sides(N, q, t)
    return lhs == rhs
