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

"""Solutions of the coupled bilinear system

    sum_i x_(2i-1) x_(2i)^(2^t_j) + x_(2i-1)^(2^t_j) x_(2i) = 0,   j = 0..s,

with t_j = (n/e - j)d, over 2u-tuples of GF(2^m). V_{s,u} is its solution
set. Brute force works on pair keys: every pair (x, y) maps to the packed
values of its s+1 summands, and a tuple solves the system iff the XOR of
its pair keys is zero.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from kasami import constants
from kasami.algebra import field as ff
from kasami.algebra.combinatorics import gaussian_binomial
from kasami.algebra.gf2 import gf2_rank
from kasami.code.forms import CodeParams
from kasami.datatypes import CountMethod, SolutionCount
from kasami.exceptions import ErrBudgetExceeded, ErrIllegalArguments, ErrTheoremViolated
from kasami.pool import run_partitioned

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolutionSystemParams:
    p: CodeParams
    s: int
    u: int

    def __post_init__(self):
        if self.s < 0 or self.u < 0:
            raise ErrIllegalArguments("s and u must be nonnegative, got s={} u={}".format(self.s, self.u))

    def with_u(self, u: int) -> "SolutionSystemParams":
        return SolutionSystemParams(self.p, self.s, u)

    def with_s(self, s: int) -> "SolutionSystemParams":
        return SolutionSystemParams(self.p, s, self.u)


def _c2(x: int) -> int:
    return x * (x - 1) // 2


def _sign(x: int) -> int:
    return -1 if x & 1 else 1


def _check_budget(sp: SolutionSystemParams):
    if 2 * sp.u * sp.p.m > constants.BRUTEFORCE_MAX_BITS:
        raise ErrBudgetExceeded("brute force needs 2um <= {}, got {}".format(
            constants.BRUTEFORCE_MAX_BITS, 2 * sp.u * sp.p.m))
    if (sp.s + 1) * sp.p.m > constants.PAIR_KEY_MAX_BITS:
        raise ErrBudgetExceeded("pair keys need (s+1)m <= {}".format(constants.PAIR_KEY_MAX_BITS))


def _pair_terms(f: ff.FieldSpec, x: np.ndarray, y: np.ndarray, t: int) -> np.ndarray:
    return ff.mul_vec(f, x, ff.frobenius_vec(f, y, t)) ^ ff.mul_vec(f, ff.frobenius_vec(f, x, t), y)


def _all_pairs(m: int) -> Tuple[np.ndarray, np.ndarray]:
    idx = np.arange(1 << (2 * m), dtype=np.int64)
    return idx >> m, idx & ((1 << m) - 1)


def _pack_keys(f: ff.FieldSpec, x: np.ndarray, y: np.ndarray, shifts: Sequence[int]) -> np.ndarray:
    keys = np.zeros(x.shape, dtype=np.int64)
    for j, t in enumerate(shifts):
        keys |= _pair_terms(f, x, y, t) << (j * f.m)
    return keys


def system_shifts(p: CodeParams, s: int) -> List[int]:
    return [p.shift(j) for j in range(s + 1)]


def pair_keys(sp: SolutionSystemParams) -> np.ndarray:
    """Packed summand values for every pair, indexed by x * 2^m + y."""
    f = sp.p.field
    x, y = _all_pairs(sp.p.m)
    return _pack_keys(f, x, y, system_shifts(sp.p, sp.s))


def _histogram(keys: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return np.unique(keys, return_counts=True)


def _xor_convolve(a: Tuple[np.ndarray, np.ndarray], b: Tuple[np.ndarray, np.ndarray]):
    ka, ca = a
    kb, cb = b
    keys = []
    counts = []
    block = max(1, constants.BRUTEFORCE_BLOCK // max(1, len(kb)))
    for lo in range(0, len(ka), block):
        keys.append((ka[lo:lo + block, None] ^ kb[None, :]).ravel())
        counts.append((ca[lo:lo + block, None] * cb[None, :]).ravel())
    keys = np.concatenate(keys)
    counts = np.concatenate(counts)
    uniq, inverse = np.unique(keys, return_inverse=True)
    return uniq, _sum_by(inverse, counts, len(uniq))


def _sum_by(inverse: np.ndarray, counts: np.ndarray, size: int) -> np.ndarray:
    out = np.zeros(size, dtype=np.int64)
    np.add.at(out, inverse, counts)
    return out


def _power_histogram(keys: np.ndarray, g: int):
    """Histogram of the XOR of g independent pair keys."""
    hist = (np.zeros(1, dtype=np.int64), np.ones(1, dtype=np.int64))
    base = _histogram(keys)
    for _ in range(g):
        hist = _xor_convolve(hist, base)
    return hist


def _dot_histograms(a, b) -> int:
    ka, ca = a
    kb, cb = b
    _, ia, ib = np.intersect1d(ka, kb, assume_unique=True, return_indices=True)
    return sum(int(x) * int(y) for x, y in zip(ca[ia], cb[ib]))


def _count_zero_sum_range(keys: np.ndarray, u: int, lo: int, hi: int) -> int:
    """Tuples of u pair keys with XOR zero and first pair index in [lo, hi)."""
    if u == 1:
        return int(np.count_nonzero(keys[lo:hi] == 0))
    front = u // 2
    first = _histogram(keys[lo:hi])
    left = _xor_convolve(first, _power_histogram(keys, front - 1)) if front > 1 else first
    right = _power_histogram(keys, u - front)
    return _dot_histograms(left, right)


def count_zero_sum(keys: np.ndarray, u: int, workers: int = 1) -> int:
    if u == 0:
        return 1
    parts = run_partitioned(_count_zero_sum_range, (keys, u), len(keys), workers)
    return sum(parts)


def count_bruteforce(sp: SolutionSystemParams, workers: int = 1) -> SolutionCount:
    if sp.u == 0:
        return SolutionCount(1, CountMethod.BRUTEFORCE)
    _check_budget(sp)
    value = count_zero_sum(pair_keys(sp), sp.u, workers)
    logger.debug("|V_{%d,%d}| = %d by brute force (m=%d)", sp.s, sp.u, value, sp.p.m)
    return SolutionCount(value, CountMethod.BRUTEFORCE)


def closed_form_value(m: int, e: int, i: int) -> int:
    """2^(mi) sum_u (i over u)_(2^e) 2^(eu(u+1)/2) prod_(j<u) (1 - 2^(ej-m)), cleared of denominators."""
    q = 1 << e
    total = 0
    for u in range(i + 1):
        term = gaussian_binomial(i, u, q) << (e * u * (u + 1) // 2 + m * (i - u))
        for j in range(u):
            term *= (1 << m) - (1 << (e * j))
        total += term
    return total


def count_closed_form(sp: SolutionSystemParams) -> SolutionCount:
    if sp.s < sp.u:
        raise ErrIllegalArguments("closed form needs s >= u, got s={} u={}".format(sp.s, sp.u))
    return SolutionCount(closed_form_value(sp.p.m, sp.p.e, sp.u), CountMethod.CLOSED_FORM)


def counts_upto(sp: SolutionSystemParams, upto: int, method: CountMethod, workers: int = 1) -> List[int]:
    if method == CountMethod.BRUTEFORCE:
        return [count_bruteforce(sp.with_u(i), workers).value for i in range(upto + 1)]
    return [count_closed_form(sp.with_u(i)).value for i in range(upto + 1)]


def recursion_sides(m: int, e: int, u: int, counts: Sequence[int]) -> Tuple[int, int]:
    """Both sides of the alternating sum of 2^(-mi)|V_{s,i}|, scaled by 2^(mu).

    counts[i] is |V_{s,i}| for i = 0..u.
    """
    q = 1 << e
    lhs = sum(_sign(u - i) * (1 << (e * _c2(u - i))) * gaussian_binomial(u, i, q)
              * (counts[i] << (m * (u - i))) for i in range(u + 1))
    rhs = independent_count_value(m, e, u)
    return lhs, rhs


def recursion_check(sp: SolutionSystemParams, method: CountMethod = CountMethod.CLOSED_FORM,
                    workers: int = 1) -> bool:
    """Checks the recursion for every u' in 1..u, with counts from the chosen method."""
    if not sp.s >= sp.u >= 1:
        raise ErrIllegalArguments("need s >= u >= 1, got s={} u={}".format(sp.s, sp.u))
    counts = counts_upto(sp, sp.u, method, workers)
    for u in range(1, sp.u + 1):
        lhs, rhs = recursion_sides(sp.p.m, sp.p.e, u, counts)
        if lhs != rhs:
            logger.info("recursion fails at u=%d: %d != %d (scaled by 2^%d)", u, lhs, rhs, sp.p.m * u)
            return False
    return True


def alternating_moment_sides(m: int, e: int, v: int) -> Tuple[Fraction, int]:
    q = 1 << (2 * e)
    lhs = Fraction(0)
    for i in range(v + 1):
        lhs += Fraction(_sign(v - i) * q ** _c2(v - i) * gaussian_binomial(v, i, q)
                        * closed_form_value(m, e, i), 1 << (m * i))
    rhs = 1
    for j in range(v):
        rhs *= (1 << m) - q ** j
    return lhs * (1 << ((m - e) * v)), rhs


def alternating_moment(sp: SolutionSystemParams, v: int) -> int:
    """The 4^e-analog alternating sum of 2^(-mi)|V_{s,i}|, scaled by 2^((m-e)v).

    Raises ErrTheoremViolated if it differs from prod (2^m - 4^(ej)).
    """
    if not sp.s >= v >= 0:
        raise ErrIllegalArguments("need s >= v >= 0, got s={} v={}".format(sp.s, v))
    lhs, rhs = alternating_moment_sides(sp.p.m, sp.p.e, v)
    if lhs != rhs:
        raise ErrTheoremViolated("alternating moment at v={}: {} != {}".format(v, lhs, rhs))
    return rhs


def expansion_sides(m: int, e: int, i: int) -> Tuple[Fraction, Fraction]:
    if i < 0:
        raise ErrIllegalArguments("need i >= 0, got {}".format(i))
    q = 1 << (2 * e)
    lhs = Fraction(closed_form_value(m, e, i), 1 << (m * i))
    rhs = Fraction(0)
    for j in range(i + 1):
        inner = sum((1 << (e * u)) * gaussian_binomial(i - j, u, q) for u in range(i - j + 1))
        rhs += Fraction(_sign(j) * (1 << (e * j * j)) * gaussian_binomial(i, j, q) * inner, 1 << (m * j))
    return lhs, rhs


def expansion_check(m: int, e: int, i: int) -> bool:
    """2^(-mi)|V_{s,i}| as the double sum over 4^e-binomials, with weight 2^(e j^2)."""
    lhs, rhs = expansion_sides(m, e, i)
    return lhs == rhs


def solution_tuples(sp: SolutionSystemParams) -> np.ndarray:
    """All of V_{s,u} as rows (x_1, ..., x_2u)."""
    _check_budget(sp)
    if sp.u == 0:
        return np.zeros((1, 0), dtype=np.int64)
    m = sp.p.m
    keys = pair_keys(sp)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    prefixes = np.zeros((1, 0), dtype=np.int64)
    prefix_keys = np.zeros(1, dtype=np.int64)
    for _ in range(sp.u - 1):
        pairs = np.arange(len(keys), dtype=np.int64)
        prefixes = np.concatenate([np.repeat(prefixes, len(pairs), axis=0),
                                   np.tile(pairs, len(prefixes))[:, None]], axis=1)
        prefix_keys = (prefix_keys[:, None] ^ keys[None, :]).ravel()
    lo = np.searchsorted(sorted_keys, prefix_keys, side="left")
    hi = np.searchsorted(sorted_keys, prefix_keys, side="right")
    reps = hi - lo
    rows = np.repeat(prefixes, reps, axis=0)
    last = np.concatenate([order[a:b] for a, b in zip(lo, hi)]) if reps.sum() else np.zeros(0, dtype=np.int64)
    pair_idx = np.concatenate([rows, last[:, None]], axis=1)
    tuples = np.empty((len(pair_idx), 2 * sp.u), dtype=np.int64)
    tuples[:, 0::2] = pair_idx >> m
    tuples[:, 1::2] = pair_idx & ((1 << m) - 1)
    return tuples


def _tuple_keys(f: ff.FieldSpec, tuples: np.ndarray, shifts: Sequence[int]) -> np.ndarray:
    total = np.zeros(len(tuples), dtype=np.int64)
    for i in range(tuples.shape[1] // 2):
        total ^= _pack_keys(f, tuples[:, 2 * i], tuples[:, 2 * i + 1], shifts)
    return total


def tilde(p: CodeParams, xs: np.ndarray) -> np.ndarray:
    """x + x^(2^-d) elementwise."""
    return xs ^ ff.frobenius_vec(p.field, xs, p.m - p.d)


def elimination_check(sp: SolutionSystemParams, converse: bool = False) -> bool:
    """Every tuple of V_{s,u} solves the t_0 equation and maps into V_{s-1,u} under x -> x + x^(2^-d).

    With converse=True the reverse inclusion is checked as well, by counting
    all tuples that satisfy both conditions.
    """
    if sp.s < 1:
        raise ErrIllegalArguments("elimination needs s >= 1")
    p = sp.p
    f = p.field
    tuples = solution_tuples(sp)
    first = _tuple_keys(f, tuples, [p.shift(0)])
    lowered = _tuple_keys(f, tilde(p, tuples), system_shifts(p, sp.s - 1))
    if np.any(first) or np.any(lowered):
        return False
    if not converse:
        return True
    x, y = _all_pairs(p.m)
    keys = _pack_keys(f, x, y, [p.shift(0)])
    keys |= _pack_keys(f, tilde(p, x), tilde(p, y), system_shifts(p, sp.s - 1)) << p.m
    eliminated = count_zero_sum(keys, sp.u)
    logger.debug("eliminated system has %d solutions, V has %d", eliminated, len(tuples))
    return eliminated == len(tuples)


def _dependent_rows(p: CodeParams, vectors: np.ndarray) -> np.ndarray:
    """Per row: are the entries GF(2^e)-linearly dependent."""
    f = p.field
    scalars = ff.subfield_basis(f, p.e)
    result = np.zeros(len(vectors), dtype=bool)
    width = vectors.shape[1]
    if width * p.e > p.m:
        result[:] = True
        return result
    scaled = [ff.mul_vec(f, c, vectors[:, i]) for i in range(width) for c in scalars]
    for r in range(len(vectors)):
        rows = [int(col[r]) for col in scaled]
        result[r] = gf2_rank(rows) < len(rows)
    return result


def dependence_check(sp: SolutionSystemParams) -> bool:
    """x_1, x_2, x_4, ..., x_2u are GF(2^e)-dependent for every tuple of V_{s,u}."""
    if sp.u == 0:
        return True
    if sp.s < sp.u:
        raise ErrIllegalArguments("dependence needs s >= u, got s={} u={}".format(sp.s, sp.u))
    tuples = solution_tuples(sp)
    vectors = np.concatenate([tuples[:, :1], tuples[:, 1::2]], axis=1)
    return bool(_dependent_rows(sp.p, vectors).all())


def _rref_subspaces(scalars: List[int], u: int, i: int):
    """Every i-dimensional subspace of GF(2^e)^u, as reduced echelon generator rows."""
    for pivots in itertools.combinations(range(u), i):
        slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, u) if c not in pivots]
        for values in itertools.product(scalars, repeat=len(slots)):
            rows = [[0] * u for _ in range(i)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), val in zip(slots, values):
                rows[r][c] = val
            yield tuple(tuple(row) for row in rows)


def sample_subspaces(p: CodeParams, u: int, i: int, seed: int = constants.DEFAULT_SEED) -> List:
    scalars = ff.subfield_elements(p.field, p.e)
    subspaces = list(_rref_subspaces(scalars, u, i))
    if p.e * u <= constants.SUBSPACE_FULL_ENUM_MAX or len(subspaces) <= constants.SUBSPACE_SAMPLES:
        return subspaces
    return random.Random(seed).sample(subspaces, constants.SUBSPACE_SAMPLES)


def independent_count_value(m: int, e: int, u: int) -> int:
    value = 1 << (e * u * (u + 1) // 2)
    for i in range(u):
        value *= (1 << m) - (1 << (e * i))
    return value


def stabilizer_count_check(sp: SolutionSystemParams, i: int, seed: int = constants.DEFAULT_SEED,
                           workers: int = 1) -> bool:
    """Count tuples of V_{s,u} whose even part annihilates each subspace H of dimension i,
    and tuples whose even coordinates are independent."""
    if not 0 <= i <= sp.u:
        raise ErrIllegalArguments("need 0 <= i <= u, got i={} u={}".format(i, sp.u))
    p = sp.p
    f = p.field
    tuples = solution_tuples(sp)
    evens = tuples[:, 1::2]
    expected = count_bruteforce(sp.with_u(sp.u - i), workers).value << (p.m * i)
    for generators in sample_subspaces(p, sp.u, i, seed):
        mask = np.ones(len(tuples), dtype=bool)
        for row in generators:
            combo = np.zeros(len(tuples), dtype=np.int64)
            for c, col in zip(row, evens.T):
                combo ^= ff.mul_vec(f, c, col)
            mask &= combo == 0
        if int(mask.sum()) != expected:
            logger.info("subspace %s: %d tuples, expected %d", generators, int(mask.sum()), expected)
            return False
    if sp.s >= sp.u >= 1:
        independent = int((~_dependent_rows(p, evens)).sum())
        if independent != independent_count_value(p.m, p.e, sp.u):
            logger.info("independent even parts: %d, expected %d",
                        independent, independent_count_value(p.m, p.e, sp.u))
            return False
    return True


def monotonicity_check(sp: SolutionSystemParams) -> bool:
    """V_{s,u} is contained in V_{s-1,u}."""
    if sp.s < 1:
        raise ErrIllegalArguments("monotonicity needs s >= 1")
    tuples = solution_tuples(sp)
    lower = _tuple_keys(sp.p.field, tuples, system_shifts(sp.p, sp.s - 1))
    return not np.any(lower)


def verify_counts(sp: SolutionSystemParams, workers: int = 1) -> Optional[Tuple[int, int]]:
    """Brute force and closed form side by side; None when they agree."""
    brute = count_bruteforce(sp, workers).value
    closed = count_closed_form(sp).value
    if brute != closed:
        return brute, closed
    return None
