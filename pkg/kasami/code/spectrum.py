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

"""DC-component spectra: closed formulas and the exhaustive census.

The census walks the quadratic part (a_0, ..., a_(k-1)) of the coefficient
vector. For each one, f(x) = Tr(Q_a(x)) with a_k = 0 is tabulated over all
x; the Walsh-Hadamard transform of (-1)^f then lists the exponential sums
of the whole a_k fibre, because x -> Tr(a_k x) runs through every linear
functional exactly once.
"""

import logging
import time
import warnings
from collections import Counter
from fractions import Fraction
from typing import Dict, Optional, Set, Tuple

import numpy as np

from kasami import constants
from kasami.algebra import field as ff
from kasami.algebra.combinatorics import gaussian_binomial
from kasami.algebra.gf2 import gf2_rank
from kasami.code import forms
from kasami.code.forms import CodeParams
from kasami.code.solutions import SolutionSystemParams, count_closed_form
from kasami.datatypes import DcSpectrum, RankSpectrum
from kasami.exceptions import (ErrBudgetExceeded, ErrIllegalArguments, ErrNegativeCount, ErrNonIntegral,
                               ErrTheoremViolated)
from kasami.pool import merge_counters, run_partitioned

logger = logging.getLogger(__name__)


def _c2(x: int) -> int:
    return x * (x - 1) // 2


def _sign(x: int) -> int:
    return -1 if x & 1 else 1


def ranks(p: CodeParams):
    """Even ranks m/e - 2j for j = 0..k-1, highest first."""
    return [p.m // p.e - 2 * j for j in range(p.k)]


def dc_value_set(p: CodeParams) -> Set[int]:
    values = {-1}
    for j in range(p.k):
        values |= {-1 + (1 << (p.m // 2 + j * p.e)), -1 - (1 << (p.m // 2 + j * p.e))}
    return values


def rank_spectrum_formula(p: CodeParams) -> RankSpectrum:
    q = 1 << (2 * p.e)
    half = p.m // (2 * p.e)
    beta = {}
    for j in range(p.k):
        total = 0
        for v in range(j, p.k):
            total += (_sign(v - j) * q ** _c2(v - j) * gaussian_binomial(v, j, q)
                      * gaussian_binomial(half, v, q)
                      * ((1 << (p.n * (2 * p.k - 1 - 2 * v) + p.e * v)) - 1))
        if total < 0:
            raise ErrNegativeCount("beta_{} = {}".format(p.m // p.e - 2 * j, total))
        beta[p.m // p.e - 2 * j] = total
    return RankSpectrum(beta=beta)


def _split(p: CodeParams, r: int, beta: int) -> Tuple[int, int]:
    full = (1 << (p.e * r)) * beta
    half = (1 << (p.e * r // 2)) * beta
    plus, rem_p = divmod(full + half, 2)
    minus, rem_m = divmod(full - half, 2)
    if rem_p or rem_m:
        raise ErrNonIntegral("alpha_({}, +-1) is not integral".format(r))
    return plus, minus


def balanced_count_formula(p: CodeParams) -> int:
    total = Fraction((1 << p.dimension) - 1)
    for v in range(p.k):
        term = Fraction((1 << (p.n * (2 * p.k - 1 - 2 * v) + p.e * v)) - 1)
        term *= Fraction(2) ** (p.m - p.e * v * (v + 1))
        for j in range(v):
            term *= (1 << p.m) - (1 << (2 * p.e * j))
        total -= _sign(v) * term
    if total.denominator != 1:
        raise ErrNonIntegral("balanced count {} is not integral".format(total))
    return int(total)


def balanced_count_estimate(p: CodeParams) -> float:
    """Asymptotic approximation of the balanced count; diagnostic only."""
    if p.k == 1:
        warnings.warn("the balanced-count approximation is an empty sum for k = 1")
    return float(2 ** p.dimension) * sum(_sign(v - 1) * 2.0 ** (-p.e * v * v) for v in range(1, p.k))


def dc_spectrum_formula(p: CodeParams) -> DcSpectrum:
    beta = rank_spectrum_formula(p).beta
    alpha = {}
    for r, b in beta.items():
        alpha[(r, 1)], alpha[(r, -1)] = _split(p, r, b)
    balanced = (1 << p.dimension) - 1 - sum(alpha.values())
    if balanced != balanced_count_formula(p):
        raise ErrTheoremViolated("balanced count: partition gives {}, closed form gives {}".format(
            balanced, balanced_count_formula(p)))
    if balanced < 0:
        raise ErrNegativeCount("balanced count {}".format(balanced))
    return DcSpectrum(m=p.m, e=p.e, alpha=alpha, balanced=balanced)


def fwht(values) -> np.ndarray:
    """Unnormalised Walsh-Hadamard transform along the last axis."""
    a = np.array(values, dtype=np.int64)
    shape = a.shape
    size = shape[-1]
    h = 1
    while h < size:
        a = a.reshape(-1, size // (2 * h), 2, h)
        x = a[:, :, 0, :].copy()
        y = a[:, :, 1, :].copy()
        a[:, :, 0, :] = x + y
        a[:, :, 1, :] = x - y
        h *= 2
    return a.reshape(shape)


def _basis_tables(p: CodeParams, with_signs: bool):
    f = p.field
    xs = np.arange(f.size, dtype=np.int64)
    traces = []
    grams = []
    for b in range(p.quadratic_bits):
        a = forms.coeffs_from_index(p, 1 << b)
        rows = forms.trace_gram_rows(p, a)
        grams.append([(row >> j) & 1 for row in rows for j in range(p.m)])
        if with_signs:
            values = forms.quad_form_vec(p, a, xs)
            traces.append(ff.rel_trace_vec(f, values, p.e, 1))
    gram_table = np.array(grams, dtype=np.int64)
    trace_table = np.array(traces, dtype=np.int64) if with_signs else None
    return trace_table, gram_table


def _census_range(p: CodeParams, trace_table, gram_table, lo: int, hi: int):
    """Census of quadratic parts with index in [lo, hi), the zero part excluded."""
    alpha = Counter()
    beta = Counter()
    balanced = 0
    lo = max(lo, 1)
    weights = (1 << np.arange(p.m, dtype=np.int64))
    bound = p.m // p.e - 2 * (p.k - 1)
    for start in range(lo, hi, constants.ENUMERATION_CHUNK):
        idx = np.arange(start, min(hi, start + constants.ENUMERATION_CHUNK), dtype=np.int64)
        bits = (idx[:, None] >> np.arange(p.quadratic_bits, dtype=np.int64)) & 1
        gram = ((bits @ gram_table) & 1).reshape(len(idx), p.m, p.m)
        packed = (gram * weights).sum(axis=2)
        f2_ranks = np.array([gf2_rank([int(v) for v in row]) for row in packed], dtype=np.int64)
        if np.any(f2_ranks % (2 * p.e)):
            raise ErrTheoremViolated("odd rank found below index {}".format(int(idx[-1]) + 1))
        rk = f2_ranks // p.e
        if np.any(rk < bound):
            bad = int(idx[np.argmax(rk < bound)])
            raise ErrTheoremViolated("rank below m/e - 2(k-1) at quadratic index {}".format(bad))
        for r, c in zip(*np.unique(rk, return_counts=True)):
            beta[int(r)] += int(c)
        if trace_table is None:
            continue
        f = (bits @ trace_table) & 1
        sums = fwht(1 - 2 * f)
        mag = np.left_shift(1, p.m - p.e * rk // 2)[:, None]
        pos = (sums == mag).sum(axis=1)
        neg = (sums == -mag).sum(axis=1)
        zero = (sums == 0).sum(axis=1)
        if np.any(pos + neg + zero != (1 << p.m)):
            raise ErrTheoremViolated("exponential sum outside {0, +-2^(m - er/2)}")
        if np.any(pos + neg != np.left_shift(1, p.e * rk)):
            raise ErrTheoremViolated("nonzero exponential sums do not number 2^(er)")
        for r in np.unique(rk):
            sel = rk == r
            alpha[(int(r), 1)] += int(pos[sel].sum())
            alpha[(int(r), -1)] += int(neg[sel].sum())
        balanced += int(zero.sum())
    return alpha, balanced, beta


def _check_enumeration_budget(p: CodeParams):
    if p.dimension > constants.ENUMERATION_MAX_BITS:
        raise ErrBudgetExceeded("enumeration needs n(2k+1) <= {}, got {}".format(
            constants.ENUMERATION_MAX_BITS, p.dimension))
    if p.m > constants.LOG_TABLE_MAX_DEGREE:
        raise ErrBudgetExceeded("enumeration needs m <= {}".format(constants.LOG_TABLE_MAX_DEGREE))


def _census(p: CodeParams, workers: int, with_signs: bool):
    _check_enumeration_budget(p)
    started = time.monotonic()
    trace_table, gram_table = _basis_tables(p, with_signs)
    total = 1 << p.quadratic_bits
    parts = run_partitioned(_census_range, (p, trace_table, gram_table), total, workers)
    alpha = merge_counters([part[0] for part in parts])
    balanced = sum(part[1] for part in parts)
    beta = merge_counters([part[2] for part in parts])
    logger.info("census of %d quadratic parts (m=%d, k=%d) took %.2fs",
                total, p.m, p.k, time.monotonic() - started)
    return alpha, balanced, beta


def rank_spectrum_enumerate(p: CodeParams, workers: int = 1) -> RankSpectrum:
    _, _, beta = _census(p, workers, with_signs=False)
    return RankSpectrum(beta={r: beta.get(r, 0) for r in ranks(p)})


def census_enumerate(p: CodeParams, workers: int = 1) -> Tuple[DcSpectrum, RankSpectrum]:
    """DC and rank spectra from a single pass over the quadratic parts."""
    alpha, balanced, beta = _census(p, workers, with_signs=True)
    # zero quadratic part, a_k != 0: linear character sums vanish
    balanced += (1 << p.m) - 1
    full = {}
    for r in ranks(p):
        full[(r, 1)] = alpha.get((r, 1), 0)
        full[(r, -1)] = alpha.get((r, -1), 0)
    spectrum = DcSpectrum(m=p.m, e=p.e, alpha=full, balanced=balanced)
    stray = set(spectrum.dc_counts()) - dc_value_set(p)
    if stray:
        raise ErrTheoremViolated("DC values outside the admissible set: {}".format(sorted(stray)))
    return spectrum, RankSpectrum(beta={r: beta.get(r, 0) for r in ranks(p)})


def dc_spectrum_enumerate(p: CodeParams, workers: int = 1) -> DcSpectrum:
    return census_enumerate(p, workers)[0]


def moment_identity_check(p: CodeParams, u: int, beta: Optional[RankSpectrum] = None) -> bool:
    """sum_i beta_(m/e-2i) 4^(eiu) == 2^(n(2k-1-2u)) |V_{k-1,u}| - 2^(mu)."""
    if not 0 <= u <= p.k - 1:
        raise ErrIllegalArguments("need 0 <= u <= k-1, got {}".format(u))
    if beta is None:
        beta = rank_spectrum_formula(p)
    lhs = sum(beta.beta.get(p.m // p.e - 2 * i, 0) << (2 * p.e * i * u) for i in range(p.k))
    v = count_closed_form(SolutionSystemParams(p, p.k - 1, u)).value
    rhs = (v << (p.n * (2 * p.k - 1 - 2 * u))) - (1 << (p.m * u))
    return lhs == rhs


def sign_split_check(p: CodeParams, spectrum: DcSpectrum, beta: RankSpectrum) -> bool:
    for r in ranks(p):
        b = beta.beta.get(r, 0)
        plus = spectrum.alpha.get((r, 1), 0)
        minus = spectrum.alpha.get((r, -1), 0)
        if plus + minus != (b << (p.e * r)) or plus - minus != (b << (p.e * r // 2)):
            return False
    return True


def weight_distribution(p: CodeParams, spectrum: DcSpectrum) -> Dict[int, int]:
    length = (1 << p.m) - 1
    weights = Counter()
    if spectrum.zero_included:
        weights[0] += 1
    for dc, count in spectrum.dc_counts().items():
        w, rem = divmod(length - dc, 2)
        if rem:
            raise ErrNonIntegral("DC value {} has odd distance from {}".format(dc, length))
        weights[w] += count
    return dict(sorted(weights.items()))


def diff_spectra(left: DcSpectrum, right: DcSpectrum) -> Optional[str]:
    """First differing entry, or None when the spectra agree."""
    for key in sorted(set(left.alpha) | set(right.alpha), key=lambda k: (-k[0], -k[1])):
        a = left.alpha.get(key, 0)
        b = right.alpha.get(key, 0)
        if a != b:
            return "dc {}: {} != {}".format(left.dc_value(*key), a, b)
    if left.balanced != right.balanced:
        return "dc -1: {} != {}".format(left.balanced, right.balanced)
    return None


def diff_rank_spectra(left: RankSpectrum, right: RankSpectrum) -> Optional[str]:
    for r in sorted(set(left.beta) | set(right.beta), reverse=True):
        if left.beta.get(r, 0) != right.beta.get(r, 0):
            return "rank {}: {} != {}".format(r, left.beta.get(r, 0), right.beta.get(r, 0))
    return None


def cross_check(p: CodeParams, enumerated: DcSpectrum, enumerated_beta: RankSpectrum) -> Optional[str]:
    """First disagreement between the closed formulas and a census, or None."""
    diff = diff_spectra(dc_spectrum_formula(p), enumerated)
    if diff is None:
        diff = diff_rank_spectra(rank_spectrum_formula(p), enumerated_beta)
    if diff is not None:
        return diff
    if not sign_split_check(p, enumerated, enumerated_beta):
        return "alpha does not split beta by sign"
    for u in range(p.k):
        if not moment_identity_check(p, u, enumerated_beta):
            return "rank moment identity fails at u={}".format(u)
    return None
