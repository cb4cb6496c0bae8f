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

"""The m-sequence s, its decimations, and the codewords c_a.

Bit i of every sequence here is indexed by pi^(-i). Decimated sequences
keep the full length 2^m - 1 and carry their true period separately.
"""

import logging
import warnings
from dataclasses import dataclass
from typing import List

import numpy as np
import sympy

from kasami import constants
from kasami.algebra import field as ff
from kasami.algebra.gf2 import bits_to_int, gf2_echelon, gf2_in_span
from kasami.code.forms import CodeParams, CoeffVector, coeffs_from_index, quad_form_vec
from kasami.exceptions import ErrBudgetExceeded, ErrIllegalArguments

logger = logging.getLogger(__name__)


@dataclass
class BitSequence:
    bits: np.ndarray
    period: int

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return int(self.bits.sum())

    def to_ascii(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    def to_int(self) -> int:
        return bits_to_int(self.bits)


@dataclass
class Codeword:
    bits: np.ndarray
    dc: int

    @property
    def weight(self) -> int:
        return int(self.bits.sum())

    def to_int(self) -> int:
        return bits_to_int(self.bits)


def _inverse_powers(f: ff.FieldSpec) -> np.ndarray:
    idx = (-np.arange(f.order, dtype=np.int64)) % f.order
    if f.has_tables:
        return f.pi_powers[idx]
    return np.array([ff.pi_power(f, int(i)) for i in idx], dtype=np.int64)


def true_period(bits: np.ndarray) -> int:
    length = len(bits)
    for p in sympy.divisors(length):
        if np.array_equal(bits, np.roll(bits, -p)):
            return p
    return length


def m_sequence(f: ff.FieldSpec) -> BitSequence:
    """s_i = Tr(pi^-i), i in [0, 2^m - 2]."""
    xs = _inverse_powers(f)
    if f.has_tables:
        bits = ff.rel_trace_vec(f, xs, f.m, 1).astype(np.uint8)
    else:
        bits = np.array([ff.rel_trace(f, int(x), f.m, 1) for x in xs], dtype=np.uint8)
    return BitSequence(bits=bits, period=true_period(bits))


def base_sequence(p: CodeParams) -> BitSequence:
    return m_sequence(p.field)


def shift(seq: BitSequence, t: int) -> BitSequence:
    """output_i = seq_(i + t)."""
    return BitSequence(bits=np.roll(seq.bits, -t), period=seq.period)


def circular_decimate(seq: BitSequence, factor: int) -> BitSequence:
    if factor < 1:
        raise ErrIllegalArguments("decimation factor must be positive, got {}".format(factor))
    length = seq.length
    bits = seq.bits[(np.arange(length, dtype=np.int64) * factor) % length]
    return BitSequence(bits=bits, period=true_period(bits))


def autocorrelation(seq: BitSequence, t: int) -> int:
    bipolar = 1 - 2 * seq.bits.astype(np.int64)
    return int(np.dot(bipolar, np.roll(bipolar, -t)))


def dc_component(c: Codeword) -> int:
    return len(c.bits) - 2 * int(c.bits.sum())


def codeword(p: CodeParams, a: CoeffVector) -> Codeword:
    f = p.field
    values = quad_form_vec(p, a, _inverse_powers(f))
    bits = ff.rel_trace_vec(f, values, p.e, 1).astype(np.uint8)
    c = Codeword(bits=bits, dc=0)
    c.dc = dc_component(c)
    return c


def decimation_factor(p: CodeParams, j: int) -> int:
    return (1 << p.shift(j)) + 1


def _expect_period(name: str, seq: BitSequence, expected: int):
    if seq.period != expected:
        warnings.warn("{} has period {}, expected {}".format(name, seq.period, expected))


def generator_sequences(p: CodeParams) -> List[BitSequence]:
    """s, s_0, s_1, ..., s_(k-1).

    s_0 decimates the first phase of s whose decimation is not identically
    zero; decimating s itself by 2^n + 1 always gives the zero sequence.
    """
    s = base_sequence(p)
    d0 = decimation_factor(p, 0)
    s0 = None
    for phase in range(s.length):
        s0 = circular_decimate(shift(s, phase), d0)
        if s0.weight:
            logger.debug("s_0 taken at phase %d", phase)
            break
    _expect_period("s_0", s0, (1 << p.n) - 1)
    result = [s, s0]
    for j in range(1, p.k):
        sj = circular_decimate(s, decimation_factor(p, j))
        _expect_period("s_{}".format(j), sj, s.length)
        result.append(sj)
    return result


def _shift_rows(gens: List[BitSequence]) -> List[int]:
    rows = []
    for g in gens:
        for t in range(g.period):
            rows.append(shift(g, t).to_int())
    return rows


def code_dimension(p: CodeParams) -> int:
    return len(gf2_echelon(_shift_rows(generator_sequences(p))))


def _span_elements(basis: List[int]) -> List[int]:
    elements = [0]
    for b in basis:
        elements += [x ^ b for x in elements]
    return elements


def span_equality_check(p: CodeParams) -> bool:
    """Every c_a, and nothing else, lies in the span of the shifted generators."""
    if p.m > constants.SPAN_CHECK_MAX_DEGREE or p.dimension > constants.SPAN_CHECK_MAX_BITS:
        raise ErrBudgetExceeded("span check needs m <= {} and n(2k+1) <= {}".format(
            constants.SPAN_CHECK_MAX_DEGREE, constants.SPAN_CHECK_MAX_BITS))
    shifts = gf2_echelon(_shift_rows(generator_sequences(p)))
    if len(shifts) != p.dimension:
        logger.info("shift span has dimension %d, expected %d", len(shifts), p.dimension)
        return False
    words = sorted(codeword(p, coeffs_from_index(p, i)).to_int() for i in range(1 << p.coeff_bits))
    if len(set(words)) != len(words):
        return False
    if not all(gf2_in_span(w, shifts) for w in words):
        return False
    return words == sorted(_span_elements(shifts))
