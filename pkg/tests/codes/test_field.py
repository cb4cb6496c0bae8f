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

import numpy as np
import pytest

from kasami.algebra import field as ff
from kasami.algebra.gf2 import bits_to_int, gf2_echelon, gf2_in_span, gf2_rank
from kasami.exceptions import ErrBudgetExceeded, ErrIllegalArguments, ErrNotInSubfield


class TestField:

    def test_modulus(self, field16):
        # x^4 + x + 1
        assert field16.modulus == 0b10011
        assert field16.has_tables
        assert len(field16.pi_powers) == 15
        assert sorted(field16.pi_powers.tolist()) == list(range(1, 16))
        assert ff.mul(field16, ff.pi_power(field16, 14), ff.pi_power(field16, 14)) == ff.pi_power(field16, 13)

    def test_arithmetic(self, field16):
        pi = ff.pi_power(field16, 1)
        assert pi == 2
        assert ff.mul(field16, pi, ff.pi_power(field16, 3)) == 3
        assert ff.frobenius_pow(field16, pi, 2) == 3
        assert ff.add(5, 5) == 0
        assert ff.pi_power(field16, 15) == 1
        assert ff.pi_power(field16, -1) == ff.inverse(field16, pi)

    def test_inverse(self, field64):
        for x in range(1, field64.size):
            assert ff.mul(field64, x, ff.inverse(field64, x)) == 1
        with pytest.raises(ErrIllegalArguments):
            ff.inverse(field64, 0)
        with pytest.raises(ErrIllegalArguments):
            ff.power(field64, 0, 0)

    def test_trace(self, field16):
        assert ff.rel_trace(field16, 2, 4, 1) == 0
        assert ff.rel_trace(field16, 1, 4, 2) == 0
        ones = sum(ff.rel_trace(field16, x, 4, 1) for x in range(16))
        assert ones == 8
        with pytest.raises(ErrNotInSubfield):
            ff.rel_trace(field16, 2, 2, 1)
        with pytest.raises(ErrIllegalArguments):
            ff.rel_trace(field16, 1, 3, 1)

    def test_subfields(self, field16, field64):
        assert ff.subfield_elements(field16, 2) == [0, 1, 6, 7]
        assert ff.subfield_elements(field16, 1) == [0, 1]
        assert len(ff.subfield_elements(field64, 3)) == 8
        assert all(ff.in_subfield(field64, x, 3) for x in ff.subfield_elements(field64, 3))
        with pytest.raises(ErrIllegalArguments):
            ff.subfield_elements(field64, 4)

    def test_basis(self, field64):
        basis = ff.subfield_basis(field64, 6)
        assert len(basis) == 6
        assert not ff.linearly_dependent(field64, list(basis), 1)
        assert len(ff.span(field64, basis, [0, 1])) == 64
        assert len(ff.subfield_basis(field64, 6, over=2)) == 3
        assert ff.linearly_dependent(field64, [1, 2, 3], 1)

    def test_vectorised_agrees(self, field64):
        xs = np.arange(64)
        ys = (xs * 7 + 3) % 64
        prod = ff.mul_vec(field64, xs, ys)
        frob = ff.frobenius_vec(field64, xs, 4)
        tr = ff.rel_trace_vec(field64, xs, 6, 2)
        for x, y in zip(range(64), ys):
            assert prod[x] == ff.mul(field64, x, int(y))
            assert frob[x] == ff.frobenius_pow(field64, x, 4)
            assert tr[x] == ff.rel_trace(field64, x, 6, 2)

    def test_without_tables(self, field64):
        bare = ff.FieldSpec(m=6, modulus=field64.modulus)
        assert not bare.has_tables
        for x in range(1, 64):
            assert ff.mul(bare, x, 37) == ff.mul(field64, x, 37)
            assert ff.frobenius_pow(bare, x, 5) == ff.frobenius_pow(field64, x, 5)
            assert ff.power(bare, x, 10) == ff.power(field64, x, 10)
        with pytest.raises(ErrBudgetExceeded):
            ff.mul_vec(bare, [1], [1])

    def test_degree_range(self):
        with pytest.raises(ErrIllegalArguments):
            ff.make_field(1)
        with pytest.raises(ErrIllegalArguments):
            ff.make_field(25)


def test_gf2():
    rows = [0b110, 0b011, 0b101]
    assert gf2_rank(rows) == 2
    basis = gf2_echelon(rows)
    assert gf2_in_span(0b101, basis)
    assert not gf2_in_span(0b001, basis)
    assert gf2_rank([]) == 0
    assert bits_to_int([1, 0, 1, 1]) == 0b1101
