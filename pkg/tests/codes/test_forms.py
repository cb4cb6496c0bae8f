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

from collections import Counter

import numpy as np
import pytest

from kasami.algebra import field as ff
from kasami.code import forms
from kasami.code.forms import CoeffVector, make_params
from kasami.code.sequences import codeword
from kasami.exceptions import ErrIllegalArguments, ErrInvalidParams


class TestCodeParams:

    def test_derived(self, kasami4, kasami4k2):
        assert kasami4.e == 1
        assert kasami4.shift(0) == kasami4.n == 2
        assert kasami4.shift(1) == 1
        assert kasami4.dimension == 6
        assert kasami4k2.quadratic_bits == 6
        assert kasami4k2.coeff_bits == 10
        assert kasami4k2.dimension == 10

    def test_nontrivial_e(self):
        p = make_params(12, 6, 2, 3)
        assert p.e == 2
        assert p.shift(0) == 6
        # (4, 2, 2) is a valid, degenerate tower with e = 2
        assert make_params(4, 2, 2, 1).e == 2

    def test_rejects(self):
        with pytest.raises(ErrInvalidParams, match=r"gcd\(n,d\) != gcd\(m,d\)"):
            make_params(6, 3, 2, 1)
        with pytest.raises(ErrInvalidParams, match=r"gcd\(n,d\) != gcd\(m,d\)"):
            make_params(4, 2, 4, 1)
        with pytest.raises(ErrInvalidParams):
            make_params(4, 2, 2, 2)
        with pytest.raises(ErrInvalidParams):
            make_params(6, 2, 1, 1)
        with pytest.raises(ErrInvalidParams):
            make_params(4, 2, 1, 0)
        with pytest.raises(ErrIllegalArguments):
            make_params(4, 0, 1, 1)

    def test_coeffs_from_index(self, kasami4k2):
        assert forms.coeffs_from_index(kasami4k2, 0) == forms.zero_coeffs(kasami4k2)
        a = forms.coeffs_from_index(kasami4k2, 1 << 9)
        assert a.quadratic_is_zero() and a.ak != 0
        b = forms.coeffs_from_index(kasami4k2, 0b101)
        assert ff.in_subfield(kasami4k2.field, b.a0, 2)
        assert (a ^ b) == forms.coeffs_from_index(kasami4k2, (1 << 9) | 0b101)
        with pytest.raises(ErrIllegalArguments):
            forms.coeffs_from_index(kasami4k2, 1 << 10)


class TestForms:

    def test_a0_must_lie_in_subfield(self, kasami4):
        with pytest.raises(ErrIllegalArguments):
            forms.quad_form(kasami4, CoeffVector(2, (), 0), 1)

    def test_vectorised(self, kasami4k2):
        xs = np.arange(16)
        for index in (3, 37, 600, 1023):
            a = forms.coeffs_from_index(kasami4k2, index)
            values = forms.quad_form_vec(kasami4k2, a, xs)
            assert [int(v) for v in values] == [forms.quad_form(kasami4k2, a, x) for x in range(16)]

    def test_polarisation(self, kasami4k2):
        a = forms.coeffs_from_index(kasami4k2, 0b1011010110)
        for x in range(16):
            for y in range(16):
                lhs = forms.quad_form(kasami4k2, a, x ^ y) ^ forms.quad_form(kasami4k2, a, x)                     ^ forms.quad_form(kasami4k2, a, y)
                assert lhs == forms.bilinear_form(kasami4k2, a, x, y)

    def test_gram(self, kasami4k2):
        a = forms.coeffs_from_index(kasami4k2, 0b110011)
        g = forms.gram_matrix(kasami4k2, a)
        assert g.dim == 4
        assert g.is_alternating()
        assert "class GramMatrix" in repr(g)

    def test_rank_census(self, kasami4, kasami4k2):
        census = Counter(forms.rank(kasami4, forms.coeffs_from_index(kasami4, i)) for i in range(1, 4))
        assert census == {4: 3}
        census = Counter(forms.rank(kasami4k2, forms.coeffs_from_index(kasami4k2, i)) for i in range(1, 64))
        assert census == {4: 28, 2: 35}

    def test_rank_via_trace(self, kasami4k2):
        for i in range(64):
            a = forms.coeffs_from_index(kasami4k2, i)
            assert forms.rank_via_trace(kasami4k2, a) == forms.rank(kasami4k2, a)
        p = make_params(8, 4, 2, 2)
        for i in (1, 5, 77, 3000):
            a = forms.coeffs_from_index(p, i)
            assert forms.rank_via_trace(p, a) == forms.rank(p, a)

    def test_radical(self, kasami4k2):
        f = kasami4k2.field
        for i in range(64):
            a = forms.coeffs_from_index(kasami4k2, i)
            rad = forms.radical(kasami4k2, a)
            assert len(rad) == 4 - forms.rank(kasami4k2, a)
            for z in rad:
                assert all(forms.bilinear_form(kasami4k2, a, z, x) == 0 for x in range(16))
            assert not ff.linearly_dependent(f, rad, 1)

    def test_quad_rank_decides_balance(self, kasami4k2):
        for index in range(1 << kasami4k2.coeff_bits):
            a = forms.coeffs_from_index(kasami4k2, index)
            total = codeword(kasami4k2, a).dc + 1
            assert (total == 0) == (forms.quad_rank(kasami4k2, a) % 2 == 1)
