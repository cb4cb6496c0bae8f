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

import pytest

from kasami.code import solutions, spectrum
from kasami.code.forms import make_params
from kasami.datatypes import DcSpectrum, RankSpectrum
from kasami.exceptions import ErrBudgetExceeded, ErrIllegalArguments


class TestFormulas:

    def test_rank_spectra(self, kasami4, kasami4k2):
        assert spectrum.rank_spectrum_formula(kasami4).beta == {4: 3}
        assert spectrum.rank_spectrum_formula(kasami4k2).beta == {4: 28, 2: 35}
        assert spectrum.rank_spectrum_formula(make_params(6, 3, 1, 1)).beta == {6: 7}
        assert spectrum.rank_spectrum_formula(make_params(6, 3, 1, 2)).beta == {6: 196, 4: 315}
        assert spectrum.rank_spectrum_formula(make_params(6, 3, 1, 3)).beta == {6: 13888, 4: 18228, 2: 651}
        assert spectrum.rank_spectrum_formula(make_params(12, 6, 2, 1)).beta == {6: 63}

    def test_kasami4(self, kasami4):
        dc = spectrum.dc_spectrum_formula(kasami4)
        assert dc.dc_counts() == {3: 30, -5: 18, -1: 15}
        assert dc.nonzero_total() == 63
        assert spectrum.weight_distribution(kasami4, dc) == {0: 1, 6: 30, 8: 15, 10: 18}

    def test_kasami4k2(self, kasami4k2):
        dc = spectrum.dc_spectrum_formula(kasami4k2)
        assert dc.dc_counts() == {3: 280, -5: 168, 7: 105, -9: 35, -1: 435}
        assert spectrum.weight_distribution(kasami4k2, dc) == {0: 1, 4: 105, 6: 280, 8: 435, 10: 168, 12: 35}
        assert spectrum.balanced_count_formula(kasami4k2) == 435

    def test_larger(self, kasami6):
        assert spectrum.dc_spectrum_formula(kasami6).dc_counts() == {7: 252, -9: 196, -1: 63}
        dc = spectrum.dc_spectrum_formula(make_params(12, 6, 2, 1))
        assert dc.dc_counts() == {63: 131040, -65: 127008, -1: 4095}
        assert dc.nonzero_total() == (1 << 18) - 1

    def test_dc_values(self, kasami4k2):
        assert spectrum.ranks(kasami4k2) == [4, 2]
        assert spectrum.dc_value_set(kasami4k2) == {-1, 3, -5, 7, -9}

    def test_estimate(self, kasami4):
        with pytest.warns(UserWarning):
            assert spectrum.balanced_count_estimate(kasami4) == 0.0
        p = make_params(6, 3, 1, 3)
        estimate = spectrum.balanced_count_estimate(p)
        exact = spectrum.balanced_count_formula(p)
        assert abs(estimate - exact) < 0.1 * exact

    def test_moment_identities(self, kasami4k2):
        for u in range(2):
            assert spectrum.moment_identity_check(kasami4k2, u)
        p = make_params(6, 3, 1, 3)
        for u in range(3):
            assert spectrum.moment_identity_check(p, u)
        assert 8 * solutions.closed_form_value(6, 1, 2) - (1 << 12) == 472192
        with pytest.raises(ErrIllegalArguments):
            spectrum.moment_identity_check(kasami4k2, 2)

    def test_sign_split(self, kasami4k2):
        dc = spectrum.dc_spectrum_formula(kasami4k2)
        beta = spectrum.rank_spectrum_formula(kasami4k2)
        assert spectrum.sign_split_check(kasami4k2, dc, beta)
        assert not spectrum.sign_split_check(kasami4k2, dc, RankSpectrum(beta={4: 28, 2: 34}))


class TestEnumeration:

    def test_fwht(self):
        assert list(spectrum.fwht([1, 1, 1, 1])) == [4, 0, 0, 0]
        assert list(spectrum.fwht([1, -1, 1, -1])) == [0, 4, 0, 0]

    def test_small(self, kasami4, kasami4k2, kasami6):
        for p in (kasami4, kasami4k2, kasami6):
            dc, beta = spectrum.census_enumerate(p)
            assert spectrum.cross_check(p, dc, beta) is None
            assert spectrum.rank_spectrum_enumerate(p) == beta
        assert spectrum.dc_spectrum_enumerate(kasami4).dc_counts() == {3: 30, -5: 18, -1: 15}

    def test_workers(self, kasami4k2):
        assert spectrum.census_enumerate(kasami4k2, workers=3) == spectrum.census_enumerate(kasami4k2)

    @pytest.mark.slow
    @pytest.mark.parametrize("m,n,d,k", [(6, 3, 1, 2), (6, 3, 1, 3), (12, 6, 2, 1)])
    def test_oracles(self, m, n, d, k):
        p = make_params(m, n, d, k)
        dc, beta = spectrum.census_enumerate(p, workers=2)
        assert spectrum.cross_check(p, dc, beta) is None

    def test_budget(self):
        with pytest.raises(ErrBudgetExceeded):
            spectrum.census_enumerate(make_params(12, 6, 1, 6))

    def test_diff(self, kasami4):
        dc = spectrum.dc_spectrum_formula(kasami4)
        other = DcSpectrum(m=dc.m, e=dc.e, alpha=dict(dc.alpha), balanced=dc.balanced)
        assert spectrum.diff_spectra(dc, other) is None
        other.alpha[(4, 1)] -= 1
        assert spectrum.diff_spectra(dc, other) == "dc 3: 30 != 29"
        assert spectrum.diff_rank_spectra(RankSpectrum({4: 3}), RankSpectrum({4: 2})) == "rank 4: 3 != 2"
