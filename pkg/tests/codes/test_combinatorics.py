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

import random
from fractions import Fraction

import pytest

from kasami.algebra import combinatorics as comb
from kasami.algebra import field as ff
from kasami.exceptions import ErrIllegalArguments, ErrTheoremViolated

QS = (2, 3, 4, 5)


def test_gaussian_binomial():
    assert comb.gaussian_binomial(4, 2, 2) == 35
    assert comb.gaussian_binomial(2, 1, 4) == 5
    assert comb.gaussian_binomial(5, 0, 3) == 1
    assert comb.gaussian_binomial(5, 5, 3) == 1
    assert comb.gaussian_binomial(2, 3, 2) == 0
    assert comb.gaussian_binomial(3, -1, 2) == 0
    with pytest.raises(ErrIllegalArguments):
        comb.gaussian_binomial(3, 1, 1)


def test_gaussian_binomial_symmetry():
    for q in QS:
        for u in range(9):
            for i in range(u + 1):
                assert comb.gaussian_binomial(u, i, q) == comb.gaussian_binomial(u, u - i, q)


def _subspace_counts(u, scalars, scale, top):
    """Number of i-dimensional subspaces of F_q^u for i <= top, by building every one.

    Vectors are packed ints whose addition is XOR; scale(c, v) multiplies v by c.
    """
    vectors = range(1 << (u * (len(scalars).bit_length() - 1)))
    level = {frozenset([0])}
    counts = [1]
    for _ in range(top):
        level = {frozenset(s ^ scale(c, v) for s in sub for c in scalars)
                 for sub in level for v in vectors if v not in sub}
        counts.append(len(level))
    return counts


def test_gaussian_binomial_counts_subspaces_q2():
    for u in range(1, 6):
        counts = _subspace_counts(u, [0, 1], lambda c, v: v if c else 0, u)
        assert counts == [comb.gaussian_binomial(u, i, 2) for i in range(u + 1)]


@pytest.mark.slow
def test_gaussian_binomial_counts_subspaces_q4():
    f4 = ff.make_field(2)
    scalars = ff.subfield_elements(f4, 2)

    def coordinatewise(c, v):
        out, pos = 0, 0
        while v >> pos:
            out |= ff.mul(f4, c, (v >> pos) & 3) << pos
            pos += 2
        return out

    table = {c: [coordinatewise(c, v) for v in range(1 << 10)] for c in scalars}
    for u in range(1, 6):
        top = u if u <= 3 else 2
        counts = _subspace_counts(u, scalars, lambda c, v: table[c][v], top)
        assert counts == [comb.gaussian_binomial(u, i, 4) for i in range(top + 1)]
    assert comb.gaussian_binomial(5, 2, 4) == comb.gaussian_binomial(5, 3, 4) == 5797


def test_mobius_pairs():
    for q in QS:
        for u in range(1, 9):
            for v in range(u):
                assert comb.mobius_pair_check(u, v, q)
    assert comb.mobius_pair_sums(3, 1, 2) == (0, 0)
    with pytest.raises(ErrIllegalArguments):
        comb.mobius_pair_check(2, 2, 2)


def test_vandermonde():
    assert comb.vandermonde_solve([0, 3], 4) == [-1, 1]
    assert comb.vandermonde_apply([-1, 1], 4) == [0, 3]
    rng = random.Random(7)
    for _ in range(100):
        q = rng.choice(QS)
        y = [rng.randint(-1000, 1000) for _ in range(rng.randint(1, 9))]
        x = comb.vandermonde_solve(y, q)
        assert comb.vandermonde_apply(x, q) == y
        assert all(isinstance(v, Fraction) for v in x)
    with pytest.raises(ErrIllegalArguments):
        comb.vandermonde_solve([], 2)


def test_vandermonde_failure_is_an_error(monkeypatch):
    monkeypatch.setattr(comb, "vandermonde_apply", lambda x, q: [v + 1000 for v in x])
    with pytest.raises(ErrTheoremViolated):
        comb.vandermonde_solve([1, 2], 2)


def test_product_formulas():
    assert comb.product_formula_sides(2, 2) == (15, 15)
    assert comb.twovsone_sides(2, 1, 2) == (15, 15)
    for q in QS:
        for i in range(1, 9):
            assert comb.product_formula_check(i, q)
            for u in range(i, 9):
                assert comb.twovsone_check(u, i, q)
    with pytest.raises(ErrIllegalArguments):
        comb.product_formula_sides(0, 2)
    with pytest.raises(ErrIllegalArguments):
        comb.twovsone_sides(1, 2, 2)


def test_binomial_relations():
    for q in QS:
        for i in range(1, 8):
            for j in range(1, i + 1):
                assert comb.pascal_check(i, j, q)
        for v in range(6):
            for i in range(v + 1):
                for u in range(i + 1):
                    for j in range(i + 1):
                        assert comb.triple_product_check(v, u, i, j, q)
                    for j in range(u + 1):
                        assert comb.subspace_chain_check(i, u, j, q)
    with pytest.raises(ErrIllegalArguments):
        comb.pascal_check(2, 0, 2)
    with pytest.raises(ErrIllegalArguments):
        comb.subspace_chain_check(1, 2, 0, 2)


def test_qbinomial_theorem():
    for q in QS:
        for n in range(9):
            for t in (-2, 0, 1, 3, Fraction(1, 3)):
                assert comb.qbinomial_theorem_check(n, q, t)
    # t = 1 kills the product for every N >= 1
    assert comb.qbinomial_theorem_sides(3, 2, 1) == (0, 0)
    with pytest.raises(ErrIllegalArguments):
        comb.qbinomial_theorem_check(-1, 2, 1)
