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

"""Linear algebra over GF(2) on rows packed into Python ints."""

from typing import List


def gf2_rank(rows: List[int]) -> int:
    return len(gf2_echelon(rows))


def gf2_echelon(rows: List[int]) -> List[int]:
    """Echelon basis of the row span, sorted by leading bit, highest first."""
    basis = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return basis


def gf2_in_span(vec: int, basis: List[int]) -> bool:
    for b in basis:
        vec = min(vec, vec ^ b)
    return vec == 0


def bits_to_int(bits) -> int:
    """Pack a 0/1 sequence with bits[0] as the least significant bit."""
    value = 0
    for i, bit in enumerate(bits):
        if bit:
            value |= 1 << i
    return value
