# Copyright 2021 CodeNotary, Inc. All rights reserved.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#       http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, Optional, Tuple

from kasami import constants


class CountMethod(IntEnum):
    BRUTEFORCE = 0
    CLOSED_FORM = 1


@dataclass
class SolutionCount:
    value: int
    method: CountMethod


@dataclass
class RankSpectrum:
    """beta_r for every even rank r, keyed by r.

    beta_r counts coefficient vectors with nonzero quadratic part and
    rk(B_a) = r, divided by the 2^m-fold fibre of the linear term a_k.
    """
    beta: Dict[int, int]

    def total(self) -> int:
        return sum(self.beta.values())


@dataclass
class DcSpectrum:
    """DC-component census of the nonzero codewords.

    alpha is keyed by (r, eps): the codewords whose DC equals
    -1 + eps * 2^(m - e*r/2). Balanced codewords (DC = -1) are counted
    separately.
    """
    m: int
    e: int
    alpha: Dict[Tuple[int, int], int]
    balanced: int
    zero_included: bool = True

    def dc_value(self, r: int, eps: int) -> int:
        return -1 + eps * (1 << (self.m - self.e * r // 2))

    def dc_counts(self) -> Dict[int, int]:
        counts = {}
        for (r, eps), count in self.alpha.items():
            if count:
                counts[self.dc_value(r, eps)] = count
        if self.balanced:
            counts[-1] = counts.get(-1, 0) + self.balanced
        return counts

    def nonzero_total(self) -> int:
        return sum(self.alpha.values()) + self.balanced


@dataclass
class CheckResult:
    name: str
    passed: bool


@dataclass
class RunConfig:
    subcommand: str
    m: Optional[int] = None
    n: Optional[int] = None
    d: Optional[int] = None
    k: Optional[int] = None
    method: str = constants.METHOD_FORMULA
    format: str = constants.FORMAT_TEXT
    output_path: Optional[str] = None
    worker_count: int = constants.DEFAULT_WORKERS
    seed: int = constants.DEFAULT_SEED
    s: Optional[int] = None
    u: Optional[int] = None
    decimation: int = 1
    phase: Optional[int] = None
    theorem: Optional[str] = None
    q: Optional[int] = None
    i: Optional[int] = None
    v: Optional[int] = None
    suite: str = "all"
    t: Optional[int] = None
