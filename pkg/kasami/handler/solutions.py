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

import logging
from typing import TextIO

from kasami import constants, dataconverter
from kasami.code.solutions import SolutionSystemParams, count_bruteforce, count_closed_form
from kasami.datatypes import RunConfig
from kasami.exceptions import ErrIllegalArguments, ErrTheoremViolated

logger = logging.getLogger(__name__)

HEADERS = ["m", "n", "d", "e", "s", "u", "method", "count", "scope"]


def call(cfg: RunConfig, out: TextIO) -> int:
    """|V_{s,u}| by brute force, closed form, or both.

    The closed form is only proven for s >= u; below that, brute force still
    runs and its row is marked empirical.
    """
    p = dataconverter.params_from_config(cfg, default_k=1)
    s, u = dataconverter.required(cfg, "s", "u")
    sp = SolutionSystemParams(p, s, u)
    if cfg.method not in (constants.METHOD_FORMULA, constants.METHOD_ENUMERATE, constants.METHOD_BOTH):
        raise ErrIllegalArguments("unknown method {}".format(cfg.method))
    base = {"m": p.m, "n": p.n, "d": p.d, "e": p.e, "s": s, "u": u}
    scope = "proven" if s >= u else "empirical"
    records = []
    brute = closed = None
    if cfg.method != constants.METHOD_FORMULA:
        brute = count_bruteforce(sp, cfg.worker_count).value
        records.append(dict(base, method="bruteforce", count=str(brute), scope=scope))
    if cfg.method == constants.METHOD_FORMULA or s >= u:
        closed = count_closed_form(sp).value
        records.append(dict(base, method="closed_form", count=str(closed), scope="proven"))
    out.write(dataconverter.emit_records(HEADERS, records, cfg.format))
    if brute is not None and closed is not None and brute != closed:
        raise ErrTheoremViolated("|V_{{{},{}}}|: brute force {} != closed form {}".format(s, u, brute, closed))
    return constants.EXIT_OK
