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

"""Both sides of one identity, for the arguments on the command line."""

import logging
import random
from typing import Dict, List, TextIO

from kasami import constants, dataconverter
from kasami.algebra import combinatorics
from kasami.code import solutions
from kasami.code.solutions import SolutionSystemParams
from kasami.datatypes import CountMethod, RunConfig
from kasami.exceptions import ErrIllegalArguments

logger = logging.getLogger(__name__)

HEADERS = ["theorem", "args", "lhs", "rhs", "holds"]
THEOREMS = ["mobius", "vandermonde", "prodform", "twovsone", "qbinomial", "recursion", "expansion", "moment"]

VANDERMONDE_ENTRY_RANGE = 1000


def _args(**kwargs) -> str:
    return ", ".join("{}={}".format(k, v) for k, v in kwargs.items())


def _record(theorem: str, args: str, lhs, rhs) -> Dict:
    return {"theorem": theorem, "args": args, "lhs": str(lhs), "rhs": str(rhs), "holds": lhs == rhs}


def _mobius(cfg: RunConfig) -> List[Dict]:
    u, v, q = dataconverter.required(cfg, "u", "v", "q")
    row, col = combinatorics.mobius_pair_sums(u, v, q)
    return [_record("mobius-row", _args(u=u, v=v, q=q), row, 0),
            _record("mobius-column", _args(u=u, v=v, q=q), col, 0)]


def _vandermonde(cfg: RunConfig) -> List[Dict]:
    u, q = dataconverter.required(cfg, "u", "q")
    rng = random.Random(cfg.seed)
    y = [rng.randint(-VANDERMONDE_ENTRY_RANGE, VANDERMONDE_ENTRY_RANGE) for _ in range(u + 1)]
    x = combinatorics.vandermonde_solve(y, q)
    logger.debug("solution %s", x)
    back = combinatorics.vandermonde_apply(x, q)
    return [_record("vandermonde", _args(u=u, q=q, seed=cfg.seed),
                    " ".join(str(v) for v in back), " ".join(str(v) for v in y))]


def _prodform(cfg: RunConfig) -> List[Dict]:
    i, q = dataconverter.required(cfg, "i", "q")
    return [_record("prodform", _args(q=q, i=i), *combinatorics.product_formula_sides(i, q))]


def _twovsone(cfg: RunConfig) -> List[Dict]:
    u, i, q = dataconverter.required(cfg, "u", "i", "q")
    return [_record("twovsone", _args(u=u, i=i, q=q), *combinatorics.twovsone_sides(u, i, q))]


def _qbinomial(cfg: RunConfig) -> List[Dict]:
    i, q, t = dataconverter.required(cfg, "i", "q", "t")
    if i < 0:
        raise ErrIllegalArguments("need i >= 0, got {}".format(i))
    return [_record("qbinomial", _args(N=i, q=q, t=t), *combinatorics.qbinomial_theorem_sides(i, q, t))]


def _recursion(cfg: RunConfig) -> List[Dict]:
    p = dataconverter.params_from_config(cfg, default_k=1)
    (u,) = dataconverter.required(cfg, "u")
    s = cfg.s if cfg.s is not None else u
    sp = SolutionSystemParams(p, s, u)
    method = CountMethod.BRUTEFORCE if cfg.method == constants.METHOD_ENUMERATE else CountMethod.CLOSED_FORM
    counts = solutions.counts_upto(sp, u, method, cfg.worker_count)
    lhs, rhs = solutions.recursion_sides(p.m, p.e, u, counts)
    return [_record("recursion", _args(m=p.m, e=p.e, s=s, u=u), lhs, rhs)]


def _expansion(cfg: RunConfig) -> List[Dict]:
    p = dataconverter.params_from_config(cfg, default_k=1)
    (i,) = dataconverter.required(cfg, "i")
    return [_record("expansion", _args(m=p.m, e=p.e, i=i), *solutions.expansion_sides(p.m, p.e, i))]


def _moment(cfg: RunConfig) -> List[Dict]:
    p = dataconverter.params_from_config(cfg, default_k=1)
    (v,) = dataconverter.required(cfg, "v")
    if v < 0:
        raise ErrIllegalArguments("need v >= 0, got {}".format(v))
    return [_record("moment", _args(m=p.m, e=p.e, v=v), *solutions.alternating_moment_sides(p.m, p.e, v))]


_DISPATCH = {
    "mobius": _mobius,
    "vandermonde": _vandermonde,
    "prodform": _prodform,
    "twovsone": _twovsone,
    "qbinomial": _qbinomial,
    "recursion": _recursion,
    "expansion": _expansion,
    "moment": _moment,
}


def _text(records: List[Dict]) -> str:
    lines = []
    for r in records:
        relation = "=" if r["holds"] else "!="
        lines.append("{}({}): LHS {} {} RHS {}".format(r["theorem"], r["args"], r["lhs"], relation, r["rhs"]))
    return "\n".join(lines) + "\n"


def call(cfg: RunConfig, out: TextIO) -> int:
    if cfg.theorem not in _DISPATCH:
        raise ErrIllegalArguments("--theorem must be one of {}".format(", ".join(THEOREMS)))
    records = _DISPATCH[cfg.theorem](cfg)
    if cfg.format == constants.FORMAT_TEXT:
        out.write(_text(records))
    else:
        out.write(dataconverter.emit_records(HEADERS, records, cfg.format))
    if not all(r["holds"] for r in records):
        return constants.EXIT_MISMATCH
    return constants.EXIT_OK
