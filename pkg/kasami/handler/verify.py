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

"""Batch driver: every identity and oracle, as a pass/fail table.

The report is deterministic for a given seed; wall time goes to the log.
"""

import json
import logging
import random
import time
from typing import Callable, Iterator, List, TextIO, Tuple

from kasami import constants, dataconverter
from kasami.algebra import combinatorics as comb
from kasami.algebra import field as ff
from kasami.code import sequences, solutions, spectrum
from kasami.code.forms import make_params
from kasami.code.solutions import SolutionSystemParams
from kasami.datatypes import CheckResult, CountMethod, RunConfig
from kasami.exceptions import (ErrIllegalArguments, ErrNegativeCount, ErrNonIntegral, ErrSpectrumMismatch,
                               ErrTheoremViolated)

logger = logging.getLogger(__name__)

Check = Tuple[str, Callable[[], bool]]

SUITES = ["identities", "solutions", "sequences", "spectrum"]
HEADERS = ["check", "result"]

Q_VALUES = (2, 3, 4, 5)
MAX_INDEX = 8
VANDERMONDE_VECTORS = 100
QBINOMIAL_T = range(-3, 4)

# (m, n, d, s, u) with the expected |V_{s,u}|
SOLUTION_ORACLES = [(4, 2, 1, 1, 1, 46), (6, 3, 1, 2, 1, 190), (6, 3, 1, 2, 2, 59536)]
CLOSED_FORM_TOWERS = [(m, e) for e in (1, 2) for m in (4, 6, 8, 12)]
CLOSED_FORM_MAX_INDEX = 4
SEQUENCE_DEGREES = (4, 6, 8)
SPAN_PARAMS = [(4, 2, 1, 1), (4, 2, 1, 2), (6, 3, 1, 1)]
SPECTRUM_PARAMS = [(4, 2, 1, 1), (4, 2, 1, 2), (6, 3, 1, 1), (6, 3, 1, 2), (6, 3, 1, 3), (12, 6, 2, 1)]


def _vandermonde_round_trips(vectors: List[List[int]], q: int) -> bool:
    for y in vectors:
        # raises ErrTheoremViolated when the product does not return y
        comb.vandermonde_solve(y, q)
    return True


def identity_checks(cfg: RunConfig) -> Iterator[Check]:
    rng = random.Random(cfg.seed)
    per_q = VANDERMONDE_VECTORS // len(Q_VALUES)
    vectors = {q: [[rng.randint(-1000, 1000) for _ in range(rng.randint(1, MAX_INDEX + 1))]
                   for _ in range(per_q)] for q in Q_VALUES}
    idx = range(MAX_INDEX + 1)
    for q in Q_VALUES:
        yield "mobius q={}".format(q), lambda q=q: all(
            comb.mobius_pair_check(u, v, q) for u in idx for v in range(u))
        yield "vandermonde q={}".format(q), lambda q=q: _vandermonde_round_trips(vectors[q], q)
        yield "prodform q={}".format(q), lambda q=q: all(
            comb.product_formula_check(i, q) for i in idx if i >= 1)
        yield "twovsone q={}".format(q), lambda q=q: all(
            comb.twovsone_check(u, i, q) for u in idx for i in range(1, u + 1))
        yield "qbinomial q={}".format(q), lambda q=q: all(
            comb.qbinomial_theorem_check(n, q, t) for n in idx for t in QBINOMIAL_T)
        yield "pascal q={}".format(q), lambda q=q: all(
            comb.pascal_check(i, j, q) for i in idx for j in range(1, i + 1))
        yield "subspace-chain q={}".format(q), lambda q=q: all(
            comb.subspace_chain_check(i, u, j, q) for i in idx for u in range(i + 1) for j in range(u + 1))
        yield "triple-product q={}".format(q), lambda q=q: all(
            comb.triple_product_check(v, u, i, j, q)
            for v in idx for i in range(v + 1) for u in range(i + 1) for j in range(i + 1))


def _closed_form_identities(m: int, e: int) -> bool:
    top = CLOSED_FORM_MAX_INDEX
    counts = [solutions.closed_form_value(m, e, i) for i in range(top + 1)]
    for i in range(top + 1):
        if not solutions.expansion_check(m, e, i):
            return False
        lhs, rhs = solutions.alternating_moment_sides(m, e, i)
        if lhs != rhs:
            return False
        if i >= 1 and len(set(solutions.recursion_sides(m, e, i, counts))) != 1:
            return False
    return True


def solution_checks(cfg: RunConfig) -> Iterator[Check]:
    workers = cfg.worker_count
    for m, n, d, s, u, expected in SOLUTION_ORACLES:
        sp = SolutionSystemParams(make_params(m, n, d, 1), s, u)
        tag = "m={} s={} u={}".format(m, s, u)
        yield "count " + tag, lambda sp=sp, expected=expected: (
            solutions.count_bruteforce(sp, workers).value == expected == solutions.count_closed_form(sp).value)
        yield "recursion " + tag, lambda sp=sp: solutions.recursion_check(sp, CountMethod.BRUTEFORCE,
                                                                            workers)
        yield "elimination " + tag, lambda sp=sp: solutions.elimination_check(sp)
        yield "dependence " + tag, lambda sp=sp: solutions.dependence_check(sp)
        yield "monotonicity " + tag, lambda sp=sp: solutions.monotonicity_check(sp)
        yield "stabilizer " + tag, lambda sp=sp: all(
            solutions.stabilizer_count_check(sp, i, cfg.seed, workers) for i in range(sp.u + 1))
    for m, e in CLOSED_FORM_TOWERS:
        yield "closed-form m={} e={}".format(m, e), lambda m=m, e=e: _closed_form_identities(m, e)


def _ideal_autocorrelation(m: int) -> bool:
    s = sequences.m_sequence(ff.make_field(m))
    if s.period != (1 << m) - 1:
        return False
    return all(sequences.autocorrelation(s, t) == -1 for t in range(1, s.length))


def sequence_checks(cfg: RunConfig) -> Iterator[Check]:
    for m in SEQUENCE_DEGREES:
        yield "m-sequence m={}".format(m), lambda m=m: _ideal_autocorrelation(m)
    for m, n, d, k in SPAN_PARAMS:
        p = make_params(m, n, d, k)
        yield "span m={} k={}".format(m, k), lambda p=p: sequences.span_equality_check(p)


def _spectrum_agrees(p, workers: int) -> bool:
    dc, beta = spectrum.census_enumerate(p, workers)
    diff = spectrum.cross_check(p, dc, beta)
    if diff is not None:
        logger.warning("spectrum %s: %s", p, diff)
        return False
    return True


def spectrum_checks(cfg: RunConfig) -> Iterator[Check]:
    for m, n, d, k in SPECTRUM_PARAMS:
        p = make_params(m, n, d, k)
        yield "spectrum m={} n={} d={} k={}".format(m, n, d, k), lambda p=p: _spectrum_agrees(p, cfg.worker_count)


_SUITE_CHECKS = {
    "identities": identity_checks,
    "solutions": solution_checks,
    "sequences": sequence_checks,
    "spectrum": spectrum_checks,
}


def _run(name: str, check: Callable[[], bool]) -> bool:
    try:
        return bool(check())
    except (ErrTheoremViolated, ErrSpectrumMismatch, ErrNonIntegral, ErrNegativeCount) as err:
        logger.warning("%s: %s", name, err)
        return False


def run_suites(cfg: RunConfig) -> List[CheckResult]:
    if cfg.suite == "all":
        names = SUITES
    elif cfg.suite in _SUITE_CHECKS:
        names = [cfg.suite]
    else:
        raise ErrIllegalArguments("--suite must be one of {}, all".format(", ".join(SUITES)))
    results = []
    for suite in names:
        started = time.monotonic()
        for name, check in _SUITE_CHECKS[suite](cfg):
            full = "{}/{}".format(suite, name)
            results.append(CheckResult(name=full, passed=_run(full, check)))
        logger.info("suite %s took %.2fs", suite, time.monotonic() - started)
    return results


def call(cfg: RunConfig, out: TextIO) -> int:
    results = run_suites(cfg)
    records = [{"check": r.name, "result": "pass" if r.passed else "FAIL"} for r in results]
    failed = [r.name for r in results if not r.passed]
    if cfg.format == constants.FORMAT_JSON:
        out.write(json.dumps({"checks": records, "passed": not failed,
                              "first_failure": failed[0] if failed else None}, indent=2) + "\n")
    else:
        out.write(dataconverter.emit_records(HEADERS, records, cfg.format))
        if cfg.format == constants.FORMAT_TEXT:
            if failed:
                out.write("\nFAILED: {} of {} checks; first failing check: {}\n".format(
                    len(failed), len(results), failed[0]))
            else:
                out.write("\nall {} checks passed\n".format(len(results)))
    return constants.EXIT_MISMATCH if failed else constants.EXIT_OK
