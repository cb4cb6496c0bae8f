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

"""Command-line entry point: kasami {spectrum,solutions,identities,sequence,verify}."""

import argparse
import dataclasses
import io
import logging
import os
import sys
from typing import List, Optional, TextIO

from kasami import constants
from kasami.datatypes import RunConfig
from kasami.exceptions import (ErrBudgetExceeded, ErrIllegalArguments, ErrNegativeCount, ErrNonIntegral,
                               ErrSpectrumMismatch, ErrTheoremViolated)
from kasami.handler import identities, sequence, solutions, spectrum, verify

logger = logging.getLogger(__name__)

HANDLERS = {
    "spectrum": spectrum.call,
    "solutions": solutions.call,
    "identities": identities.call,
    "sequence": sequence.call,
    "verify": verify.call,
}

METHODS = [constants.METHOD_FORMULA, constants.METHOD_ENUMERATE, constants.METHOD_BOTH]
FORMATS = [constants.FORMAT_TEXT, constants.FORMAT_JSON, constants.FORMAT_CSV]


def _default_workers() -> int:
    raw = os.environ.get(constants.WORKERS_ENV)
    if not raw:
        return constants.DEFAULT_WORKERS
    try:
        return int(raw)
    except ValueError:
        raise ErrIllegalArguments("{} must be an integer, got {!r}".format(constants.WORKERS_ENV, raw))


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=constants.FORMAT_TEXT)
    common.add_argument("--output", dest="output_path", help="write the report here instead of stdout")
    common.add_argument("--worker-count", type=int, default=None,
                        help="worker processes (default: ${} or {})".format(
                            constants.WORKERS_ENV, constants.DEFAULT_WORKERS))
    common.add_argument("--seed", type=int, default=constants.DEFAULT_SEED)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug, on stderr")
    return common


def _code_flags(parser: argparse.ArgumentParser, k_help: str = "number of quadratic terms"):
    parser.add_argument("--m", type=int, help="extension degree, m = 2n")
    parser.add_argument("--n", type=int)
    parser.add_argument("--d", type=int)
    parser.add_argument("--k", type=int, help=k_help)


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="kasami", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="DC, rank and weight spectra of the code")
    _code_flags(p)
    p.add_argument("--method", choices=METHODS, default=constants.METHOD_FORMULA)

    p = sub.add_parser("solutions", parents=[common], help="count solutions of the bilinear system")
    _code_flags(p, k_help="only validates the tower; default 1")
    p.add_argument("--s", type=int)
    p.add_argument("--u", type=int)
    p.add_argument("--method", choices=METHODS, default=constants.METHOD_BOTH,
                   help="formula: closed form, enumerate: brute force")

    p = sub.add_parser("identities", parents=[common], help="both sides of one identity")
    p.add_argument("--theorem", choices=identities.THEOREMS, required=True)
    _code_flags(p, k_help="only validates the tower; default 1")
    for flag in ("--q", "--i", "--u", "--v", "--t", "--s"):
        p.add_argument(flag, type=int)
    p.add_argument("--method", choices=METHODS, default=constants.METHOD_FORMULA,
                   help="counts for the recursion: formula or enumerate")

    p = sub.add_parser("sequence", parents=[common], help="decimated m-sequence and its true period")
    p.add_argument("--m", type=int)
    p.add_argument("--decimation", type=int, default=1)
    p.add_argument("--phase", type=int, default=None,
                   help="shift applied before decimating; default: first phase giving a nonzero sequence")

    p = sub.add_parser("verify", parents=[common], help="run the identity and oracle suites")
    p.add_argument("--suite", choices=verify.SUITES + ["all"], default="all")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = vars(args)
    workers = values.get("worker_count")
    if workers is None:
        workers = _default_workers()
    if workers < 1:
        raise ErrIllegalArguments("worker count must be at least 1, got {}".format(workers))
    fields = {f.name: values[f.name] for f in dataclasses.fields(RunConfig) if values.get(f.name) is not None}
    fields["worker_count"] = workers
    return RunConfig(**fields)


def _setup_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.captureWarnings(True)


def run(cfg: RunConfig, out: TextIO) -> int:
    return HANDLERS[cfg.subcommand](cfg, out)


def _flush(text: str, cfg: RunConfig, stdout: TextIO):
    if not text:
        return
    if cfg.output_path:
        with open(cfg.output_path, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    _setup_logging(args.verbose)
    buf = io.StringIO()
    cfg = None
    try:
        cfg = config_from_args(args)
        code = run(cfg, buf)
    except ErrIllegalArguments as err:
        print("error: {}".format(err), file=sys.stderr)
        return constants.EXIT_USAGE
    except ErrBudgetExceeded as err:
        print("budget exceeded: {}".format(err), file=sys.stderr)
        return constants.EXIT_BUDGET
    except (ErrSpectrumMismatch, ErrTheoremViolated, ErrNonIntegral, ErrNegativeCount) as err:
        _flush(buf.getvalue(), cfg, stdout)
        print("mismatch: {}".format(err), file=sys.stderr)
        return constants.EXIT_MISMATCH
    _flush(buf.getvalue(), cfg, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
