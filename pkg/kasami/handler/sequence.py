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

import json
import logging
from typing import Optional, TextIO, Tuple

from kasami import constants, dataconverter
from kasami.algebra import field as ff
from kasami.code import sequences
from kasami.datatypes import RunConfig
from kasami.exceptions import ErrIllegalArguments

logger = logging.getLogger(__name__)

HEADERS = ["m", "decimation", "phase", "period", "weight", "bits"]


def decimated(m: int, decimation: int, phase: Optional[int] = None) -> Tuple[sequences.BitSequence, int]:
    """shift(s, phase) decimated; with phase None, the first phase that is not all zeros."""
    s = sequences.m_sequence(ff.make_field(m))
    if phase is not None:
        if not 0 <= phase < s.length:
            raise ErrIllegalArguments("phase must lie in [0, {}), got {}".format(s.length, phase))
        return sequences.circular_decimate(sequences.shift(s, phase), decimation), phase
    for candidate in range(s.length):
        seq = sequences.circular_decimate(sequences.shift(s, candidate), decimation)
        if seq.weight:
            return seq, candidate
    return sequences.circular_decimate(s, decimation), 0


def call(cfg: RunConfig, out: TextIO) -> int:
    (m,) = dataconverter.required(cfg, "m")
    seq, phase = decimated(m, cfg.decimation, cfg.phase)
    logger.debug("decimation %d at phase %d has weight %d", cfg.decimation, phase, seq.weight)
    record = {"m": m, "decimation": cfg.decimation, "phase": phase,
              "period": seq.period, "weight": seq.weight, "bits": seq.to_ascii()}
    if cfg.format == constants.FORMAT_TEXT:
        out.write("{}\nperiod {}\n".format(record["bits"], record["period"]))
    elif cfg.format == constants.FORMAT_JSON:
        out.write(json.dumps(record, indent=2) + "\n")
    else:
        out.write(dataconverter.emit_records(HEADERS, [record], cfg.format))
    return constants.EXIT_OK
