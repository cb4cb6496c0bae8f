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
from kasami.code import spectrum
from kasami.datatypes import RunConfig
from kasami.exceptions import ErrIllegalArguments, ErrSpectrumMismatch

logger = logging.getLogger(__name__)


def call(cfg: RunConfig, out: TextIO) -> int:
    p = dataconverter.params_from_config(cfg)
    if cfg.method == constants.METHOD_FORMULA:
        dc, beta = spectrum.dc_spectrum_formula(p), spectrum.rank_spectrum_formula(p)
        if p.k > 1:
            logger.info("balanced count %d, asymptotic estimate %.6g",
                        dc.balanced, spectrum.balanced_count_estimate(p))
    elif cfg.method in (constants.METHOD_ENUMERATE, constants.METHOD_BOTH):
        dc, beta = spectrum.census_enumerate(p, cfg.worker_count)
        if cfg.method == constants.METHOD_BOTH:
            diff = spectrum.cross_check(p, dc, beta)
            if diff is not None:
                raise ErrSpectrumMismatch("formula vs enumeration, {}".format(diff))
            logger.info("formula and enumeration agree for %s", p)
    else:
        raise ErrIllegalArguments("unknown method {}".format(cfg.method))
    record = dataconverter.spectrum_to_dict(p, dc, beta, cfg.method)
    out.write(dataconverter.emit_spectrum(record, cfg.format))
    return constants.EXIT_OK
