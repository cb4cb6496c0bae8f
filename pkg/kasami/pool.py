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
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, Tuple

from kasami.exceptions import ErrIllegalArguments

logger = logging.getLogger(__name__)


def partition(total: int, parts: int) -> List[Tuple[int, int]]:
    """Split [0, total) into at most `parts` contiguous, nonempty ranges."""
    if parts < 1:
        raise ErrIllegalArguments("worker count must be at least 1, got {}".format(parts))
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    ranges = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        ranges.append((lo, hi))
        lo = hi
    return ranges


def run_partitioned(fn: Callable, args: Sequence, total: int, workers: int) -> List:
    """Call fn(*args, lo, hi) over each range; results come back in range order.

    fn must be a module-level function so worker processes can import it.
    """
    ranges = partition(total, workers)
    if workers <= 1 or len(ranges) <= 1:
        return [fn(*args, lo, hi) for lo, hi in ranges]
    logger.info("dispatching %d ranges to %d workers", len(ranges), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(fn, *args, lo, hi) for lo, hi in ranges]
        return [fut.result() for fut in futures]


def merge_counters(parts: Sequence[Counter]) -> Counter:
    total = Counter()
    for part in parts:
        total.update(part)
    return total
