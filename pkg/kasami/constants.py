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

MIN_FIELD_DEGREE = 2
MAX_FIELD_DEGREE = 24
LOG_TABLE_MAX_DEGREE = 20

# n(2k+1) bits of coefficient space
ENUMERATION_MAX_BITS = 24
ENUMERATION_CHUNK = 1024

# 2u*m bits of tuple space for the bilinear system
BRUTEFORCE_MAX_BITS = 26
BRUTEFORCE_BLOCK = 1 << 20
PAIR_KEY_MAX_BITS = 62

SPAN_CHECK_MAX_DEGREE = 8
SPAN_CHECK_MAX_BITS = 16

SUBSPACE_FULL_ENUM_MAX = 4
SUBSPACE_SAMPLES = 10

WORKERS_ENV = "KASAMI_WORKERS"
DEFAULT_WORKERS = 1
DEFAULT_SEED = 0

METHOD_FORMULA = "formula"
METHOD_ENUMERATE = "enumerate"
METHOD_BOTH = "both"

FORMAT_JSON = "json"
FORMAT_CSV = "csv"
FORMAT_TEXT = "text"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
