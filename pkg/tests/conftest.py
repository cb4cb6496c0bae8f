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

import pytest

from kasami.algebra.field import make_field
from kasami.code.forms import make_params


@pytest.fixture(scope="module")
def field16():
    return make_field(4)


@pytest.fixture(scope="module")
def field64():
    return make_field(6)


@pytest.fixture(scope="function")
def kasami4():
    """The small Kasami code: m=4, n=2, d=1, e=1, k=1."""
    return make_params(4, 2, 1, 1)


@pytest.fixture(scope="function")
def kasami4k2():
    return make_params(4, 2, 1, 2)


@pytest.fixture(scope="function")
def kasami6():
    return make_params(6, 3, 1, 1)
