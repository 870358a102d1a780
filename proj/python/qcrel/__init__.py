# Copyright 2026 The qcrel Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the qcrel relational quantum computation toolkit."""

import json

from ._core import (  # noqa: F401
    AbelianGroup,
    BudgetExceeded,
    ComplementaryPair,
    FinRel,
    Groupoid,
    InvalidInput,
    StateVec,
    UnsupportedPair,
    after,
    apply,
    born,
    build_oracle,
    check_relation,
    cnot,
    converse,
    enumerate_classical_relations,
    fourier,
    identity,
    is_unitary,
    parse_relation,
    tensor,
    then,
    verify_classical_structure,
)
from . import _core


def dj_run(pair_a, pair_b, f, unchecked=False):
    """Deutsch-Jozsa run report as a dictionary."""
    return json.loads(_core._dj_run(pair_a, pair_b, f, unchecked))


def grover_run(pair_s, pair_b, f, sigma, unchecked=False):
    """Single-shot Grover run report; sigma is a StateVec or an X-state index."""
    if isinstance(sigma, int):
        sigma = pair_b.x_classical()[sigma]
    return json.loads(_core._grover_run(pair_s, pair_b, f, sigma, unchecked))


def homid_run(pair_g, pair_a, f, sigma, unchecked=False):
    """Homomorphism identification run report; sigma as in grover_run."""
    if isinstance(sigma, int):
        sigma = pair_a.x_classical()[sigma]
    return json.loads(_core._homid_run(pair_g, pair_a, f, sigma, unchecked))
