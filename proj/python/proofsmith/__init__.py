# Copyright 2026 The Proofsmith Authors.
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

"""Python front end for the proofsmith core.

Proof and metric records are plain dicts with the same fields as the JSONL
files the command-line tool reads and writes.
"""

import json

from ._proofsmith import (
    Error,
    InvalidInput,
    MockOracle,
    OracleUnavailable,
    bleu4,
    jaccard,
    label_for_mode,
    run_cli,
    tokenize,
)
from . import _proofsmith as _core

__all__ = [
    "Error",
    "InvalidInput",
    "MockOracle",
    "OracleUnavailable",
    "aggregate",
    "bleu4",
    "jaccard",
    "label_for_mode",
    "negate",
    "perturb",
    "run_cli",
    "score",
    "search",
    "tokenize",
    "violations",
]


def _dump(record):
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def search(oracle, premise, hypothesis, method="level", **config):
    """Proofs for one pair; config keys as in the CLI config file."""
    records = _core._search(oracle, method, premise, hypothesis, _dump(config) if config else "")
    return [json.loads(r) for r in records]


def violations(proof):
    return list(_core._validate(_dump(proof)))


def score(oracle, proof, mode="plain"):
    return json.loads(_core._score(oracle, _dump(proof), mode))


def aggregate(metrics, name=""):
    return json.loads(_core._aggregate([_dump(m) for m in metrics], name))


def perturb(oracle, proof, ratio=0.5, seed=0):
    return json.loads(_core._perturb(oracle, _dump(proof), ratio, seed))


def negate(oracle, proof):
    return json.loads(_core._negate(oracle, _dump(proof)))
