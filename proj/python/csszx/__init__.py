# Copyright 2026 The csszx Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""CSS codes as phase-free ZX diagrams."""

import json

from . import _core
from ._core import FormatError, VerificationError, catalog_names, check_rules, encoder_oracle, evaluate_normal_form, parameters

__all__ = [
    "FormatError",
    "VerificationError",
    "catalog_names",
    "check_rules",
    "code",
    "encoder_oracle",
    "evaluate_normal_form",
    "gauge_fix",
    "morph",
    "normal_form",
    "parameters",
    "switch",
]


def code(name):
    """Catalog code as a dict of bitstring rows."""
    return json.loads(_core.code_json(name))


def normal_form(name, form="zx"):
    """Normal-form diagram as a dict with spiders, edges, inputs and outputs."""
    return json.loads(_core.normal_form_json(name, form))


def morph(name, subset):
    """Morph a catalog code along a set of 1-based qubits."""
    return json.loads(_core.morph_json(name, list(subset)))


def gauge_fix(basis, outcomes):
    """Gauge-fix sub15 in the given basis for an outcome bitstring."""
    return json.loads(_core.gauge_fix_json(basis, outcomes))


def switch(source, target):
    return json.loads(_core.switch_json(source, target))
