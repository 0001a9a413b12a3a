# Copyright 2026 The Authors.
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

"""Matroid intersection through a minimum-rank oracle.

Sets are lists of element indices. Weights and other rational results are
returned as ``fractions.Fraction``.
"""

from fractions import Fraction

from . import _minrank
from ._minrank import (
    ContractViolation,
    DataError,
    DomainError,
    Instance,
    PreconditionError,
    brute_max_common,
    check_promise,
    crossed_partition_instance,
    gadget_instance,
    gadget_round_trip,
    largest_circuits,
    load_instance,
    max_cardinality,
    parse_instance,
    random_instance,
    verify_instance,
)

__all__ = [
    "ContractViolation",
    "DataError",
    "DomainError",
    "Instance",
    "PreconditionError",
    "approx_max_weight",
    "brute_max_common",
    "brute_max_weight",
    "check_promise",
    "crossed_partition_instance",
    "gadget_instance",
    "gadget_round_trip",
    "largest_circuits",
    "lexicographic_max",
    "load_instance",
    "max_cardinality",
    "parse_instance",
    "random_instance",
    "verify_instance",
    "weights",
    "weighted_levels",
]


def weights(instance):
    """Element weights of an instance as Fractions."""
    return [Fraction(w) for w in instance.weights]


def weighted_levels(instance, gamma=None):
    """Heaviest common independent set of each size, with Fraction weights."""
    result = _minrank.weighted_levels(instance, gamma)
    result["weights"] = [Fraction(w) for w in result["weights"]]
    return result


def lexicographic_max(instance):
    """Lexicographically maximal common independent set."""
    result = _minrank.lexicographic_max(instance)
    result["weight"] = Fraction(result["weight"])
    return result


def approx_max_weight(instance):
    """Approximate maximum weight set with its guarantee min(1, alpha/2)."""
    result = _minrank.approx_max_weight(instance)
    for key in ("weight", "alpha", "guarantee"):
        result[key] = Fraction(result[key])
    return result


def brute_max_weight(instance):
    """Exhaustive maximum weight of a common independent set."""
    return Fraction(_minrank.brute_max_weight(instance))
