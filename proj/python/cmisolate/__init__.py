# Copyright 2026 The cmisolate Authors
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

"""Isolated genus-2 parameter search and density predictions."""

from ._cmisolate import (
    CyclicCMField,
    FieldError,
    SearchExhausted,
    __version__,
    candidate,
    classify_prime,
    correction_constant,
    count_prime_pairs,
    empirical_frequency,
    find_isolated,
    is_probable_prime,
    make_cyclic_field,
    predict_count,
    preset_field,
    prob_neither,
    run_cli,
)

__all__ = [
    "CyclicCMField",
    "FieldError",
    "SearchExhausted",
    "__version__",
    "candidate",
    "classify_prime",
    "correction_constant",
    "count_prime_pairs",
    "empirical_frequency",
    "find_isolated",
    "is_probable_prime",
    "make_cyclic_field",
    "predict_count",
    "preset_field",
    "prob_neither",
    "run_cli",
]
