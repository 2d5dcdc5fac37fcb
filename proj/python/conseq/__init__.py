# Copyright 2026 the conseq authors
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

from _conseq import (
    Field,
    all_ones_largest_degree,
    bounds_report_csv,
    coprime_search,
    count_sequences,
    discriminant,
    factor,
    is_consecutive_irreducible,
    is_irreducible,
    max_length,
    quartic_roots,
    resultant,
)

__all__ = [
    "Field",
    "all_ones_largest_degree",
    "bounds_report_csv",
    "coprime_search",
    "count_sequences",
    "discriminant",
    "factor",
    "is_consecutive_irreducible",
    "is_irreducible",
    "max_length",
    "quartic_roots",
    "resultant",
]
