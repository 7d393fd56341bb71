# Copyright 2026 The paracomp Authors.
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

"""Efficiency measures for morphological paradigms."""

from ._core import (
    NeedDistribution,
    Paradigm,
    ParacompError,
    TrainConfig,
    cetl,
    form_only_permutations,
    ib_accuracy,
    ib_complexity,
    one_sample_ttest,
    parse_need,
    parse_paradigm,
    read_need,
    read_paradigm,
    run_cli,
    spearman,
    structural_permutations,
    train_trajectory,
    unnaturalness,
)

__all__ = [
    "NeedDistribution",
    "Paradigm",
    "ParacompError",
    "TrainConfig",
    "cetl",
    "form_only_permutations",
    "ib_accuracy",
    "ib_complexity",
    "one_sample_ttest",
    "parse_need",
    "parse_paradigm",
    "read_need",
    "read_paradigm",
    "run_cli",
    "spearman",
    "structural_permutations",
    "train_trajectory",
    "unnaturalness",
]
