# Copyright 2026 The skewlens Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Skew metrics and controlled-split curation for binary relational scenes."""

try:
    from ._skewlens import (  # installed wheel layout
        Dataset,
        SkewlensError,
        accuracy_gap,
        assign_phrasings,
        emit_images,
        evaluate_images,
        extract_complete_subsample,
        pattern_split,
        pmd,
        read_dataset,
        skew_report,
        subsample_to_targets,
        write_dataset,
    )
except ImportError:  # in-tree build: the extension sits on PYTHONPATH
    from _skewlens import (
        Dataset,
        SkewlensError,
        accuracy_gap,
        assign_phrasings,
        emit_images,
        evaluate_images,
        extract_complete_subsample,
        pattern_split,
        pmd,
        read_dataset,
        skew_report,
        subsample_to_targets,
        write_dataset,
    )

__all__ = [
    "Dataset",
    "SkewlensError",
    "accuracy_gap",
    "assign_phrasings",
    "emit_images",
    "evaluate_images",
    "extract_complete_subsample",
    "pattern_split",
    "pmd",
    "read_dataset",
    "skew_report",
    "subsample_to_targets",
    "write_dataset",
]

__version__ = "0.1.0"
