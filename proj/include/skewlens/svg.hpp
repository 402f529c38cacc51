// Copyright 2026 The skewlens Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKEWLENS_SVG_HPP
#define SKEWLENS_SVG_HPP

#include <string>

#include "skewlens/metrics.hpp"

namespace skewlens {

// Stacked bar-chart panels: macro distribution on top, one panel per role
// below, concepts ordered by descending macro mass.
std::string pmd_svg(const PMD& pmd, const std::string& title);

}  // namespace skewlens

#endif  // SKEWLENS_SVG_HPP
