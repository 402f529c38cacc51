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

#include "skewlens/svg.hpp"

#include <algorithm>
#include <sstream>

namespace skewlens {

namespace {

constexpr int kBarWidth = 14;
constexpr int kBarGap = 4;
constexpr int kPanelHeight = 120;
constexpr int kPanelPad = 36;
constexpr int kLeftPad = 20;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

void draw_panel(std::ostringstream& out, const std::vector<std::pair<std::string, double>>& dist,
                const std::string& label, int top, const char* fill) {
  double max_mass = 0.0;
  for (const auto& [_, mass] : dist) max_mass = std::max(max_mass, mass);
  if (max_mass <= 0.0) max_mass = 1.0;

  out << "  <text x=\"" << kLeftPad << "\" y=\"" << top + 14 << "\" font-size=\"12\" "
      << "font-family=\"monospace\">" << escape(label) << "</text>\n";
  const int base = top + kPanelHeight + 20;
  out << "  <line x1=\"" << kLeftPad << "\" y1=\"" << base << "\" x2=\""
      << kLeftPad + static_cast<int>(dist.size()) * (kBarWidth + kBarGap) << "\" y2=\"" << base
      << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  int x = kLeftPad;
  for (const auto& [concept_id, mass] : dist) {
    const int height = static_cast<int>(mass / max_mass * kPanelHeight);
    out << "  <rect x=\"" << x << "\" y=\"" << base - height << "\" width=\"" << kBarWidth
        << "\" height=\"" << height << "\" fill=\"" << fill << "\">"
        << "<title>" << escape(concept_id) << ": " << mass << "</title></rect>\n";
    x += kBarWidth + kBarGap;
  }
}

}  // namespace

std::string pmd_svg(const PMD& pmd, const std::string& title) {
  const int panels = 1 + static_cast<int>(pmd.per_role.size());
  const int width =
      kLeftPad * 2 + static_cast<int>(pmd.macro.size()) * (kBarWidth + kBarGap) + kBarGap;
  const int height = panels * (kPanelHeight + kPanelPad + 24) + 30;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << std::max(width, 240)
      << "\" height=\"" << height << "\">\n";
  out << "  <text x=\"" << kLeftPad << "\" y=\"18\" font-size=\"14\" font-family=\"monospace\">"
      << escape(title) << "</text>\n";

  int top = 30;
  draw_panel(out, pmd.macro, "macro", top, "#4878cf");
  static const char* kRoleFills[] = {"#d65f5f", "#6acc65", "#b47cc7", "#c4ad66"};
  int role_index = 0;
  for (const auto& [role, dist] : pmd.per_role) {
    top += kPanelHeight + kPanelPad + 24;
    draw_panel(out, dist, role, top, kRoleFills[role_index % 4]);
    ++role_index;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace skewlens
