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

#ifndef SKEWLENS_IMAGE_HPP
#define SKEWLENS_IMAGE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace skewlens {

/// 8-bit grayscale bitmap, row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 255)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

void write_png(const std::string& path, const GrayImage& image);
GrayImage read_png(const std::string& path);

// Pearson correlation between two equally sized bitmaps; 0 when either has
// zero variance.
double normalized_cross_correlation(const GrayImage& a, const GrayImage& b);

GrayImage crop(const GrayImage& image, int x, int y, int w, int h);

// FNV-1a over dimensions and pixels, hex string.
std::string image_digest(const GrayImage& image);

}  // namespace skewlens

#endif  // SKEWLENS_IMAGE_HPP
