// Copyright 2026 The BHG Toolkit Authors.
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

#ifndef BHG_IMAGE_H_
#define BHG_IMAGE_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace bhg::vision {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Row-major 8-bit RGB.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  static RgbImage filled(int width, int height, Rgb color);
  // Throws InvalidArgument on bad dimensions or sample count.
  void validate() const;
  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb c);

  friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  double at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
};

struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // 0 or 1 per pixel

  static BinaryMask empty(int width, int height);
  bool at(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * width + x] != 0;
  }
  void set(int x, int y, bool v) {
    bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
  }
  std::size_t count() const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

struct Pixel {
  int x = 0;
  int y = 0;

  // Row-major order.
  friend auto operator<=>(const Pixel& a, const Pixel& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend bool operator==(const Pixel&, const Pixel&) = default;
};

// Always sorted in row-major order, no duplicates.
using PixelSet = std::vector<Pixel>;

// Reads PNG or PPM (P3/P6, maxval 255), chosen by file signature.
// Throws Error(kIo) on failure.
RgbImage read_image(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const RgbImage& img);
void write_ppm(const std::filesystem::path& path, const RgbImage& img);

// In-memory encoders, used for atomic CLI writes and byte comparisons.
std::vector<std::uint8_t> encode_png(const RgbImage& img);
std::vector<std::uint8_t> encode_ppm(const RgbImage& img);
RgbImage decode_ppm(const std::vector<std::uint8_t>& bytes);

}  // namespace bhg::vision

#endif  // BHG_IMAGE_H_
