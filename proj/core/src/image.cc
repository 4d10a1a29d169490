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

#include "bhg/image.h"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "bhg/error.h"

namespace bhg::vision {
namespace {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::filesystem::path& path,
                 const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "short write to " + path.string());
}

RgbImage decode_png(const std::vector<std::uint8_t>& bytes) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw Error(ErrorCode::kIo, std::string("PNG decode failed: ") + image.message);
  }
  image.format = PNG_FORMAT_RGB;
  RgbImage out;
  out.width = static_cast<int>(image.width);
  out.height = static_cast<int>(image.height);
  out.data.resize(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, out.data.data(), 0, nullptr)) {
    png_image_free(&image);
    throw Error(ErrorCode::kIo, std::string("PNG decode failed: ") + image.message);
  }
  return out;
}

// Minimal PNM tokenizer: skips whitespace and '#' comments.
class PnmReader {
 public:
  explicit PnmReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  std::string token() {
    skip_space();
    std::string t;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_])) {
      t.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (t.empty()) throw Error(ErrorCode::kIo, "truncated PPM header");
    return t;
  }
  int integer() {
    const std::string t = token();
    if (!std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(c); })) {
      throw Error(ErrorCode::kIo, "bad PPM integer '" + t + "'");
    }
    return std::stoi(t);
  }
  // Binary raster starts after exactly one whitespace byte.
  std::size_t raster_offset() const { return pos_ + 1; }

 private:
  void skip_space() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

RgbImage RgbImage::filled(int width, int height, Rgb color) {
  RgbImage img;
  img.width = width;
  img.height = height;
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be positive");
  }
  img.data.resize(static_cast<std::size_t>(width) * height * 3);
  for (std::size_t i = 0; i < img.data.size(); i += 3) {
    img.data[i] = color.r;
    img.data[i + 1] = color.g;
    img.data[i + 2] = color.b;
  }
  return img;
}

void RgbImage::validate() const {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be positive");
  }
  if (data.size() != static_cast<std::size_t>(width) * height * 3) {
    throw Error(ErrorCode::kInvalidArgument, "image sample count mismatch");
  }
}

Rgb RgbImage::at(int x, int y) const {
  const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  return {data[i], data[i + 1], data[i + 2]};
}

void RgbImage::set(int x, int y, Rgb c) {
  const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  data[i] = c.r;
  data[i + 1] = c.g;
  data[i + 2] = c.b;
}

BinaryMask BinaryMask::empty(int width, int height) {
  BinaryMask m;
  m.width = width;
  m.height = height;
  m.bits.assign(static_cast<std::size_t>(width) * height, 0);
  return m;
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
}

RgbImage read_image(const std::filesystem::path& path) {
  const auto bytes = read_bytes(path);
  static constexpr std::uint8_t kPngSig[] = {0x89, 'P', 'N', 'G'};
  if (bytes.size() >= 4 && std::equal(std::begin(kPngSig), std::end(kPngSig), bytes.begin())) {
    return decode_png(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P') return decode_ppm(bytes);
  throw Error(ErrorCode::kIo, "unrecognized image format: " + path.string());
}

RgbImage decode_ppm(const std::vector<std::uint8_t>& bytes) {
  PnmReader reader(bytes);
  const std::string magic = reader.token();
  if (magic != "P6" && magic != "P3") {
    throw Error(ErrorCode::kIo, "unsupported PNM type " + magic);
  }
  RgbImage img;
  img.width = reader.integer();
  img.height = reader.integer();
  const int maxval = reader.integer();
  if (img.width <= 0 || img.height <= 0 || maxval != 255) {
    throw Error(ErrorCode::kIo, "PPM must have positive size and maxval 255");
  }
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height * 3;
  img.data.resize(n);
  if (magic == "P6") {
    const std::size_t off = reader.raster_offset();
    if (bytes.size() < off + n) throw Error(ErrorCode::kIo, "truncated PPM raster");
    std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(off), n, img.data.begin());
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const int v = reader.integer();
      if (v > 255) throw Error(ErrorCode::kIo, "PPM sample exceeds maxval");
      img.data[i] = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

std::vector<std::uint8_t> encode_png(const RgbImage& img) {
  img.validate();
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width);
  image.height = static_cast<png_uint_32>(img.height);
  image.format = PNG_FORMAT_RGB;
  png_alloc_size_t size = 0;
  if (!png_image_write_get_memory_size(image, size, 0, img.data.data(), 0, nullptr)) {
    throw Error(ErrorCode::kIo, std::string("PNG encode failed: ") + image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, img.data.data(), 0,
                                 nullptr)) {
    throw Error(ErrorCode::kIo, std::string("PNG encode failed: ") + image.message);
  }
  out.resize(size);
  return out;
}

std::vector<std::uint8_t> encode_ppm(const RgbImage& img) {
  img.validate();
  const std::string header = "P6\n" + std::to_string(img.width) + " " +
                             std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.data.begin(), img.data.end());
  return out;
}

void write_png(const std::filesystem::path& path, const RgbImage& img) {
  write_bytes(path, encode_png(img));
}

void write_ppm(const std::filesystem::path& path, const RgbImage& img) {
  write_bytes(path, encode_ppm(img));
}

}  // namespace bhg::vision
