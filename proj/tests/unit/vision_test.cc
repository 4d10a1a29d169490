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

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bhg/camera.h"
#include "bhg/error.h"
#include "bhg/image.h"
#include "bhg/vision.h"
#include "fixtures.h"
#include "oracles.h"

namespace bhg::vision {
namespace {

PixelSet filled_rect(int x0, int y0, int w, int h) {
  PixelSet s;
  for (int y = y0; y < y0 + h; ++y)
    for (int x = x0; x < x0 + w; ++x) s.push_back({x, y});
  return s;
}

BinaryMask to_mask(const PixelSet& s, int w, int h) {
  auto m = BinaryMask::empty(w, h);
  for (const auto& p : s) m.set(p.x, p.y, true);
  return m;
}

RgbImage shifted(const RgbImage& img, int dx, int dy, Rgb pad) {
  auto out = RgbImage::filled(img.width, img.height, pad);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      const int sx = x - dx, sy = y - dy;
      if (sx >= 0 && sy >= 0 && sx < img.width && sy < img.height) out.set(x, y, img.at(sx, sy));
    }
  return out;
}

std::array<Vec2, 2> pipeline(const RgbImage& img) {
  const auto roi = segment_roi(extract_mask(img, HsvRange{}));
  return grasp_midpoints(min_enclosing_rect(detect_edges(roi)));
}

TEST(Hsv, KnownColors) {
  EXPECT_EQ(rgb_to_hsv({0, 0, 255}), (Hsv{120, 255, 255}));
  EXPECT_EQ(rgb_to_hsv({255, 0, 0}), (Hsv{0, 255, 255}));
  EXPECT_EQ(rgb_to_hsv({0, 255, 0}), (Hsv{60, 255, 255}));
  EXPECT_EQ(rgb_to_hsv({0, 0, 0}), (Hsv{0, 0, 0}));
  EXPECT_EQ(rgb_to_hsv({128, 128, 128}).s, 0);
  const HsvRange r;
  EXPECT_TRUE(r.contains(rgb_to_hsv({0, 0, 255})));
  EXPECT_FALSE(r.contains(rgb_to_hsv({255, 0, 0})));
}

TEST(Mask, MatchesPerPixelCount) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(0, 255);
  auto img = RgbImage::filled(64, 48, {0, 0, 0});
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      img.set(x, y, {static_cast<std::uint8_t>(d(rng)), static_cast<std::uint8_t>(d(rng)),
                     static_cast<std::uint8_t>(d(rng))});
  const HsvRange r;
  const auto m = extract_mask(img, r);
  std::size_t expected = 0;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      // Independent conversion: float hue in degrees, halved.
      const auto c = img.at(x, y);
      const double R = c.r, G = c.g, B = c.b;
      const double mx = std::max({R, G, B}), mn = std::min({R, G, B});
      double h = 0;
      if (mx > mn) {
        if (mx == R) h = 60 * (G - B) / (mx - mn);
        else if (mx == G) h = 120 + 60 * (B - R) / (mx - mn);
        else h = 240 + 60 * (R - G) / (mx - mn);
        if (h < 0) h += 360;
      }
      const int H = static_cast<int>(std::lround(h / 2)) % 180;
      const int S = mx > 0 ? static_cast<int>(std::lround(255 * (mx - mn) / mx)) : 0;
      const int V = static_cast<int>(mx);
      const bool in = H >= 100 && H <= 130 && S >= 100 && V >= 50;
      EXPECT_EQ(m.at(x, y), in) << x << "," << y;
      expected += in;
    }
  EXPECT_EQ(m.count(), expected);
}

TEST(Roi, LargestComponentMatchesFloodFill) {
  std::mt19937 rng(11);
  std::bernoulli_distribution coin(0.45);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = BinaryMask::empty(40, 30);
    for (int y = 0; y < m.height; ++y)
      for (int x = 0; x < m.width; ++x) m.set(x, y, coin(rng));
    EXPECT_EQ(segment_roi(m), oracle::largest_component(m));
  }
}

TEST(Roi, TieGoesToFirstInScanOrder) {
  auto m = to_mask(filled_rect(10, 10, 3, 3), 30, 30);
  for (const auto& p : filled_rect(2, 20, 3, 3)) m.set(p.x, p.y, true);
  EXPECT_EQ(segment_roi(m).front(), (Pixel{10, 10}));
}

TEST(Roi, EmptyMaskThrows) {
  EXPECT_THROW(segment_roi(BinaryMask::empty(5, 5)), Error);
}

TEST(Edges, BoundaryOfFilledRectIsPerimeter) {
  const auto rect = filled_rect(5, 7, 10, 6);
  const auto edges = detect_edges(rect);
  EXPECT_EQ(edges.size(), 2u * 10 + 2u * 6 - 4);
  EXPECT_EQ(edges, oracle::boundary(rect));
  EXPECT_EQ(detect_edges(PixelSet{{3, 4}}), (PixelSet{{3, 4}}));
}

TEST(Edges, BoundaryMatchesOracleOnRandomBlobs) {
  std::mt19937 rng(3);
  std::bernoulli_distribution coin(0.6);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = BinaryMask::empty(30, 30);
    for (int y = 0; y < m.height; ++y)
      for (int x = 0; x < m.width; ++x) m.set(x, y, coin(rng));
    const auto roi = segment_roi(m);
    EXPECT_EQ(boundary_pixels(roi), oracle::boundary(roi));
  }
}

TEST(Edges, CannyOnBinaryRectFindsPerimeter) {
  const auto rect = filled_rect(8, 8, 20, 12);
  EdgeOptions opt;
  opt.method = EdgeMethod::kCanny;
  const auto edges = detect_edges(rect, opt);
  EXPECT_EQ(edges, oracle::boundary(rect));
}

TEST(Edges, CannyOnRotatedTowelFitsSameRect) {
  const auto roi = segment_roi(extract_mask(fixtures::render_towel({}), HsvRange{}));
  EdgeOptions opt;
  opt.method = EdgeMethod::kCanny;
  const auto a = min_enclosing_rect(detect_edges(roi));
  const auto b = min_enclosing_rect(detect_edges(roi, opt));
  // Canny localizes diagonal steps to within a pixel, so allow a 1 px band.
  EXPECT_NEAR(a.area(), b.area(), 0.02 * a.area());
  EXPECT_LT((a.center - b.center).norm(), 1.0);
}

TEST(Edges, CannyOnFlatImageIsEmpty) {
  GrayImage g{10, 10, std::vector<double>(100, 1.0)};
  EXPECT_EQ(canny(g, {}).count(), 0u);
}

TEST(Hull, SquareCorners) {
  const auto hull = convex_hull(filled_rect(0, 0, 4, 4));
  EXPECT_EQ(hull.size(), 4u);
}

TEST(MinRect, AxisAlignedRect) {
  const auto r = min_enclosing_rect(filled_rect(10, 20, 41, 21));
  EXPECT_NEAR(r.center.x(), 30.0, 1e-9);
  EXPECT_NEAR(r.center.y(), 30.0, 1e-9);
  EXPECT_NEAR(std::max(r.half_extents.x(), r.half_extents.y()), 20.0, 1e-9);
  EXPECT_NEAR(std::min(r.half_extents.x(), r.half_extents.y()), 10.0, 1e-9);
}

TEST(MinRect, RotatedRectMatchesSweep) {
  fixtures::TowelSpec spec;
  spec.width = 200;
  spec.height = 200;
  spec.center = {100, 100};
  spec.half_extents = {60, 25};
  spec.angle = 30.0 * std::numbers::pi / 180.0;
  const auto roi = segment_roi(extract_mask(fixtures::render_towel(spec), HsvRange{}));
  const auto edges = detect_edges(roi);
  const auto r = min_enclosing_rect(edges);
  const auto [area, angle] = oracle::rect_sweep(oracle::to_points(edges), 900);
  EXPECT_NEAR(r.area(), area, 0.01 * area);
  const double orient = std::fmod(r.orientation, std::numbers::pi / 2);
  EXPECT_NEAR(orient * 180 / std::numbers::pi, 30.0, 0.5);
  EXPECT_NEAR(angle * 180 / std::numbers::pi, 30.0, 0.5);
  EXPECT_NEAR(std::max(r.half_extents.x(), r.half_extents.y()), 60.0, 1.0);
  EXPECT_NEAR(std::min(r.half_extents.x(), r.half_extents.y()), 25.0, 1.0);
}

TEST(MinRect, EmptyThrows) {
  EXPECT_THROW(min_enclosing_rect({}), Error);
}

TEST(Midpoints, ShortSideMidpointsByGeometry) {
  RotatedRect r;
  r.center = {50, 40};
  r.half_extents = {30, 10};
  r.orientation = std::numbers::pi / 6;
  const auto mids = grasp_midpoints(r);
  const Vec2 u(std::cos(r.orientation), std::sin(r.orientation));
  // Offsets are snapped to a 2^-24 px grid.
  EXPECT_LT((mids[0] - (r.center - 30 * u)).norm(), 1e-6);
  EXPECT_LT((mids[1] - (r.center + 30 * u)).norm(), 1e-6);
}

TEST(Midpoints, LongAxisAlongV) {
  RotatedRect r;
  r.center = {0, 0};
  r.half_extents = {5, 20};
  const auto mids = grasp_midpoints(r);
  EXPECT_NEAR(mids[0].y(), -20, 1e-12);
  EXPECT_NEAR(mids[1].y(), 20, 1e-12);
}

TEST(Midpoints, InsetMovesInward) {
  RotatedRect r;
  r.center = {10, 10};
  r.half_extents = {30, 10};
  const auto p = inset_grasp_points(r, 15);
  EXPECT_NEAR(p[0].x(), -5, 1e-12);
  EXPECT_NEAR(p[1].x(), 25, 1e-12);
  const auto clamp = inset_grasp_points(r, 100);
  EXPECT_EQ(clamp[0], clamp[1]);
}

TEST(Pipeline, TowelMidpointsNearTruth) {
  const fixtures::TowelSpec spec;
  const auto mids = pipeline(fixtures::render_towel(spec));
  const Vec2 u(std::cos(spec.angle), std::sin(spec.angle));
  EXPECT_LT((mids[0] - (spec.center - spec.half_extents.x() * u)).norm(), 1.0);
  EXPECT_LT((mids[1] - (spec.center + spec.half_extents.x() * u)).norm(), 1.0);
}

TEST(Pipeline, TranslationEquivariant) {
  const fixtures::TowelSpec spec;
  const auto img = fixtures::render_towel(spec);
  const auto base = pipeline(img);
  for (auto [dx, dy] : {std::pair{3, -2}, std::pair{-17, 9}, std::pair{0, 5}}) {
    const auto m = pipeline(shifted(img, dx, dy, spec.background));
    EXPECT_EQ(m[0], base[0] + Vec2(dx, dy));
    EXPECT_EQ(m[1], base[1] + Vec2(dx, dy));
  }
}

TEST(Camera, UnitTangent) {
  CameraModel cam;
  cam.table_depth = 1000;
  const auto w = image_to_world({cam.cx + cam.fx, cam.cy}, cam);
  EXPECT_NEAR(w.x(), 1000, 1e-9);
  EXPECT_NEAR(w.y(), 0, 1e-9);
  EXPECT_NEAR(w.z(), 1000, 1e-9);
}

TEST(Camera, RoundtripRandomPose) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> a(-0.4, 0.4), t(-200, 200), px(0, 640);
  for (int i = 0; i < 100; ++i) {
    CameraModel cam;
    cam.camera_to_world = Eigen::Translation3d(t(rng), t(rng), t(rng)) *
                          Eigen::AngleAxisd(a(rng), Eigen::Vector3d::UnitX()) *
                          Eigen::AngleAxisd(a(rng), Eigen::Vector3d::UnitY());
    const Vec2 p(px(rng), px(rng) * 0.75);
    const Eigen::Vector3d w = image_to_world(p, cam);
    // Independent pinhole projection.
    const Eigen::Vector3d c = cam.camera_to_world.inverse() * w;
    EXPECT_NEAR(c.z(), cam.table_depth, 1e-9);
    EXPECT_NEAR(cam.fx * c.x() / c.z() + cam.cx, p.x(), 1e-9);
    EXPECT_NEAR(cam.fy * c.y() / c.z() + cam.cy, p.y(), 1e-9);
    EXPECT_LT((world_to_image(w, cam) - p).norm(), 1e-9);
  }
}

TEST(Camera, RejectsBadIntrinsics) {
  CameraModel cam;
  cam.fx = 0;
  EXPECT_THROW(image_to_world({0, 0}, cam), Error);
}

TEST(ImageIo, PpmAndPngRoundtrip) {
  const auto img = fixtures::render_towel({});
  EXPECT_EQ(decode_ppm(encode_ppm(img)), img);
  const auto dir = std::filesystem::temp_directory_path() / "bhg_vision_test";
  std::filesystem::create_directories(dir);
  write_png(dir / "t.png", img);
  EXPECT_EQ(read_image(dir / "t.png"), img);
  write_ppm(dir / "t.ppm", img);
  EXPECT_EQ(read_image(dir / "t.ppm"), img);
  std::filesystem::remove_all(dir);
}

TEST(ImageIo, MissingFileThrows) {
  EXPECT_THROW(read_image("/nonexistent/x.png"), Error);
  EXPECT_THROW(decode_ppm({'P', '3'}), Error);
}

}  // namespace
}  // namespace bhg::vision
