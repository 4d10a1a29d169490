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

#ifndef BHG_VISION_H_
#define BHG_VISION_H_

#include <array>
#include <cstdint>

#include <Eigen/Core>

#include "bhg/image.h"

namespace bhg::vision {

using Vec2 = Eigen::Vector2d;

// OpenCV 8-bit convention: H in [0, 180) (halved degrees), S and V in
// [0, 255].
struct Hsv {
  int h = 0;
  int s = 0;
  int v = 0;

  friend bool operator==(const Hsv&, const Hsv&) = default;
};

Hsv rgb_to_hsv(Rgb c);

struct HsvRange {
  Hsv lower{100, 100, 50};
  Hsv upper{130, 255, 255};

  bool contains(Hsv c) const;
  // Throws InvalidArgument unless lower <= upper component-wise and every
  // bound lies in its channel range.
  void validate() const;
  friend bool operator==(const HsvRange&, const HsvRange&) = default;
};

BinaryMask extract_mask(const RgbImage& img, const HsvRange& range);

// Largest 4-connected component; ties go to the component whose first
// pixel comes first in row-major order. Throws Error(kNoObject) for an
// empty mask.
PixelSet segment_roi(const BinaryMask& mask);

struct CannyParams {
  double sigma = 1.0;        // Gaussian smoothing; 0 disables it
  double low_ratio = 0.2;    // thresholds relative to the max gradient
  double high_ratio = 0.5;
};

enum class EdgeMethod {
  // ROI pixels with a 4-neighbour outside the ROI (ROI minus its
  // 4-neighbour erosion). Exact on binary input.
  kBoundary,
  // Full Canny on the ROI's 0/255 raster.
  kCanny,
};

struct EdgeOptions {
  EdgeMethod method = EdgeMethod::kBoundary;
  CannyParams canny;
};

// Gaussian smoothing, Sobel gradients, non-maximum suppression and
// double-threshold hysteresis with 8-connectivity.
BinaryMask canny(const GrayImage& img, const CannyParams& params);

// Morphological boundary of a pixel set: members with a 4-neighbour
// outside the set.
PixelSet boundary_pixels(const PixelSet& roi);

PixelSet detect_edges(const PixelSet& roi, const EdgeOptions& options = {});

// Orientation in [0, pi/2). half_extents.x() is measured along
// (cos, sin) of the orientation, half_extents.y() along its normal.
struct RotatedRect {
  Vec2 center = Vec2::Zero();
  Vec2 half_extents = Vec2::Zero();
  double orientation = 0.0;

  Vec2 axis_u() const;
  Vec2 axis_v() const;
  double area() const { return 4.0 * half_extents.x() * half_extents.y(); }
};

// Minimum-area enclosing rectangle of pixel centres by rotating calipers
// over the convex hull. A single point yields half extents of 0.5 px;
// collinear points yield a zero-width rectangle. Sub-pixel outputs are
// snapped to a 2^-24 px grid, which makes the result exactly
// translation-equivariant for integer shifts. Throws InvalidArgument for
// an empty set.
RotatedRect min_enclosing_rect(const PixelSet& points);

// Convex hull of pixel centres, counter-clockwise, no collinear vertices.
std::vector<Pixel> convex_hull(PixelSet points);

// Midpoints of the two shorter sides, ordered by (x, y). For a square the
// sides perpendicular to the axis closest to the image x-axis are used.
std::array<Vec2, 2> grasp_midpoints(const RotatedRect& rect);

// grasp_midpoints moved `inset` px toward the centre (clamped at it).
std::array<Vec2, 2> inset_grasp_points(const RotatedRect& rect, double inset);

// Snaps to the 2^-24 sub-pixel grid.
double snap_subpixel(double v);

}  // namespace bhg::vision

#endif  // BHG_VISION_H_
