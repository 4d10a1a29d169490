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

#include "bhg/vision.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include "bhg/error.h"

namespace bhg::vision {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kSubpixelGrid = 16777216.0;  // 2^24

// Occupancy grid over the bounding box of a pixel set, padded by `pad`.
class Raster {
 public:
  Raster(const PixelSet& pixels, int pad) {
    int min_x = std::numeric_limits<int>::max();
    int min_y = std::numeric_limits<int>::max();
    int max_x = std::numeric_limits<int>::min();
    int max_y = std::numeric_limits<int>::min();
    for (const auto& p : pixels) {
      min_x = std::min(min_x, p.x);
      min_y = std::min(min_y, p.y);
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
    ox_ = min_x - pad;
    oy_ = min_y - pad;
    w_ = max_x - min_x + 1 + 2 * pad;
    h_ = max_y - min_y + 1 + 2 * pad;
    cells_.assign(static_cast<std::size_t>(w_) * h_, 0);
    for (const auto& p : pixels) cells_[index(p.x - ox_, p.y - oy_)] = 1;
  }

  int width() const { return w_; }
  int height() const { return h_; }
  int origin_x() const { return ox_; }
  int origin_y() const { return oy_; }
  // Local coordinates; outside the grid reads as empty.
  bool occupied(int lx, int ly) const {
    if (lx < 0 || ly < 0 || lx >= w_ || ly >= h_) return false;
    return cells_[index(lx, ly)] != 0;
  }

 private:
  std::size_t index(int lx, int ly) const {
    return static_cast<std::size_t>(ly) * w_ + lx;
  }

  int ox_ = 0;
  int oy_ = 0;
  int w_ = 0;
  int h_ = 0;
  std::vector<std::uint8_t> cells_;
};

long long cross(const Pixel& o, const Pixel& a, const Pixel& b) {
  return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
         static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

GrayImage gaussian_blur(const GrayImage& img, double sigma) {
  if (sigma <= 0.0) return img;
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    kernel[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
    sum += kernel[i + radius];
  }
  for (double& k : kernel) k /= sum;

  auto clamp_x = [&](int x) { return std::clamp(x, 0, img.width - 1); };
  auto clamp_y = [&](int y) { return std::clamp(y, 0, img.height - 1); };
  GrayImage tmp = img;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += kernel[i + radius] * img.at(clamp_x(x + i), y);
      tmp.at(x, y) = acc;
    }
  }
  GrayImage out = tmp;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += kernel[i + radius] * tmp.at(x, clamp_y(y + i));
      out.at(x, y) = acc;
    }
  }
  return out;
}

}  // namespace

Hsv rgb_to_hsv(Rgb c) {
  const int r = c.r;
  const int g = c.g;
  const int b = c.b;
  const int v = std::max({r, g, b});
  const int mn = std::min({r, g, b});
  const int diff = v - mn;
  Hsv out;
  out.v = v;
  out.s = v == 0 ? 0 : static_cast<int>(std::lround(255.0 * diff / v));
  if (diff == 0) return out;
  double h = 0.0;
  if (v == r) {
    h = 60.0 * (g - b) / diff;
  } else if (v == g) {
    h = 120.0 + 60.0 * (b - r) / diff;
  } else {
    h = 240.0 + 60.0 * (r - g) / diff;
  }
  if (h < 0.0) h += 360.0;
  out.h = static_cast<int>(std::lround(h / 2.0));
  if (out.h >= 180) out.h -= 180;
  return out;
}

bool HsvRange::contains(Hsv c) const {
  return c.h >= lower.h && c.h <= upper.h && c.s >= lower.s && c.s <= upper.s &&
         c.v >= lower.v && c.v <= upper.v;
}

void HsvRange::validate() const {
  auto in = [](int v, int hi) { return v >= 0 && v <= hi; };
  if (!in(lower.h, 179) || !in(upper.h, 179) || !in(lower.s, 255) ||
      !in(upper.s, 255) || !in(lower.v, 255) || !in(upper.v, 255)) {
    throw Error(ErrorCode::kInvalidArgument,
                "HSV bounds must lie in H [0,180), S,V [0,255]");
  }
  if (lower.h > upper.h || lower.s > upper.s || lower.v > upper.v) {
    throw Error(ErrorCode::kInvalidArgument, "HSV lower bound exceeds upper bound");
  }
}

BinaryMask extract_mask(const RgbImage& img, const HsvRange& range) {
  img.validate();
  BinaryMask mask = BinaryMask::empty(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      mask.set(x, y, range.contains(rgb_to_hsv(img.at(x, y))));
    }
  }
  return mask;
}

PixelSet segment_roi(const BinaryMask& mask) {
  const int w = mask.width;
  const int h = mask.height;
  std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
  PixelSet best;
  std::vector<Pixel> stack;
  int next_label = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t idx = static_cast<std::size_t>(y) * w + x;
      if (!mask.bits[idx] || label[idx] >= 0) continue;
      PixelSet component;
      label[idx] = next_label;
      stack.push_back({x, y});
      while (!stack.empty()) {
        const Pixel p = stack.back();
        stack.pop_back();
        component.push_back(p);
        const Pixel nbrs[4] = {{p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1}};
        for (const auto& q : nbrs) {
          if (q.x < 0 || q.y < 0 || q.x >= w || q.y >= h) continue;
          const std::size_t qi = static_cast<std::size_t>(q.y) * w + q.x;
          if (mask.bits[qi] && label[qi] < 0) {
            label[qi] = next_label;
            stack.push_back(q);
          }
        }
      }
      ++next_label;
      // Components are discovered in row-major order of their first pixel,
      // so a strict comparison keeps the earliest on ties.
      if (component.size() > best.size()) best = std::move(component);
    }
  }
  if (best.empty()) throw Error(ErrorCode::kNoObject, "mask contains no object pixels");
  std::sort(best.begin(), best.end());
  return best;
}

BinaryMask canny(const GrayImage& input, const CannyParams& params) {
  if (input.width <= 0 || input.height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "canny needs a non-empty image");
  }
  if (!(params.low_ratio >= 0.0) || !(params.high_ratio >= params.low_ratio) ||
      params.sigma < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "invalid Canny thresholds");
  }
  const GrayImage img = gaussian_blur(input, params.sigma);
  const int w = img.width;
  const int h = img.height;
  auto px = [&](int x, int y) {
    return img.at(std::clamp(x, 0, w - 1), std::clamp(y, 0, h - 1));
  };

  GrayImage mag{w, h, std::vector<double>(static_cast<std::size_t>(w) * h, 0.0)};
  std::vector<std::uint8_t> dir(static_cast<std::size_t>(w) * h, 0);
  double max_mag = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double gx = (px(x + 1, y - 1) + 2.0 * px(x + 1, y) + px(x + 1, y + 1)) -
                        (px(x - 1, y - 1) + 2.0 * px(x - 1, y) + px(x - 1, y + 1));
      const double gy = (px(x - 1, y + 1) + 2.0 * px(x, y + 1) + px(x + 1, y + 1)) -
                        (px(x - 1, y - 1) + 2.0 * px(x, y - 1) + px(x + 1, y - 1));
      const double m = std::hypot(gx, gy);
      mag.at(x, y) = m;
      max_mag = std::max(max_mag, m);
      double deg = std::atan2(gy, gx) * 180.0 / std::numbers::pi;
      if (deg < 0.0) deg += 180.0;
      std::uint8_t bin = 0;
      if (deg >= 22.5 && deg < 67.5) {
        bin = 1;
      } else if (deg >= 67.5 && deg < 112.5) {
        bin = 2;
      } else if (deg >= 112.5 && deg < 157.5) {
        bin = 3;
      }
      dir[static_cast<std::size_t>(y) * w + x] = bin;
    }
  }

  BinaryMask out = BinaryMask::empty(w, h);
  if (max_mag == 0.0) return out;
  const double high = params.high_ratio * max_mag;
  const double low = params.low_ratio * max_mag;
  const double tie = 1e-9 * max_mag;
  auto mag_at = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= w || y >= h) return 0.0;
    return mag.at(x, y);
  };
  static constexpr int kOffsets[4][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}};

  // 0 = suppressed, 1 = weak, 2 = strong
  std::vector<std::uint8_t> cls(static_cast<std::size_t>(w) * h, 0);
  std::deque<Pixel> queue;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double m = mag.at(x, y);
      if (m < low || m == 0.0) continue;
      const auto* o = kOffsets[dir[static_cast<std::size_t>(y) * w + x]];
      // Equal magnitudes straddle a step edge; keep the brighter side.
      auto beaten_by = [&](int nx, int ny) {
        const double n = mag_at(nx, ny);
        if (std::abs(n - m) <= tie) return px(nx, ny) > px(x, y);
        return n > m;
      };
      if (beaten_by(x - o[0], y - o[1]) || beaten_by(x + o[0], y + o[1])) continue;
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      cls[i] = m >= high ? 2 : 1;
      if (cls[i] == 2) {
        out.bits[i] = 1;
        queue.push_back({x, y});
      }
    }
  }
  while (!queue.empty()) {
    const Pixel p = queue.front();
    queue.pop_front();
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int qx = p.x + dx;
        const int qy = p.y + dy;
        if (qx < 0 || qy < 0 || qx >= w || qy >= h) continue;
        const std::size_t qi = static_cast<std::size_t>(qy) * w + qx;
        if (cls[qi] == 1 && !out.bits[qi]) {
          out.bits[qi] = 1;
          queue.push_back({qx, qy});
        }
      }
    }
  }
  return out;
}

PixelSet boundary_pixels(const PixelSet& roi) {
  if (roi.empty()) return {};
  const Raster grid(roi, 1);
  PixelSet out;
  for (const auto& p : roi) {
    const int lx = p.x - grid.origin_x();
    const int ly = p.y - grid.origin_y();
    if (!grid.occupied(lx + 1, ly) || !grid.occupied(lx - 1, ly) ||
        !grid.occupied(lx, ly + 1) || !grid.occupied(lx, ly - 1)) {
      out.push_back(p);
    }
  }
  return out;
}

PixelSet detect_edges(const PixelSet& roi, const EdgeOptions& options) {
  if (roi.empty()) throw Error(ErrorCode::kInvalidArgument, "edge detection needs a non-empty ROI");
  if (options.method == EdgeMethod::kBoundary) return boundary_pixels(roi);

  const int pad = static_cast<int>(std::ceil(3.0 * options.canny.sigma)) + 2;
  const Raster grid(roi, pad);
  GrayImage raster{grid.width(), grid.height(),
                   std::vector<double>(static_cast<std::size_t>(grid.width()) * grid.height())};
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) raster.at(x, y) = grid.occupied(x, y) ? 255.0 : 0.0;
  }
  const BinaryMask edges = canny(raster, options.canny);
  PixelSet out;
  for (int y = 0; y < edges.height; ++y) {
    for (int x = 0; x < edges.width; ++x) {
      if (edges.at(x, y)) out.push_back({x + grid.origin_x(), y + grid.origin_y()});
    }
  }
  return out;
}

std::vector<Pixel> convex_hull(PixelSet points) {
  std::sort(points.begin(), points.end(), [](const Pixel& a, const Pixel& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<Pixel> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

double snap_subpixel(double v) { return std::round(v * kSubpixelGrid) / kSubpixelGrid; }

Vec2 RotatedRect::axis_u() const { return {std::cos(orientation), std::sin(orientation)}; }
Vec2 RotatedRect::axis_v() const { return {-std::sin(orientation), std::cos(orientation)}; }

RotatedRect min_enclosing_rect(const PixelSet& points) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "enclosing rectangle needs at least one point");
  }
  // Work relative to the bounding-box corner so integer shifts of the
  // input leave the floating-point path unchanged.
  int ox = std::numeric_limits<int>::max();
  int oy = std::numeric_limits<int>::max();
  for (const auto& p : points) {
    ox = std::min(ox, p.x);
    oy = std::min(oy, p.y);
  }
  PixelSet local;
  local.reserve(points.size());
  for (const auto& p : points) local.push_back({p.x - ox, p.y - oy});
  const auto hull = convex_hull(std::move(local));

  RotatedRect rect;
  if (hull.size() == 1) {
    rect.center = Vec2(hull[0].x + ox, hull[0].y + oy);
    rect.half_extents = Vec2(0.5, 0.5);
    return rect;
  }

  double best_area = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Pixel& a = hull[i];
    const Pixel& b = hull[(i + 1) % hull.size()];
    double theta = std::fmod(std::atan2(static_cast<double>(b.y - a.y),
                                        static_cast<double>(b.x - a.x)),
                             kHalfPi);
    if (theta < 0.0) theta += kHalfPi;
    if (theta >= kHalfPi) theta = 0.0;
    const Vec2 u(std::cos(theta), std::sin(theta));
    const Vec2 v(-u.y(), u.x());
    double min_u = std::numeric_limits<double>::infinity();
    double max_u = -min_u;
    double min_v = min_u;
    double max_v = -min_u;
    for (const auto& p : hull) {
      const Vec2 q(p.x, p.y);
      min_u = std::min(min_u, q.dot(u));
      max_u = std::max(max_u, q.dot(u));
      min_v = std::min(min_v, q.dot(v));
      max_v = std::max(max_v, q.dot(v));
    }
    const double area = (max_u - min_u) * (max_v - min_v);
    if (area < best_area * (1.0 - 1e-12)) {
      best_area = area;
      best_theta = theta;
      const Vec2 c = u * (0.5 * (min_u + max_u)) + v * (0.5 * (min_v + max_v));
      rect.center = Vec2(snap_subpixel(c.x()), snap_subpixel(c.y()));
      rect.half_extents = Vec2(0.5 * (max_u - min_u), 0.5 * (max_v - min_v));
    }
  }
  rect.orientation = best_theta;
  rect.center += Vec2(ox, oy);
  return rect;
}

std::array<Vec2, 2> inset_grasp_points(const RotatedRect& rect, double inset) {
  const double hu = rect.half_extents.x();
  const double hv = rect.half_extents.y();
  const double scale = std::max({hu, hv, 1e-300});
  Vec2 axis;
  double half = 0.0;
  if (std::abs(hu - hv) <= 1e-9 * scale) {
    // Square: the axis closest to the image x-axis.
    axis = std::cos(rect.orientation) >= std::sin(rect.orientation) ? rect.axis_u()
                                                                    : rect.axis_v();
    half = hu;
  } else if (hu > hv) {
    axis = rect.axis_u();
    half = hu;
  } else {
    axis = rect.axis_v();
    half = hv;
  }
  const double reach = std::max(0.0, half - inset);
  const Vec2 offset(snap_subpixel(reach * axis.x()), snap_subpixel(reach * axis.y()));
  std::array<Vec2, 2> pts{rect.center - offset, rect.center + offset};
  if (pts[1].x() < pts[0].x() || (pts[1].x() == pts[0].x() && pts[1].y() < pts[0].y())) {
    std::swap(pts[0], pts[1]);
  }
  return pts;
}

std::array<Vec2, 2> grasp_midpoints(const RotatedRect& rect) {
  return inset_grasp_points(rect, 0.0);
}

}  // namespace bhg::vision
