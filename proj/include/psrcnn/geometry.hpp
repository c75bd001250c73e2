// Copyright 2026 The psrcnn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace psrcnn {

// Axis-aligned box in continuous pixel coordinates, corner form
// (x1, y1, x2, y2). Degenerate boxes (non-positive width or height)
// and non-finite coordinates are rejected at construction.
class BBox {
 public:
  BBox(double x1, double y1, double x2, double y2);

  // Converts from the (x, y, w, h) form used by annotation files.
  static BBox from_xywh(double x, double y, double w, double h);

  double x1() const { return x1_; }
  double y1() const { return y1_; }
  double x2() const { return x2_; }
  double y2() const { return y2_; }
  double width() const { return x2_ - x1_; }
  double height() const { return y2_ - y1_; }

  bool operator==(const BBox& other) const = default;

 private:
  double x1_, y1_, x2_, y2_;
};

double area(const BBox& b);

// Intersection over union. Touching edges (zero-area intersection)
// yield 0; identical boxes yield exactly 1.
double iou(const BBox& a, const BBox& b);

// For each threshold t, the number of unordered pairs (i < j) with
// iou(boxes[i], boxes[j]) > t. Thresholds must lie in (0, 1) and be
// strictly increasing.
std::vector<std::size_t> pairwise_overlap_counts(
    std::span<const BBox> boxes, std::span<const double> thresholds);

}  // namespace psrcnn
