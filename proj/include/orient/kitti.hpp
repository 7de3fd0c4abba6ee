/*
 * Copyright 2026 The Orient Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ORIENT_KITTI_HPP_
#define ORIENT_KITTI_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "orient/angle.hpp"

namespace orient {

// The devkit's marker for "no valid orientation" (DontCare rows and some
// detector outputs). Preserved verbatim by parse/write instead of being
// wrapped into [-pi, pi).
inline constexpr double kKittiInvalidAngle = -10.0;

/// One row of a KITTI object label file. 15 whitespace-separated columns:
/// type truncated occluded alpha bbox(l t r b) dim(h w l) loc(x y z)
/// rotation_y, with an optional 16th score column that is read and dropped.
struct KittiLabel {
  std::string object_type;
  double truncated = 0.0;
  int occluded = 0;
  double alpha = 0.0;  // radians, canonical unless kKittiInvalidAngle
  double bbox_left = 0.0;
  double bbox_top = 0.0;
  double bbox_right = 0.0;
  double bbox_bottom = 0.0;
  double height = 0.0;  // meters
  double width = 0.0;
  double length = 0.0;
  double x = 0.0;  // camera coordinates, meters
  double y = 0.0;
  double z = 0.0;
  double rotation_y = 0.0;  // radians, canonical unless kKittiInvalidAngle

  ObjectLocation location() const { return ObjectLocation{x, z}; }
};

bool operator==(const KittiLabel& a, const KittiLabel& b);

struct KittiParseResult {
  std::vector<KittiLabel> labels;
  // Non-fatal oddities, e.g. angles outside [-pi, pi] that were wrapped.
  std::vector<std::string> warnings;
};

/// Parses label text, one object per non-empty line. Angles are wrapped to
/// canonical on ingestion (with a warning when outside the file format's
/// closed [-pi, pi] range); the -10 invalid marker is preserved. Throws
/// kParse with the line (and column) of the first malformed row.
KittiParseResult parse_label_text(std::string_view text);

/// parse_label_text over a file's contents. Throws kIo if the file cannot
/// be read.
KittiParseResult parse_label_file(const std::string& path);

/// Serializes labels in devkit format: 15 columns, 2 decimal places.
std::string write_label_text(const std::vector<KittiLabel>& labels);

void write_label_file(const std::string& path, const std::vector<KittiLabel>& labels);

/// Order-preserving subset with object_type == class_name (exact match).
std::vector<KittiLabel> filter_class(const std::vector<KittiLabel>& labels,
                                     const std::string& class_name);

/// True iff |circular_diff(rotation_y, wrap(alpha + arctan(x/z)))| <= tol.
/// Throws kInvalidLocation when z <= 0.
bool check_label_consistency(const KittiLabel& label, double tol_radians);

/// Copy of the labels with one angle column recomputed from the other:
/// rotation_y = wrap(alpha + arctan(x/z)) when to_rotation_y, the inverse
/// otherwise. Rows whose source angle is the -10 invalid marker pass
/// through unchanged; any other row with z <= 0 throws kInvalidLocation
/// naming the row.
std::vector<KittiLabel> convert_labels(const std::vector<KittiLabel>& labels,
                                       bool to_rotation_y);

}  // namespace orient

#endif  // ORIENT_KITTI_HPP_
