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

#include "orient/kitti.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "orient/error.hpp"

namespace orient {

bool operator==(const KittiLabel& a, const KittiLabel& b) {
  return a.object_type == b.object_type && a.truncated == b.truncated &&
         a.occluded == b.occluded && a.alpha == b.alpha &&
         a.bbox_left == b.bbox_left && a.bbox_top == b.bbox_top &&
         a.bbox_right == b.bbox_right && a.bbox_bottom == b.bbox_bottom &&
         a.height == b.height && a.width == b.width && a.length == b.length &&
         a.x == b.x && a.y == b.y && a.z == b.z && a.rotation_y == b.rotation_y;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) {
      tokens.push_back(line.substr(start, i - start));
    }
  }
  return tokens;
}

double parse_number(std::string_view token, std::size_t line_no, std::size_t column) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw_error(ErrorCode::kParse,
                "line " + std::to_string(line_no) + ", column " +
                    std::to_string(column) + ": expected a number, got '" +
                    std::string(token) + "'");
  }
  return value;
}

int parse_integer(std::string_view token, std::size_t line_no, std::size_t column) {
  const double value = parse_number(token, line_no, column);
  const double rounded = std::nearbyint(value);
  if (value != rounded) {
    throw_error(ErrorCode::kParse,
                "line " + std::to_string(line_no) + ", column " +
                    std::to_string(column) + ": expected an integer, got '" +
                    std::string(token) + "'");
  }
  return static_cast<int>(rounded);
}

double ingest_angle(double raw, const char* field, std::size_t line_no,
                    std::vector<std::string>& warnings) {
  if (raw == kKittiInvalidAngle) {
    return raw;
  }
  if (raw < -kPi || raw > kPi) {
    warnings.push_back("line " + std::to_string(line_no) + ": " + field + " " +
                       std::to_string(raw) + " outside [-pi, pi], wrapped");
  }
  return wrap_radians(raw);
}

}  // namespace

KittiParseResult parse_label_text(std::string_view text) {
  KittiParseResult result;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }

    const std::vector<std::string_view> tokens = split_tokens(line);
    if (!tokens.empty()) {
      if (tokens.size() != 15 && tokens.size() != 16) {
        throw_error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) +
                        ": expected 15 or 16 columns, got " +
                        std::to_string(tokens.size()));
      }
      KittiLabel label;
      label.object_type = std::string(tokens[0]);
      label.truncated = parse_number(tokens[1], line_no, 2);
      label.occluded = parse_integer(tokens[2], line_no, 3);
      label.alpha = ingest_angle(parse_number(tokens[3], line_no, 4), "alpha",
                                 line_no, result.warnings);
      label.bbox_left = parse_number(tokens[4], line_no, 5);
      label.bbox_top = parse_number(tokens[5], line_no, 6);
      label.bbox_right = parse_number(tokens[6], line_no, 7);
      label.bbox_bottom = parse_number(tokens[7], line_no, 8);
      label.height = parse_number(tokens[8], line_no, 9);
      label.width = parse_number(tokens[9], line_no, 10);
      label.length = parse_number(tokens[10], line_no, 11);
      label.x = parse_number(tokens[11], line_no, 12);
      label.y = parse_number(tokens[12], line_no, 13);
      label.z = parse_number(tokens[13], line_no, 14);
      label.rotation_y = ingest_angle(parse_number(tokens[14], line_no, 15),
                                      "rotation_y", line_no, result.warnings);
      if (tokens.size() == 16) {
        parse_number(tokens[15], line_no, 16);  // detection score, dropped
      }
      result.labels.push_back(std::move(label));
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return result;
}

KittiParseResult parse_label_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw_error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_label_text(buffer.str());
}

std::string write_label_text(const std::vector<KittiLabel>& labels) {
  std::string out;
  char row[512];
  for (const KittiLabel& label : labels) {
    std::snprintf(row, sizeof(row),
                  "%s %.2f %d %.2f %.2f %.2f %.2f %.2f %.2f %.2f %.2f %.2f %.2f "
                  "%.2f %.2f\n",
                  label.object_type.c_str(), label.truncated, label.occluded,
                  label.alpha, label.bbox_left, label.bbox_top, label.bbox_right,
                  label.bbox_bottom, label.height, label.width, label.length,
                  label.x, label.y, label.z, label.rotation_y);
    out += row;
  }
  return out;
}

void write_label_file(const std::string& path, const std::vector<KittiLabel>& labels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw_error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  }
  out << write_label_text(labels);
  if (!out) {
    throw_error(ErrorCode::kIo, "failed writing '" + path + "'");
  }
}

std::vector<KittiLabel> filter_class(const std::vector<KittiLabel>& labels,
                                     const std::string& class_name) {
  std::vector<KittiLabel> result;
  for (const KittiLabel& label : labels) {
    if (label.object_type == class_name) {
      result.push_back(label);
    }
  }
  return result;
}

bool check_label_consistency(const KittiLabel& label, double tol_radians) {
  const Angle expected =
      alpha_to_roty(Angle::wrap(label.alpha), label.location());
  const double gap = circular_diff(Angle::wrap(label.rotation_y), expected);
  return std::abs(gap) <= tol_radians;
}

std::vector<KittiLabel> convert_labels(const std::vector<KittiLabel>& labels,
                                       bool to_rotation_y) {
  std::vector<KittiLabel> result = labels;
  for (std::size_t i = 0; i < result.size(); ++i) {
    KittiLabel& label = result[i];
    const double source = to_rotation_y ? label.alpha : label.rotation_y;
    if (source == kKittiInvalidAngle) {
      continue;
    }
    try {
      if (to_rotation_y) {
        label.rotation_y =
            alpha_to_roty(Angle::wrap(label.alpha), label.location()).radians();
      } else {
        label.alpha =
            roty_to_alpha(Angle::wrap(label.rotation_y), label.location()).radians();
      }
    } catch (const Error& e) {
      throw_error(e.code(), "row " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return result;
}

}  // namespace orient
