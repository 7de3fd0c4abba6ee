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

#include "orient/orient.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "orient/analysis.hpp"
#include "orient/angle.hpp"
#include "orient/error.hpp"
#include "orient/kitti.hpp"
#include "orient/loss.hpp"
#include "orient/metrics.hpp"
#include "orient/representation.hpp"

struct orient_scheme {
  orient::ReprScheme scheme;
};

struct orient_labels {
  std::vector<orient::KittiLabel> labels;
  std::vector<std::string> warnings;
};

namespace {

thread_local std::string t_last_error;

orient_status to_status(orient::ErrorCode code) {
  switch (code) {
    case orient::ErrorCode::kInvalidArgument:
      return ORIENT_ERROR_INVALID_ARGUMENT;
    case orient::ErrorCode::kInvalidScheme:
      return ORIENT_ERROR_INVALID_SCHEME;
    case orient::ErrorCode::kDegenerate:
      return ORIENT_ERROR_DEGENERATE;
    case orient::ErrorCode::kInvalidLocation:
      return ORIENT_ERROR_INVALID_LOCATION;
    case orient::ErrorCode::kParse:
      return ORIENT_ERROR_PARSE;
    case orient::ErrorCode::kIo:
      return ORIENT_ERROR_IO;
  }
  return ORIENT_ERROR_INVALID_ARGUMENT;
}

orient_status fail(orient_status status, const char* message) {
  t_last_error = message;
  return status;
}

/* Runs fn, translating exceptions into status codes. */
template <typename Fn>
orient_status guarded(Fn&& fn) {
  try {
    fn();
    return ORIENT_OK;
  } catch (const orient::Error& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return ORIENT_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ORIENT_ERROR_INVALID_ARGUMENT;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* orient_version(void) { return "0.1.0"; }

const char* orient_status_name(orient_status status) {
  switch (status) {
    case ORIENT_OK:
      return "ok";
    case ORIENT_ERROR_INVALID_ARGUMENT:
      return "invalid-argument";
    case ORIENT_ERROR_INVALID_SCHEME:
      return "invalid-scheme";
    case ORIENT_ERROR_DEGENERATE:
      return "degenerate";
    case ORIENT_ERROR_INVALID_LOCATION:
      return "invalid-location";
    case ORIENT_ERROR_PARSE:
      return "parse-error";
    case ORIENT_ERROR_IO:
      return "io-error";
  }
  return "unknown";
}

const char* orient_last_error(void) { return t_last_error.c_str(); }

void orient_string_free(char* str) { delete[] str; }

/* ---- angles ------------------------------------------------------------ */

orient_status orient_wrap_angle(double radians, double* out) {
  if (out == nullptr) return fail(ORIENT_ERROR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = orient::wrap_radians(radians); });
}

orient_status orient_circular_diff(double a, double b, double* out) {
  if (out == nullptr) return fail(ORIENT_ERROR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    *out = orient::circular_diff(orient::Angle::wrap(a), orient::Angle::wrap(b));
  });
}

orient_status orient_circular_mean(const double* angles, size_t count, double* out) {
  if (angles == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "angles/out is NULL");
  }
  return guarded([&] {
    std::vector<orient::Angle> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      list.push_back(orient::Angle::wrap(angles[i]));
    }
    *out = orient::circular_mean(list).radians();
  });
}

orient_status orient_alpha_to_roty(double alpha, double x, double z, double* out) {
  if (out == nullptr) return fail(ORIENT_ERROR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    *out = orient::alpha_to_roty(orient::Angle::wrap(alpha), {x, z}).radians();
  });
}

orient_status orient_roty_to_alpha(double roty, double x, double z, double* out) {
  if (out == nullptr) return fail(ORIENT_ERROR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    *out = orient::roty_to_alpha(orient::Angle::wrap(roty), {x, z}).radians();
  });
}

/* ---- schemes ------------------------------------------------------------ */

orient_status orient_scheme_parse(const char* descriptor, orient_scheme** out) {
  if (descriptor == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "descriptor/out is NULL");
  }
  return guarded([&] {
    *out = new orient_scheme{orient::ReprScheme::parse(descriptor)};
  });
}

void orient_scheme_free(orient_scheme* scheme) { delete scheme; }

size_t orient_scheme_dimension(const orient_scheme* scheme) {
  return scheme == nullptr ? 0 : scheme->scheme.dimension();
}

orient_status orient_scheme_descriptor(const orient_scheme* scheme, char* buffer,
                                       size_t buffer_size) {
  if (scheme == nullptr || buffer == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "scheme/buffer is NULL");
  }
  const std::string descriptor = scheme->scheme.descriptor();
  if (buffer_size < descriptor.size() + 1) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "descriptor buffer too small");
  }
  std::memcpy(buffer, descriptor.c_str(), descriptor.size() + 1);
  return ORIENT_OK;
}

/* ---- codecs ------------------------------------------------------------ */

orient_status orient_encode(const orient_scheme* scheme, double theta, double* out,
                            size_t out_len) {
  if (scheme == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "scheme/out is NULL");
  }
  if (out_len != scheme->scheme.dimension()) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT,
                "out_len does not match scheme dimension");
  }
  return guarded([&] {
    const orient::ReprVector vec =
        orient::encode(scheme->scheme, orient::Angle::wrap(theta));
    std::memcpy(out, vec.values.data(), vec.values.size() * sizeof(double));
  });
}

orient_status orient_decode(const orient_scheme* scheme, const double* values,
                            size_t len, double* out_theta) {
  if (scheme == nullptr || values == nullptr || out_theta == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "scheme/values/out is NULL");
  }
  return guarded([&] {
    orient::ReprVector vec{scheme->scheme, std::vector<double>(values, values + len)};
    *out_theta = orient::decode(vec).radians();
  });
}

orient_status orient_canonicalize(const orient_scheme* scheme, const double* in,
                                  double* out, size_t len) {
  if (scheme == nullptr || in == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "scheme/in/out is NULL");
  }
  return guarded([&] {
    orient::ReprVector vec{scheme->scheme, std::vector<double>(in, in + len)};
    const orient::ReprVector canonical = orient::canonicalize(vec);
    std::memcpy(out, canonical.values.data(),
                canonical.values.size() * sizeof(double));
  });
}

orient_status orient_oracle_decode(const orient_scheme* scheme, const double* values,
                                   size_t len, size_t grid_size, double* out_theta) {
  if (scheme == nullptr || values == nullptr || out_theta == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "scheme/values/out is NULL");
  }
  return guarded([&] {
    orient::ReprVector vec{scheme->scheme, std::vector<double>(values, values + len)};
    *out_theta = orient::oracle_decode(vec, grid_size).radians();
  });
}

/* ---- losses ------------------------------------------------------------ */

orient_status orient_loss(const char* loss_id, const orient_scheme* scheme,
                          const double* pred, const double* target, size_t dim,
                          double* out_value, double* out_gradient) {
  if (loss_id == nullptr || scheme == nullptr || pred == nullptr ||
      target == nullptr || out_value == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "required argument is NULL");
  }
  return guarded([&] {
    const orient::LossId id = orient::parse_loss_id(loss_id);
    orient::ReprVector p{scheme->scheme, std::vector<double>(pred, pred + dim)};
    orient::ReprVector t{scheme->scheme, std::vector<double>(target, target + dim)};
    const orient::LossReport report = orient::evaluate_loss(id, p, t);
    *out_value = report.value;
    if (out_gradient != nullptr) {
      std::memcpy(out_gradient, report.gradient.data(),
                  report.gradient.size() * sizeof(double));
    }
  });
}

orient_status orient_loss_compatible(const char* loss_id, const orient_scheme* scheme,
                                     int* out_compatible) {
  if (loss_id == nullptr || scheme == nullptr || out_compatible == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "required argument is NULL");
  }
  return guarded([&] {
    *out_compatible =
        orient::loss_compatible(orient::parse_loss_id(loss_id), scheme->scheme) ? 1 : 0;
  });
}

/* ---- metrics ------------------------------------------------------------ */

orient_status orient_orientation_similarity(const double* predictions,
                                            const double* ground_truths,
                                            size_t count, double* out) {
  if (predictions == nullptr || ground_truths == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "predictions/ground_truths/out is NULL");
  }
  return guarded([&] {
    orient::EvalBatch batch;
    batch.predictions.reserve(count);
    batch.ground_truths.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      batch.predictions.push_back(orient::Angle::wrap(predictions[i]));
      batch.ground_truths.push_back(orient::Angle::wrap(ground_truths[i]));
    }
    *out = orient::orientation_similarity(batch);
  });
}

/* ---- KITTI labels ------------------------------------------------------- */

orient_status orient_labels_parse(const char* text, size_t len, orient_labels** out) {
  if (text == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "text/out is NULL");
  }
  return guarded([&] {
    orient::KittiParseResult parsed =
        orient::parse_label_text(std::string_view(text, len));
    *out = new orient_labels{std::move(parsed.labels), std::move(parsed.warnings)};
  });
}

orient_status orient_labels_parse_file(const char* path, orient_labels** out) {
  if (path == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "path/out is NULL");
  }
  return guarded([&] {
    orient::KittiParseResult parsed = orient::parse_label_file(path);
    *out = new orient_labels{std::move(parsed.labels), std::move(parsed.warnings)};
  });
}

void orient_labels_free(orient_labels* labels) { delete labels; }

size_t orient_labels_count(const orient_labels* labels) {
  return labels == nullptr ? 0 : labels->labels.size();
}

size_t orient_labels_warning_count(const orient_labels* labels) {
  return labels == nullptr ? 0 : labels->warnings.size();
}

const char* orient_labels_warning(const orient_labels* labels, size_t index) {
  if (labels == nullptr || index >= labels->warnings.size()) return nullptr;
  return labels->warnings[index].c_str();
}

orient_status orient_labels_get(const orient_labels* labels, size_t index,
                                orient_label_view* out) {
  if (labels == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "labels/out is NULL");
  }
  if (index >= labels->labels.size()) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "label index out of range");
  }
  const orient::KittiLabel& label = labels->labels[index];
  out->object_type = label.object_type.c_str();
  out->truncated = label.truncated;
  out->occluded = label.occluded;
  out->alpha = label.alpha;
  out->bbox[0] = label.bbox_left;
  out->bbox[1] = label.bbox_top;
  out->bbox[2] = label.bbox_right;
  out->bbox[3] = label.bbox_bottom;
  out->dimensions[0] = label.height;
  out->dimensions[1] = label.width;
  out->dimensions[2] = label.length;
  out->location[0] = label.x;
  out->location[1] = label.y;
  out->location[2] = label.z;
  out->rotation_y = label.rotation_y;
  return ORIENT_OK;
}

orient_status orient_labels_filter_class(const orient_labels* labels,
                                         const char* class_name,
                                         orient_labels** out) {
  if (labels == nullptr || class_name == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "labels/class_name/out is NULL");
  }
  return guarded([&] {
    *out = new orient_labels{orient::filter_class(labels->labels, class_name), {}};
  });
}

orient_status orient_labels_convert(const orient_labels* labels,
                                    orient_angle_field to, orient_labels** out) {
  if (labels == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "labels/out is NULL");
  }
  return guarded([&] {
    *out = new orient_labels{
        orient::convert_labels(labels->labels, to == ORIENT_FIELD_ROTY), {}};
  });
}

orient_status orient_labels_get_angles(const orient_labels* labels,
                                       orient_angle_field field, double* out,
                                       size_t capacity) {
  if (labels == nullptr || out == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "labels/out is NULL");
  }
  if (capacity < labels->labels.size()) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "output capacity too small");
  }
  for (size_t i = 0; i < labels->labels.size(); ++i) {
    out[i] = field == ORIENT_FIELD_ALPHA ? labels->labels[i].alpha
                                         : labels->labels[i].rotation_y;
  }
  return ORIENT_OK;
}

orient_status orient_labels_check(const orient_labels* labels, size_t index,
                                  double tol_radians, int* out_consistent) {
  if (labels == nullptr || out_consistent == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "labels/out is NULL");
  }
  if (index >= labels->labels.size()) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "label index out of range");
  }
  return guarded([&] {
    *out_consistent =
        orient::check_label_consistency(labels->labels[index], tol_radians) ? 1 : 0;
  });
}

orient_status orient_labels_write(const orient_labels* labels, char** out_text) {
  if (labels == nullptr || out_text == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "labels/out is NULL");
  }
  return guarded([&] { *out_text = copy_string(orient::write_label_text(labels->labels)); });
}

orient_status orient_labels_write_file(const orient_labels* labels, const char* path) {
  if (labels == nullptr || path == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "labels/path is NULL");
  }
  return guarded([&] { orient::write_label_file(path, labels->labels); });
}

/* ---- analysis ------------------------------------------------------------ */

orient_status orient_landscape_csv(const orient_scheme* scheme, const char* loss_id,
                                   double gt_angle, size_t num_points,
                                   char** out_csv) {
  if (scheme == nullptr || loss_id == nullptr || out_csv == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "scheme/loss_id/out is NULL");
  }
  return guarded([&] {
    const orient::LandscapeSweep sweep =
        orient::sweep_landscape(scheme->scheme, orient::parse_loss_id(loss_id),
                                orient::Angle::wrap(gt_angle), num_points);
    *out_csv = copy_string(orient::landscape_csv(sweep));
  });
}

orient_status orient_fit_csv(const orient_scheme* scheme, const char* loss_id,
                             double init_angle, double gt_angle, int steps,
                             double step_size, char** out_csv) {
  if (scheme == nullptr || loss_id == nullptr || out_csv == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "scheme/loss_id/out is NULL");
  }
  return guarded([&] {
    const orient::ReprVector init =
        orient::encode(scheme->scheme, orient::Angle::wrap(init_angle));
    const orient::FitTrace trace = orient::fit_representation(
        scheme->scheme, orient::parse_loss_id(loss_id),
        orient::Angle::wrap(gt_angle), init, step_size, steps);
    *out_csv = copy_string(orient::fit_csv(trace));
  });
}

orient_status orient_simulate_os(const orient_scheme* scheme, double sigma,
                                 uint64_t seed, size_t count, double* out_os) {
  if (scheme == nullptr || out_os == nullptr) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "scheme/out is NULL");
  }
  if (count == 0) {
    return fail(ORIENT_ERROR_INVALID_ARGUMENT, "count must be > 0");
  }
  return guarded([&] {
    std::vector<orient::Angle> angles;
    angles.reserve(count);
    const double step = orient::kTwoPi / static_cast<double>(count);
    for (size_t i = 0; i < count; ++i) {
      angles.push_back(
          orient::Angle::wrap(-orient::kPi + static_cast<double>(i) * step));
    }
    const orient::EvalBatch batch =
        orient::simulate_noisy_predictions(scheme->scheme, angles, sigma, seed);
    *out_os = orient::orientation_similarity(batch);
  });
}

} /* extern "C" */
