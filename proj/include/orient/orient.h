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

/*
 * C API of liborient: vehicle orientation representation codecs, losses,
 * the orientation-similarity metric, KITTI object-label I/O and a small
 * numerical analysis harness.
 *
 * Conventions:
 *   - every fallible function returns orient_status; ORIENT_OK is 0
 *   - on failure, orient_last_error() returns a message for the calling
 *     thread, valid until the thread's next failing call
 *   - orient_scheme / orient_labels are opaque handles released with their
 *     _free function; strings returned through char** are released with
 *     orient_string_free
 *   - angles are radians; canonical range is [-pi, pi)
 */

#ifndef ORIENT_ORIENT_H_
#define ORIENT_ORIENT_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orient_status {
  ORIENT_OK = 0,
  ORIENT_ERROR_INVALID_ARGUMENT = 1,
  ORIENT_ERROR_INVALID_SCHEME = 2,
  ORIENT_ERROR_DEGENERATE = 3,
  ORIENT_ERROR_INVALID_LOCATION = 4,
  ORIENT_ERROR_PARSE = 5,
  ORIENT_ERROR_IO = 6,
} orient_status;

const char* orient_version(void);
const char* orient_status_name(orient_status status);

/* Message for the most recent failure on the calling thread. */
const char* orient_last_error(void);

void orient_string_free(char* str);

/* ---- angles ------------------------------------------------------------ */

orient_status orient_wrap_angle(double radians, double* out);
orient_status orient_circular_diff(double a, double b, double* out);
orient_status orient_circular_mean(const double* angles, size_t count, double* out);

/* roty = wrap(alpha + arctan(x / z)); requires z > 0. */
orient_status orient_alpha_to_roty(double alpha, double x, double z, double* out);
orient_status orient_roty_to_alpha(double roty, double x, double z, double* out);

/* ---- representation schemes -------------------------------------------- */

typedef struct orient_scheme orient_scheme;

/*
 * Descriptor grammar: kind[:key=value{,key=value}]. Kinds: scalar_global,
 * scalar_local, single_bin, multibin, conf, voting, tricosine. Keys: bins,
 * overlap (multibin only). Example: "multibin:bins=2,overlap=0.1".
 */
orient_status orient_scheme_parse(const char* descriptor, orient_scheme** out);
void orient_scheme_free(orient_scheme* scheme);

size_t orient_scheme_dimension(const orient_scheme* scheme);

/* Canonical descriptor string; buffer of >= 64 bytes is always enough. */
orient_status orient_scheme_descriptor(const orient_scheme* scheme, char* buffer,
                                       size_t buffer_size);

/* ---- codecs ------------------------------------------------------------ */

/* out must hold orient_scheme_dimension(scheme) doubles. theta is wrapped. */
orient_status orient_encode(const orient_scheme* scheme, double theta, double* out,
                            size_t out_len);

orient_status orient_decode(const orient_scheme* scheme, const double* values,
                            size_t len, double* out_theta);

/* In-place-safe: in and out may alias. */
orient_status orient_canonicalize(const orient_scheme* scheme, const double* in,
                                  double* out, size_t len);

/* Brute-force reference decoder over a grid of grid_size (>= 10000) angles. */
orient_status orient_oracle_decode(const orient_scheme* scheme, const double* values,
                                   size_t len, size_t grid_size, double* out_theta);

/* ---- losses ------------------------------------------------------------ */

/*
 * loss_id: "l2", "angular" (single_bin only) or "multibin" (multibin only).
 * out_gradient may be NULL when only the value is needed; otherwise it must
 * hold dim doubles.
 */
orient_status orient_loss(const char* loss_id, const orient_scheme* scheme,
                          const double* pred, const double* target, size_t dim,
                          double* out_value, double* out_gradient);

/* 1 when the loss is defined for vectors of this scheme, else 0. */
orient_status orient_loss_compatible(const char* loss_id, const orient_scheme* scheme,
                                     int* out_compatible);

/* ---- metrics ------------------------------------------------------------ */

/* Mean of (1 + cos(pred - gt)) / 2; count must be > 0. */
orient_status orient_orientation_similarity(const double* predictions,
                                            const double* ground_truths,
                                            size_t count, double* out);

/* ---- KITTI labels ------------------------------------------------------- */

typedef struct orient_labels orient_labels;

typedef enum orient_angle_field {
  ORIENT_FIELD_ALPHA = 0,
  ORIENT_FIELD_ROTY = 1,
} orient_angle_field;

/* Borrowed view of one label; pointers stay valid while the list lives. */
typedef struct orient_label_view {
  const char* object_type;
  double truncated;
  int occluded;
  double alpha;
  double bbox[4];       /* left, top, right, bottom */
  double dimensions[3]; /* height, width, length */
  double location[3];   /* x, y, z */
  double rotation_y;
} orient_label_view;

orient_status orient_labels_parse(const char* text, size_t len, orient_labels** out);
orient_status orient_labels_parse_file(const char* path, orient_labels** out);
void orient_labels_free(orient_labels* labels);

size_t orient_labels_count(const orient_labels* labels);

/* Parser warnings (wrapped out-of-range angles, ...), one per line. */
size_t orient_labels_warning_count(const orient_labels* labels);
const char* orient_labels_warning(const orient_labels* labels, size_t index);

orient_status orient_labels_get(const orient_labels* labels, size_t index,
                                orient_label_view* out);

/* New list containing only rows whose type matches exactly. */
orient_status orient_labels_filter_class(const orient_labels* labels,
                                         const char* class_name,
                                         orient_labels** out);

/* New list with the `to` field recomputed from the other angle and the
 * object location (roty = wrap(alpha + arctan(x/z)) and its inverse). */
orient_status orient_labels_convert(const orient_labels* labels,
                                    orient_angle_field to, orient_labels** out);

/* Copies the chosen angle column into out (capacity >= count). */
orient_status orient_labels_get_angles(const orient_labels* labels,
                                       orient_angle_field field, double* out,
                                       size_t capacity);

/* 1 if |circular_diff(roty, wrap(alpha + arctan(x/z)))| <= tol, else 0. */
orient_status orient_labels_check(const orient_labels* labels, size_t index,
                                  double tol_radians, int* out_consistent);

orient_status orient_labels_write(const orient_labels* labels, char** out_text);
orient_status orient_labels_write_file(const orient_labels* labels, const char* path);

/* ---- analysis harness ---------------------------------------------------- */

/* CSV "theta_pred,loss" of loss(encode(theta_pred), encode(gt)) over a
 * uniform grid of num_points angles. */
orient_status orient_landscape_csv(const orient_scheme* scheme, const char* loss_id,
                                   double gt_angle, size_t num_points,
                                   char** out_csv);

/* CSV "step,loss,decoded_angle" of plain gradient descent from
 * encode(init_angle) toward encode(gt_angle). */
orient_status orient_fit_csv(const orient_scheme* scheme, const char* loss_id,
                             double init_angle, double gt_angle, int steps,
                             double step_size, char** out_csv);

/* Orientation similarity after encode -> add Gaussian noise -> decode on
 * `count` uniformly spaced angles. Deterministic in seed. */
orient_status orient_simulate_os(const orient_scheme* scheme, double sigma,
                                 uint64_t seed, size_t count, double* out_os);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ORIENT_ORIENT_H_ */
