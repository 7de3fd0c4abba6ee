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

#include "orient/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "orient/error.hpp"

namespace orient {

namespace {

double squared_distance(const std::vector<double>& a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double reconstruction_error(const ReprScheme& scheme, double theta,
                            const std::vector<double>& canonical) {
  const ReprVector enc = encode(scheme, Angle::wrap(theta));
  return squared_distance(canonical, enc.values.data(), canonical.size());
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

DecodeOracle::DecodeOracle(const ReprScheme& scheme, std::size_t grid_size)
    : scheme_(scheme), grid_size_(grid_size) {
  if (grid_size < 10000) {
    throw_error(ErrorCode::kInvalidArgument,
                "DecodeOracle: grid_size must be >= 10000");
  }
  const std::size_t dim = scheme.dimension();
  grid_angles_.resize(grid_size);
  grid_encodings_.resize(grid_size * dim);
  const double step = kTwoPi / static_cast<double>(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) {
    const double theta = -kPi + static_cast<double>(j) * step;
    grid_angles_[j] = theta;
    const ReprVector enc = encode(scheme_, Angle::wrap(theta));
    std::copy(enc.values.begin(), enc.values.end(),
              grid_encodings_.begin() + static_cast<std::ptrdiff_t>(j * dim));
  }
}

Angle DecodeOracle::decode(const ReprVector& vec) const {
  if (vec.scheme != scheme_) {
    throw_error(ErrorCode::kInvalidArgument,
                "DecodeOracle: vector scheme does not match oracle scheme");
  }
  const ReprVector canonical = canonicalize(vec);
  const std::size_t dim = scheme_.dimension();

  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < grid_size_; ++j) {
    const double d =
        squared_distance(canonical.values, grid_encodings_.data() + j * dim, dim);
    if (d < best_dist) {
      best_dist = d;
      best = j;
    }
  }

  // Ternary polish inside the winning cell (one cell each side).
  const double cell = kTwoPi / static_cast<double>(grid_size_);
  double lo = grid_angles_[best] - cell;
  double hi = grid_angles_[best] + cell;
  for (int iter = 0; iter < 120; ++iter) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (reconstruction_error(scheme_, m1, canonical.values) <
        reconstruction_error(scheme_, m2, canonical.values)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return Angle::wrap((lo + hi) / 2.0);
}

Angle oracle_decode(const ReprVector& vec, std::size_t grid_size) {
  return DecodeOracle(vec.scheme, grid_size).decode(vec);
}

LandscapeSweep sweep_landscape(const ReprScheme& scheme, LossId loss_id,
                               Angle gt_angle, std::size_t num_points) {
  if (num_points == 0) {
    throw_error(ErrorCode::kInvalidArgument, "sweep_landscape: num_points must be > 0");
  }
  if (!loss_compatible(loss_id, scheme)) {
    throw_error(ErrorCode::kInvalidArgument,
                std::string("loss '") + loss_id_name(loss_id) +
                    "' is not defined for scheme " + scheme.descriptor());
  }
  LandscapeSweep sweep{scheme, loss_id, gt_angle, num_points, {}};
  sweep.samples.reserve(num_points);
  const ReprVector target = encode(scheme, gt_angle);
  const double step = kTwoPi / static_cast<double>(num_points);
  for (std::size_t j = 0; j < num_points; ++j) {
    const double theta_pred = -kPi + static_cast<double>(j) * step;
    const ReprVector pred = encode(scheme, Angle::wrap(theta_pred));
    sweep.samples.push_back({theta_pred, evaluate_loss(loss_id, pred, target).value});
  }
  return sweep;
}

FitTrace fit_representation(const ReprScheme& scheme, LossId loss_id, Angle gt_angle,
                            const ReprVector& init_vector, double step_size,
                            int steps) {
  if (!(step_size > 0.0) || step_size > 1.0) {
    throw_error(ErrorCode::kInvalidArgument,
                "fit_representation: step_size must be in (0, 1]");
  }
  if (steps <= 0) {
    throw_error(ErrorCode::kInvalidArgument, "fit_representation: steps must be > 0");
  }
  if (init_vector.scheme != scheme) {
    throw_error(ErrorCode::kInvalidArgument,
                "fit_representation: init vector scheme does not match");
  }
  if (!loss_compatible(loss_id, scheme)) {
    throw_error(ErrorCode::kInvalidArgument,
                std::string("loss '") + loss_id_name(loss_id) +
                    "' is not defined for scheme " + scheme.descriptor());
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  FitTrace trace{scheme, loss_id, gt_angle, init_vector, step_size, steps, {}};
  trace.trajectory.reserve(static_cast<std::size_t>(steps) + 1);

  const ReprVector target = encode(scheme, gt_angle);
  ReprVector state = init_vector;
  for (int k = 0; k <= steps; ++k) {
    FitTrace::Step row;
    row.step = k;
    std::vector<double> gradient;
    try {
      LossReport report = evaluate_loss(loss_id, state, target);
      row.loss_value = report.value;
      gradient = std::move(report.gradient);
    } catch (const Error&) {
      row.loss_value = nan;  // degenerate state; vector stays frozen
    }
    try {
      row.decoded_angle = decode(state).radians();
    } catch (const Error&) {
      row.decoded_angle = nan;
    }
    trace.trajectory.push_back(row);

    if (k == steps) break;
    if (!gradient.empty()) {
      for (std::size_t i = 0; i < state.values.size(); ++i) {
        state.values[i] -= step_size * gradient[i];
      }
    }
  }
  return trace;
}

EvalBatch simulate_noisy_predictions(const ReprScheme& scheme,
                                     const std::vector<Angle>& angles,
                                     double noise_sigma, std::uint64_t seed) {
  if (!(noise_sigma >= 0.0)) {
    throw_error(ErrorCode::kInvalidArgument,
                "simulate_noisy_predictions: noise_sigma must be >= 0");
  }
  EvalBatch batch;
  batch.predictions.reserve(angles.size());
  batch.ground_truths = angles;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    ReprVector vec = encode(scheme, angles[i]);
    if (noise_sigma > 0.0) {
      // One engine per instance so results do not depend on evaluation order.
      std::mt19937_64 engine(splitmix64(splitmix64(seed) + i));
      std::normal_distribution<double> noise(0.0, noise_sigma);
      for (double& v : vec.values) {
        v += noise(engine);
      }
      try {
        vec = canonicalize(vec);
      } catch (const Error&) {
        // zero-norm pair under extreme noise; decode the raw vector instead
      }
    }
    batch.predictions.push_back(decode(vec));
  }
  return batch;
}

std::string landscape_csv(const LandscapeSweep& sweep) {
  std::string out = "theta_pred,loss\n";
  char row[80];
  for (const LandscapeSweep::Sample& sample : sweep.samples) {
    std::snprintf(row, sizeof(row), "%.12g,%.12g\n", sample.theta_pred,
                  sample.loss_value);
    out += row;
  }
  return out;
}

std::string fit_csv(const FitTrace& trace) {
  std::string out = "step,loss,decoded_angle\n";
  char row[96];
  for (const FitTrace::Step& step : trace.trajectory) {
    std::snprintf(row, sizeof(row), "%d,%.12g,%.12g\n", step.step, step.loss_value,
                  step.decoded_angle);
    out += row;
  }
  return out;
}

}  // namespace orient
