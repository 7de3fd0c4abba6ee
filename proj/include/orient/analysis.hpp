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

#ifndef ORIENT_ANALYSIS_HPP_
#define ORIENT_ANALYSIS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "orient/loss.hpp"
#include "orient/metrics.hpp"
#include "orient/representation.hpp"

namespace orient {

/// Brute-force reference decoder: the angle whose encoding is nearest (in
/// squared euclidean distance) to the canonicalized input, found on a
/// uniform grid over [-pi, pi) and polished by ternary search inside the
/// winning cell. Independent of every closed-form decode path; exists so
/// those paths can be tested against it.
///
/// Building the table costs grid_size encodes; decodes are then cheap, so
/// reuse one oracle per scheme for batch comparisons.
class DecodeOracle {
 public:
  /// grid_size must be >= 10000 (cells of ~0.0006 rad, where the
  /// reconstruction error is unimodal per cell for every scheme).
  DecodeOracle(const ReprScheme& scheme, std::size_t grid_size);

  Angle decode(const ReprVector& vec) const;

  const ReprScheme& scheme() const { return scheme_; }

 private:
  ReprScheme scheme_;
  std::size_t grid_size_;
  std::vector<double> grid_angles_;
  std::vector<double> grid_encodings_;  // row-major, one encoding per angle
};

/// One-shot form of DecodeOracle.
Angle oracle_decode(const ReprVector& vec, std::size_t grid_size);

/// Loss values over a uniform grid of hypothetical predictions against a
/// fixed ground truth, both run through the scheme's encoder.
struct LandscapeSweep {
  ReprScheme scheme;
  LossId loss_id = LossId::kL2;
  Angle gt_angle;
  std::size_t num_points = 0;
  struct Sample {
    double theta_pred = 0.0;
    double loss_value = 0.0;
  };
  std::vector<Sample> samples;
};

/// Evaluates loss(encode(theta_pred), encode(gt_angle)) for num_points grid
/// angles theta_pred = -pi + j * 2*pi / num_points. Throws kInvalidArgument
/// when the loss is not defined for the scheme.
LandscapeSweep sweep_landscape(const ReprScheme& scheme, LossId loss_id,
                               Angle gt_angle, std::size_t num_points);

/// Plain gradient descent on a prediction vector against a fixed encoded
/// ground truth, recording the loss and decoded angle at every step.
struct FitTrace {
  ReprScheme scheme;
  LossId loss_id = LossId::kL2;
  Angle gt_angle;
  ReprVector init_vector;
  double step_size = 0.0;
  int steps = 0;
  struct Step {
    int step = 0;
    double loss_value = 0.0;    // NaN when the loss is undefined at this state
    double decoded_angle = 0.0; // NaN when the state cannot be decoded
  };
  std::vector<Step> trajectory;  // steps + 1 rows including the initial state
};

/// Runs `steps` updates v <- v - step_size * grad. step_size must be in
/// (0, 1] and steps positive. Degenerate states do not abort the trace:
/// an undefined loss freezes the vector and the affected rows carry NaNs.
FitTrace fit_representation(const ReprScheme& scheme, LossId loss_id, Angle gt_angle,
                            const ReprVector& init_vector, double step_size,
                            int steps);

/// Encodes each angle, adds zero-mean Gaussian noise (sigma per component,
/// deterministic in `seed` and the instance index), canonicalizes, decodes,
/// and pairs the decoded predictions with the input ground truths.
EvalBatch simulate_noisy_predictions(const ReprScheme& scheme,
                                     const std::vector<Angle>& angles,
                                     double noise_sigma, std::uint64_t seed);

/// CSV serializations: header row, 12 significant digits.
std::string landscape_csv(const LandscapeSweep& sweep);  // theta_pred,loss
std::string fit_csv(const FitTrace& trace);              // step,loss,decoded_angle

}  // namespace orient

#endif  // ORIENT_ANALYSIS_HPP_
