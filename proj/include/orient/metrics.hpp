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

#ifndef ORIENT_METRICS_HPP_
#define ORIENT_METRICS_HPP_

#include <vector>

#include "orient/angle.hpp"

namespace orient {

/// Paired predicted and ground-truth angles. Lists must have equal,
/// non-zero length.
struct EvalBatch {
  std::vector<Angle> predictions;
  std::vector<Angle> ground_truths;
};

/// Orientation similarity: mean of (1 + cos(pred - gt)) / 2 over the batch,
/// in [0, 1]. 1 means every pair matches modulo 2*pi; recall weighting is
/// not applied. Throws kInvalidArgument for an empty or mismatched batch.
double orientation_similarity(const EvalBatch& batch);

/// Per-pair identity between the two headline measures:
/// OS = 1 - angular_loss / 2, for loss values in [0, 2].
double os_from_angular_loss(double loss_value);

}  // namespace orient

#endif  // ORIENT_METRICS_HPP_
