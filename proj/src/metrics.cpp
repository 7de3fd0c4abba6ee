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

#include "orient/metrics.hpp"

#include <cmath>

#include "orient/error.hpp"

namespace orient {

double orientation_similarity(const EvalBatch& batch) {
  if (batch.predictions.empty()) {
    throw_error(ErrorCode::kInvalidArgument, "orientation_similarity: empty batch");
  }
  if (batch.predictions.size() != batch.ground_truths.size()) {
    throw_error(ErrorCode::kInvalidArgument,
                "orientation_similarity: " + std::to_string(batch.predictions.size()) +
                    " predictions vs " + std::to_string(batch.ground_truths.size()) +
                    " ground truths");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < batch.predictions.size(); ++i) {
    const double delta = circular_diff(batch.predictions[i], batch.ground_truths[i]);
    sum += (1.0 + std::cos(delta)) / 2.0;
  }
  return sum / static_cast<double>(batch.predictions.size());
}

double os_from_angular_loss(double loss_value) {
  if (!(loss_value >= 0.0) || loss_value > 2.0) {
    throw_error(ErrorCode::kInvalidArgument,
                "os_from_angular_loss: loss must be in [0, 2]");
  }
  return 1.0 - loss_value / 2.0;
}

}  // namespace orient
