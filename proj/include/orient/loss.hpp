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

#ifndef ORIENT_LOSS_HPP_
#define ORIENT_LOSS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "orient/representation.hpp"

namespace orient {

/// Loss value plus the analytic gradient with respect to the prediction
/// vector.
struct LossReport {
  double value = 0.0;
  std::vector<double> gradient;
};

/// Sum of squared component differences; gradient 2 * (pred - target).
/// Works for every scheme as long as pred and target share one.
LossReport l2_loss(const ReprVector& pred, const ReprVector& target);

/// Cosine-distance loss on single_bin vectors:
/// value = 1 - (pred . target) / |pred|, in [0, 2].
///
/// The target must be unit norm. Throws kDegenerate when |pred| <= 1e-9,
/// where the loss has no defined direction. Note the gradient vanishes at
/// the exact antipode of the target.
LossReport angular_loss(const ReprVector& pred, const ReprVector& target);

/// Hybrid multibin loss: softmax cross-entropy over the confidence slots
/// plus, for each bin the target assigns confidence to, that confidence
/// times (1 - cos(predicted offset - target offset)).
///
/// A pred offset pair that is exactly (0, 0) reads as offset 0 with a zero
/// gradient contribution (the loss is scale-free in each pair and has no
/// linear part at the origin).
LossReport multibin_loss(const ReprVector& pred, const ReprVector& target);

enum class LossId { kL2, kAngular, kMultibin };

/// Parses "l2", "angular" or "multibin". Throws kInvalidArgument otherwise.
LossId parse_loss_id(const std::string& id);

const char* loss_id_name(LossId id);

/// True when the loss is defined for vectors of this scheme: l2 everywhere,
/// angular on single_bin only, multibin on multibin only.
bool loss_compatible(LossId id, const ReprScheme& scheme);

/// Dispatches to the named loss.
LossReport evaluate_loss(LossId id, const ReprVector& pred, const ReprVector& target);

using LossFunction = std::function<LossReport(const ReprVector&, const ReprVector&)>;

/// Central-difference gradient oracle:
/// (L(pred + h e_i) - L(pred - h e_i)) / (2 h) per component.
/// Requires h in (0, 1e-3].
std::vector<double> finite_diff_gradient(const LossFunction& loss,
                                         const ReprVector& pred,
                                         const ReprVector& target, double h);

}  // namespace orient

#endif  // ORIENT_LOSS_HPP_
