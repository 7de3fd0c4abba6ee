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

#include "orient/loss.hpp"

#include <algorithm>
#include <cmath>

#include "orient/error.hpp"

namespace orient {

namespace {

constexpr double kDegenerateNorm = 1e-9;

void check_pair(const ReprVector& pred, const ReprVector& target, const char* op) {
  if (pred.scheme != target.scheme) {
    throw_error(ErrorCode::kInvalidArgument,
                std::string(op) + ": prediction scheme " + pred.scheme.descriptor() +
                    " does not match target scheme " + target.scheme.descriptor());
  }
  if (pred.values.size() != pred.scheme.dimension() ||
      target.values.size() != target.scheme.dimension()) {
    throw_error(ErrorCode::kInvalidArgument,
                std::string(op) + ": vector length does not match scheme dimension");
  }
  for (double v : pred.values) {
    if (!std::isfinite(v)) {
      throw_error(ErrorCode::kInvalidArgument,
                  std::string(op) + ": non-finite prediction component");
    }
  }
  for (double v : target.values) {
    if (!std::isfinite(v)) {
      throw_error(ErrorCode::kInvalidArgument,
                  std::string(op) + ": non-finite target component");
    }
  }
}

// value and gradient of 1 - (p . t_hat) / |p| restricted to one (cos, sin)
// pair; t_hat must be unit. Gradient goes to grad[at], grad[at + 1].
double pair_cosine_loss(double px, double py, double tx, double ty, double weight,
                        std::vector<double>& gradient, std::size_t at) {
  const double norm = std::hypot(px, py);
  if (norm == 0.0) {
    // offset reads as 0 (atan2(0, 0)); no gradient contribution
    return weight * (1.0 - tx);
  }
  const double dot = px * tx + py * ty;
  gradient[at] += weight * (-tx / norm + dot * px / (norm * norm * norm));
  gradient[at + 1] += weight * (-ty / norm + dot * py / (norm * norm * norm));
  return weight * (1.0 - dot / norm);
}

}  // namespace

LossReport l2_loss(const ReprVector& pred, const ReprVector& target) {
  check_pair(pred, target, "l2_loss");
  LossReport report;
  report.gradient.resize(pred.values.size());
  for (std::size_t i = 0; i < pred.values.size(); ++i) {
    const double d = pred.values[i] - target.values[i];
    report.value += d * d;
    report.gradient[i] = 2.0 * d;
  }
  return report;
}

LossReport angular_loss(const ReprVector& pred, const ReprVector& target) {
  check_pair(pred, target, "angular_loss");
  if (pred.scheme.kind() != ReprKind::kSingleBin) {
    throw_error(ErrorCode::kInvalidArgument,
                "angular_loss is defined for single_bin vectors only");
  }
  const double target_norm = std::hypot(target.values[0], target.values[1]);
  if (std::abs(target_norm - 1.0) > 1e-6) {
    throw_error(ErrorCode::kInvalidArgument,
                "angular_loss: target must be unit norm");
  }
  const double norm = std::hypot(pred.values[0], pred.values[1]);
  if (norm <= kDegenerateNorm) {
    throw_error(ErrorCode::kDegenerate,
                "angular_loss: prediction norm below 1e-9, loss undefined");
  }
  LossReport report;
  report.gradient.assign(2, 0.0);
  report.value = pair_cosine_loss(pred.values[0], pred.values[1],
                                  target.values[0], target.values[1], 1.0,
                                  report.gradient, 0);
  return report;
}

LossReport multibin_loss(const ReprVector& pred, const ReprVector& target) {
  check_pair(pred, target, "multibin_loss");
  if (pred.scheme.kind() != ReprKind::kMultibin) {
    throw_error(ErrorCode::kInvalidArgument,
                "multibin_loss is defined for multibin vectors only");
  }
  const int n = pred.scheme.num_bins();
  LossReport report;
  report.gradient.assign(pred.values.size(), 0.0);

  // softmax cross-entropy on the confidence slots
  double max_conf = pred.values[0];
  for (int b = 1; b < n; ++b) {
    max_conf = std::max(max_conf, pred.values[3 * b]);
  }
  double exp_sum = 0.0;
  for (int b = 0; b < n; ++b) {
    exp_sum += std::exp(pred.values[3 * b] - max_conf);
  }
  const double log_sum = std::log(exp_sum) + max_conf;
  double target_mass = 0.0;
  for (int b = 0; b < n; ++b) {
    target_mass += target.values[3 * b];
  }
  for (int b = 0; b < n; ++b) {
    const double t = target.values[3 * b];
    const double softmax = std::exp(pred.values[3 * b] - log_sum);
    report.value += t * (log_sum - pred.values[3 * b]);
    report.gradient[3 * b] = target_mass * softmax - t;
  }

  // confidence-weighted cosine loss on the offsets of the target's bins
  for (int b = 0; b < n; ++b) {
    const double weight = target.values[3 * b];
    if (weight <= 0.0) {
      continue;
    }
    double tx = target.values[3 * b + 1];
    double ty = target.values[3 * b + 2];
    const double t_norm = std::hypot(tx, ty);
    if (t_norm <= kDegenerateNorm) {
      throw_error(ErrorCode::kInvalidArgument,
                  "multibin_loss: target bin " + std::to_string(b) +
                      " has confidence but a zero offset pair");
    }
    tx /= t_norm;
    ty /= t_norm;
    report.value += pair_cosine_loss(pred.values[3 * b + 1], pred.values[3 * b + 2],
                                     tx, ty, weight, report.gradient, 3 * b + 1);
  }
  return report;
}

LossId parse_loss_id(const std::string& id) {
  if (id == "l2") return LossId::kL2;
  if (id == "angular") return LossId::kAngular;
  if (id == "multibin") return LossId::kMultibin;
  throw_error(ErrorCode::kInvalidArgument, "unknown loss '" + id + "'");
}

const char* loss_id_name(LossId id) {
  switch (id) {
    case LossId::kL2:
      return "l2";
    case LossId::kAngular:
      return "angular";
    case LossId::kMultibin:
      return "multibin";
  }
  return "unknown";
}

bool loss_compatible(LossId id, const ReprScheme& scheme) {
  switch (id) {
    case LossId::kL2:
      return true;
    case LossId::kAngular:
      return scheme.kind() == ReprKind::kSingleBin;
    case LossId::kMultibin:
      return scheme.kind() == ReprKind::kMultibin;
  }
  return false;
}

LossReport evaluate_loss(LossId id, const ReprVector& pred, const ReprVector& target) {
  switch (id) {
    case LossId::kL2:
      return l2_loss(pred, target);
    case LossId::kAngular:
      return angular_loss(pred, target);
    case LossId::kMultibin:
      return multibin_loss(pred, target);
  }
  throw_error(ErrorCode::kInvalidArgument, "unknown loss id");
}

std::vector<double> finite_diff_gradient(const LossFunction& loss,
                                         const ReprVector& pred,
                                         const ReprVector& target, double h) {
  if (!(h > 0.0) || h > 1e-3) {
    throw_error(ErrorCode::kInvalidArgument,
                "finite_diff_gradient: h must be in (0, 1e-3]");
  }
  std::vector<double> gradient(pred.values.size());
  ReprVector probe = pred;
  for (std::size_t i = 0; i < pred.values.size(); ++i) {
    probe.values[i] = pred.values[i] + h;
    const double up = loss(probe, target).value;
    probe.values[i] = pred.values[i] - h;
    const double down = loss(probe, target).value;
    probe.values[i] = pred.values[i];
    gradient[i] = (up - down) / (2.0 * h);
  }
  return gradient;
}

}  // namespace orient
