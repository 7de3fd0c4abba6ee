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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "orient/error.hpp"

namespace orient {
namespace {

double norm(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

TEST(L2Loss, ZeroAtIdenticalVectors) {
  const ReprVector v = encode(ReprScheme::tricosine(), Angle::wrap(0.7));
  const LossReport report = l2_loss(v, v);
  EXPECT_EQ(0.0, report.value);
  for (double g : report.gradient) EXPECT_EQ(0.0, g);
}

TEST(L2Loss, OrthogonalUnitVectors) {
  const ReprScheme scheme = ReprScheme::single_bin();
  const LossReport report = l2_loss({scheme, {1.0, 0.0}}, {scheme, {0.0, 1.0}});
  EXPECT_EQ(2.0, report.value);
  EXPECT_EQ(2.0, report.gradient[0]);
  EXPECT_EQ(-2.0, report.gradient[1]);
}

TEST(L2Loss, SingleBinClosedForm) {
  // (cos t - 1)^2 + sin^2 t == 2 - 2 cos t
  const ReprScheme scheme = ReprScheme::single_bin();
  const ReprVector target = encode(scheme, Angle::wrap(0.0));
  for (int j = 0; j < 1000; ++j) {
    const double theta = -kPi + j * kTwoPi / 1000.0;
    const ReprVector pred = encode(scheme, Angle::wrap(theta));
    EXPECT_NEAR(2.0 - 2.0 * std::cos(theta), l2_loss(pred, target).value, 1e-12);
  }
}

TEST(L2Loss, SchemeMismatchRejected) {
  const ReprVector a = encode(ReprScheme::single_bin(), Angle::wrap(0.0));
  const ReprVector b = encode(ReprScheme::tricosine(), Angle::wrap(0.0));
  EXPECT_THROW(l2_loss(a, b), Error);
  const ReprVector m2 = encode(ReprScheme::multibin(2), Angle::wrap(0.0));
  const ReprVector m4 = encode(ReprScheme::multibin(4), Angle::wrap(0.0));
  EXPECT_THROW(l2_loss(m2, m4), Error);
}

TEST(AngularLoss, ZeroAtTarget) {
  const ReprScheme scheme = ReprScheme::single_bin();
  EXPECT_EQ(0.0, angular_loss({scheme, {1.0, 0.0}}, {scheme, {1.0, 0.0}}).value);
}

TEST(AngularLoss, AntipodeHasMaxValueAndZeroGradient) {
  const ReprScheme scheme = ReprScheme::single_bin();
  const LossReport report =
      angular_loss({scheme, {-1.0, 0.0}}, {scheme, {1.0, 0.0}});
  EXPECT_EQ(2.0, report.value);
  EXPECT_EQ(0.0, report.gradient[0]);
  EXPECT_EQ(0.0, report.gradient[1]);
}

TEST(AngularLoss, QuarterTurn) {
  const ReprScheme scheme = ReprScheme::single_bin();
  EXPECT_NEAR(1.0, angular_loss({scheme, {0.0, 1.0}}, {scheme, {1.0, 0.0}}).value,
              1e-15);
}

TEST(AngularLoss, DegenerateOriginRejected) {
  const ReprScheme scheme = ReprScheme::single_bin();
  try {
    angular_loss({scheme, {1e-10, 0.0}}, {scheme, {1.0, 0.0}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kDegenerate, e.code());
  }
}

TEST(AngularLoss, NonUnitTargetRejected) {
  const ReprScheme scheme = ReprScheme::single_bin();
  EXPECT_THROW(angular_loss({scheme, {1.0, 0.0}}, {scheme, {2.0, 0.0}}), Error);
}

TEST(AngularLoss, RadiallyInvariant) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> raw(-kPi, kPi);
  const ReprScheme scheme = ReprScheme::single_bin();
  for (int i = 0; i < 500; ++i) {
    const ReprVector pred = encode(scheme, Angle::wrap(raw(rng)));
    const ReprVector target = encode(scheme, Angle::wrap(raw(rng)));
    const double base = angular_loss(pred, target).value;
    for (double s : {0.01, 0.7, 42.0}) {
      const ReprVector scaled{scheme, {s * pred.values[0], s * pred.values[1]}};
      EXPECT_NEAR(base, angular_loss(scaled, target).value, 1e-12);
    }
  }
}

TEST(AngularLoss, RangeAndMaximumAtAntipode) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> raw(-kPi, kPi);
  const ReprScheme scheme = ReprScheme::single_bin();
  for (int i = 0; i < 2000; ++i) {
    const Angle pred_angle = Angle::wrap(raw(rng));
    const Angle target_angle = Angle::wrap(raw(rng));
    const double value =
        angular_loss(encode(scheme, pred_angle), encode(scheme, target_angle)).value;
    EXPECT_GE(value, 0.0);
    EXPECT_LE(value, 2.0);
    const double gap = std::abs(circular_diff(pred_angle, target_angle));
    if (value > 2.0 - 1e-9) {
      EXPECT_NEAR(kPi, gap, 1e-4);
    }
  }
}

TEST(AngularLoss, TwiceAngularEqualsL2OnUnitVectors) {
  const ReprScheme scheme = ReprScheme::single_bin();
  const ReprVector target = encode(scheme, Angle::wrap(0.0));
  for (int j = 0; j < 2000; ++j) {
    const ReprVector pred =
        encode(scheme, Angle::wrap(-kPi + j * kTwoPi / 2000.0));
    EXPECT_NEAR(l2_loss(pred, target).value, 2.0 * angular_loss(pred, target).value,
                1e-12);
  }
}

TEST(MultibinLoss, MinimumValueAtTargetIsCrossEntropyFloor) {
  const ReprScheme scheme = ReprScheme::multibin(2, 0.1);
  const ReprVector target = encode(scheme, Angle::wrap(0.0));
  const LossReport report = multibin_loss(target, target);
  // orientation term vanishes; remaining value is CE(softmax([0, 1]), [0, 1])
  const double expected_ce = std::log(1.0 + std::exp(-1.0));
  EXPECT_NEAR(expected_ce, report.value, 1e-12);
}

TEST(MultibinLoss, OrientationTermZeroForMatchingOffsets) {
  const ReprScheme scheme = ReprScheme::multibin(2, 0.1);
  const ReprVector target = encode(scheme, Angle::wrap(0.4));
  ReprVector pred = target;
  // different confidences, same offsets: only the CE part may change
  pred.values[0] = 0.2;
  pred.values[3] = 0.7;
  const LossReport full = multibin_loss(pred, target);
  double max_conf = std::max(pred.values[0], pred.values[3]);
  const double lse =
      std::log(std::exp(pred.values[0] - max_conf) + std::exp(pred.values[3] - max_conf)) +
      max_conf;
  double expected_ce = 0.0;
  expected_ce += target.values[0] * (lse - pred.values[0]);
  expected_ce += target.values[3] * (lse - pred.values[3]);
  EXPECT_NEAR(expected_ce, full.value, 1e-12);
}

TEST(MultibinLoss, ZeroPredOffsetPairReadsAsZeroOffset) {
  const ReprScheme scheme = ReprScheme::multibin(2, 0.1);
  const ReprVector target = encode(scheme, Angle::wrap(0.0));
  ASSERT_EQ(1.0, target.values[3]);  // 0 sits in the bin centered at 0 only
  ReprVector pred{scheme, {0.3, 0.5, 0.5, 0.8, 0.0, 0.0}};
  const LossReport report = multibin_loss(pred, target);
  // gradient w.r.t. the zero pair is the symmetric (zero) choice
  EXPECT_EQ(0.0, report.gradient[4]);
  EXPECT_EQ(0.0, report.gradient[5]);
  // value contribution of that bin is 1 - cos(0 - target offset)
  const double tx = target.values[4];
  ReprVector pred_explicit = pred;
  pred_explicit.values[4] = 1.0;  // offset 0, written out
  EXPECT_NEAR(multibin_loss(pred_explicit, target).value, report.value, 1e-12);
  EXPECT_GT(report.value, 1.0 - tx);
}

TEST(MultibinLoss, RequiresMultibinVectors) {
  const ReprVector v = encode(ReprScheme::single_bin(), Angle::wrap(0.0));
  EXPECT_THROW(multibin_loss(v, v), Error);
}

TEST(LossRegistry, ParseAndCompatibility) {
  EXPECT_EQ(LossId::kL2, parse_loss_id("l2"));
  EXPECT_EQ(LossId::kAngular, parse_loss_id("angular"));
  EXPECT_EQ(LossId::kMultibin, parse_loss_id("multibin"));
  EXPECT_THROW(parse_loss_id("l3"), Error);

  EXPECT_TRUE(loss_compatible(LossId::kL2, ReprScheme::tricosine()));
  EXPECT_TRUE(loss_compatible(LossId::kAngular, ReprScheme::single_bin()));
  EXPECT_FALSE(loss_compatible(LossId::kAngular, ReprScheme::global_scalar()));
  EXPECT_TRUE(loss_compatible(LossId::kMultibin, ReprScheme::multibin(2)));
  EXPECT_FALSE(loss_compatible(LossId::kMultibin, ReprScheme::voting_bins(4)));
}

TEST(FiniteDiff, RejectsBadStep) {
  const ReprVector v = encode(ReprScheme::single_bin(), Angle::wrap(0.3));
  EXPECT_THROW(finite_diff_gradient(l2_loss, v, v, 0.0), Error);
  EXPECT_THROW(finite_diff_gradient(l2_loss, v, v, 1e-2), Error);
}

TEST(FiniteDiff, ZeroGradientAtL2Minimum) {
  const ReprVector v = encode(ReprScheme::voting_bins(4), Angle::wrap(1.1));
  for (double g : finite_diff_gradient(l2_loss, v, v, 1e-6)) {
    EXPECT_NEAR(0.0, g, 1e-9);
  }
}

// Analytic gradients vs central differences at random non-degenerate points.
TEST(GradientCheck, L2) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> raw(-kPi, kPi);
  std::uniform_real_distribution<double> jitter(-0.8, 0.8);
  const ReprScheme scheme = ReprScheme::tricosine();
  for (int i = 0; i < 100; ++i) {
    ReprVector pred = encode(scheme, Angle::wrap(raw(rng)));
    for (double& v : pred.values) v += jitter(rng);
    const ReprVector target = encode(scheme, Angle::wrap(raw(rng)));
    const LossReport report = l2_loss(pred, target);
    if (norm(report.gradient) < 1e-3) continue;
    const std::vector<double> fd = finite_diff_gradient(l2_loss, pred, target, 1e-6);
    EXPECT_LT(distance(report.gradient, fd) / norm(report.gradient), 1e-5);
  }
}

TEST(GradientCheck, Angular) {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> raw(-kPi, kPi);
  std::uniform_real_distribution<double> gap(0.2, kPi - 0.2);
  std::uniform_real_distribution<double> radius(0.3, 3.0);
  std::uniform_real_distribution<double> sign(-1.0, 1.0);
  const ReprScheme scheme = ReprScheme::single_bin();
  for (int i = 0; i < 100; ++i) {
    const double target_angle = raw(rng);
    const double pred_angle =
        target_angle + (sign(rng) < 0 ? -1.0 : 1.0) * gap(rng);
    const double r = radius(rng);
    const ReprVector pred{scheme,
                          {r * std::cos(pred_angle), r * std::sin(pred_angle)}};
    const ReprVector target = encode(scheme, Angle::wrap(target_angle));
    const LossReport report = angular_loss(pred, target);
    const std::vector<double> fd =
        finite_diff_gradient(angular_loss, pred, target, 1e-6);
    EXPECT_LT(distance(report.gradient, fd) / std::max(norm(report.gradient), 1e-6),
              1e-5);
  }
}

TEST(GradientCheck, Multibin) {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> raw(-kPi, kPi);
  std::uniform_real_distribution<double> conf(-1.0, 1.0);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  const ReprScheme scheme = ReprScheme::multibin(2, 0.1);
  for (int i = 0; i < 100; ++i) {
    const ReprVector target = encode(scheme, Angle::wrap(raw(rng)));
    // smooth prediction point: every offset pair well away from the origin
    std::vector<double> values(scheme.dimension());
    for (int b = 0; b < 2; ++b) {
      const double direction = raw(rng);
      const double r = radius(rng);
      values[3 * b + 0] = conf(rng);
      values[3 * b + 1] = r * std::cos(direction);
      values[3 * b + 2] = r * std::sin(direction);
    }
    const ReprVector pred{scheme, values};
    const LossReport report = multibin_loss(pred, target);
    const std::vector<double> fd =
        finite_diff_gradient(multibin_loss, pred, target, 1e-6);
    EXPECT_LT(distance(report.gradient, fd) / std::max(norm(report.gradient), 1e-6),
              1e-5);
  }
}

TEST(GradientCheck, AngularLossStallsNearAntipode) {
  const ReprScheme scheme = ReprScheme::single_bin();
  const ReprVector target = encode(scheme, Angle::wrap(0.0));
  const ReprVector pred = encode(scheme, Angle::wrap(kPi - 1e-4));
  const LossReport report = angular_loss(pred, target);
  EXPECT_LT(norm(report.gradient), 1e-3);
  EXPECT_LT(norm(finite_diff_gradient(angular_loss, pred, target, 1e-6)), 1e-3);
}

}  // namespace
}  // namespace orient
