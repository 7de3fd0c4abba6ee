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

#include "orient/angle.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "orient/error.hpp"

namespace orient {
namespace {

TEST(WrapRadians, Identity) { EXPECT_EQ(0.0, wrap_radians(0.0)); }

TEST(WrapRadians, ThreePiWrapsToMinusPi) {
  EXPECT_NEAR(-kPi, wrap_radians(3.0 * kPi), 1e-12);
}

TEST(WrapRadians, MinusPiIsCanonical) { EXPECT_EQ(-kPi, wrap_radians(-kPi)); }

TEST(WrapRadians, PlusPiFoldsToMinusPi) { EXPECT_EQ(-kPi, wrap_radians(kPi)); }

TEST(WrapRadians, ResultAlwaysInRange) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> big(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double w = wrap_radians(big(rng));
    EXPECT_GE(w, -kPi);
    EXPECT_LT(w, kPi);
  }
}

TEST(WrapRadians, Idempotent) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> raw(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double once = wrap_radians(raw(rng));
    EXPECT_EQ(once, wrap_radians(once));
  }
}

TEST(WrapRadians, PeriodTwoPi) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> raw(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    const double theta = raw(rng);
    for (int k = -3; k <= 3; ++k) {
      EXPECT_NEAR(wrap_radians(theta), wrap_radians(theta + kTwoPi * k), 1e-12);
    }
  }
}

TEST(WrapRadians, NonFiniteRejected) {
  EXPECT_THROW(wrap_radians(std::numeric_limits<double>::infinity()), Error);
  EXPECT_THROW(wrap_radians(std::numeric_limits<double>::quiet_NaN()), Error);
  try {
    wrap_radians(std::numeric_limits<double>::quiet_NaN());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kInvalidArgument, e.code());
  }
}

TEST(CircularDiff, IdenticalAngles) {
  EXPECT_EQ(0.0, circular_diff(Angle::wrap(0.1), Angle::wrap(0.1)));
}

TEST(CircularDiff, ShortWayAcrossBoundary) {
  EXPECT_NEAR(-0.2, circular_diff(Angle::wrap(kPi - 0.1), Angle::wrap(-kPi + 0.1)),
              1e-12);
}

TEST(CircularDiff, QuarterTurn) {
  EXPECT_NEAR(kPi / 2, circular_diff(Angle::wrap(kPi / 2), Angle::wrap(0.0)), 1e-15);
}

TEST(CircularDiff, AntipodeIsPlusPi) {
  EXPECT_EQ(kPi, circular_diff(Angle::wrap(kPi / 2), Angle::wrap(-kPi / 2)));
}

TEST(CircularDiff, BoundedAndConsistentWithWrap) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> raw(-kPi, kPi);
  for (int i = 0; i < 5000; ++i) {
    const Angle a = Angle::wrap(raw(rng));
    const Angle b = Angle::wrap(raw(rng));
    const double d = circular_diff(a, b);
    EXPECT_LE(std::abs(d), kPi);
    EXPECT_NEAR(a.radians(), wrap_radians(b.radians() + d), 1e-12);
  }
}

TEST(CircularMean, SymmetricPair) {
  EXPECT_NEAR(0.2, circular_mean({Angle::wrap(0.1), Angle::wrap(0.3)}).radians(),
              1e-15);
}

TEST(CircularMean, AcrossWrapBoundary) {
  const Angle mean = circular_mean({Angle::wrap(kPi - 0.1), Angle::wrap(-kPi + 0.1)});
  EXPECT_NEAR(0.0, std::abs(circular_diff(mean, Angle::wrap(-kPi))), 1e-12);
}

TEST(CircularMean, AntipodalInputsDegenerate) {
  try {
    circular_mean({Angle::wrap(0.0), Angle::wrap(kPi)});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kDegenerate, e.code());
  }
}

TEST(CircularMean, EmptyInputRejected) {
  EXPECT_THROW(circular_mean({}), Error);
}

TEST(CircularMean, RotationEquivariant) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> raw(-1.0, 1.0);
  std::uniform_real_distribution<double> shift(-kPi, kPi);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Angle> angles;
    for (int i = 0; i < 5; ++i) {
      angles.push_back(Angle::wrap(raw(rng)));
    }
    const double delta = shift(rng);
    std::vector<Angle> rotated;
    for (const Angle& a : angles) {
      rotated.push_back(Angle::wrap(a.radians() + delta));
    }
    const Angle expected = Angle::wrap(circular_mean(angles).radians() + delta);
    EXPECT_NEAR(0.0, std::abs(circular_diff(circular_mean(rotated), expected)), 1e-9);
  }
}

TEST(AlphaRotyConversion, CenteredObject) {
  EXPECT_NEAR(0.0, alpha_to_roty(Angle::wrap(0.0), {0.0, 10.0}).radians(), 1e-15);
}

TEST(AlphaRotyConversion, DiagonalRay) {
  EXPECT_NEAR(wrap_radians(0.5 + kPi / 4),
              alpha_to_roty(Angle::wrap(0.5), {5.0, 5.0}).radians(), 1e-15);
}

TEST(AlphaRotyConversion, WrapsAcrossBoundary) {
  const Angle roty = alpha_to_roty(Angle::wrap(kPi - 0.1), {5.0, 5.0});
  EXPECT_NEAR(-kPi + (kPi / 4 - 0.1), roty.radians(), 1e-12);
}

TEST(AlphaRotyConversion, InverseDirection) {
  EXPECT_NEAR(0.0, roty_to_alpha(Angle::wrap(kPi / 4), {5.0, 5.0}).radians(), 1e-15);
}

TEST(AlphaRotyConversion, RejectsNonPositiveZ) {
  try {
    alpha_to_roty(Angle::wrap(0.0), {1.0, 0.0});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kInvalidLocation, e.code());
  }
  EXPECT_THROW(roty_to_alpha(Angle::wrap(0.0), {1.0, -2.0}), Error);
}

TEST(AlphaRotyConversion, RoundTripIsIdentity) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> lateral(-40.0, 40.0);
  std::uniform_real_distribution<double> forward(0.5, 90.0);
  for (int i = 0; i < 1000; ++i) {
    const Angle roty = Angle::wrap(angle(rng));
    const ObjectLocation loc{lateral(rng), forward(rng)};
    const Angle back = alpha_to_roty(roty_to_alpha(roty, loc), loc);
    EXPECT_NEAR(0.0, std::abs(circular_diff(back, roty)), 1e-12);
  }
}

TEST(ScalarNormalization, LinearMap) {
  EXPECT_EQ(0.5, normalize_scalar(Angle::wrap(kPi / 2)));
}

TEST(ScalarNormalization, ZeroIsFixedPoint) {
  EXPECT_EQ(0.0, denormalize_scalar(0.0).radians());
}

TEST(ScalarNormalization, OutOfRangeWrapsNotClips) {
  EXPECT_NEAR(0.0, denormalize_scalar(2.0).radians(), 1e-12);
  EXPECT_NEAR(-0.5 * kPi, denormalize_scalar(1.5).radians(), 1e-12);
}

TEST(ScalarNormalization, RoundTrip) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    const Angle theta = Angle::wrap(angle(rng));
    EXPECT_NEAR(theta.radians(), denormalize_scalar(normalize_scalar(theta)).radians(),
                1e-12);
  }
}

}  // namespace
}  // namespace orient
