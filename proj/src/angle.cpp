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

#include "orient/error.hpp"

namespace orient {

double wrap_radians(double raw) {
  if (!std::isfinite(raw)) {
    throw_error(ErrorCode::kInvalidArgument, "wrap: non-finite angle");
  }
  // remainder() is exact and lands in [-pi, pi]; fold +pi onto -pi for the
  // half-open convention.
  double r = std::remainder(raw, kTwoPi);
  if (r >= kPi) {
    r -= kTwoPi;
  }
  return r;
}

double circular_diff(Angle a, Angle b) {
  double d = std::remainder(a.radians() - b.radians(), kTwoPi);
  // This difference lives in (-pi, pi]: antipodal points differ by +pi.
  if (d <= -kPi) {
    d += kTwoPi;
  }
  return d;
}

Angle circular_mean(const std::vector<Angle>& angles) {
  if (angles.empty()) {
    throw_error(ErrorCode::kInvalidArgument, "circular_mean: empty input");
  }
  double sin_sum = 0.0;
  double cos_sum = 0.0;
  for (const Angle& a : angles) {
    sin_sum += std::sin(a.radians());
    cos_sum += std::cos(a.radians());
  }
  const double n = static_cast<double>(angles.size());
  const double mean_sin = sin_sum / n;
  const double mean_cos = cos_sum / n;
  if (std::hypot(mean_sin, mean_cos) <= kDegenerateMeanThreshold) {
    throw_error(ErrorCode::kDegenerate,
                "circular_mean: resultant vector is (numerically) zero");
  }
  return Angle::wrap(std::atan2(mean_sin, mean_cos));
}

namespace {

double ray_angle(const ObjectLocation& loc, const char* op) {
  if (!(loc.z > 0.0)) {
    throw_error(ErrorCode::kInvalidLocation,
                std::string(op) + ": location must have z > 0");
  }
  // Equivalent to atan(x / z) for z > 0, but robust for extreme ratios.
  return std::atan2(loc.x, loc.z);
}

}  // namespace

Angle alpha_to_roty(Angle alpha, const ObjectLocation& loc) {
  return Angle::wrap(alpha.radians() + ray_angle(loc, "alpha_to_roty"));
}

Angle roty_to_alpha(Angle roty, const ObjectLocation& loc) {
  return Angle::wrap(roty.radians() - ray_angle(loc, "roty_to_alpha"));
}

double normalize_scalar(Angle theta) { return theta.radians() / kPi; }

Angle denormalize_scalar(double v) {
  if (!std::isfinite(v)) {
    throw_error(ErrorCode::kInvalidArgument, "denormalize_scalar: non-finite input");
  }
  return Angle::wrap(v * kPi);
}

}  // namespace orient
