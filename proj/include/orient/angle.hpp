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

#ifndef ORIENT_ANGLE_HPP_
#define ORIENT_ANGLE_HPP_

#include <vector>

namespace orient {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Minimal resultant-vector length below which a circular mean is considered
// undefined (antipodal or empty mass).
inline constexpr double kDegenerateMeanThreshold = 1e-12;

/// Wraps raw radians into the canonical interval [-pi, pi).
///
/// The interval is half open so that every point of the circle has exactly
/// one representation; +pi maps to -pi. Throws kInvalidArgument for
/// non-finite input.
double wrap_radians(double raw);

/// An orientation value on the unit circle, always held in [-pi, pi).
class Angle {
 public:
  Angle() = default;

  /// Builds an Angle from raw radians, wrapping into [-pi, pi).
  static Angle wrap(double raw_radians) { return Angle(wrap_radians(raw_radians)); }

  double radians() const { return radians_; }

  friend bool operator==(Angle a, Angle b) { return a.radians_ == b.radians_; }
  friend bool operator!=(Angle a, Angle b) { return a.radians_ != b.radians_; }

 private:
  explicit Angle(double wrapped) : radians_(wrapped) {}

  double radians_ = 0.0;
};

/// Signed geodesic difference a - b on the circle, in (-pi, pi].
/// Satisfies wrap(b + result) == a.
double circular_diff(Angle a, Angle b);

/// Resultant-vector circular mean: atan2(mean sin, mean cos).
///
/// Throws kInvalidArgument for an empty list and kDegenerate when the
/// resultant length is <= 1e-12 (e.g. antipodal inputs), where the mean
/// direction is undefined.
Angle circular_mean(const std::vector<Angle>& angles);

/// Object position on the camera ground plane. x is the lateral offset in
/// meters, z the forward distance (z > 0 for anything in front of the
/// camera).
struct ObjectLocation {
  double x = 0.0;
  double z = 0.0;
};

/// Converts a local observation angle to the global yaw:
/// roty = wrap(alpha + arctan(x / z)). Throws kInvalidLocation if z <= 0.
Angle alpha_to_roty(Angle alpha, const ObjectLocation& loc);

/// Inverse of alpha_to_roty: alpha = wrap(roty - arctan(x / z)).
Angle roty_to_alpha(Angle roty, const ObjectLocation& loc);

/// Maps a canonical angle linearly onto [-1, 1): theta / pi.
double normalize_scalar(Angle theta);

/// Inverse of normalize_scalar. Out-of-range inputs are wrapped, not
/// clipped, so the circle topology is preserved: wrap(v * pi).
Angle denormalize_scalar(double v);

}  // namespace orient

#endif  // ORIENT_ANGLE_HPP_
