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

#include "orient/representation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>

#include "orient/error.hpp"

namespace orient {

namespace {

constexpr double kVoteThresholdRadians = kPi / 6.0;  // 30 degrees
constexpr double kSingleBinDegenerateNorm = 1e-9;

double positive_mod_two_pi(double x) {
  double m = std::fmod(x, kTwoPi);
  if (m < 0.0) {
    m += kTwoPi;
  }
  return m;
}

double clip(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

void check_finite(const ReprVector& vec, const char* op) {
  for (double v : vec.values) {
    if (!std::isfinite(v)) {
      throw_error(ErrorCode::kInvalidArgument,
                  std::string(op) + ": non-finite component");
    }
  }
}

void check_dimension(const ReprVector& vec, const char* op) {
  if (vec.values.size() != vec.scheme.dimension()) {
    throw_error(ErrorCode::kInvalidArgument,
                std::string(op) + ": vector length " +
                    std::to_string(vec.values.size()) + " does not match " +
                    vec.scheme.descriptor() + " dimension " +
                    std::to_string(vec.scheme.dimension()));
  }
}

// Indices of the bins whose (widened) half-open interval contains theta.
// Falls back to the nearest center when floating-point boundary wobble
// leaves an angle orphaned.
std::vector<int> containing_bins(const ReprScheme& scheme, Angle theta) {
  std::vector<int> result;
  for (int i = 0; i < scheme.num_bins(); ++i) {
    const BinGeometry bin = scheme.bin(i);
    const double offset = positive_mod_two_pi(theta.radians() - bin.start.radians());
    if (offset < bin.width) {
      result.push_back(i);
    }
  }
  if (result.empty()) {
    int best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < scheme.num_bins(); ++i) {
      const double d = std::abs(circular_diff(theta, scheme.bin(i).center));
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    result.push_back(best);
  }
  return result;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

const char* repr_kind_name(ReprKind kind) {
  switch (kind) {
    case ReprKind::kGlobalScalar:
      return "scalar_global";
    case ReprKind::kLocalScalar:
      return "scalar_local";
    case ReprKind::kSingleBin:
      return "single_bin";
    case ReprKind::kMultibin:
      return "multibin";
    case ReprKind::kConfidenceBins:
      return "conf";
    case ReprKind::kVotingBins:
      return "voting";
    case ReprKind::kTricosine:
      return "tricosine";
  }
  return "unknown";
}

ReprScheme::ReprScheme(ReprKind kind, int num_bins, double overlap_fraction)
    : kind_(kind), num_bins_(num_bins), overlap_fraction_(overlap_fraction) {
  if (!std::isfinite(overlap_fraction) || overlap_fraction < 0.0 ||
      overlap_fraction >= 0.5) {
    throw_error(ErrorCode::kInvalidScheme,
                "overlap fraction must be in [0, 0.5), got " +
                    format_double(overlap_fraction));
  }
  if (overlap_fraction != 0.0 && kind != ReprKind::kMultibin) {
    throw_error(ErrorCode::kInvalidScheme,
                std::string(repr_kind_name(kind)) + " does not support overlap");
  }
  switch (kind) {
    case ReprKind::kGlobalScalar:
    case ReprKind::kLocalScalar:
    case ReprKind::kSingleBin:
      if (num_bins != 1) {
        throw_error(ErrorCode::kInvalidScheme,
                    std::string(repr_kind_name(kind)) + " requires bins=1");
      }
      break;
    case ReprKind::kMultibin:
      if (num_bins < 2) {
        throw_error(ErrorCode::kInvalidScheme, "multibin requires bins >= 2");
      }
      break;
    case ReprKind::kConfidenceBins:
      if (num_bins < 2) {
        throw_error(ErrorCode::kInvalidScheme, "conf requires bins >= 2");
      }
      break;
    case ReprKind::kVotingBins:
      if (num_bins < 3) {
        throw_error(ErrorCode::kInvalidScheme, "voting requires bins >= 3");
      }
      break;
    case ReprKind::kTricosine:
      if (num_bins != 3) {
        throw_error(ErrorCode::kInvalidScheme, "tricosine requires bins=3");
      }
      break;
  }
}

ReprScheme ReprScheme::global_scalar() {
  return ReprScheme(ReprKind::kGlobalScalar, 1, 0.0);
}
ReprScheme ReprScheme::local_scalar() {
  return ReprScheme(ReprKind::kLocalScalar, 1, 0.0);
}
ReprScheme ReprScheme::single_bin() {
  return ReprScheme(ReprKind::kSingleBin, 1, 0.0);
}
ReprScheme ReprScheme::multibin(int num_bins, double overlap_fraction) {
  return ReprScheme(ReprKind::kMultibin, num_bins, overlap_fraction);
}
ReprScheme ReprScheme::confidence_bins(int num_bins) {
  return ReprScheme(ReprKind::kConfidenceBins, num_bins, 0.0);
}
ReprScheme ReprScheme::voting_bins(int num_bins) {
  return ReprScheme(ReprKind::kVotingBins, num_bins, 0.0);
}
ReprScheme ReprScheme::tricosine() {
  return ReprScheme(ReprKind::kTricosine, 3, 0.0);
}

std::size_t ReprScheme::dimension() const {
  switch (kind_) {
    case ReprKind::kGlobalScalar:
    case ReprKind::kLocalScalar:
      return 1;
    case ReprKind::kSingleBin:
      return 2;
    case ReprKind::kTricosine:
      return 3;
    case ReprKind::kMultibin:
      return 3 * static_cast<std::size_t>(num_bins_);
    case ReprKind::kConfidenceBins:
    case ReprKind::kVotingBins:
      return 2 * static_cast<std::size_t>(num_bins_);
  }
  return 0;
}

bool ReprScheme::is_scalar() const {
  return kind_ == ReprKind::kGlobalScalar || kind_ == ReprKind::kLocalScalar;
}

bool ReprScheme::is_binned() const {
  return kind_ == ReprKind::kMultibin || kind_ == ReprKind::kConfidenceBins ||
         kind_ == ReprKind::kVotingBins || kind_ == ReprKind::kTricosine;
}

BinGeometry ReprScheme::bin(int index) const {
  if (!is_binned()) {
    throw_error(ErrorCode::kInvalidScheme,
                std::string(repr_kind_name(kind_)) + " has no bin geometry");
  }
  if (index < 0 || index >= num_bins_) {
    throw_error(ErrorCode::kInvalidArgument,
                "bin index " + std::to_string(index) + " out of range");
  }
  const double nominal_width = kTwoPi / num_bins_;
  // Centers are the multiples of 2*pi/n, listed ascending from -pi, so that
  // 0 is always a bin center.
  const double first_center =
      (num_bins_ % 2 == 0) ? -kPi : -kPi + nominal_width / 2.0;
  const double center = first_center + index * nominal_width;
  const double overlap_arc = overlap_fraction_ * kTwoPi / num_bins_;
  const double width = nominal_width + overlap_arc;

  BinGeometry geometry;
  geometry.index = index;
  geometry.center = Angle::wrap(center);
  geometry.start = Angle::wrap(center - width / 2.0);
  geometry.width = width;
  return geometry;
}

std::string ReprScheme::descriptor() const {
  switch (kind_) {
    case ReprKind::kGlobalScalar:
    case ReprKind::kLocalScalar:
    case ReprKind::kSingleBin:
    case ReprKind::kTricosine:
      return repr_kind_name(kind_);
    case ReprKind::kMultibin:
      return "multibin:bins=" + std::to_string(num_bins_) +
             ",overlap=" + format_double(overlap_fraction_);
    case ReprKind::kConfidenceBins:
    case ReprKind::kVotingBins:
      return std::string(repr_kind_name(kind_)) +
             ":bins=" + std::to_string(num_bins_);
  }
  return "unknown";
}

ReprScheme ReprScheme::parse(const std::string& descriptor) {
  const std::size_t colon = descriptor.find(':');
  const std::string kind_token = descriptor.substr(0, colon);

  std::optional<ReprKind> kind;
  if (kind_token == "scalar_global") kind = ReprKind::kGlobalScalar;
  if (kind_token == "scalar_local") kind = ReprKind::kLocalScalar;
  if (kind_token == "single_bin") kind = ReprKind::kSingleBin;
  if (kind_token == "multibin") kind = ReprKind::kMultibin;
  if (kind_token == "conf") kind = ReprKind::kConfidenceBins;
  if (kind_token == "voting") kind = ReprKind::kVotingBins;
  if (kind_token == "tricosine") kind = ReprKind::kTricosine;
  if (!kind) {
    throw_error(ErrorCode::kInvalidScheme,
                "unknown representation kind '" + kind_token + "'");
  }

  std::optional<int> bins;
  std::optional<double> overlap;
  if (colon != std::string::npos) {
    std::string options = descriptor.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= options.size()) {
      std::size_t comma = options.find(',', pos);
      const std::string item = options.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      const std::size_t eq = item.find('=');
      if (item.empty() || eq == std::string::npos) {
        throw_error(ErrorCode::kInvalidScheme,
                    "expected key=value in scheme descriptor, got '" + item + "'");
      }
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "bins") {
        int parsed = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc() || ptr != value.data() + value.size() || parsed <= 0) {
          throw_error(ErrorCode::kInvalidScheme,
                      "bins must be a positive integer, got '" + value + "'");
        }
        bins = parsed;
      } else if (key == "overlap") {
        double parsed = 0.0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
          throw_error(ErrorCode::kInvalidScheme,
                      "overlap must be a real number, got '" + value + "'");
        }
        overlap = parsed;
      } else {
        throw_error(ErrorCode::kInvalidScheme,
                    "unknown scheme option '" + key + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  int default_bins = 1;
  double default_overlap = 0.0;
  switch (*kind) {
    case ReprKind::kMultibin:
      default_bins = 2;
      default_overlap = 0.1;
      break;
    case ReprKind::kConfidenceBins:
      default_bins = 2;
      break;
    case ReprKind::kVotingBins:
      default_bins = 4;
      break;
    case ReprKind::kTricosine:
      default_bins = 3;
      break;
    default:
      break;
  }
  return ReprScheme(*kind, bins.value_or(default_bins),
                    overlap.value_or(default_overlap));
}

ReprVector encode(const ReprScheme& scheme, Angle theta) {
  std::vector<double> values(scheme.dimension(), 0.0);
  switch (scheme.kind()) {
    case ReprKind::kGlobalScalar:
    case ReprKind::kLocalScalar:
      values[0] = normalize_scalar(theta);
      break;

    case ReprKind::kSingleBin:
      values[0] = std::cos(theta.radians());
      values[1] = std::sin(theta.radians());
      break;

    case ReprKind::kMultibin: {
      const std::vector<int> containing = containing_bins(scheme, theta);
      const double confidence = containing.size() == 2 ? 0.5 : 1.0;
      for (int i : containing) {
        const BinGeometry bin = scheme.bin(i);
        const double offset =
            positive_mod_two_pi(theta.radians() - bin.start.radians());
        values[3 * i + 0] = confidence;
        values[3 * i + 1] = std::cos(offset);
        values[3 * i + 2] = std::sin(offset);
      }
      break;
    }

    case ReprKind::kConfidenceBins: {
      const int i = containing_bins(scheme, theta).front();
      const BinGeometry bin = scheme.bin(i);
      const double half_width = bin.width / 2.0;
      values[2 * i + 0] = 1.0;
      values[2 * i + 1] = clip(circular_diff(theta, bin.center) / half_width, -1.0, 1.0);
      break;
    }

    case ReprKind::kVotingBins:
      for (int i = 0; i < scheme.num_bins(); ++i) {
        const double offset = circular_diff(theta, scheme.bin(i).center);
        values[2 * i + 0] = std::cos(offset);
        values[2 * i + 1] = std::sin(offset);
      }
      break;

    case ReprKind::kTricosine:
      for (int i = 0; i < 3; ++i) {
        values[i] = std::cos(circular_diff(theta, scheme.bin(i).center));
      }
      break;
  }
  return ReprVector{scheme, std::move(values)};
}

namespace {

Angle decode_voting(const ReprVector& vec) {
  const int n = vec.scheme.num_bins();
  std::vector<Angle> candidates;
  candidates.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double cos_off = vec.values[2 * i + 0];
    const double sin_off = vec.values[2 * i + 1];
    candidates.push_back(Angle::wrap(vec.scheme.bin(i).center.radians() +
                                     std::atan2(sin_off, cos_off)));
  }

  // A candidate is voted out when its median absolute difference to the
  // other candidates exceeds 30 degrees while at least one pair among the
  // others still agrees within 30 degrees.
  std::vector<bool> excluded(n, false);
  for (int i = 0; i < n; ++i) {
    std::vector<double> dists;
    dists.reserve(n - 1);
    bool others_agree = false;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      dists.push_back(std::abs(circular_diff(candidates[i], candidates[j])));
      for (int k = j + 1; k < n; ++k) {
        if (k == i) continue;
        if (std::abs(circular_diff(candidates[j], candidates[k])) <=
            kVoteThresholdRadians) {
          others_agree = true;
        }
      }
    }
    std::sort(dists.begin(), dists.end());
    const std::size_t m = dists.size();
    const double median = (m % 2 == 1)
                              ? dists[m / 2]
                              : 0.5 * (dists[m / 2 - 1] + dists[m / 2]);
    excluded[i] = median > kVoteThresholdRadians && others_agree;
  }

  std::vector<Angle> survivors;
  for (int i = 0; i < n; ++i) {
    if (!excluded[i]) survivors.push_back(candidates[i]);
  }
  if (survivors.empty()) {
    survivors = candidates;
  }
  return circular_mean(survivors);
}

Angle decode_tricosine(const ReprVector& vec) {
  double affinity[3];
  double offset[3];
  Angle center[3];
  for (int i = 0; i < 3; ++i) {
    affinity[i] = clip(vec.values[i], -1.0, 1.0);
    offset[i] = std::acos(affinity[i]);
    center[i] = vec.scheme.bin(i).center;
  }

  // Each affinity inverts to two mirror candidates per bin; try all sign
  // assignments and keep the mean that reconstructs the affinities best.
  bool found = false;
  double best_score = std::numeric_limits<double>::infinity();
  Angle best;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<Angle> candidates;
    candidates.reserve(3);
    for (int i = 0; i < 3; ++i) {
      const double sign = (mask >> i) & 1 ? 1.0 : -1.0;
      candidates.push_back(Angle::wrap(center[i].radians() + sign * offset[i]));
    }
    Angle mean;
    try {
      mean = circular_mean(candidates);
    } catch (const Error&) {
      continue;  // antipodal candidate spread; no direction for this mask
    }
    double score = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double r = std::cos(circular_diff(mean, center[i])) - affinity[i];
      score += r * r;
    }
    if (!found || score < best_score ||
        (score == best_score && mean.radians() < best.radians())) {
      found = true;
      best_score = score;
      best = mean;
    }
  }
  if (!found) {
    // Fully symmetric candidate spread (saturated noise); the reconstruction
    // error is flat, so fall back to the affinity hierarchy alone: the
    // argmax bin's own candidate, smaller mirror first.
    int k = 0;
    for (int i = 1; i < 3; ++i) {
      if (affinity[i] > affinity[k]) k = i;
    }
    const Angle minus = Angle::wrap(center[k].radians() - offset[k]);
    const Angle plus = Angle::wrap(center[k].radians() + offset[k]);
    return minus.radians() <= plus.radians() ? minus : plus;
  }
  return best;
}

}  // namespace

Angle decode(const ReprVector& vec) {
  check_dimension(vec, "decode");
  check_finite(vec, "decode");

  switch (vec.scheme.kind()) {
    case ReprKind::kGlobalScalar:
    case ReprKind::kLocalScalar:
      return denormalize_scalar(vec.values[0]);

    case ReprKind::kSingleBin: {
      const double norm = std::hypot(vec.values[0], vec.values[1]);
      if (norm < kSingleBinDegenerateNorm) {
        throw_error(ErrorCode::kDegenerate,
                    "single_bin decode: vector norm below 1e-9");
      }
      return Angle::wrap(std::atan2(vec.values[1], vec.values[0]));
    }

    case ReprKind::kMultibin: {
      int best = 0;
      for (int i = 1; i < vec.scheme.num_bins(); ++i) {
        if (vec.values[3 * i] > vec.values[3 * best]) best = i;
      }
      const double cos_off = vec.values[3 * best + 1];
      const double sin_off = vec.values[3 * best + 2];
      return Angle::wrap(vec.scheme.bin(best).start.radians() +
                         std::atan2(sin_off, cos_off));
    }

    case ReprKind::kConfidenceBins: {
      int best = 0;
      for (int i = 1; i < vec.scheme.num_bins(); ++i) {
        if (vec.values[2 * i] > vec.values[2 * best]) best = i;
      }
      const BinGeometry bin = vec.scheme.bin(best);
      const double u = clip(vec.values[2 * best + 1], -1.0, 1.0);
      return Angle::wrap(bin.center.radians() + u * bin.width / 2.0);
    }

    case ReprKind::kVotingBins:
      return decode_voting(vec);

    case ReprKind::kTricosine:
      return decode_tricosine(vec);
  }
  throw_error(ErrorCode::kInvalidScheme, "decode: unknown representation kind");
}

namespace {

// Scales (values[at], values[at+1]) to unit norm in place.
void unit_scale_pair(std::vector<double>& values, std::size_t at, bool zero_ok,
                     const char* what) {
  const double norm = std::hypot(values[at], values[at + 1]);
  if (norm == 0.0 && zero_ok) {
    return;
  }
  if (norm < kSingleBinDegenerateNorm && !zero_ok) {
    throw_error(ErrorCode::kDegenerate,
                std::string("canonicalize: zero-norm ") + what + " pair");
  }
  if (norm > 0.0) {
    values[at] /= norm;
    values[at + 1] /= norm;
  }
}

}  // namespace

ReprVector canonicalize(const ReprVector& vec) {
  check_dimension(vec, "canonicalize");
  check_finite(vec, "canonicalize");

  ReprVector result = vec;
  switch (vec.scheme.kind()) {
    case ReprKind::kGlobalScalar:
    case ReprKind::kLocalScalar:
      result.values[0] = normalize_scalar(denormalize_scalar(vec.values[0]));
      break;

    case ReprKind::kSingleBin:
      unit_scale_pair(result.values, 0, /*zero_ok=*/false, "single_bin");
      break;

    case ReprKind::kMultibin:
      for (int i = 0; i < vec.scheme.num_bins(); ++i) {
        result.values[3 * i] = clip(result.values[3 * i], 0.0, 1.0);
        // An all-zero offset pair is the encoding of a non-containing bin
        // and stays as-is.
        unit_scale_pair(result.values, 3 * i + 1, /*zero_ok=*/true, "multibin");
      }
      break;

    case ReprKind::kConfidenceBins:
      for (int i = 0; i < vec.scheme.num_bins(); ++i) {
        result.values[2 * i + 0] = clip(result.values[2 * i + 0], 0.0, 1.0);
        result.values[2 * i + 1] = clip(result.values[2 * i + 1], -1.0, 1.0);
      }
      break;

    case ReprKind::kVotingBins:
      for (int i = 0; i < vec.scheme.num_bins(); ++i) {
        unit_scale_pair(result.values, 2 * i, /*zero_ok=*/false, "voting");
      }
      break;

    case ReprKind::kTricosine:
      for (double& v : result.values) {
        v = clip(v, -1.0, 1.0);
      }
      break;
  }
  return result;
}

}  // namespace orient
