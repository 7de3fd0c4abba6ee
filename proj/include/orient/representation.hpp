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

#ifndef ORIENT_REPRESENTATION_HPP_
#define ORIENT_REPRESENTATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "orient/angle.hpp"

namespace orient {

// The orientation representations implemented by this library. Every codec
// maps a canonical angle to a fixed-dimension real vector and back:
//
//   scalar (global/local)   1-D   [theta / pi]
//   single_bin              2-D   [cos theta, sin theta]
//   multibin                3n-D  per bin [confidence, cos off, sin off],
//                                 offsets measured from the bin's start edge
//   confidence_bins         2n-D  per bin [confidence, normalized offset]
//   voting_bins             2n-D  per bin [cos off, sin off], offsets
//                                 measured from the bin's center
//   tricosine               3-D   cosine of the offset to each bin center
enum class ReprKind {
  kGlobalScalar,
  kLocalScalar,
  kSingleBin,
  kMultibin,
  kConfidenceBins,
  kVotingBins,
  kTricosine,
};

const char* repr_kind_name(ReprKind kind);

/// One bin of a binned scheme. Bins of equal nominal width 2*pi/n tile
/// [-pi, pi) with 0 always at a bin center; with overlap each bin is widened
/// symmetrically, so `start` is the widened start edge and `width` the
/// widened width. center == start + width/2 (wrapped) either way.
struct BinGeometry {
  int index = 0;
  Angle start;
  Angle center;
  double width = 0.0;
};

/// Codec descriptor: kind, bin count and overlap fraction. Immutable once
/// constructed; all constructors validate.
class ReprScheme {
 public:
  static ReprScheme global_scalar();
  static ReprScheme local_scalar();
  static ReprScheme single_bin();
  static ReprScheme multibin(int num_bins = 2, double overlap_fraction = 0.1);
  static ReprScheme confidence_bins(int num_bins = 2);
  static ReprScheme voting_bins(int num_bins = 4);
  static ReprScheme tricosine();

  /// Parses the short descriptor grammar `kind[:key=value{,key=value}]`,
  /// e.g. "single_bin", "multibin:bins=2,overlap=0.1", "voting:bins=4".
  /// Keys: bins (positive integer), overlap (multibin only, in [0, 0.5)).
  static ReprScheme parse(const std::string& descriptor);

  ReprKind kind() const { return kind_; }
  int num_bins() const { return num_bins_; }
  double overlap_fraction() const { return overlap_fraction_; }

  /// Vector dimension: scalar 1, single_bin 2, tricosine 3, voting 2n,
  /// multibin 3n, confidence bins 2n.
  std::size_t dimension() const;

  /// Canonical descriptor string, parseable by parse().
  std::string descriptor() const;

  bool is_scalar() const;
  bool is_binned() const;

  /// Geometry of bin `index` (binned kinds only; 0 <= index < num_bins).
  BinGeometry bin(int index) const;

  friend bool operator==(const ReprScheme& a, const ReprScheme& b) {
    return a.kind_ == b.kind_ && a.num_bins_ == b.num_bins_ &&
           a.overlap_fraction_ == b.overlap_fraction_;
  }
  friend bool operator!=(const ReprScheme& a, const ReprScheme& b) {
    return !(a == b);
  }

 private:
  ReprScheme(ReprKind kind, int num_bins, double overlap_fraction);

  ReprKind kind_;
  int num_bins_;
  double overlap_fraction_;
};

/// A representation vector together with the scheme that produced (or is
/// expected to interpret) it.
struct ReprVector {
  ReprScheme scheme;
  std::vector<double> values;
};

/// Encodes a canonical angle under `scheme`. The result is in canonical
/// form (unit pairs, components in range, confidences summing to 1).
ReprVector encode(const ReprScheme& scheme, Angle theta);

/// Recovers the angle from a representation vector. Accepts raw model-like
/// outputs: values may be unnormalized or out of range, as long as they are
/// finite and the length matches the scheme dimension.
///
/// Throws kInvalidArgument for non-finite values or a length mismatch and
/// kDegenerate where no direction can be recovered (e.g. a single_bin
/// vector with norm < 1e-9).
Angle decode(const ReprVector& vec);

/// Projects a raw vector onto the scheme's canonical form: pairs are scaled
/// to unit norm (never clipped, so decode is unchanged), bounded components
/// are clipped and scalars wrapped. Multibin offset triples that are exactly
/// zero (the encoding of a non-containing bin) pass through unchanged.
ReprVector canonicalize(const ReprVector& vec);

}  // namespace orient

#endif  // ORIENT_REPRESENTATION_HPP_
