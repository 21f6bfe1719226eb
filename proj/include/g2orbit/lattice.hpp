/*
 * Copyright 2026 The g2orbit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <vector>

#include "g2orbit/family.hpp"
#include "g2orbit/rootsys.hpp"

namespace g2orbit {

/// Kac coordinates [s0, s1, s2] of a point of F at level M = s0 + 2 s1 + 3 s2.
struct KacPoint {
  int s0 = 0;
  int s1 = 0;
  int s2 = 0;

  /// Throws std::invalid_argument on negative coordinates or a zero level.
  static KacPoint make(int s0, int s1, int s2);

  int level() const { return s0 + 2 * s1 + 3 * s2; }
  RationalPoint point() const;
  Point real_point() const;

  friend constexpr auto operator<=>(const KacPoint&, const KacPoint&) = default;
};

/// Kac coordinates of a rational point of F at the smallest level that
/// represents it. Throws std::domain_error if p is outside F.
KacPoint kac_from_point(const RationalPoint& p);

/// Weight c_s of a grid point in the discrete scalar product: |W| divided
/// by the order of the stabilizer of s.
int c_weight(const KacPoint& s);

/// True if every function of the family vanishes at s (s on a wall the
/// family is antisymmetric across).
bool vanishes_at(Family f, const KacPoint& s);

/// The grid F_M, enumerated lexicographically in (s2, s1).
class Grid {
 public:
  /// Throws std::invalid_argument for M < 1.
  explicit Grid(int M);

  int level() const { return level_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<KacPoint>& points() const { return points_; }
  const std::vector<int>& weights() const { return weights_; }
  std::optional<std::size_t> index_of(const KacPoint& s) const;

 private:
  int level_;
  std::vector<KacPoint> points_;
  std::vector<int> weights_;
};

Grid grid_points(int M);

/// Closed-form number of points in F_M.
std::int64_t grid_size(int M);

struct SpectrumEntry {
  Weight weight;
  /// h such that <X, X>_M = 12 M^2 h.
  Rational norm;
};

/// Dominant weights with nonzero discrete norm on F_M for one family,
/// enumerated lexicographically in (a, b).
struct Spectrum {
  Family family = Family::C;
  int level = 1;
  std::vector<SpectrumEntry> entries;

  std::size_t size() const { return entries.size(); }
  std::optional<std::size_t> index_of(Weight w) const;
};

/// Norm factor h of X_lambda on F_M; zero when X_lambda is not in the
/// spectrum (it then vanishes on the grid or aliases a spectrum weight).
Rational norm_factor(Family f, Weight lambda, int M);

Spectrum spectrum(Family f, int M);

}  // namespace g2orbit
