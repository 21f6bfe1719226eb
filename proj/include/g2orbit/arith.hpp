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

#include <string>
#include <vector>

#include "g2orbit/lattice.hpp"
#include "g2orbit/orbitfn.hpp"

namespace g2orbit {

/// Conjugacy class of an element of finite order, given by coprime Kac
/// coordinates; its order is the Kac level.
struct FiniteOrderElement {
  KacPoint kac;

  /// Throws std::invalid_argument unless gcd(s0, s1, s2) = 1.
  static FiniteOrderElement make(const KacPoint& kac);

  int order() const { return kac.level(); }
  friend constexpr auto operator<=>(const FiniteOrderElement&, const FiniteOrderElement&) = default;
};

/// All elements of order exactly M, in Grid enumeration order.
std::vector<FiniteOrderElement> enumerate_efo(int M);

/// Class of the k-th power: k x folded back into F, expressed at its own
/// (reduced) level. Throws std::invalid_argument for k < 1.
KacPoint power_class(const FiniteOrderElement& e, int k);

/// True if every power coprime to the order lands in the same class.
bool is_rational(const FiniteOrderElement& e);

/// Rational classes of order at most max_order, ordered by order then grid order.
std::vector<FiniteOrderElement> rational_elements(int max_order);

/// Integer values of low C-functions and characters at the rational classes.
struct RationalTable {
  struct Row {
    std::string label;  // "C(1,0)", "chi(1,1)", "chiL(0,1)", ...
    std::vector<long long> values;
  };
  std::vector<FiniteOrderElement> columns;
  std::vector<Row> rows;

  /// Rows are functions, columns classes; the first two lines carry the
  /// order M and the Kac coordinates.
  std::string to_csv() const;
};

/// C_(1,0), C_(0,1), C_(1,1), C_(2,0), C_(0,2), C_(0,3) and the three
/// character variants at (1,0), (0,1), (1,1), evaluated at the 14 rational
/// classes. Characters go through their C expansion, so boundary points are
/// fine. Throws std::logic_error if a value is not an integer within 1e-8.
RationalTable rational_table();

/// Rational points of F with Kac level at most `denominator_bound` where
/// every listed function of the family takes an integer value (after
/// renormalization) within `tol`.
std::vector<RationalPoint> search_integer_points(Family f, const std::vector<Weight>& weights,
                                                 int denominator_bound, double tol = 1e-8);

}  // namespace g2orbit
