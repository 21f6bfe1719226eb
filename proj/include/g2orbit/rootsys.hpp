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

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/rational.hpp>

#include "g2orbit/family.hpp"

namespace g2orbit {

using Rational = boost::rational<std::int64_t>;

/// Weight in the basis of fundamental weights (omega-basis).
struct Weight {
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr bool dominant() const { return a >= 0 && b >= 0; }

  friend constexpr Weight operator+(Weight u, Weight v) { return {u.a + v.a, u.b + v.b}; }
  friend constexpr Weight operator-(Weight u, Weight v) { return {u.a - v.a, u.b - v.b}; }
  friend constexpr Weight operator-(Weight u) { return {-u.a, -u.b}; }
  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    return std::hash<std::int64_t>{}(w.a * 1000003 + w.b);
  }
};

/// Half sums of the positive roots, positive long roots and positive short roots.
inline constexpr Weight kRho{1, 1};
inline constexpr Weight kRhoLong{1, 0};
inline constexpr Weight kRhoShort{0, 1};

/// Coordinates in the basis of simple roots.
struct AlphaCoords {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  friend constexpr auto operator<=>(const AlphaCoords&, const AlphaCoords&) = default;
};

/// Point of the torus in the basis of fundamental co-weights (omega-check basis).
template <typename T>
struct BasicPoint {
  T x1{};
  T x2{};
  friend constexpr bool operator==(const BasicPoint&, const BasicPoint&) = default;
};

using Point = BasicPoint<double>;
using RationalPoint = BasicPoint<Rational>;

Point to_real(const RationalPoint& p);

/// Weight with an accumulated sign; sign 0 marks a weight that lands on a
/// wall antisymmetric for the family it was dominantized under.
struct SignedWeight {
  Weight weight;
  int sign = 1;
  friend constexpr bool operator==(const SignedWeight&, const SignedWeight&) = default;
};

AlphaCoords omega_to_alpha(Weight w);
Weight alpha_to_omega(AlphaCoords c);

/// Sum of alpha-coordinates; strictly decreases along the dominance order.
constexpr std::int64_t height(Weight w) { return 5 * w.a + 3 * w.b; }

double pairing(Weight w, const Point& p);
Rational pairing(Weight w, const RationalPoint& p);

Weight reflect(Reflection r, Weight w);

template <typename T>
BasicPoint<T> reflect(Reflection r, const BasicPoint<T>& p) {
  if (r == Reflection::r1) return {-p.x1, p.x1 + p.x2};
  return {p.x1 + 3 * p.x2, -p.x2};
}

/// Reflection in the affine mirror 2*x1 + 3*x2 = 1 (highest root).
template <typename T>
BasicPoint<T> affine_reflect(const BasicPoint<T>& p) {
  return {T(1) - p.x1 - 3 * p.x2, p.x2};
}

bool in_fundamental_domain(const RationalPoint& p);
bool in_fundamental_domain(const Point& p, double tol = 0.0);

/// All distinct points of the Weyl orbit of w, starting with w itself.
std::vector<Weight> weyl_orbit(Weight w);

/// Sign sigma(mu) carried by mu in the orbit sum of the dominant weight lambda.
/// Throws std::invalid_argument if lambda is not dominant and
/// std::domain_error if mu is not in its orbit.
int orbit_sign(Family f, Weight mu, Weight lambda);

/// Dominant representative of w with the product of sigma over the
/// reflections used; r1 is always tried before r2.
SignedWeight dominantize(Family f, Weight w);

/// True unless the dominant weight lies on a wall whose reflection has sign -1
/// for the family; inadmissible weights give the identically-zero function.
bool is_admissible(Family f, Weight dominant);

/// Representative in F of the affine Weyl orbit of p.
Point fold_to_F(const Point& p);
RationalPoint fold_to_F(const RationalPoint& p);

/// Gram matrix of the co-weight basis, used for Euclidean lengths and normals.
inline constexpr double kCoweightGram[2][2] = {{2.0, 3.0}, {3.0, 6.0}};

}  // namespace g2orbit
