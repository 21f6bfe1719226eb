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

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "g2orbit/family.hpp"
#include "g2orbit/rootsys.hpp"

namespace g2orbit {

using BigInt = boost::multiprecision::cpp_int;

/// Value of an orbit function at a point. C and S values are real, S^L and
/// S^S values purely imaginary; real() divides the latter by i.
struct FunctionValue {
  Family family = Family::C;
  std::complex<double> value;
  /// False when the dominant weight sits on a wall antisymmetric for the
  /// family; the value is then exactly zero.
  bool admissible = true;

  double real() const { return is_imaginary_family(family) ? value.imag() : value.real(); }
};

/// Orbit of a dominant weight with the per-term signs of one family,
/// precomputed for repeated evaluation.
struct SignedOrbit {
  Family family = Family::C;
  Weight dominant;
  bool admissible = true;
  std::vector<Weight> weights;
  std::vector<int> signs;
  std::vector<AlphaCoords> alpha;

  std::size_t size() const { return weights.size(); }
  FunctionValue operator()(const Point& p) const;
  double real(const Point& p) const { return (*this)(p).real(); }
};

/// Throws std::invalid_argument if lambda is not dominant.
SignedOrbit signed_orbit(Family f, Weight lambda);

/// Orbit sum of sigma(mu) exp(2 pi i <mu, p>) over the orbit of lambda.
FunctionValue evaluate(Family f, Weight lambda, const Point& p);

/// evaluate(...).real(): the renormalized real value.
double evaluate_real(Family f, Weight lambda, const Point& p);

/// The Weyl character and its two analogues built from the long and short
/// positive roots.
enum class CharVariant { full, long_roots, short_roots };

Family denominator_family(CharVariant v);
Weight denominator_weight(CharVariant v);
std::string to_string(CharVariant v);
/// Accepts "full", "L", "S" (case-insensitive; also "long", "short").
CharVariant parse_char_variant(std::string_view text);

class SingularPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kDefaultCharacterGuard = 1e-12;

/// Ratio S^sigma_{lambda+rho^sigma}(p) / S^sigma_{rho^sigma}(p).
/// Throws SingularPointError when the denominator is at most `guard` in modulus.
double character(CharVariant v, Weight lambda, const Point& p,
                 double guard = kDefaultCharacterGuard);

/// Dimension of the irreducible G2 representation with highest weight lambda.
BigInt dimension(Weight lambda);

/// Walls of F: x1 = 0 (r1), x2 = 0 (r2), 2 x1 + 3 x2 = 1 (affine).
enum class Wall { r1, r2, affine };
enum class Parity { symmetric, antisymmetric };

Parity boundary_parity(Family f, Wall w);

/// Mirror reflection of the wall, acting on points.
Point reflect_across(Wall w, const Point& p);

/// A vector normal to the wall, in omega-check coordinates, with unit
/// Euclidean length.
Point wall_normal(Wall w);

}  // namespace g2orbit
