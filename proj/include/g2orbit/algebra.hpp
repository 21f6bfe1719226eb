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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "g2orbit/orbitfn.hpp"

namespace g2orbit {

using Coefficient = BigInt;

/// Integer combination of orbit functions of one family, keyed by dominant
/// weight. Zero coefficients are never stored and every key is admissible
/// for the family.
class OrbitSum {
 public:
  /// Lexicographically descending in (a, b); this is also the print order.
  using Terms = std::map<Weight, Coefficient, std::greater<>>;

  explicit OrbitSum(Family family = Family::C) : family_(family) {}

  Family family() const { return family_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(Weight w) const;

  /// Adds c X_w. Throws std::invalid_argument if w is not dominant or not
  /// admissible for the family.
  void add(Weight w, const Coefficient& c);

  /// Sum of c X_w(p), with the complex (not renormalized) basis.
  std::complex<double> evaluate(const Point& p) const;

  /// "C(2,0)+2C(1,0)-C(0,3)"; "0" for the empty sum.
  std::string to_text() const;
  /// "C_{(2,0)} + 2C_{(1,0)} - C_{(0,3)}"
  std::string to_latex() const;

  friend bool operator==(const OrbitSum&, const OrbitSum&) = default;

 private:
  Family family_;
  Terms terms_;
};

/// Signed multiset of exponentials e^{2 pi i <mu, x>} from a product of two
/// orbit sums, before any reduction.
struct ExponentialBag {
  std::map<Weight, Coefficient> terms;
  /// Number of exponential terms multiplied out (|orbit A| |orbit B|).
  std::size_t raw_term_count = 0;
};

/// Family of every term in a product: componentwise product of signs.
Family target_family(Family fa, Family fb);

ExponentialBag exponential_bag(Family fa, Weight la, Family fb, Weight lb);

/// Collects a W-covariant bag into orbit sums of `target`. Throws
/// std::logic_error if the bag is not covariant under the family's signs.
OrbitSum reduce(const ExponentialBag& bag, Family target);

/// Decomposes X_la * Y_lb into orbit functions of target_family(fa, fb).
/// Inadmissible inputs give the zero sum; non-dominant ones throw
/// std::invalid_argument.
OrbitSum expand_product(Family fa, Weight la, Family fb, Weight lb);

/// Coefficients m^sigma_{lambda, mu} of the character (or its long/short
/// analogue) in the C basis, by a unitriangular solve against products of
/// the denominator function with C_mu.
OrbitSum expand_char_in_C(CharVariant v, Weight lambda);

/// Integer combination of characters chi^sigma_lambda.
struct CharacterSum {
  CharVariant variant = CharVariant::full;
  OrbitSum::Terms terms;

  /// Evaluated through the C expansion of each character, so it is defined
  /// on the boundary of F too.
  double evaluate(const Point& p) const;
  std::string to_text() const;
  std::string to_latex() const;
};

/// Dominant weights with height 5a + 3b <= h, ascending by (height, a, b).
std::vector<Weight> dominant_weights_up_to_height(std::int64_t h);

/// Multiplicity matrix of a set of characters and its exact inverse.
struct CharacterMatrix {
  CharVariant variant = CharVariant::full;
  /// Ascending by (height, a, b); the matrices are lower unitriangular in this order.
  std::vector<Weight> weights;
  /// multiplicity[i][j]: coefficient of C_{weights[j]} in chi_{weights[i]}.
  std::vector<std::vector<Coefficient>> multiplicity;
  /// inverse[i][j]: coefficient of chi_{weights[j]} in C_{weights[i]}.
  std::vector<std::vector<Coefficient>> inverse;

  /// C_mu as a combination of characters. Throws std::out_of_range if mu
  /// is not in the set.
  CharacterSum c_in_characters(Weight mu) const;
};

/// Throws std::invalid_argument unless the set is closed under taking the
/// weights that occur in each member's character expansion.
CharacterMatrix invert_char_matrix(std::vector<Weight> weights,
                                   CharVariant v = CharVariant::full);

/// Product of a low generator X_g with Y_lambda, arranged so the highest new
/// function can be expressed through lower ones.
struct Recurrence {
  Family generator_family = Family::C;
  Weight generator;
  Family operand_family = Family::C;
  Weight operand;
  OrbitSum product;
  /// Highest term of the product by (height, a, b); meaningless if empty.
  Weight leading;
  Coefficient leading_coefficient;

  /// product without its leading term.
  OrbitSum lower() const;
  /// "C(1,0)*C(0,1) = C(1,1)+2C(0,2)+2C(0,1)"
  std::string to_text() const;
};

/// The generator must be (0,0), (1,0) or (0,1); throws std::invalid_argument otherwise.
Recurrence recurrence(Family generator_family, Weight generator, Family operand_family,
                      Weight operand);

std::string term_label(Family f, Weight w);

}  // namespace g2orbit
