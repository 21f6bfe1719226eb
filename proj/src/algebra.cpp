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

#include "g2orbit/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2orbit {
namespace {

bool height_less(Weight u, Weight v) {
  if (height(u) != height(v)) return height(u) < height(v);
  return u < v;
}

std::string weight_text(Weight w) {
  return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

std::string latex_symbol(Family f) {
  switch (f) {
    case Family::C: return "C";
    case Family::S: return "S";
    case Family::SL: return "S^L";
    case Family::SS: return "S^S";
  }
  return "?";
}

std::string char_symbol(CharVariant v) {
  switch (v) {
    case CharVariant::full: return "chi";
    case CharVariant::long_roots: return "chiL";
    case CharVariant::short_roots: return "chiS";
  }
  return "?";
}

std::string char_latex_symbol(CharVariant v) {
  switch (v) {
    case CharVariant::full: return "\\chi";
    case CharVariant::long_roots: return "\\chi^L";
    case CharVariant::short_roots: return "\\chi^S";
  }
  return "?";
}

// Shared printer for integer combinations of labelled terms.
template <typename Label>
std::string format_terms(const OrbitSum::Terms& terms, Label label, bool spaced) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    const bool negative = c < 0;
    const Coefficient magnitude = negative ? Coefficient(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += spaced ? (negative ? " - " : " + ") : (negative ? "-" : "+");
    }
    if (magnitude != 1) out += magnitude.str();
    out += label(w);
    first = false;
  }
  return out;
}

}  // namespace

std::string term_label(Family f, Weight w) { return to_string(f) + weight_text(w); }

Coefficient OrbitSum::coefficient(Weight w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void OrbitSum::add(Weight w, const Coefficient& c) {
  if (!w.dominant()) throw std::invalid_argument("OrbitSum: weight must be dominant");
  if (!is_admissible(family_, w)) {
    throw std::invalid_argument("OrbitSum: " + term_label(family_, w) + " is identically zero");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::complex<double> OrbitSum::evaluate(const Point& p) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [w, c] : terms_) {
    sum += static_cast<double>(c) * g2orbit::evaluate(family_, w, p).value;
  }
  return sum;
}

std::string OrbitSum::to_text() const {
  return format_terms(
      terms_, [&](Weight w) { return term_label(family_, w); }, false);
}

std::string OrbitSum::to_latex() const {
  return format_terms(
      terms_, [&](Weight w) { return latex_symbol(family_) + "_{" + weight_text(w) + "}"; }, true);
}

Family target_family(Family fa, Family fb) {
  return family_from_signs(sigma(fa, Reflection::r1) * sigma(fb, Reflection::r1),
                           sigma(fa, Reflection::r2) * sigma(fb, Reflection::r2));
}

ExponentialBag exponential_bag(Family fa, Weight la, Family fb, Weight lb) {
  const SignedOrbit xa = signed_orbit(fa, la);
  const SignedOrbit xb = signed_orbit(fb, lb);
  ExponentialBag bag;
  for (std::size_t i = 0; i < xa.size(); ++i) {
    for (std::size_t j = 0; j < xb.size(); ++j) {
      Coefficient& slot = bag.terms[xa.weights[i] + xb.weights[j]];
      slot += xa.signs[i] * xb.signs[j];
      ++bag.raw_term_count;
    }
  }
  std::erase_if(bag.terms, [](const auto& kv) { return kv.second == 0; });
  return bag;
}

OrbitSum reduce(const ExponentialBag& bag, Family target) {
  std::map<Weight, Coefficient> collected;
  for (const auto& [mu, c] : bag.terms) {
    const SignedWeight d = dominantize(target, mu);
    if (d.sign == 0) continue;
    collected[d.weight] += d.sign * c;
  }
  OrbitSum out(target);
  for (const auto& [w, total] : collected) {
    if (total == 0) continue;
    const auto orbit_size = static_cast<long>(weyl_orbit(w).size());
    if (total % orbit_size != 0) {
      throw std::logic_error("reduce: bag is not covariant at " + term_label(target, w));
    }
    out.add(w, total / orbit_size);
  }
  return out;
}

OrbitSum expand_product(Family fa, Weight la, Family fb, Weight lb) {
  if (!la.dominant() || !lb.dominant()) {
    throw std::invalid_argument("expand_product: weights must be dominant");
  }
  const Family target = target_family(fa, fb);
  if (!is_admissible(fa, la) || !is_admissible(fb, lb)) return OrbitSum(target);
  return reduce(exponential_bag(fa, la, fb, lb), target);
}

OrbitSum expand_char_in_C(CharVariant v, Weight lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("expand_char_in_C: weight must be dominant");
  const Family f = denominator_family(v);
  const Weight rho = denominator_weight(v);

  // Remaining part of S^sigma_{lambda+rho} still to be matched by
  // S^sigma_rho * sum m_mu C_mu; peel off its highest term each round.
  std::map<Weight, Coefficient> remainder{{lambda + rho, 1}};
  OrbitSum out(Family::C);
  while (!remainder.empty()) {
    const Weight top =
        std::max_element(remainder.begin(), remainder.end(), [](const auto& x, const auto& y) {
          return height_less(x.first, y.first);
        })->first;
    const Coefficient m = remainder.at(top);
    const Weight mu = top - rho;
    if (!mu.dominant()) {
      throw std::logic_error("expand_char_in_C: leading term " + term_label(f, top) +
                             " lies below the denominator weight");
    }
    const OrbitSum step = expand_product(f, rho, Family::C, mu);
    if (step.coefficient(top) != 1) {
      throw std::logic_error("expand_char_in_C: product is not unitriangular at " +
                             term_label(f, top));
    }
    out.add(mu, m);
    for (const auto& [w, c] : step.terms()) {
      Coefficient& slot = remainder[w];
      slot -= m * c;
      if (slot == 0) remainder.erase(w);
    }
  }
  return out;
}

double CharacterSum::evaluate(const Point& p) const {
  double sum = 0.0;
  for (const auto& [w, c] : terms) {
    sum += static_cast<double>(c) * expand_char_in_C(variant, w).evaluate(p).real();
  }
  return sum;
}

std::string CharacterSum::to_text() const {
  return format_terms(
      terms, [&](Weight w) { return char_symbol(variant) + weight_text(w); }, false);
}

std::string CharacterSum::to_latex() const {
  return format_terms(
      terms, [&](Weight w) { return char_latex_symbol(variant) + "_{" + weight_text(w) + "}"; },
      true);
}

std::vector<Weight> dominant_weights_up_to_height(std::int64_t h) {
  std::vector<Weight> out;
  for (std::int64_t a = 0; 5 * a <= h; ++a) {
    for (std::int64_t b = 0; 5 * a + 3 * b <= h; ++b) out.push_back({a, b});
  }
  std::sort(out.begin(), out.end(), height_less);
  return out;
}

CharacterSum CharacterMatrix::c_in_characters(Weight mu) const {
  const auto it = std::find(weights.begin(), weights.end(), mu);
  if (it == weights.end()) throw std::out_of_range("weight is not in the character matrix");
  const auto i = static_cast<std::size_t>(it - weights.begin());
  CharacterSum out{variant, {}};
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (inverse[i][j] != 0) out.terms.emplace(weights[j], inverse[i][j]);
  }
  return out;
}

CharacterMatrix invert_char_matrix(std::vector<Weight> weights, CharVariant v) {
  std::sort(weights.begin(), weights.end(), height_less);
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  const std::size_t n = weights.size();

  CharacterMatrix out;
  out.variant = v;
  out.weights = weights;
  out.multiplicity.assign(n, std::vector<Coefficient>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [mu, c] : expand_char_in_C(v, weights[i]).terms()) {
      const auto it = std::find(weights.begin(), weights.end(), mu);
      if (it == weights.end()) {
        throw std::invalid_argument("invert_char_matrix: set is not downward closed; " +
                                    weight_text(weights[i]) + " needs " + weight_text(mu));
      }
      out.multiplicity[i][static_cast<std::size_t>(it - weights.begin())] = c;
    }
  }

  // Forward substitution: C_i = chi_i - sum_{j<i} m_ij C_j.
  out.inverse.assign(n, std::vector<Coefficient>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    out.inverse[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      const Coefficient& m = out.multiplicity[i][j];
      if (m == 0) continue;
      for (std::size_t k = 0; k <= j; ++k) out.inverse[i][k] -= m * out.inverse[j][k];
    }
  }
  return out;
}

OrbitSum Recurrence::lower() const {
  OrbitSum out = product;
  if (!out.empty()) out.add(leading, -leading_coefficient);
  return out;
}

std::string Recurrence::to_text() const {
  return term_label(generator_family, generator) + "*" + term_label(operand_family, operand) +
         " = " + product.to_text();
}

Recurrence recurrence(Family generator_family, Weight generator, Family operand_family,
                      Weight operand) {
  if (generator != Weight{0, 0} && generator != Weight{1, 0} && generator != Weight{0, 1}) {
    throw std::invalid_argument("recurrence: generator must be (0,0), (1,0) or (0,1)");
  }
  Recurrence r;
  r.generator_family = generator_family;
  r.generator = generator;
  r.operand_family = operand_family;
  r.operand = operand;
  r.product = expand_product(generator_family, generator, operand_family, operand);
  r.leading_coefficient = 0;
  for (const auto& [w, c] : r.product.terms()) {
    if (r.leading_coefficient == 0 || height_less(r.leading, w)) {
      r.leading = w;
      r.leading_coefficient = c;
    }
  }
  return r;
}

}  // namespace g2orbit
